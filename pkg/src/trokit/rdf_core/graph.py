"""An in-memory triple store with SPO / POS / OSP indexes.

Every match pattern is answered from the index whose bound positions
come first, so lookups never scan the full triple set. All query
results come back in a deterministic order (sorted by the canonical
form of subject, predicate, object).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .model import BlankNode, Iri, Literal, Term, Triple


class Graph:
    """A set of triples plus a prefix map used only for serialization."""

    def __init__(self, prefixes: dict[str, Iri] | None = None) -> None:
        self._spo: dict[Iri | BlankNode, dict[Iri, set[Term]]] = {}
        self._pos: dict[Iri, dict[Term, set[Iri | BlankNode]]] = {}
        self._osp: dict[Term, dict[Iri | BlankNode, set[Iri]]] = {}
        self._size = 0
        self.prefixes: dict[str, Iri] = dict(prefixes) if prefixes else {}

    def __len__(self) -> int:
        return self._size

    def __contains__(self, triple: Triple) -> bool:
        objs = self._spo.get(triple.subject, {}).get(triple.predicate)
        return objs is not None and triple.object in objs

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self.triples(), key=Triple.sort_key))

    def bind(self, prefix: str, namespace: Iri) -> None:
        self.prefixes[prefix] = namespace

    def insert(self, triple: Triple) -> bool:
        """Add a triple; return False if it was already present."""
        if triple in self:
            return False
        self._spo.setdefault(triple.subject, {}).setdefault(triple.predicate, set()).add(triple.object)
        self._pos.setdefault(triple.predicate, {}).setdefault(triple.object, set()).add(triple.subject)
        self._osp.setdefault(triple.object, {}).setdefault(triple.subject, set()).add(triple.predicate)
        self._size += 1
        return True

    def remove(self, triple: Triple) -> bool:
        """Remove a triple; return False if it was not present."""
        if triple not in self:
            return False
        s, p, o = triple.subject, triple.predicate, triple.object
        self._discard(self._spo, s, p, o)
        self._discard(self._pos, p, o, s)
        self._discard(self._osp, o, s, p)
        self._size -= 1
        return True

    @staticmethod
    def _discard(index: dict, a, b, c) -> None:
        inner = index[a]
        leaf = inner[b]
        leaf.discard(c)
        if not leaf:
            del inner[b]
            if not inner:
                del index[a]

    def update(self, triples: Iterable[Triple]) -> int:
        """Insert many triples; return how many were new."""
        return sum(self.insert(t) for t in triples)

    def copy(self) -> "Graph":
        out = Graph(self.prefixes)
        for t in self.triples():
            out.insert(t)
        return out

    def triples(self) -> set[Triple]:
        """A fresh set of all triples (mutating it does not touch the graph)."""
        return {
            Triple(s, p, o)
            for s, po in self._spo.items()
            for p, objs in po.items()
            for o in objs
        }

    def match(
        self,
        subject: Iri | BlankNode | None = None,
        predicate: Iri | None = None,
        object: Term | None = None,
    ) -> list[Triple]:
        """All triples matching the pattern; None is a wildcard.

        The result is a list sorted by the canonical forms of
        (subject, predicate, object), so equal graphs always answer
        equal patterns identically.
        """
        s, p, o = subject, predicate, object
        if s is not None and p is not None and o is not None:
            t = Triple(s, p, o)
            return [t] if t in self else []
        if s is not None and p is not None:
            found = [Triple(s, p, obj) for obj in self._spo.get(s, {}).get(p, ())]
        elif s is not None and o is not None:
            found = [Triple(s, pred, o) for pred in self._osp.get(o, {}).get(s, ())]
        elif p is not None and o is not None:
            found = [Triple(subj, p, o) for subj in self._pos.get(p, {}).get(o, ())]
        elif s is not None:
            found = [
                Triple(s, pred, obj)
                for pred, objs in self._spo.get(s, {}).items()
                for obj in objs
            ]
        elif p is not None:
            found = [
                Triple(subj, p, obj)
                for obj, subjs in self._pos.get(p, {}).items()
                for subj in subjs
            ]
        elif o is not None:
            found = [
                Triple(subj, pred, o)
                for subj, preds in self._osp.get(o, {}).items()
                for pred in preds
            ]
        else:
            found = list(self.triples())
        found.sort(key=Triple.sort_key)
        return found

    def subjects(self, predicate: Iri | None = None, object: Term | None = None) -> list[Iri | BlankNode]:
        """Distinct subjects of triples matching the pattern, sorted."""
        seen = {t.subject for t in self.match(None, predicate, object)}
        return sorted(seen, key=lambda term: term.n3())

    def objects(self, subject: Iri | BlankNode | None = None, predicate: Iri | None = None) -> list[Term]:
        """Distinct objects of triples matching the pattern, sorted."""
        seen = {t.object for t in self.match(subject, predicate, None)}
        return sorted(seen, key=lambda term: term.n3())

    def value(self, subject: Iri | BlankNode, predicate: Iri) -> Term | None:
        """The single object of (subject, predicate), or None.

        Returns None both when absent and when ambiguous; callers that
        care about the difference should use objects().
        """
        objs = self.objects(subject, predicate)
        return objs[0] if len(objs) == 1 else None


__all__ = ["Graph", "BlankNode", "Iri", "Literal", "Term", "Triple"]
