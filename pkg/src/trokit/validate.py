"""Constraint validation with a severity-graded report.

A fixed rule catalog, graded ERROR / WARN / INFO, runs over the graph
after subclass inference. Problems become report entries, never
exceptions, so one pass surfaces everything at once:

  ERROR  DISJOINT-CLASH    node typed into two disjoint classes
  ERROR  MISSING-REQUIRED  instance lacks a compulsory property
  ERROR  BAD-RANGE         property value outside its declared range
  ERROR  BAD-DATE          xsd:date literal is not a calendar date
  ERROR  INTERVAL-ORDER    end date precedes start date
  WARN   UNKNOWN-TERM      vocabulary-namespace IRI not in the registry
  WARN   NO-LABEL          declared class/property without rdfs:label
  INFO   NO-PROVENANCE     ontology header missing provenance fields
  INFO   NO-VERSION        ontology header missing a version marker

The two INFO rules fire only when the graph declares an ontology
header node at all.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import IntEnum

from .namespaces import DC, DCTERMS, OWL, RDFS, TRO
from .rdf_core import RDF_TYPE, XSD_DATE, BlankNode, Graph, Iri, Literal, Term, Triple
from .util import parse_iso_date
from .vocab import TermKind, Vocabulary, subclass_closure

_PROVENANCE_PROPS = (DC.contributor, DCTERMS.created, DCTERMS.modified, DC.date)
_DECLARED_KINDS = (OWL.Class, OWL.ObjectProperty, OWL.DatatypeProperty, OWL.AnnotationProperty)


class Severity(IntEnum):
    INFO = 10
    WARN = 20
    ERROR = 30

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class ReportEntry:
    severity: Severity
    rule_id: str
    focus: Term
    message: str


@dataclass(frozen=True)
class Report:
    entries: tuple[ReportEntry, ...]

    @property
    def counts(self) -> dict[str, int]:
        out = {"error": 0, "warn": 0, "info": 0}
        for entry in self.entries:
            out[str(entry.severity).lower()] += 1
        return out

    def max_severity(self) -> Severity | None:
        return max((e.severity for e in self.entries), default=None)

    def to_text(self) -> str:
        return "\n".join(
            f"{e.severity} {e.rule_id} {e.focus.n3()} {e.message}" for e in self.entries
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "entries": [
                    {
                        "severity": str(e.severity),
                        "ruleId": e.rule_id,
                        "focus": e.focus.n3(),
                        "message": e.message,
                    }
                    for e in self.entries
                ],
                "counts": self.counts,
            },
            indent=2,
        )


def infer_types(graph: Graph, vocab: Vocabulary) -> Graph:
    """A copy of the graph with superclass typings added.

    Closures are precomputed per class, so one pass reaches the
    fixpoint. Typings with classes outside the vocabulary are left
    as they are.
    """
    supertypes = {
        term.iri: subclass_closure(vocab, term.iri) - {term.iri}
        for term in vocab.terms.values()
        if term.kind == TermKind.CLASS
    }
    out = graph.copy()
    for triple in graph.match(None, RDF_TYPE, None):
        for sup in supertypes.get(triple.object, ()):
            out.insert(Triple(triple.subject, RDF_TYPE, sup))
    return out


def _types_by_node(graph: Graph) -> dict[Iri | BlankNode, set[Iri]]:
    nodes: dict[Iri | BlankNode, set[Iri]] = {}
    for triple in graph.match(None, RDF_TYPE, None):
        if isinstance(triple.object, Iri):
            nodes.setdefault(triple.subject, set()).add(triple.object)
    return nodes


def check(graph: Graph, vocab: Vocabulary) -> Report:
    """Run the full rule catalog; deterministic entry order."""
    g = infer_types(graph, vocab)
    types = _types_by_node(g)
    entries: list[ReportEntry] = []

    def report(severity: Severity, rule: str, focus: Term, message: str) -> None:
        entries.append(ReportEntry(severity, rule, focus, message))

    for constraint in vocab.disjointness_sets():
        for node, node_types in types.items():
            clash = node_types & constraint.classes
            if len(clash) >= 2:
                names = ", ".join(sorted(c.n3() for c in clash))
                report(
                    Severity.ERROR,
                    "DISJOINT-CLASH",
                    node,
                    f"typed as {names}, which are declared disjoint",
                )

    for required in vocab.required_properties():
        for node, node_types in types.items():
            if required.on_class in node_types and not g.match(node, required.prop, None):
                report(
                    Severity.ERROR,
                    "MISSING-REQUIRED",
                    node,
                    f"instance of {required.on_class.n3()} lacks required {required.prop.n3()}",
                )

    for prange in vocab.property_ranges():
        for triple in g.match(None, prange.prop, None):
            obj = triple.object
            if prange.range_kind == "datatype":
                if not isinstance(obj, Literal) or obj.datatype != prange.range:
                    report(
                        Severity.ERROR,
                        "BAD-RANGE",
                        triple.subject,
                        f"value of {prange.prop.n3()} is not a {prange.range.n3()} literal",
                    )
            else:
                if isinstance(obj, Literal):
                    report(
                        Severity.ERROR,
                        "BAD-RANGE",
                        triple.subject,
                        f"value of {prange.prop.n3()} is a literal, expected a {prange.range.n3()}",
                    )
                elif obj in types and prange.range not in types[obj]:
                    report(
                        Severity.ERROR,
                        "BAD-RANGE",
                        triple.subject,
                        f"value of {prange.prop.n3()} is not typed {prange.range.n3()}",
                    )

    for triple in g.triples():
        obj = triple.object
        if isinstance(obj, Literal) and obj.datatype == XSD_DATE and parse_iso_date(obj.lexical) is None:
            report(
                Severity.ERROR,
                "BAD-DATE",
                triple.subject,
                f"{triple.predicate.n3()} value {obj.lexical!r} is not a YYYY-MM-DD date",
            )

    for node in g.subjects(TRO.startDate, None):
        starts = _date_values(g, node, TRO.startDate)
        ends = _date_values(g, node, TRO.endDate)
        if any(end < start for start in starts for end in ends):
            report(
                Severity.ERROR,
                "INTERVAL-ORDER",
                node,
                "end date precedes start date",
            )

    unknown: set[Iri] = set()
    for triple in g.triples():
        if _unknown_tro_term(triple.predicate, vocab):
            unknown.add(triple.predicate)
        if (
            triple.predicate == RDF_TYPE
            and isinstance(triple.object, Iri)
            and _unknown_tro_term(triple.object, vocab)
        ):
            unknown.add(triple.object)
    for iri in unknown:
        report(Severity.WARN, "UNKNOWN-TERM", iri, "not defined by the vocabulary")

    for node, node_types in types.items():
        if node_types.intersection(_DECLARED_KINDS) and not g.match(node, RDFS.label, None):
            report(Severity.WARN, "NO-LABEL", node, "declared term has no rdfs:label")

    for node in g.subjects(RDF_TYPE, OWL.Ontology):
        missing = [p for p in _PROVENANCE_PROPS if not g.match(node, p, None)]
        if missing:
            names = ", ".join(p.n3() for p in missing)
            report(Severity.INFO, "NO-PROVENANCE", node, f"header lacks {names}")
        if not g.match(node, OWL.versionInfo, None):
            report(Severity.INFO, "NO-VERSION", node, "header lacks owl:versionInfo")

    entries.sort(key=lambda e: (e.rule_id, e.focus.n3(), e.message))
    return Report(tuple(entries))


def _date_values(graph: Graph, node: Iri | BlankNode, prop: Iri):
    values = []
    for obj in graph.objects(node, prop):
        if isinstance(obj, Literal) and obj.datatype == XSD_DATE:
            parsed = parse_iso_date(obj.lexical)
            if parsed is not None:
                values.append(parsed)
    return values


def _unknown_tro_term(iri: Iri, vocab: Vocabulary) -> bool:
    return iri.value.startswith(TRO.base) and iri not in vocab.terms
