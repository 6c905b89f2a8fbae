"""Canonical N-Triples output.

One line per triple, sorted by UTF-8 byte order, so two graphs are
equal exactly when their canonical forms are byte-identical. Blank
nodes have no stable canonical name and are rejected.
"""

from __future__ import annotations

from .graph import Graph
from .model import BlankNode


def canonical_ntriples(graph: Graph) -> str:
    """The graph as sorted N-Triples; '' for an empty graph.

    Raises ValueError if the graph contains a blank node.
    """
    lines: list[str] = []
    for triple in graph.triples():
        if isinstance(triple.subject, BlankNode) or isinstance(triple.object, BlankNode):
            raise ValueError(
                "graph contains blank nodes, which have no canonical N-Triples form"
            )
        lines.append(triple.n3())
    if not lines:
        return ""
    lines.sort(key=lambda line: line.encode("utf-8"))
    return "\n".join(lines) + "\n"
