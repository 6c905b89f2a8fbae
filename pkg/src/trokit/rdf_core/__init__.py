"""Minimal RDF machinery: terms, an indexed graph, Turtle I/O."""

from .graph import Graph
from .model import (
    RDF_LANG_STRING,
    RDF_TYPE,
    XSD_ANY_URI,
    XSD_DATE,
    XSD_DECIMAL,
    XSD_INTEGER,
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
    Triple,
)
from .ntriples import canonical_ntriples
from .turtle import ParseError, parse_turtle, serialize_turtle

__all__ = [
    "BlankNode",
    "Graph",
    "Iri",
    "Literal",
    "ParseError",
    "RDF_LANG_STRING",
    "RDF_TYPE",
    "Term",
    "Triple",
    "XSD_ANY_URI",
    "XSD_DATE",
    "XSD_DECIMAL",
    "XSD_INTEGER",
    "XSD_STRING",
    "canonical_ntriples",
    "parse_turtle",
    "serialize_turtle",
]
