"""Namespace helpers and the vocabularies this package speaks.

``TRO.Role`` and ``TRO["Role"]`` both mint the full IRI; attribute
access keeps call sites readable, item access covers names that are
not Python identifiers.
"""

from __future__ import annotations

from .rdf_core import Iri


class Namespace:
    """A factory for IRIs sharing a common base."""

    __slots__ = ("_base",)

    def __init__(self, base: str) -> None:
        self._base = base

    @property
    def base(self) -> str:
        return self._base

    def iri(self) -> Iri:
        return Iri(self._base)

    def __getitem__(self, name: str) -> Iri:
        return Iri(self._base + name)

    def __getattr__(self, name: str) -> Iri:
        if name.startswith("_"):
            raise AttributeError(name)
        return Iri(self._base + name)

    def __repr__(self) -> str:
        return f"Namespace({self._base!r})"


RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
OWL = Namespace("http://www.w3.org/2002/07/owl#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
DCTERMS = Namespace("http://purl.org/dc/terms/")
DC = Namespace("http://purl.org/dc/elements/1.1/")
VANN = Namespace("http://purl.org/vocab/vann/")
TIME = Namespace("http://www.w3.org/2006/time#")
DBO = Namespace("http://dbpedia.org/ontology/")
TRO = Namespace("http://ehu.eus/tro#")
EPO = Namespace("http://data.europa.eu/a4g/ontology#")
GIST = Namespace("https://ontologies.semanticarts.com/gist/")
SCHEMA = Namespace("http://schema.org/")
GR = Namespace("http://purl.org/goodrelations/v1#")

_DEFAULT = {
    "rdf": RDF,
    "rdfs": RDFS,
    "owl": OWL,
    "xsd": XSD,
    "dcterms": DCTERMS,
    "dc": DC,
    "vann": VANN,
    "time": TIME,
    "dbo": DBO,
    "tro": TRO,
    "epo": EPO,
    "gist": GIST,
    "schema": SCHEMA,
    "gr": GR,
}


def default_prefixes() -> dict[str, Iri]:
    """A fresh prefix map for the namespaces above."""
    return {prefix: ns.iri() for prefix, ns in _DEFAULT.items()}
