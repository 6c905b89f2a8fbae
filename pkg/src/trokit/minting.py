"""Deterministic IRI construction.

Identical real-world facts must always land on identical graph nodes,
so every IRI here is a pure function of its inputs: names are folded
to ASCII slugs, role IRIs concatenate their five defining components,
and registry identifiers are percent-encoded verbatim.

Slugs never contain '_', which keeps the '_'-separated components of a
role IRI machine-splittable.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from datetime import date
from urllib.parse import quote

from .rdf_core import Iri

ENTITY_KINDS = ("person", "org", "contract", "evidence")

_SLUG_RE = re.compile(r"^[a-z0-9]+(-[a-z0-9]+)*$")
_NON_ALNUM_RE = re.compile(r"[^a-z0-9]+")


class EmptySlugError(ValueError):
    """Raised when nothing alphanumeric survives name folding."""


class InvalidIntervalError(ValueError):
    """Raised when an end date precedes its start date."""


@dataclass(frozen=True, slots=True)
class MintConfig:
    """Where minted IRIs live. The base must end with '/'."""

    base: Iri = Iri("http://ehu.eus/tro/data/")

    def __post_init__(self) -> None:
        if not self.base.value.endswith("/"):
            raise ValueError(f"mint base must end with '/': {self.base}")


def normalize_name(raw: str) -> str:
    """Fold a name to a slug: [a-z0-9]+(-[a-z0-9]+)*.

    Compatibility-decompose, drop combining marks, lowercase, then
    collapse every run of other characters into one hyphen.
    Raises EmptySlugError when nothing survives.
    """
    decomposed = unicodedata.normalize("NFKD", raw)
    stripped = "".join(ch for ch in decomposed if not unicodedata.combining(ch))
    slug = _NON_ALNUM_RE.sub("-", stripped.lower()).strip("-")
    if not slug:
        raise EmptySlugError(f"no alphanumeric content in {raw!r}")
    assert _SLUG_RE.match(slug)
    return slug


def mint_role_iri(
    cfg: MintConfig,
    person: str,
    role_type: str,
    start: date,
    end: date | None,
    org: str,
) -> Iri:
    """IRI for one person-role-time-organization fact.

    Open-ended roles use the literal component "ongoing" in the END
    slot; "ongoing" is not a valid ISO date, so no collision is
    possible.
    """
    if end is not None and end < start:
        raise InvalidIntervalError(f"end {end.isoformat()} precedes start {start.isoformat()}")
    components = (
        normalize_name(person),
        normalize_name(role_type),
        start.isoformat(),
        end.isoformat() if end is not None else "ongoing",
        normalize_name(org),
    )
    return Iri(cfg.base.value + "role/" + "_".join(components))


def mint_entity_iri(cfg: MintConfig, kind: str, key: str) -> Iri:
    """IRI for a person, org, contract, or evidence node.

    Contract keys are registry identifiers and stay verbatim
    (percent-encoded); the other kinds are slugged names.
    """
    if kind not in ENTITY_KINDS:
        raise ValueError(f"unknown entity kind {kind!r}; expected one of {ENTITY_KINDS}")
    if kind == "contract":
        encoded = quote(key, safe="")
        if not encoded:
            raise EmptySlugError("empty contract identifier")
    else:
        encoded = normalize_name(key)
    return Iri(cfg.base.value + kind + "/" + encoded)
