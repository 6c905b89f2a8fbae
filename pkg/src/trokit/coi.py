"""Candidate conflict-of-interest detection.

Two fixed temporal co-occurrence patterns over the graph:

  AWARD-TO-LINKED-ORG  a contract is awarded, during someone's role in
                       the awarding body, to an organization that
                       person owns or is affiliated with.
  DUAL-ROLE            one person holds overlapping roles in two
                       organizations that have a contract between them
                       dated inside the overlap.

Findings are candidates, pointers for human review, never assessments.
Every finding carries the evidence nodes backing its roles and
contracts. Malformed nodes (unparseable or ambiguous dates, roles with
no evidence) are skipped, not reported; that is the validator's job.

Intervals are closed; a missing end date means the role is ongoing and
the interval extends forever.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import date
from itertools import combinations

from .namespaces import EPO, TRO
from .rdf_core import XSD_DATE, Graph, Iri, Literal
from .util import parse_iso_date

AWARD_TO_LINKED_ORG = "AWARD-TO-LINKED-ORG"
DUAL_ROLE = "DUAL-ROLE"


@dataclass(frozen=True, slots=True)
class Interval:
    start: date
    end: date | None = None  # None = ongoing

    def __post_init__(self) -> None:
        if self.end is not None and self.end < self.start:
            raise ValueError(f"interval end {self.end} precedes start {self.start}")


def intervals_overlap(a: Interval, b: Interval) -> bool:
    a_end = a.end if a.end is not None else date.max
    b_end = b.end if b.end is not None else date.max
    return a.start <= b_end and b.start <= a_end


def date_in_interval(d: date, interval: Interval) -> bool:
    end = interval.end if interval.end is not None else date.max
    return interval.start <= d <= end


def _intersect(a: Interval, b: Interval) -> Interval | None:
    if not intervals_overlap(a, b):
        return None
    start = max(a.start, b.start)
    ends = [i.end for i in (a, b) if i.end is not None]
    return Interval(start, min(ends) if ends else None)


@dataclass(frozen=True, slots=True)
class Finding:
    pattern_id: str
    person: Iri
    role_iris: frozenset[Iri]
    contract: Iri | None
    organizations: frozenset[Iri]
    overlap: Interval | date
    evidence: frozenset[Iri]

    def __post_init__(self) -> None:
        if not self.evidence:
            raise ValueError("a finding must carry evidence")
        if self.pattern_id == AWARD_TO_LINKED_ORG and self.contract is None:
            raise ValueError(f"{AWARD_TO_LINKED_ORG} findings need a contract")
        if self.pattern_id == DUAL_ROLE and len(self.role_iris) < 2:
            raise ValueError(f"{DUAL_ROLE} findings need at least two roles")

    def sort_key(self):
        overlap = self.overlap
        overlap_key = (
            (overlap.isoformat(), "")
            if isinstance(overlap, date)
            else (overlap.start.isoformat(), overlap.end.isoformat() if overlap.end else "~")
        )
        return (
            self.pattern_id,
            self.person.n3(),
            self.contract.n3() if self.contract else "",
            sorted(r.n3() for r in self.role_iris),
            sorted(o.n3() for o in self.organizations),
            overlap_key,
        )


def _single_date(graph: Graph, node, prop: Iri) -> date | None:
    """The unique well-formed date value, or None when absent/ambiguous."""
    values = set()
    for obj in graph.objects(node, prop):
        if not isinstance(obj, Literal) or obj.datatype != XSD_DATE:
            return None
        parsed = parse_iso_date(obj.lexical)
        if parsed is None:
            return None
        values.add(parsed)
    if len(values) != 1:
        return None
    return values.pop()


def _role_interval(graph: Graph, role) -> Interval | None:
    start = _single_date(graph, role, TRO.startDate)
    if start is None:
        return None
    end_objs = graph.objects(role, TRO.endDate)
    if not end_objs:
        return Interval(start, None)
    end = _single_date(graph, role, TRO.endDate)
    if end is None or end < start:
        return None
    return Interval(start, end)


def _iri_objects(graph: Graph, subject, prop: Iri) -> list[Iri]:
    return [o for o in graph.objects(subject, prop) if isinstance(o, Iri)]


@dataclass(frozen=True, slots=True)
class _Role:
    iri: Iri
    person: Iri
    org: Iri
    interval: Interval
    evidence: frozenset[Iri]


@dataclass(frozen=True, slots=True)
class _Contract:
    iri: Iri
    awarded_by: tuple[Iri, ...]
    awarded_to: tuple[Iri, ...]
    award_date: date
    evidence: frozenset[Iri]


def _collect_roles(graph: Graph) -> list[_Role]:
    roles = []
    for role in graph.subjects(TRO.roleOf, None):
        if not isinstance(role, Iri):
            continue
        interval = _role_interval(graph, role)
        evidence = frozenset(_iri_objects(graph, role, TRO.hasEvidence))
        if interval is None or not evidence:
            continue
        for person in _iri_objects(graph, role, TRO.roleOf):
            for org in _iri_objects(graph, role, TRO.roleIn):
                roles.append(_Role(role, person, org, interval, evidence))
    return roles


def _collect_contracts(graph: Graph) -> list[_Contract]:
    contracts = []
    for node in graph.subjects(EPO.awardDate, None):
        if not isinstance(node, Iri):
            continue
        awarded = _single_date(graph, node, EPO.awardDate)
        if awarded is None:
            continue
        by = tuple(_iri_objects(graph, node, EPO.awardedBy))
        to = tuple(_iri_objects(graph, node, EPO.awardedTo))
        if not by or not to:
            continue
        evidence = frozenset(_iri_objects(graph, node, TRO.hasEvidence))
        contracts.append(_Contract(node, by, to, awarded, evidence))
    return contracts


def _linked_orgs(graph: Graph) -> set[tuple[Iri, Iri]]:
    links = set()
    for prop in (TRO.ownerOf, TRO.affiliatedWith):
        for triple in graph.match(None, prop, None):
            if isinstance(triple.subject, Iri) and isinstance(triple.object, Iri):
                links.add((triple.subject, triple.object))
    return links


def detect_conflicts(graph: Graph) -> list[Finding]:
    """Evaluate both patterns; deterministic, duplicate-free output."""
    roles = _collect_roles(graph)
    contracts = _collect_contracts(graph)
    links = _linked_orgs(graph)
    findings: set[Finding] = set()

    for role in roles:
        for contract in contracts:
            if role.org not in contract.awarded_by:
                continue
            if not date_in_interval(contract.award_date, role.interval):
                continue
            for winner in contract.awarded_to:
                if (role.person, winner) in links:
                    findings.add(
                        Finding(
                            pattern_id=AWARD_TO_LINKED_ORG,
                            person=role.person,
                            role_iris=frozenset({role.iri}),
                            contract=contract.iri,
                            organizations=frozenset({role.org, winner}),
                            overlap=contract.award_date,
                            evidence=role.evidence | contract.evidence,
                        )
                    )

    by_person: dict[Iri, list[_Role]] = {}
    for role in roles:
        by_person.setdefault(role.person, []).append(role)
    for person, person_roles in by_person.items():
        for r1, r2 in combinations(person_roles, 2):
            if r1.iri == r2.iri or r1.org == r2.org:
                continue
            overlap = _intersect(r1.interval, r2.interval)
            if overlap is None:
                continue
            witness_evidence: set[Iri] = set()
            witnessed = False
            for contract in contracts:
                between = (
                    r1.org in contract.awarded_by and r2.org in contract.awarded_to
                ) or (r2.org in contract.awarded_by and r1.org in contract.awarded_to)
                if between and date_in_interval(contract.award_date, overlap):
                    witnessed = True
                    witness_evidence |= contract.evidence
            if witnessed:
                findings.add(
                    Finding(
                        pattern_id=DUAL_ROLE,
                        person=person,
                        role_iris=frozenset({r1.iri, r2.iri}),
                        contract=None,
                        organizations=frozenset({r1.org, r2.org}),
                        overlap=overlap,
                        evidence=r1.evidence | r2.evidence | witness_evidence,
                    )
                )

    return sorted(findings, key=Finding.sort_key)


def _overlap_json(overlap: Interval | date):
    if isinstance(overlap, date):
        return {"date": overlap.isoformat()}
    return {
        "start": overlap.start.isoformat(),
        "end": overlap.end.isoformat() if overlap.end is not None else None,
    }


def findings_to_json(findings: list[Finding]) -> str:
    payload = [
        {
            "patternId": f.pattern_id,
            "person": f.person.value,
            "roleIris": sorted(r.value for r in f.role_iris),
            "contract": f.contract.value if f.contract else None,
            "organizations": sorted(o.value for o in f.organizations),
            "overlap": _overlap_json(f.overlap),
            "evidence": sorted(e.value for e in f.evidence),
        }
        for f in findings
    ]
    return json.dumps(payload, indent=2)


def findings_to_csv(findings: list[Finding]) -> str:
    """One row per finding; multi-valued IRI columns are space-joined."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        [
            "patternId",
            "person",
            "roleIris",
            "contract",
            "organizations",
            "overlapStart",
            "overlapEnd",
            "evidence",
        ]
    )
    for f in findings:
        if isinstance(f.overlap, date):
            start = end = f.overlap.isoformat()
        else:
            start = f.overlap.start.isoformat()
            end = f.overlap.end.isoformat() if f.overlap.end is not None else ""
        writer.writerow(
            [
                f.pattern_id,
                f.person.value,
                " ".join(sorted(r.value for r in f.role_iris)),
                f.contract.value if f.contract else "",
                " ".join(sorted(o.value for o in f.organizations)),
                start,
                end,
                " ".join(sorted(e.value for e in f.evidence)),
            ]
        )
    return out.getvalue()
