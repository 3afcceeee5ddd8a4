"""Checking the regularity bounds against the oracle, and the repro table."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .bounds import CSV_COLUMNS, InvariantReport, invariant_report
from .cm_cactus import (
    chain_graph,
    exact_reg_theorem44,
    lemma41_family,
    lemma41_reg,
    lemma42_family,
    lemma42_reg,
    paper_example_graphs,
    theorem44_members,
)
from .graph import Graph, cycle
from .oracle.dispatch import formula_value, regularity
from .oracle.hochster import DEFAULT_VERTEX_CAP, HARD_VERTEX_CEILING, regularity_hochster
from .oracle.linalg import DEFAULT_FIELD, FieldSpec

RECORD_COLUMNS = ("graph", "regularity", "formula_class", "formula_value",
                  "bound_satisfied", "equality") + CSV_COLUMNS

LEMMA41_TABLE = ((4, 3, 2), (4, 3, 3), (5, 3, 2), (5, 3, 3))
LEMMA42_TABLE = ((4, 2, 2), (4, 2, 3), (4, 3, 3), (5, 2, 2))
# class members up to this size go in the repro table
REPRO_MEMBER_VERTICES = 8


@dataclass(frozen=True)
class VerificationRecord:
    graph: str
    report: InvariantReport
    regularity: int
    formula_class: str | None
    formula_value: int | None
    seconds: float

    @property
    def bound_satisfied(self) -> bool:
        r = self.report
        return self.regularity <= r.paper_bound <= r.smk_bound

    @property
    def formula_agrees(self) -> bool:
        return self.formula_value is None or self.formula_value == self.regularity

    @property
    def ok(self) -> bool:
        return self.bound_satisfied and self.formula_agrees

    @property
    def equality(self) -> bool:
        return self.regularity == self.report.paper_bound

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "graph": self.graph,
            "regularity": self.regularity,
            "formula_class": self.formula_class,
            "formula_value": self.formula_value,
            "bound_satisfied": self.bound_satisfied,
            "equality": self.equality,
            "report": self.report.to_dict(),
        }
        if timings:
            d["seconds"] = round(self.seconds, 4)
        return d

    def csv_row(self, timings: bool = False) -> list[str]:
        head = [
            self.graph, str(self.regularity), self.formula_class or "",
            "" if self.formula_value is None else str(self.formula_value),
            str(int(self.bound_satisfied)), str(int(self.equality)),
        ]
        row = head + self.report.csv_row()
        if timings:
            row.append(f"{self.seconds:.4f}")
        return row


def verify_graph(
    name: str,
    G: Graph,
    field: FieldSpec = DEFAULT_FIELD,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    workers: int = 1,
) -> VerificationRecord:
    """Oracle regularity of G (summed over simplicial pieces) next to its
    bounds and, when G is in a recognized class, its closed-form value."""
    report = invariant_report(G)
    start = time.perf_counter()
    reg = regularity(G, field, vertex_cap, workers, use_formulas=False).value
    seconds = time.perf_counter() - start
    found = formula_value(G)
    fclass, fvalue = (found[1], found[0]) if found else (None, None)
    return VerificationRecord(name, report, reg, fclass, fvalue, seconds)


@dataclass(frozen=True)
class VerifySummary:
    records: tuple[VerificationRecord, ...]

    @property
    def violations(self) -> list[VerificationRecord]:
        return [r for r in self.records if not r.ok]

    @property
    def equalities(self) -> int:
        return sum(r.equality for r in self.records)

    @property
    def unexplained_equalities(self) -> list[VerificationRecord]:
        """Equality cases outside every recognized class."""
        return [r for r in self.records if r.equality and r.formula_class is None]

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "count": len(self.records),
            "violations": len(self.violations),
            "equalities": self.equalities,
            "unexplained_equalities": [r.graph for r in self.unexplained_equalities],
            "records": [r.to_dict(timings) for r in self.records],
        }


def verify_many(graphs: Iterable[tuple[str, Graph]], **kw) -> VerifySummary:
    return VerifySummary(tuple(verify_graph(name, G, **kw) for name, G in graphs))


# --- repro table -----------------------------------------------------------

@dataclass(frozen=True)
class ReproRow:
    label: str
    quantity: str
    expected: int
    got: int
    seconds: float

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def to_dict(self, timings: bool = False) -> dict:
        d = {"label": self.label, "quantity": self.quantity, "expected": self.expected,
             "got": self.got, "status": "PASS" if self.passed else "FAIL"}
        if timings:
            d["seconds"] = round(self.seconds, 4)
        return d


def _timed_oracle(G, field, cap, workers):
    start = time.perf_counter()
    value = regularity_hochster(G, field, cap, workers)
    return value, time.perf_counter() - start


def repro_rows(
    field: FieldSpec = DEFAULT_FIELD,
    stretch: bool = False,
    workers: int = 1,
) -> list[ReproRow]:
    """Every checkable number, recomputed; oracle values come from the
    Hochster oracle on the whole graph with no formula shortcuts."""
    G1, G2 = paper_example_graphs()
    rows = []

    def oracle_row(label, G, expected, cap=DEFAULT_VERTEX_CAP):
        got, secs = _timed_oracle(G, field, cap, workers)
        rows.append(ReproRow(label, "reg", expected, got, secs))

    rep2 = invariant_report(G2)
    oracle_row("G2", G2, 6)
    rows.append(ReproRow("G2", "paper_bound", 6, rep2.paper_bound, 0.0))
    rep1 = invariant_report(G1)
    if stretch:
        oracle_row("G1", G1, 6, HARD_VERTEX_CEILING)
    rows.append(ReproRow("G1", "paper_bound", 7, rep1.paper_bound, 0.0))
    for k, m1, m2 in LEMMA41_TABLE:
        oracle_row(f"lemma41:{k},{m1},{m2}", lemma41_family(k, m1, m2), lemma41_reg(k, m1, m2))
    for k, m1, m2 in LEMMA42_TABLE:
        oracle_row(f"lemma42:{k},{m1},{m2}", lemma42_family(k, m1, m2), lemma42_reg(k, m1, m2))
    for spec in theorem44_members(REPRO_MEMBER_VERTICES):
        G = chain_graph(spec)
        oracle_row(f"chain:{spec}", G, exact_reg_theorem44(G))
    for k in (4, 5, 6):
        G = cycle(k)
        oracle_row(f"cycle:{k}", G, k - 2)
        rows.append(ReproRow(f"cycle:{k}", "paper_bound", k - 2, invariant_report(G).paper_bound, 0.0))
    return rows

