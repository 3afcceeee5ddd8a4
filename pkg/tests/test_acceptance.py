"""Acceptance checks 1-10; each prints one PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the lines inline,
or ``python3 tests/test_acceptance.py`` for the summary alone.
"""

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import connected_labeled_graphs  # noqa: E402

from cactusreg.bounds import find_peripheral_cycle, invariant_report, verify_peripheral_cycle
from cactusreg.cm_cactus import (
    chain_graph,
    lemma41_family,
    lemma42_family,
    paper_example_graphs,
    theorem44_members,
)
from cactusreg.generators import random_graphs
from cactusreg.graph import cycle
from cactusreg.oracle.dispatch import regularity
from cactusreg.oracle.hochster import HARD_VERTEX_CEILING, regularity_hochster
from cactusreg.oracle.koszul import koszul_betti
from cactusreg.oracle.linalg import Q
from cactusreg.verify import LEMMA41_TABLE, LEMMA42_TABLE, repro_rows

CYCLE_CLIQUE_DIST = "K2:1,K3:1,K4:1,C4:1,C5:1,C6:1"


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    print(line, flush=True)
    return line


def _row(rows, label, quantity):
    (r,) = [r for r in rows if r.label == label and r.quantity == quantity]
    return r


def lemma41_values(field):
    return [regularity_hochster(lemma41_family(*p), field) for p in LEMMA41_TABLE]


def lemma42_values(field):
    return [regularity_hochster(lemma42_family(*p), field) for p in LEMMA42_TABLE]


def check_1():
    start = time.perf_counter()
    rows = repro_rows()
    secs = time.perf_counter() - start
    reg, bound = _row(rows, "G2", "reg"), _row(rows, "G2", "paper_bound")
    oracle_secs = reg.seconds
    ok = reg.got == 6 and bound.got == 6 and oracle_secs <= 300
    return ok, f"G2 reg {reg.got} = bound {bound.got} (expect 6 = 6), oracle {oracle_secs:.2f}s <= 300s " \
               f"(whole repro {secs:.1f}s)"


def check_2():
    G1, _ = paper_example_graphs()
    start = time.perf_counter()
    reg = regularity_hochster(G1, vertex_cap=HARD_VERTEX_CEILING)
    secs = time.perf_counter() - start
    bound = invariant_report(G1).paper_bound
    ok = reg == 6 and bound == 7 and secs <= 3600
    return ok, f"G1 reg {reg} < bound {bound} (expect 6 < 7), {secs:.2f}s <= 3600s"


def check_3():
    start = time.perf_counter()
    got = lemma41_values(32003)
    secs = time.perf_counter() - start
    want = [k - 1 if m2 == 2 else k for k, _, m2 in LEMMA41_TABLE]
    ok = got == want and secs <= 120
    return ok, f"lemma41 {list(LEMMA41_TABLE)} -> {got} (expect {want}), {secs:.2f}s <= 120s"


def check_4():
    start = time.perf_counter()
    got = lemma42_values(32003)
    secs = time.perf_counter() - start
    want = [k - 1 if m1 == m2 == 2 else k for k, m1, m2 in LEMMA42_TABLE]
    ok = got == want and secs <= 120
    return ok, f"lemma42 {list(LEMMA42_TABLE)} -> {got} (expect {want}), {secs:.2f}s <= 120s"


def check_5():
    members = theorem44_members(9)
    bad = []
    for spec in members:
        G = chain_graph(spec)
        rep = invariant_report(G)
        want = 2 * rep.cycle_counts.get(4, 0) + rep.c_prime
        got = regularity_hochster(G)
        if got != want:
            bad.append((spec, got, want))
    ok = bool(members) and not bad
    return ok, f"{len(members)} class members <= 9 vertices, mismatches {bad}"


def check_6():
    start = time.perf_counter()
    violations, equal = [], 0
    for gid, G in random_graphs("random-cycle-clique", 500, 2024, CYCLE_CLIQUE_DIST, (1, 5), 8):
        rep = invariant_report(G)
        reg = regularity(G, use_formulas=False).value
        if not (rep.is_cycle_clique and reg <= rep.paper_bound <= rep.smk_bound):
            violations.append(gid)
        equal += reg == rep.paper_bound
    secs = time.perf_counter() - start
    ok = not violations and secs <= 1800
    return ok, f"500 graphs, {len(violations)} violations {violations[:3]}, " \
               f"{equal} equalities, {secs:.1f}s <= 1800s"


def check_7():
    got = [(regularity_hochster(cycle(k)), invariant_report(cycle(k)).paper_bound) for k in (4, 5, 6)]
    want = [(k - 2, k - 2) for k in (4, 5, 6)]
    return got == want, f"C4..C6 (reg, bound) {got} (expect {want})"


def check_8():
    start = time.perf_counter()
    count, bad = 0, []
    for G in connected_labeled_graphs(4):
        count += 1
        a, b = koszul_betti(G).reg, regularity_hochster(G)
        if a != b:
            bad.append((G.sorted_edges(), a, b))
    secs = time.perf_counter() - start
    ok = not bad and secs <= 600
    return ok, f"{count} connected labeled graphs <= 4 vertices, {len(bad)} disagreements, " \
               f"{secs:.1f}s <= 600s"


def check_9():
    tried, failures = 0, []
    stream = random_graphs("random-cycle-clique", 10**6, 77, CYCLE_CLIQUE_DIST, (1, 6), 14)
    for gid, G in stream:
        if invariant_report(G).big_c < 1:
            continue
        tried += 1
        problems = verify_peripheral_cycle(G, find_peripheral_cycle(G))
        if problems:
            failures.append((gid, problems))
        if tried == 200:
            break
    ok = tried == 200 and not failures
    return ok, f"{tried} graphs with a big cycle, {len(failures)} failures {failures[:2]}"


def check_10():
    G1, G2 = paper_example_graphs()
    base = (regularity_hochster(G2), lemma41_values(32003), lemma42_values(32003))
    seen = {}
    for field in (2, Q):
        seen[str(field)] = (regularity_hochster(G2, field), lemma41_values(field),
                            lemma42_values(field))
    ok = all(v == base for v in seen.values())
    return ok, f"F_32003 {base}; " + "; ".join(f"F_{k} {v}" for k, v in seen.items())


CHECKS = [check_1, check_2, check_3, check_4, check_5,
          check_6, check_7, check_8, check_9, check_10]


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, detail = CHECKS[n - 1]()
    with capsys.disabled():
        print()
        report(n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = [CHECKS[n - 1]() for n in range(1, 11)]
    for n, (ok, detail) in enumerate(results, 1):
        report(n, ok, detail)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
