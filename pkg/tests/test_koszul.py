import pytest

from cactusreg.errors import CapExceeded
from cactusreg.graph import Graph, complete, cycle, path, star
from cactusreg.oracle.hochster import regularity_hochster
from cactusreg.oracle.koszul import BettiTable, koszul_betti
from cactusreg.oracle.linalg import Q


def test_k2():
    B = koszul_betti(complete(2))
    assert B.entries == {(0, 0): 1, (1, 2): 1}
    assert (B.reg, B.pd) == (1, 1)


def test_k3_eagon_northcott_shape():
    B = koszul_betti(complete(3))
    assert B.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert B.reg == 1 == regularity_hochster(complete(3))


def test_p3_complete_intersection():
    B = koszul_betti(path(3))
    assert B.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert (B.reg, B.pd) == (2, 2)


def test_c4_table():
    B = koszul_betti(cycle(4))
    assert B.row_totals() == [1, 4, 9, 8, 2]
    assert (B.reg, B.pd) == (2, 4)


def test_alternating_sum_vanishes():
    # S/J has positive Krull codimension, so the Betti numbers sum to zero
    for G in (path(4), star(3), complete(4), cycle(4)):
        assert sum((-1) ** i * v for (i, _), v in koszul_betti(G).entries.items()) == 0


def test_edgeless():
    B = koszul_betti(Graph.from_edges(3, []))
    assert B.entries == {(0, 0): 1} and B.reg == 0 and B.pd == 0


def test_wider_scan_adds_nothing():
    for G in (path(3), complete(3)):
        assert koszul_betti(G, max_vertex_degree=3) == koszul_betti(G)


@pytest.mark.parametrize("field", [2, Q])
def test_fields(field):
    assert koszul_betti(cycle(4), field) == koszul_betti(cycle(4))


def test_cap():
    with pytest.raises(CapExceeded):
        koszul_betti(path(5))


def test_json_round_trip():
    B = koszul_betti(complete(3))
    assert B.to_json() == '{"entries": [[0, 0, 1], [1, 2, 3], [2, 3, 2]]}'
    assert BettiTable.from_json(B.to_json()) == B


def test_text_table():
    assert str(koszul_betti(path(3))) == " 0: 1 . .\n 1: . 2 .\n 2: . . 1"
