from itertools import combinations

import pytest

from cactusreg.graph import Graph, is_connected


def labeled_graphs(n):
    """Every labeled simple graph on vertices 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])


def connected_labeled_graphs(max_n):
    for n in range(1, max_n + 1):
        for G in labeled_graphs(n):
            if is_connected(G):
                yield G


@pytest.fixture(scope="session")
def paper_graphs():
    from cactusreg.cm_cactus import paper_example_graphs

    return paper_example_graphs()
