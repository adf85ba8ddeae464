import random

import networkx as nx
import pytest

from zeromac.channels import binary_adder, pentagon
from zeromac.errors import BudgetExceeded, ZeromacError
from zeromac.graphs import (
    confusability_graph,
    independence_number,
    max_independent_set,
    strong_power,
    strong_product,
)


def _to_nx(g):
    verts, adj = g
    h = nx.Graph()
    h.add_nodes_from(range(len(verts)))
    for i, mask in enumerate(adj):
        for j in range(len(verts)):
            if mask >> j & 1:
                h.add_edge(i, j)
    return h


def _random_graph(rng, n, p):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return list(range(n)), adj


def _nx_alpha(h):
    _, weight = nx.max_weight_clique(nx.complement(h), weight=None)
    return weight


def test_pentagon_graph_is_c5():
    h = _to_nx(confusability_graph(pentagon()))
    assert nx.is_isomorphic(h, nx.cycle_graph(5))


def test_confusability_needs_singleton_x2():
    with pytest.raises(ZeromacError):
        confusability_graph(binary_adder())


def test_strong_product_matches_networkx():
    rng = random.Random(5)
    for _ in range(20):
        g = _random_graph(rng, rng.randint(1, 5), 0.4)
        h = _random_graph(rng, rng.randint(1, 4), 0.5)
        ours = _to_nx(strong_product(g, h))
        ref = nx.strong_product(_to_nx(g), _to_nx(h))
        mapping = {(i, j): i * len(h[0]) + j for i, j in ref.nodes}
        assert set(map(frozenset, nx.relabel_nodes(ref, mapping).edges)) == set(map(frozenset, ours.edges))


def test_pentagon_independence_numbers():
    c5 = confusability_graph(pentagon())
    assert independence_number(c5) == 2
    assert independence_number(strong_power(c5, 2)) == 5


def test_mis_matches_networkx_on_random_graphs():
    rng = random.Random(9)
    for _ in range(60):
        g = _random_graph(rng, rng.randint(1, 14), rng.choice([0.1, 0.3, 0.6]))
        best = max_independent_set(g[1])
        assert all(not (g[1][a] >> b & 1) for a in best for b in best)
        assert len(best) == _nx_alpha(_to_nx(g))


def test_mis_limit_and_budget():
    empty = [0] * 10
    assert len(max_independent_set(empty, limit=3)) == 3
    with pytest.raises(BudgetExceeded):
        max_independent_set(strong_power(confusability_graph(pentagon()), 2)[1], budget=3)
