"""Certificates and isomorphism against exhaustive permutation search."""
from __future__ import annotations

import random
from itertools import combinations

import pytest

from cagekit.canon import canonical_form, certificate, is_isomorphic
from cagekit.graph import Graph, disjoint_union
from cagekit.named import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    heawood,
    kneser_petersen,
    path_graph,
    petersen,
)

from helpers import brute_isomorphic, random_graph, shuffled


def _corpus():
    rng = random.Random(42)
    graphs = [
        Graph.from_edges(0, []),
        Graph.from_edges(1, []),
        path_graph(4),
        cycle_graph(6),
        disjoint_union(cycle_graph(3), cycle_graph(3)),
        complete_graph(4),
        complete_bipartite(3, 3),
        Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),  # prism
        complete_bipartite(2, 3),
    ]
    graphs += [random_graph(rng.randint(4, 8), p, rng) for p in (0.25, 0.5, 0.75) for _ in range(6)]
    return graphs


def test_certificate_invariant_under_relabeling():
    rng = random.Random(7)
    for g in [petersen(), heawood(), complete_bipartite(4, 4)] + _corpus():
        cert = certificate(g)
        for _ in range(20):
            assert certificate(shuffled(g, rng)) == cert


def test_canonical_form_is_isomorphic_relabeling():
    rng = random.Random(3)
    for g in _corpus():
        cf = canonical_form(g)
        assert cf.order == g.order and cf.size == g.size
        assert brute_isomorphic(cf, g) or g.order > 8
        assert certificate(cf) == certificate(g)


def test_agreement_with_exhaustive_search_on_all_small_pairs():
    corpus = [g for g in _corpus() if g.order <= 8]
    for a, b in combinations(corpus, 2):
        assert is_isomorphic(a, b) == brute_isomorphic(a, b)


def test_same_degree_sequence_not_isomorphic():
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    assert not is_isomorphic(prism, complete_bipartite(3, 3))
    assert not is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)))


def test_petersen_models_agree():
    assert is_isomorphic(petersen(), kneser_petersen())
    assert certificate(petersen()) == certificate(kneser_petersen())


def test_highly_symmetric_graphs_complete_quickly():
    for g in [complete_bipartite(5, 5), heawood(), cycle_graph(40)]:
        assert certificate(g) == certificate(shuffled(g, random.Random(1)))
