"""Session fixtures: spectrum runs shared across test modules."""
from __future__ import annotations

import os

import pytest

from cagekit import graph6
from cagekit.named import (
    complete_bipartite,
    complete_graph,
    heawood,
    petersen,
    tutte_coxeter,
)
from cagekit.spectrum import SearchConfig, spectrum_search

DATA = os.path.join(os.path.dirname(__file__), "data")
SEED34 = os.path.join(DATA, "seeds", "k3g8", "seed34.g6")


@pytest.fixture(scope="session")
def report_3_3():
    return spectrum_search(3, 3, [complete_graph(4)], 40, SearchConfig())


@pytest.fixture(scope="session")
def report_3_4():
    return spectrum_search(3, 4, [complete_bipartite(3, 3)], 40, SearchConfig())


@pytest.fixture(scope="session")
def report_3_5():
    return spectrum_search(3, 5, [petersen()], 40, SearchConfig())


@pytest.fixture(scope="session")
def report_3_6():
    return spectrum_search(3, 6, [heawood()], 40, SearchConfig())


@pytest.fixture(scope="session")
def report_4_4():
    citations = {(4, 4, 9): "no (4,4)-graph of order 9 exists (exhaustive search)"}
    return spectrum_search(
        4, 4, [complete_bipartite(4, 4)], 20, SearchConfig(), citations
    )


@pytest.fixture(scope="session")
def report_3_8():
    seeds = [tutte_coxeter()] + graph6.read_file(SEED34)
    citations = {(3, 8, 32): "no (3,8)-graph of order 32 exists (exhaustive search)"}
    return spectrum_search(3, 8, seeds, 62, SearchConfig(), citations)
