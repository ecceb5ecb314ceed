"""Spectrum engine: order classification, closure, witnesses, determinism."""
from __future__ import annotations

import pytest

from cagekit.bounds import moore_bound, parity_admissible
from cagekit.canon import certificate
from cagekit.errors import BadSeed, HorizonTooSmall, SpecViolation
from cagekit.graph import check_kg
from cagekit.named import complete_bipartite, complete_graph, cycle_graph, petersen
from cagekit.recipes import verified_replay
from cagekit.spectrum import (
    OrderState,
    SearchConfig,
    infer_N,
    load_seeds,
    parse_citations,
    render_report,
    spectrum_search,
)


def evens(lo: int, hi: int) -> list[int]:
    return list(range(lo, hi + 1, 2))


def test_cubic_girth_three_spectrum(report_3_3):
    assert sorted(report_3_3.realized_orders()) == evens(4, 40)
    assert report_3_3.unresolved_orders() == []
    assert report_3_3.n_kg == 4
    assert infer_N(report_3_3, 4) == 4


def test_cubic_girth_four_spectrum(report_3_4):
    assert sorted(report_3_4.realized_orders()) == evens(6, 40)
    assert report_3_4.unresolved_orders() == []
    assert report_3_4.n_kg == 6
    assert infer_N(report_3_4, 6) == 6


def test_cubic_girth_five_spectrum(report_3_5):
    assert sorted(report_3_5.realized_orders()) == evens(10, 40)
    assert report_3_5.unresolved_orders() == []
    assert report_3_5.n_kg == 10
    assert infer_N(report_3_5, 10) == 10


def test_cubic_girth_six_spectrum(report_3_6):
    assert sorted(report_3_6.realized_orders()) == evens(14, 40)
    assert report_3_6.unresolved_orders() == []
    assert report_3_6.n_kg == 14


def test_quartic_girth_four_spectrum(report_4_4):
    assert sorted(report_4_4.realized_orders()) == [8] + list(range(10, 21))
    assert report_4_4.unresolved_orders() == []
    assert report_4_4.n_kg == 8
    assert infer_N(report_4_4, 8) == 10
    nine = next(s for s in report_4_4.statuses if s.n == 9)
    assert nine.state is OrderState.EXCLUDED_CITED
    assert "order 9" in nine.citation


def test_statuses_cover_grid_once(report_3_5):
    ns = [s.n for s in report_3_5.statuses]
    assert ns == list(range(4, 41))


def test_no_contradictions(report_3_5, report_4_4):
    for report in (report_3_5, report_4_4):
        for status in report.statuses:
            if status.state is OrderState.REALIZED:
                assert parity_admissible(report.k, status.n)
                assert status.n >= moore_bound(report.k, report.g)
                assert status.witness is not None


def test_additive_closure(report_3_5):
    realized = set(report_3_5.realized_orders())
    for a in realized:
        for b in realized:
            if a + b - 2 <= report_3_5.horizon:
                assert a + b - 2 in realized


def test_witness_replay_from_seeds(report_3_5):
    store = {certificate(petersen()): petersen()}
    for recipe in report_3_5.provenance:
        graph = verified_replay(recipe, store.__getitem__)
        store[recipe.output_cert] = graph
    for status in report_3_5.statuses:
        if status.state is OrderState.REALIZED:
            witness = store[status.witness.output_cert]
            assert witness.order == status.n
            assert check_kg(witness, 3, 5) is None


def test_bad_seeds_rejected():
    with pytest.raises(BadSeed):
        spectrum_search(3, 5, [complete_graph(4)], 20)  # wrong girth
    with pytest.raises(BadSeed):
        spectrum_search(3, 5, [cycle_graph(5)], 20)  # wrong degree


def test_empty_seed_list_resolves_nothing():
    report = spectrum_search(3, 5, [], 20)
    assert report.realized_orders() == []
    assert report.n_kg is None


def test_horizon_too_small():
    with pytest.raises(HorizonTooSmall):
        spectrum_search(3, 5, [petersen()], 9)


def test_wrong_citation_detected():
    from cagekit.constructions import subdivide_two

    twelve = subdivide_two(petersen())[0]
    citations = {(3, 5, 12): "claimed impossible"}
    with pytest.raises(SpecViolation):
        spectrum_search(
            3, 5, [petersen(), twelve], 20, SearchConfig(), citations
        )


def test_deterministic_reports():
    a = spectrum_search(3, 4, [complete_bipartite(3, 3)], 24, SearchConfig())
    b = spectrum_search(3, 4, [complete_bipartite(3, 3)], 24, SearchConfig())
    assert render_report(a) == render_report(b)


def test_rng_seed_changes_witnesses_not_truth(report_3_5):
    shuffled = spectrum_search(
        3, 5, [petersen()], 40, SearchConfig(rng_seed=7)
    )
    assert sorted(shuffled.realized_orders()) == sorted(report_3_5.realized_orders())


def test_restricted_construction_list():
    config = SearchConfig(constructions=("subdivide_two", "amalgamate"))
    report = spectrum_search(3, 5, [petersen()], 24, config)
    assert set(report.realized_orders()) >= {10, 12, 14, 16, 18}


def test_seed_and_citation_files(tmp_path):
    from cagekit import graph6

    folder = tmp_path / "k3g5"
    folder.mkdir()
    graph6.write_file(folder / "cage.g6", [petersen()])
    assert [g.order for g in load_seeds(tmp_path, 3, 5)] == [10]
    assert load_seeds(tmp_path, 4, 5) == []

    table = tmp_path / "citations.txt"
    table.write_text("# known exclusions\n3 8 32 ruled out by census\n4 4 9 none exists\n")
    parsed = parse_citations(table)
    assert parsed == {
        (3, 8, 32): "ruled out by census",
        (4, 4, 9): "none exists",
    }


def test_infer_N_needs_full_window():
    report = spectrum_search(3, 5, [petersen()], 14)
    assert sorted(report.realized_orders()) == [10, 12, 14]
    assert infer_N(report, 10) is None


def test_frozen_order_34_seed_rederives():
    """The checked-in (3,8) seed comes from the double cover of the girth-7
    cage by deleting two vertices at a time down to 38, then four at once."""
    from cagekit import graph6
    from cagekit.constructions import canonical_double_cover
    from cagekit.named import mcgee
    from cagekit.rewire import delete_vertices
    from conftest import SEED34

    g = canonical_double_cover(mcgee())
    while g.order > 38:
        g = delete_vertices(g, 2, 8)[0]
        assert check_kg(g, 3, 8) is None
    g = delete_vertices(g, 4, 8)[0]
    frozen = graph6.read_file(SEED34)
    assert len(frozen) == 1
    assert check_kg(frozen[0], 3, 8) is None
    assert frozen[0].order == 34
    assert certificate(g) == certificate(frozen[0])
