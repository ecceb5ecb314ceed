"""Command-line subcommands: exit codes, file formats, determinism."""
from __future__ import annotations

import pytest

from cagekit import graph6
from cagekit.canon import certificate
from cagekit.cli import main
from cagekit.named import heawood, mcgee, petersen
from cagekit.recipes import read_recipes, verified_replay


def write_g6(path, graphs):
    graph6.write_file(path, graphs)
    return str(path)


def test_verify_pass_and_fail(tmp_path, capsys):
    path = write_g6(tmp_path / "in.g6", [petersen(), heawood()])
    assert main(["verify", "--k", "3", "--g", "5", path]) == 1
    out = capsys.readouterr().out
    assert "line 1: PASS" in out
    assert "line 2: FAIL" in out
    assert main(["verify", "--k", "3", "--g", "6", str(tmp_path / "in.g6")]) == 1
    path = write_g6(tmp_path / "ok.g6", [petersen()])
    assert main(["verify", "--k", "3", "--g", "5", path]) == 0


def test_girth_lines(tmp_path, capsys):
    path = write_g6(tmp_path / "in.g6", [petersen(), mcgee()])
    assert main(["girth", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "order=10 degrees=3 girth=5"
    assert lines[1] == "order=24 degrees=3 girth=7"


def test_construct_writes_graphs_and_recipes(tmp_path, capsys):
    src = write_g6(tmp_path / "in.g6", [petersen()])
    out = str(tmp_path / "out.g6")
    assert main(["construct", "subdivide_two", "--in", src, "--out", out]) == 0
    produced = graph6.read_file(out)
    assert [g.order for g in produced] == [12]
    recipes = read_recipes(out + ".recipes")
    assert len(recipes) == len(produced)
    assert recipes[0].operation == "subdivide_two"
    resolver = {certificate(petersen()): petersen()}.__getitem__
    assert certificate(verified_replay(recipes[0], resolver)) == certificate(produced[0])


def test_construct_double_cover(tmp_path):
    src = write_g6(tmp_path / "in.g6", [mcgee()])
    out = str(tmp_path / "out.g6")
    assert main(["construct", "canonical_double_cover", "--in", src, "--out", out]) == 0
    produced = graph6.read_file(out)
    assert [(g.order, g.girth()) for g in produced] == [(48, 8)]


def test_construct_amalgamate(tmp_path):
    src = write_g6(tmp_path / "in.g6", [petersen(), petersen()])
    out = str(tmp_path / "out.g6")
    code = main(
        ["construct", "amalgamate", "--in", src, "--out", out,
         "--e1", "0,1", "--e2", "0,1"]
    )
    assert code == 0
    produced = graph6.read_file(out)
    assert [(g.order, g.girth()) for g in produced] == [(20, 5)]
    assert len(read_recipes(out + ".recipes")) == 1


def test_generators_stream_to_stdout(capsys):
    assert main(["circulant", "--n", "10", "--set", "1,3,7,9"]) == 0
    line = capsys.readouterr().out.strip()
    g = graph6.decode(line)
    assert (g.order, g.regularity(), g.girth()) == (10, 4, 4)

    assert main(["gdgp", "--m", "2", "--n", "18", "--K", "5,5"]) == 0
    g = graph6.decode(capsys.readouterr().out.strip())
    assert (g.order, g.girth()) == (36, 8)

    assert main(["parity46", "--n", "26"]) == 0
    g = graph6.decode(capsys.readouterr().out.strip())
    assert (g.order, g.regularity(), g.girth()) == (26, 4, 6)


def test_enumerate_prints_count(capsys):
    assert main(["enumerate", "--k", "3", "--n", "10", "--min-girth", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert graph6.decode(lines[0]).order == 10
    assert lines[1] == "1 graphs"


def test_bounds_output(capsys):
    assert main(["bounds", "--k", "3", "--g", "5"]) == 0
    out = capsys.readouterr().out
    assert "Moore=10" in out
    assert "Sauer=16" in out
    assert "even orders only" in out

    assert main(["bounds", "--k", "3", "--g", "8", "--horizon", "34"]) == 0
    out = capsys.readouterr().out
    assert "Moore=30" in out
    assert "32" in out.splitlines()[-1]


def test_spectrum_subcommand(tmp_path, capsys):
    seeds = tmp_path / "seeds" / "k3g5"
    seeds.mkdir(parents=True)
    write_g6(seeds / "cage.g6", [petersen()])
    out = tmp_path / "report.txt"
    code = main(
        ["spectrum", "--k", "3", "--g", "5", "--horizon", "20",
         "--seeds", str(tmp_path / "seeds"), "--out", str(out)]
    )
    assert code == 0
    text = out.read_text()
    assert "10 Realized" in text
    assert "N(k,g)=<=10" in text


def test_spectrum_with_citations(tmp_path):
    seeds = tmp_path / "seeds" / "k4g4"
    seeds.mkdir(parents=True)
    from cagekit.named import complete_bipartite

    write_g6(seeds / "cage.g6", [complete_bipartite(4, 4)])
    cites = tmp_path / "cites.txt"
    cites.write_text("4 4 9 ruled out\n")
    out = tmp_path / "report.txt"
    code = main(
        ["spectrum", "--k", "4", "--g", "4", "--horizon", "14",
         "--seeds", str(tmp_path / "seeds"), "--citations", str(cites),
         "--out", str(out)]
    )
    assert code == 0
    assert "9 ExcludedCited citation=ruled out" in out.read_text()


def test_domain_errors_exit_one(capsys, tmp_path):
    assert main(["circulant", "--n", "6", "--set", "2,4"]) == 1
    assert "InvalidConnectingSet" in capsys.readouterr().err
    src = write_g6(tmp_path / "in.g6", [heawood()])
    assert main(["construct", "subdivide_two", "--in", src, "--out",
                 str(tmp_path / "o.g6"), "--target-girth", "9"]) == 1
    assert "ParameterOutOfRange" in capsys.readouterr().err


def test_missing_file_exits_one(capsys, tmp_path):
    assert main(["girth", str(tmp_path / "absent.g6")]) == 1
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "absent.g6" in err


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as err:
        main(["circulant", "--n", "10"])  # missing --set
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["unknown-command"])
    assert err.value.code == 2


def test_byte_identical_reruns(tmp_path):
    src = write_g6(tmp_path / "in.g6", [petersen()])
    a, b = str(tmp_path / "a.g6"), str(tmp_path / "b.g6")
    for out in (a, b):
        assert main(["construct", "subdivide_three", "--in", src, "--out", out]) == 0
    assert open(a).read() == open(b).read()
    assert open(a + ".recipes").read() == open(b + ".recipes").read()
