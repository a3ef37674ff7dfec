import pytest

from vmtk.cli import main
from vmtk.formats import read_marked, to_graph6, write_edgelist
from vmtk.graph import cycle_graph, net_graph, path_graph
from vmtk.rankwidth import layout_width


@pytest.fixture
def net_file(tmp_path):
    p = tmp_path / "net.txt"
    p.write_text(write_edgelist(net_graph()))
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_lrw_prints_width_and_layout(capsys, net_file):
    code, out, _ = run(capsys, "lrw", "--input", net_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "lrw = 2"
    layout = [int(x) for x in lines[1].removeprefix("layout: ").split()]
    assert layout_width(net_graph(), layout) == 2


def test_lrw_decide_and_size_limit(capsys, tmp_path, net_file):
    code, out, _ = run(capsys, "lrw", "--input", net_file, "--decide", "1")
    assert code == 0 and out.strip() == "lrw <= 1: no"
    big = tmp_path / "p.txt"
    big.write_text(write_edgelist(path_graph(25)))
    code, _, err = run(capsys, "lrw", "--input", big)
    assert code == 2 and "--decide" in err
    code, out, _ = run(capsys, "lrw", "--input", big, "--decide", "1")
    assert code == 0 and out.startswith("lrw <= 1: yes")


def test_graph6_input(capsys, tmp_path):
    p = tmp_path / "c.g6"
    p.write_text(to_graph6(cycle_graph(5)) + "\n")
    code, out, _ = run(capsys, "lrw", "--input", p)
    assert code == 0 and out.startswith("lrw = 2")


def test_bad_input_exits_two(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 1\n0 9\n")
    assert run(capsys, "lrw", "--input", p)[0] == 2
    assert run(capsys, "lrw")[0] == 2
    assert run(capsys, "lrw", "--input", tmp_path / "missing.txt")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "o1")
    second = run(capsys, "verify", "o1")
    assert first == second
    code, out, err = first
    assert code == 0 and err == ""
    assert out.splitlines()[-1].endswith("[PASS]")
    assert all(ln.endswith("PASS") for ln in out.splitlines() if ln.startswith("CHECK"))


def test_verify_timing_goes_to_stderr(capsys):
    code, out, err = run(capsys, "verify", "counting", "--timing")
    assert code == 0 and "wall-clock" in err and "wall-clock" not in out


def test_verify_seed_is_echoed(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "canonical", "--k", "1", "--seed", "7")
    assert code == 0 and "# seed 7" in out
    monkeypatch.setenv("VMTK_SEED", "9")
    _, out, _ = run(capsys, "verify", "canonical", "--k", "1")
    assert "# seed 9" in out


def test_delta_count_and_enumerate(capsys):
    code, out, _ = run(capsys, "delta", "count", "--k", "3")
    assert code == 0
    rows = dict(line.split(" = ") for line in out.splitlines())
    assert rows["total_3"] == "2600" and rows["p_2"] == "24" and rows["p_3"] == "74400"
    code, out, _ = run(capsys, "delta", "enumerate", "--k", "2")
    assert code == 0 and len([ln for ln in out.splitlines() if not ln.startswith("#")]) == 4
    code, out, _ = run(capsys, "delta", "enumerate", "--k", "1", "--rooted")
    assert code == 0 and out.count("# rooted") == 2
    assert run(capsys, "delta", "count")[0] == 2


def test_delta_recognize(capsys, tmp_path, net_file):
    code, out, _ = run(capsys, "delta", "recognize", "--input", net_file)
    assert code == 0 and out.startswith("member of Delta_1, type A")
    assert out.count("thick edge") == 3
    p = tmp_path / "c6.txt"
    p.write_text(write_edgelist(cycle_graph(6)))
    code, out, _ = run(capsys, "delta", "recognize", "--input", p)
    assert code == 1 and out.strip() == "not a member"


def test_splitdec_output_round_trips(capsys, tmp_path, net_file):
    dot = tmp_path / "d.dot"
    code, out, _ = run(capsys, "splitdec", "--input", net_file, "--canonical", "--emit-dot", dot)
    assert code == 0
    header, body = out.split("\n", 1)
    assert header == "# bags 4: 0 prime 3 star 1 complete"
    d = read_marked(body)
    assert len(d.bags()) == 4
    assert dot.read_text().startswith("graph D {")


def test_splitdec_disconnected(capsys, tmp_path):
    p = tmp_path / "two.txt"
    p.write_text("4 2\n0 1\n2 3\n")
    assert run(capsys, "splitdec", "--input", p)[0] == 2
    code, out, _ = run(capsys, "splitdec", "--input", p, "--per-component")
    assert code == 0 and out.count("# graph 0 component") == 2


def test_minor_steps(capsys, net_file):
    code, out, _ = run(capsys, "minor", "--input", net_file, "--step", "L 0", "--step", "D 3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# labels 0 1 2 4 5"
    assert run(capsys, "minor", "--input", net_file, "--step", "Q 0")[0] == 2
    assert run(capsys, "minor", "--input", net_file, "--step", "L 99")[0] == 2
