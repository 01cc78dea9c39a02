import json
import subprocess
import sys

import pytest

from blockradio.cli import main
from blockradio.graph import format_graph, path_graph, read_graph


@pytest.fixture
def files(tmp_path):
    out = {}
    for n in (3, 4, 5):
        f = tmp_path / f"p{n}.graph"
        f.write_text(format_graph(path_graph(n)))
        out[f"p{n}"] = str(f)
    out["dir"] = tmp_path
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_lb(capsys, files):
    code, out, _ = run(capsys, "lb", files["p4"])
    assert code == 0 and json.loads(out) == {"lb": 5}


def test_exact(capsys, files):
    code, out, _ = run(capsys, "exact", files["p5"])
    assert code == 0 and json.loads(out) == {"rn": 10, "lb": 9, "gap": 1}
    code, out, _ = run(capsys, "exact", files["p5"], "--witness", "--threads", "2", "--backend", "python")
    rep = json.loads(out)
    assert rep["ordering"] == [0, 3, 1, 4, 2] and rep["labels"] == [0, 5, 10, 2, 7]


def test_exact_limit_is_domain_error(capsys, files):
    code, _, err = run(capsys, "exact", files["p5"], "--max-p", "4")
    assert code == 1 and err.startswith("error:") and len(err.strip().splitlines()) == 1


def test_order_extended_star(capsys, files):
    ordf = files["dir"] / "es.ord"
    code, out, _ = run(capsys, "order", "--spec", "extended_star", "m=3", "k=2", "h=2", "n=4", "-o", str(ordf))
    rep = json.loads(out)
    assert code == 0 and rep["certificate"]["verdict"] == "Certified" and rep["span"] == 82
    assert rep["ordering_names"][0] == "w^3"
    g = files["dir"] / "es.graph"
    assert run(capsys, "generate", "--spec", "extended_star m=3 k=2 h=2 n=4", "-o", str(g))[0] == 0
    names = json.loads((files["dir"] / "es.graph.names.json").read_text())
    assert names["spec"]["family"] == "extended_star" and len(names["names"]) == 39
    code, out, _ = run(capsys, "certify", str(g), "--ordering", str(ordf))
    assert code == 0 and json.loads(out)["verdict"] == "Certified"


def test_generate_random(capsys, files):
    code, out, _ = run(capsys, "generate", "--random", "9", "--seed", "4")
    assert code == 0 and out.splitlines()[1] == "9"
    f = files["dir"] / "r.graph"
    run(capsys, "generate", "--random", "9", "--seed", "4", "-o", str(f))
    assert read_graph(str(f)).p == 9


def test_generate_needs_seed(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--random", "9"])
    assert exc.value.code == 2


def test_analyze_and_pretty(capsys, files):
    code, out, _ = run(capsys, "analyze", files["p4"])
    assert json.loads(out)["weight_centers"] == [1, 2]
    code, out, _ = run(capsys, "--pretty", "lb", files["p4"])
    assert out.split() == ["lb", "5"]


def test_linegraph_and_transfer(capsys, files):
    lg = files["dir"] / "l.graph"
    code, out, _ = run(capsys, "linegraph", files["p4"], "-o", str(lg))
    assert code == 0 and json.loads(out)["line_p"] == 3 and read_graph(str(lg)).p == 3
    o = files["dir"] / "p4.ord"
    o.write_text("1 3 0 2\n")
    code, out, _ = run(capsys, "transfer", files["p4"], "--ordering", str(o), "--direction", "to-line")
    rep = json.loads(out)
    assert rep["applicable_case"] == "line4-iii" and rep["span"] == 3
    o.write_text("1 0 2\n")
    code, out, _ = run(capsys, "transfer", files["p4"], "--ordering", str(o), "--direction", "to-tree")
    assert json.loads(out)["span"] == 5


def test_bad_inputs(capsys, files):
    bad = files["dir"] / "bad.graph"
    bad.write_text("3\n0 1\n1 1\n")
    code, _, err = run(capsys, "lb", str(bad))
    assert code == 1 and "self-loop" in err
    code, _, err = run(capsys, "lb", str(files["dir"] / "missing.graph"))
    assert code == 1 and err.startswith("error:")
    c4 = files["dir"] / "c4.graph"
    c4.write_text("4\n0 1\n1 2\n2 3\n3 0\n")
    code, _, err = run(capsys, "analyze", str(c4))
    assert code == 1 and "block graph" in err
    o = files["dir"] / "short.ord"
    o.write_text("0 1\n")
    code, _, err = run(capsys, "certify", files["p4"], "--ordering", str(o))
    assert code == 1


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["nosuch"])
    assert exc.value.code == 2


def test_module_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "blockradio", "lb", files["p4"]], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"lb": 5}
    res = subprocess.run([sys.executable, "-m", "blockradio", "lb"], capture_output=True, text=True)
    assert res.returncode == 2


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "--pretty", "selftest", "--only", "5", "7")
    assert code == 0 and out.count("[PASS]") == 2
