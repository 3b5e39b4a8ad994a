import json
import re

import pytest

from clustercomb import cli


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_rows(capsys):
    code, out, _ = run(capsys, ["count", "T", "--kmax", "6", "--m", "3"])
    assert code == 0
    assert out.strip() == "1\t1\t3\t9\t28\t90\t297"


def test_count_u_row(capsys):
    code, out, _ = run(capsys, ["count", "U", "--kmax", "6", "--m", "6"])
    assert code == 0
    assert out.strip().endswith("3946320")


def test_count_fuss(capsys):
    code, out, _ = run(capsys, ["count", "fuss", "--kmax", "0", "--m", "5"])
    assert code == 0 and out.strip() == "1"


def test_count_check_passes(capsys):
    code, _, _ = run(capsys, ["count", "S", "--kmax", "6", "--m", "3,4,5,6", "--check"])
    assert code == 0


def test_enumerate_trees(capsys):
    code, out, _ = run(capsys, ["enumerate", "trees", "--k", "3", "--m", "3", "--order", "desc"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    assert all(json.loads(line)["k"] == 3 for line in lines)


def test_enumerate_trees_cycle_notation(capsys):
    # the cycle (3 2 1) is the descending circular order
    code, out, _ = run(
        capsys, ["enumerate", "trees", "--k", "3", "--m", "3", "--order", "cycle:3,2,1"]
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 9
    # an arbitrary other 3-cycle class has the same size
    code, out, _ = run(
        capsys, ["enumerate", "trees", "--k", "3", "--m", "3", "--order", "cycle:1,2,3"]
    )
    assert code == 0
    assert len(out.strip().splitlines()) == 9


def test_enumerate_is_deterministic(capsys):
    _, out1, _ = run(capsys, ["enumerate", "angulations", "--k", "3", "--m", "3"])
    _, out2, _ = run(capsys, ["enumerate", "angulations", "--k", "3", "--m", "3"])
    assert out1 == out2


def test_map_round_trip(capsys, monkeypatch):
    tree = '{"k":2,"m":3,"edges":[[1,2,1]]}'
    code, out, _ = run(capsys, ["map", "tree->angulation"], stdin=tree, monkeypatch=monkeypatch)
    assert code == 0
    ang = json.loads(out)
    assert ang["k"] == 2 and ang["m"] == 3
    code, out2, _ = run(capsys, ["map", "angulation->tree"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    back = json.loads(out2)
    assert back["k"] == 2 and len(back["edges"]) == 1 and back["edges"][0][2] == 1


def test_map_families(capsys, monkeypatch):
    tree = '{"k":3,"m":3,"edges":[[1,2,2],[1,3,1]]}'
    code, out, _ = run(capsys, ["map", "families:2->6"], stdin=tree, monkeypatch=monkeypatch)
    assert code == 0
    plane = json.loads(out)
    assert plane["m"] == 3
    code, out2, _ = run(capsys, ["map", "families:6->2"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out2) == json.loads(tree)


def test_induct(capsys, monkeypatch):
    tree = '{"k":3,"m":3,"edges":[[1,2,1],[2,3,2]]}'
    steps = '[{"kind":"R","i":1,"j":2,"chain":[1,2,3]}]'
    code, out, _ = run(capsys, ["induct", steps], stdin=tree, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["edges"] == [[1, 3, 2], [2, 3, 1]]


def test_orbit(capsys, monkeypatch):
    tree = '{"k":3,"m":3,"edges":[[1,2,1],[2,3,2]]}'
    code, out, _ = run(capsys, ["orbit"], stdin=tree, monkeypatch=monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 9 and len(data["orbit"]) == 9


def test_verify_ok(capsys):
    code, out, _ = run(capsys, ["verify", "formulas"])
    assert code == 0
    assert all(line.startswith("ok") for line in out.strip().splitlines())


def test_verify_all_suites(capsys):
    code, out, _ = run(capsys, ["verify", "all", "--k", "3", "--m", "3"])
    assert code == 0
    assert "snake induction" in out


def test_map_empty_diagram_to_forest(capsys, monkeypatch):
    empty = '{"k":3,"m":3,"arcs":[]}'
    code, out, _ = run(capsys, ["map", "diagram->forest"], stdin=empty, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out) == {"k": 3, "m": 3, "edges": []}


def test_verify_failure_exit_code(capsys, monkeypatch):
    from clustercomb import verify as ver

    monkeypatch.setattr(ver, "formulas", lambda *a, **k: [("doomed", False, "injected")])
    code, out, _ = run(capsys, ["verify", "formulas"])
    assert code == 2 and "FAIL" in out


def _check_dot_syntax(text: str) -> bool:
    lines = [line.strip() for line in text.strip().splitlines()]
    if not (lines[0].startswith("graph") and lines[0].endswith("{") and lines[-1] == "}"):
        return False
    stmt = re.compile(r'^"[^"]+"( -- "[^"]+"( \[label="[^"]*"\])?)?;$')
    return all(stmt.match(line) for line in lines[1:-1])


def test_export_tree_dot(capsys, monkeypatch):
    tree = '{"k":2,"m":3,"edges":[[1,2,1]]}'
    code, out, _ = run(capsys, ["export", "--format", "dot"], stdin=tree, monkeypatch=monkeypatch)
    assert code == 0
    assert _check_dot_syntax(out)
    assert 'label="S1"' in out


def test_export_angulation_dot(capsys, monkeypatch):
    cang = (
        '{"m":3,"k":2,"diagonals":[[1,3]],'
        '"colours":{"1-2":2,"1-3":1,"1-4":3,"2-3":3,"3-4":2}}'
    )
    code, out, _ = run(capsys, ["export", "--format", "dot"], stdin=cang, monkeypatch=monkeypatch)
    assert code == 0
    assert _check_dot_syntax(out)


def test_export_enumerated_trees_all_parse(capsys, monkeypatch):
    from clustercomb.counting import enumerate_trees

    for t in list(enumerate_trees(4, 3))[::17]:
        code, out, _ = run(capsys, ["export", "--format", "dot"], stdin=t.to_json(), monkeypatch=monkeypatch)
        assert code == 0 and _check_dot_syntax(out)


def test_validation_error_exit_code(capsys, monkeypatch):
    bad = '{"k":3,"m":3,"edges":[[1,2,1],[1,3,1]]}'
    code, _, err = run(capsys, ["map", "tree->angulation"], stdin=bad, monkeypatch=monkeypatch)
    assert code == 3 and "validation" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "bogus-family"])
    assert exc.value.code == 1


def test_shell_pipeline_end_to_end():
    # the subcommands compose as real processes over JSON lines
    import subprocess
    import sys

    enum = subprocess.run(
        [sys.executable, "-m", "clustercomb.cli", "enumerate", "trees",
         "--k", "3", "--m", "3", "--order", "desc"],
        capture_output=True, text=True, check=True,
    )
    lines = enum.stdout.strip().splitlines()
    assert len(lines) == 9
    mapped = subprocess.run(
        [sys.executable, "-m", "clustercomb.cli", "map", "tree->rooted-angulation"],
        input=lines[0], capture_output=True, text=True, check=True,
    )
    back = subprocess.run(
        [sys.executable, "-m", "clustercomb.cli", "map", "rooted-angulation->tree"],
        input=mapped.stdout, capture_output=True, text=True, check=True,
    )
    assert json.loads(back.stdout) == json.loads(lines[0])
