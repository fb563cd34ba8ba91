import json

import pytest

from clusterforge import catalog
from clusterforge.cli import main
from clusterforge.representation import DecoratedObject, simple_representation


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--quiver", "kronecker")
    assert code == 0 and out.splitlines()[0] == "Affine A~(1,1)"
    code, out, _ = run(capsys, "classify", "--quiver", "a21", "--format", "json")
    data = json.loads(out)
    assert data["delta"] == [1, 1, 1] and data["tubes"][0]["rank"] == 2


def test_ccmap_by_dimension_and_lambda(capsys):
    code, out, _ = run(capsys, "ccmap", "--quiver", "kronecker", "--dim", "1,1", "--lambda", "1")
    assert code == 0 and out == "u1^-1*u2^-1 + u1^-1*u2^1 + u1^1*u2^-1"
    code, out, _ = run(capsys, "ccmap", "--quiver", "a31", "--dim", "1,1,1,1", "--lambda", "0")
    assert code == 0 and out.count("+") == 6
    code, out, _ = run(capsys, "ccmap", "--quiver", "a21", "--dim", "-1,0,0")
    assert out == "u1^1"


def test_ccmap_from_object_json(capsys, tmp_path):
    q = catalog.kronecker()
    path = tmp_path / "s2.json"
    path.write_text(json.dumps(DecoratedObject.of_module(simple_representation(q, 1)).to_json()))
    code, out, _ = run(capsys, "ccmap", "--quiver", "kronecker", "--object", str(path))
    assert code == 0 and out == "u2^-1 + u1^2*u2^-1"


def test_inline_quiver_json(capsys):
    spec = json.dumps({"vertices": [1, 2], "arrows": [[1, 2]]})
    code, out, _ = run(capsys, "classify", "--quiver", spec)
    assert code == 0 and out == "Dynkin A2"


def test_grassmannian(capsys):
    code, out, _ = run(capsys, "grassmannian", "--quiver", "a21", "--dim", "1,1,1", "--lambda", "2")
    rows = dict(line.rsplit(" ", 1) for line in out.splitlines())
    assert rows["(0,1,1)"] == "1" and rows["(0,1,0)"] == "0"


def test_generic_and_basis(capsys):
    code, out, _ = run(capsys, "generic", "--quiver", "kronecker", "--dim", "2,2", "--format", "json")
    assert code == 0
    code, out, _ = run(capsys, "basis", "--quiver", "kronecker", "--box", "1,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["elements"] if isinstance(data, dict) else data) == 9


def test_mutate(capsys):
    code, out, _ = run(capsys, "mutate", "--quiver", "kronecker", "--sequence", "1")
    assert code == 0 and "u1^-1 + u1^-1*u2^2" in out


def test_diffprop(capsys):
    code, out, _ = run(capsys, "diffprop", "--quiver", "a21")
    assert code == 0
    assert out.splitlines() == ["(0,1,0) 1 PASS", "(1,0,1) 1 PASS"]
    code, out, _ = run(capsys, "diffprop", "--quiver", "a31")
    assert "(0,0,1,0) u2^-1*u3^1 + u1^1*u2^-1 PASS" in out.splitlines()


def test_reflect(capsys):
    code, out, _ = run(capsys, "reflect", "--quiver", "kronecker", "--vertex", "1", "--dim", "1,0")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == "dimension (-1,0)" and lines[-1] == "PASS"


def test_grade(capsys):
    code, out, _ = run(capsys, "grade", "--quiver", "kronecker")
    assert code == 0 and out.startswith("epsilon")
    cycle = json.dumps(catalog.doubled_three_cycle().to_json())
    code, out, _ = run(capsys, "grade", "--quiver", cycle)
    assert code == 0 and out == "infeasible"


def test_kronecker_basechange(capsys):
    code, out, _ = run(capsys, "kronecker-basechange", "--from", "P", "--to", "z", "--n", "4")
    assert out.splitlines()[0] == "1 0 2 0 6"
    code, out, _ = run(capsys, "kronecker-basechange", "--from", "C", "--to", "z", "--n", "4", "--inverse")
    assert out.splitlines()[0] == "1 0 -1 0 1"


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--only", "basechange", "--only", "chebyshev")
    assert code == 0 and all(line.startswith("PASS") for line in out.splitlines())


@pytest.mark.parametrize("args", [
    ["classify", "--quiver", "nonexistent-file.json"],
    ["ccmap", "--quiver", "kronecker", "--dim", "1"],
    ["reflect", "--quiver", "a3", "--vertex", "2", "--dim", "1,1,1"],
    ["generic", "--quiver", json.dumps(catalog.doubled_three_cycle().to_json()), "--dim", "1,1,1"],
    ["classify"],
])
def test_errors_exit_with_one(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 1 and err
