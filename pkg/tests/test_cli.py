import json
import subprocess
import sys

import pytest

from chisini.cli import main, run
from chisini.passport import CurveNumerics, LocalDatum, Passport
from chisini.germs.types import parse_tag


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def ok_payload(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "ok", out
    return doc["payload"]


def test_germ_invariants(capsys):
    p = ok_payload(capsys, "germ", "invariants", "--poly", "v^2 - 4*z^3")
    assert {k: p[k] for k in ("multiplicity", "milnor", "delta", "virtualCusps", "virtualNodes", "type")} == {
        "multiplicity": 2, "milnor": 2, "delta": 1, "virtualCusps": 1, "virtualNodes": 0, "type": "A2"}


def test_germ_custom_variables(capsys):
    p = ok_payload(capsys, "germ", "invariants", "--poly", "y^3 + 27*x^4", "--vars", "x,y")
    assert p["type"] == "E6"


def test_localmodel(capsys):
    p = ok_payload(capsys, "localmodel", "--n", "4", "--m", "1")
    assert p["type"] == "E6" and p["nondegenerate"] is True


def test_bound(capsys):
    assert ok_payload(capsys, "bound", "--d", "3", "--g", "1", "--c", "9") == {"bound": "4"}
    assert ok_payload(capsys, "bound", "--d", "3", "--g", "4", "--c", "6") == {"bound": "8/3"}


def test_pluecker(capsys):
    p = ok_payload(capsys, "pluecker", "--n", "3", "--nv", "0", "--cv", "0")
    assert (p["degree"], p["virtualNodes"], p["virtualCusps"]) == (6, 0, 9)


def test_enumerate_examples(capsys):
    p = ok_payload(capsys, "enumerate", "--presentation", "A2", "--degree", "3", "--type", "2")
    assert (p["total"], p["transitive"], p["classes"], p["transitiveClasses"]) == (9, 6, 2, 1)
    p = ok_payload(capsys, "enumerate", "--presentation", "free_rank1", "--degree", "2")
    assert (p["total"], p["transitive"], p["classes"]) == (1, 1, 1)
    p = ok_payload(capsys, "enumerate", "--presentation", "A2", "--degree", "1")
    assert p["total"] == 0


def test_enumerate_components(capsys):
    p = ok_payload(capsys, "enumerate", "--presentation", "A2", "--degree", "3", "--local-gens", "1,2",
                   "--reference-multiplicity", "2")
    assert p["components"] == [
        {"degrees": [1, 2], "nondegenerate": [False, False], "orbits": [[1], [2, 3]]},
        {"degrees": [3], "nondegenerate": [True], "orbits": [[1, 2, 3]]},
    ]


def test_classes(capsys):
    p = ok_payload(capsys, "classes", "--presentation", "A2", "--degree", "3", "--transitive-only")
    assert p["count"] == 1


def test_enumerate_from_file(capsys, tmp_path):
    doc = {"schema": "presentation/1", "name": "braid", "generators": ["a", "b"],
           "relators": [[1, 2, 1, -2, -1, -2]], "geometric": [1, 2], "provenance": "test"}
    path = tmp_path / "braid.json"
    path.write_text(json.dumps(doc))
    p = ok_payload(capsys, "enumerate", "--presentation", str(path), "--degree", "3")
    assert p["total"] == 9


def test_schema_violation_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema": "presentation/1", "name": "bad", "generators": ["a"],
                                "relators": [[2]], "geometric": [1], "provenance": ""}))
    code, out, _ = call(capsys, "enumerate", "--presentation", str(path), "--degree", "2")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "error" and "payload" not in doc
    assert doc["error"]["path"] == "$.relators[0][0]"


def test_verdict(capsys, tmp_path):
    c = CurveNumerics(6, 1, 9, 0)
    paths = []
    for n in (5, 5):
        path = tmp_path / f"p{len(paths)}.json"
        path.write_text(json.dumps(Passport(c, (2,), n, (LocalDatum(parse_tag("A2"), 9),)).as_dict()))
        paths.append(str(path))
    p = ok_payload(capsys, "verdict", "--passport", paths[0], "--passport", paths[1])
    assert p["status"] == "UniqueByThm2"


def test_dual(capsys):
    p = ok_payload(capsys, "dual", "--param", "t^2 - 1; t^3 - t; 1")
    assert p["dualCurveNumerics"]["degree"] == 4
    assert p["dualCurveNumerics"]["virtualCusps"] == 3
    assert p["passport"]["coverDegree"] == 3
    assert p["thm8"]["status"] == "Inconclusive"


def test_validate_data(capsys):
    p = ok_payload(capsys, "validate-data")
    assert p["presentations"] >= 12


def test_unknown_subcommand_exit_2(capsys):
    code, out, err = call(capsys, "frobnicate")
    assert code == 2
    assert "usage" in err
    assert json.loads(out)["error"]["kind"] == "usage"


def test_missing_subcommand_exit_2(capsys):
    assert call(capsys)[0] == 2
    assert call(capsys, "germ")[0] == 2
    assert call(capsys, "bound", "--d", "3")[0] == 2


@pytest.mark.parametrize("argv", [
    ["bound", "--d", "1", "--g", "0", "--c", "4"],
    ["pluecker", "--n", "3", "--nv", "2", "--cv", "0"],
    ["dual", "--param", "t; 1; 0"],
    ["germ", "invariants", "--poly", "(v - z)^2"],
    ["germ", "invariants", "--poly", "v^^2"],
    ["enumerate", "--presentation", "no_such_presentation", "--degree", "2"],
    ["enumerate", "--presentation", "A2", "--degree", "9"],
])
def test_computation_errors_exit_1_with_single_record(capsys, argv):
    code, out, _ = call(capsys, *argv)
    doc = json.loads(out)
    assert code == 1
    assert doc["status"] == "error" and "payload" not in doc
    assert set(doc) == {"command", "error", "inputEcho", "status", "toolVersion"}


def test_plain_output(capsys):
    code, out, _ = call(capsys, "--plain", "bound", "--d", "3", "--g", "1", "--c", "9")
    assert code == 0
    assert out.splitlines()[0] == "bound: ok"
    assert '"4"' in out


def test_run_returns_document():
    doc, code = run(["pluecker", "--n", "2", "--nv", "0", "--cv", "0"])
    assert code == 0 and doc["command"] == "pluecker"


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "chisini.cli", "--jobs", "2", "enumerate", "--presentation", "E6",
            "--degree", "4", "--list"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["payload"]["total"] == 54
