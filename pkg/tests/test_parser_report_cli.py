import json
from fractions import Fraction

import pytest

from realzeta import resolution
from realzeta.cli import main
from realzeta.parser import ParseError, parse_factored, parse_polynomial
from realzeta.polys import BiPoly
from realzeta.report import build_report, from_json, to_json, to_text
from realzeta.resolution import resolve
from realzeta.selftest import run_criterion

x, y = BiPoly.x(), BiPoly.y()


def test_parse_examples():
    assert parse_polynomial("y^2 - x^3") == y ** 2 - x ** 3
    assert parse_polynomial("(x^2+y^6)^2*(x^2-y^3)^3") == (x ** 2 + y ** 6) ** 2 * (x ** 2 - y ** 3) ** 3
    assert parse_polynomial("1/2*x - -y") == BiPoly.const(Fraction(1, 2)) * x + y


@pytest.mark.parametrize("text,offset,message", [
    ("x^-1", 2, "nonnegative"),
    ("2x", 1, "unexpected character"),
    ("x + z", 4, "unknown identifier"),
    ("(x + y", 6, "expected"),
    ("x/0", 1, "unexpected character"),
    ("1/0", 2, "division by zero"),
    ("x +", 3, "end of input"),
])
def test_parse_errors(text, offset, message):
    with pytest.raises(ParseError, match=message) as info:
        parse_polynomial(text)
    assert info.value.offset == offset


def test_parse_factored():
    factors = parse_factored("x^2+y^6:2; x^2-y^3:3")
    assert factors == [(x ** 2 + y ** 6, 2), (x ** 2 - y ** 3, 3)]
    assert parse_factored("x") == [(x, 1)]
    with pytest.raises(ParseError) as info:
        parse_factored("x:2; y^:1")
    assert info.value.offset == 7  # the ":" where the exponent should be
    with pytest.raises(ParseError, match="positive"):
        parse_factored("x:0")


def test_report_round_trip_and_determinism():
    model = resolve(parse_polynomial("y^2 - x^3"))
    report = build_report(model, parse_polynomial("y^2 - x^3"), {"kind": "poly", "text": "y^2 - x^3"}, series=4)
    text = to_json(report)
    assert from_json(text) == report
    again = build_report(resolve(parse_polynomial("y^2 - x^3")), parse_polynomial("y^2 - x^3"),
                         {"kind": "poly", "text": "y^2 - x^3"}, series=4)
    assert to_json(again) == text
    assert report["schemaVersion"] == 1
    assert report["zeta"]["top"]["plus"] == "(7+6s)/((1+s)(5+6s))"
    assert all(c["status"] in ("PASS", "FAIL") for c in report["checks"])
    assert "PASS  every pole has an eigenvalue witness" in to_text(report)


def test_normal_crossing_note():
    report = build_report(resolve(parse_polynomial("x^2*y^4")), checks=False)
    assert report["notes"] and "both multiplicities even" in report["notes"][0]


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_success(capsys):
    code, out, _ = run_cli(capsys, "--poly", "y^2 - x^3", "--format", "json")
    assert code == 0
    assert json.loads(out)["zeta"]["top"]["naive"] == "(5+4s)/((1+s)(5+6s))"


def test_cli_mode_and_level(capsys):
    code, out, _ = run_cli(capsys, "--poly", "y^2 - x^3", "--mode", "complex", "--level", "top", "--format", "json")
    data = json.loads(out)
    assert code == 0 and list(data["zeta"]) == ["top"] and list(data["zeta"]["top"]) == ["complexified"]


def test_cli_series(capsys):
    code, out, _ = run_cli(capsys, "--poly", "x^2 + y^2", "--level", "beta", "--series", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["zeta"]["series"]["naive"][2] == "1 - u^(-2)"


def test_cli_dot(capsys):
    code, out, _ = run_cli(capsys, "--factored", "x^2+y^6:2; x^2-y^3:3", "--format", "dot")
    assert code == 0 and out.startswith("graph dual {")


def test_cli_dl_json(tmp_path, capsys):
    path = tmp_path / "datum.json"
    path.write_text(json.dumps({"dimension": 3, "strata": [{"components": [1], "factors": [[1, 2]], "betaReal": [1]}]}))
    code, out, _ = run_cli(capsys, "--dl-json", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["zeta"]["top"]["naive"] == "1/(1+2s)"


@pytest.mark.parametrize("args", [
    ["--poly", "x^2 + y^2 + 1"],
    ["--poly", "x^-1"],
    ["--factored", "x:0"],
    ["--dl-json", "/nonexistent/datum.json"],
])
def test_cli_input_errors(capsys, args):
    code, _, err = run_cli(capsys, *args)
    assert code == 2 and err.startswith("realzeta: error:")


def test_cli_reports_failed_checks(capsys):
    # -1 is a complexified pole and the ratio of a real curve with only two intersections
    code, out, _ = run_cli(capsys, "--poly", "x^2 + y^6")
    assert code == 1 and "FAIL  naive poles are complexified poles on real candidates" in out


def test_self_test_catches_an_injected_numerics_error(monkeypatch):
    original = resolution.blowup_numerics

    def off_by_one(through):
        nu, big = original(through)
        return nu + 1, big

    monkeypatch.setattr(resolution, "blowup_numerics", off_by_one)
    result = run_criterion(1)
    assert not result.passed
