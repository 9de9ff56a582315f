"""Definition-file grammar and the command-line surface."""

import json
import subprocess
import sys

import pytest

from fiberlab import GrammarError
from fiberlab.lang import eval_expression, load_definitions

APPENDIX = """
# the special 8-variable ideal
ring R = [a,b,c,d,x,y,z,t];
I = ideal(R; a^2, b^2, c^2, d^2, a*b*x, c*d*x, a*c*y, b*d*y, a*d*z, b*c*z, c*d*y*z*t);
q = ideal(R; a, b, c, d);
"""

PAIR = """
ring A = [x,y];
ring B = [u];
I = ideal(A; x^2, x*y);
J = ideal(B; u^2);
"""


def test_definitions_and_expressions():
    env = load_definitions(APPENDIX)
    assert eval_expression(env, "I^3 : (x*y*z)") == eval_expression(env, "q^6")
    assert len(eval_expression(env, "q^6").gens) == 84
    assert str(eval_expression(env, "component(ideal(R; x^2, y^3), 2)")) == "x^2"
    assert str(eval_expression(env, "dstar(ideal(R; x^2*y))")) == "x^2, x*y"
    assert eval_expression(env, "ideal(R;)").is_zero()
    assert eval_expression(env, "ideal(R; 1)").is_unit()


def test_tensor_and_fiber_expressions():
    env = load_definitions(PAIR + "tensor T = A (*) B;\nF = fiber(I, J);\n")
    fiber = eval_expression(env, "F")
    assert str(fiber) == "x^2, x*y, x*u, y*u, u^2"
    # cross-ring operands lift into the declared tensor ring
    assert str(eval_expression(env, "I + J")) == "x^2, x*y, u^2"
    assert str(eval_expression(env, "maxideal(A) * maxideal(B)")) == "x*u, y*u"
    assert eval_expression(env, "F & maxideal(A) * maxideal(B)") == eval_expression(
        env, "maxideal(A) * maxideal(B)"
    )


def test_bare_variables_are_principal_ideals():
    env = load_definitions("ring R = [x,y];\n")
    assert str(eval_expression(env, "x^2 + x*y")) == "x^2, x*y"
    assert str(eval_expression(env, "(x + y)^2")) == "x^2, x*y, y^2"


def test_grammar_errors_carry_positions():
    with pytest.raises(GrammarError):
        load_definitions("ring R = [a,a];")
    with pytest.raises(GrammarError):
        load_definitions("ring R = [x]\n")  # missing semicolon
    with pytest.raises(GrammarError):
        load_definitions("ring R = [x];\nI = ideal(R; x$);")
    env = load_definitions("ring R = [x];")
    with pytest.raises(GrammarError):
        eval_expression(env, "I + 1")
    with pytest.raises(GrammarError):
        eval_expression(env, "x^")


def test_rebinding_rejected():
    with pytest.raises(GrammarError):
        load_definitions("ring R = [x];\nR = ideal(R; x);")


def run_cli(*argv: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "fiberlab.cli", *argv],
        capture_output=True, text=True, timeout=600,
    )


@pytest.fixture(scope="module")
def defs_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("defs") / "defs.fl"
    path.write_text(APPENDIX)
    return str(path)


@pytest.fixture(scope="module")
def pair_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("pair") / "pair.fl"
    path.write_text(PAIR)
    return str(path)


def test_cli_eval_colon_count(defs_file):
    out = run_cli("eval", defs_file, "I^3 : (x*y*z)")
    assert out.returncode == 0
    assert len(out.stdout.strip().split(", ")) == 84


def test_cli_eval_maxideal_square(pair_file):
    out = run_cli("eval", pair_file, "maxideal(A)^2")
    assert out.returncode == 0
    assert out.stdout.strip() == "x^2, x*y, y^2"


def test_cli_betti_json_schema(pair_file):
    out = run_cli("--json", "betti", pair_file, "I")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["char"] == 0
    assert {"i": 1, "j": 3, "dim": 1} in payload["entries"]
    assert {"i": 0, "b": [2, 0], "dim": 1} in payload["multigraded"]


def test_cli_invariants_json(pair_file):
    out = run_cli("invariants", pair_file, "I", "--json")
    payload = json.loads(out.stdout)
    assert payload == {
        "reg": 2, "pdim": 1, "depth": 1, "t0": 2, "componentwiseLinear": True,
    }


def test_cli_char_agreement(pair_file):
    a = run_cli("--json", "--char", "0", "betti", pair_file, "I")
    b = run_cli("--json", "--char", "32003", "betti", pair_file, "I")
    pa, pb = json.loads(a.stdout), json.loads(b.stdout)
    assert pa["entries"] == pb["entries"]
    assert pa["multigraded"] == pb["multigraded"]


def test_cli_torvanish_schema(pair_file):
    out = run_cli("torvanish", pair_file, "I", "I")
    payload = json.loads(out.stdout)
    assert payload == {"vanishing": False, "witness": {"i": 0, "j": 2}}


def test_cli_verify_exit_codes(pair_file):
    ok = run_cli("verify", "thm-6.1", "--input", pair_file, "--I", "I", "--J", "J",
                 "--s", "2", "--stable-json")
    assert ok.returncode == 0
    report = json.loads(ok.stdout)
    assert report["verdict"] == "pass"
    assert report["computed"]["depthFs"] == 1
    # qualified names are accepted
    ok2 = run_cli("verify", "thm-5.1", "--input", pair_file, "--I", "pair:I",
                  "--J", "pair:J", "--s", "2", "--stable-json")
    assert ok2.returncode == 0


def test_cli_verify_negative_case(tmp_path):
    path = tmp_path / "r55.fl"
    path.write_text(
        "ring R = [a,b,c];\nring S = [x];\n"
        "I = ideal(R; a^4, a^3*b, a*b^3, b^4, a^2*b^2*c^4);\n"
        "J = ideal(S; x^4);\n"
    )
    out = run_cli("verify", "cor-5.2", "--input", str(path), "--I", "I", "--J", "J",
                  "--s", "2", "--stable-json")
    assert out.returncode == 1  # the equigenerated shortcut fails here, as predicted
    report = json.loads(out.stdout)
    assert report["verdict"] == "fail"
    assert report["computed"]["formula"] == 9
    assert report["computed"]["regFs"] == 10


def test_cli_parse_error_exit_code(defs_file):
    out = run_cli("eval", defs_file, "I^")
    assert out.returncode == 2
    assert "error" in out.stderr


def test_cli_cap_error_exit_code(pair_file, monkeypatch):
    out = subprocess.run(
        [sys.executable, "-m", "fiberlab.cli", "betti", pair_file, "I"],
        capture_output=True, text=True,
        env={"FIBERLAB_CAPS": "lattice=1", "PATH": "/usr/bin:/bin"},
    )
    assert out.returncode == 3
    assert "cap" in out.stderr.lower()


def test_cli_scenario_runs(pair_file):
    out = run_cli("scenario", "remark-5.6", "--stable-json")
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["verdict"] == "pass"
    assert "elapsedMs" not in report


def test_cli_unknown_scenario():
    out = run_cli("scenario", "no-such-thing")
    assert out.returncode == 2
