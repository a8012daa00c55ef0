import io
import json

import pytest

from thetahecke.cli import parse_cycles, parse_pair, run
from thetahecke.hecke import HeckeElem, T, he_mul
from thetahecke.weyl import WeylElem, simple


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    text = buf.getvalue()
    return code, (json.loads(text) if text.strip() and "--format" not in argv else text)


def test_weyl_len_example():
    assert call("weyl", "len", "--k", "2", "--pair", "[-1,1];(12)") == (0, 1)


def test_coset_count_example():
    assert call("oracle", "coset-count", "--k", "2", "--w", "s0", "--q", "3", "--d", "3") == (0, 3)


def test_theta_rank_example():
    code, report = call("verify", "theta-rank", "--n", "1", "--m", "2")
    assert code == 0 and report["ok"] and report["rank"] == [2]


def test_cycle_parsing():
    assert parse_cycles("(12)", 2) == (2, 1)
    assert parse_cycles("(1 3)(2)", 3) == (3, 2, 1)
    assert parse_cycles("()", 3) == (1, 2, 3)
    assert parse_pair("[-1,1];(12)") == simple(2, 0)


def test_weyl_outputs_parse_back():
    code, out = call("weyl", "mul", "--k", "3", "--w", "s1", "--w", "pi", "--w", "s0")
    assert code == 0
    w = WeylElem.from_json({"k": out["k"], "window": out["window"]})
    assert w.length() == out["length"]


def test_hecke_mul_and_inverse():
    code, out = call("hecke", "mul", "--k", "2", "--w", "s1", "--w", "s1")
    assert HeckeElem.from_json(out) == he_mul(T(simple(2, 1)), T(simple(2, 1)))
    code, inv = call("hecke", "inv", "--k", "2", "--w", "s0")
    assert he_mul(T(simple(2, 0)), HeckeElem.from_json(inv)) == T(simple(2, 0) * simple(2, 0))


def test_theta_commands():
    orbit = json.dumps({"lambda": [0], "bij": [[1, 1]]})
    code, out = call("theta", "act-right", "--basis", "C", "--k", "2", "--w", "s1", "--orbit", orbit, "--m", "2")
    assert code == 0 and len(out["terms"]) == 2
    code, out = call("theta", "factorize", "--orbit", json.dumps({"lambda": [1, 0], "bij": [[1, 1], [3, 2]]}))
    assert out["mu"]["subset"] == [1, 3]


def test_usage_errors():
    assert call("weyl", "len", "--k", "2", "--w", "s7")[0] == 2
    assert call("nonsense")[0] == 2
    assert call("weyl", "len", "--k", "2", "--pair", "garbage")[0] == 2
    assert call("hecke", "parabolic", "--k", "2", "--w", "s0")[0] == 2


def test_failing_suite_exits_one(monkeypatch):
    from thetahecke import verify
    from thetahecke.oracle.convolution import CheckResult

    monkeypatch.setitem(verify.SUITES, "jacquet", lambda small, seed: [CheckResult("forced", False, None, None, {})])
    code, report = call("verify", "jacquet")
    assert code == 1 and not report["ok"]
    assert report["checks"][0]["status"] == "fail"


def test_table_format():
    code, text = call("verify", "appendix-b", "--format", "table")
    assert code == 0 and text.strip().endswith("appendix-b: ok")
