import numpy as np
import pytest

from thetahecke.bimodule import ThetaElem, act_left
from thetahecke.hecke import standard
from thetahecke.oracle.convolution import OrbitFunction, check_element, compare, convolve
from thetahecke.oracle.groups import coset_count, coset_reps
from thetahecke.oracle.ic import closure_char, all_points, verify_ic_cases
from thetahecke.oracle.jacquet import lhs, verify_jacquet
from thetahecke.oracle.orbits import enumerate_orbits, expected_orbit_table, orbit_dimension_fit
from thetahecke.oracle.statements import heckefunc_h
from thetahecke.weyl import OrbitIndex, WeylElem, decreasing_index, identity, simple, translation, w0_index


def _table(n, m, N, r):
    return sorted(e.index for e in expected_orbit_table(n, m, N, r))


def test_expected_table_examples():
    assert _table(1, 1, 0, 1) == [OrbitIndex([0], [(1, 1)])]
    assert _table(1, 1, 1, 1) == [OrbitIndex([-1], [(1, 1)]), OrbitIndex([0], [(1, 1)])]
    assert _table(1, 2, 0, 1) == [OrbitIndex([0], [(1, 1)]), OrbitIndex([0], [(2, 1)])]


def test_census_example():
    c = enumerate_orbits(1, 1, 1, 1, 2)
    assert c.ok()
    assert sorted(c.sizes().values()) == [1, 2]
    assert [o.size for o in c.leftover()] == [1]


def test_census_matches_frozen(frozen):
    for entry in frozen["census"]:
        n, m, N, r, q = entry["key"]
        c = enumerate_orbits(n, m, N, r, q)
        got = [[o.index.to_json(), o.size] for o in sorted(c.matched(), key=lambda o: o.index)]
        assert got == entry["sizes"]
        assert sorted(o.size for o in c.leftover()) == entry["leftover"]
        assert len(c.matched()) == len(expected_orbit_table(n, m, N, r))


def test_dimension_fit_examples():
    counts = {q: q * q - q for q in (2, 3, 5)}
    assert orbit_dimension_fit(counts) == 2
    assert orbit_dimension_fit({2: 1, 3: 1, 5: 1}) == 0
    with pytest.raises(ValueError):
        orbit_dimension_fit({2: 3, 3: 5, 5: 7})


def test_w0_orbit_dimension():
    sizes = {q: enumerate_orbits(2, 2, 0, 1, q).sizes()[w0_index(2)] for q in (2, 3, 5)}
    assert orbit_dimension_fit(sizes) == 3


def test_coset_examples(frozen):
    assert len(coset_reps(identity(2), 2, 2, 2)) == 1
    assert len(coset_reps(simple(2, 1), 2, 2, 3)) == 3
    assert len(coset_reps(simple(2, 0), 2, 3, 2)) == 2
    for entry in frozen["coset_count"]:
        w = WeylElem.from_json(entry["w"])
        assert coset_count(w, w.k, entry["d"], entry["q"]) == entry["count"] == entry["q"] ** w.length()


def test_convolve_matches_frozen(frozen):
    for entry in frozen["convolve"]:
        w = WeylElem.from_json(entry["w"])
        mu = OrbitIndex.from_json(entry["mu"])
        f = convolve(entry["side"], w, OrbitFunction.indicator(mu, entry["m"], entry["q"]))
        got = [[k.to_json(), v] for k, v in sorted(f.values.items())]
        assert got == entry["values"]


def test_convolve_identity_and_rank_one():
    f = OrbitFunction.indicator(OrbitIndex([0], [(2, 1)]), 2, 3)
    assert convolve("H", identity(2), f) == f
    g = convolve("G", translation((2,)), OrbitFunction.indicator(OrbitIndex([0], [(1, 1)]), 1, 2))
    assert g.support() == {OrbitIndex([2], [(1, 1)])}


def test_two_orbit_support():
    f = OrbitFunction.indicator(OrbitIndex([0], [(1, 1)]), 2, 2)
    g = convolve("H", simple(2, 1), f) + f
    assert g.support() == {OrbitIndex([0], [(1, 1)]), OrbitIndex([0], [(2, 1)])}


def test_compare():
    f = OrbitFunction(1, 2, 2, {OrbitIndex([0], [(1, 1)]): 3})
    assert compare(f, f)["ratio"] == 0
    assert compare(f.scale(2), f)["ratio"] == 1
    h = OrbitFunction(1, 2, 2, {OrbitIndex([0], [(2, 1)]): 3})
    report = compare(f, h)
    assert report["ratio"] == "FAIL"
    assert len(report["symmetric_difference"]) == 2


def test_symbolic_side_agrees_with_oracle():
    mu = decreasing_index([2])
    h = standard(translation((1,)))
    sym = act_left(h, ThetaElem.basis(2, mu))
    assert check_element("left", "G", h, mu, 2, 2, sym).ok
    h = standard(simple(2, 1))
    sym = heckefunc_h(h, mu, 2)
    assert check_element("right", "H", h, mu, 2, 3, sym).ok


def test_closure_examples():
    f = closure_char(decreasing_index([1]), 2, 3)
    pts = all_points(1, 2, 3)
    assert np.array_equal(f.astype(bool), pts[:, 0, 1] == 0)
    full = closure_char(decreasing_index([1, 2]), 2, 2)
    pts = all_points(2, 2, 2)
    assert np.array_equal(full.astype(bool), pts[:, 1, 1] == 0)


def test_ic_cases_small():
    res = verify_ic_cases(2, 2, 2)
    assert res and all(r.ok for r in res)
    assert any(r.name.startswith("flag-closure") for r in res)


def test_jacquet(frozen):
    for entry in frozen["jacquet_lhs"]:
        got = lhs(tuple(entry["lam"]), entry["q"])
        assert {str(a): v for a, v in got.items()} == entry["values"]
    res = verify_jacquet(2, 1, (0, 0), 2)
    assert res.ok and res.measured_exponent == 0
    for lam, e in [((1, 0), 1), ((1, 1), 0)]:
        for q in (2, 3):
            res = verify_jacquet(2, 1, lam, q)
            assert res.ok and res.measured_exponent == e
    with pytest.raises(ValueError):
        verify_jacquet(2, 1, (0, 1), 2)
