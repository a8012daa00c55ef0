from itertools import product

import pytest

from thetahecke.weyl import (
    OrbitIndex,
    WeylElem,
    action_on_orbit,
    decreasing_index,
    elements_up_to_length,
    finite,
    identity,
    is_dominant,
    left_descents,
    length_by_residue_formula,
    longest,
    minimal_coset_reps,
    orbit_factorize,
    rotation,
    simple,
    translation,
    two_rho,
    w0_index,
    weyl_bar,
    weyl_from_pair,
    weyl_pairings,
    weyl_sigma,
    weyl_sigma_tilde,
    word_to_elem,
)


def test_identity_pair():
    assert weyl_from_pair((0, 0, 0), (1, 2, 3)).window == (1, 2, 3)


def test_s0_from_pair():
    s0 = weyl_from_pair((-1, 1), (2, 1))
    assert s0.window == (0, 3)
    assert s0 == simple(2, 0)
    assert s0.length() == 1


def test_translation_window_and_length():
    t = translation((1, 0))
    assert t.window == (-1, 2)
    assert t.length() == 1
    assert t.pi1_degree() == 1


def test_window_is_bijective_mod_k():
    with pytest.raises(ValueError):
        WeylElem([1, 3])


def test_inverse_and_translations():
    for w in elements_up_to_length(3, 3):
        assert w * w.inverse() == identity(3)
    assert translation((1, -2)) * translation((0, 3)) == translation((1, 1))


def test_s1_s0_length_two():
    assert (simple(2, 1) * simple(2, 0)).length() == 2


def test_simple_lengths_and_rotation():
    for k in (2, 3, 4):
        assert all(simple(k, i).length() == 1 for i in range(k))
        assert rotation(k, 1).length() == 0
        assert rotation(k, k) == translation((1,) * k)


def test_translation_length_formula():
    for k in (2, 3):
        for lam in product(range(-2, 3), repeat=k):
            want = sum(abs(lam[i] - lam[j]) for i in range(k) for j in range(i + 1, k))
            assert translation(lam).length() == want


def test_reduced_words():
    assert identity(2).reduced_word() == ((), 0)
    assert simple(2, 0).reduced_word() == ((0,), 0)
    word, e = translation((1, 0)).reduced_word()
    assert len(word) == 1 and e == 1
    for w in elements_up_to_length(3, 4):
        word, e = w.reduced_word()
        assert word_to_elem(3, word, e) == w and len(word) == w.length()


def test_residue_formula_and_descents():
    for w in elements_up_to_length(3, 4):
        assert length_by_residue_formula(w) == w.length()
        for i in left_descents(w):
            assert (simple(3, i) * w).length() == w.length() - 1


def test_bar_examples():
    assert weyl_bar(translation((2, -1))) == translation((2, -1))
    assert weyl_bar(simple(3, 1)) == simple(3, 1)
    assert weyl_bar(weyl_from_pair((1, 0), (2, 1))) == weyl_from_pair((0, 1), (2, 1))


def test_sigma_tilde_examples():
    assert weyl_sigma_tilde(identity(3)) == identity(3)
    lam = (2, 0, -1)
    assert weyl_sigma_tilde(translation(lam)) == translation((1, 0, -2))
    tau = (2, 3, 1)
    w0 = longest(3)
    assert weyl_sigma_tilde(finite(tau)) == w0 * finite(tau) * w0


def test_sigma_is_an_involutive_anti_automorphism():
    elems = list(elements_up_to_length(2, 3))
    for u in elems:
        assert weyl_sigma(weyl_sigma(u)) == u
        for w in elems:
            assert weyl_sigma(u * w) == weyl_sigma(w) * weyl_sigma(u)


def test_pairings():
    assert weyl_pairings((1, 0))["two_rho"] == 1
    assert weyl_pairings((1, 0))["omega"] == 1
    assert weyl_pairings((3, 3, 3)) == {"two_rho": 0, "omega": 9, "per_coordinate": [3, 3, 3]}
    assert two_rho((2, 0, -1)) == 6
    assert is_dominant((2, 0, -1)) and not is_dominant((0, 1))


def test_action_on_orbit_examples():
    x = OrbitIndex([0], [(2, 1)])
    assert action_on_orbit(identity(1), x) == x
    assert action_on_orbit(translation((3,)), x) == OrbitIndex([3], [(2, 1)])
    y = action_on_orbit(finite((2, 1)), w0_index(2))
    assert y == OrbitIndex([0, 0], [(1, 1), (2, 2)])


def test_orbit_factorize_examples():
    mu = decreasing_index([1, 3])
    assert orbit_factorize(mu) == (identity(2), mu)
    x = OrbitIndex([4], [(2, 1)])
    assert orbit_factorize(x) == (translation((4,)), OrbitIndex([0], [(2, 1)]))
    x = OrbitIndex([1, -1], [(1, 1), (2, 2)])
    w, mu = orbit_factorize(x)
    assert mu == w0_index(2)
    assert w == translation((1, -1)) * finite((2, 1))
    assert action_on_orbit(w, mu) == x


def test_orbit_index_validation():
    with pytest.raises(ValueError):
        OrbitIndex([0, 0], [(1, 1), (2, 1)])
    with pytest.raises(ValueError):
        OrbitIndex([0], [(1, 1), (2, 2)])


def test_minimal_coset_reps():
    assert sorted(minimal_coset_reps(1, 2)) == [(1, 2), (2, 1)]
    assert minimal_coset_reps(2, 2) == [(1, 2)]
    assert len(minimal_coset_reps(2, 3)) == 3
    assert len(minimal_coset_reps(2, 4)) == 6


def test_json_round_trip():
    w = simple(3, 0) * rotation(3, 1)
    assert WeylElem.from_json(w.to_json()) == w
    idx = OrbitIndex([1, -2], [(3, 1), (1, 2)])
    assert OrbitIndex.from_json(idx.to_json()) == idx
