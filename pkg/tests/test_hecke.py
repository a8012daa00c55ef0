import pytest

from thetahecke.hecke import (
    HeckeElem,
    T,
    bernstein_decompose,
    bernstein_element,
    bernstein_recompose,
    costandard,
    he_mul,
    kl_simple,
    parabolic_decompose,
    parabolic_recompose,
    pi1_split,
    sigma_alg,
    sigma_tilde_alg,
    standard,
    star_sharp,
    t_inverse,
    wakimoto,
)
from thetahecke.ring import ONE, Q, V, ZERO, vpow
from thetahecke.weyl import finite, identity, longest, rotation, simple, translation

E = identity(2)
S0, S1 = simple(2, 0), simple(2, 1)


def test_quadratic_relation():
    for s in (S0, S1):
        assert he_mul(T(s), T(s)) == HeckeElem(2, {s: Q - ONE, E: Q})


def test_braid_relation_rank3():
    s, t = simple(3, 1), simple(3, 2)
    assert he_mul(he_mul(T(s), T(t)), T(s)) == he_mul(he_mul(T(t), T(s)), T(t))


def test_rotation_is_unit():
    pi = rotation(3, 1)
    assert he_mul(T(pi), T(rotation(3, -1))) == T(identity(3))
    assert he_mul(he_mul(T(pi), T(simple(3, 1))), T(pi.inverse())) == T(pi * simple(3, 1) * pi.inverse())


def test_t_inverse_examples():
    assert t_inverse(E) == T(E)
    qi = vpow(-2)
    assert t_inverse(S1) == HeckeElem(2, {S1: qi, E: qi - ONE})
    w = S1 * S0
    assert he_mul(T(w), t_inverse(w)) == T(E)


def test_standard_costandard_examples():
    assert standard(E) == costandard(E) == T(E)
    assert standard(S1) == HeckeElem(2, {S1: vpow(-1)})
    assert costandard(S1) == HeckeElem(2, {S1: vpow(-1), E: vpow(-1) - V})
    for w in (S0 * S1, translation((1, -1)), rotation(2, 1) * S0):
        assert he_mul(standard(w), costandard(w.inverse())) == T(E)


def test_length_additive_products():
    u, w = S1, S0 * S1
    assert (u * w).length() == 3
    assert he_mul(standard(u), standard(w)) == standard(u * w)
    assert he_mul(costandard(u), costandard(w)) == costandard(u * w)


def test_kl_simple():
    c = kl_simple(S1)
    assert c == HeckeElem(2, {S1: vpow(-1), E: vpow(-1)})
    assert he_mul(c, c) == c.scale(V + vpow(-1))
    assert c == standard(S1) + HeckeElem(2, {E: vpow(-1)})


def test_wakimoto_conventions():
    assert wakimoto((2, 0)) == standard(translation((2, 0)))
    assert wakimoto((0, 2)) == costandard(translation((0, 2)))
    assert wakimoto((0, 1)) == he_mul(wakimoto((1, 1)), wakimoto((-1, 0)))


def test_bernstein_examples():
    h = he_mul(wakimoto((1, -1)), standard(finite((2, 1))))
    assert bernstein_decompose(h) == [((1, -1), (2, 1), ONE)]
    terms = bernstein_decompose(T(S0))
    assert bernstein_recompose(2, terms) == T(S0)
    assert bernstein_decompose(HeckeElem(2)) == []
    assert bernstein_element((1, 0), (1, 2)) == wakimoto((1, 0))


def test_parabolic_examples():
    parts = parabolic_decompose(T(finite((1, 3, 2))), 1)
    assert set(parts) == {(1, 2, 3)}
    parts = parabolic_decompose(T(S1), 1)
    assert parts == {(2, 1): T(E)}
    h = T(S0)
    assert parabolic_recompose(2, parabolic_decompose(h, 1)) == h


def test_star_sharp_examples():
    assert star_sharp(T(S1)) == T(S1)
    for w in (S0 * S1, translation((2, 0)), rotation(2, 1)):
        assert star_sharp(standard(w)) == standard(w.inverse())
    u, w = S0, S1 * S0 * S1
    assert star_sharp(he_mul(T(u), T(w))) == he_mul(T(w.inverse()), T(u.inverse()))


def test_sigma_tilde_examples():
    w0 = longest(3)
    assert sigma_tilde_alg(T(identity(3))) == T(identity(3))
    assert sigma_tilde_alg(wakimoto((2, 0, -1))) == wakimoto((1, 0, -2))
    tau = finite((2, 3, 1))
    assert sigma_tilde_alg(standard(tau)) == standard(w0 * tau * w0)


def test_sigma_reverses_products():
    x, y = T(S0) + T(rotation(2, 1)), kl_simple(S1)
    assert sigma_alg(he_mul(x, y)) == he_mul(sigma_alg(y), sigma_alg(x))


def test_pi1_split():
    assert set(pi1_split(T(S1))) == {0}
    assert set(pi1_split(wakimoto((2, 1)))) == {3}
    a = T(rotation(2, 1))
    b = wakimoto((1, 1))
    assert set(pi1_split(he_mul(a, b))) == {3}


def test_rank_mismatch():
    with pytest.raises(ValueError):
        he_mul(T(S1), T(identity(3)))


def test_json_round_trip():
    h = kl_simple(S0) + T(rotation(2, 1)).scale(Q)
    assert HeckeElem.from_json(h.to_json()) == h
