from hypothesis import given, settings
from hypothesis import strategies as st

from thetahecke.bimodule import ThetaElem, act_left, act_right, filt_degree, from_induced, to_induced
from thetahecke.hecke import (
    HeckeElem,
    T,
    bernstein_decompose,
    bernstein_recompose,
    he_mul,
    parabolic_decompose,
    parabolic_recompose,
    sigma_alg,
    sigma_tilde_alg,
    star_sharp,
    wakimoto,
)
from thetahecke.ring import LaurentPoly, laurent_specialize
from thetahecke.weyl import (
    OrbitIndex,
    action_on_orbit,
    length_by_residue_formula,
    orbit_factorize,
    rotation,
    weyl_from_pair,
)

laurent = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=3).map(LaurentPoly)


@st.composite
def weyl(draw, k):
    perm = tuple(draw(st.permutations(range(1, k + 1))))
    lam = tuple(draw(st.lists(st.integers(-1, 1), min_size=k, max_size=k)))
    return weyl_from_pair(lam, perm)


@st.composite
def hecke(draw, k, terms=2):
    ws = draw(st.lists(weyl(k), min_size=1, max_size=terms))
    return HeckeElem(k, {w: draw(laurent) for w in ws})


@st.composite
def orbit(draw, n, m):
    subset = sorted(draw(st.permutations(range(1, m + 1)))[:n])
    images = draw(st.permutations(range(1, n + 1)))
    lam = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    return OrbitIndex(lam, zip(subset, images))


@st.composite
def theta(draw, n, m):
    idxs = draw(st.lists(orbit(n, m), min_size=1, max_size=2))
    return ThetaElem(n, m, {i: draw(laurent) for i in idxs})


shapes = st.sampled_from([(1, 2), (1, 3), (2, 2), (2, 3)])


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()


@given(laurent, laurent, st.sampled_from([2, 3, 5]))
def test_specialization_is_multiplicative(a, b, q):
    assert laurent_specialize(a * b, q) == laurent_specialize(a, q) * laurent_specialize(b, q)


@given(st.integers(2, 4).flatmap(lambda k: st.tuples(weyl(k), weyl(k))))
def test_weyl_group_laws(pair):
    u, w = pair
    assert (u * w).inverse() == w.inverse() * u.inverse()
    assert (u * w).pi1_degree() == u.pi1_degree() + w.pi1_degree()
    assert length_by_residue_formula(u) == u.length()
    assert (u * w).length() <= u.length() + w.length()


@given(weyl(3), st.integers(-2, 2))
def test_rotation_preserves_length(w, e):
    pi = rotation(3, e)
    assert (pi * w * pi.inverse()).length() == w.length()


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3).flatmap(lambda k: st.tuples(hecke(k), hecke(k), hecke(k))))
def test_hecke_associative_and_involutions(trip):
    x, y, z = trip
    assert he_mul(he_mul(x, y), z) == he_mul(x, he_mul(y, z))
    assert star_sharp(he_mul(x, y)) == he_mul(star_sharp(y), star_sharp(x))
    assert sigma_alg(he_mul(x, y)) == he_mul(sigma_alg(y), sigma_alg(x))
    assert sigma_tilde_alg(he_mul(x, y)) == he_mul(sigma_tilde_alg(x), sigma_tilde_alg(y))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3).flatmap(lambda k: st.tuples(st.just(k), hecke(k, 3))), st.data())
def test_bernstein_and_parabolic_round_trip(kh, data):
    k, h = kh
    assert bernstein_recompose(k, bernstein_decompose(h)) == h
    n = data.draw(st.integers(1, k))
    assert parabolic_recompose(k, parabolic_decompose(h, n)) == h


@given(st.lists(st.integers(-2, 2), min_size=3, max_size=3), st.lists(st.integers(-2, 2), min_size=3, max_size=3))
@settings(deadline=None)
def test_wakimoto_homomorphism(a, b):
    assert he_mul(wakimoto(a), wakimoto(b)) == wakimoto([x + y for x, y in zip(a, b)])


@given(shapes.flatmap(lambda s: orbit(*s)))
def test_orbit_factorize_recomposes(x):
    w, mu = orbit_factorize(x)
    assert mu.is_decreasing() and not any(mu.lam)
    assert action_on_orbit(w, mu) == x


@settings(max_examples=60, deadline=None)
@given(shapes.flatmap(lambda s: theta(*s)))
def test_induced_round_trip(x):
    assert from_induced(to_induced(x)) == x


@settings(max_examples=40, deadline=None)
@given(shapes.flatmap(lambda s: st.tuples(hecke(s[0], 1), hecke(s[1], 1), theta(*s))))
def test_actions_commute(trip):
    h, g, x = trip
    assert act_left(h, act_right(g, x)) == act_right(g, act_left(h, x))


@settings(max_examples=40, deadline=None)
@given(shapes.flatmap(lambda s: st.tuples(weyl(s[0]), theta(*s))))
def test_grading_shift(pair):
    w, x = pair
    before = filt_degree(x)
    after = filt_degree(act_left(T(w), x))
    assert set(after) <= {d + w.pi1_degree() for d in before}


@settings(max_examples=40, deadline=None)
@given(shapes.flatmap(lambda s: st.tuples(hecke(s[1], 2), hecke(s[1], 2), theta(*s))))
def test_right_action_is_an_action(trip):
    g1, g2, x = trip
    assert act_right(he_mul(g1, g2), x) == act_right(g2, act_right(g1, x))
