from thetahecke.bimodule import (
    InducedElem,
    ThetaElem,
    act_left,
    act_right,
    act_right_appB,
    act_right_M,
    chi_m2,
    chi_m2_bernstein,
    decreasing_indices,
    filt_degree,
    from_induced,
    to_induced,
)
from thetahecke.hecke import HeckeElem, T, he_mul, kl_simple, standard, star_sharp, wakimoto
from thetahecke.ring import ONE, Q, V, vpow
from thetahecke.weyl import (
    OrbitIndex,
    finite,
    identity,
    longest,
    rotation,
    simple,
    translation,
    w0_index,
    weyl_bar,
)

MU1 = OrbitIndex([0], [(1, 1)])
MU2 = OrbitIndex([0], [(2, 1)])


def basis(m, idx, c=ONE):
    return ThetaElem.basis(m, idx, c)


def test_left_identity_and_translation():
    x = basis(2, MU2) + basis(2, MU1, Q)
    assert act_left(T(identity(1)), x) == x
    assert act_left(standard(translation((3,))), basis(2, MU2)) == basis(2, OrbitIndex([3], [(2, 1)]))


def test_left_quadratic_relation():
    s = simple(2, 1)
    x = basis(3, OrbitIndex([0, 1], [(1, 2), (3, 1)]))
    lhs = act_left(T(s), act_left(T(s), x))
    rhs = act_left(HeckeElem(2, {s: Q - ONE, identity(2): Q}), x)
    assert lhs == rhs


def test_induced_examples():
    y = to_induced(basis(2, w0_index(2)))
    assert y == InducedElem(2, 2, {(1, 2): T(identity(2))})
    y = to_induced(basis(2, MU2))
    assert y == InducedElem(1, 2, {(2, 1): T(identity(1))})
    x = basis(3, OrbitIndex([1, 0], [(1, 1), (3, 2)]), V) + basis(3, w0_index(2))
    assert from_induced(to_induced(x)) == x


def test_trivial_character():
    s = simple(2, 1)
    assert chi_m2(T(s)) == Q
    assert chi_m2(T(identity(2))) == ONE
    assert chi_m2(wakimoto((1, 0))) == V
    assert chi_m2_bernstein((1, 0), (1, 2)) == V


def test_levi_right_action():
    g = standard(translation((2,)))
    # identity of H_M acts trivially
    assert act_right_M(T(identity(3)), g, 1) == g
    # a translation on the first block moves through sigma-tilde
    lam = (1, 0, 0)
    assert act_right_M(wakimoto(lam), g, 1) == he_mul(g, wakimoto((-1,)))
    # a simple reflection of the second block acts by q
    assert act_right_M(T(simple(3, 2)), g, 1) == g.scale(Q)


def test_right_identity_and_generator_example():
    x = basis(2, MU1) + basis(2, MU2, V)
    assert act_right(T(identity(2)), x) == x
    got = act_right(kl_simple(simple(2, 1)), basis(2, MU1))
    assert got == basis(2, MU2) + basis(2, MU1, vpow(-1))


def test_generator_table_examples():
    assert act_right_appB(("finite", 1), MU1, 2) == basis(2, MU2) + basis(2, MU1, vpow(-1))
    assert act_right_appB(("finite", 1), MU2, 2) == basis(2, MU1) + basis(2, MU2, V)
    mid = OrbitIndex([0], [(2, 1)])
    assert act_right_appB(("affine",), mid, 3) == basis(3, mid, V + vpow(-1))


def test_w0_orbit_under_right_action():
    # with the inverting anti-involution in front, as the H-side functor requires
    w0 = longest(2)
    for w in (simple(2, 0), simple(2, 1) * simple(2, 0), translation((1, 0)), rotation(2, 1)):
        lam, tau = weyl_bar(w * w0).to_pair()
        want = OrbitIndex(lam, [(i, tau[i - 1]) for i in (1, 2)])
        assert act_right(star_sharp(standard(w)), basis(2, w0_index(2))) == basis(2, want)


def test_filtration():
    x = basis(2, MU1)
    assert set(filt_degree(x)) == {0}
    y = basis(3, OrbitIndex([1, -1], [(1, 1), (2, 2)])) + basis(3, OrbitIndex([2, 0], [(1, 2), (3, 1)]))
    assert set(filt_degree(y)) == {0, 2}
    moved = act_left(wakimoto((1, 1)), y)
    assert set(filt_degree(moved)) == {2, 4}


def test_decreasing_indices():
    assert decreasing_indices(1, 2) == [MU1, MU2]
    assert len(decreasing_indices(2, 4)) == 6


def test_json_round_trip():
    x = basis(3, OrbitIndex([1, 0], [(1, 1), (3, 2)]), V - Q)
    assert ThetaElem.from_json(x.to_json()) == x
