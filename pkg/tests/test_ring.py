from fractions import Fraction

import pytest

from thetahecke.ring import ONE, Q, V, ZERO, LaurentPoly, QuadValue, laurent_arith, laurent_specialize, vpow


def test_difference_of_squares():
    a = V + vpow(-1)
    b = V - vpow(-1)
    assert laurent_arith(a, b, "mul") == vpow(2) - vpow(-2)


def test_additive_inverse_is_empty():
    x = LaurentPoly({-3: 2, 4: -1})
    s = laurent_arith(x, -x, "add")
    assert s == ZERO
    assert s.terms == {}


def test_q_substitution():
    assert vpow(-1) * (Q - ONE) == V - vpow(-1)


def test_no_zero_coefficients_stored():
    p = LaurentPoly({0: 0, 1: 3, 2: 0})
    assert p.terms == {1: 3}


def test_specialize_examples():
    assert laurent_specialize(Q, 2) == (2, 0)
    assert laurent_specialize(V + vpow(-1), 4) == (0, Fraction(5, 4))
    assert laurent_specialize(ZERO, 3) == (0, 0)


def test_quad_value_arithmetic():
    a = laurent_specialize(V, 3)
    assert a * a == QuadValue(3, 0, 3)
    assert a + a == laurent_specialize(V * 2, 3)


def test_shift_and_bar():
    p = LaurentPoly({1: 2, -2: 1})
    assert p.shift(3) == LaurentPoly({4: 2, 1: 1})
    assert p.bar() == LaurentPoly({-1: 2, 2: 1})


def test_json_round_trip_and_validation():
    p = LaurentPoly({-1: 1, 5: -7})
    assert LaurentPoly.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        LaurentPoly.from_json({"terms": [[2, 1], [1, 1]]})


def test_unknown_op_rejected():
    with pytest.raises(ValueError):
        laurent_arith(ONE, ONE, "div")
