from hypothesis import given
from hypothesis import strategies as st

from hlbc.exactpoly import HLPoly, t_binomial, tpoly_add, tpoly_eval, tpoly_mul, tpoly_str
from hlbc.exactpoly import monomial_str

small = st.lists(st.integers(-5, 5), max_size=5).map(tuple)


@given(small, small, st.integers(-3, 3))
def test_add_mul_evaluate(p, q, t):
    assert tpoly_eval(tpoly_add(p, q), t) == tpoly_eval(p, t) + tpoly_eval(q, t)
    assert tpoly_eval(tpoly_mul(p, q), t) == tpoly_eval(p, t) * tpoly_eval(q, t)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(-3, 3))
def test_binomial(a, b, t):
    assert tpoly_eval(t_binomial(a, b), t) == t ** a * (1 - t) ** b


def test_rendering():
    assert tpoly_str((2, -1, -1)) == "2 - t - t^2"
    assert tpoly_str(()) == "0"
    assert monomial_str((2, -4)) == "x1*x2^-2"
    assert monomial_str((1, 0)) == "x1^(1/2)"
    p = HLPoly(2, {(2, 0): (2, -1, -1), (4, 2): (1,)})
    assert str(p) == "(2 - t - t^2)*x1 + x1^2*x2"


def test_json_roundtrip_and_cancellation():
    p = HLPoly(2, {(2, 0): (1, -1), (0, 0): (3,)})
    assert HLPoly.loads(2, p.dumps()) == p
    assert (p - p).is_zero()
    q = p.add_term(0, 1, (2, 0))
    assert q[(2, 0)] == (2, -2) and p[(2, 0)] == (1, -1)


def test_group_action_and_specialization():
    p = HLPoly(2, {(4, 2): (1,), (2, 0): (2, -1, -1)})
    assert p.apply_group_element((-2, 1))[(2, -4)] == (1,)
    assert p.specialize_t(1) == {(4, 2): 1}
