import pytest
from hypothesis import given, strategies as st

from polydyn import (QQ, QT, DomainError, RatFunc, T, rat, rat_normalize,
                     roots_of_unity_q, multiplicative_order, Poly)

rationals = st.builds(rat, st.integers(-40, 40), st.integers(1, 24))
nonzero_rationals = rationals.filter(lambda x: x != 0)


def test_rat_normalize_examples():
    assert rat_normalize(2, 4) == rat(1, 2)
    assert rat_normalize(3, -6) == rat(-1, 2)
    z = rat_normalize(0, 7)
    assert z == 0 and z.denominator == 1


def test_rat_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        rat_normalize(1, 0)


@pytest.mark.parametrize("s,expected", [
    (3, [1]),
    (2, [1, -1]),
    (0, [1]),
    (1, [1]),
    (6, [1, -1]),
])
def test_roots_of_unity_q(s, expected):
    assert roots_of_unity_q(s) == [rat(e) for e in expected]


def test_roots_of_unity_power_identity():
    for s in range(1, 13):
        for g in QQ.roots_of_unity(s):
            assert g ** s == 1


def test_count_roots_of_unity():
    assert QQ.count_roots_of_unity() == 2
    assert QT.count_roots_of_unity() == 2


def test_multiplicative_order():
    assert multiplicative_order(rat(-1), 5) == 2
    assert multiplicative_order(rat(1), 5) == 1
    assert multiplicative_order(rat(2), 10) is None
    with pytest.raises(DomainError):
        multiplicative_order(rat(0), 5)
    assert multiplicative_order(QT.coerce(-1), 5) == 2


@given(rationals, nonzero_rationals)
def test_rational_arithmetic_exact(a, b):
    assert (a + b) - b == a
    assert (a * b) / b == a


def test_qq_nth_roots():
    assert QQ.nth_roots(rat(4), 2) == [rat(2), rat(-2)]
    assert QQ.nth_roots(rat(-8, 27), 3) == [rat(-2, 3)]
    assert QQ.nth_roots(rat(2), 2) == []
    assert QQ.nth_roots(rat(-4), 2) == []
    assert QQ.nth_roots(rat(0), 5) == [rat(0)]
    assert QQ.nth_roots(rat(7), 1) == [rat(7)]


small_t_polys = st.lists(st.integers(-5, 5), min_size=1, max_size=3).map(
    lambda cs: Poly(cs, QQ))
ratfuncs = st.builds(
    lambda n, d: RatFunc(n, d),
    small_t_polys,
    small_t_polys.filter(lambda p: not p.is_zero()))


@given(ratfuncs, ratfuncs, ratfuncs)
def test_ratfunc_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@given(ratfuncs.filter(lambda x: not x.is_zero()))
def test_ratfunc_inverses(a):
    assert a * (1 / a) == QT.one
    assert a - a == QT.zero


def test_ratfunc_normalization_invariants():
    f = RatFunc(Poly((2, 2), QQ), Poly((4, 0, 4), QQ))  # (2t+2)/(4t^2+4)
    assert f.den.is_monic()
    from polydyn import poly_gcd
    assert poly_gcd(f.num, f.den).degree() == 0
    g = RatFunc(Poly((0, 1), QQ), Poly((1, 1), QQ))
    assert g.evaluate(rat(-1)) is None
    assert g.evaluate(rat(1)) == rat(1, 2)


def test_qt_roots_of_unity_are_constants():
    assert QT.roots_of_unity(4) == [QT.one, QT.coerce(-1)]
    assert QT.roots_of_unity(3) == [QT.one]
    assert all(g ** 4 == QT.one for g in QT.roots_of_unity(4))


def test_qt_nth_roots():
    t2 = T * T
    roots = QT.nth_roots(t2, 2)
    assert roots == [T, -T]
    assert QT.nth_roots(T, 2) == []
    cube = (T + 1) ** 3 / 8
    assert QT.nth_roots(cube, 3) == [(T + 1) / 2]


def test_is_rational_constant():
    assert QQ.is_rational_constant(rat(5, 3))
    assert QT.is_rational_constant(QT.coerce(7))
    assert not QT.is_rational_constant(T)
