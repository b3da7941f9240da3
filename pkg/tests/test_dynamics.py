import decimal
from decimal import Decimal

import pytest

from polydyn import (DomainError, LinearPoly, Orbit, parse, rat, weil_height,
                     linear_height_bound, height_control_constant,
                     escape_threshold, canonical_height, is_preperiodic,
                     orbit_intersection, diagonal_hits, line_periodicity,
                     height_growth_report, linear_case_analysis)

from _support import rng, orbit_preperiodic_quadratic

P = parse


def _ln(n, prec=50):
    with decimal.localcontext(decimal.Context(prec=prec)):
        return Decimal(n).ln()


def test_weil_height_examples():
    assert weil_height(rat(3, 2)) == _ln(3)
    assert weil_height(0) == 0
    assert weil_height(-7) == _ln(7)
    assert weil_height(rat(2, 5)) == _ln(5)


def test_linear_height_bound_holds_on_samples():
    for ell in (LinearPoly(1, 0), LinearPoly(2, 1), LinearPoly(1, 10 ** 6),
                LinearPoly(rat(-3, 7), rat(2, 5))):
        c = linear_height_bound(ell)
        assert c >= 0
        for k in range(-100, 101):
            x = rat(k, 7)
            assert abs(weil_height(ell(x)) - weil_height(x)) <= c
    # the shift by 10^6 is realized at x = 0
    assert linear_height_bound(LinearPoly(1, 10 ** 6)) >= _ln(10 ** 6)


def test_canonical_height_squaring_map():
    est = canonical_height(P("x^2"), 2, 10)
    assert abs(est.value - _ln(2)) < Decimal("1e-40")
    assert est.iterations_used == 10
    assert canonical_height(P("x^2"), 1, 10).value == 0


def test_canonical_height_cauchy_gaps():
    f = P("x^2+1")
    for k in range(4, 12):
        a = canonical_height(f, 1, k)
        b = canonical_height(f, 1, k + 1)
        assert abs(a.value - b.value) <= a.error_bound


def test_canonical_height_scaling_relation():
    # estimate-level form of h-hat(f^j(x)) = d^j * h-hat(x); both sides are
    # h(f^8(x)) divided by different powers of 2, so they agree to the last
    # unit of the 50-digit working precision
    f = P("x^2 - 3")
    x = rat(1, 2)
    fx = f(f(x))
    a = canonical_height(f, fx, 6)
    b = canonical_height(f, x, 8)
    with decimal.localcontext(decimal.Context(prec=60)):
        assert abs(a.value - b.value * 4) < Decimal("1e-45")


def test_canonical_height_near_weil_height():
    f = P("x^2+1")
    C = height_control_constant(f)
    for x in (rat(0), rat(2), rat(-5, 3), rat(7, 2)):
        est = canonical_height(f, x, 8)
        assert abs(weil_height(x) - est.value) <= C + est.error_bound


def test_escape_threshold_forces_growth():
    r = rng(40)
    for f in (P("x^2+1"), P("x^2 - 2"), P("x^3 - x + 1"), P("2*x^2 - 1/2")):
        B = escape_threshold(f)
        for _ in range(25):
            x = rat(r.randint(-500, 500), r.randint(1, 60))
            if weil_height(x) > B:
                assert weil_height(f(x)) > weil_height(x)


def test_is_preperiodic_examples():
    assert is_preperiodic(P("x^2-1"), 0) is True
    assert is_preperiodic(P("x^2+1"), 0) is False
    assert is_preperiodic(P("x^2"), 1) is True
    assert is_preperiodic(P("x^2"), rat(1, 2)) is False
    with pytest.raises(DomainError):
        is_preperiodic(P("x+1"), 0)


def test_is_preperiodic_matches_orbit_enumeration():
    for c in (0, 1, -1, -2):
        for num, den in ((0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1),
                         (1, 2), (-1, 2)):
            x = rat(num, den)
            decided = is_preperiodic(P("x^2") + c, x)
            assert decided is not None
            assert decided == orbit_preperiodic_quadratic(c, x)


def test_preperiodic_implies_tiny_canonical_height():
    for f_text, x in (("x^2-1", 0), ("x^2", 1), ("x^2-2", 2)):
        f = P(f_text)
        if is_preperiodic(f, x):
            est = canonical_height(f, x, 20)
            assert est.value <= est.error_bound


def test_orbit_memoization():
    orb = Orbit(P("x^2+1"), 0)
    assert orb.prefix(4) == [0, 1, 2, 5, 26]
    assert orb.point(2) == 2


def test_orbit_intersection_power_towers():
    pairs = orbit_intersection(P("x^2"), P("x^2"), 2, 4, 6, 6)
    assert pairs == [(m + 1, m) for m in range(6)]


def test_orbit_intersection_disjoint():
    # genuinely disjoint orbit segments: 0,1,2,5,26,... vs 0,3,12,147,...
    # (intersect only at index 0 on both sides)
    pairs = orbit_intersection(P("x^2+1"), P("x^2+3"), 0, 0, 8, 8)
    assert pairs == [(0, 0)]
    pairs = orbit_intersection(P("x^2+1"), P("x^2+3"), 1, 1, 8, 8)
    assert pairs == [(0, 0)]


def test_orbit_intersection_symmetry():
    f, g = P("x^2 - 1"), P("x^2 - 2")
    fw = orbit_intersection(f, g, rat(1, 2), rat(3, 2), 7, 9)
    bw = orbit_intersection(g, f, rat(3, 2), rat(1, 2), 9, 7)
    assert {(m, n) for m, n in fw} == {(n, m) for m, n in bw}


def test_diagonal_hits_examples():
    assert diagonal_hits(P("x^3+x"), P("-x^3-x"), 0, 0, 7) == set(range(1, 8))
    f = P("x^2 - 1")
    assert diagonal_hits(f, f, rat(1, 3), rat(1, 3), 5) == set(range(1, 6))
    assert diagonal_hits(P("x^2"), P("x^2+1"), 1, 1, 10) == set()


def test_line_periodicity_examples():
    f = P("x^2 - 7")
    assert line_periodicity(f, f, 1, 0, 3) == 1
    # g∘ell = ell∘f first holds at k = 2 for the odd flip pair
    assert line_periodicity(P("x^3+x"), P("-x^3-x"), -1, 0, 5) == 2
    assert line_periodicity(P("x^2"), P("x^2+1"), 1, 0, 5) is None
    with pytest.raises(DomainError):
        line_periodicity(f, f, 0, 1, 3)


def test_line_periodicity_matches_common_iterate_on_diagonal():
    from polydyn import minimal_common_iterate
    for f_text, g_text in (("x^3+x", "-x^3-x"), ("x^2", "x^2"),
                           ("x^2", "x^2+1")):
        f, g = P(f_text), P(g_text)
        assert line_periodicity(f, g, 1, 0, 4) == minimal_common_iterate(f, g)


def test_height_growth_report():
    rep = height_growth_report(P("x^3"), P("x^2"), 2, 2, 6)
    assert rep.dominant == "f" and rep.separated_at == 1
    assert rep.rows[3][1] == _ln(2 ** 27)

    rep = height_growth_report(P("x+1"), P("x^2"), 2, 2, 6)
    assert rep.dominant == "g" and rep.separated_at is not None

    f = P("x^2+2")
    rep = height_growth_report(f, f, 3, 3, 5)
    assert rep.separated_at is None and rep.dominant is None


def test_linear_case_analysis():
    rep = linear_case_analysis(LinearPoly(2, 0), LinearPoly(2, 0), 1, 10)
    assert rep.hits == list(range(1, 11))
    assert rep.fixed_points_match is True and rep.case == 1

    rep = linear_case_analysis(LinearPoly(1, 1), LinearPoly(2, 0), 1, 20)
    assert rep.hits == [1]  # n + 1 = 2^n only at n = 1
    assert rep.case == 2 and rep.case2_divergence
    assert rep.xhat is None and rep.yhat == 1

    rep = linear_case_analysis(LinearPoly(2, 0), LinearPoly(3, 0), 1, 20)
    assert rep.hits == [] and rep.fixed_points_match is True
    assert not rep.case2_divergence
