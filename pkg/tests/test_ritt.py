import math

import pytest

from polydyn import (DomainError, LinearPoly, Poly, QQ, compose, iterate, parse,
                     rat, dickson, dickson_scaling_check, StandardPairSpec,
                     standard_pair, ritt_form, minimal_common_iterate,
                     iterate_exponent, reduction_search, bt_shape_search)

from _support import rng, random_poly, random_linear

P = parse


def test_dickson_small_cases():
    assert dickson(0, 5) == Poly((2,), QQ)
    assert dickson(1, 5) == P("x")
    assert dickson(2, rat(7)) == P("x^2 - 14")        # (u+v)^2 - 2uv
    assert dickson(3, 1) == P("x^3 - 3*x")            # (u+v)^3 - 3uv(u+v)
    assert dickson(5, 0) == P("x^5")


def test_dickson_functional_equation_spot():
    r = rng(30)
    for _ in range(25):
        u = rat(r.randint(-9, 9), r.randint(1, 5))
        v = rat(r.randint(-9, 9), r.randint(1, 5))
        n = r.randint(0, 12)
        assert dickson(n, u * v)(u + v) == u ** n + v ** n


def test_dickson_is_monic_of_degree_n():
    for n in range(1, 12):
        d = dickson(n, rat(3, 5))
        assert d.degree() == n and d.is_monic()


def test_dickson_scaling_identity():
    assert dickson_scaling_check(3, rat(2))
    assert dickson_scaling_check(1, rat(5))
    assert dickson_scaling_check(4, rat(-1))
    assert dickson_scaling_check(7, rat(-3, 2))
    with pytest.raises(DomainError):
        dickson_scaling_check(3, rat(0))


def test_standard_pairs():
    assert standard_pair(StandardPairSpec(kind=1)) == (P("x"), P("x"))

    f1, g1 = standard_pair(StandardPairSpec(kind=2, c=LinearPoly(3, -1)))
    assert f1 == P("x^2") and g1 == P("3*x^2 - 1")

    f1, g1 = standard_pair(StandardPairSpec(kind=3, alpha=rat(1), beta=rat(2)))
    assert f1 == P("x^2 - 2") and g1 == P("1/2*x^2 - 2")

    f1, g1 = standard_pair(StandardPairSpec(kind=4, n=3, alpha=rat(1)))
    assert f1 == P("x^3 - 3*x")
    assert g1 == -compose(f1, P("1/2*x"))  # cos(pi/3) = 1/2

    with pytest.raises(DomainError, match="requires extension field"):
        standard_pair(StandardPairSpec(kind=4, n=5, alpha=rat(1)))


def test_ritt_form_examples():
    form = ritt_form(P("-x^3-x"), P("x^3+x"))
    assert form is not None
    assert (form.beta, form.gamma, form.r, form.s) == (0, -1, 1, 2)
    assert form.H == P("x^3+x")

    f = P("2*x^4 - x + 3")
    form = ritt_form(f, f)
    assert form is not None and form.gamma == 1

    assert ritt_form(P("x^3+1"), P("x^3+x")) is None
    # correct shape but gamma^s != 1
    assert ritt_form(P("2*x^3+2*x"), P("x^3+x")) is None


def test_ritt_form_identities():
    r = rng(31)
    x = P("x")
    for _ in range(20):
        G = random_poly(r, r.randint(2, 4))
        form = ritt_form(G, G)
        assert form is not None
        assert compose(form.H, x + form.beta) - form.beta == G


def test_minimal_common_iterate_examples():
    assert minimal_common_iterate(P("x^3+x"), P("-x^3-x")) == 2
    f = P("3*x^5 - x^3 + 2*x")
    assert minimal_common_iterate(f, f) == 1
    assert minimal_common_iterate(P("x^2"), P("x^2+1")) is None
    with pytest.raises(DomainError):
        minimal_common_iterate(P("x^2"), P("x^3"))


def test_minimal_common_iterate_verifies_by_composition():
    F, G = P("x^3+x"), P("-x^3-x")
    assert iterate(F, 2) == iterate(G, 2)
    assert iterate(F, 1) != iterate(G, 1)


def test_rittprop_constructed_pairs():
    # H odd, gamma = -1: F = -beta + gamma*H(x+beta), G = -beta + H(x+beta)
    # share their square; the minimal n matches brute force.
    r = rng(32)
    x = P("x")
    for _ in range(10):
        coeffs = [0] * 6
        for i in (1, 3, 5):
            coeffs[i] = r.randint(-2, 2)
        if coeffs[5] == 0:
            coeffs[5] = 1
        H = Poly(coeffs, QQ)
        beta = rat(r.randint(-2, 2))
        G = compose(H, x + beta) - beta
        F = -compose(H, x + beta) - beta
        mci = minimal_common_iterate(F, G)
        brute = next((n for n in range(1, 5) if iterate(F, n) == iterate(G, n)),
                     None)
        assert mci == brute == 2
        d, n = F.degree(), mci
        assert (d ** n - 1) // (d - 1) % 2 == 0


def test_iterate_exponent_examples():
    assert iterate_exponent(2, 3) == 2
    assert iterate_exponent(1, 7) == 1
    assert iterate_exponent(5, 2) == 4
    with pytest.raises(DomainError):
        iterate_exponent(6, 2)


def test_iterate_exponent_exhaustive_bounds():
    for m in range(1, 21):
        for d in range(2, 11):
            if math.gcd(m, d) != 1:
                continue
            n = iterate_exponent(m, d)
            assert n <= m
            assert (d ** n - 1) // (d - 1) % m == 0


def test_reduction_search():
    f, g = P("x^3+x"), P("-x^3-x")
    r, ell = reduction_search(f, g, 3)
    # g∘(-x) = f, so the least r is already 1
    assert r == 1 and compose(iterate(g, 1), ell.to_poly()) == f
    h = P("x^2 - 1")
    assert reduction_search(h, h, 2) == (1, LinearPoly(1, 0))
    # 4*(x/2)^2 = x^2, so (x^2, 4x^2) resolves immediately ...
    assert reduction_search(P("x^2"), P("4*x^2"), 3) == (1, LinearPoly(rat(1, 2), 0))
    # ... while (x^2, 2x^2) needs an irrational scaling at every r
    assert reduction_search(P("x^2"), P("2*x^2"), 3) is None


def test_bt_shape_search_powers():
    shapes = bt_shape_search(P("x^4"), P("x^4"), 4)
    keys = {(s.H.degree(), s.H == P("x^2"), s.H == P("x^4")) for s in shapes}
    assert any(s.H == P("x^4") and s.E.degree() == 1 for s in shapes)
    assert any(s.H == P("x^2") and s.E == P("x^2") for s in shapes)
    for s in shapes:
        assert compose(s.E, compose(s.H, s.a.to_poly())) == P("x^4")
        assert compose(s.E, compose(s.c.to_poly(),
                                    compose(s.H, s.b.to_poly()))) == P("x^4")


def test_bt_shape_search_dickson_instance():
    E = P("x^2+3")
    F = compose(E, compose(dickson(3, 1), P("x+1")))
    G = compose(E, compose(P("-x"), compose(dickson(3, 1), P("x"))))
    shapes = bt_shape_search(F, G, 6)
    assert shapes
    for s in shapes:
        assert compose(s.E, compose(s.H, s.a.to_poly())) == F
        assert compose(s.E, compose(s.c.to_poly(),
                                    compose(s.H, s.b.to_poly()))) == G


def test_bt_shape_search_empty():
    assert bt_shape_search(P("x^4+x^3+1"), P("x^4"), 4) == []
