"""Common-iterate classification, Dickson polynomials, and shape searches.

Two polynomials of the same degree share an iterate exactly when they are
a twist pair F = -beta + gamma*H(x+beta), G = -beta + H(x+beta) with
gamma^s = 1 and gamma^((d^n-1)/(d-1)) = 1; over Q the number of roots of
unity caps the minimal such n at 2, so the search is a short exact loop
with the structural form kept as a cross-check.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import DomainError
from .fields import QQ
from .ratfunc import RatFunc, QT
from .poly import Poly, LinearPoly, compose, iterate, x_poly, \
    exponent_structure, solve_linear_factor_right, solve_linear_factor_right_all
from .decompose import split, divisors


def dickson(n, alpha, field=None):
    """Dickson polynomial D_n(X, alpha): monic degree n, D_n(U+V, UV) = U^n + V^n.

    Built by the three-term recurrence D_0 = 2, D_1 = X,
    D_k = X*D_(k-1) - alpha*D_(k-2); the functional equation is checked by
    grid evaluation in the test suite rather than assumed.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if field is None:
        field = QT if isinstance(alpha, RatFunc) else QQ
    alpha = field.coerce(alpha)
    prev = Poly((2,), field)
    if n == 0:
        return prev
    cur = x_poly(field)
    x = cur
    for _ in range(n - 1):
        prev, cur = cur, x * cur - alpha * prev
    return cur


def dickson_scaling_check(n, alpha, field=None):
    """Exact check of alpha^n * D_n(X, 1) = D_n(alpha*X, alpha^2); always true."""
    if field is None:
        field = QT if isinstance(alpha, RatFunc) else QQ
    alpha = field.coerce(alpha)
    if alpha == field.zero:
        raise DomainError("alpha must be nonzero")
    lhs = alpha ** n * dickson(n, field.one, field)
    rhs = compose(dickson(n, alpha ** 2, field), Poly((0, alpha), field))
    return lhs == rhs


@dataclass(frozen=True)
class StandardPairSpec:
    """Shape data for the equal-degree standard pairs (kinds 1-4)."""

    kind: int
    n: Optional[int] = None
    alpha: object = None
    beta: object = None
    c: Optional[LinearPoly] = None


_COS_PI_OVER = {1: (-1, 1), 2: (0, 1), 3: (1, 2)}  # cos(pi/n) as p/q


def standard_pair(spec):
    """The pair (F1, G1) named by spec, over Q.

    Kind 4 exists over Q only for n in {1, 2, 3}, where cos(pi/n) is
    rational; other n raise "requires extension field".
    """
    x = x_poly(QQ)
    if spec.kind == 1:
        return x, x
    if spec.kind == 2:
        if spec.c is None:
            raise DomainError("kind 2 needs the linear parameter c")
        sq = x ** 2
        return sq, compose(spec.c.to_poly(), sq)
    if spec.kind == 3:
        alpha, beta = QQ.coerce(spec.alpha), QQ.coerce(spec.beta)
        if alpha == QQ.zero or beta == QQ.zero:
            raise DomainError("kind 3 needs nonzero alpha and beta")
        return dickson(2, alpha) / alpha, dickson(2, beta) / beta
    if spec.kind == 4:
        if spec.n is None or spec.alpha is None:
            raise DomainError("kind 4 needs n and alpha")
        if spec.n not in _COS_PI_OVER:
            raise DomainError("requires extension field: cos(pi/%d) is irrational"
                              % spec.n)
        p, q = _COS_PI_OVER[spec.n]
        cos = QQ.coerce(p) / QQ.coerce(q)
        first = dickson(spec.n, spec.alpha)
        second = -compose(first, Poly((0, cos), QQ))
        return first, second
    raise DomainError("unknown standard-pair kind %r" % (spec.kind,))


@dataclass(frozen=True)
class RittForm:
    beta: object
    gamma: object
    H: Poly
    r: int
    s: int


def ritt_form(F, G):
    """The twist data (beta, gamma, H, r, s) classifying F against G, or None.

    beta is the center that removes H's X^(d-1) term (the negated twist
    shift of G, since here the substitution is X - beta); both identities
    F = -beta + gamma*H(x+beta) and G = -beta + H(x+beta) are verified
    exactly, along with gamma^s = 1 when s >= 1.
    """
    if F.is_zero() or G.is_zero() or F.degree() != G.degree() or F.degree() < 2:
        raise DomainError("ritt_form needs equal degrees >= 2")
    field = G.field
    d = G.degree()
    beta = G.coeff(d - 1) / (field.coerce(d) * G.lc())
    x = x_poly(field)
    H = compose(G, x - beta) + beta
    gamma = F.lc() / G.lc()
    if gamma * compose(H, x + beta) - beta != F:
        return None
    r, s = exponent_structure(H)
    if s >= 1 and gamma ** s != field.one:
        return None
    return RittForm(beta, gamma, H, r, s)


def minimal_common_iterate(F, G):
    """Least n <= N_K with F^n = G^n (exact iterate comparison), or None.

    N_K is the number of roots of unity in the coefficient field (2 for Q
    and Q(t)).  A found n is cross-checked against the classification
    criterion gamma^((d^n-1)/(d-1)) = 1.
    """
    if F.is_zero() or G.is_zero() or F.degree() != G.degree() or F.degree() < 2:
        raise DomainError("minimal_common_iterate needs equal degrees >= 2")
    field = F.field
    d = F.degree()
    for n in range(1, field.count_roots_of_unity() + 1):
        if iterate(F, n) == iterate(G, n):
            form = ritt_form(F, G)
            exponent = (d ** n - 1) // (d - 1)
            assert form is not None and form.gamma ** exponent == field.one, \
                "iterate equality without the classification criterion"
            return n
    return None


def _factorize(m):
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            t = 0
            while m % p == 0:
                m //= p
                t += 1
            out.append((p, t))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


def _order_mod(d, modulus):
    cur = d % modulus
    for e in range(1, modulus + 1):
        if cur == 1:
            return e
        cur = cur * d % modulus
    raise DomainError("%d is not invertible modulo %d" % (d, modulus))


def iterate_exponent(m, d):
    """The n = prod q_p with m | (d^n - 1)/(d - 1) and n <= m.

    For each prime power p^t || m: q_p = p^t when p | d-1, otherwise the
    order of d in (Z/p^t)*.  Requires gcd(m, d) = 1.
    """
    if m < 1:
        raise DomainError("m must be positive")
    if d < 2:
        raise DomainError("d must be at least 2")
    if gcd(m, d) != 1:
        raise DomainError("m and d must be coprime")
    n = 1
    for p, t in _factorize(m):
        pt = p ** t
        n *= pt if (d - 1) % p == 0 else _order_mod(d, pt)
    return n


def reduction_search(f, g, r_max):
    """Least r <= r_max with f^r = g^r ∘ ell for some linear ell, with witness."""
    if f.is_zero() or g.is_zero() or f.degree() != g.degree() or f.degree() < 2:
        raise DomainError("reduction_search needs equal degrees >= 2")
    for r in range(1, r_max + 1):
        ell = solve_linear_factor_right(iterate(f, r), iterate(g, r))
        if ell is not None:
            return r, ell
    return None


@dataclass(frozen=True)
class BTShape:
    E: Poly
    H: Poly
    a: LinearPoly
    b: LinearPoly
    c: LinearPoly

    def _key(self):
        return (self.E.coeffs, self.H.coeffs, (self.a.a, self.a.b),
                (self.b.a, self.b.b), (self.c.a, self.c.b))


def _linear_match(H, W):
    """All linear (u, v) with H∘v = u∘W, assuming H has no X^(n-1) term.

    v = a(X + c) with c aligning the X^(n-1) terms; the slope a is pinned
    by the highest lower-order term of H (an exact root extraction), or is
    a free gauge when H is a pure power, in which case the a = 1
    representative is returned.
    """
    n = H.degree()
    if W.degree() != n or n < 1:
        return []
    field = H.field
    c = W.coeff(n - 1) / (field.coerce(n) * W.lc())
    V = compose(W, x_poly(field) - c)
    interior = range(1, n)
    constrained = [i for i in interior if H.coeff(i) != field.zero]
    for i in interior:
        if H.coeff(i) == field.zero and V.coeff(i) != field.zero:
            return []
    if not constrained:
        candidates = [field.one]
    else:
        i0 = max(constrained)
        if V.coeff(i0) == field.zero:
            return []
        candidates = field.nth_roots(H.coeff(i0) * W.lc() / (H.lc() * V.coeff(i0)),
                                     n - i0)
    out = []
    for a in candidates:
        an = a ** n
        if any(H.coeff(i) * a ** i * W.lc() != H.lc() * an * V.coeff(i)
               for i in constrained):
            continue
        p = H.lc() * an / W.lc()
        q = H.coeff(0) - p * V.coeff(0)
        u = LinearPoly(p, q, field)
        v = LinearPoly(a, a * c, field)
        if compose(H, v.to_poly()) == p * W + q:
            out.append((u, v))
    return out


def bt_shape_search(F, G, n_max):
    """All shapes F = E∘H∘a, G = E∘c∘H∘b with H in {X^n, D_n(X,1)}, n | deg F.

    For each candidate inner degree the canonical splittings of F and G are
    matched against H through linear changes solved exactly; every returned
    quintuple recomposes both inputs, and a quintuple with a free scaling
    gauge is reported once.
    """
    if F.is_zero() or G.is_zero() or F.degree() != G.degree() or F.degree() < 2:
        raise DomainError("bt_shape_search needs equal degrees >= 2")
    if n_max < 1:
        raise DomainError("n_max must be positive")
    field = F.field
    D = F.degree()
    out = []
    seen = set()
    for n in divisors(D):
        if n < 2 or n > n_max:
            continue
        sF = split(F, n)
        sG = split(G, n)
        if sF is None or sG is None:
            continue
        for H in (x_poly(field) ** n, dickson(n, field.one, field)):
            for u, v in _linear_match(H, sF.inner):
                E_hat = compose(sF.outer, u.inverse().to_poly())
                a_hat = v
                for ell in solve_linear_factor_right_all(sG.outer, E_hat):
                    W = compose(ell.to_poly(), sG.inner)
                    for u2, v2 in _linear_match(H, W):
                        shape = BTShape(E_hat, H, a_hat, v2, u2.inverse())
                        lhs = compose(shape.E, compose(shape.H, shape.a.to_poly()))
                        rhs = compose(shape.E, compose(shape.c.to_poly(),
                                      compose(shape.H, shape.b.to_poly())))
                        if lhs == F and rhs == G and shape._key() not in seen:
                            seen.add(shape._key())
                            out.append(shape)
    return out
