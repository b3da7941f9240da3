"""Orbits, Weil and canonical heights, preperiodicity, and intersection harnesses.

Orbit points are exact rationals; heights are decimal logarithms computed
at a configurable precision (50 significant digits by default, far beyond
what the coarse error constants need).  Strict height comparisons are done
on the underlying integers max(|p|, q), never on rounded logs.
"""

import decimal
from dataclasses import dataclass
from decimal import Decimal
from typing import Optional

from .errors import DomainError
from ._scalar import as_int_pair
from .fields import QQ

DEFAULT_PRECISION = 50


def _ctx(prec):
    return decimal.Context(prec=prec)


def _magnitude(x):
    """max(|numerator|, denominator) as a Python int; 1 for x = 0."""
    p, q = as_int_pair(x)
    return max(abs(p), q)


def weil_height(x, prec=DEFAULT_PRECISION):
    """h(p/q) = log max(|p|, q) for p/q in lowest terms."""
    m = _magnitude(QQ.coerce(x))
    with decimal.localcontext(_ctx(prec)):
        return Decimal(m).ln()


def linear_height_bound(ell, prec=DEFAULT_PRECISION):
    """A constant c with |h(ell(x)) - h(x)| <= c for all rational x.

    c = h(a) + h(b) + h(1/a) + 2 log 2, from the sum/product height bounds.
    """
    with decimal.localcontext(_ctx(prec)):
        return (weil_height(ell.a, prec) + weil_height(ell.b, prec)
                + weil_height(1 / ell.a, prec) + 2 * Decimal(2).ln())


def height_control_constant(f, prec=DEFAULT_PRECISION):
    """C bounding sup over rational y of |h(f(y)) - deg(f)*h(y)|.

    C = log(d+1) + max_i h(a_i) + h(lc)/(d-1) + log 2.  Correctness is
    property-tested (heights must strictly increase beyond the escape
    threshold derived from C).
    """
    if f.is_zero() or f.degree() < 2:
        raise DomainError("height control constant needs degree >= 2")
    d = f.degree()
    with decimal.localcontext(_ctx(prec)):
        hmax = max(weil_height(c, prec) for c in f.coeffs)
        return (Decimal(d + 1).ln() + hmax
                + weil_height(f.lc(), prec) / (d - 1) + Decimal(2).ln())


def escape_threshold(f, prec=DEFAULT_PRECISION):
    """B with h(y) > B implying h(f(y)) > h(y): heights escape past it."""
    d = f.degree()
    with decimal.localcontext(_ctx(prec)):
        return 2 * height_control_constant(f, prec) / (d - 1) + 1


@dataclass(frozen=True)
class HeightEstimate:
    value: Decimal
    error_bound: Decimal  # C / d^k; |value - canonical height| <= this
    iterations_used: int


def canonical_height(f, x, k, prec=DEFAULT_PRECISION):
    """The k-th canonical-height estimate h(f^k(x)) / d^k with its error bound."""
    if f.is_zero() or f.degree() < 2:
        raise DomainError("canonical height needs degree >= 2")
    if k < 1:
        raise DomainError("k must be positive")
    cur = QQ.coerce(x)
    for _ in range(k):
        cur = f(cur)
    with decimal.localcontext(_ctx(prec)):
        dk = Decimal(f.degree()) ** k
        value = weil_height(cur, prec) / dk
        bound = height_control_constant(f, prec) / dk
    return HeightEstimate(value, bound, k)


def is_preperiodic(f, x, max_steps=10000, prec=DEFAULT_PRECISION):
    """Exact preperiodicity decision: True, False, or None when undecided.

    True on a repeated orbit value; False once the height passes the escape
    threshold (beyond it heights strictly increase, so no return is
    possible); None if neither happens within max_steps.
    """
    if f.is_zero() or f.degree() < 2:
        raise DomainError("preperiodicity test needs degree >= 2")
    B = escape_threshold(f, prec)
    with decimal.localcontext(_ctx(prec)):
        # smallest integer magnitude certainly above the threshold
        ceiling = int(B.exp().to_integral_value(rounding=decimal.ROUND_CEILING)) + 1
    cur = QQ.coerce(x)
    seen = set()
    for _ in range(max_steps):
        if cur in seen:
            return True
        seen.add(cur)
        if _magnitude(cur) >= ceiling:
            return False
        cur = f(cur)
    return None


class Orbit:
    """Memoized forward orbit x0, f(x0), f^2(x0), ...

    Points are appended by whichever call first needs them; share freely
    for reading, extend from a single task.
    """

    def __init__(self, f, x0):
        if f.is_zero():
            raise DomainError("orbit map must be nonzero")
        self.map = f
        self._points = [QQ.coerce(x0)]

    @property
    def start(self):
        return self._points[0]

    def point(self, k):
        while len(self._points) <= k:
            self._points.append(self.map(self._points[-1]))
        return self._points[k]

    def prefix(self, k):
        """Points x0 .. f^k(x0) as a list."""
        self.point(k)
        return self._points[: k + 1]


def orbit_intersection(f, g, x0, y0, M, N):
    """All (m, n) with 0 <= m <= M, 0 <= n <= N and f^m(x0) = g^n(y0).

    Index 0 is included on both sides: orbits are sets containing their
    starting point.
    """
    xs = Orbit(f, x0).prefix(M)
    ys = Orbit(g, y0).prefix(N)
    where = {}
    for m, v in enumerate(xs):
        where.setdefault(v, []).append(m)
    out = []
    for n, v in enumerate(ys):
        for m in where.get(v, ()):
            out.append((m, n))
    return sorted(out)


def diagonal_hits(f, g, x0, y0, N):
    """{n : 1 <= n <= N, f^n(x0) = g^n(y0)}; n runs over positive integers."""
    xs = Orbit(f, x0).prefix(N)
    ys = Orbit(g, y0).prefix(N)
    return {n for n in range(1, N + 1) if xs[n] == ys[n]}


def line_periodicity(f, g, alpha, beta, k_max):
    """Least k <= k_max with g^k ∘ ell = ell ∘ f^k for ell = alpha*X + beta."""
    from .poly import Poly, compose, iterate
    if f.is_zero() or g.is_zero() or f.degree() < 1 or g.degree() < 1:
        raise DomainError("line periodicity needs nonconstant polynomials")
    field = f.field
    alpha = field.coerce(alpha)
    if alpha == field.zero:
        raise DomainError("alpha must be nonzero")
    ell = Poly((beta, alpha), field)
    for k in range(1, k_max + 1):
        if compose(iterate(g, k), ell) == compose(ell, iterate(f, k)):
            return k
    return None


@dataclass
class HeightGrowthReport:
    rows: list  # (k, h(f^k(x0)), h(g^k(y0)))
    separated_at: Optional[int]  # least k* with one side strictly ahead through k_max
    dominant: Optional[str]  # "f" or "g"


def height_growth_report(f, g, x0, y0, k_max, prec=DEFAULT_PRECISION):
    """Exact heights of both orbits per step, with a separation verdict.

    The verdict is only meaningful for deg(f) != deg(g); strictness is
    decided on the integer magnitudes, not on rounded logarithms.
    """
    if f.is_zero() or g.is_zero() or f.degree() < 1 or g.degree() < 1:
        raise DomainError("height growth needs nonconstant polynomials")
    xs = Orbit(f, x0).prefix(k_max)
    ys = Orbit(g, y0).prefix(k_max)
    mf = [_magnitude(v) for v in xs]
    mg = [_magnitude(v) for v in ys]
    rows = [(k, weil_height(xs[k], prec), weil_height(ys[k], prec))
            for k in range(k_max + 1)]
    separated_at = dominant = None
    if f.degree() != g.degree():
        def side(k):
            return (mf[k] > mg[k]) - (mf[k] < mg[k])
        last = side(k_max)
        if last != 0:
            k_star = k_max
            while k_star > 0 and side(k_star - 1) == last:
                k_star -= 1
            separated_at = k_star
            dominant = "f" if last > 0 else "g"
    return HeightGrowthReport(rows, separated_at, dominant)


@dataclass
class LinearCaseReport:
    xhat: object  # x0 + beta/(alpha-1), None when alpha = 1
    yhat: object  # x0 + delta/(gamma-1), None when gamma = 1
    fixed_points_match: Optional[bool]
    hits: list  # n in 1..N with f^n(x0) = g^n(x0)
    case: int  # 1: neither slope is 1; 2: at least one is
    case2_divergence: bool  # exactly one slope is 1: growth orders differ


def linear_case_analysis(f, g, x0, N):
    """Classify the diagonal hits of two linear maps started at x0.

    When both slopes differ from 1 the orbits are alpha^n*xhat - shift
    exponentials and the hit set is controlled by xhat = yhat; when exactly
    one slope is 1 the two sides grow at different orders (the divergence
    flag), so hits are finite.
    """
    x0 = QQ.coerce(x0)
    alpha, beta = f.a, f.b
    gamma, delta = g.a, g.b
    one = QQ.one
    xhat = x0 + beta / (alpha - one) if alpha != one else None
    yhat = x0 + delta / (gamma - one) if gamma != one else None
    match = (xhat == yhat) if (xhat is not None and yhat is not None) else None
    hits = []
    u = v = x0
    for n in range(1, N + 1):
        u, v = f(u), g(v)
        if u == v:
            hits.append(n)
    case = 1 if (alpha != one and gamma != one) else 2
    return LinearCaseReport(
        xhat=xhat,
        yhat=yhat,
        fixed_points_match=match,
        hits=hits,
        case=case,
        case2_divergence=(alpha == one) != (gamma == one),
    )
