"""Exact scalar arithmetic: the rational field and the coefficient-field abstraction.

A coefficient field here is a singleton object exposing zero/one, coercion,
roots-of-unity enumeration, exact n-th roots, and a test for "lies in Q".
Two instances ship: QQ (this module) and QT = Q(t) (ratfunc module).
"""

import numbers

from .errors import DomainError
from ._scalar import Rat, rat, int_nth_root, BACKEND  # noqa: F401  (BACKEND re-exported)


def rat_normalize(n, d):
    """Reduced rational n/d with positive denominator; zero is 0/1."""
    if d == 0:
        raise ZeroDivisionError("division by zero")
    return rat(n, d)


def roots_of_unity_q(s):
    """The s-th roots of unity in Q: {1}, or {1, -1} when s is even and >= 2.

    s = 0 is the free-parameter convention used by the twist normal form;
    callers treat it as "all of Q*" and never enumerate, so here it maps
    to {1} only.
    """
    if s < 0:
        raise DomainError("s must be nonnegative")
    if s >= 2 and s % 2 == 0:
        return [rat(1), rat(-1)]
    return [rat(1)]


def multiplicative_order(gamma, bound):
    """Least m <= bound with gamma**m == 1, or None.

    Works over any coefficient field (gamma only needs ** and ==).
    """
    if gamma == 0:
        raise DomainError("multiplicative order of zero is undefined")
    power = gamma
    for m in range(1, bound + 1):
        if power == 1:
            return m
        power = power * gamma
    return None


class RationalField:
    """The field Q, with exact arbitrary-precision rationals."""

    name = "Q"

    def __init__(self):
        self.zero = rat(0)
        self.one = rat(1)

    def coerce(self, x):
        if isinstance(x, Rat):
            return x
        if isinstance(x, (int, str, numbers.Rational)):
            return rat(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def roots_of_unity(self, s):
        return roots_of_unity_q(s)

    def count_roots_of_unity(self):
        return 2

    def is_rational_constant(self, x):
        return True

    def as_rational(self, x):
        return x

    def nth_roots(self, x, n):
        """All rational y with y**n == x, positive root first."""
        if n < 1:
            raise DomainError("n must be positive")
        x = self.coerce(x)
        if n == 1:
            return [x]
        if x == 0:
            return [self.zero]
        negative = x < 0
        if negative and n % 2 == 0:
            return []
        p, q = abs(x.numerator), x.denominator
        rp, okp = int_nth_root(int(p), n)
        rq, okq = int_nth_root(int(q), n)
        if not (okp and okq):
            return []
        root = rat(rp, rq)
        if negative:
            return [-root]
        return [root, -root] if n % 2 == 0 else [root]

    def __repr__(self):
        return "QQ"


QQ = RationalField()
