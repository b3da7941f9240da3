"""The function field Q(t): rational functions in t with exact arithmetic.

A RatFunc is a reduced fraction of two Polys over QQ in the variable t,
with monic denominator.  These are the coefficients of polynomials over
the field instance QT; specialization (t -> c) lives in funcfield.
"""

import numbers

from .errors import DomainError
from ._scalar import Rat, rat
from .fields import QQ, roots_of_unity_q
from .poly import Poly, poly_gcd, monic_nth_root

_T = Poly((0, 1), QQ)
_ONE = Poly((1,), QQ)


def _as_qq_poly(x):
    if isinstance(x, Poly):
        if x.field is not QQ:
            raise TypeError("expected a polynomial over Q")
        return x
    if isinstance(x, (int, Rat, numbers.Rational)):
        return Poly((x,), QQ)
    raise TypeError("cannot build a rational function from %r" % (x,))


class RatFunc:
    """Element of Q(t): num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_qq_poly(num)
        den = _ONE if den is None else _as_qq_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        if num.is_zero():
            num, den = Poly((), QQ), _ONE
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num, den = num // g, den // g
            c = den.lc()
            if c != QQ.one:
                num, den = num / c, den / c
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    # -- queries ------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        """True iff the value lies in Q inside Q(t)."""
        return self.den == _ONE and self.num.degree() <= 0

    def as_rational(self):
        if not self.is_constant():
            raise DomainError("not a rational constant: %r" % (self,))
        return self.num.coeff(0)

    def evaluate(self, c):
        """Value at t = c as an exact rational, or None at a pole."""
        c = QQ.coerce(c)
        dv = self.den(c)
        if dv == QQ.zero:
            return None
        return self.num(c) / dv

    def is_negative_lead(self):
        """Sign of the leading numerator coefficient (den is monic)."""
        return (not self.num.is_zero()) and self.num.lc() < 0

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        try:
            return RatFunc(_as_qq_poly(other))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("division by zero")
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __lt__(self, other):
        # Only meaningful for constants; used by generic candidate ordering.
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_constant() and o.is_constant():
            return self.as_rational() < o.as_rational()
        raise DomainError("Q(t) is not ordered")

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.coeff(0))
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self):
        from .parsing import format_ratfunc
        return format_ratfunc(self)

    def __repr__(self):
        return "RatFunc(%s)" % (str(self),)


T = RatFunc(_T)


class RationalFunctionField:
    """The field Q(t); coefficients are RatFunc values."""

    name = "Q(t)"

    def __init__(self):
        self.zero = RatFunc(0)
        self.one = RatFunc(1)

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Rat, numbers.Rational, Poly)):
            return RatFunc(_as_qq_poly(x))
        raise TypeError("cannot coerce %r into Q(t)" % (x,))

    def roots_of_unity(self, s):
        return [RatFunc(Poly((g,), QQ)) for g in roots_of_unity_q(s)]

    def count_roots_of_unity(self):
        return 2  # the roots of unity in Q(t) are the constants 1 and -1

    def is_rational_constant(self, x):
        return self.coerce(x).is_constant()

    def as_rational(self, x):
        return self.coerce(x).as_rational()

    def nth_roots(self, x, n):
        """All y in Q(t) with y**n == x.

        gcd(num, den) = 1 forces num and den to be separate n-th powers up
        to a rational unit, so take monic polynomial roots and combine with
        the rational roots of the leading coefficient.
        """
        if n < 1:
            raise DomainError("n must be positive")
        x = self.coerce(x)
        if n == 1:
            return [x]
        if x.is_zero():
            return [self.zero]
        root_den = monic_nth_root(x.den, n)
        if root_den is None:
            return []
        root_num = monic_nth_root(x.num.monic(), n)
        if root_num is None:
            return []
        out = []
        for r in QQ.nth_roots(x.num.lc(), n):
            cand = RatFunc(root_num * r, root_den)
            if cand ** n == x:
                out.append(cand)
        return out

    def __repr__(self):
        return "QT"


QT = RationalFunctionField()


def rat_func(num, den=None):
    """Convenience constructor, accepting ints, rationals and Q-polynomials."""
    if den is None:
        return RatFunc(num)
    return RatFunc(_as_qq_poly(num), _as_qq_poly(den))
