"""Dense univariate polynomials over a coefficient field.

Coefficients are stored by exponent, index 0 up to the degree, with the
leading entry nonzero.  Values are immutable; every operation returns a
new Poly.  Degrees stay in the low thousands here (iterates of small
polynomials), so classical O(n*m) multiplication and Horner composition
are the right tools.
"""

from functools import lru_cache
from math import gcd

from .errors import DomainError
from .fields import QQ

NEG_INF = float("-inf")  # degree of the zero polynomial; sentinel, never an index


class Poly:
    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs=(), field=QQ):
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field
        self._hash = None

    # -- basic queries ----------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def lc(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def exponents(self):
        """Exponents carrying a nonzero coefficient, ascending."""
        return [i for i, c in enumerate(self.coeffs) if c != self.field.zero]

    # -- arithmetic -------------------------------------------------------

    def _wrap(self, other):
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise DomainError("mixed coefficient fields")
            return other
        try:
            return Poly((self.field.coerce(other),), self.field)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Poly((), self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.field)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = self.field.coerce(scalar)
        if c == self.field.zero:
            raise ZeroDivisionError("division by zero")
        return Poly([x / c for x in self.coeffs], self.field)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("polynomial powers need a nonnegative integer")
        result = Poly((self.field.one,), self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(o.coeffs)
        if dq < 0:
            return Poly((), field), self
        quo = [field.zero] * (dq + 1)
        olc = o.lc()
        for k in range(dq, -1, -1):
            c = rem[k + len(o.coeffs) - 1] / olc
            quo[k] = c
            if c != field.zero:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(quo, field), Poly(rem[: len(o.coeffs) - 1], field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self / self.lc()

    def __call__(self, x):
        """Evaluate at x; Horner.  x may be a scalar or a Poly (composition)."""
        if isinstance(x, Poly):
            acc = Poly((), self.field)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = self.field.coerce(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coeffs, id(self.field)))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        from .parsing import format_poly
        return format_poly(self)

    def __repr__(self):
        return "Poly(%s)" % (str(self),)


def constant(c, field=QQ):
    return Poly((c,), field)


def x_poly(field=QQ):
    return Poly((0, 1), field)


class LinearPoly:
    """Degree-one polynomial a*X + b with a != 0; closed under composition."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b=0, field=QQ):
        self.a = field.coerce(a)
        self.b = field.coerce(b)
        self.field = field
        if self.a == field.zero:
            raise DomainError("linear polynomial needs nonzero slope")

    @classmethod
    def identity(cls, field=QQ):
        return cls(1, 0, field)

    @classmethod
    def from_poly(cls, p):
        if p.degree() != 1:
            raise DomainError("expected a degree-one polynomial")
        return cls(p.coeff(1), p.coeff(0), p.field)

    def __call__(self, x):
        return self.a * self.field.coerce(x) + self.b

    def compose(self, other):
        """self∘other as a LinearPoly."""
        return LinearPoly(self.a * other.a, self.a * other.b + self.b, self.field)

    def inverse(self):
        return LinearPoly(1 / self.a, -self.b / self.a, self.field)

    def to_poly(self):
        return Poly((self.b, self.a), self.field)

    def is_identity(self):
        return self.a == self.field.one and self.b == self.field.zero

    def __eq__(self, other):
        if not isinstance(other, LinearPoly):
            return NotImplemented
        return self.field is other.field and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, id(self.field)))

    def __str__(self):
        return str(self.to_poly())

    def __repr__(self):
        return "LinearPoly(%s)" % (str(self),)


def compose(A, B):
    """A∘B: A evaluated at B."""
    if A.field is not B.field:
        raise DomainError("mixed coefficient fields")
    return A(B)


@lru_cache(maxsize=None)
def _iterate_cached(f, n):
    if n == 0:
        return x_poly(f.field)
    if n == 1:
        return f
    return compose(f, _iterate_cached(f, n - 1))


def iterate(f, n):
    """n-th iterate f∘f∘...∘f; f^0 = X.  Memoized per (f, n) for the session."""
    if not isinstance(n, int) or n < 0:
        raise DomainError("iteration count must be a nonnegative integer")
    return _iterate_cached(f, n)


def conjugate(f, ell):
    """ell^-1 ∘ f ∘ ell."""
    return compose(ell.inverse().to_poly(), compose(f, ell.to_poly()))


def solve_linear_factor_right_all(P, Q):
    """All linear ell with Q∘ell = P (at most two; positive-slope root first)."""
    if P.is_zero() or Q.is_zero() or P.degree() != Q.degree() or P.degree() < 1:
        raise DomainError("degree mismatch: need deg P = deg Q >= 1")
    field = P.field
    n = P.degree()
    out = []
    qlc = Q.lc()
    for a in field.nth_roots(P.lc() / qlc, n):
        an1 = a ** (n - 1)
        b = (P.coeff(n - 1) - Q.coeff(n - 1) * an1) / (field.coerce(n) * qlc * an1)
        ell = LinearPoly(a, b, field)
        if compose(Q, ell.to_poly()) == P:
            out.append(ell)
    return out


def solve_linear_factor_right(P, Q):
    """A linear ell with Q∘ell = P, or None.

    Solved from the top two coefficient equations, then verified by full
    recomposition.  When two solutions exist (symmetric Q), the one with
    positive slope is returned.
    """
    sols = solve_linear_factor_right_all(P, Q)
    return sols[0] if sols else None


def solve_linear_factor_left(P, Q):
    """The unique linear ell with ell∘Q = P, or None."""
    if P.is_zero() or Q.is_zero() or P.degree() != Q.degree() or P.degree() < 1:
        raise DomainError("degree mismatch: need deg P = deg Q >= 1")
    a = P.lc() / Q.lc()
    rest = P - a * Q
    if rest.degree() > 0:
        return None
    ell = LinearPoly(a, rest.coeff(0), P.field)
    if a * Q + rest.coeff(0) == P:
        return ell
    return None


def poly_gcd(A, B):
    """Monic gcd over the coefficient field (Euclid, remainders renormalized)."""
    while not B.is_zero():
        A, B = B, A % B
        if not B.is_zero():
            B = B.monic()  # keeps coefficient sizes in check
    return A.monic() if not A.is_zero() else A


def monic_nth_root(P, n):
    """The monic R with R**n == P, if P is monic and one exists; else None."""
    if n < 1:
        raise DomainError("n must be positive")
    if n == 1:
        return P
    if P.is_zero() or not P.is_monic():
        return None
    D = P.degree()
    if D % n:
        return None
    m = D // n
    field = P.field
    coeffs = [field.zero] * (m + 1)
    coeffs[m] = field.one
    n_elt = field.coerce(n)
    for k in range(m - 1, -1, -1):
        partial = Poly(coeffs, field) ** n
        coeffs[k] = (P.coeff((n - 1) * m + k) - partial.coeff((n - 1) * m + k)) / n_elt
    R = Poly(coeffs, field)
    return R if R ** n == P else None


def exponent_structure(P):
    """(r, s) with P in X^r K[X^s]: s = gcd of exponent differences (0 for a
    monomial), r = least exponent (= degree in the monomial case)."""
    exps = P.exponents()
    if not exps:
        raise DomainError("zero polynomial has no exponent structure")
    if len(exps) == 1:
        return exps[0], 0
    s = 0
    for e in exps[1:]:
        s = gcd(s, e - exps[0])
    return exps[0], s
