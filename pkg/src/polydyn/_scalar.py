"""Rational scalar backend.

The whole library runs on exact rational arithmetic.  The hot kernels are
coefficient operations, so when gmpy2 is importable we use GMP-backed mpq
numbers; otherwise we fall back to the pure-Python fractions.Fraction.
Both types normalize to lowest terms with a positive denominator and print
as "p/q", so everything above this module is backend-agnostic.

Selection happens once at import time.  Set POLYDYN_BACKEND=fractions (or
=gmpy2) to force a backend; the default "auto" prefers gmpy2.  The script
scripts/bench_backend.py times the two side by side.
"""

import os

_requested = os.environ.get("POLYDYN_BACKEND", "auto")
if _requested not in ("auto", "gmpy2", "fractions"):
    raise ValueError("POLYDYN_BACKEND must be auto, gmpy2 or fractions, not %r"
                     % _requested)

BACKEND = "fractions"
if _requested in ("auto", "gmpy2"):
    try:
        import gmpy2 as _gmpy2
        BACKEND = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise

from fractions import Fraction as _Fraction

if BACKEND == "gmpy2":
    Rat = _gmpy2.mpq

    def rat(n, d=1):
        """Reduced rational n/d with positive denominator."""
        return _gmpy2.mpq(n, d)

    def int_nth_root(n, k):
        """(floor(n**(1/k)), exact?) for integers n >= 0, k >= 1."""
        r, exact = _gmpy2.iroot(_gmpy2.mpz(n), k)
        return int(r), bool(exact)

else:
    Rat = _Fraction

    def rat(n, d=1):
        """Reduced rational n/d with positive denominator."""
        return _Fraction(n, d)

    def int_nth_root(n, k):
        """(floor(n**(1/k)), exact?) for integers n >= 0, k >= 1."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n == 0:
            return 0, True
        if k == 1:
            return n, True
        # Integer Newton iteration from a power-of-two upper bound.
        x = 1 << ((n.bit_length() + k - 1) // k)
        while True:
            y = ((k - 1) * x + n // x ** (k - 1)) // k
            if y >= x:
                break
            x = y
        while x ** k > n:
            x -= 1
        return x, x ** k == n


def as_int_pair(x):
    """(numerator, denominator) of a backend rational as Python ints."""
    return int(x.numerator), int(x.denominator)
