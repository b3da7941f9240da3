"""Linear self-relations of a polynomial.

The twist normal form F = -alpha + core(X - beta), with core free of the
X^(d-1) and constant terms, controls every identity a∘F = F∘b in linear
a, b: writing core in X^r K[X^s] with s maximal, the solutions are
parametrized by s-th roots of unity (a finite list over Q), or by all of
Q* when core is a monomial.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .poly import Poly, LinearPoly, compose, iterate, conjugate, \
    solve_linear_factor_right, exponent_structure, x_poly


@dataclass(frozen=True)
class TwistNormalForm:
    beta: object
    alpha: object
    r: int
    s: int
    core: Poly  # alpha + F(X + beta); no X^(d-1) term, no constant term


def twist_normal_form(F):
    """Shift-normalize F; core lies in X^r K[X^s] with s as large as possible."""
    if F.is_zero() or F.degree() < 2:
        raise DomainError("twist normal form needs degree >= 2")
    d = F.degree()
    field = F.field
    beta = -F.coeff(d - 1) / (field.coerce(d) * F.lc())
    alpha = -F(beta)
    core = compose(F, x_poly(field) + beta) + alpha
    r, s = exponent_structure(core)
    return TwistNormalForm(beta, alpha, r, s, core)


@dataclass(frozen=True)
class MonomialConjugacy:
    v: LinearPoly
    epsilon: object
    degree: int

    def monomial(self):
        coeffs = [self.v.field.zero] * self.degree + [self.epsilon]
        return Poly(coeffs, self.v.field)


@dataclass(frozen=True)
class InfiniteLinearFamily:
    """All (a, b) with a∘F = F∘b, parametrized by gamma in K*.

    b = beta + gamma(X - beta) and a = -alpha + gamma^d(X + alpha); the
    family is genuinely infinite, so it is carried as a closure rather
    than a truncated list.
    """

    beta: object
    alpha: object
    degree: int
    field: object

    def pair(self, gamma):
        gamma = self.field.coerce(gamma)
        if gamma == self.field.zero:
            raise DomainError("gamma must be nonzero")
        gd = gamma ** self.degree
        b = LinearPoly(gamma, self.beta - gamma * self.beta, self.field)
        a = LinearPoly(gd, -self.alpha + gd * self.alpha, self.field)
        return a, b


def commuting_linears(F):
    """Solutions (a, b) of a∘F = F∘b in linear polynomials.

    Returns a list of verified pairs when the solution set is finite
    (core has at least two terms), or an InfiniteLinearFamily when the
    core is a monomial.  Candidates come from the twist normal form and
    are checked by exact recomposition, since the normal form gives
    necessity of the shape, not sufficiency.
    """
    tnf = twist_normal_form(F)
    field = F.field
    if tnf.s == 0:
        return InfiniteLinearFamily(tnf.beta, tnf.alpha, F.degree(), field)
    pairs = []
    for gamma in field.roots_of_unity(tnf.s):
        gr = gamma ** tnf.r
        b = LinearPoly(gamma, tnf.beta - gamma * tnf.beta, field)
        a = LinearPoly(gr, -tnf.alpha + gr * tnf.alpha, field)
        if compose(a.to_poly(), F) == compose(F, b.to_poly()):
            pairs.append((a, b))
    return pairs


def is_monomial_conjugate(F):
    """The conjugacy F = v^-1 ∘ (epsilon X^d) ∘ v, if one exists.

    A monomial core (s = 0) only gives F = u∘X^d∘w for independent linears
    u, w; the single-v conjugacy additionally needs alpha = -beta, i.e.
    F = beta + theta(X - beta)^d (the shift equals the center).  The
    returned witness is verified by exact conjugation.
    """
    tnf = twist_normal_form(F)
    if tnf.s != 0 or tnf.alpha != -tnf.beta:
        return None
    field = F.field
    v = LinearPoly(1, -tnf.beta, field)
    conj = MonomialConjugacy(v, tnf.core.lc(), F.degree())
    if conjugate(conj.monomial(), v) != F:
        return None
    return conj


@dataclass
class LinearPropReport:
    """Evidence for the dichotomy between F^k = (F∘ell)^k and monomial form."""

    n_max: int
    witnesses: dict  # n -> ell_n with F^n = (F∘ell)^n ∘ ell_n, verified
    extension_required: tuple  # n whose witness exists only over an extension of Q
    least_equal_k: Optional[int]
    reused_pair: Optional[tuple]  # least (n, N), n < N, with ell_n = ell_N
    extracted_k: Optional[int]  # N - n for the reused pair
    extracted_verified: Optional[bool]  # F^(N-n) = (F∘ell)^(N-n), exact
    monomial: Optional[MonomialConjugacy]
    delta: object  # ell = v^-1∘(delta X)∘v, when monomial and ell fits
    two_sided_monomial: bool

    @property
    def branch(self):
        if self.least_equal_k is not None:
            return "common-iterate"
        if self.monomial is not None:
            return "monomial-conjugate"
        return "inconclusive"


def linearprop_check(F, ell, n_max):
    """Search n <= n_max for linear ell_n with F^n = (F∘ell)^n ∘ ell_n.

    Reports the witness set, the least k with F^k = (F∘ell)^k if any, the
    least witness-reuse pair (which re-derives such a k), and the monomial
    conjugacy of F together with whether ell = v^-1∘(delta X)∘v.  In the
    monomial branch a witness always exists over an algebraic closure;
    n lacking a rational one are flagged instead of silently dropped.
    """
    if F.is_zero() or F.degree() < 2:
        raise DomainError("linearprop_check needs degree >= 2")
    if n_max < 1:
        raise DomainError("n_max must be positive")
    G = compose(F, ell.to_poly())

    witnesses = {}
    least_equal_k = None
    for n in range(1, n_max + 1):
        Fn, Gn = iterate(F, n), iterate(G, n)
        if least_equal_k is None and Fn == Gn:
            least_equal_k = n
        w = solve_linear_factor_right(Fn, Gn)
        if w is not None:
            witnesses[n] = w

    monomial = is_monomial_conjugate(F)
    delta = None
    if monomial is not None:
        wrapped = monomial.v.compose(ell).compose(monomial.v.inverse())
        if wrapped.b == F.field.zero:
            delta = wrapped.a

    extension_required = ()
    if monomial is not None:
        extension_required = tuple(n for n in range(1, n_max + 1)
                                   if n not in witnesses)

    reused_pair = extracted_k = extracted_verified = None
    first_seen = {}
    for n in sorted(witnesses):
        key = witnesses[n]
        if key in first_seen:
            reused_pair = (first_seen[key], n)
            extracted_k = n - first_seen[key]
            extracted_verified = iterate(F, extracted_k) == iterate(G, extracted_k)
            break
        first_seen[key] = n

    tnf = twist_normal_form(F)
    return LinearPropReport(
        n_max=n_max,
        witnesses=witnesses,
        extension_required=extension_required,
        least_equal_k=least_equal_k,
        reused_pair=reused_pair,
        extracted_k=extracted_k,
        extracted_verified=extracted_verified,
        monomial=monomial,
        delta=delta,
        two_sided_monomial=tnf.s == 0,
    )
