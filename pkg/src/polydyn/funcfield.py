"""Polynomials over Q(t): specialization, good reduction, isotriviality.

The base curve is P^1 over Q, so places of Q(t) are rational numbers c and
specialization is the evaluation homomorphism t -> c.  Bad reduction means
a coefficient pole or a vanishing leading coefficient (degree drop).
"""

import decimal
from dataclasses import dataclass
from decimal import Decimal
from typing import Optional

from .errors import DomainError
from .fields import QQ
from .ratfunc import RatFunc, QT
from .poly import Poly, LinearPoly, compose, iterate, conjugate, monic_nth_root, x_poly
from .ritt import minimal_common_iterate
from .dynamics import is_preperiodic, weil_height, DEFAULT_PRECISION


def lift_to_qt(p):
    """Reinterpret a polynomial over Q as a polynomial over Q(t)."""
    if p.field is QT:
        return p
    return Poly(p.coeffs, QT)


def specialize(f, c):
    """The specialization of f at t = c, or None at bad reduction.

    Present iff no coefficient has a pole at c and the leading coefficient
    survives (the degree is preserved).
    """
    f = lift_to_qt(f)
    c = QQ.coerce(c)
    values = []
    for coeff in f.coeffs:
        v = coeff.evaluate(c)
        if v is None:
            return None
        values.append(v)
    if values and values[-1] == QQ.zero:
        return None  # leading coefficient vanishes: degree drops
    return Poly(values, QQ)


def _ext_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _bezout_combo(exponents):
    """gcd g of the exponents and integers u_i with sum(u_i * e_i) = g."""
    g = 0
    combo = []
    for e in exponents:
        g2, s, t = _ext_gcd(g, e)
        combo = [u * s for u in combo]
        combo.append(t)
        g = g2
    return g, combo


@dataclass(frozen=True)
class IsotrivialWitness:
    """ell = lam*X + beta over Q(t) conjugating the source into Q[X]."""

    ell: LinearPoly
    lam: RatFunc
    beta: RatFunc
    core: Poly  # over Q: ell^-1 ∘ f ∘ ell


def is_isotrivial(f):
    """A Q(t)-witness of isotriviality, or None.

    Conjugating by X + beta (beta the twist center) depresses f; a scaling
    lam*X then multiplies the i-th coefficient c_i by lam^(i-1), so f is
    isotrivial over Q(t) iff some lam makes every c_i * lam^(i-1) constant.
    lam is pinned, up to a harmless rational factor, by a Bezout combination
    of the c_i and a monic polynomial root extraction; the witness is
    verified by exact conjugation.  None means "not isotrivial over Q(t)";
    witnesses over proper extensions of Q(t) are outside this test.
    """
    f = lift_to_qt(f)
    if f.is_zero() or f.degree() < 2:
        raise DomainError("isotriviality test needs degree >= 2")
    d = f.degree()
    beta = -f.coeff(d - 1) / (QT.coerce(d) * f.lc())
    shift = LinearPoly(QT.one, beta, QT)
    depressed = conjugate(f, shift)
    cs = [depressed.coeff(i) for i in range(d + 1)]
    if not cs[1].is_constant():
        return None  # no scaling touches the i = 1 coefficient
    idx = [i for i in range(d + 1) if i != 1 and not cs[i].is_zero()]
    g, combo = _bezout_combo([i - 1 for i in idx])
    lam_g = QT.one
    for i, u in zip(idx, combo):
        lam_g = lam_g * cs[i] ** (-u)
    num_root = monic_nth_root(lam_g.num.monic(), g)
    den_root = monic_nth_root(lam_g.den, g)
    if num_root is None or den_root is None:
        return None
    lam = RatFunc(num_root, den_root)
    if any(not (cs[i] * lam ** (i - 1)).is_constant() for i in idx):
        return None
    ell = LinearPoly(lam, beta, QT)
    core_qt = conjugate(f, ell)
    if any(not c.is_constant() for c in core_qt.coeffs):
        return None
    core = Poly([c.as_rational() for c in core_qt.coeffs], QQ)
    return IsotrivialWitness(ell, lam, beta, core)


@dataclass
class SpecializationReport:
    """Conditions (1)-(3) of the specialization argument at one place."""

    point: object
    good_reduction: bool
    specialized_f: Optional[Poly]
    specialized_g: Optional[Poly]
    x0_value: object
    y0_value: object
    condition1: bool  # good reduction of f, g and finite x0, y0
    condition2: Optional[bool]  # no common iterate: f_c^k != g_c^k for k <= k_max
    condition3: Optional[bool]  # x0(c) is not preperiodic for f_c
    preperiodic: object  # True / False / None (undecided)
    k_max_checked: int


def specialization_survey(f, g, x0, y0, candidates, k_max=6, orbit_max=10000):
    """Check conditions (1)-(3) at each candidate place.

    condition2 combines the exact minimal-common-iterate search (bounded by
    the number of roots of unity) with a direct iterate comparison up to
    k_max; condition3 is the preperiodicity decision for x0(c), with an
    undecided outcome passed through as None.
    """
    f, g = lift_to_qt(f), lift_to_qt(g)
    x0, y0 = QT.coerce(x0), QT.coerce(y0)
    reports = []
    for c in candidates:
        c = QQ.coerce(c)
        fc, gc = specialize(f, c), specialize(g, c)
        x0c, y0c = x0.evaluate(c), y0.evaluate(c)
        good = fc is not None and gc is not None
        cond1 = good and x0c is not None and y0c is not None
        cond2 = cond3 = prep = None
        if good and fc.degree() == gc.degree() and fc.degree() >= 2:
            mci = minimal_common_iterate(fc, gc)
            cond2 = mci is None and all(iterate(fc, k) != iterate(gc, k)
                                        for k in range(1, k_max + 1))
        if cond1 and fc.degree() >= 2:
            prep = is_preperiodic(fc, x0c, orbit_max)
            cond3 = None if prep is None else not prep
        reports.append(SpecializationReport(
            point=c,
            good_reduction=good,
            specialized_f=fc,
            specialized_g=gc,
            x0_value=x0c,
            y0_value=y0c,
            condition1=cond1,
            condition2=cond2,
            condition3=cond3,
            preperiodic=prep,
            k_max_checked=k_max,
        ))
    return reports


@dataclass
class ProbeEntry:
    point: object
    height: Decimal
    checked: bool
    skip_reason: Optional[str]
    preperiodic: object  # True / False / None, when checked


@dataclass
class SilvermanProbeReport:
    applicable: bool  # False when f is isotrivial: the proposition does not apply
    isotrivial: Optional[IsotrivialWitness]
    cutoff: Decimal
    entries: list
    counterexamples: list  # sample points whose specialization is preperiodic


def prop_silverman_probe(f, x0, height_cutoff, sample, orbit_max=10000,
                         prec=DEFAULT_PRECISION):
    """Probe non-preperiodicity of x0(alpha) at sample places of height >= cutoff.

    Isotrivial f routes to a not-applicable report (the canonical height of
    a constant point vanishes there).  A counterexample at desk scale means
    the proposition's non-effective cutoff exceeds the chosen one, not a
    refutation; it is recorded as data.
    """
    f = lift_to_qt(f)
    x0 = QT.coerce(x0)
    cutoff = height_cutoff if isinstance(height_cutoff, Decimal) \
        else Decimal(str(height_cutoff))
    iso = is_isotrivial(f)
    if iso is not None:
        return SilvermanProbeReport(False, iso, cutoff, [], [])
    entries = []
    counterexamples = []
    for alpha in sample:
        alpha = QQ.coerce(alpha)
        h = weil_height(alpha, prec)
        if h < cutoff:
            entries.append(ProbeEntry(alpha, h, False, "below height cutoff", None))
            continue
        fc = specialize(f, alpha)
        x0c = x0.evaluate(alpha)
        if fc is None or x0c is None or fc.degree() < 2:
            entries.append(ProbeEntry(alpha, h, False, "bad reduction", None))
            continue
        outcome = is_preperiodic(fc, x0c, orbit_max)
        entries.append(ProbeEntry(alpha, h, True, None, outcome))
        if outcome is True:
            counterexamples.append(alpha)
    return SilvermanProbeReport(True, None, cutoff, entries, counterexamples)
