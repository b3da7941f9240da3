"""polydyn: exact-arithmetic toolkit for polynomial dynamics.

Polynomial decomposition, linear commutation analysis, common-iterate
classification, Dickson polynomials and standard-pair shapes, orbits and
canonical heights, and specialization of Q(t) polynomials.
"""

from .errors import DomainError, ParseError
from ._scalar import BACKEND, Rat, rat
from .fields import QQ, rat_normalize, roots_of_unity_q, multiplicative_order
from .ratfunc import QT, RatFunc, T, rat_func
from .poly import (NEG_INF, Poly, LinearPoly, compose, iterate, conjugate,
                   solve_linear_factor_left, solve_linear_factor_right,
                   poly_gcd, monic_nth_root, x_poly, constant)
from .parsing import parse, parse_q, parse_qt, format_poly, format_linear, \
    format_ratfunc
from .decompose import Splitting, split, all_splits, uniq_witness, two_to_one, \
    divisors
from .symmetry import (TwistNormalForm, twist_normal_form, commuting_linears,
                       InfiniteLinearFamily, MonomialConjugacy,
                       is_monomial_conjugate, LinearPropReport, linearprop_check)
from .ritt import (dickson, dickson_scaling_check, StandardPairSpec,
                   standard_pair, RittForm, ritt_form, minimal_common_iterate,
                   iterate_exponent, reduction_search, BTShape, bt_shape_search)
from .dynamics import (DEFAULT_PRECISION, HeightEstimate, Orbit, weil_height,
                       linear_height_bound, height_control_constant,
                       escape_threshold, canonical_height, is_preperiodic,
                       orbit_intersection, diagonal_hits, line_periodicity,
                       HeightGrowthReport, height_growth_report,
                       LinearCaseReport, linear_case_analysis)
from .funcfield import (lift_to_qt, specialize, IsotrivialWitness, is_isotrivial,
                        SpecializationReport, specialization_survey,
                        ProbeEntry, SilvermanProbeReport, prop_silverman_probe)

__version__ = "0.1.0"
