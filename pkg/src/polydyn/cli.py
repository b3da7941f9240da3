"""Command-line front end: one verb per library operation.

Polynomials are quoted expressions in the package grammar; rationals are
"p/q" literals.  Text output is one short human-readable report; --json
emits a single-line JSON object in which every exact number is a "p/q"
string and heights are decimal strings with an explicit precision field.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

import argparse
import json
import sys

from .errors import DomainError, ParseError
from .fields import QQ, rat_normalize
from .ratfunc import QT
from .parsing import parse, format_poly, format_linear
from .poly import LinearPoly, compose, iterate
from .decompose import split
from .symmetry import commuting_linears, linearprop_check, InfiniteLinearFamily
from .ritt import dickson, standard_pair, StandardPairSpec, minimal_common_iterate, \
    bt_shape_search
from .dynamics import Orbit, weil_height, canonical_height, is_preperiodic, \
    orbit_intersection, diagonal_hits, line_periodicity
from .funcfield import specialize, is_isotrivial, specialization_survey


# -- argument helpers ---------------------------------------------------------


def _rat(text):
    try:
        if "/" in text:
            n, d = text.split("/", 1)
            return rat_normalize(int(n), int(d))
        return QQ.coerce(int(text))
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError("bad rational literal %r: %s" % (text, e))


def _linear(text):
    p = parse(text, QQ)
    if p.degree() != 1:
        raise DomainError("expected a linear polynomial, got %r" % text)
    return LinearPoly.from_poly(p)


def _pair_same_field(a_text, b_text):
    A, B = parse(a_text), parse(b_text)
    if A.field is not B.field:
        A, B = parse(a_text, QT), parse(b_text, QT)
    return A, B


def _ratfunc(text):
    p = parse(text, QT)
    if p.degree() > 0:
        raise DomainError("expected an element of Q(t), got a polynomial in x")
    return p.coeff(0)


def _candidates(text):
    """Either "a..b" (inclusive integer range) or a comma list of rationals."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return [QQ.coerce(k) for k in range(int(lo), int(hi) + 1)]
    return [_rat(part.strip()) for part in text.split(",")]


def _preperiodic_json(outcome):
    return "undecided" if outcome is None else outcome


def _dec(d):
    return str(d)


# -- verb handlers ------------------------------------------------------------


def _h_iterate(args):
    f = parse(args.poly)
    result = format_poly(iterate(f, args.n))
    return {"result": result}, result


def _h_compose(args):
    A, B = _pair_same_field(args.outer, args.inner)
    result = format_poly(compose(A, B))
    return {"result": result}, result


def _h_split(args):
    s = split(parse(args.poly), args.m)
    if s is None:
        return {"found": False}, "no splitting with inner degree %d" % args.m
    outer, inner = format_poly(s.outer), format_poly(s.inner)
    payload = {"found": True, "outer": outer, "inner": inner,
               "inner_degree": s.inner_degree}
    return payload, "outer = %s\ninner = %s" % (outer, inner)


def _h_commute(args):
    result = commuting_linears(parse(args.poly))
    if isinstance(result, InfiniteLinearFamily):
        payload = {"finite": False,
                   "family": {"beta": str(result.beta), "alpha": str(result.alpha),
                              "degree": result.degree}}
        text = ("infinite family: b = beta + g*(x - beta), "
                "a = -alpha + g^%d*(x + alpha), beta = %s, alpha = %s, any g != 0"
                % (result.degree, result.beta, result.alpha))
        return payload, text
    pairs = [{"a": format_linear(a), "b": format_linear(b)} for a, b in result]
    text = "\n".join("a = %s, b = %s" % (p["a"], p["b"]) for p in pairs) or "none"
    return {"finite": True, "pairs": pairs}, text


def _h_linearprop(args):
    report = linearprop_check(parse(args.poly, QQ), _linear(args.ell), args.n_max)
    witnesses = [{"n": n, "witness": format_linear(w)}
                 for n, w in sorted(report.witnesses.items())]
    mono = None
    if report.monomial is not None:
        mono = {"v": format_linear(report.monomial.v),
                "epsilon": str(report.monomial.epsilon),
                "degree": report.monomial.degree,
                "delta": None if report.delta is None else str(report.delta)}
    payload = {
        "branch": report.branch,
        "n_max": report.n_max,
        "witnesses": witnesses,
        "extension_required": list(report.extension_required),
        "least_equal_k": report.least_equal_k,
        "reused_pair": list(report.reused_pair) if report.reused_pair else None,
        "extracted_k": report.extracted_k,
        "monomial_conjugate": mono,
        "two_sided_monomial": report.two_sided_monomial,
    }
    lines = ["branch: %s" % report.branch]
    if report.least_equal_k is not None:
        lines.append("least k with F^k = (F∘ell)^k: %d" % report.least_equal_k)
    lines.append("witness n: %s" % (sorted(report.witnesses) or "none"))
    if report.extension_required:
        lines.append("witness requires extension field at n: %s"
                     % list(report.extension_required))
    if mono:
        lines.append("monomial conjugate: v = %s, epsilon = %s, delta = %s"
                     % (mono["v"], mono["epsilon"], mono["delta"]))
    return payload, "\n".join(lines)


def _h_common_iterate(args):
    F, G = _pair_same_field(args.first, args.second)
    n = minimal_common_iterate(F, G)
    if n is None:
        return {"n": None}, "no common iterate (classification bound exhausted)"
    return {"n": n}, "n = %d" % n


def _h_dickson(args):
    result = format_poly(dickson(args.n, _rat(args.alpha)))
    return {"result": result}, result


def _h_standard_pair(args):
    kind = args.kind
    params = args.params
    if kind == 1:
        spec = StandardPairSpec(kind=1)
    elif kind == 2:
        if len(params) != 1:
            raise DomainError("kind 2 needs one parameter: the linear c")
        spec = StandardPairSpec(kind=2, c=_linear(params[0]))
    elif kind == 3:
        if len(params) != 2:
            raise DomainError("kind 3 needs two parameters: alpha and beta")
        spec = StandardPairSpec(kind=3, alpha=_rat(params[0]), beta=_rat(params[1]))
    elif kind == 4:
        if len(params) != 2:
            raise DomainError("kind 4 needs two parameters: n and alpha")
        spec = StandardPairSpec(kind=4, n=int(params[0]), alpha=_rat(params[1]))
    else:
        raise DomainError("kind must be 1, 2, 3 or 4")
    first, second = standard_pair(spec)
    payload = {"first": format_poly(first), "second": format_poly(second)}
    return payload, "%s\n%s" % (payload["first"], payload["second"])


def _h_bt_search(args):
    F, G = parse(args.first, QQ), parse(args.second, QQ)
    n_max = args.n_max if args.n_max is not None else F.degree()
    shapes = bt_shape_search(F, G, n_max)
    quintuples = [{"E": format_poly(s.E), "H": format_poly(s.H),
                   "a": format_linear(s.a), "b": format_linear(s.b),
                   "c": format_linear(s.c)} for s in shapes]
    payload = {"count": len(shapes), "quintuples": quintuples}
    if not shapes:
        return payload, "no shapes found"
    lines = ["E = %(E)s | H = %(H)s | a = %(a)s | b = %(b)s | c = %(c)s" % q
             for q in quintuples]
    return payload, "\n".join(lines)


def _h_orbit(args):
    points = Orbit(parse(args.poly, QQ), _rat(args.start)).prefix(args.count)
    strs = [str(p) for p in points]
    return {"points": strs}, " ".join(strs)


def _h_intersect(args):
    pairs = orbit_intersection(parse(args.f, QQ), parse(args.g, QQ),
                               _rat(args.x0), _rat(args.y0), args.m, args.n)
    payload = {"pairs": [list(p) for p in pairs]}
    text = " ".join("(%d,%d)" % p for p in pairs) or "none"
    return payload, text


def _h_diagonal(args):
    hits = sorted(diagonal_hits(parse(args.f, QQ), parse(args.g, QQ),
                                _rat(args.x0), _rat(args.y0), args.n))
    return {"hits": hits}, " ".join(map(str, hits)) or "none"


def _h_line_periodic(args):
    k = line_periodicity(parse(args.f, QQ), parse(args.g, QQ),
                         _rat(args.alpha), _rat(args.beta), args.k_max)
    if k is None:
        return {"k": None}, "not periodic for k <= %d" % args.k_max
    return {"k": k}, "k = %d" % k


def _h_height(args):
    h = weil_height(_rat(args.value), args.precision)
    payload = {"value": _dec(h), "precision_digits": args.precision}
    return payload, _dec(h)


def _h_canonical_height(args):
    est = canonical_height(parse(args.poly, QQ), _rat(args.start), args.k,
                           args.precision)
    payload = {"value": _dec(est.value), "error_bound": _dec(est.error_bound),
               "iterations": est.iterations_used,
               "precision_digits": args.precision}
    text = "value = %s\nerror_bound = %s" % (payload["value"], payload["error_bound"])
    return payload, text


def _h_preperiodic(args):
    outcome = is_preperiodic(parse(args.poly, QQ), _rat(args.start))
    text = "undecided" if outcome is None else ("true" if outcome else "false")
    return {"preperiodic": _preperiodic_json(outcome)}, text


def _h_specialize(args):
    result = specialize(parse(args.poly, QT), _rat(args.point))
    if result is None:
        return {"good_reduction": False}, "bad reduction"
    text = format_poly(result)
    return {"good_reduction": True, "result": text}, text


def _h_isotrivial(args):
    witness = is_isotrivial(parse(args.poly, QT))
    note = "witnesses over proper extensions of Q(t) are not tested"
    if witness is None:
        payload = {"isotrivial": False, "scope": "Q(t)", "note": note}
        return payload, "not isotrivial over Q(t) (%s)" % note
    payload = {"isotrivial": True, "scope": "Q(t)",
               "ell": format_linear(witness.ell), "core": format_poly(witness.core)}
    return payload, "ell = %s\ncore = %s" % (payload["ell"], payload["core"])


def _h_survey(args):
    reports = specialization_survey(parse(args.f, QT), parse(args.g, QT),
                                    _ratfunc(args.x0), _ratfunc(args.y0),
                                    _candidates(args.candidates), args.k_max)
    rows = []
    lines = []
    for r in reports:
        if not r.condition1:
            prep_field = None  # never evaluated
        else:
            prep_field = _preperiodic_json(r.preperiodic)
        rows.append({
            "point": str(r.point),
            "good_reduction": r.good_reduction,
            "condition1": r.condition1,
            "condition2": r.condition2,
            "condition3": r.condition3,
            "preperiodic": prep_field,
            "k_max": r.k_max_checked,
        })
        lines.append("c = %s: reduction %s, cond1 %s, cond2 %s, cond3 %s"
                     % (r.point, "good" if r.good_reduction else "bad",
                        r.condition1, r.condition2, r.condition3))
    return {"reports": rows}, "\n".join(lines)


# -- wiring -------------------------------------------------------------------


def _build_parser():
    top = argparse.ArgumentParser(
        prog="polydyn",
        description="Exact-arithmetic toolkit for polynomial dynamics.")
    sub = top.add_subparsers(dest="verb", required=True)

    def verb(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--precision", type=int, default=50,
                       help="significant digits for heights")
        p.set_defaults(handler=handler)
        return p

    p = verb("iterate", _h_iterate, "n-th iterate of a polynomial")
    p.add_argument("poly")
    p.add_argument("n", type=int)

    p = verb("compose", _h_compose, "composition A∘B")
    p.add_argument("outer")
    p.add_argument("inner")

    p = verb("split", _h_split, "decomposition with a given inner degree")
    p.add_argument("poly")
    p.add_argument("m", type=int)

    p = verb("commute", _h_commute, "solutions of a∘F = F∘b in linears")
    p.add_argument("poly")

    p = verb("linearprop", _h_linearprop, "iterate-witness dichotomy report")
    p.add_argument("poly")
    p.add_argument("ell")
    p.add_argument("--n-max", type=int, default=6)

    p = verb("common-iterate", _h_common_iterate, "least n with F^n = G^n")
    p.add_argument("first")
    p.add_argument("second")

    p = verb("dickson", _h_dickson, "Dickson polynomial D_n(x, alpha)")
    p.add_argument("n", type=int)
    p.add_argument("alpha")

    p = verb("standard-pair", _h_standard_pair, "standard pair by kind")
    p.add_argument("kind", type=int)
    p.add_argument("params", nargs="*")

    p = verb("bt-search", _h_bt_search, "shape search F = E∘H∘a, G = E∘c∘H∘b")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--n-max", type=int, default=None)

    p = verb("orbit", _h_orbit, "orbit points x0 .. f^N(x0)")
    p.add_argument("poly")
    p.add_argument("start")
    p.add_argument("count", type=int)

    p = verb("intersect", _h_intersect, "orbit intersection pairs")
    for name in ("f", "g", "x0", "y0"):
        p.add_argument(name)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = verb("diagonal", _h_diagonal, "n with f^n(x0) = g^n(y0)")
    for name in ("f", "g", "x0", "y0"):
        p.add_argument(name)
    p.add_argument("n", type=int)

    p = verb("line-periodic", _h_line_periodic, "least k with g^k∘ell = ell∘f^k")
    for name in ("f", "g", "alpha", "beta"):
        p.add_argument(name)
    p.add_argument("--k-max", type=int, default=10)

    p = verb("height", _h_height, "Weil height of a rational")
    p.add_argument("value")

    p = verb("canonical-height", _h_canonical_height, "k-th canonical height estimate")
    p.add_argument("poly")
    p.add_argument("start")
    p.add_argument("k", type=int)

    p = verb("preperiodic", _h_preperiodic, "exact preperiodicity decision")
    p.add_argument("poly")
    p.add_argument("start")

    p = verb("specialize", _h_specialize, "specialize a Q(t) polynomial at t = c")
    p.add_argument("poly")
    p.add_argument("point")

    p = verb("isotrivial", _h_isotrivial, "Q(t)-isotriviality test with witness")
    p.add_argument("poly")

    p = verb("survey", _h_survey, "specialization conditions (1)-(3) per place")
    for name in ("f", "g", "x0", "y0"):
        p.add_argument(name)
    p.add_argument("candidates")
    p.add_argument("--k-max", type=int, default=6)

    return top


_OPTIONS = ("--json", "--precision", "--k-max", "--n-max", "-h", "--help")


def _escape_dashes(argv):
    """Let expressions like "-x^3-x" or "-3/2" pass as positional arguments.

    Anything dash-initial that is not one of our options gets a leading
    space, which every downstream reader (tokenizer, int()) ignores.
    """
    out = []
    for i, tok in enumerate(argv):
        if i > 0 and tok.startswith("-") and \
                not any(tok == o or tok.startswith(o + "=") for o in _OPTIONS):
            tok = " " + tok
        out.append(tok)
    return out


def run(argv=None):
    """Parse argv and execute; returns the process exit code."""
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = _build_parser().parse_args(_escape_dashes(list(argv)))
    except SystemExit as e:
        return 0 if e.code in (0, None) else e.code
    try:
        payload, text = args.handler(args)
    except (DomainError, ParseError, ZeroDivisionError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
