"""Text grammar for polynomials over Q and Q(t).

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := primary ('^' uint)*
    primary:= uint | 'x' | 't' | '(' expr ')'

Whitespace is insignificant.  'x' is the polynomial variable, 't' the
function-field parameter; '/' divides by an x-free subexpression, which is
how Q(t) coefficients like 1/(t - 1) are written.  format_poly produces
the canonical form (descending exponents, explicit signs, reduced
rationals) and parse(format_poly(f)) == f.
"""

from .errors import ParseError
from .fields import QQ
from .poly import Poly, x_poly
from .ratfunc import QT, T


def _tokenize(text):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "xt":
            out.append(("var", ch, i))
            i += 1
        elif ch in "+-*/^()":
            out.append(("op", ch, i))
            i += 1
        else:
            raise ParseError("unexpected character %r" % ch, i)
    out.append(("end", None, n))
    return out


class _Parser:
    def __init__(self, tokens, field):
        self.tokens = tokens
        self.pos = 0
        self.field = field
        self.x = x_poly(field)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_end(self):
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", pos)

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.factor()
                if val == "*":
                    acc = acc * rhs
                else:
                    if rhs.degree() > 0:
                        raise ParseError("cannot divide by an expression containing x", pos)
                    c = rhs.coeff(0)
                    if c == self.field.zero:
                        raise ParseError("division by zero", pos)
                    acc = acc / c
            else:
                return acc

    def factor(self):
        acc = self.primary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "^":
                self.take()
                kind, exp, pos = self.take()
                if kind != "int":
                    raise ParseError("exponent must be a nonnegative integer", pos)
                acc = acc ** exp
            else:
                return acc

    def primary(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Poly((val,), self.field)
        if kind == "var":
            if val == "x":
                return self.x
            return Poly((T,), self.field)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val, pos = self.take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", pos)
            return inner
        raise ParseError("expected a number, variable or '('", pos)


def parse(text, field=None):
    """Parse an expression into a Poly over Q, or over Q(t) if 't' occurs.

    Passing field=QQ rejects 't'; field=QT forces Q(t) coefficients even
    for t-free input.
    """
    tokens = _tokenize(text)
    t_pos = next((p for k, v, p in tokens if k == "var" and v == "t"), None)
    if field is None:
        field = QT if t_pos is not None else QQ
    elif field is QQ and t_pos is not None:
        raise ParseError("variable 't' is not allowed over Q", t_pos)
    parser = _Parser(tokens, field)
    result = parser.expr()
    parser.expect_end()
    return result


def parse_q(text):
    return parse(text, QQ)


def parse_qt(text):
    return parse(text, QT)


# -- formatting ---------------------------------------------------------------


def _rat_str(c):
    return str(c)  # backends print reduced "p/q" / "p"


def _ratfunc_magnitude(rf):
    """Canonical text of a RatFunc with positive leading numerator."""
    num, den = rf.num, rf.den
    num_s = format_poly(num, "t")
    if len(num.exponents()) > 1:
        num_s = "(" + num_s + ")"
    if den == Poly((1,), QQ):
        return num_s
    den_s = format_poly(den, "t")
    if len(den.exponents()) > 1:
        den_s = "(" + den_s + ")"
    return num_s + "/" + den_s


def format_ratfunc(rf):
    if rf.is_zero():
        return "0"
    if rf.is_negative_lead():
        return "-" + _ratfunc_magnitude(-rf)
    return _ratfunc_magnitude(rf)


def _split_sign(c, field):
    if field is QQ:
        return (c < 0, -c if c < 0 else c)
    neg = c.is_negative_lead()
    return (neg, -c if neg else c)


def _coeff_str(mag, field):
    if field is QQ:
        return _rat_str(mag)
    if mag.is_constant():
        return _rat_str(mag.as_rational())
    return _ratfunc_magnitude(mag)


def format_poly(p, var="x"):
    """Canonical text: descending exponents, explicit signs, reduced rationals."""
    if p.is_zero():
        return "0"
    field = p.field
    parts = []
    for e in range(p.degree(), -1, -1):
        c = p.coeff(e)
        if c == field.zero:
            continue
        neg, mag = _split_sign(c, field)
        if e == 0:
            body = _coeff_str(mag, field)
        else:
            xpart = var if e == 1 else "%s^%d" % (var, e)
            body = xpart if mag == field.one else _coeff_str(mag, field) + "*" + xpart
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def format_linear(ell):
    return format_poly(ell.to_poly())
