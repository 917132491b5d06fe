"""Tokenizer and recursive-descent evaluator for the textual formats.

One grammar serves scalars (``3/2 + 1/2*sqrt(2)``), polynomials
(``x^2*y + 3*y - 1/2``) and Novikov series (``2 t^(3/2) + t^(sqrt(2)) + O(t^(8))``).
Juxtaposition is multiplication.  Values are ordinary Python objects that
implement the arithmetic operators; identifiers and function calls are
resolved through a namespace supplied by the caller.
"""

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("num", Fraction(num)))
        elif ident is not None:
            tokens.append(("id", ident))
        else:
            if op not in "+-*/^(),":
                raise ParseError(f"unexpected character {op!r}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, names, functions):
        self.toks = tokens
        self.i = 0
        self.names = names
        self.functions = functions

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise ParseError(f"expected {want!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def at(self, kind, value=None):
        tok = self.peek()
        return tok[0] == kind and (value is None or tok[1] == value)

    def expr(self):
        value = self.term()
        while self.at("op", "+") or self.at("op", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_factor(self):
        kind, val = self.peek()
        return kind in ("num", "id") or (kind == "op" and val == "(")

    def term(self):
        value = self.unary()
        while True:
            if self.at("op", "*"):
                self.take()
                value = value * self.unary()
            elif self.at("op", "/"):
                self.take()
                rhs = self.unary()
                try:
                    value = value / rhs
                except ZeroDivisionError:
                    raise ParseError("division by zero") from None
                except TypeError:
                    raise ParseError("unsupported division") from None
            elif self._starts_factor():
                value = value * self.power()
            else:
                return value

    def unary(self):
        if self.at("op", "-"):
            self.take()
            return -self.unary()
        if self.at("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("op", "^"):
            self.take()
            if self.at("op", "-"):
                self.take()
                exponent = -self.atom()
            else:
                exponent = self.atom()
            if isinstance(exponent, Fraction) and exponent.denominator == 1:
                exponent = int(exponent)
            try:
                result = base ** exponent
            except (TypeError, ValueError) as exc:
                raise ParseError(f"bad exponent: {exc}") from None
            if result is NotImplemented or isinstance(result, (float, complex)):
                raise ParseError("unsupported exponent")
            return result
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return val
        if kind == "id":
            self.take()
            if self.at("op", "("):
                if val not in self.functions:
                    raise ParseError(f"unknown function {val!r}")
                self.take()
                arg = self.expr()
                self.take("op", ")")
                return self.functions[val](arg)
            if val not in self.names:
                raise ParseError(f"unknown name {val!r}")
            return self.names[val]
        if kind == "op" and val == "(":
            self.take()
            value = self.expr()
            self.take("op", ")")
            return value
        raise ParseError(f"unexpected token {val!r}")


def evaluate(text, names=None, functions=None):
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    p = _Parser(tokens, names or {}, functions or {})
    value = p.expr()
    if p.i != len(tokens):
        raise ParseError(f"trailing input at {p.peek()[1]!r}")
    return value


def split_top_level(text, sep=","):
    """Split ``text`` at ``sep`` characters not nested inside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_tuple_groups(text):
    """``"(1,0) (0,1)"`` -> ``["1,0", "0,1"]`` (contents of each top-level group)."""
    groups, depth, start = [], 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses")
            if depth == 0:
                groups.append(text[start:i])
        elif depth == 0 and not ch.isspace() and ch != ",":
            raise ParseError(f"unexpected {ch!r} outside parentheses")
    if depth != 0:
        raise ParseError("unbalanced parentheses")
    return groups


# scalars -------------------------------------------------------------------

def _sqrt_factory(d):
    from .scalars import QuadExtScalar

    def sqrt(arg):
        if isinstance(arg, QuadExtScalar):
            if not arg.is_rational:
                raise ParseError("sqrt of an irrational value")
            arg = arg.a
        arg = Fraction(arg)
        if arg < 0 or arg.denominator != 1:
            raise ParseError("sqrt expects a nonnegative integer")
        n = arg.numerator
        k = 1
        f = 2
        while f * f <= n:
            while n % (f * f) == 0:
                n //= f * f
                k *= f
            f += 1
        if n == 1 or n == 0:
            return QuadExtScalar(k * n, 0, d)
        if n != d:
            raise ParseError(f"sqrt({arg}) is outside Q(sqrt({d}))")
        return QuadExtScalar(0, k, d)

    return sqrt


def parse_scalar(text, d=2):
    from .scalars import QuadExtScalar
    value = evaluate(text, functions={"sqrt": _sqrt_factory(d)})
    if isinstance(value, QuadExtScalar):
        return value
    if isinstance(value, Fraction):
        return QuadExtScalar(value, 0, d)
    raise ParseError(f"not a scalar: {text!r}")


def parse_scalar_tuple(text, d=2):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"expected a parenthesized tuple, got {text!r}")
    return tuple(parse_scalar(part, d) for part in split_top_level(text[1:-1]))


def parse_int_tuple(text):
    out = []
    for part in split_top_level(text):
        value = evaluate(part)
        if not isinstance(value, Fraction) or value.denominator != 1:
            raise ParseError(f"expected an integer, got {part!r}")
        out.append(int(value))
    return tuple(out)


def detect_d(text):
    """First radicand appearing in ``text`` (square-free part), or ``None``."""
    from .scalars import is_squarefree
    for m in re.finditer(r"sqrt\(\s*(\d+)\s*\)", text):
        n = int(m.group(1))
        f = 2
        while f * f <= n:
            while n % (f * f) == 0:
                n //= f * f
            f += 1
        if is_squarefree(n):
            return n
    return None
