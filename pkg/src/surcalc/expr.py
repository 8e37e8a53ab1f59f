"""Expression language for the calculator.

    expr   := expr ('+' | '-') expr | expr ('*' | '/') expr
            | '-' expr | expr '^' expr | atom
    atom   := NUMBER | 'w' | 'eps0' | NAME '(' args ')' | '(' expr ')'
            | '{' [expr {',' expr}] '|' [expr {',' expr}] '}'
            | '...' ['(truncated at depth' N ')']

Binding, tightest first: '^' (right associative, its right side may start
with a unary minus), unary '-', '*' '/', '+' '-'.  A trailing ':nf', ':sign'
or ':json' annotation selects the output format.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, SurrealError
from .series import DEFAULT_BUDGET, EPS0, OMEGA, Surreal, lift, nth_root, omega_map


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Cut:
    left: tuple
    right: tuple


@dataclass(frozen=True)
class Ellipsis_:
    depth: object  # int or None


@dataclass(frozen=True)
class Annotated:
    expr: object
    fmt: str


FUNCTIONS = {"exp": 1, "log": 1, "d": 1, "root": 2, "integrate": 1, "lambda": 1}
SYMBOLS = {"w": "w", "omega": "w", "ω": "w", "eps0": "eps0", "ε₀": "eps0"}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<trunc>\(truncated\ at\ depth\ (?P<depth>\d+)\))
  | (?P<ell>\.\.\.)
  | (?P<num>\d+)
  | (?P<annot>:(?:nf|sign|json)\b)
  | (?P<name>[A-Za-z_εω][A-Za-z0-9_₀]*)
  | (?P<op>[-+*/^(){}|,])
""", re.VERBOSE)


def tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", _offset(text, pos))
        kind = m.lastgroup
        if kind == "depth":
            kind = "trunc"
        if kind != "ws":
            val = m.group("depth") if kind == "trunc" else m.group(kind)
            out.append((kind if kind != "op" else val, val, _offset(text, m.start())))
        pos = m.end()
    out.append(("end", "", _offset(text, len(text))))
    return out


def _offset(text, i):
    """Byte offset of character index i."""
    return len(text[:i].encode("utf-8"))


class _Parser:
    BINARY = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
    UNARY = 30

    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind is not None and t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {kind!r} but found {what}", t[2])
        self.i += 1
        return t

    def parse(self):
        e = self.expr(0)
        if self.peek()[0] == "annot":
            e = Annotated(e, self.take()[1][1:])
        self.take("end")
        return e

    def expr(self, rbp):
        left = self.prefix()
        while True:
            kind = self.peek()[0]
            bp = self.BINARY.get(kind)
            if bp is None or bp <= rbp:
                return left
            self.take()
            if kind == "^":
                right = self.expr_power_rhs()
            else:
                right = self.expr(bp)
            left = BinOp(kind, left, right)

    def expr_power_rhs(self):
        # right associative; the exponent may carry a leading minus
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.expr_power_rhs())
        return self.expr(self.BINARY["^"] - 1)

    def prefix(self):
        kind, val, off = self.peek()
        if kind == "-":
            self.take()
            return Neg(self.expr(self.UNARY))
        if kind == "num":
            self.take()
            return Num(Fraction(int(val)))
        if kind == "ell":
            self.take()
            depth = None
            if self.peek()[0] == "trunc":
                depth = int(self.take()[1])
            return Ellipsis_(depth)
        if kind == "name":
            self.take()
            if val in SYMBOLS:
                return Sym(SYMBOLS[val])
            if val not in FUNCTIONS:
                raise ParseError(f"unknown name {val!r}", off)
            self.take("(")
            args = [self.expr(0)]
            while self.peek()[0] == ",":
                self.take()
                args.append(self.expr(0))
            self.take(")")
            if len(args) != FUNCTIONS[val]:
                raise ParseError(f"{val} takes {FUNCTIONS[val]} argument(s)", off)
            return Call(val, tuple(args))
        if kind == "(":
            self.take()
            e = self.expr(0)
            self.take(")")
            return e
        if kind == "{":
            self.take()
            left = self.options("|")
            self.take("|")
            right = self.options("}")
            self.take("}")
            return Cut(tuple(left), tuple(right))
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", off)

    def options(self, stop):
        out = []
        if self.peek()[0] == stop:
            return out
        out.append(self.expr(0))
        while self.peek()[0] == ",":
            self.take()
            out.append(self.expr(0))
        return out


def parse(text):
    return _Parser(text).parse()


class EvalError(SurrealError):
    pass


def evaluate(e, budget=DEFAULT_BUDGET):
    from . import explog, derivation
    from .cuts import simplest_between
    from .render import as_dyadic
    ev = lambda x: evaluate(x, budget)
    if isinstance(e, Annotated):
        return ev(e.expr)
    if isinstance(e, Num):
        return Surreal.constant(e.value)
    if isinstance(e, Sym):
        return OMEGA if e.name == "w" else EPS0
    if isinstance(e, Ellipsis_):
        return Surreal.constant(0)
    if isinstance(e, Neg):
        return -ev(e.arg)
    if isinstance(e, BinOp):
        a = ev(e.left)
        if e.op == "^":
            return power(a, ev(e.right))
        b = ev(e.right)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        return (a / b).collapse(budget)
    if isinstance(e, Call):
        args = [ev(x) for x in e.args]
        if e.name == "exp":
            return explog.exp_nf(args[0], budget)
        if e.name == "log":
            return explog.log_nf(args[0], budget)
        if e.name == "d":
            return derivation.d(args[0], budget)
        if e.name == "integrate":
            return derivation.asymptotic_integrate(args[0], budget)
        if e.name == "lambda":
            return explog.lambda_of_level(_integer(args[0], "level"))
        if e.name == "root":
            return nth_root(args[1], _integer(args[0], "root index"))
    if isinstance(e, Cut):
        opts = []
        for side in (e.left, e.right):
            vals = []
            for x in side:
                dy = as_dyadic(ev(x))
                if dy is None:
                    raise EvalError("cut options must be dyadic rationals")
                vals.append(dy)
            opts.append(vals)
        return lift(simplest_between(*opts))
    raise EvalError(f"cannot evaluate {e!r}")


def _integer(x, what):
    if x.is_real() and x.real().denominator == 1:
        return x.real().numerator
    raise EvalError(f"{what} must be an integer")


def power(base, exp):
    if exp.is_real():
        q = exp.real()
        if q.denominator == 1:
            return base ** q.numerator
        r = nth_root(base, q.denominator)
        return r ** q.numerator
    if base is OMEGA:
        if not exp.is_finite():
            raise EvalError("exponent of w must be finite")
        return omega_map(exp)
    raise EvalError("non-rational powers are only defined for the base w")


def format_of(e):
    return e.fmt if isinstance(e, Annotated) else None
