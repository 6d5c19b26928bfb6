"""Surface syntax for operators and symbols over Q(t)[theta].

Grammar (precedence ^ > unary - > * and / > binary +/-):

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := atom ('^' uint)?
    atom     := 't' | 'theta' | 'D' | rational | '(' expr ')' | '-' factor
    rational := uint ('/' uint)?

Integer/integer binds eagerly as a rational literal; otherwise '/' is
right-division and the divisor must be theta-free (so t/(1-t) works,
theta/theta does not). Multiplication is noncommutative; normalization
rewrites with theta g(t) = g(t) theta + t g'(t) and D = (1/t) theta,
collects into sum c_j(t) theta^j, and divides by the leading coefficient.
"""

from dataclasses import dataclass
from math import comb

from .rationals import QQ
from .poly import Poly
from .ratfunc import RationalFunction, RF_ZERO, RF_ONE
from .operators import ThetaOperator
from .functionals import SymbolM
from .errors import OperatorSyntaxError, InvalidDivisor


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Num:
    value: object  # QQ


@dataclass(frozen=True)
class Sym:
    name: str  # "t" | "theta" | "D"


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # "+" | "-" | "*"
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


# ---------------------------------------------------------------------------
# tokenizer / parser

_SYMBOLS = "+-*^()/"
_NAMES = {"t", "theta", "D"}


def _tokenize(text):
    tokens = []  # (kind, value, position)
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name not in _NAMES:
                raise OperatorSyntaxError(f"unknown name {name!r}", i)
            tokens.append(("name", name, i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise OperatorSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise OperatorSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise OperatorSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.next()[0]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            caret = self.next()
            tok = self.peek()
            if tok[0] != "int":
                raise OperatorSyntaxError(
                    "exponent must be a non-negative integer literal", caret[2] + 1
                )
            self.next()
            node = Pow(node, tok[1])
        return node

    def atom(self):
        tok = self.next()
        kind, value, pos = tok
        if kind == "int":
            # int '/' int is a rational literal; any other '/' stays binary
            if self.peek()[0] == "/" and self.tokens[self.pos + 1][0] == "int":
                self.next()
                den = self.next()
                if den[1] == 0:
                    raise OperatorSyntaxError("zero denominator", den[2])
                return Num(QQ(value, den[1]))
            return Num(QQ(value))
        if kind == "name":
            return Sym(value)
        if kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "-":
            return Neg(self.factor())
        raise OperatorSyntaxError(f"unexpected {value!r}", pos)


def parse_expression(text):
    """Parse to an AST; raises OperatorSyntaxError with a position."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# canonical printer

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def _prec(node):
    if isinstance(node, BinOp):
        return _PREC_ADD if node.op in "+-" else _PREC_MUL
    if isinstance(node, Neg):
        return _PREC_NEG
    if isinstance(node, Num) and node.value < 0:
        return _PREC_NEG
    if isinstance(node, Pow):
        return _PREC_POW
    return _PREC_ATOM


def print_expression(node):
    """Canonical text; parse(print_expression(ast)) == ast."""

    def go(n, min_prec):
        if isinstance(n, Num):
            s = str(n.value)
        elif isinstance(n, Sym):
            s = n.name
        elif isinstance(n, Neg):
            s = "-" + go(n.arg, _PREC_NEG)
        elif isinstance(n, Pow):
            s = go(n.base, _PREC_ATOM) + f"^{n.exp}"
            if _prec(n) < min_prec:
                return "(" + s + ")"
            return s
        elif isinstance(n, BinOp):
            if n.op in ("*", "/"):
                s = go(n.left, _PREC_MUL) + n.op + go(n.right, _PREC_NEG)
            else:
                s = go(n.left, _PREC_ADD) + f" {n.op} " + go(n.right, _PREC_MUL)
        else:
            raise TypeError(f"not an AST node: {n!r}")
        if _prec(n) < min_prec:
            return "(" + s + ")"
        return s

    return go(node, 0)


# ---------------------------------------------------------------------------
# normalization to sum c_j(t) theta^j

_T = RationalFunction(Poly.x())
_INV_T = RationalFunction(Poly.const(1), Poly.x())


def _nc_mul(a, b):
    """(sum a_i theta^i)(sum b_j theta^j) with theta^i g = sum_s C(i,s) d^s(g) theta^(i-s),
    d the derivation g -> t g'."""
    out = [RF_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if bj.is_zero():
                continue
            d = bj
            for s in range(i + 1):
                if s:
                    d = d.theta_derivative()
                if not d.is_zero():
                    out[i - s + j] = out[i - s + j] + ai * d.scale(comb(i, s))
    return out


def _trim(coeffs):
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def theta_coefficients(node):
    """Collect an AST into [c_0, ..., c_r] with node = sum c_j(t) theta^j."""
    if isinstance(node, Num):
        return [RationalFunction(Poly.const(node.value))]
    if isinstance(node, Sym):
        if node.name == "t":
            return [_T]
        if node.name == "theta":
            return [RF_ZERO, RF_ONE]
        return [RF_ZERO, _INV_T]  # D = (1/t) theta
    if isinstance(node, Neg):
        return _trim([-c for c in theta_coefficients(node.arg)])
    if isinstance(node, Pow):
        base = theta_coefficients(node.base)
        out = [RF_ONE]
        for _ in range(node.exp):
            out = _nc_mul(out, base)
        return _trim(out)
    if isinstance(node, BinOp):
        a = theta_coefficients(node.left)
        b = theta_coefficients(node.right)
        if node.op == "*":
            return _trim(_nc_mul(a, b))
        if node.op == "/":
            if len(b) > 1:
                raise InvalidDivisor("cannot divide by an expression containing theta")
            if not b or b[0].is_zero():
                raise ZeroDivisionError("division by the zero function")
            return _trim(_nc_mul(a, [RF_ONE / b[0]]))
        if len(a) < len(b):
            a.extend([RF_ZERO] * (len(b) - len(a)))
        else:
            b.extend([RF_ZERO] * (len(a) - len(b)))
        if node.op == "+":
            return _trim([x + y for x, y in zip(a, b)])
        return _trim([x - y for x, y in zip(a, b)])
    raise TypeError(f"not an AST node: {node!r}")


def normalize_operator(ast) -> ThetaOperator:
    """Monic theta-form of the AST; ZeroLeadingCoefficient when there is no
    theta part left after collection."""
    return ThetaOperator.from_theta_coeffs(theta_coefficients(ast))


def normalize_symbol(ast, r) -> SymbolM:
    """Symbol v_0 + v_1 theta + ... of degree < r; overflow is an error,
    reduction modulo the operator is deliberately not performed."""
    return SymbolM.from_coeffs(theta_coefficients(ast), r)


def parse_operator(text) -> ThetaOperator:
    return normalize_operator(parse_expression(text))


def parse_symbol(text, r) -> SymbolM:
    return normalize_symbol(parse_expression(text), r)
