"""A small language for elementary divide-and-conquer generating functions.

Grammar (EBNF)::

    expr     = term { ("+" | "-") term } ;
    term     = unary { ("*" | "/") unary } ;
    unary    = "-" unary | power ;
    power    = primary [ "^" unary ] ;           (* right associative *)
    primary  = INT | "z" | INDEX | "(" expr ")" | loop ;
    loop     = ("sum" | "prod") "(" INDEX ")" "{" expr "}" ;
    INT      = digit { digit } ;
    INDEX    = identifier other than z, sum, prod ;

Exponents are restricted to three shapes:

* an integer literal, on any base;
* ``k`` or ``k+s`` (``s`` a literal), on a base built from integer
  literals only, e.g. ``(-2)^k``;
* ``2^k`` or ``2^(k+s)``, optionally times an integer literal on either
  side, on the base ``z`` only, e.g. ``z^(2^(k+1)*3)``.

The loop index may appear only inside exponents of its own loop, and loops
do not nest.  Loops run ``k = 0 .. ceil(log2 N)``; a sum body must have
valuation at least ``2^k`` and a product body must be ``1 +`` terms of
valuation at least ``2^k``, otherwise the expression is rejected because the
truncated loop would not be exact.

>>> evaluate(parse("prod(k){ 1 + 2*z^(2^k) }"), 8).tolist()
[1, 2, 2, 4, 2, 4, 4, 8]
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DSLEvaluationError, DSLSyntaxError, NonUnitDenominatorError
from .families import tower_bound
from .series import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    expand,
    mul,
    mul_rational,
)

__all__ = [
    "Num",
    "Var",
    "Neg",
    "BinOp",
    "Pow",
    "Loop",
    "parse",
    "evaluate",
    "to_text",
    "FAMILY_TEXTS",
    "family_text",
]


# AST


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: object


@dataclass(frozen=True)
class Loop:
    kind: str  # "sum" or "prod"
    index: str
    body: object


# tokenizer

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))", re.S)
_KEYWORDS = {"sum", "prod"}


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "eof"
    text: str
    line: int
    col: int


def _tokenize(text):
    toks = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(offset):
        line = max(i for i, s in enumerate(line_starts) if s <= offset)
        return line + 1, offset - line_starts[line] + 1

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        line, col = where(start)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), line, col))
        elif m.group(2):
            toks.append(_Tok("name", m.group(2), line, col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(){}":
                raise DSLSyntaxError(f"unexpected character {ch!r}", line, col)
            toks.append(_Tok("op", ch, line, col))
        pos = m.end()
    line, col = where(len(text))
    toks.append(_Tok("eof", "", line, col))
    return toks


# exponent shapes


def _is_constant(node) -> bool:
    """Built from integer literals with + - * and unary minus only."""
    if isinstance(node, Num):
        return True
    if isinstance(node, Neg):
        return _is_constant(node.operand)
    if isinstance(node, BinOp) and node.op in "+-*":
        return _is_constant(node.left) and _is_constant(node.right)
    return False


def _linear_shift(node, index):
    """``s`` if node is ``k`` or ``k + s``, else None."""
    if isinstance(node, Var) and node.name == index:
        return 0
    if isinstance(node, BinOp) and node.op == "+":
        l, r = node.left, node.right
        if isinstance(l, Var) and l.name == index and isinstance(r, Num):
            return r.value
        if isinstance(r, Var) and r.name == index and isinstance(l, Num):
            return l.value
    return None


def _tower(node, index):
    """``(shift, mult)`` if node is ``mult * 2^(k+shift)``, else None."""
    if isinstance(node, Pow) and node.base == Num(2):
        s = _linear_shift(node.exponent, index)
        if s is not None:
            return s, 1
    if isinstance(node, BinOp) and node.op == "*":
        for a, b in ((node.left, node.right), (node.right, node.left)):
            if isinstance(b, Num):
                t = _tower(a, index)
                if t is not None and t[1] == 1:
                    return t[0], b.value
    return None


def _classify_exponent(exp, index):
    if isinstance(exp, Num):
        return ("const", exp.value)
    if index is not None:
        s = _linear_shift(exp, index)
        if s is not None:
            return ("linear", s)
        t = _tower(exp, index)
        if t is not None:
            return ("tower",) + t
    return None


def _mentions(node, name) -> bool:
    if isinstance(node, Var):
        return node.name == name
    if isinstance(node, Neg):
        return _mentions(node.operand, name)
    if isinstance(node, (BinOp,)):
        return _mentions(node.left, name) or _mentions(node.right, name)
    if isinstance(node, Pow):
        return _mentions(node.base, name) or _mentions(node.exponent, name)
    if isinstance(node, Loop):
        return _mentions(node.body, name)
    return False


# parser


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.index = None  # loop index in scope

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return DSLSyntaxError(msg, tok.line, tok.col)

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def parse(self):
        node = self.expr()
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self):
        start = self.tok
        base = self.primary()
        if not self.accept("^"):
            return base
        exp_tok = self.tok
        exponent = self.unary()
        shape = _classify_exponent(exponent, self.index)
        if shape is None:
            raise self.error(
                "malformed exponent: use an integer, k, k+s, or 2^k / 2^(k+s) times an integer",
                exp_tok,
            )
        if shape[0] == "linear" and not _is_constant(base):
            raise self.error("an exponent k or k+s needs an integer base such as 2 or (-1)", start)
        if shape[0] == "tower" and base != Var("z"):
            raise self.error("an exponent of the form 2^k is allowed on z only", start)
        if shape[0] == "linear" and shape[1] < 0:
            raise self.error("exponent k+s needs s >= 0", exp_tok)
        return Pow(base, exponent)

    def primary(self):
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return Num(int(tok.text))
        if tok.kind == "name":
            if tok.text in _KEYWORDS:
                return self.loop()
            self.i += 1
            if tok.text == "z":
                return Var("z")
            if self.index is None:
                if tok.text == "k":
                    raise self.error("`k` used outside a sum/prod", tok)
                raise self.error(f"unknown index `{tok.text}`", tok)
            if tok.text != self.index:
                raise self.error(f"unknown index `{tok.text}`", tok)
            return Var(tok.text)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}")

    def loop(self):
        kw = self.tok
        if self.index is not None:
            raise self.error("sum/prod loops do not nest", kw)
        self.i += 1
        self.expect("(")
        itok = self.tok
        if itok.kind != "name" or itok.text in _KEYWORDS or itok.text == "z":
            raise self.error("expected a loop index name", itok)
        self.i += 1
        self.expect(")")
        self.expect("{")
        self.index = itok.text
        body = self.expr()
        self.index = None
        self.expect("}")
        _check_index_placement(body, itok.text, self, kw)
        return Loop(kw.text, itok.text, body)


def _check_index_placement(node, index, parser, tok):
    """The loop index may only occur in exponents."""
    if isinstance(node, Var) and node.name == index:
        raise parser.error(f"index `{index}` may appear only in exponents", tok)
    if isinstance(node, Neg):
        _check_index_placement(node.operand, index, parser, tok)
    elif isinstance(node, BinOp):
        _check_index_placement(node.left, index, parser, tok)
        _check_index_placement(node.right, index, parser, tok)
    elif isinstance(node, Pow):
        _check_index_placement(node.base, index, parser, tok)


def parse(text: str):
    """Parse ``text`` into an AST of :class:`Num`, :class:`Var`, ... nodes."""
    return _Parser(text).parse()


def to_text(node) -> str:
    """Fully parenthesized text that parses back to ``node``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{to_text(node.operand)})"
    if isinstance(node, BinOp):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Pow):
        return f"({to_text(node.base)})^({to_text(node.exponent)})"
    if isinstance(node, Loop):
        return f"{node.kind}({node.index}){{ {to_text(node.body)} }}"
    raise TypeError(f"not an expression node: {node!r}")


# evaluation


def _const_value(rf: RationalFunction) -> int:
    if rf.den != Polynomial((1,)) or rf.num.degree > 0:
        raise DSLEvaluationError("expected an integer constant")
    return rf.num.constant_term


def _as_series(value, order):
    if isinstance(value, TruncatedSeries):
        return value
    rf = value.reduced()
    try:
        return expand(rf, order)
    except NonUnitDenominatorError:
        raise DSLEvaluationError(
            f"denominator {list(rf.den.coeffs)} has constant term {rf.den.constant_term}; "
            "only integer coefficients are allowed, so it must be +1 or -1"
        ) from None


class _Evaluator:
    def __init__(self, order):
        self.order = order

    def ev(self, node, k=None):
        if isinstance(node, Num):
            return RationalFunction(Polynomial((node.value,)))
        if isinstance(node, Var):
            if node.name == "z":
                return RationalFunction(Polynomial((0, 1)))
            raise DSLEvaluationError(f"index `{node.name}` used as a value")
        if isinstance(node, Neg):
            v = self.ev(node.operand, k)
            return -v
        if isinstance(node, BinOp):
            return self.binop(node.op, self.ev(node.left, k), self.ev(node.right, k))
        if isinstance(node, Pow):
            return self.power(node, k)
        if isinstance(node, Loop):
            return self.loop(node)
        raise TypeError(f"not an expression node: {node!r}")

    def binop(self, op, a, b):
        if op == "/":
            if isinstance(b, TruncatedSeries):
                raise DSLEvaluationError("division by a sum/prod is not an elementary form")
            if b.num.is_zero():
                raise DSLEvaluationError("division by zero")
            if isinstance(a, RationalFunction):
                return (a / b).reduced()
            inv = RationalFunction(b.den, b.num).reduced()
            if not inv.has_unit_denominator():
                raise DSLEvaluationError(
                    f"divisor numerator has constant term {inv.den.constant_term}; must be +1 or -1"
                )
            return mul_rational(a, inv)
        if isinstance(a, RationalFunction) and isinstance(b, RationalFunction):
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            return a * b
        a, b = _as_series(a, self.order), _as_series(b, self.order)
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        return mul(a, b)

    def power(self, node, k):
        shape = _classify_exponent(node.exponent, None if k is None else k[0])
        if shape is None:
            raise DSLEvaluationError("malformed exponent")
        if shape[0] == "tower":
            _, shift, mult = shape
            return RationalFunction(Polynomial.monomial(mult * (1 << (k[1] + shift))))
        base = self.ev(node.base, k)
        if shape[0] == "linear":
            return RationalFunction(Polynomial((_const_value(base) ** (k[1] + shape[1]),)))
        e = shape[1]
        if isinstance(base, RationalFunction):
            return base ** e
        result = TruncatedSeries.one(self.order)
        for _ in range(e):
            result = mul(result, base)
        return result

    def loop(self, node):
        N = self.order
        is_sum = node.kind == "sum"
        total = TruncatedSeries.zero(N) if is_sum else TruncatedSeries.one(N)
        one = TruncatedSeries.one(N)
        for kv in range(tower_bound(N) + 1):
            body = _as_series(self.ev(node.body, (node.index, kv)), N)
            check = body if is_sum else body - one
            v = check.valuation()
            if v is not None and v < (1 << kv):
                what = "sum term" if is_sum else "product factor minus 1"
                raise DSLEvaluationError(
                    f"{node.kind} at {node.index}={kv}: {what} has valuation {v} < 2^{kv}; "
                    f"z must enter only as a rational function of z^(2^{node.index})"
                )
            total = total + body if is_sum else mul(total, body)
        return total


def evaluate(expr, order: int) -> TruncatedSeries:
    """Truncated series of ``expr`` (an AST or source text) modulo ``z**order``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if isinstance(expr, str):
        expr = parse(expr)
    return _as_series(_Evaluator(order).ev(expr), order)


FAMILY_TEXTS = {
    "T1": "sum(k){ c^k * z^(2^k) / (1 - z^(2^k)) }",
    "T2": "sum(k){ c^k * z^(2^k) / (1 - z^(2^(k+1))) }",
    "T3": "prod(k){ 1 + c*z^(2^k) }",
    "T4": "1/(1 - z) * sum(k){ alpha^k * (d*z^(2^k) + c*z^(2^(k+1))) / (1 + z^(2^k)) }",
    "OnesCount": "1/(1 - z) * sum(k){ z^(2^k) / (1 + z^(2^k)) }",
    "ZerosCount": "1/(1 - z) * sum(k){ z^(2^(k+1)) / (1 + z^(2^k)) }",
    "ThueMorse": "prod(k){ 1 - z^(2^k) }",
    "RulerPlusOne": "sum(k){ z^(2^k) / (1 - z^(2^k)) }",
}


def _lit(v):
    return f"({v})" if v < 0 else str(v)


def family_text(spec) -> str:
    """DSL source for a family specification (T6 in its regularized form)."""
    from .families import Kind

    kind = spec.kind
    if kind is Kind.T5:
        terms = [f"{_lit(ci)}*z^(2^(k+1)*{i})" for i, ci in enumerate(spec.tail, start=1)]
        return f"prod(k){{ 1 + {_lit(spec.c)}*z^(2^k) + " + " + ".join(terms) + " }"
    if kind is Kind.T6:
        terms = [f"{_lit(ci)}*z^(2^k*{i})" for i, ci in enumerate(spec.tail, start=1)]
        return "sum(k){ 1/(1 - (" + " + ".join(terms) + ")) - 1 }"
    text = FAMILY_TEXTS[str(kind)]
    for name in ("alpha", "c", "d"):
        text = re.sub(rf"\b{name}\b", _lit(getattr(spec, name)), text)
    return text
