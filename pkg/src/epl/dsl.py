"""Rule language over named slices.

Concrete syntax, one rule per line::

    # self-citation evidence for authorship
    wrote    <- ((clip(wrote) . cites . T(wrote)) & I) + wrote
    coauthor <- ((wrote . T(wrote)) & not(I)) + coauthor

Operators bind, tightest first: function application, ``.`` (matmul),
``&`` (Hadamard), ``+`` (entrywise sum). Binary operators associate left.

A step evaluates every right-hand side against the same snapshot and then
replaces all targets at once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from epl.matrix import (
    EvidenceMatrix,
    NotIndicatorError,
    clip,
    converse_transpose,
    entrywise_sum,
    hadamard,
    identity,
    matmul,
    not_filter,
    transpose,
)
from epl.network import EvidenceNetwork


class RuleSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.line = line
        self.col = col


class EvaluationError(RuntimeError):
    pass


# --- AST ------------------------------------------------------------------

@dataclass(frozen=True)
class LabelRef:
    label: str


@dataclass(frozen=True)
class IdentityRef:
    pass


@dataclass(frozen=True)
class Compose:
    left: "PathExpr"
    right: "PathExpr"


@dataclass(frozen=True)
class Sum:
    left: "PathExpr"
    right: "PathExpr"


@dataclass(frozen=True)
class Filter:
    left: "PathExpr"
    right: "PathExpr"


@dataclass(frozen=True)
class Transpose:
    inner: "PathExpr"


@dataclass(frozen=True)
class Converse:
    inner: "PathExpr"


@dataclass(frozen=True)
class Clip:
    inner: "PathExpr"


@dataclass(frozen=True)
class Not:
    inner: "PathExpr"


PathExpr = Union[LabelRef, IdentityRef, Compose, Sum, Filter, Transpose, Converse, Clip, Not]

FUNCTIONS = {"T": Transpose, "conv": Converse, "clip": Clip, "not": Not}
_FUNC_NAMES = {cls: name for name, cls in FUNCTIONS.items()}
_BINARY = {Compose: ".", Filter: "&", Sum: "+"}
_PREC = {Sum: 1, Filter: 2, Compose: 3}


@dataclass(frozen=True)
class Rule:
    target: str
    expr: PathExpr
    line: int = 0

    def __eq__(self, other: object) -> bool:
        # source position is not part of rule identity
        if not isinstance(other, Rule):
            return NotImplemented
        return (self.target, self.expr) == (other.target, other.expr)

    def __hash__(self) -> int:
        return hash((self.target, self.expr))


@dataclass(frozen=True)
class RuleProgram:
    rules: tuple[Rule, ...] = ()
    step_count: int = 1

    def __post_init__(self) -> None:
        if self.step_count < 1:
            raise ValueError("step_count must be >= 1")
        seen = set()
        for r in self.rules:
            if r.target in seen:
                raise ValueError(f"duplicate rule target {r.target!r}")
            seen.add(r.target)

    def __len__(self) -> int:
        return len(self.rules)


# --- lexer ------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<arrow><-)
  | (?P<name>[A-Za-z_][A-Za-z0-9_:]*)
  | (?P<op>[.&+()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # name | op | arrow | nl | eof
    text: str
    line: int
    col: int


def tokenize(source: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise RuleSyntaxError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            yield Token("nl", "\n", line, pos - line_start + 1)
            line, line_start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            yield Token(kind, m.group(), line, pos - line_start + 1)
        pos = m.end()
    yield Token("eof", "", line, pos - line_start + 1)


# --- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, source: str):
        self.toks = list(tokenize(source))
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: Optional[Token] = None) -> RuleSyntaxError:
        t = tok or self.tok
        found = "end of input" if t.kind == "eof" else "end of line" if t.kind == "nl" else repr(t.text)
        return RuleSyntaxError(f"{msg}, found {found}", t.line, t.col)

    def expect(self, kind: str, text: Optional[str] = None, what: str = "") -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            raise self.error(f"expected {what or text or kind}")
        return self.advance()

    def program(self) -> list[Rule]:
        rules: list[Rule] = []
        targets: dict[str, int] = {}
        while True:
            while self.tok.kind == "nl":
                self.advance()
            if self.tok.kind == "eof":
                return rules
            start = self.tok
            rule = self.rule()
            if rule.target in targets:
                raise RuleSyntaxError(
                    f"duplicate rule target {rule.target!r} (first defined on line {targets[rule.target]})",
                    start.line, start.col)
            targets[rule.target] = start.line
            rules.append(rule)
            if self.tok.kind not in ("nl", "eof"):
                raise self.error("expected end of rule")

    def rule(self) -> Rule:
        t = self.expect("name", what="rule target label")
        if t.text == "I":
            raise RuleSyntaxError("the identity I cannot be assigned to", t.line, t.col)
        self.expect("arrow", what="'<-'")
        return Rule(t.text, self.expr(), t.line)

    def expr(self) -> PathExpr:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text == "+":
            self.advance()
            node = Sum(node, self.term())
        return node

    def term(self) -> PathExpr:
        # '.' binds tighter than '&'
        node = self.chain()
        while self.tok.kind == "op" and self.tok.text == "&":
            self.advance()
            node = Filter(node, self.chain())
        return node

    def chain(self) -> PathExpr:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text == ".":
            self.advance()
            node = Compose(node, self.factor())
        return node

    def factor(self) -> PathExpr:
        t = self.tok
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect("op", ")", "')'")
            return node
        if t.kind != "name":
            raise self.error("expected a label, I, a function call or '('")
        self.advance()
        nxt = self.tok
        if nxt.kind == "op" and nxt.text == "(":
            fn = FUNCTIONS.get(t.text)
            if fn is None:
                raise RuleSyntaxError(
                    f"unknown function {t.text!r} (known: {', '.join(FUNCTIONS)})", t.line, t.col)
            self.advance()
            inner = self.expr()
            self.expect("op", ")", "')'")
            return fn(inner)
        if t.text == "I":
            return IdentityRef()
        return LabelRef(t.text)


def parse(source: str, step_count: int = 1) -> RuleProgram:
    """Parse rule-file text into a :class:`RuleProgram`."""
    return RuleProgram(tuple(_Parser(source).program()), step_count)


def parse_expr(source: str) -> PathExpr:
    p = _Parser(source)
    node = p.expr()
    while p.tok.kind == "nl":
        p.advance()
    if p.tok.kind != "eof":
        raise p.error("expected end of expression")
    return node


# --- printer ------------------------------------------------------------------

def to_source(node: Union[PathExpr, Rule, RuleProgram]) -> str:
    """Render as parseable text with the minimum parentheses."""
    if isinstance(node, RuleProgram):
        return "".join(to_source(r) + "\n" for r in node.rules)
    if isinstance(node, Rule):
        return f"{node.target} <- {to_source(node.expr)}"
    return _render(node)


def _render(node: PathExpr) -> str:
    if isinstance(node, LabelRef):
        return node.label
    if isinstance(node, IdentityRef):
        return "I"
    if type(node) in _FUNC_NAMES:
        return f"{_FUNC_NAMES[type(node)]}({_render(node.inner)})"
    prec = _PREC[type(node)]
    left = _render(node.left)
    if _PREC.get(type(node.left), 99) < prec:
        left = f"({left})"
    right = _render(node.right)
    # left-associative: an equal-precedence right child needs parentheses
    if _PREC.get(type(node.right), 99) <= prec:
        right = f"({right})"
    return f"{left} {_BINARY[type(node)]} {right}"


# --- evaluation -----------------------------------------------------------------

def evaluate(expr: PathExpr, snapshot: EvidenceNetwork) -> EvidenceMatrix:
    if snapshot.n < 1:
        raise EvaluationError("cannot evaluate against an empty network")
    return _eval(expr, snapshot, {})


def _eval(node: PathExpr, net: EvidenceNetwork, cache: dict) -> EvidenceMatrix:
    if isinstance(node, LabelRef):
        m = cache.get(node.label)
        if m is None:
            m = cache[node.label] = net.get_slice(node.label)
        return m
    if isinstance(node, IdentityRef):
        return identity(net.n)
    if isinstance(node, Compose):
        return matmul(_eval(node.left, net, cache), _eval(node.right, net, cache))
    if isinstance(node, Sum):
        return entrywise_sum(_eval(node.left, net, cache), _eval(node.right, net, cache))
    if isinstance(node, Filter):
        return hadamard(_eval(node.left, net, cache), _eval(node.right, net, cache))
    if isinstance(node, Transpose):
        return transpose(_eval(node.inner, net, cache))
    if isinstance(node, Converse):
        return converse_transpose(_eval(node.inner, net, cache))
    if isinstance(node, Clip):
        return clip(_eval(node.inner, net, cache))
    if isinstance(node, Not):
        inner = _eval(node.inner, net, cache)
        try:
            return not_filter(inner)
        except NotIndicatorError as e:
            raise EvaluationError(
                f"not() applied to non-indicator expression {_render(node.inner)!r}: {e}") from e
    raise TypeError(f"not a path expression: {node!r}")


def step(program: RuleProgram, net: EvidenceNetwork) -> EvidenceNetwork:
    """One simultaneous time step; ``net`` itself is left untouched."""
    results = [(r.target, evaluate(r.expr, net)) for r in program.rules]
    out = net.copy()
    for target, m in results:
        out.merge_slice(target, m, "replace")
    return out


def run(program: RuleProgram, net: EvidenceNetwork, steps: Optional[int] = None) -> EvidenceNetwork:
    steps = program.step_count if steps is None else steps
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    for _ in range(steps):
        net = step(program, net)
    return net
