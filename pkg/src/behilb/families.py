"""Named graph families and the small expression language that builds them.

Grammar::

    spec    := atom | "join" "(" spec "," spec ")"
             | "pjoin" "(" spec "," INT "," INT ")" | "(" spec ")"
    atom    := NAME ":" args
    args    := INT ("," INT)*            (lollipop: INT ";" INT ("," INT)*)

Variadic argument lists (kpartite, multifan, lollipop handles) are greedy;
wrap them in parentheses when they are followed by more integers, e.g.
``pjoin((kpartite:2,2),4,2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import graphs
from .graphs import Graph, GraphError


class FamilySyntaxError(ValueError):
    def __init__(self, message: str, expr: str, pos: int):
        super().__init__(f"{message} at column {pos + 1}: {expr!r}")
        self.expr = expr
        self.pos = pos
        self.column = pos + 1


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple = ()
    children: tuple["FamilySpec", ...] = ()

    def __str__(self) -> str:
        if self.kind == "join":
            return f"join({self.children[0]},{self.children[1]})"
        if self.kind == "pjoin":
            q, r = self.params
            return f"pjoin({_grouped(self.children[0])},{q},{r})"
        if self.kind == "lollipop":
            m, handles = self.params
            return f"lollipop:{m};{','.join(map(str, handles))}"
        return f"{self.kind}:{','.join(map(str, self.params))}"


def _grouped(spec: FamilySpec) -> str:
    return f"({spec})" if spec.kind in VARIADIC else str(spec)


# name -> (min args, max args); None = unbounded
ARITY = {
    "path": (1, 1),
    "cycle": (1, 1),
    "complete": (1, 1),
    "empty": (1, 1),
    "wheel": (1, 1),
    "fan": (2, 2),
    "kpartite": (2, None),
    "multifan": (2, None),
}
VARIADIC = {"kpartite", "multifan", "lollipop"}

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<punct>[(),:;]))")


def _tokenize(expr: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(expr):
        if expr[pos:].strip() == "":
            break
        m = _TOKEN.match(expr, pos)
        if not m:
            bad = len(expr) - len(expr[pos:].lstrip())
            raise FamilySyntaxError(f"unexpected character {expr[bad]!r}", expr, bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(expr)))
    return tokens


class _Parser:
    def __init__(self, expr: str):
        self.expr = expr
        self.tokens = _tokenize(expr)
        self.i = 0
        self.pjoin_depth = 0

    def peek(self, offset: int = 0) -> tuple[str, str, int]:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise FamilySyntaxError(message, self.expr, tok[2])

    def expect(self, value: str) -> None:
        tok = self.peek()
        if tok[1] != value or tok[0] not in ("punct",):
            self.fail(f"expected {value!r}, found {tok[1] or 'end of input'!r}")
        self.i += 1

    def integer(self) -> int:
        tok = self.peek()
        if tok[0] != "int":
            self.fail(f"expected an integer, found {tok[1] or 'end of input'!r}")
        self.i += 1
        return int(tok[1])

    def int_list(self, limit: int | None = None) -> list[int]:
        vals = [self.integer()]
        while (limit is None or len(vals) < limit) and self.peek()[1] == "," and self.peek(1)[0] == "int":
            self.i += 1
            vals.append(self.integer())
        return vals

    def spec(self) -> FamilySpec:
        tok = self.peek()
        if tok[0] == "punct" and tok[1] == "(":
            self.i += 1
            inner = self.spec()
            self.expect(")")
            return inner
        if tok[0] != "name":
            self.fail(f"expected a family name, found {tok[1] or 'end of input'!r}")
        name = tok[1].lower()
        self.i += 1
        if name == "join":
            self.expect("(")
            a = self.spec()
            self.expect(",")
            b = self.spec()
            self.expect(")")
            return FamilySpec("join", (), (a, b))
        if name == "pjoin":
            self.expect("(")
            self.pjoin_depth += 1
            a = self.spec()
            self.pjoin_depth -= 1
            self.expect(",")
            q = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            return FamilySpec("pjoin", (q, r), (a,))
        if name == "lollipop":
            self.expect(":")
            m = self.integer()
            self.expect(";")
            return FamilySpec("lollipop", (m, tuple(self.int_list())))
        if name not in ARITY:
            self.fail(f"unknown family {tok[1]!r}", tok)
        self.expect(":")
        args_tok = self.peek()
        lo, hi = ARITY[name]
        # inside pjoin the trailing q,r belong to pjoin, so stop at the arity
        args = self.int_list(hi if self.pjoin_depth else None)
        if len(args) < lo or (hi is not None and len(args) > hi):
            want = str(lo) if lo == hi else f"at least {lo}"
            self.fail(f"{name} takes {want} argument(s), got {len(args)}", args_tok)
        return FamilySpec(name, tuple(args))


def parse_family(expr: str) -> FamilySpec:
    parser = _Parser(expr)
    spec = parser.spec()
    if parser.peek()[0] != "end":
        parser.fail(f"trailing input {parser.peek()[1]!r}")
    return spec


def family(spec: FamilySpec | str) -> Graph:
    """Build the labeled graph described by ``spec``.

    ``wheel:N`` is the wheel on N vertices (rim C_{N-1}, hub N).
    """
    if isinstance(spec, str):
        spec = parse_family(spec)
    kind, params = spec.kind, spec.params
    if kind == "join":
        return graphs.join(family(spec.children[0]), family(spec.children[1]))
    if kind == "pjoin":
        q, r = params
        return graphs.partial_join(family(spec.children[0]), q, r)
    if kind == "lollipop":
        m, handles = params
        return graphs.lollipop(m, handles)
    if kind == "wheel":
        (n,) = params
        if n < 4:
            raise GraphError("wheel needs at least 4 vertices")
        return graphs.wheel(n - 1)
    if kind == "fan":
        return graphs.fan(*params)
    if kind in ("kpartite", "multifan"):
        return getattr(graphs, kind)(list(params))
    if kind in ("path", "cycle", "complete", "empty"):
        return getattr(graphs, kind)(params[0])
    raise GraphError(f"unknown family {kind!r}")
