"""Module-spec parsing and deterministic text, JSON and DOT output.

Grammar (whitespace is ignored between tokens)::

    sum   := '0' | term ('+' term)*
    term  := [int '*'] atom
    atom  := ('I'|'S'|'C'|'P'|'J') '(' int ')' | ('B'|'T') '(' int ',' int ')'
"""

from __future__ import annotations

import json
import re
from collections import Counter

from .arquiver import ARQuiver
from .catalog import Alias, AliasSpec, ModuleSum, ZERO, normalize
from .errors import ParseError
from .orbits import AlgebraCtx

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z]+)|(?P<sym>[()+*,]))")
_SINGLE = {"I": Alias.IRR, "S": Alias.STAN, "C": Alias.COST, "P": Alias.PROJ, "J": Alias.INJ}
_DOUBLE = {"B": Alias.B, "T": Alias.T}


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", _byte(text, start))
        kind = m.lastgroup
        out.append((kind, m.group(kind), _byte(text, m.start(kind))))
        pos = m.end()
    out.append(("end", "", _byte(text, len(text))))
    return out


def _byte(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] if tok[0] != "end" else "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take("int")[1])

    def atom(self) -> AliasSpec:
        kind, name, off = self.take("name")
        if name in _SINGLE:
            self.take("sym", "(")
            k = self.integer()
            if self.peek()[1] == ",":
                raise ParseError(f"{name} takes one argument", self.peek()[2])
            self.take("sym", ")")
            return AliasSpec(_SINGLE[name], k)
        if name in _DOUBLE:
            self.take("sym", "(")
            k = self.integer()
            if self.peek()[1] != ",":
                raise ParseError(f"{name} takes two arguments", self.peek()[2])
            self.take("sym", ",")
            l = self.integer()
            self.take("sym", ")")
            return AliasSpec(_DOUBLE[name], k, l)
        raise ParseError(f"unknown module family {name!r}", off)

    def term(self) -> tuple[int, AliasSpec]:
        mult = 1
        if self.peek()[0] == "int":
            _, value, off = self.take("int")
            self.take("sym", "*")
            mult = int(value)
            if mult < 1:
                raise ParseError("multiplicity must be positive", off)
        return mult, self.atom()

    def sum(self) -> list[tuple[int, AliasSpec]]:
        first = self.peek()
        if first[0] == "int" and first[1] == "0" and self.toks[self.i + 1][0] == "end":
            self.i += 1
            return []
        terms = [self.term()]
        while self.peek()[1] == "+":
            self.take("sym", "+")
            terms.append(self.term())
        self.take("end")
        return terms


def parse_module_spec(text: str) -> list[tuple[int, AliasSpec]]:
    """Parse a spec into (multiplicity, alias) terms; '0' gives an empty list."""
    if not text.strip():
        raise ParseError("empty module spec", 0)
    return _Parser(text).sum()


def spec_to_sum(ctx: AlgebraCtx, terms: list[tuple[int, AliasSpec]]) -> ModuleSum:
    out = ZERO
    for mult, spec in terms:
        out = out + normalize(ctx, spec).scaled(mult)
    return out


def parse_sum(ctx: AlgebraCtx, text: str) -> ModuleSum:
    return spec_to_sum(ctx, parse_module_spec(text))


def format_sum(s: ModuleSum) -> str:
    return str(s)


def format_factors(c: Counter) -> str:
    return ", ".join(str(k) for k in sorted(c.elements()))


def emit_json(value) -> str:
    """Compact JSON with sorted keys, so equal values give identical bytes."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def sum_to_json(s: ModuleSum) -> dict:
    return {"summands": [{"module": str(m), "mult": c} for m, c in s.items()]}


def quiver_to_json(q: ARQuiver) -> dict:
    orb = q.orbit
    local = {str(v): str(q.to_global(v)) for v in q.vertices}
    block = {
        "family": q.ctx.family.value,
        "n": q.ctx.n,
        "ell": q.ctx.ell,
        "members": list(orb.members),
        "labels": list(orb.labels),
        "critical": orb.critical,
        "degenerate": q.degenerate,
        "local": local,
    }
    return {
        "block": block,
        "vertices": [str(v) for v in q.global_vertices()],
        "arrows": [[str(u), str(v)] for u, v in q.global_arrows()],
        "tau": {str(v): str(t) for v, t in q.global_tau().items()},
    }


def emit_dot(q: ARQuiver, show_tau: bool = False) -> str:
    """One DOT digraph per block; dashed edges run from tau(V) to V."""
    name = "block_" + "_".join(str(k) for k in q.orbit.members)
    lines = [f'digraph "{name}" {{']
    for v in q.global_vertices():
        lines.append(f'  "{v}";')
    for u, v in q.global_arrows():
        lines.append(f'  "{u}" -> "{v}";')
    if show_tau:
        pairs = sorted(q.global_tau().items(), key=lambda p: (p[1].sort_key(), p[0].sort_key()))
        for v, t in pairs:
            lines.append(f'  "{t}" -> "{v}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
