"""Auslander-Reiten quivers of the blocks, built from closed-form tau-orbits.

Inside one non-critical orbit with local labels 1..s the indecomposables are
written B_a^l, T_a^l, I_a = B_a^0 and P_a (projective-injective, a >= 2).
P_1 = T_1^1 and J_1 = B_1^1 are the projective cover and injective hull of
I_1.  The tau-orbits come from the (t_0) chain and from the reflection-deletion
trick; arrows come from a small set of seed morphisms woven along pairs of
contiguous tau-orbits.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .catalog import Indec, bmod, composition_factors, crit, dual, proj, tmod
from .errors import DomainError
from .orbits import AlgebraCtx, OrbitView, orbit_of, partition


class Local(NamedTuple):
    """A vertex over local labels: kind is 'B', 'T', 'P' or 'C' (critical)."""

    kind: str
    a: int
    l: int = 0

    def __str__(self) -> str:
        if self.kind == "P":
            return f"P_{self.a}"
        if self.kind == "C":
            return f"C_{self.a}"
        if self.kind == "B" and self.l == 0:
            return f"I_{self.a}"
        return f"{self.kind}_{self.a}^{self.l}"

    @property
    def irreducible(self) -> bool:
        return self.kind == "B" and self.l == 0

    def dual(self) -> "Local":
        if self.kind == "B" and self.l >= 1:
            return Local("T", self.a, self.l)
        if self.kind == "T":
            return Local("B", self.a, self.l)
        return self


def I(a: int) -> Local:  # noqa: E743
    return Local("B", a, 0)


def B(a: int, l: int) -> Local:
    return Local("B", a, l)


def T(a: int, l: int) -> Local:
    return Local("T", a, l)


def P(a: int) -> Local:
    return Local("P", a, 0)


class Shape(enum.Enum):
    CHAIN = "chain"
    CYCLE = "cycle"


@dataclass(frozen=True)
class TauOrbit:
    """Members listed so that each one is tau^{-1} of the previous one."""

    id: str
    shape: Shape
    members: tuple[Local, ...]

    @property
    def rank(self) -> int:
        """Position in the contiguity order t0, i2, t2, i4, t4, ..."""
        kind, index = self.id[0], int(self.id[1:])
        return index if kind == "t" else index - 1


def reflect_delete(k: int, j: int, s: int) -> Local | None:
    """Apply the reflection-deletion trick to the zigzag B_k^j over labels 1..s.

    Vertex k sits in the bottom row and the rows alternate.  Returns None for
    the zero module.
    """
    if not (0 <= j <= 2 * s + 1 and -s <= k <= s and 1 <= j + k <= 2 * s + 1):
        raise DomainError(f"reflection-deletion needs valid (k, j, s), got ({k}, {j}, {s})")
    vertices = list(range(k, k + j + 1))
    doomed: set[int] = set()
    for m in vertices:
        if m <= 0:
            doomed.update((m, -m))
        elif m >= s + 1:
            doomed.update((m, 2 * (s + 1) - m))
    survivors = [(off, m) for off, m in enumerate(vertices) if m not in doomed]
    if not survivors:
        return None
    offsets = [off for off, _ in survivors]
    if offsets != list(range(offsets[0], offsets[0] + len(offsets))):
        raise DomainError(f"reflection-deletion of B_{k}^{j} left a disconnected zigzag")
    first_off, a = survivors[0]
    length = len(survivors) - 1
    if length == 0:
        return I(a)
    return B(a, length) if first_off % 2 == 0 else T(a, length)


def _close(tag: str, rd_seq: list[Local]) -> TauOrbit:
    left = [x.dual() for x in reversed(rd_seq) if not x.irreducible]
    return TauOrbit(tag, Shape.CYCLE, tuple(left + rd_seq))


def _t0(s: int, degenerate: bool) -> TauOrbit:
    i = s // 2
    ups = [T(2 * r + 1, 1) for r in range(i)]
    mid = [I(2 * i + 1)] if s % 2 else []
    downs = [B(2 * r + 1, 1) for r in reversed(range(i))]
    shape = Shape.CYCLE if degenerate else Shape.CHAIN
    return TauOrbit("t0", shape, tuple(ups + mid + downs))


def tau_orbits(s: int, degenerate: bool = False) -> list[TauOrbit]:
    """All s tau-orbits of a block with s labels, in contiguity order.

    In the degenerate case the (t_0) chain closes into a cycle, since T_1^1
    and B_1^1 are then neither projective nor injective.
    """
    if s < 2:
        raise DomainError("tau-orbits are built for orbits with at least two labels")
    i = s // 2
    odd = s % 2 == 1
    found: dict[str, TauOrbit] = {"t0": _t0(s, degenerate)}
    for l in range(1, (s - 1) // 2 + 1):
        m = 2 * l
        starts = ([2 * i + 1 - m] if odd else []) + list(range(2 * i - 1 - m, -m, -2))
        found[f"t{2 * l}"] = _close(f"t{2 * l}", [reflect_delete(a, 2 * m + 1, s) for a in starts])
    for l in range(1, s // 2 + 1):
        m = 2 * l if odd else 2 * i + 1 - 2 * l
        starts = list(range(2 * i + 1 - m, -m, -2))
        found[f"i{2 * l}"] = _close(f"i{2 * l}", [reflect_delete(a, 2 * m - 1, s) for a in starts])
    return sorted(found.values(), key=lambda o: o.rank)


def seed_morphisms(s: int) -> list[tuple[Local, Local]]:
    """The 6s - 6 seed irreducible morphisms of a block with s >= 2 labels."""
    if s < 2:
        raise DomainError("seed morphisms need s >= 2")
    out = [(B(1, 1), I(2)), (I(2), T(1, 1))]
    for j in range(2, s):
        t, b = T(j - 1, 2), B(j - 1, 2)
        for mid in (P(j), I(j - 1), I(j + 1)):
            out += [(t, mid), (mid, b)]
    t, b = T(s - 1, 1), B(s - 1, 1)
    for mid in (P(s), I(s - 1)):
        out += [(t, mid), (mid, b)]
    return out


@dataclass
class TauMap:
    """tau and tau^{-1} on the members of a family of tau-orbits."""

    orbits: list[TauOrbit]
    tau: dict[Local, Local] = field(default_factory=dict)
    tau_inv: dict[Local, Local] = field(default_factory=dict)
    orbit_of: dict[Local, TauOrbit] = field(default_factory=dict)

    def __post_init__(self):
        for o in self.orbits:
            ms = o.members
            for idx, v in enumerate(ms):
                if v in self.orbit_of:
                    raise DomainError(f"{v} lies in two tau-orbits")
                self.orbit_of[v] = o
                if idx + 1 < len(ms):
                    self.tau_inv[v] = ms[idx + 1]
                    self.tau[ms[idx + 1]] = v
            if o.shape is Shape.CYCLE:
                self.tau_inv[ms[-1]] = ms[0]
                self.tau[ms[0]] = ms[-1]


def weave(taus: TauMap, seed: tuple[Local, Local]) -> set[tuple[Local, Local]]:
    """All arrows forced by one arrow between two contiguous tau-orbits.

    From u -> v one gets v -> tau^{-1}u and tau(v) -> u; iterating both rules
    walks the zigzag between the two orbits until it closes or hits an end.
    """
    u, v = seed
    if u not in taus.orbit_of or v not in taus.orbit_of:
        raise DomainError(f"seed {u} -> {v} does not join two tau-orbits")
    ra, rb = taus.orbit_of[u].rank, taus.orbit_of[v].rank
    if abs(ra - rb) != 1:
        raise DomainError(
            f"seed {u} -> {v} joins non-contiguous orbits "
            f"{taus.orbit_of[u].id} and {taus.orbit_of[v].id}"
        )
    out = {seed}
    todo = [seed]
    while todo:
        x, y = todo.pop()
        nxt = []
        if x in taus.tau_inv:
            nxt.append((y, taus.tau_inv[x]))
        if y in taus.tau:
            nxt.append((taus.tau[y], x))
        for arrow in nxt:
            if arrow not in out:
                out.add(arrow)
                todo.append(arrow)
    return out


@dataclass
class ARQuiver:
    """The quiver of one block, over local labels, with the bridge to global classes."""

    ctx: AlgebraCtx
    orbit: OrbitView
    vertices: list[Local]
    arrows: set[tuple[Local, Local]]
    tau_map: dict[Local, Local]
    tau_orbits: list[TauOrbit]
    degenerate: bool = False

    @property
    def s(self) -> int:
        return self.orbit.s

    def tau(self, v: Local) -> Local | None:
        if v not in self.vertices:
            raise DomainError(f"{v} is not a vertex of this block")
        return self.tau_map.get(v)

    def tau_inv(self, v: Local) -> Local | None:
        if v not in self.vertices:
            raise DomainError(f"{v} is not a vertex of this block")
        for x, y in self.tau_map.items():
            if y == v:
                return x
        return None

    def to_global(self, v: Local) -> Indec:
        k = self.orbit.global_label(v.a)
        if v.kind == "C":
            return crit(self.ctx, k)
        if v.kind == "P":
            return proj(self.ctx, k)
        if v.kind == "B":
            return bmod(self.ctx, k, v.l)
        return tmod(self.ctx, k, v.l)

    def global_vertices(self) -> list[Indec]:
        return sorted((self.to_global(v) for v in self.vertices), key=lambda m: m.sort_key())

    def global_arrows(self) -> list[tuple[Indec, Indec]]:
        pairs = [(self.to_global(u), self.to_global(v)) for u, v in self.arrows]
        return sorted(pairs, key=lambda p: (p[0].sort_key(), p[1].sort_key()))

    def global_tau(self) -> dict[Indec, Indec]:
        return {self.to_global(v): self.to_global(t) for v, t in self.tau_map.items()}


def _local_block(s: int, degenerate: bool) -> tuple[list[Local], set, dict, list[TauOrbit]]:
    if degenerate and s == 1:
        verts = [I(1), P(1)]
        return verts, {(I(1), P(1)), (P(1), I(1))}, {I(1): I(1)}, []
    orbits = tau_orbits(s, degenerate)
    taus = TauMap(orbits)
    arrows: set[tuple[Local, Local]] = set()
    for u, v in seed_morphisms(s):
        if u.kind == "P" or v.kind == "P":
            arrows.add((u, v))
        else:
            arrows |= weave(taus, (u, v))
    verts = [v for o in orbits for v in o.members] + [P(a) for a in range(2, s + 1)]
    if degenerate:
        verts.append(P(1))
        arrows |= {(B(1, 1), P(1)), (P(1), T(1, 1))}
    return verts, arrows, dict(taus.tau), orbits


def build_block_quiver(ctx: AlgebraCtx, orbit: OrbitView) -> ARQuiver:
    """The AR quiver of the block attached to one class of the partition."""
    if orbit.critical:
        return ARQuiver(ctx, orbit, [Local("C", 1)], set(), {}, [])
    degenerate = orbit.is_degenerate_orbit
    if orbit.s == 1 and not degenerate:
        return ARQuiver(ctx, orbit, [I(1)], set(), {}, [])
    verts, arrows, tau_map, orbits = _local_block(orbit.s, degenerate)
    return ARQuiver(ctx, orbit, verts, arrows, tau_map, orbits, degenerate)


def local_quiver(s: int, degenerate: bool = False) -> tuple[list[Local], set, dict]:
    """Vertices, arrows and tau of an abstract block with s labels."""
    verts, arrows, tau_map, _ = _local_block(s, degenerate)
    return verts, arrows, tau_map


def full_quiver(ctx: AlgebraCtx) -> list[ARQuiver]:
    return [build_block_quiver(ctx, orb) for orb in partition(ctx)]


def quiver_for_label(ctx: AlgebraCtx, k: int) -> ARQuiver:
    return build_block_quiver(ctx, orbit_of(ctx, k))


def verify_almost_split(q: ARQuiver) -> list[str]:
    """Check the factor accounting of every almost split sequence of a block.

    Returns a list of human-readable violations (empty when all checks pass).
    """
    problems: list[str] = []
    inv = {t: v for v, t in q.tau_map.items()}
    into: dict[Local, list[Local]] = {v: [] for v in q.vertices}
    out_of: dict[Local, list[Local]] = {v: [] for v in q.vertices}
    for u, v in q.arrows:
        if u not in into or v not in into:
            problems.append(f"arrow {u} -> {v} leaves the vertex set")
            continue
        into[v].append(u)
        out_of[u].append(v)
    fac = {v: composition_factors(q.to_global(v)) for v in q.vertices}

    def total(vs):
        c: Counter = Counter()
        for x in vs:
            c += fac[x]
        return c

    for v in q.vertices:
        if v in q.tau_map:
            tv = q.tau_map[v]
            if fac[tv] + fac[v] != total(into[v]):
                problems.append(f"factors of tau({v}) + {v} differ from arrows into {v}")
            for u in q.vertices:
                if (u, v) in q.arrows and (tv, u) not in q.arrows:
                    problems.append(f"arrow {u} -> {v} lacks its mesh partner {tv} -> {u}")
                if (tv, u) in q.arrows and (u, v) not in q.arrows:
                    problems.append(f"arrow {tv} -> {u} lacks its mesh partner {u} -> {v}")
        if v in inv:
            w = inv[v]
            if fac[v] + fac[w] != total(out_of[v]):
                problems.append(f"factors of {v} + tau^-1({v}) differ from arrows out of {v}")
    verts = set(q.vertices)
    for v in q.vertices:
        if v.dual() not in verts or q.to_global(v.dual()) != dual(q.to_global(v)):
            problems.append(f"dual of {v} is not a vertex")
    for u, v in q.arrows:
        if (v.dual(), u.dual()) not in q.arrows:
            problems.append(f"arrow {u} -> {v} has no dual arrow")
    return problems
