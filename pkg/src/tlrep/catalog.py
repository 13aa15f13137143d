"""Canonical indecomposable classes and their structural data.

Every indecomposable module is isomorphic to exactly one of

* ``CRIT(k)``: the standard module of a critical label (irreducible,
  projective and injective),
* ``PROJ(k)``: a principal indecomposable that is not a standard module,
* ``B(k, l)`` and ``T(k, l)``: the two zigzag families with l + 1 composition
  factors k, k^1, ..., k^l.  ``B(k, 0)`` is the irreducible ``Irr(k)``.

The alias forms Irr, Stan, Cost, Proj and Inj are resolved by ``normalize``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError
from .orbits import (
    AlgebraCtx,
    OrbitView,
    in_lambda,
    in_lambda0,
    is_critical,
    lambda_set,
    neighbor,
    orbit_of,
    partition,
)


class Kind(enum.IntEnum):
    """Summand kinds; the integer value fixes the print order within a label."""

    B = 0
    T = 1
    PROJ = 2
    CRIT = 3


@dataclass(frozen=True, order=True)
class Indec:
    """A canonical indecomposable class.  ``l`` is 0 for PROJ and CRIT."""

    ctx: AlgebraCtx
    kind: Kind
    k: int
    l: int = 0

    def sort_key(self):
        return (self.k, int(self.kind), self.l)

    def __str__(self) -> str:
        if self.kind is Kind.B:
            return f"B({self.k},{self.l})"
        if self.kind is Kind.T:
            return f"T({self.k},{self.l})"
        return f"P({self.k})"

    __repr__ = __str__


class ModuleSum:
    """A finite direct sum of canonical classes; the empty sum is the zero module."""

    __slots__ = ("_c",)

    def __init__(self, items: Iterable[Indec] | Counter | None = None):
        self._c: Counter = Counter()
        if items is None:
            return
        if isinstance(items, Counter):
            for m, mult in items.items():
                if mult < 0:
                    raise ValueError("negative multiplicity")
                if mult:
                    self._c[m] += mult
        else:
            for m in items:
                self._c[m] += 1

    @classmethod
    def of(cls, *items: Indec) -> "ModuleSum":
        return cls(items)

    def __add__(self, other: "ModuleSum") -> "ModuleSum":
        return ModuleSum(self._c + other._c)

    def scaled(self, mult: int) -> "ModuleSum":
        return ModuleSum(Counter({m: c * mult for m, c in self._c.items()}))

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleSum) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return sum(self._c.values())

    def items(self) -> list[tuple[Indec, int]]:
        """(summand, multiplicity) pairs in print order."""
        return sorted(self._c.items(), key=lambda kv: kv[0].sort_key())

    def summands(self) -> Iterator[Indec]:
        for m, c in self.items():
            for _ in range(c):
                yield m

    def map(self, f) -> "ModuleSum":
        out = ModuleSum()
        for m, c in self.items():
            out = out + f(m).scaled(c)
        return out

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for m, c in self.items():
            parts.append(str(m) if c == 1 else f"{c}*{m}")
        return " + ".join(parts)

    __repr__ = __str__


ZERO = ModuleSum()


class Alias(enum.Enum):
    """Input forms accepted by ``normalize``."""

    IRR = "I"
    STAN = "S"
    COST = "C"
    PROJ = "P"
    INJ = "J"
    B = "B"
    T = "T"


@dataclass(frozen=True)
class AliasSpec:
    alias: Alias
    k: int
    l: int | None = None

    def __str__(self) -> str:
        if self.alias in (Alias.B, Alias.T):
            return f"{self.alias.value}({self.k},{self.l})"
        return f"{self.alias.value}({self.k})"


# ---------------------------------------------------------------------------
# construction and validation


def crit(ctx, k):
    return Indec(ctx, Kind.CRIT, k)


def proj(ctx, k):
    return Indec(ctx, Kind.PROJ, k)


def bmod(ctx, k, l):
    return Indec(ctx, Kind.B, k, l)


def tmod(ctx, k, l):
    return Indec(ctx, Kind.T, k, l)


def _orbit(ctx: AlgebraCtx, k: int) -> OrbitView:
    return orbit_of(ctx, k)


def orbit_of_class(m: Indec) -> OrbitView:
    return orbit_of(m.ctx, m.k)


def validate(m: Indec) -> bool:
    """True iff ``m`` is a canonical class over its algebra."""
    ctx = m.ctx
    if not in_lambda(ctx, m.k):
        return False
    if m.kind is Kind.CRIT:
        return is_critical(ctx, m.k) and m.l == 0
    if is_critical(ctx, m.k) or not in_lambda0(ctx, m.k):
        return False
    orb = _orbit(ctx, m.k)
    if m.kind is Kind.PROJ:
        return m.l == 0 and m.k > orb.k_L
    lo = 0 if m.kind is Kind.B else 1
    if m.l < lo:
        return False
    return neighbor(ctx, m.k, m.l) <= orb.k_R


def check(m: Indec) -> Indec:
    if not validate(m):
        raise DomainError(f"{m} is not a valid indecomposable over {m.ctx}")
    return m


def _single(m: Indec) -> ModuleSum:
    return ModuleSum.of(m)


def normalize(ctx: AlgebraCtx, spec: AliasSpec, strict: bool = True) -> ModuleSum:
    """Resolve an alias to its canonical class (or to the zero module).

    With ``strict`` a label outside Lambda_n raises DomainError.  The lenient
    mode treats any label outside Lambda_{n,0} (and any negative length) as
    the zero module; the functors use it to drop out-of-range summands.
    """
    a, k, l = spec.alias, spec.k, spec.l
    if a in (Alias.B, Alias.T):
        if l is None:
            raise DomainError(f"{a.value} needs a length")
    elif l is not None:
        raise DomainError(f"{a.value} takes a single label")
    if not in_lambda(ctx, k):
        if strict:
            raise DomainError(f"label {k} is not in Lambda_{ctx.n} for {ctx}")
        return ZERO
    if a in (Alias.B, Alias.T) and l < 0:
        if strict:
            raise DomainError(f"negative length {l}")
        return ZERO
    if ctx.degenerate and k == 0:
        if a is Alias.IRR:
            return ZERO
        if a in (Alias.STAN, Alias.COST):
            return _single(bmod(ctx, 2, 0))
        if strict or a in (Alias.B, Alias.T):
            raise DomainError(f"{spec} does not exist in the degenerate case")
        return ZERO
    if is_critical(ctx, k):
        if a in (Alias.B, Alias.T) and l != 0:
            raise DomainError(f"{spec}: critical labels carry no zigzag module")
        return _single(crit(ctx, k))
    orb = _orbit(ctx, k)
    if a is Alias.IRR:
        return _single(bmod(ctx, k, 0))
    if a in (Alias.STAN, Alias.COST):
        if k == orb.k_R:
            return _single(bmod(ctx, k, 0))
        return _single(tmod(ctx, k, 1) if a is Alias.STAN else bmod(ctx, k, 1))
    if a in (Alias.PROJ, Alias.INJ):
        if k > orb.k_L:
            return _single(proj(ctx, k))
        if k == orb.k_R:
            return _single(bmod(ctx, k, 0))
        return _single(tmod(ctx, k, 1) if a is Alias.PROJ else bmod(ctx, k, 1))
    kind = Kind.B if a is Alias.B or l == 0 else Kind.T
    m = Indec(ctx, kind, k, l)
    if not validate(m):
        if strict:
            raise DomainError(f"{spec} is not a valid indecomposable over {ctx}")
        raise DomainError(f"{spec} has its last factor outside Lambda_{ctx.n}")
    return _single(m)


def lenient(ctx: AlgebraCtx, alias: Alias, k: int, l: int | None = None) -> ModuleSum:
    return normalize(ctx, AliasSpec(alias, k, l), strict=False)


def strict(ctx: AlgebraCtx, alias: Alias, k: int, l: int | None = None) -> ModuleSum:
    return normalize(ctx, AliasSpec(alias, k, l), strict=True)


def enumerate_indecomposables(ctx: AlgebraCtx, orbit: OrbitView | None = None) -> list[Indec]:
    """All canonical classes, optionally restricted to one orbit."""
    orbits = [orbit] if orbit is not None else partition(ctx)
    out = []
    for orb in orbits:
        if orb.critical:
            out.append(crit(ctx, orb.members[0]))
            continue
        labels = orb.labels
        for i, k in enumerate(labels):
            if k > orb.k_L:
                out.append(proj(ctx, k))
            # k^l stays in range while l <= number of members to the right
            right = len(orb.members) - 1 - orb.position(k)
            for l in range(right + 1):
                out.append(bmod(ctx, k, l))
                if l >= 1:
                    out.append(tmod(ctx, k, l))
    return out


# ---------------------------------------------------------------------------
# factors, socle, head, Loewy layers


def _steps(m: Indec) -> list[int]:
    return [neighbor(m.ctx, m.k, j) for j in range(m.l + 1)]


def composition_factors(m: Indec | ModuleSum) -> Counter:
    """The multiset of composition factor labels."""
    if isinstance(m, ModuleSum):
        out: Counter = Counter()
        for x, c in m.items():
            for k, d in composition_factors(x).items():
                out[k] += c * d
        return out
    check(m)
    ctx = m.ctx
    if m.kind is Kind.CRIT:
        return Counter([m.k])
    if m.kind is Kind.PROJ:
        k = m.k
        labels = [neighbor(ctx, k, -1), k, k, neighbor(ctx, k, 1)]
        return Counter(x for x in labels if in_lambda0(ctx, x))
    return Counter(_steps(m))


def socle_head(m: Indec) -> tuple[Counter, Counter]:
    """(socle, head) as label multisets."""
    check(m)
    if m.kind in (Kind.CRIT, Kind.PROJ):
        return Counter([m.k]), Counter([m.k])
    steps = _steps(m)
    if m.l == 0:
        return Counter(steps), Counter(steps)
    even = Counter(steps[0::2])
    odd = Counter(steps[1::2])
    return (even, odd) if m.kind is Kind.B else (odd, even)


def loewy_layers(m: Indec) -> list[Counter]:
    """Loewy layers, top layer first."""
    check(m)
    ctx = m.ctx
    if m.kind is Kind.CRIT or (m.kind is Kind.B and m.l == 0):
        return [Counter([m.k])]
    if m.kind is Kind.PROJ:
        mid = Counter(
            x for x in (neighbor(ctx, m.k, -1), neighbor(ctx, m.k, 1)) if in_lambda0(ctx, x)
        )
        if not mid:
            return [Counter([m.k]), Counter([m.k])]
        return [Counter([m.k]), mid, Counter([m.k])]
    soc, head = socle_head(m)
    return [head, soc]


def dual(m: Indec) -> Indec:
    """The twisted dual: swaps B and T of positive length, fixes everything else."""
    check(m)
    if m.kind is Kind.B and m.l >= 1:
        return tmod(m.ctx, m.k, m.l)
    if m.kind is Kind.T:
        return bmod(m.ctx, m.k, m.l)
    return m


def dual_sum(s: ModuleSum) -> ModuleSum:
    return s.map(lambda m: _single(dual(m)))


def is_projective(m: Indec) -> bool:
    if m.kind in (Kind.CRIT, Kind.PROJ):
        return True
    if m.kind is Kind.T and m.l == 1:
        orb = orbit_of_class(m)
        return m.k == orb.k_L and not orb.is_degenerate_orbit
    if m.kind is Kind.B and m.l == 0:
        return orbit_of_class(m).members == (m.k,)
    return False


def is_injective(m: Indec) -> bool:
    if m.kind is Kind.T and m.l == 1:
        return False
    if m.kind is Kind.B and m.l == 1:
        orb = orbit_of_class(m)
        return m.k == orb.k_L and not orb.is_degenerate_orbit
    return is_projective(m)


def projective_cover(m: Indec) -> ModuleSum:
    check(m)
    if m.kind in (Kind.CRIT, Kind.PROJ):
        return _single(m)
    _, head = socle_head(m)
    out = ZERO
    for k, c in head.items():
        out = out + strict(m.ctx, Alias.PROJ, k).scaled(c)
    return out


def injective_hull(m: Indec) -> ModuleSum:
    check(m)
    if m.kind in (Kind.CRIT, Kind.PROJ):
        return _single(m)
    soc, _ = socle_head(m)
    out = ZERO
    for k, c in soc.items():
        out = out + strict(m.ctx, Alias.INJ, k).scaled(c)
    return out


# ---------------------------------------------------------------------------
# presentations


def _deltas(m: Indec, l: int) -> tuple[int, int]:
    orb = orbit_of_class(m)
    d_left = int(m.k == orb.labels[0])
    d_right = int(neighbor(m.ctx, m.k, l) == orb.k_R)
    return d_left, d_right


def _zz(ctx, kind: Kind, k: int, l: int) -> ModuleSum:
    if l < 0 or not in_lambda0(ctx, k):
        return ZERO
    alias = Alias.B if kind is Kind.B else Alias.T
    return normalize(ctx, AliasSpec(alias, k, l))


def _require_zigzag(m: Indec, what: str):
    check(m)
    if m.kind not in (Kind.B, Kind.T):
        raise DomainError(f"{what} is only defined for zigzag modules, got {m}")


def coker_inj(m: Indec) -> ModuleSum:
    """Cokernel of the inclusion of m into its injective hull."""
    _require_zigzag(m, "coker_inj")
    ctx, k, l = m.ctx, m.k, m.l
    j, odd = divmod(l, 2)
    d_left, d_right = _deltas(m, l)
    degenerate_two = orbit_of_class(m).is_degenerate_orbit and k == 2
    if m.kind is Kind.B or l == 0:
        if degenerate_two:
            if odd:
                return _zz(ctx, Kind.T, 2, 2 * j)
            return _zz(ctx, Kind.T, 2, 2 * j + 1 - d_right)
        base = neighbor(ctx, k, 2 * d_left - 1)
        if odd:
            return _zz(ctx, Kind.B, base, 2 * (j - d_left) + 1)
        return _zz(ctx, Kind.B, base, 2 * (j + 1 - d_left) - d_right)
    up = neighbor(ctx, k, 1)
    if odd:
        return _zz(ctx, Kind.T, up, 2 * j + 1 - d_right)
    return _zz(ctx, Kind.T, up, 2 * (j - 1))


def ker_proj(m: Indec) -> ModuleSum:
    """Kernel of the projective cover of m."""
    _require_zigzag(m, "ker_proj")
    ctx, k, l = m.ctx, m.k, m.l
    j, odd = divmod(l, 2)
    d_left, d_right = _deltas(m, l)
    degenerate_two = orbit_of_class(m).is_degenerate_orbit and k == 2
    if m.kind is Kind.T or l == 0:
        if degenerate_two:
            if odd:
                return _zz(ctx, Kind.B, 2, 2 * j)
            return _zz(ctx, Kind.B, 2, 2 * j + 1 - d_right)
        base = neighbor(ctx, k, 2 * d_left - 1)
        if odd:
            return _zz(ctx, Kind.T, base, 2 * (j - d_left) + 1)
        return _zz(ctx, Kind.T, base, 2 * (j + 1 - d_left) - d_right)
    up = neighbor(ctx, k, 1)
    if odd:
        return _zz(ctx, Kind.B, up, 2 * j + 1 - d_right)
    return _zz(ctx, Kind.B, up, 2 * (j - 1))


def exact_sequences(m: Indec) -> list[tuple[ModuleSum, ModuleSum, ModuleSum]]:
    """Known non-split short exact sequences (sub, m, quot) with m in the middle."""
    check(m)
    if m.kind in (Kind.CRIT, Kind.PROJ):
        return []
    if m.kind is Kind.T:
        return [(dual_sum(q), _single(m), dual_sum(s)) for s, _, q in exact_sequences(dual(m))]
    ctx, k, l = m.ctx, m.k, m.l
    nb = lambda j: neighbor(ctx, k, j)  # noqa: E731
    out = []
    if l >= 2 and l % 2 == 0:
        out.append((_zz(ctx, Kind.B, k, l - 2), strict(ctx, Alias.STAN, nb(l - 1))))
        out.append((_zz(ctx, Kind.B, nb(2), l - 2), strict(ctx, Alias.COST, k)))
        out.append((strict(ctx, Alias.IRR, nb(l)), _zz(ctx, Kind.B, k, l - 1)))
    elif l % 2 == 1:
        out.append((_zz(ctx, Kind.B, k, l - 1), strict(ctx, Alias.IRR, nb(l))))
        if l >= 3 and nb(l) != orbit_of_class(m).k_R:
            out.append((_zz(ctx, Kind.B, nb(2), l - 2), strict(ctx, Alias.COST, k)))
    return [(s, _single(m), q) for s, q in out if s and q]
