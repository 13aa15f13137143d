"""Dimensions of Hom and Ext groups, and middle terms of non-split extensions.

Dimensions are exact integers.  Pairs for which no closed formula is
available (typically two zigzag modules of length at least 2) are reported as
``UNKNOWN`` rather than guessed.
"""

from __future__ import annotations

import enum
from collections import Counter

from .catalog import (
    ZERO,
    Indec,
    Kind,
    ModuleSum,
    check,
    composition_factors,
    dual,
    is_injective,
    is_projective,
    orbit_of_class,
    socle_head,
    tmod,
    bmod,
    proj,
)
from .errors import DomainError
from .orbits import neighbor


class _Unknown:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "unknown"

    __str__ = __repr__


UNKNOWN = _Unknown()


class Side(enum.Enum):
    SUB = "sub"
    QUOT = "quot"


def _role(m: Indec) -> str | None:
    """Which row of the tables m belongs to: I, S, C, P, or None."""
    if m.kind is Kind.B and m.l == 0:
        return "I"
    if m.kind is Kind.T and m.l == 1:
        return "S"
    if m.kind is Kind.B and m.l == 1:
        return "C"
    if m.kind is Kind.PROJ:
        return "P"
    return None


def _d(a: int, b: int) -> int:
    return int(a == b)


def _hom_table(ctx, r1: str, k: int, r2: str, k2: int) -> int:
    nb = lambda j: neighbor(ctx, k, j)  # noqa: E731
    km, kp = nb(-1), nb(1)
    table = {
        ("I", "I"): _d(k2, k),
        ("I", "S"): _d(k2, km),
        ("I", "C"): _d(k2, k),
        ("I", "P"): _d(k2, k),
        ("S", "I"): _d(k2, k),
        ("S", "S"): _d(k2, k) + _d(k2, km),
        ("S", "C"): _d(k2, k),
        ("S", "P"): _d(k2, k) + _d(k2, kp),
        ("C", "I"): _d(k2, kp),
        ("C", "S"): _d(k2, k),
        ("C", "C"): _d(k2, k) + _d(k2, kp),
        ("C", "P"): _d(k2, k) + _d(k2, kp),
        ("P", "I"): _d(k2, k),
        ("P", "S"): _d(k2, k) + _d(k2, km),
        ("P", "C"): _d(k2, k) + _d(k2, km),
        ("P", "P"): 2 * _d(k2, k) + _d(k2, km) + _d(k2, kp),
    }
    return table[(r1, r2)]


def _ext_table(ctx, r1: str, k: int, r2: str, k2: int, k_right: int) -> int:
    nb = lambda j: neighbor(ctx, k, j)  # noqa: E731
    table = {
        ("I", "I"): _d(k2, nb(-1)) + _d(k2, nb(1)),
        ("I", "S"): _d(k2, nb(-1)) * _d(k, k_right) + _d(k2, nb(-2)),
        ("I", "C"): _d(k2, nb(1)),
        ("S", "I"): _d(k2, nb(-1)),
        ("S", "S"): _d(k2, nb(-1)) + _d(k2, nb(-2)),
        ("S", "C"): 0,
        ("C", "I"): _d(k2, nb(1)) * _d(k2, k_right) + _d(k2, nb(2)),
        ("C", "S"): 0,
        ("C", "C"): _d(k2, nb(1)) + _d(k2, nb(2)),
    }
    return table[(r1, r2)]


def _same_block(m: Indec, n: Indec) -> bool:
    return m.k in orbit_of_class(n).members


def separation_vanishes(m: Indec, n: Indec) -> bool:
    """True when all factor positions of m and n differ by more than one step.

    This covers modules in different blocks, where every Hom and Ext vanishes.
    """
    check(m)
    check(n)
    if not _same_block(m, n):
        return True
    orb = orbit_of_class(m)
    if orb.critical:
        return False
    pm = {orb.position(k) for k in composition_factors(m)}
    pn = {orb.position(k) for k in composition_factors(n)}
    return all(abs(i - j) > 1 for i in pm for j in pn)


def _hom_projective_side(m: Indec, n: Indec):
    """Hom from a projective cover or into an injective hull of an irreducible."""
    if is_projective(m):
        return composition_factors(n)[m.k]
    if is_injective(n):
        return composition_factors(m)[n.k]
    return None


def hom_dim(m: Indec, n: Indec):
    """dim Hom(m, n), or UNKNOWN."""
    check(m)
    check(n)
    if not _same_block(m, n):
        return 0
    if m.kind is Kind.CRIT:
        return 1
    r1, r2 = _role(m), _role(n)
    if r1 and r2:
        return _hom_table(m.ctx, r1, m.k, r2, n.k)
    if r1 == "I":
        return socle_head(n)[0][m.k]
    if r2 == "I":
        return socle_head(m)[1][n.k]
    v = _hom_projective_side(m, n)
    if v is not None:
        return v
    if separation_vanishes(m, n):
        return 0
    return UNKNOWN


def _ext_irr_b(kp: int, b: Indec) -> int:
    """Ext(Irr(kp), B(k, l)) for l >= 2."""
    j, odd = divmod(b.l, 2)
    top = j if odd else j + 1
    return sum(_d(kp, neighbor(b.ctx, b.k, 2 * i - 1)) for i in range(0, top + 1))


def _ext_b_irr(b: Indec, kp: int) -> int:
    """Ext(B(k, l), Irr(kp)) for l >= 2."""
    j, odd = divmod(b.l, 2)
    top = j + 1 if odd else j - 1
    total = sum(_d(kp, neighbor(b.ctx, b.k, 2 * i)) for i in range(1, top + 1))
    if b.l == 2:
        # Proj(k^+) is a non-split extension of B(k, 2) by its socle Irr(k^+).
        total += _d(kp, neighbor(b.ctx, b.k, 1))
    return total


def _degenerate_ext_exception(m: Indec, n: Indec):
    orb = orbit_of_class(m)
    if not orb.is_degenerate_orbit or m.k != 2 or n.k != 2:
        return None
    r1, r2 = _role(m), _role(n)
    if (r1, r2) in {("I", "I"), ("I", "C"), ("S", "I")}:
        if (r1, r2) == ("I", "I") and m.ctx.n != 2:
            return None
        return 1
    return None


def ext_dim(m: Indec, n: Indec):
    """dim Ext^1(m, n), or UNKNOWN."""
    check(m)
    check(n)
    if not _same_block(m, n):
        return 0
    if m.kind is Kind.CRIT:
        return 0
    exc = _degenerate_ext_exception(m, n)
    if exc is not None:
        return exc
    if is_projective(m) or is_injective(n):
        return 0
    r1, r2 = _role(m), _role(n)
    if r1 in ("I", "S", "C") and r2 in ("I", "S", "C"):
        return _ext_table(m.ctx, r1, m.k, r2, n.k, orbit_of_class(n).k_R)
    if r1 == "I" and n.l >= 2:
        if n.kind is Kind.B:
            return _ext_irr_b(m.k, n)
        return _ext_b_irr(dual(n), m.k)
    if r2 == "I" and m.l >= 2:
        if m.kind is Kind.B:
            return _ext_b_irr(m, n.k)
        return _ext_irr_b(n.k, dual(m))
    if separation_vanishes(m, n):
        return 0
    return UNKNOWN


def sum_dim(f, a: ModuleSum, b: ModuleSum):
    """Extend a bilinear dimension function additively to direct sums."""
    total = 0
    for x, cx in a.items():
        for y, cy in b.items():
            v = f(x, y)
            if v is UNKNOWN:
                return UNKNOWN
            total += cx * cy * v
    return total


def socle_of_sum(s: ModuleSum) -> Counter:
    out: Counter = Counter()
    for m, c in s.items():
        for k, d in socle_head(m)[0].items():
            out[k] += c * d
    return out


def head_of_sum(s: ModuleSum) -> Counter:
    out: Counter = Counter()
    for m, c in s.items():
        for k, d in socle_head(m)[1].items():
            out[k] += c * d
    return out


def _b_middle(b: Indec, kp: int, side: Side) -> ModuleSum:
    ctx, k, l = b.ctx, b.k, b.l
    j, odd = divmod(l, 2)
    nb = lambda x: neighbor(ctx, k, x)  # noqa: E731
    if side is Side.QUOT:
        if not odd:
            for i in range(1, j + 1):
                if kp == nb(2 * i - 1):
                    return ModuleSum.of(bmod(ctx, k, 2 * i - 1), tmod(ctx, kp, 2 * (j - i) + 1))
            if kp == nb(-1):
                return ModuleSum.of(tmod(ctx, kp, 2 * j + 1))
            if kp == nb(2 * j + 1):
                return ModuleSum.of(bmod(ctx, k, 2 * j + 1))
        else:
            for i in range(1, j + 1):
                if kp == nb(2 * i - 1):
                    return ModuleSum.of(bmod(ctx, k, 2 * i - 1), tmod(ctx, kp, 2 * (j - i + 1)))
            if kp == nb(-1):
                return ModuleSum.of(tmod(ctx, kp, 2 * (j + 1)))
    else:
        if not odd:
            for i in range(1, j):
                if kp == nb(2 * i):
                    return ModuleSum.of(bmod(ctx, k, 2 * i), bmod(ctx, kp, 2 * (j - i)))
            if l == 2 and kp == nb(1):
                return ModuleSum.of(proj(ctx, kp))
        else:
            for i in range(1, j + 1):
                if kp == nb(2 * i):
                    return ModuleSum.of(bmod(ctx, k, 2 * i), bmod(ctx, kp, 2 * (j - i) + 1))
            if kp == nb(2 * (j + 1)):
                return ModuleSum.of(bmod(ctx, k, 2 * (j + 1)))
    return ZERO


def extension_middle(target: Indec, by: Indec, side: Side) -> ModuleSum:
    """Middle term of the non-split extension of ``target`` by an irreducible.

    ``side`` says where the irreducible ``by`` sits: SUB for
    0 -> by -> E -> target -> 0, QUOT for 0 -> target -> E -> by -> 0.
    """
    check(target)
    check(by)
    if target.kind not in (Kind.B, Kind.T) or target.l < 2:
        raise DomainError(f"extension_middle needs a zigzag of length >= 2, got {target}")
    if by.kind is not Kind.B or by.l != 0:
        raise DomainError(f"extension_middle extends by an irreducible, got {by}")
    dim = ext_dim(by, target) if side is Side.QUOT else ext_dim(target, by)
    if dim != 1:
        raise DomainError(f"no unique non-split extension of {target} by {by} ({side.value}): dim {dim}")
    if target.kind is Kind.B:
        mid = _b_middle(target, by.k, side)
    else:
        other = Side.SUB if side is Side.QUOT else Side.QUOT
        mid = _b_middle(dual(target), by.k, other).map(lambda x: ModuleSum.of(dual(x)))
    if not mid:
        raise DomainError(f"no listed extension of {target} by {by} ({side.value})")
    for x in mid.summands():
        check(x)
    return mid
