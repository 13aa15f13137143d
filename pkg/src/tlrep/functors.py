"""Restriction A_n -> A_{n-1} and induction A_n -> A_{n+1} on canonical classes.

Orbit neighbours k^j are computed from the source label; they do not depend
on n.  Summands whose label falls outside the target label set are dropped,
which also removes summands of the wrong parity for TL.
"""

from __future__ import annotations

from .catalog import (
    ZERO,
    Alias,
    Indec,
    Kind,
    ModuleSum,
    check,
    lenient,
    orbit_of_class,
)
from .errors import DomainError
from .orbits import AlgebraCtx, Family, in_lambda, in_lambda0, is_critical, neighbor


def _zigzag(ctx: AlgebraCtx, kind: Kind, kappa: int, l: int) -> ModuleSum:
    """B or T over ctx, shortened by one when its last factor leaves Lambda."""
    if l < 0 or not in_lambda0(ctx, kappa) or is_critical(ctx, kappa):
        return ZERO
    if not in_lambda0(ctx, neighbor(ctx, kappa, l)):
        l -= 1
        if l < 0:
            return ZERO
    alias = Alias.B if kind is Kind.B else Alias.T
    return lenient(ctx, alias, kappa, l)


def _crit_projs(ctx: AlgebraCtx, src_ctx: AlgebraCtx, k: int, count: int, offset: int) -> ModuleSum:
    """The sum of Proj(k^{2j} + offset) over j = 0..count-1 (critical labels)."""
    out = ZERO
    for j in range(count):
        out = out + lenient(ctx, Alias.PROJ, neighbor(src_ctx, k, 2 * j) + offset)
    return out


def _restrict_crit(ctx: AlgebraCtx, tgt: AlgebraCtx, k: int) -> ModuleSum:
    n = ctx.n
    if k == n:
        return lenient(tgt, Alias.STAN, n - 1)
    if ctx.family is Family.DTL:
        if k == n - 1:
            return lenient(tgt, Alias.STAN, n - 2) + lenient(tgt, Alias.STAN, n - 1)
        return lenient(tgt, Alias.PROJ, k) + lenient(tgt, Alias.PROJ, k + 1)
    return lenient(tgt, Alias.PROJ, k + 1)


def _restrict_proj(ctx: AlgebraCtx, tgt: AlgebraCtx, k: int) -> ModuleSum:
    terms: list[int] = [k - 1]
    if ctx.family is Family.DTL:
        terms.append(k)
    terms.append(k + 1)
    if is_critical(ctx, k + 1):
        terms.append(neighbor(ctx, k, -1) - 1)
    if is_critical(ctx, k - 1):
        terms.append(k - 1)
    out = ZERO
    for x in terms:
        if x > tgt.n and not is_critical(tgt, x):
            out = out + lenient(tgt, Alias.STAN, neighbor(tgt, x, -1))
        else:
            out = out + lenient(tgt, Alias.PROJ, x)
    return out


def _restrict_zigzag(ctx: AlgebraCtx, tgt: AlgebraCtx, m: Indec) -> ModuleSum:
    k, l, kind = m.k, m.l, m.kind
    out = ZERO
    if is_critical(ctx, k - 1):
        out = out + _crit_projs(tgt, ctx, k, l // 2 + 1, -1)
    else:
        out = out + _zigzag(tgt, kind, k - 1, l)
    if ctx.family is Family.DTL:
        out = out + _zigzag(tgt, kind, k, l)
    if is_critical(ctx, k + 1):
        out = out + _crit_projs(tgt, ctx, k, (l - 1) // 2 + 1, +1)
    else:
        out = out + _zigzag(tgt, kind, k + 1, l)
    return out


def restrict(ctx: AlgebraCtx, m: Indec) -> tuple[AlgebraCtx, ModuleSum]:
    """Restrict a canonical class from A_n to A_{n-1}."""
    if ctx.n < 2:
        raise DomainError("restriction needs n >= 2")
    if m.ctx != ctx:
        raise DomainError(f"{m} does not live over {ctx}")
    check(m)
    tgt = ctx.with_n(ctx.n - 1)
    if m.kind is Kind.CRIT:
        return tgt, _restrict_crit(ctx, tgt, m.k)
    if m.kind is Kind.PROJ:
        return tgt, _restrict_proj(ctx, tgt, m.k)
    return tgt, _restrict_zigzag(ctx, tgt, m)


def _promote(src: AlgebraCtx, tgt: AlgebraCtx, k: int, kappa: int, l: int) -> bool:
    """True when k^l has left Lambda_n but kappa^l still lies in Lambda_{n+1}."""
    return not in_lambda(src, neighbor(src, k, l)) and in_lambda0(tgt, neighbor(src, kappa, l))


def _at(ctx: AlgebraCtx, kind: Kind, k: int, l: int) -> ModuleSum:
    if l < 0 or not in_lambda0(ctx, k) or is_critical(ctx, k):
        return ZERO
    return lenient(ctx, Alias.B if kind is Kind.B else Alias.T, k, l)


def _induce_b_odd(ctx: AlgebraCtx, tgt: AlgebraCtx, k: int, l: int) -> ModuleSum:
    i = l // 2
    out = ZERO
    if is_critical(ctx, k - 1):
        out = out + _crit_projs(tgt, ctx, k, i + 1, -1)
    elif _promote(ctx, tgt, k, k - 1, l + 1):
        out = out + _at(tgt, Kind.B, k - 1, l + 1)
    else:
        out = out + _at(tgt, Kind.B, k - 1, l)
    if ctx.family is Family.DTL:
        if _promote(ctx, tgt, k, k, l + 1):
            out = out + _at(tgt, Kind.B, k, l + 1)
        else:
            out = out + _at(tgt, Kind.B, k, l)
    if is_critical(ctx, k + 1):
        out = out + _crit_projs(tgt, ctx, k, i + 1, +1)
    else:
        out = out + _at(tgt, Kind.B, k + 1, l)
    return out


def _induce_t_even(ctx: AlgebraCtx, tgt: AlgebraCtx, k: int, l: int) -> ModuleSum:
    i = l // 2
    out = ZERO
    if is_critical(ctx, k - 1):
        out = out + _crit_projs(tgt, ctx, k, i + 1, -1)
    else:
        out = out + _at(tgt, Kind.T, k - 1, l)
    if ctx.family is Family.DTL:
        if _promote(ctx, tgt, k, k, l + 1):
            out = out + _at(tgt, Kind.T, k, l + 1)
        else:
            out = out + _at(tgt, Kind.T, k, l)
    if is_critical(ctx, k + 1):
        out = out + _crit_projs(tgt, ctx, k, i, +1)
    elif _promote(ctx, tgt, k, k + 1, l + 1):
        out = out + _at(tgt, Kind.T, k + 1, l + 1)
    else:
        out = out + _at(tgt, Kind.T, k + 1, l)
    return out


def induce(ctx: AlgebraCtx, m: Indec) -> tuple[AlgebraCtx, ModuleSum]:
    """Induce a canonical class from A_n to A_{n+1}."""
    if m.ctx != ctx:
        raise DomainError(f"{m} does not live over {ctx}")
    check(m)
    tgt = ctx.with_n(ctx.n + 1)
    up2 = ctx.with_n(ctx.n + 2)

    def via_restriction(alias: Alias, k: int, l: int | None = None) -> ModuleSum:
        lifted = lenient(up2, alias, k, l)
        out = ZERO
        for x, c in lifted.items():
            out = out + restrict(up2, x)[1].scaled(c)
        return out

    k, l = m.k, m.l
    if m.kind is Kind.CRIT:
        return tgt, via_restriction(Alias.STAN, k)
    if m.kind is Kind.PROJ:
        return tgt, via_restriction(Alias.PROJ, k)
    if m.kind is Kind.B and l == 0:
        if k != orbit_of_class(m).k_R:
            return tgt, via_restriction(Alias.IRR, k)
        return tgt, via_restriction(Alias.STAN, k)
    if m.kind is Kind.B:
        if l % 2 == 0:
            return tgt, via_restriction(Alias.B, k, l)
        return tgt, _induce_b_odd(ctx, tgt, k, l)
    if l % 2 == 1:
        return tgt, via_restriction(Alias.T, k, l)
    return tgt, _induce_t_even(ctx, tgt, k, l)


def restrict_sum(ctx: AlgebraCtx, s: ModuleSum) -> ModuleSum:
    out = ZERO
    for m, c in s.items():
        out = out + restrict(ctx, m)[1].scaled(c)
    return out


def induce_sum(ctx: AlgebraCtx, s: ModuleSum) -> ModuleSum:
    out = ZERO
    for m, c in s.items():
        out = out + induce(ctx, m)[1].scaled(c)
    return out
