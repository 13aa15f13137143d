"""Algebra parameters, the label set, criticality and orbit arithmetic.

Labels k live in Lambda_n, the index set of the standard modules.  A label is
critical when k = -1 (mod ell).  Every non-critical label belongs to an orbit
generated by reflecting through critical integers; neighbours along the orbit
are written k^j and are computed here as plain integers that may fall outside
Lambda_n ("virtual" neighbours).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError


class Family(enum.Enum):
    TL = "tl"
    DTL = "dtl"


@dataclass(frozen=True)
class AlgebraCtx:
    """Which algebra we work over: the family, the size n and the order ell."""

    family: Family
    n: int
    ell: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.n < 1:
            raise DomainError(f"n must be at least 1, got {self.n}")
        if self.ell < 2:
            raise DomainError(f"ell must be at least 2, got {self.ell}")

    @property
    def degenerate(self) -> bool:
        """True for TL with n even and ell = 2, where Irr(0) vanishes."""
        return self.family is Family.TL and self.n % 2 == 0 and self.ell == 2

    def with_n(self, n: int) -> "AlgebraCtx":
        return AlgebraCtx(self.family, n, self.ell)

    def __str__(self) -> str:
        return f"{self.family.value}(n={self.n}, ell={self.ell})"


def is_critical(ctx: AlgebraCtx, k: int) -> bool:
    """True iff k = ell - 1 modulo ell (any integer accepted)."""
    return k % ctx.ell == ctx.ell - 1


def lambda_set(ctx: AlgebraCtx) -> list[int]:
    """The labels of the standard modules, in increasing order."""
    if ctx.family is Family.DTL:
        return list(range(ctx.n + 1))
    return list(range(ctx.n % 2, ctx.n + 1, 2))


def lambda0_set(ctx: AlgebraCtx) -> list[int]:
    """Labels of the irreducible modules: drops 0 in the degenerate case."""
    labels = lambda_set(ctx)
    if ctx.degenerate:
        labels = [k for k in labels if k != 0]
    return labels


def in_lambda(ctx: AlgebraCtx, k: int) -> bool:
    if k < 0 or k > ctx.n:
        return False
    return ctx.family is Family.DTL or (ctx.n - k) % 2 == 0


def in_lambda0(ctx: AlgebraCtx, k: int) -> bool:
    return in_lambda(ctx, k) and not (ctx.degenerate and k == 0)


def _up(ell: int, k: int) -> int:
    # reflect through the smallest critical integer above k
    c = k + (ell - 1 - k) % ell
    return 2 * c - k


def _down(ell: int, k: int) -> int:
    # reflect through the largest critical integer below k
    c = k - (k + 1) % ell
    return 2 * c - k


def neighbor(ctx: AlgebraCtx, k: int, j: int) -> int:
    """Return the virtual neighbour k^j (j > 0 to the right, j < 0 to the left)."""
    if is_critical(ctx, k):
        raise DomainError(f"label {k} is critical and has no orbit neighbours")
    step = _up if j > 0 else _down
    for _ in range(abs(j)):
        k = step(ctx.ell, k)
    return k


@dataclass(frozen=True)
class OrbitView:
    """One class of the partition of Lambda_n.

    ``members`` is the sorted orbit inside Lambda_n.  ``labels`` are the
    members that index irreducible modules (it differs from ``members`` only
    in the degenerate case, where 0 is excised); local label a (1-based)
    refers to ``labels[a - 1]``.
    """

    ctx: AlgebraCtx
    members: tuple[int, ...]
    critical: bool

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return tuple(k for k in self.members if in_lambda0(self.ctx, k))

    @property
    def s(self) -> int:
        return len(self.labels)

    @property
    def k_L(self) -> int:
        return self.members[0]

    @property
    def k_R(self) -> int:
        return self.members[-1]

    @property
    def is_degenerate_orbit(self) -> bool:
        return self.ctx.degenerate and not self.critical and 0 in self.members

    def local(self, k: int) -> int:
        """Local label (1-based position among ``labels``) of k."""
        try:
            return self.labels.index(k) + 1
        except ValueError:
            raise DomainError(f"label {k} is not in orbit {list(self.members)}") from None

    def global_label(self, a: int) -> int:
        if not 1 <= a <= self.s:
            raise DomainError(f"local label {a} out of range 1..{self.s}")
        return self.labels[a - 1]

    def position(self, k: int) -> int:
        """0-based position of k among ``members``."""
        return self.members.index(k)


def orbit_of(ctx: AlgebraCtx, k: int) -> OrbitView:
    """The partition class of k in Lambda_n."""
    if not in_lambda(ctx, k):
        raise DomainError(f"label {k} is not in Lambda_{ctx.n} for {ctx}")
    if is_critical(ctx, k):
        return OrbitView(ctx, (k,), True)
    members = {k}
    x = k
    while True:
        x = _down(ctx.ell, x)
        if x < 0:
            break
        members.add(x)
    x = k
    while True:
        x = _up(ctx.ell, x)
        if x > ctx.n:
            break
        members.add(x)
    return OrbitView(ctx, tuple(sorted(members)), False)


def orbit_equivalent(ctx: AlgebraCtx, k: int, k2: int) -> bool:
    """True iff k and k2 lie in the same partition class."""
    return k2 in orbit_of(ctx, k).members


def parity(ctx: AlgebraCtx, k: int) -> int:
    """Parity of n - k for the dilute family."""
    if ctx.family is not Family.DTL:
        raise DomainError("parity is only defined for the dilute family")
    if not in_lambda(ctx, k):
        raise DomainError(f"label {k} is not in Lambda_{ctx.n}")
    return (ctx.n - k) % 2


def partition(ctx: AlgebraCtx) -> list[OrbitView]:
    """All classes of Lambda_n, ordered by their smallest member."""
    seen: set[int] = set()
    out = []
    for k in lambda_set(ctx):
        if k in seen:
            continue
        orb = orbit_of(ctx, k)
        seen.update(orb.members)
        out.append(orb)
    return out
