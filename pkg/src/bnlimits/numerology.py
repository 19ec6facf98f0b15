"""Brill-Noether numerology.

The number rho(g, r, d) = g - (r+1)(g-d+r), vanishing and ramification
sequences at a point, Serre residuation, the divisorial (r, s, d) triples
for a given genus, and the closed-form existence tests for a linear series
with prescribed ramification on a general pointed curve.

Everything here is exact integer arithmetic on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SeriesType:
    """A linear series type g^r_d on a curve of genus g."""

    g: int
    r: int
    d: int

    def __post_init__(self) -> None:
        if self.g < 0 or self.r < 0 or self.d < 0:
            raise ValueError(f"series type needs nonnegative g, r, d; got {self}")
        if self.r > self.d:
            raise ValueError(f"series dimension r={self.r} exceeds degree d={self.d}")

    def __str__(self) -> str:
        return f"g^{self.r}_{self.d} (genus {self.g})"


@dataclass(frozen=True)
class VanishingSeq:
    """Strictly increasing vanishing orders 0 <= a_0 < ... < a_r <= d."""

    entries: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        a = self.entries
        if not a:
            raise ValueError("vanishing sequence must be nonempty")
        if a[0] < 0 or a[-1] > self.d:
            raise ValueError(f"vanishing sequence {a} out of range [0, {self.d}]")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError(f"vanishing sequence {a} is not strictly increasing")

    @property
    def r(self) -> int:
        return len(self.entries) - 1


@dataclass(frozen=True)
class RamificationSeq:
    """Weakly increasing ramification indices 0 <= b_0 <= ... <= b_r <= d-r."""

    entries: tuple[int, ...]
    r: int
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        b = self.entries
        if len(b) != self.r + 1:
            raise ValueError(f"expected {self.r + 1} entries, got {b}")
        if b[0] < 0 or b[-1] > self.d - self.r:
            raise ValueError(f"ramification sequence {b} out of range [0, {self.d - self.r}]")
        if any(x > y for x, y in zip(b, b[1:])):
            raise ValueError(f"ramification sequence {b} is not weakly increasing")


def rho(t: SeriesType) -> int:
    """g - (r+1)(g-d+r), the expected dimension of the space of g^r_d's."""
    return t.g - (t.r + 1) * (t.g - t.d + t.r)


def weight(alpha: RamificationSeq) -> int:
    """Total ramification weight, the sum of the indices."""
    return sum(alpha.entries)


def adjusted_rho(t: SeriesType, rams: list[RamificationSeq] | tuple[RamificationSeq, ...]) -> int:
    """rho(g, r, d) minus the total weight of the imposed ramification."""
    for a in rams:
        if (a.r, a.d) != (t.r, t.d):
            raise ValueError(f"ramification bound ({a.r}, {a.d}) does not match series {t}")
    return rho(t) - sum(weight(a) for a in rams)


def vanishing_to_ramification(a: VanishingSeq) -> RamificationSeq:
    """Subtract i from the i-th vanishing order."""
    return RamificationSeq(tuple(x - i for i, x in enumerate(a.entries)), a.r, a.d)


def ramification_to_vanishing(alpha: RamificationSeq) -> VanishingSeq:
    """Add i to the i-th ramification index; inverse of vanishing_to_ramification."""
    return VanishingSeq(tuple(x + i for i, x in enumerate(alpha.entries)), alpha.d)


def residual(t: SeriesType) -> SeriesType:
    """Serre-dual series type (g, g-d+r-1, 2g-2-d); preserves rho."""
    r2 = t.g - t.d + t.r - 1
    if r2 < 0:
        raise ValueError(f"residual of {t} has negative dimension {r2}")
    return SeriesType(t.g, r2, 2 * t.g - 2 - t.d)


def bn_divisor_triples(g: int) -> list[tuple[int, int, int]]:
    """All (r, s, d) with g+1 = (r+1)(s-1), s >= 3, r >= 1 and d = r*s - 1.

    Every returned triple satisfies rho(g, r, d) = -1 and the set is closed
    under residuation.  Empty when g+1 admits no such factorization.
    """
    if g < 3:
        raise ValueError(f"need genus >= 3, got {g}")
    out = []
    for rp1 in range(2, g + 2):
        if (g + 1) % rp1:
            continue
        sm1 = (g + 1) // rp1
        if sm1 < 2:  # s >= 3
            continue
        r, s = rp1 - 1, sm1 + 1
        out.append((r, s, r * s - 1))
    return sorted(out)


def bn_divisor_pairs(g: int) -> list[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """Group the divisorial triples of a genus into Serre-residual pairs."""
    triples = bn_divisor_triples(g)
    by_rd = {(r, d): (r, s, d) for r, s, d in triples}
    pairs = []
    seen: set[tuple[int, int, int]] = set()
    for tr in triples:
        if tr in seen:
            continue
        res = residual(SeriesType(g, tr[0], tr[2]))
        other = by_rd[(res.r, res.d)]
        seen.add(tr)
        seen.add(other)
        pairs.append((tr, other) if tr <= other else (other, tr))
    return pairs


def pointed_exists(t: SeriesType, alpha: RamificationSeq) -> bool:
    """Clamp criterion for a general 1-pointed curve of genus t.g.

    A general pointed curve carries a g^r_d with ramification at least alpha
    at the marked point iff sum_i max(alpha_i + g - d + r, 0) <= g.
    """
    if (alpha.r, alpha.d) != (t.r, t.d):
        raise ValueError(f"ramification bound ({alpha.r}, {alpha.d}) does not match series {t}")
    shift = t.g - t.d + t.r
    return sum(max(x + shift, 0) for x in alpha.entries) <= t.g


def cusp_pointed_exists(t: SeriesType, alpha: RamificationSeq) -> bool:
    """Clamp criterion with one extra cusp.

    A general 2-pointed curve of genus t.g carries a g^r_d with ramification
    at least alpha at one marked point and a cusp at the other iff
    sum_i max(alpha_i + g + 1 - d + r, 0) <= g + 1.
    """
    if (alpha.r, alpha.d) != (t.r, t.d):
        raise ValueError(f"ramification bound ({alpha.r}, {alpha.d}) does not match series {t}")
    shift = t.g + 1 - t.d + t.r
    return sum(max(x + shift, 0) for x in alpha.entries) <= t.g + 1


@dataclass(frozen=True)
class ExpectedDims:
    """Expected dimensions attached to a series type.

    dim_g applies always; the other fields only for the indicated r and are
    None otherwise.
    """

    dim_g: int
    gonal: int | None  # r = 1: dimension of the universal pencil space, 2g+2d-5
    severi: int | None  # r = 2: dimension of the plane Severi variety, 3d+g-1
    two_pencil: int | None  # r = 1: closure of curves with two pencils, g+4d-7


def expected_dims(t: SeriesType) -> ExpectedDims:
    """Standard expected-dimension counts for a series type."""
    return ExpectedDims(
        dim_g=3 * t.g - 3 + rho(t),
        gonal=2 * t.g + 2 * t.d - 5 if t.r == 1 else None,
        severi=3 * t.d + t.g - 1 if t.r == 2 else None,
        two_pencil=t.g + 4 * t.d - 7 if t.r == 1 else None,
    )
