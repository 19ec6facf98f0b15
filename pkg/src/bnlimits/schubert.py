"""Exact Schubert calculus in the cohomology of a Grassmannian G(r+1, d+1).

Classes live in the quotient ring spanned by partitions inside the
(r+1) x (d-r) rectangle.  Products are computed by the Littlewood-Richardson
rule (enumeration of lattice skew tableaux, organized as chains of
horizontal strips); powers of the cusp class, a single column 1^r, go
through the vertical-strip Pieri rule instead since they are taken to high
exponents.  Truncation to the rectangle happens inside every single
multiplication, so intermediate classes never leave the ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from .numerology import RamificationSeq, SeriesType

Partition = tuple[int, ...]
Rect = tuple[int, int]  # (rows, cols)


def rect_for(r: int, d: int) -> Rect:
    """Ambient rectangle of Schubert classes for series of type (r, d)."""
    if r > d:
        raise ValueError(f"need r <= d, got r={r}, d={d}")
    return (r + 1, d - r)


def _trim(parts: Iterable[int]) -> Partition:
    out = list(parts)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def validate_partition(p: Partition, rect: Rect) -> Partition:
    """Check weak decrease and containment in the rectangle; return trimmed."""
    p = _trim(p)
    k, m = rect
    if any(a < 0 for a in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not a partition")
    if len(p) > k or (p and p[0] > m):
        raise ValueError(f"partition {p} does not fit in a {k}x{m} rectangle")
    return p


def index_to_partition(alpha: RamificationSeq) -> Partition:
    """Partition attached to a ramification index: the entries reversed."""
    return _trim(reversed(alpha.entries))


@dataclass(frozen=True)
class CohomologyClass:
    """Integer combination of Schubert classes inside a fixed rectangle."""

    rect: Rect
    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for p, c in self.terms.items():
            if c:
                cleaned[validate_partition(p, self.rect)] = c
        object.__setattr__(self, "terms", cleaned)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: Partition) -> int:
        return self.terms.get(_trim(p), 0)

    def support(self) -> list[Partition]:
        return sorted(self.terms)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if self.rect != other.rect:
            raise ValueError(f"rectangle mismatch: {self.rect} vs {other.rect}")
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, 0) + c
        return CohomologyClass(self.rect, acc)

    def __mul__(self, other: "CohomologyClass") -> "CohomologyClass":
        return lr_product(self, other)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for p in self.support():
            c = self.terms[p]
            name = "s" + ("[" + ",".join(map(str, p)) + "]" if p else "[]")
            bits.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(bits)


def schubert_class(p: Partition, rect: Rect) -> CohomologyClass:
    return CohomologyClass(rect, {validate_partition(tuple(p), rect): 1})


def identity_class(rect: Rect) -> CohomologyClass:
    return CohomologyClass(rect, {(): 1})


def zero_class(rect: Rect) -> CohomologyClass:
    return CohomologyClass(rect, {})


@lru_cache(maxsize=None)
def lr_coefficients(lam: Partition, mu: Partition, k: int, m: int) -> tuple[tuple[Partition, int], ...]:
    """Littlewood-Richardson expansion of s_lam * s_mu inside the k x m rectangle.

    Counts lattice skew tableaux of content mu on lam: shapes are grown by
    one horizontal strip per letter, with the ballot condition checked row
    by row as the strip is placed.  Shapes leaving the rectangle are pruned
    immediately, which is exactly the ring truncation.
    """
    out: dict[Partition, int] = {}
    shape = list(lam) + [0] * (k - len(lam))
    labels = _trim(mu)
    if not labels:
        return (( _trim(shape), 1),)

    def place(li: int, prev_counts: list[int]) -> None:
        if li == len(labels):
            key = _trim(shape)
            out[key] = out.get(key, 0) + 1
            return
        old = shape[:]
        cur_counts = [0] * k

        def rows(j: int, rem: int, prev_pref: int, cur_pref: int) -> None:
            if j == k:
                if rem == 0:
                    place(li + 1, cur_counts[:])
                return
            cap = m - shape[j]
            if j > 0:
                cap = min(cap, old[j - 1] - shape[j])
            if li > 0:
                cap = min(cap, prev_pref - cur_pref)
            cap = min(cap, rem)
            for c in range(cap + 1):
                shape[j] += c
                cur_counts[j] = c
                rows(j + 1, rem - c, prev_pref + prev_counts[j], cur_pref + c)
                shape[j] -= c
                cur_counts[j] = 0

        rows(0, labels[li], 0, 0)

    place(0, [0] * k)
    return tuple(sorted(out.items()))


def lr_product(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    """Product in the truncated ring, extended bilinearly over the terms."""
    if x.rect != y.rect:
        raise ValueError(f"rectangle mismatch: {x.rect} vs {y.rect}")
    k, m = x.rect
    acc: dict[Partition, int] = {}
    for lam, a in x.terms.items():
        for mu, b in y.terms.items():
            # expansion is symmetric; run the strip recursion on the smaller factor
            lam2, mu2 = (lam, mu) if sum(mu) <= sum(lam) else (mu, lam)
            for nu, c in lr_coefficients(lam2, mu2, k, m):
                acc[nu] = acc.get(nu, 0) + a * b * c
    return CohomologyClass(x.rect, acc)


def _vertical_strips(lam: Partition, p: int, rect: Rect) -> list[Partition]:
    k, m = rect
    rows = list(lam) + [0] * (k - len(lam))
    out = []
    for chosen in combinations(range(k), p):
        new = rows[:]
        for j in chosen:
            new[j] += 1
        if new[0] <= m and all(new[j] <= new[j - 1] for j in range(1, k)):
            out.append(_trim(new))
    return out


def multiply_by_column(x: CohomologyClass, p: int) -> CohomologyClass:
    """Multiply by the single-column class 1^p via the vertical-strip rule."""
    k, _ = x.rect
    if p < 0 or p > k:
        raise ValueError(f"column height {p} out of range for {k} rows")
    acc: dict[Partition, int] = {}
    for lam, a in x.terms.items():
        for nu in _vertical_strips(lam, p, x.rect):
            acc[nu] = acc.get(nu, 0) + a
    return CohomologyClass(x.rect, acc)


def cusp_class_power(t: int, rect: Rect) -> CohomologyClass:
    """t-th power of the cusp class, the column 1^r in an (r+1)-row rectangle."""
    if t < 0:
        raise ValueError("power must be nonnegative")
    k, _ = rect
    acc = identity_class(rect)
    for _ in range(t):
        if acc.is_zero():
            break
        acc = multiply_by_column(acc, k - 1)
    return acc


def bn_condition(t: SeriesType, rams: list[RamificationSeq] | tuple[RamificationSeq, ...]) -> bool:
    """Schubert nonvanishing criterion for a general t.g-pointed curve.

    A general curve of genus g with marked general points carries a g^r_d
    with ramification at least alpha^i at the i-th point iff the product of
    the classes of the alpha^i times the g-th power of the cusp class is
    nonzero in the rectangle ring.
    """
    rect = rect_for(t.r, t.d)
    acc = identity_class(rect)
    for alpha in rams:
        if (alpha.r, alpha.d) != (t.r, t.d):
            raise ValueError(f"ramification bound ({alpha.r}, {alpha.d}) does not match series {t}")
        acc = lr_product(acc, schubert_class(index_to_partition(alpha), rect))
        if acc.is_zero():
            return False
    k, _ = rect
    for _ in range(t.g):
        acc = multiply_by_column(acc, k - 1)
        if acc.is_zero():
            return False
    return not acc.is_zero()
