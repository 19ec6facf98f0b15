"""Divisor-class arithmetic on the rational Picard group of moduli of curves.

Classes are exact-rational coefficient vectors over the basis
(lambda, delta_0, ..., delta_[g/2]).  The module provides the divisorial
class attached to the genus-g Brill-Noether triples (up to a positive
scale), the canonical class, the decomposition of the canonical class
pinned on delta_0, the slope function, and the genus-23 slope computations
on gonal families, plane pencils, and boundary multiplicities.

No floating point anywhere; all values are fractions.Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .numerology import SeriesType, bn_divisor_triples, rho

SLOPE_THRESHOLD = Fraction(13, 2)  # canonical slope at genus 23


@dataclass(frozen=True)
class DivisorClass:
    """q * lambda + sum_i q_i * delta_i on the moduli space of genus-g curves."""

    g: int
    lam: Fraction
    delta: tuple[Fraction, ...]
    normalized_up_to_scale: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.lam, Fraction):
            object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "delta", tuple(
            x if isinstance(x, Fraction) else Fraction(x) for x in self.delta))
        if len(self.delta) != self.g // 2 + 1:
            raise ValueError(
                f"need {self.g // 2 + 1} delta coefficients for genus {self.g}, got {len(self.delta)}"
            )

    def __str__(self) -> str:
        bits = [f"{self.lam}λ"]
        for i, c in enumerate(self.delta):
            sign = "-" if c < 0 else "+"
            bits.append(f"{sign} {abs(c)}δ{i}")
        return " ".join(bits)


@dataclass(frozen=True)
class Decomposition:
    """Canonical class written as a * (divisorial class) + b * lambda + sum c_i delta_i."""

    g: int
    a: Fraction
    b: Fraction
    c: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ValueError("leading coefficient must be nonnegative")

    @property
    def boundary_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.c)


@lru_cache(maxsize=None)
def bn_class(g: int, r: int, d: int) -> DivisorClass:
    """Class of the divisor of genus-g curves carrying a g^r_d, rho = -1 only.

    Normalized with the unknown positive scale set to 1:
    (g+3) lambda - (g+1)/6 delta_0 - sum_i i(g-i) delta_i.
    The coefficient vector depends only on g.
    """
    t = SeriesType(g, r, d)
    if rho(t) != -1:
        raise ValueError(f"divisorial class needs rho = -1, got rho{g, r, d} = {rho(t)}")
    delta = [-Fraction(g + 1, 6)] + [-Fraction(i * (g - i)) for i in range(1, g // 2 + 1)]
    return DivisorClass(g, Fraction(g + 3), tuple(delta), normalized_up_to_scale=True)


@lru_cache(maxsize=None)
def canonical_class(g: int) -> DivisorClass:
    """13 lambda - 2 delta_0 - 3 delta_1 - 2 delta_2 - ... - 2 delta_[g/2]."""
    if g < 4:
        raise ValueError(f"canonical class needs genus >= 4, got {g}")
    delta = [Fraction(-2)] + [Fraction(-3 if i == 1 else -2) for i in range(1, g // 2 + 1)]
    return DivisorClass(g, Fraction(13), tuple(delta))


def decompose_canonical(g: int, r: int, d: int) -> Decomposition:
    """Write the canonical class over the divisorial class, pinning c_0 = 0.

    Matching delta_0 exactly gives a = 12/(g+1); then b = (g-23)/(g+1) is
    the lambda leftover and c_i the slack on delta_i.  The reconstruction
    K = a * bn_class + b * lambda + sum c_i delta_i is an exact identity.
    """
    kan = canonical_class(g)
    bn = bn_class(g, r, d)
    a = kan.delta[0] / bn.delta[0]  # c_0 = 0 pinned
    b = kan.lam - a * bn.lam
    c = tuple(kan.delta[i] - a * bn.delta[i] for i in range(len(kan.delta)))
    assert c[0] == 0
    return Decomposition(g, a, b, c)


def slope_of_class(cls: DivisorClass) -> Fraction | None:
    """lambda coefficient over the smallest boundary drop; None when undefined.

    Defined only when the lambda coefficient is positive and every delta
    coefficient is negative; then the slope is lam / min_i(-delta_i).
    """
    if cls.lam <= 0 or any(c >= 0 for c in cls.delta):
        return None
    return cls.lam / min(-c for c in cls.delta)


def slope_bound(g: int) -> Fraction:
    """6 + 12/(g+1), the slope of the divisorial classes."""
    if g < 3:
        raise ValueError(f"need genus >= 3, got {g}")
    return 6 + Fraction(12, g + 1)


def gonal_family_slope(g: int, k: int) -> Fraction:
    """Slope of the covering families filling the k-gonal locus, k = 2, 3, 4."""
    if g < 2:
        raise ValueError(f"need genus >= 2, got {g}")
    if k == 2:
        return 8 + Fraction(4, g)
    if k == 3:
        return Fraction(36 * (g + 1), 5 * g + 1)
    if k == 4:
        return Fraction(4 * (5 * g + 7), 3 * g + 1)
    raise ValueError(f"gonal family slope known for k in (2, 3, 4), got {k}")


@dataclass(frozen=True)
class PlanePencil:
    """Pencil of plane curves of degree dd with assigned nodes, genus 23 fibres."""

    dd: int
    f: int  # assigned nodes
    b: int  # base points
    lam: int
    delta: int
    slope: Fraction
    exceeds_13_2: bool


def plane_pencil_slope(dd: int) -> PlanePencil:
    """Invariants of a genus-23 pencil of degree-dd plane curves.

    f = C(dd-1, 2) - 23 assigned nodes and b = dd^2 - 4f base points must
    both be nonnegative; then lambda = 23 and delta = 91 + b + f.
    """
    f = comb(dd - 1, 2) - 23
    b = dd * dd - 4 * f
    if f < 0 or b < 0:
        raise ValueError(f"no admissible pencil for degree {dd} (f={f}, b={b})")
    delta = 91 + b + f
    slope = Fraction(delta, 23)
    return PlanePencil(dd, f, b, 23, delta, slope, slope > SLOPE_THRESHOLD)


@dataclass(frozen=True)
class BoundaryRow:
    i: int
    decomposition_coeff: Fraction  # coefficient of delta_i in the pinned decomposition
    multiplicity: Fraction  # converted to the boundary divisor (factor 2 at i = 1)
    cited_bound: int | None
    coincide: bool


def boundary_multiplicity_table(g: int = 23) -> list[BoundaryRow]:
    """Compare the forced boundary multiplicities with the decomposition at genus 23.

    The cited lower bounds are 16 at i=1, 19 at i=2, 21-i for i = 3..9 and
    i = 11 (nothing is cited at i = 10).  The decomposition coefficient is
    converted with the factor 2 at i = 1 since that boundary class is twice
    delta_1.
    """
    if g != 23:
        raise ValueError("boundary multiplicity comparison is specific to genus 23")
    r, _, d = bn_divisor_triples(g)[0]
    dec = decompose_canonical(g, r, d)
    rows = []
    for i in range(1, g // 2 + 1):
        coeff = dec.c[i]
        mult = coeff * 2 if i == 1 else coeff
        if i == 1:
            bound: int | None = 16
        elif i == 2:
            bound = 19
        elif i == 10:
            bound = None
        else:
            bound = 21 - i
        rows.append(BoundaryRow(i, coeff, mult, bound, bound is not None and mult == bound))
    return rows
