"""Stable curves of compact type and the per-component feasibility oracles.

A curve is a tree of marked components: general pointed curves, elliptic
curves with optional torsion relations between marked points, and
fact-sheet curves carrying asserted dimensions of their series spaces.
Each kind has a local rule deciding (or refuting, or abstaining on) the
existence of a linear-series aspect with prescribed vanishing at the
marked points.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import schubert
from .numerology import (
    RamificationSeq,
    SeriesType,
    VanishingSeq,
    cusp_pointed_exists,
    pointed_exists,
    weight,
)

KIND_GENERAL = "general"
KIND_ELLIPTIC = "elliptic"
KIND_FACTSHEET = "factsheet"
KINDS = (KIND_GENERAL, KIND_ELLIPTIC, KIND_FACTSHEET)

# Rule identifiers used in check results and refutation reports.
RULE_ELLIPTIC_PAIR_BOUND = "elliptic-pair-bound"
RULE_ELLIPTIC_TORSION = "elliptic-torsion-divisibility"
RULE_ELLIPTIC_SINGLE_POLE = "elliptic-single-pole"
RULE_GENERAL_POINTED = "general-pointed-clamp"
RULE_GENERAL_CUSP = "general-pointed-cusp-clamp"
RULE_SCHUBERT = "schubert-nonvanishing"
RULE_FACTSHEET_COUNT = "factsheet-ramification-count"


@dataclass(frozen=True)
class SeriesDimFact:
    """Asserted dimension of the space of g^r_d's on a fact-sheet curve."""

    r: int
    d: int
    dim: int


@dataclass(frozen=True)
class FactSheet:
    series_dims: tuple[SeriesDimFact, ...] = ()
    gonality: int | None = None
    points_general: bool = True

    def dim_for(self, r: int, d: int) -> int | None:
        for fact in self.series_dims:
            if (fact.r, fact.d) == (r, d):
                return fact.dim
        return None


@dataclass(frozen=True)
class TorsionPair:
    """The difference of two marked points is primitive torsion of this order."""

    points: tuple[str, str]
    order: int

    def __post_init__(self) -> None:
        p, q = self.points
        if p == q:
            raise ValueError("torsion pair needs two distinct points")
        if self.order < 2:
            raise ValueError(f"torsion order must be >= 2, got {self.order}")
        object.__setattr__(self, "points", tuple(sorted(self.points)))


@dataclass(frozen=True)
class Component:
    id: str
    genus: int
    kind: str
    points: tuple[str, ...]
    torsion: tuple[TorsionPair, ...] = ()
    facts: FactSheet | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.kind not in KINDS:
            raise ValueError(f"unknown component kind {self.kind!r}")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if len(set(self.points)) != len(self.points):
            raise ValueError(f"duplicate marked points on {self.id}")
        if self.kind == KIND_ELLIPTIC and self.genus != 1:
            raise ValueError(f"elliptic component {self.id} must have genus 1")
        if self.kind != KIND_ELLIPTIC and self.torsion:
            raise ValueError(f"torsion data only allowed on elliptic components ({self.id})")
        if self.kind != KIND_FACTSHEET and self.facts is not None:
            raise ValueError(f"fact sheet only allowed on factsheet components ({self.id})")
        for pair in self.torsion:
            for p in pair.points:
                if p not in self.points:
                    raise ValueError(f"torsion point {p} is not marked on {self.id}")

    def torsion_between(self, p: str, q: str) -> int | None:
        key = tuple(sorted((p, q)))
        for pair in self.torsion:
            if pair.points == key:
                return pair.order
        return None


@dataclass(frozen=True)
class Node:
    """Unordered pair of marked points, one on each of two components."""

    ends: tuple[tuple[str, str], tuple[str, str]]  # ((comp, point), (comp, point))

    def __post_init__(self) -> None:
        a, b = self.ends
        if a[0] == b[0]:
            raise ValueError(f"node joins component {a[0]} to itself")
        object.__setattr__(self, "ends", tuple(sorted((tuple(a), tuple(b)))))

    def end_on(self, comp_id: str) -> tuple[str, str] | None:
        for end in self.ends:
            if end[0] == comp_id:
                return end
        return None

    def __str__(self) -> str:
        (c1, p1), (c2, p2) = self.ends
        return f"{c1}.{p1}~{c2}.{p2}"


@dataclass(frozen=True)
class CompactCurve:
    id: str
    genus: int
    components: tuple[Component, ...]
    nodes: tuple[Node, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "nodes", tuple(self.nodes))
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate component ids")
        by_id = {c.id: c for c in self.components}
        used: set[tuple[str, str]] = set()
        for node in self.nodes:
            for comp_id, point in node.ends:
                if comp_id not in by_id:
                    raise ValueError(f"node references unknown component {comp_id}")
                if point not in by_id[comp_id].points:
                    raise ValueError(f"node references unknown point {comp_id}.{point}")
                if (comp_id, point) in used:
                    raise ValueError(f"marked point {comp_id}.{point} appears in two nodes")
                used.add((comp_id, point))
        # dual graph must be a tree
        if len(self.nodes) != len(self.components) - 1:
            raise ValueError("dual graph is not a tree (wrong node count)")
        if self.components:
            adj: dict[str, set[str]] = {c.id: set() for c in self.components}
            for node in self.nodes:
                (c1, _), (c2, _) = node.ends
                adj[c1].add(c2)
                adj[c2].add(c1)
            seen = {self.components[0].id}
            stack = [self.components[0].id]
            while stack:
                for nb in adj[stack.pop()]:
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            if len(seen) != len(self.components):
                raise ValueError("dual graph is not a tree (disconnected)")
        total = sum(c.genus for c in self.components)
        if total != self.genus:
            raise ValueError(f"component genera sum to {total}, declared genus is {self.genus}")

    def component(self, comp_id: str) -> Component:
        for c in self.components:
            if c.id == comp_id:
                return c
        raise KeyError(comp_id)

    def node_points(self, comp_id: str) -> list[str]:
        """Marked points of a component that sit in nodes, in marked-point order."""
        in_nodes = {end[1] for node in self.nodes for end in node.ends if end[0] == comp_id}
        return [p for p in self.component(comp_id).points if p in in_nodes]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a per-component feasibility oracle.

    status is one of "pass", "fail", "unknown".  exact means the rule is an
    if-and-only-if criterion, so a pass certifies existence.  witness_grade
    marks elliptic two-point passes where the uniqueness/existence
    hypotheses hold as well.
    """

    status: str
    rule: str
    exact: bool = False
    witness_grade: bool = False
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"


def elliptic_single_point_check(d: int, a: VanishingSeq) -> CheckResult:
    """Existence of an elliptic aspect with vanishing at least a at one point.

    On an elliptic curve the achievable vanishing orders of a g^r_d at a
    point p are any r+1 of {0, ..., d-2, d} (line bundle O(dp)) or of
    {0, ..., d-1} (any other bundle): no function has a single simple pole,
    so orders d-1 and d cannot coexist.  This containment test is exact.
    """
    if a.d != d:
        raise ValueError(f"sequence bound {a.d} does not match degree {d}")
    if d - 1 in a.entries and d in a.entries:
        return CheckResult("fail", RULE_ELLIPTIC_SINGLE_POLE, exact=True,
                           detail=f"orders {d - 1} and {d} cannot both occur at one point")
    return CheckResult("pass", RULE_ELLIPTIC_SINGLE_POLE, exact=True)


def elliptic_two_point_check(a: VanishingSeq, b: VanishingSeq,
                             torsion_order: int | None) -> CheckResult:
    """Necessary conditions for an elliptic aspect with vanishing a at p, b at q.

    Sections force a_i + b_{r-i} <= d for every i.  If equality holds at two
    or more indices, the difference p - q is torsion and its order must
    divide the differences of the a-entries at those indices.  A pass is
    witness-grade when additionally d-1 <= a_i + b_{r-i} for all i and the
    divisor pinned by the equalities admits the sequence, which upgrades the
    pass to an exact existence statement.
    """
    if a.d != b.d or a.r != b.r:
        raise ValueError(f"sequence bounds ({a.r}, {a.d}) and ({b.r}, {b.d}) differ")
    d, r = a.d, a.r
    sums = [a.entries[i] + b.entries[r - i] for i in range(r + 1)]
    if any(s > d for s in sums):
        return CheckResult("fail", RULE_ELLIPTIC_PAIR_BOUND,
                           detail=f"pairwise sums {sums} exceed degree {d}")
    eq = [i for i in range(r + 1) if sums[i] == d]
    if len(eq) >= 2:
        if torsion_order is None:
            return CheckResult("fail", RULE_ELLIPTIC_TORSION,
                               detail="two exact sums force torsion, but none is declared")
        base = a.entries[eq[0]]
        bad = [a.entries[i] - base for i in eq if (a.entries[i] - base) % torsion_order]
        if bad:
            return CheckResult("fail", RULE_ELLIPTIC_TORSION,
                               detail=f"order {torsion_order} does not divide differences {bad}")
    witness = all(s >= d - 1 for s in sums)
    if witness:
        # existence needs the divisor conditions relative to the pinned class
        base = a.entries[eq[0]] if eq else None
        for i in range(r + 1):
            if sums[i] != d - 1:
                continue
            if base is None:
                continue  # no pinned divisor; a general one avoids the bad classes
            diff = a.entries[i] + 1 - base
            triggered = diff == 0 or (torsion_order is not None and diff % torsion_order == 0)
            if triggered and not (i < r and a.entries[i + 1] == a.entries[i] + 1):
                witness = False
                break
    return CheckResult("pass", RULE_ELLIPTIC_PAIR_BOUND, exact=witness,
                       witness_grade=witness)


def general_pointed_check(t: SeriesType, rams: list[RamificationSeq] | tuple[RamificationSeq, ...],
                          extra_cusps: int = 0) -> CheckResult:
    """Exact existence test on a general pointed curve of genus t.g.

    One ramification condition goes through the clamp criterion, one
    condition plus one cusp through the cusp clamp criterion, and anything
    else through the Schubert nonvanishing criterion.  All three are
    if-and-only-if statements, so both pass and fail are exact.
    """
    rams = list(rams)
    if len(rams) == 1 and extra_cusps == 0:
        ok = pointed_exists(t, rams[0])
        return CheckResult("pass" if ok else "fail", RULE_GENERAL_POINTED, exact=True)
    if len(rams) == 1 and extra_cusps == 1:
        ok = cusp_pointed_exists(t, rams[0])
        return CheckResult("pass" if ok else "fail", RULE_GENERAL_CUSP, exact=True)
    if not rams and extra_cusps == 0:
        zero = RamificationSeq((0,) * (t.r + 1), t.r, t.d)
        ok = pointed_exists(t, zero)
        return CheckResult("pass" if ok else "fail", RULE_GENERAL_POINTED, exact=True)
    cusp = RamificationSeq((0,) + (1,) * t.r if t.r else (0,), t.r, t.d)
    ok = schubert.bn_condition(t, rams + [cusp] * extra_cusps)
    return CheckResult("pass" if ok else "fail", RULE_SCHUBERT, exact=True)


def factsheet_check(facts: FactSheet | None, t: SeriesType,
                    rams: list[RamificationSeq] | tuple[RamificationSeq, ...]) -> CheckResult:
    """Counting refutation on a fact-sheet curve with general marked points.

    Ramification points of a fixed series are finite in number, so requiring
    positive weight at more general points than the asserted dimension of
    the series space is impossible.  The rule never certifies existence:
    anything not refuted is unknown.
    """
    positive = sum(1 for a in rams if weight(a) > 0)
    dim = facts.dim_for(t.r, t.d) if facts is not None else None
    if dim is None:
        return CheckResult("unknown", RULE_FACTSHEET_COUNT,
                           detail=f"no dimension fact for r={t.r}, d={t.d}")
    if positive > dim:
        return CheckResult("fail", RULE_FACTSHEET_COUNT,
                           detail=f"{positive} general points with positive weight exceed dim {dim}")
    return CheckResult("unknown", RULE_FACTSHEET_COUNT,
                       detail=f"{positive} constrained points within dim {dim}; existence not decided")
