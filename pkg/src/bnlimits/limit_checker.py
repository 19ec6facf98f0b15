"""Feasibility engine for limit linear series on compact-type curves.

refute() decides whether a curve can carry a limit g^r_d by exhausting the
vanishing sequences at the nodes and applying only necessary local rules:
node compatibility (crude matchings included, so sums >= d), the elliptic
pairwise bound with its torsion-divisibility consequence, the elliptic
single-pole rule, the exact clamp criteria on general pointed components,
and the counting rule on fact-sheet components.  A verdict of "refuted"
therefore certifies nonexistence; surviving candidates are reported as
found, never confirmed (smoothability is not verified here).

Enumeration pivots on the component with the most nodes.  For a two-noded
elliptic pivot the engine walks all pairs of vanishing sequences at its two
points; adjacent general components are tested only at the pointwise
minimal sequence compatible with the pivot side, which is sound because the
clamp criteria are downward closed in the ramification.  For a star around
a fact-sheet or general component, one-noded elliptic tails force a cusp on
the hub side, and the hub rule is evaluated once on those forced floors.
Setting prune=False replaces the minimal-complement shortcut by a full scan
(and the forced floors by per-sequence minima), which is the reference mode
the pruning is validated against.

Reports are deterministic: candidates are ordered lexicographically and
repeated runs produce identical output.  The pair enumeration may be
partitioned across processes with jobs > 1; results are merged in
lexicographic order, so the report does not depend on the partitioning.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .curves import (
    KIND_ELLIPTIC,
    KIND_FACTSHEET,
    KIND_GENERAL,
    RULE_ELLIPTIC_PAIR_BOUND,
    RULE_ELLIPTIC_SINGLE_POLE,
    RULE_ELLIPTIC_TORSION,
    CheckResult,
    CompactCurve,
    Component,
    elliptic_single_point_check,
    elliptic_two_point_check,
    factsheet_check,
    general_pointed_check,
)
from .numerology import (
    RamificationSeq,
    SeriesType,
    VanishingSeq,
    adjusted_rho,
    rho,
    vanishing_to_ramification,
)

SMOOTHABILITY_NOTE = "smoothability not verified"


class UnsupportedCurveError(ValueError):
    """The curve's dual tree is outside the engine's enumeration strategies."""


def series_name(r: int, d: int) -> str:
    return f"g^{r}_{d}"


def node_compatible(a_y: VanishingSeq, a_z: VanishingSeq, d: int) -> str:
    """Classify a node matching: "incompatible", "crude" or "refined".

    The two aspects match at a node when a_i + b_{r-i} >= d for all i;
    refined means equality everywhere.
    """
    if a_y.d != d or a_z.d != d or a_y.r != a_z.r:
        raise ValueError("sequence bounds do not match the node degree")
    r = a_y.r
    sums = [a_y.entries[i] + a_z.entries[r - i] for i in range(r + 1)]
    if any(s < d for s in sums):
        return "incompatible"
    return "refined" if all(s == d for s in sums) else "crude"


def min_complement(a: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Pointwise smallest vanishing sequence compatible with a across a node."""
    r = len(a) - 1
    return tuple(max(d - a[r - i], i) for i in range(r + 1))


@dataclass(frozen=True)
class AdditivityAudit:
    """Both sides of the additivity inequality for the adjusted rho."""

    lhs: int  # rho(g, r, d) of the whole curve
    rhs: int  # sum of the per-aspect adjusted rho
    satisfied: bool
    equality: bool


def additivity_audit(t: SeriesType, aspect_rhos: Sequence[int]) -> AdditivityAudit:
    """Compare rho(g, r, d) with the sum of per-component adjusted rho."""
    lhs = rho(t)
    rhs = sum(aspect_rhos)
    return AdditivityAudit(lhs=lhs, rhs=rhs, satisfied=lhs >= rhs, equality=lhs == rhs)


Assignment = dict[str, dict[str, tuple[int, ...]]]


@dataclass(frozen=True)
class Survivor:
    """A candidate aspect assignment that no necessary rule eliminated."""

    assignment: tuple[tuple[str, tuple[tuple[str, tuple[int, ...]], ...]], ...]
    unconfirmed: tuple[str, ...] = ()

    @staticmethod
    def from_dict(assignment: Assignment, unconfirmed: Sequence[str] = ()) -> "Survivor":
        frozen = tuple(
            (comp, tuple(sorted((pt, tuple(seq)) for pt, seq in pts.items())))
            for comp, pts in sorted(assignment.items())
        )
        return Survivor(frozen, tuple(sorted(unconfirmed)))

    def assignment_dict(self) -> Assignment:
        return {comp: {pt: seq for pt, seq in pts} for comp, pts in self.assignment}

    def to_json(self) -> dict:
        out: dict = {"aspects": {c: {p: list(s) for p, s in pts} for c, pts in self.assignment}}
        if self.unconfirmed:
            out["unconfirmed_components"] = list(self.unconfirmed)
        return out


@dataclass(frozen=True)
class RefutationReport:
    curve: str
    series: tuple[int, int]
    verdict: str  # "refuted" | "survivors"
    candidates_examined: int
    rule_hits: tuple[tuple[str, int], ...]
    survivor_count: int
    survivors: tuple[Survivor, ...]
    truncated: bool
    pruned: bool
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "curve": self.curve,
            "series": {"r": self.series[0], "d": self.series[1]},
            "verdict": self.verdict,
            "candidates_examined": self.candidates_examined,
            "rule_hits": {k: v for k, v in self.rule_hits},
            "survivor_count": self.survivor_count,
            "survivors": [s.to_json() for s in self.survivors],
            "survivors_truncated": self.truncated,
            "pruned": self.pruned,
            "notes": list(self.notes),
        }

    def render(self) -> str:
        r, d = self.series
        lines = [
            f"refutation report: curve {self.curve}, series {series_name(r, d)}",
            f"verdict: {self.verdict}",
            f"candidates examined: {self.candidates_examined}",
            "rule hits:",
        ]
        lines += [f"  {k}: {v}" for k, v in self.rule_hits] or ["  (none)"]
        lines.append(f"survivors: {self.survivor_count}"
                     + (" (listing truncated)" if self.truncated else ""))
        for s in self.survivors:
            flag = f"  [unconfirmed: {', '.join(s.unconfirmed)}]" if s.unconfirmed else ""
            parts = []
            for comp, pts in s.assignment:
                for pt, seq in pts:
                    parts.append(f"{comp}.{pt}={tuple(seq)}")
            lines.append("  - " + " ".join(parts) + flag)
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


@dataclass(frozen=True)
class NodeAudit:
    node: str
    sums: tuple[int, ...]
    classification: str


@dataclass(frozen=True)
class ComponentAudit:
    component: str
    status: str
    exact: bool
    witness_grade: bool
    rule: str
    detail: str


@dataclass(frozen=True)
class WitnessReport:
    curve: str
    series: tuple[int, int]
    verdict: str  # "confirmed" | "consistent" | "rejected"
    nodes: tuple[NodeAudit, ...]
    components: tuple[ComponentAudit, ...]
    aspect_rhos: tuple[tuple[str, int], ...]
    node_excess: tuple[tuple[str, int], ...]
    additivity: AdditivityAudit
    refined: bool
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "curve": self.curve,
            "series": {"r": self.series[0], "d": self.series[1]},
            "verdict": self.verdict,
            "nodes": [
                {"node": n.node, "sums": list(n.sums), "classification": n.classification}
                for n in self.nodes
            ],
            "components": [
                {
                    "component": c.component,
                    "status": c.status,
                    "exact": c.exact,
                    "witness_grade": c.witness_grade,
                    "rule": c.rule,
                    "detail": c.detail,
                }
                for c in self.components
            ],
            "aspect_rhos": {k: v for k, v in self.aspect_rhos},
            "node_excess": {k: v for k, v in self.node_excess},
            "additivity": {
                "lhs": self.additivity.lhs,
                "rhs": self.additivity.rhs,
                "satisfied": self.additivity.satisfied,
                "equality": self.additivity.equality,
            },
            "refined": self.refined,
            "notes": list(self.notes),
        }

    def render(self) -> str:
        r, d = self.series
        lines = [f"witness report: curve {self.curve}, series {series_name(r, d)}", "nodes:"]
        for n in self.nodes:
            lines.append(f"  {n.node}: sums {n.sums} -> {n.classification}")
        lines.append("components:")
        for c in self.components:
            grade = []
            if c.exact:
                grade.append("exact")
            if c.witness_grade:
                grade.append("witness-grade")
            extra = f" ({', '.join(grade)})" if grade else ""
            det = f" -- {c.detail}" if c.detail else ""
            lines.append(f"  {c.component}: {c.status}{extra} via {c.rule}{det}")
        lines.append("aspect rho:")
        for comp, val in self.aspect_rhos:
            lines.append(f"  {comp}: {val}")
        a = self.additivity
        rel = "=" if a.equality else (">" if a.lhs > a.rhs else "<")
        lines.append(
            f"additivity: rho = {a.lhs} {rel} {a.rhs} = sum of aspect rho"
            + (" (equality, refined)" if a.equality else "")
        )
        lines.append(f"verdict: {self.verdict}")
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# topology analysis


@dataclass(frozen=True)
class _Slot:
    """One node of the pivot: its point and what hangs off the other side."""

    point: str
    neighbor: Component
    neighbor_point: str
    kind: str  # "leaf-general" | "leaf-factsheet" | "bridge"
    far_point: str | None = None  # bridge: neighbor's point at the tail node
    tail: Component | None = None
    tail_point: str | None = None


@dataclass(frozen=True)
class _Plan:
    mode: str  # "pair" | "single" | "floor"
    pivot: Component
    slots: tuple[_Slot, ...]


_KIND_PRIORITY = {KIND_ELLIPTIC: 0, KIND_FACTSHEET: 1, KIND_GENERAL: 2}


def _analyze(curve: CompactCurve) -> _Plan:
    if len(curve.components) < 2:
        raise UnsupportedCurveError("need at least two components joined at a node")
    node_count = {c.id: len(curve.node_points(c.id)) for c in curve.components}
    order = {c.id: i for i, c in enumerate(curve.components)}
    pivot = max(
        curve.components,
        key=lambda c: (node_count[c.id], -_KIND_PRIORITY[c.kind], -order[c.id]),
    )

    def node_at(comp_id: str, point: str):
        for node in curve.nodes:
            if (comp_id, point) in node.ends:
                return node
        raise KeyError((comp_id, point))

    def other_end(node, comp_id: str) -> tuple[str, str]:
        for end in node.ends:
            if end[0] != comp_id:
                return end
        raise KeyError(comp_id)

    slots = []
    for point in curve.node_points(pivot.id):
        nb_id, nb_point = other_end(node_at(pivot.id, point), pivot.id)
        nb = curve.component(nb_id)
        nb_nodes = curve.node_points(nb_id)
        if pivot.kind == KIND_ELLIPTIC:
            if nb.kind == KIND_GENERAL and len(nb_nodes) == 1:
                slots.append(_Slot(point, nb, nb_point, "leaf-general"))
            elif nb.kind == KIND_FACTSHEET and len(nb_nodes) == 1:
                slots.append(_Slot(point, nb, nb_point, "leaf-factsheet"))
            elif nb.kind == KIND_GENERAL and len(nb_nodes) == 2:
                far = next(p for p in nb_nodes if p != nb_point)
                tail_id, tail_point = other_end(node_at(nb_id, far), nb_id)
                tail = curve.component(tail_id)
                if tail.kind != KIND_ELLIPTIC or len(curve.node_points(tail_id)) != 1:
                    raise UnsupportedCurveError(
                        f"bridge {nb_id} must end in a one-noded elliptic tail"
                    )
                slots.append(_Slot(point, nb, nb_point, "bridge", far, tail, tail_point))
            else:
                raise UnsupportedCurveError(
                    f"component {nb_id} next to the elliptic pivot is not a supported leaf or bridge"
                )
        else:
            if nb.kind != KIND_ELLIPTIC or len(nb_nodes) != 1:
                raise UnsupportedCurveError(
                    f"star around {pivot.id} requires one-noded elliptic tails, got {nb_id}"
                )
            slots.append(_Slot(point, nb, nb_point, "tail"))

    if pivot.kind == KIND_ELLIPTIC:
        if len(slots) == 2:
            return _Plan("pair", pivot, tuple(slots))
        if len(slots) == 1:
            return _Plan("single", pivot, tuple(slots))
        raise UnsupportedCurveError("elliptic pivot supports at most two nodes")
    return _Plan("floor", pivot, tuple(slots))


# ---------------------------------------------------------------------------
# shared sequence helpers (hot paths work on bare tuples)


def _all_seqs(r: int, d: int) -> list[tuple[int, ...]]:
    return list(combinations(range(d + 1), r + 1))


def _single_pole_ok(a: tuple[int, ...], d: int) -> bool:
    return not (len(a) >= 2 and a[-1] == d and a[-2] == d - 1)


def _max_tail_seq(r: int, d: int) -> tuple[int, ...] | None:
    """Pointwise largest vanishing sequence passing the single-pole rule."""
    if d < r + 1:
        return None  # the only candidate (0..d) has both d-1 and d
    return tuple(d - 1 - (r - i) for i in range(r)) + (d,)


def _cusp_floor(r: int, d: int) -> tuple[int, ...]:
    """Vanishing floor forced across a node by any admissible elliptic tail."""
    return (0,) + tuple(range(2, r + 2))


def _clamp_feasible(c: tuple[int, ...], genus: int, d: int, r: int, cusps: int) -> bool:
    # clamp criterion on the ramification of c, with `cusps` extra cusp powers
    shift = genus + cusps - d + r
    bound = genus + cusps
    total = 0
    for i, ci in enumerate(c):
        v = ci - i + shift
        if v > 0:
            total += v
            if total > bound:
                return False
    return True


def _slot_rule_key(slot: _Slot) -> str:
    from .curves import RULE_FACTSHEET_COUNT, RULE_GENERAL_CUSP, RULE_GENERAL_POINTED

    if slot.kind == "leaf-general":
        return f"{RULE_GENERAL_POINTED}@{slot.neighbor.id}"
    if slot.kind == "bridge":
        return f"{RULE_GENERAL_CUSP}@{slot.neighbor.id}"
    return f"{RULE_FACTSHEET_COUNT}@{slot.neighbor.id}"


def _slot_status_fn(slot: _Slot, t: SeriesType, naive: bool, seqs: list[tuple[int, ...]]):
    """Build a -> status ("pass"/"fail"/"unknown") for the component behind a slot.

    Pruned mode evaluates the exact clamp criterion on the pointwise minimal
    compatible sequence.  Naive mode scans every compatible sequence instead
    and asks whether any is feasible, which avoids the monotonicity lemma.
    """
    r, d = t.r, t.d
    genus = slot.neighbor.genus
    cusps = 1 if slot.kind == "bridge" else 0

    if slot.kind == "leaf-factsheet":
        facts = slot.neighbor.facts

        def factsheet_status(a: tuple[int, ...]) -> str:
            c = min_complement(a, d)
            ram = vanishing_to_ramification(VanishingSeq(c, d))
            return factsheet_check(facts, SeriesType(slot.neighbor.genus, r, d), [ram]).status

        return factsheet_status

    if not naive:
        def pruned_status(a: tuple[int, ...]) -> str:
            ok = _clamp_feasible(min_complement(a, d), genus, d, r, cusps)
            return "pass" if ok else "fail"

        return pruned_status

    def naive_status(a: tuple[int, ...]) -> str:
        rev = tuple(reversed(a))
        for s in seqs:  # lexicographic scan; first hit is the pointwise minimum
            if all(s[i] + rev[i] >= d for i in range(r + 1)) and _clamp_feasible(s, genus, d, r, cusps):
                return "pass"
        return "fail"

    return naive_status


def _slot_assignment(slot: _Slot, a: tuple[int, ...], d: int, r: int) -> Assignment:
    """Aspect data for the component(s) behind a slot, given the pivot side a."""
    out: Assignment = {slot.neighbor.id: {slot.neighbor_point: min_complement(a, d)}}
    if slot.kind == "bridge":
        out[slot.neighbor.id][slot.far_point] = _cusp_floor(r, d)
        out[slot.tail.id] = {slot.tail_point: _max_tail_seq(r, d)}
    return out


# ---------------------------------------------------------------------------
# refutation engine


def refute(curve: CompactCurve, t: SeriesType, *, prune: bool = True,
           survivor_cap: int = 100, jobs: int = 1) -> RefutationReport:
    """Exhaust aspect candidates for a limit g^r_d and apply the necessary rules.

    Returns verdict "refuted" only if every candidate was eliminated by a
    rule application; rule_hits records, per rule, how many candidates that
    rule eliminated first (rules are applied in a fixed order).  Unknown
    oracle answers never eliminate: such candidates survive flagged as
    unconfirmed.
    """
    if t.g != curve.genus:
        raise ValueError(f"series genus {t.g} does not match curve genus {curve.genus}")
    plan = _analyze(curve)
    if plan.mode == "floor":
        return _refute_floor(curve, t, plan, prune)
    if plan.mode == "single":
        return _refute_single(curve, t, plan, prune, survivor_cap)
    return _refute_pair(curve, t, plan, prune, survivor_cap, jobs)


def _finish(curve, t, candidates, hits, survivors, count, prune, extra_notes=()) -> RefutationReport:
    verdict = "refuted" if count == 0 else "survivors"
    notes = [
        "crude node matchings included (sums >= d)",
        "eliminations use necessary rules only",
    ]
    if count:
        notes.append(f"survivors satisfy the necessary rules; {SMOOTHABILITY_NOTE}")
    notes.extend(extra_notes)
    return RefutationReport(
        curve=curve.id,
        series=(t.r, t.d),
        verdict=verdict,
        candidates_examined=candidates,
        rule_hits=tuple(sorted(hits.items())),
        survivor_count=count,
        survivors=tuple(survivors),
        truncated=count > len(survivors),
        pruned=prune,
        notes=tuple(notes),
    )


def _refute_pair(curve, t, plan, prune, cap, jobs) -> RefutationReport:
    r, d = t.r, t.d
    seqs = _all_seqs(r, d)
    n = len(seqs)
    chunks = [(0, n)]
    if jobs > 1:
        step = (n + jobs - 1) // jobs
        chunks = [(lo, min(lo + step, n)) for lo in range(0, n, step)]
    args = [(curve, t, prune, cap, lo, hi) for lo, hi in chunks]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_pair_worker, args))
    else:
        parts = [_pair_worker(a) for a in args]
    hits: dict[str, int] = {}
    survivors: list[Survivor] = []
    count = 0
    for part_hits, part_survivors, part_count in parts:
        for k, v in part_hits.items():
            hits[k] = hits.get(k, 0) + v
        survivors.extend(part_survivors)  # chunks are in lexicographic order
        count += part_count
    return _finish(curve, t, n * n, hits, survivors[:cap], count, prune)


def _pair_worker(args):
    curve, t, prune, cap, lo, hi = args
    plan = _analyze(curve)
    slot_u, slot_v = plan.slots
    r, d = t.r, t.d
    pivot = plan.pivot
    torsion = pivot.torsion_between(slot_u.point, slot_v.point)
    seqs = _all_seqs(r, d)
    index = {s: i for i, s in enumerate(seqs)}

    status_u_fn = _slot_status_fn(slot_u, t, not prune, seqs)
    status_v_fn = _slot_status_fn(slot_v, t, not prune, seqs)
    status_u = [status_u_fn(a) for a in seqs]
    status_v = [status_v_fn(a) for a in seqs]
    pole_ok = [_single_pole_ok(a, d) for a in seqs]

    key_pole = f"{RULE_ELLIPTIC_SINGLE_POLE}@{pivot.id}"
    key_u = _slot_rule_key(slot_u)
    key_v = _slot_rule_key(slot_v)
    key_pair = f"{RULE_ELLIPTIC_PAIR_BOUND}@{pivot.id}"
    key_tor = f"{RULE_ELLIPTIC_TORSION}@{pivot.id}"

    n = len(seqs)
    hits: dict[str, int] = {}
    survivors: list[Survivor] = []
    count = 0

    def bump(key: str, by: int = 1) -> None:
        hits[key] = hits.get(key, 0) + by

    for ia in range(lo, hi):
        a = seqs[ia]
        if not pole_ok[ia]:
            bump(key_pole, n)
            continue
        su = status_u[ia]
        if su == "fail":
            bump(key_u, n)
            continue
        # pairwise bound region: b[j] <= d - a[r-j] for all j
        caps = tuple(d - a[r - j] for j in range(r + 1))
        in_box = 0
        for b in _gen_ceiling(caps):
            in_box += 1
            ib = index[b]
            if not pole_ok[ib]:
                bump(key_pole)
                continue
            sv = status_v[ib]
            if sv == "fail":
                bump(key_v)
                continue
            eq = [i for i in range(r + 1) if a[i] + b[r - i] == d]
            if len(eq) >= 2:
                if torsion is None:
                    bump(key_tor)
                    continue
                base = a[eq[0]]
                if any((a[i] - base) % torsion for i in eq):
                    bump(key_tor)
                    continue
            count += 1
            if len(survivors) < cap:
                assignment: Assignment = {pivot.id: {slot_u.point: a, slot_v.point: b}}
                for slot, side in ((slot_u, a), (slot_v, b)):
                    for comp, pts in _slot_assignment(slot, side, d, r).items():
                        assignment.setdefault(comp, {}).update(pts)
                unconfirmed = [s.neighbor.id for s, st in ((slot_u, su), (slot_v, sv))
                               if st == "unknown"]
                survivors.append(Survivor.from_dict(assignment, unconfirmed))
        bump(key_pair, n - in_box)
    return hits, survivors, count


def _gen_ceiling(caps: tuple[int, ...]):
    """Strictly increasing integer tuples b with 0 <= b[j] <= caps[j]."""
    r1 = len(caps)
    if any(caps[j] < j for j in range(r1)):
        return
    seq = [0] * r1

    def rec(j: int, lo: int):
        for v in range(lo, caps[j] + 1):
            seq[j] = v
            if j + 1 == r1:
                yield tuple(seq)
            else:
                yield from rec(j + 1, v + 1)

    yield from rec(0, 0)


def _refute_single(curve, t, plan, prune, cap) -> RefutationReport:
    (slot,) = plan.slots
    r, d = t.r, t.d
    pivot = plan.pivot
    seqs = _all_seqs(r, d)
    status_fn = _slot_status_fn(slot, t, not prune, seqs)
    key_pole = f"{RULE_ELLIPTIC_SINGLE_POLE}@{pivot.id}"
    key_nb = _slot_rule_key(slot)
    hits: dict[str, int] = {}
    survivors: list[Survivor] = []
    count = 0
    for a in seqs:
        if not _single_pole_ok(a, d):
            hits[key_pole] = hits.get(key_pole, 0) + 1
            continue
        st = status_fn(a)
        if st == "fail":
            hits[key_nb] = hits.get(key_nb, 0) + 1
            continue
        count += 1
        if len(survivors) < cap:
            assignment: Assignment = {pivot.id: {slot.point: a}}
            for comp, pts in _slot_assignment(slot, a, d, r).items():
                assignment.setdefault(comp, {}).update(pts)
            survivors.append(Survivor.from_dict(
                assignment, [slot.neighbor.id] if st == "unknown" else []))
    return _finish(curve, t, len(seqs), hits, survivors, count, prune)


def _refute_floor(curve, t, plan, prune) -> RefutationReport:
    """Star around a fact-sheet or general hub: evaluate the forced floors."""
    r, d = t.r, t.d
    pivot = plan.pivot
    hits: dict[str, int] = {}

    floors: list[tuple[int, ...]] = []
    for slot in plan.slots:
        if prune:
            smax = _max_tail_seq(r, d)
            if smax is None:
                hits[f"{RULE_ELLIPTIC_SINGLE_POLE}@{slot.neighbor.id}"] = 1
                return _finish(curve, t, 1, hits, [], 0, prune)
            floors.append(min_complement(smax, d))
        else:
            admissible = [s for s in _all_seqs(r, d) if _single_pole_ok(s, d)]
            if not admissible:
                hits[f"{RULE_ELLIPTIC_SINGLE_POLE}@{slot.neighbor.id}"] = 1
                return _finish(curve, t, 1, hits, [], 0, prune)
            comps = [min_complement(s, d) for s in admissible]
            floors.append(tuple(min(c[i] for c in comps) for i in range(r + 1)))

    t_pivot = SeriesType(pivot.genus, r, d)
    floor_rams = [vanishing_to_ramification(VanishingSeq(f, d)) for f in floors]
    if pivot.kind == KIND_FACTSHEET:
        result = factsheet_check(pivot.facts, t_pivot, floor_rams)
    else:
        result = general_pointed_check(t_pivot, floor_rams)
    key = f"{result.rule}@{pivot.id}"
    if result.failed:
        hits[key] = 1
        return _finish(curve, t, 1, hits, [], 0, prune,
                       extra_notes=["hub evaluated on the ramification floors forced by the tails"])
    assignment: Assignment = {pivot.id: {slot.point: floors[i] for i, slot in enumerate(plan.slots)}}
    for slot in plan.slots:
        assignment[slot.neighbor.id] = {slot.neighbor_point: _max_tail_seq(r, d)}
    unconfirmed = [pivot.id] if result.status == "unknown" else []
    survivor = Survivor.from_dict(assignment, unconfirmed)
    return _finish(curve, t, 1, hits, [survivor], 1, prune,
                   extra_notes=["hub evaluated on the ramification floors forced by the tails",
                                "survivor lists the floor assignment; larger ramification may also survive"])


# ---------------------------------------------------------------------------
# witness verification


def verify_witness(curve: CompactCurve, t: SeriesType,
                   assignment: Mapping[str, Mapping[str, Sequence[int]]]) -> WitnessReport:
    """Check an explicit aspect assignment against every local rule.

    Sequences are required vanishing orders: each component aspect must
    vanish at least that much, which is what the node matching consumes.
    Verdict "confirmed" needs every component oracle to be an exact pass and
    every node to match; passes by merely necessary rules (or unknowns on
    fact-sheet components) downgrade to "consistent".
    """
    if t.g != curve.genus:
        raise ValueError(f"series genus {t.g} does not match curve genus {curve.genus}")
    r, d = t.r, t.d

    seqs: dict[tuple[str, str], VanishingSeq] = {}
    for comp in curve.components:
        need = curve.node_points(comp.id)
        given = dict(assignment.get(comp.id, {}))
        missing = [p for p in need if p not in given]
        if missing:
            raise ValueError(f"assignment incomplete: {comp.id} lacks {missing}")
        for pt, entries in given.items():
            if pt not in comp.points:
                raise ValueError(f"assignment names unknown point {comp.id}.{pt}")
            if pt not in need:
                raise ValueError(f"point {comp.id}.{pt} is not a node; only node points carry witness data")
            seq = VanishingSeq(tuple(entries), d)
            if seq.r != r:
                raise ValueError(f"sequence at {comp.id}.{pt} has length {seq.r + 1}, need {r + 1}")
            seqs[(comp.id, pt)] = seq
    for comp_id in assignment:
        curve.component(comp_id)  # KeyError on unknown id

    node_audits = []
    excess = []
    for node in curve.nodes:
        (c1, p1), (c2, p2) = node.ends
        a_y, a_z = seqs[(c1, p1)], seqs[(c2, p2)]
        cls = node_compatible(a_y, a_z, d)
        sums = tuple(a_y.entries[i] + a_z.entries[r - i] for i in range(r + 1))
        node_audits.append(NodeAudit(str(node), sums, cls))
        excess.append((str(node), sum(sums) - (r + 1) * d if cls != "incompatible" else 0))

    comp_audits = []
    aspect_rhos = []
    for comp in curve.components:
        pts = curve.node_points(comp.id)
        vans = [seqs[(comp.id, p)] for p in pts]
        rams = [vanishing_to_ramification(v) for v in vans]
        result = _component_oracle(comp, t, pts, vans, rams)
        comp_audits.append(ComponentAudit(comp.id, result.status, result.exact,
                                          result.witness_grade, result.rule, result.detail))
        aspect_rhos.append((comp.id, adjusted_rho(SeriesType(comp.genus, r, d), rams)))

    audit = additivity_audit(t, [v for _, v in aspect_rhos])
    refined = all(n.classification == "refined" for n in node_audits)

    if any(n.classification == "incompatible" for n in node_audits) or any(
        c.status == "fail" for c in comp_audits
    ):
        verdict = "rejected"
    elif all(c.status == "pass" and c.exact for c in comp_audits):
        verdict = "confirmed"
    else:
        verdict = "consistent"

    notes = []
    if verdict == "consistent":
        asserted = [c.component for c in comp_audits if c.status == "unknown" or not c.exact]
        notes.append("component existence asserted, not proven: " + ", ".join(sorted(asserted)))
    if verdict in ("confirmed", "consistent"):
        notes.append(SMOOTHABILITY_NOTE)
    return WitnessReport(
        curve=curve.id,
        series=(r, d),
        verdict=verdict,
        nodes=tuple(node_audits),
        components=tuple(comp_audits),
        aspect_rhos=tuple(aspect_rhos),
        node_excess=tuple(excess),
        additivity=audit,
        refined=refined,
        notes=tuple(notes),
    )


def _component_oracle(comp: Component, t: SeriesType, pts: list[str],
                      vans: list[VanishingSeq], rams: list[RamificationSeq]) -> CheckResult:
    d = t.d
    if comp.kind == KIND_GENERAL:
        return general_pointed_check(SeriesType(comp.genus, t.r, t.d), rams)
    if comp.kind == KIND_FACTSHEET:
        return factsheet_check(comp.facts, SeriesType(comp.genus, t.r, t.d), rams)
    # elliptic
    if len(vans) == 1:
        return elliptic_single_point_check(d, vans[0])
    if len(vans) == 2:
        for v in vans:
            single = elliptic_single_point_check(d, v)
            if single.failed:
                return single
        torsion = comp.torsion_between(pts[0], pts[1])
        return elliptic_two_point_check(vans[0], vans[1], torsion)
    raise UnsupportedCurveError(f"elliptic component {comp.id} has more than two nodes")
