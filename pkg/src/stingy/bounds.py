"""Catalogue of chromatic-number upper bounds and their exact evaluation.

Every right-hand side is a :class:`fractions.Fraction`; ceilings are taken
exactly. A bound whose hypothesis fails is reported as satisfied (vacuously)
but does not count as a hypothesis hit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Callable, Iterable

from .invariants import InvariantRecord


class MissingInvariantError(ValueError):
    """The record lacks a quantity the bound needs."""


def _ceil(x: F) -> F:
    return F(math.ceil(x))


def _reed_ceil(r: InvariantRecord) -> F:
    return _ceil(F(r.omega + r.delta + 1, 2))


def _reed_half(r: InvariantRecord) -> F:
    return F(r.omega + r.delta + 1, 2)


def _quarter(r: InvariantRecord) -> F:
    return F(r.omega, 4) + F(3 * r.delta, 4) + 1


def _third(r: InvariantRecord) -> F:
    return F(r.omega, 3) + F(2 * (r.delta + 1), 3)


def _always(r: InvariantRecord) -> bool:
    return True


@dataclass(frozen=True)
class BoundSpec:
    id: str
    formula: str
    hypothesis_text: str
    anchor: str
    hypothesis: Callable[[InvariantRecord], bool] = field(repr=False)
    rhs: Callable[[InvariantRecord], tuple[F, ...]] = field(repr=False)
    needs: tuple[str, ...] = ()
    conjecture: bool = False
    pair: bool = False

    def describe(self) -> dict:
        return {
            "id": self.id,
            "formula": self.formula,
            "hypothesis": self.hypothesis_text,
            "anchor": self.anchor,
            "conjecture": self.conjecture,
        }


CATALOG: tuple[BoundSpec, ...] = (
    BoundSpec(
        "REED", "chi <= ceil((omega + Delta + 1)/2)", "always",
        "Reed's conjecture",
        _always, lambda r: (_reed_ceil(r),), conjecture=True,
    ),
    BoundSpec(
        "DC_THIRD", "chi <= omega/3 + 2(Delta + 1)/3", "G has a doubly critical edge",
        "doubly critical edge lemma",
        lambda r: r.has_doubly_critical_edge, lambda r: (_third(r),),
        needs=("has_doubly_critical_edge",),
    ),
    BoundSpec(
        "CHI_BIG_REED", "chi <= (omega + Delta + 1)/2", "chi > ceil(n/2)",
        "Reed's bound for chi above n/2 (matching theory)",
        lambda r: r.chi > math.ceil(F(r.n, 2)), lambda r: (_reed_half(r),),
    ),
    BoundSpec(
        "ALPHA2_REED", "chi <= ceil((omega + Delta + 1)/2)", "alpha <= 2",
        "Reed's bound for alpha <= 2",
        lambda r: r.alpha <= 2, lambda r: (_reed_ceil(r),),
    ),
    BoundSpec(
        "SMALLCLASS_REED", "chi <= ceil((omega + Delta + 1)/2)",
        "every optimal coloring has all classes of order <= 2",
        "Reed's bound when optimal colorings have small classes",
        lambda r: r.small_classes, lambda r: (_reed_ceil(r),), needs=("small_classes",),
    ),
    BoundSpec(
        "IOTA_AVG", "chi <= (iota + n)/2", "always",
        "stinginess average bound",
        _always, lambda r: (F(r.iota + r.n, 2),), needs=("iota",),
    ),
    BoundSpec(
        "RESPECTFUL_HALF", "chi <= (omega + Delta + 1)/2 + (|C| + 1)/2",
        "always; C a minimal-remainder respectful r-greedy partial coloring",
        "minimal-remainder respectful greedy lemma",
        _always, lambda r: (_reed_half(r) + F(r.respectful_class_count + 1, 2),),
        needs=("respectful_classes",),
    ),
    BoundSpec(
        "KEY", "chi <= (iota + omega + Delta + n + 2)/4", "always",
        "key lemma",
        _always, lambda r: (F(r.iota + r.omega + r.delta + r.n + 2, 4),), needs=("iota",),
    ),
    BoundSpec(
        "MAIN_DISJUNCT", "chi <= omega/3 + 2(Delta + 1)/3  OR  chi <= (omega + n + Delta + 3)/4",
        "always", "disjunctive theorem",
        _always, lambda r: (_third(r), F(r.omega + r.n + r.delta + 3, 4)),
    ),
    BoundSpec(
        "COR_HALF", "chi <= omega/4 + 3(Delta + 1)/4", "Delta >= n/2",
        "corollary for Delta >= n/2",
        lambda r: 2 * r.delta >= r.n, lambda r: (F(r.omega, 4) + F(3 * (r.delta + 1), 4),),
    ),
    BoundSpec(
        "COR_HALF_MINUS", "chi <= omega/4 + 3 Delta/4 + 1", "Delta >= (n - 1)/2",
        "corollary for Delta >= (n - 1)/2",
        lambda r: 2 * r.delta >= r.n - 1, lambda r: (_quarter(r),),
    ),
    BoundSpec(
        "MAIN_RESULT", "chi <= omega/4 + 3 Delta/4 + 1 for G or for its complement",
        "always (pair check on G and complement)", "main result",
        _always, lambda r: (_quarter(r),), needs=("complement",), pair=True,
    ),
    BoundSpec(
        "STINGY_REED", "chi <= (omega + Delta + 1)/2", "iota > omega/2",
        "Reed's bound for very stingy graphs",
        lambda r: 2 * r.iota > r.omega, lambda r: (_reed_half(r),), needs=("iota",),
    ),
    BoundSpec(
        "EIGHTH_DISJUNCT", "chi <= (omega + Delta + 1)/2  OR  chi <= 3 omega/8 + (n + Delta + 2)/4",
        "always", "three-eighths disjunctive theorem",
        _always, lambda r: (_reed_half(r), F(3 * r.omega, 8) + F(r.n + r.delta + 2, 4)),
    ),
)

BOUNDS: dict[str, BoundSpec] = {b.id: b for b in CATALOG}
PROVEN = tuple(b.id for b in CATALOG if not b.conjecture)


def get_bound(bound_id: str) -> BoundSpec:
    try:
        return BOUNDS[bound_id]
    except KeyError:
        raise KeyError(f"unknown bound id {bound_id!r}; known: {', '.join(BOUNDS)}") from None


@dataclass(frozen=True)
class BoundVerdict:
    bound_id: str
    graph6: str
    hypothesis_holds: bool
    lhs: int
    rhs_value: F
    satisfied: bool
    slack: F
    tight: bool
    # MAIN_RESULT: which of "graph" / "complement" / "both" / "neither" satisfy it;
    # disjunctions: index of the disjunct achieving the slack.
    detail: str | None = None


def _check_needs(rec: InvariantRecord, spec: BoundSpec) -> None:
    for name in spec.needs:
        if getattr(rec, name) is None:
            raise MissingInvariantError(f"{spec.id} needs {name!r}, which the record lacks")


def evaluate_pair(graph6: str, rec_g: InvariantRecord, rec_comp: InvariantRecord) -> BoundVerdict:
    """At least one of G, complement(G) satisfies chi <= omega/4 + 3 Delta/4 + 1."""
    if rec_g.n != rec_comp.n:
        raise ValueError(f"records disagree on n: {rec_g.n} vs {rec_comp.n}")
    n = rec_g.n
    # deg(v) + deg_complement(v) = n - 1, so one side has Delta >= (n - 1)/2.
    if n and 2 * max(rec_g.delta, rec_comp.delta) < n - 1:
        raise ValueError("records violate max(Delta, complement Delta) >= (n - 1)/2")
    slack_g = _quarter(rec_g) - rec_g.chi
    slack_c = _quarter(rec_comp) - rec_comp.chi
    sides = {(True, True): "both", (True, False): "graph",
             (False, True): "complement", (False, False): "neither"}[(slack_g >= 0, slack_c >= 0)]
    rec, slack = (rec_g, slack_g) if slack_g >= slack_c else (rec_comp, slack_c)
    return BoundVerdict(
        bound_id="MAIN_RESULT",
        graph6=graph6,
        hypothesis_holds=True,
        lhs=rec.chi,
        rhs_value=_quarter(rec),
        satisfied=slack >= 0,
        slack=slack,
        tight=slack == 0,
        detail=sides,
    )


def evaluate_bound(graph6: str, rec: InvariantRecord, spec: BoundSpec | str) -> BoundVerdict:
    if isinstance(spec, str):
        spec = get_bound(spec)
    _check_needs(rec, spec)
    if spec.pair:
        return evaluate_pair(graph6, rec, rec.complement)
    holds = bool(spec.hypothesis(rec))
    options = spec.rhs(rec)
    best = max(range(len(options)), key=lambda i: (options[i], -i))
    rhs = options[best]
    slack = rhs - rec.chi
    return BoundVerdict(
        bound_id=spec.id,
        graph6=graph6,
        hypothesis_holds=holds,
        lhs=rec.chi,
        rhs_value=rhs,
        satisfied=not holds or slack >= 0,
        slack=slack,
        tight=holds and slack == 0,
        detail=str(best) if len(options) > 1 else None,
    )


@dataclass
class BoundSummary:
    bound_id: str
    evaluated: int = 0
    hypothesis_hits: int = 0
    satisfied: int = 0
    min_slack: F | None = None
    tight_count: int = 0
    tight: list[str] = field(default_factory=list)
    violations: list[BoundVerdict] = field(default_factory=list)
    details: dict[str, int] = field(default_factory=dict)


def slack_statistics(verdicts: Iterable[BoundVerdict]) -> dict[str, BoundSummary]:
    """Per-bound totals. Minimum slack is taken over hypothesis hits only."""
    out: dict[str, BoundSummary] = {}
    for v in verdicts:
        s = out.get(v.bound_id)
        if s is None:
            s = out[v.bound_id] = BoundSummary(v.bound_id)
        s.evaluated += 1
        s.satisfied += v.satisfied
        if not v.hypothesis_holds:
            continue
        s.hypothesis_hits += 1
        if v.detail is not None:
            s.details[v.detail] = s.details.get(v.detail, 0) + 1
        if s.min_slack is None or v.slack < s.min_slack:
            s.min_slack = v.slack
        if v.tight:
            s.tight_count += 1
            s.tight.append(v.graph6)
        if not v.satisfied:
            s.violations.append(v)
    return out
