"""Worst-case aggregation of per-operating-point evaluations.

Robustness is adversarial over the operating grid: each minimized objective
keeps its maximum across operating points, each maximized objective its
minimum, and each objective independently (different operating values may
realize different objectives' worst cases). Constraints are checked at their
own worst case, so a single violating operating point makes a design
infeasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ValidationError
from .objectives import ConstraintSpec, ObjectiveSpec, ObjectiveVector
from .space import DesignPoint, OperatingGrid


@dataclass(frozen=True)
class EvaluationRecord:
    """Metrics of one design at one operating-grid value."""

    design: DesignPoint
    operating_value: float
    metrics: Mapping[str, float]

    def __post_init__(self):
        object.__setattr__(self, "metrics", dict(self.metrics))


@dataclass(frozen=True)
class RobustSummary:
    """A design's per-objective worst-case vector and feasibility verdict."""

    design: DesignPoint
    worst_case: ObjectiveVector
    constraint_worst: Mapping[str, float]
    feasible: bool

    def __post_init__(self):
        object.__setattr__(self, "constraint_worst", dict(self.constraint_worst))


def _check_coverage(records: Sequence[EvaluationRecord], operating: OperatingGrid) -> None:
    seen: dict[float, int] = {}
    for rec in records:
        seen[rec.operating_value] = seen.get(rec.operating_value, 0) + 1
    expected = set(operating.values)
    missing = expected - set(seen)
    if missing:
        raise ValidationError(
            f"missing operating value(s) {sorted(missing)} for design "
            f"{records[0].design.values}"
        )
    extra = set(seen) - expected
    if extra:
        raise ValidationError(
            f"operating value(s) {sorted(extra)} are not on the grid "
            f"{operating.values}"
        )
    duplicated = sorted(v for v, n in seen.items() if n > 1)
    if duplicated:
        raise ValidationError(
            f"duplicated operating value(s) {duplicated} for design "
            f"{records[0].design.values}"
        )


def _metric_column(records: Sequence[EvaluationRecord], name: str) -> list[float]:
    column = []
    for rec in records:
        if name not in rec.metrics:
            raise ValidationError(
                f"record at operating value {rec.operating_value} is missing "
                f"metric {name!r}"
            )
        column.append(rec.metrics[name])
    return column


def worst_case(
    records: Sequence[EvaluationRecord],
    objectives: Sequence[ObjectiveSpec],
    constraints: Sequence[ConstraintSpec],
    operating: OperatingGrid,
) -> RobustSummary:
    """Collapse one design's full operating sweep into a RobustSummary."""
    records = list(records)
    if not records:
        raise ValidationError("no records given")
    design = records[0].design
    if any(rec.design != design for rec in records):
        raise ValidationError("records mix designs; worst_case aggregates one design")
    _check_coverage(records, operating)

    worst_values = {}
    for spec in objectives:
        column = _metric_column(records, spec.name)
        worst_values[spec.name] = min(column) if spec.direction == "maximize" else max(column)

    constraint_worst = {}
    feasible = True
    for spec in constraints:
        column = _metric_column(records, spec.name)
        worst = max(column) if spec.comparator == "lt" else min(column)
        constraint_worst[spec.name] = worst
        if not spec.satisfied(worst):
            feasible = False

    return RobustSummary(
        design=design,
        worst_case=ObjectiveVector(values=worst_values, feasible=feasible),
        constraint_worst=constraint_worst,
        feasible=feasible,
    )


def robustify_all(
    records: Iterable[EvaluationRecord],
    objectives: Sequence[ObjectiveSpec],
    constraints: Sequence[ConstraintSpec],
    operating: OperatingGrid,
) -> list[RobustSummary]:
    """One RobustSummary per design, in first-appearance order.

    Infeasible designs are retained with feasible=False; downstream Pareto
    extraction excludes them and the scalarizer maps them to +inf.
    """
    grouped: dict[tuple[float, ...], list[EvaluationRecord]] = {}
    for rec in records:
        grouped.setdefault(rec.design.values, []).append(rec)
    summaries = []
    for key, group in grouped.items():
        try:
            summaries.append(worst_case(group, objectives, constraints, operating))
        except ValidationError as exc:
            raise ValidationError(f"design {key}: {exc}") from None
    return summaries
