"""Dominance testing and Pareto-front extraction over robust summaries.

Comparison happens in minimized convention (maximize objectives negated).
Dominance is "at least as good everywhere, strictly better somewhere", so
duplicate objective vectors never dominate each other and all copies are
kept on the front.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import ValidationError
from .objectives import ObjectiveSpec, ObjectiveVector, minimized_row
from .robust import RobustSummary


@dataclass(frozen=True)
class FrontResult:
    """Partition of the feasible summaries into optimal and dominated."""

    optimal: tuple[RobustSummary, ...]
    dominated: tuple[RobustSummary, ...]
    infeasible_count: int


def dominates(
    a: ObjectiveVector, b: ObjectiveVector, specs: Sequence[ObjectiveSpec]
) -> bool:
    """True iff `a` is at least as good as `b` everywhere and better somewhere."""
    if not a.feasible or not b.feasible:
        raise ValidationError("dominance is defined on feasible vectors only")
    if set(a.values) != set(b.values):
        raise ValidationError(
            f"objective name mismatch: {sorted(a.values)} vs {sorted(b.values)}"
        )
    row_a = minimized_row(a, specs)
    row_b = minimized_row(b, specs)
    return bool(np.all(row_a <= row_b) and np.any(row_a < row_b))


def pareto_front(
    summaries: Sequence[RobustSummary], specs: Sequence[ObjectiveSpec]
) -> FrontResult:
    """Split feasible summaries into non-dominated and dominated sets.

    Infeasible entries are excluded from both sets and only counted. Output
    order inside each set follows input order.
    """
    feasible = [s for s in summaries if s.feasible]
    infeasible_count = len(summaries) - len(feasible)
    if not feasible:
        return FrontResult(optimal=(), dominated=(), infeasible_count=infeasible_count)
    costs = np.vstack([minimized_row(s.worst_case, specs) for s in feasible])
    mask = _kernels.pareto_mask(costs)
    optimal = tuple(s for s, keep in zip(feasible, mask) if keep)
    dominated = tuple(s for s, keep in zip(feasible, mask) if not keep)
    return FrontResult(optimal=optimal, dominated=dominated,
                       infeasible_count=infeasible_count)
