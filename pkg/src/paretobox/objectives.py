"""Objective declarations and the target-priority-limit scalarizer.

Each objective carries a direction plus (target, priority, limit). The
scalarizer maps a metric value to a non-negative penalty: zero on the
target-satisfying side, a linear ramp with slope set by the priority
between target and limit, and +inf past the limit. Penalties are separable,
so a vector's score is the plain sum; an infeasible vector scores +inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import ConfigError, ValidationError

DIRECTIONS = ("minimize", "maximize")
COMPARATORS = ("lt", "gt")


@dataclass(frozen=True)
class ObjectiveSpec:
    """Direction plus (target, limit, priority) for one metric."""

    name: str
    direction: str
    target: float
    limit: float
    priority: float = 1.0

    def __post_init__(self):
        if not self.name:
            raise ValidationError("objective name must be non-empty")
        if self.direction not in DIRECTIONS:
            raise ValidationError(
                f"objective {self.name!r}: direction must be one of {DIRECTIONS}, "
                f"got {self.direction!r}"
            )
        if self.direction == "minimize" and not self.target <= self.limit:
            raise ValidationError(
                f"objective {self.name!r}: minimize requires target <= limit "
                f"(target={self.target}, limit={self.limit})"
            )
        if self.direction == "maximize" and not self.limit <= self.target:
            raise ValidationError(
                f"objective {self.name!r}: maximize requires limit <= target "
                f"(target={self.target}, limit={self.limit})"
            )
        if not self.priority > 0:
            raise ValidationError(
                f"objective {self.name!r}: priority must be > 0, got {self.priority}"
            )


@dataclass(frozen=True)
class ConstraintSpec:
    """Hard feasibility threshold on one metric.

    `lt` means the metric must stay at or below the threshold (a value
    strictly above it violates), `gt` the mirror image.
    """

    name: str
    comparator: str
    threshold: float

    def __post_init__(self):
        if not self.name:
            raise ValidationError("constraint name must be non-empty")
        if self.comparator not in COMPARATORS:
            raise ValidationError(
                f"constraint {self.name!r}: comparator must be one of {COMPARATORS}, "
                f"got {self.comparator!r}"
            )

    def satisfied(self, value: float) -> bool:
        if self.comparator == "lt":
            return value <= self.threshold
        return value >= self.threshold


@dataclass(frozen=True)
class ObjectiveVector:
    """Per-objective worst-case values plus the design's feasibility flag."""

    values: Mapping[str, float]
    feasible: bool

    def __post_init__(self):
        object.__setattr__(self, "values", dict(self.values))


def phi_component(value: float, spec: ObjectiveSpec) -> float:
    """Penalty for one metric value: 0, a linear ramp, or +inf."""
    if spec.direction == "minimize":
        if value <= spec.target:
            return 0.0
        if value > spec.limit:
            return math.inf
        return spec.priority * (value - spec.target) / (spec.limit - spec.target)
    if value >= spec.target:
        return 0.0
    if value < spec.limit:
        return math.inf
    return spec.priority * (spec.target - value) / (spec.target - spec.limit)


def scalarize(vector: ObjectiveVector, specs: Sequence[ObjectiveSpec]) -> float:
    """Sum of per-objective penalties; +inf for infeasible vectors."""
    if not vector.feasible:
        return math.inf
    total = 0.0
    for spec in specs:
        if spec.name not in vector.values:
            raise ValidationError(f"vector is missing objective {spec.name!r}")
        total += phi_component(vector.values[spec.name], spec)
    return total


def validate_specs(specs: Sequence[ObjectiveSpec]) -> None:
    """Reject duplicate names; per-spec rules are enforced at construction."""
    seen = set()
    for spec in specs:
        if spec.name in seen:
            raise ValidationError(f"duplicate objective name {spec.name!r}")
        seen.add(spec.name)


def minimized_row(vector: ObjectiveVector, specs: Sequence[ObjectiveSpec]) -> np.ndarray:
    """Objective values in spec order, maximize entries negated.

    In this convention every objective is minimized, which is what dominance
    tests and the Pareto kernels operate on.
    """
    row = np.empty(len(specs), dtype=float)
    for i, spec in enumerate(specs):
        if spec.name not in vector.values:
            raise ValidationError(f"vector is missing objective {spec.name!r}")
        v = vector.values[spec.name]
        row[i] = -v if spec.direction == "maximize" else v
    return row


# ---------------------------------------------------------------------------
# Config parsing

_OBJECTIVE_KEYS = {"name", "direction", "target", "limit", "priority"}
_CONSTRAINT_KEYS = {"name", "comparator", "threshold"}


def objectives_from_config(entries) -> tuple[ObjectiveSpec, ...]:
    if not isinstance(entries, list) or not entries:
        raise ConfigError("objectives must be a non-empty array")
    specs = []
    for i, entry in enumerate(entries):
        where = f"objectives[{i}]"
        if not isinstance(entry, Mapping):
            raise ConfigError(f"{where} must be an object")
        unknown = set(entry) - _OBJECTIVE_KEYS
        if unknown:
            raise ConfigError(f"unknown key(s) {sorted(unknown)} in {where}")
        try:
            specs.append(
                ObjectiveSpec(
                    name=str(entry["name"]),
                    direction=str(entry["direction"]),
                    target=float(entry["target"]),
                    limit=float(entry["limit"]),
                    priority=float(entry.get("priority", 1.0)),
                )
            )
        except KeyError as exc:
            raise ConfigError(f"missing key {exc.args[0]!r} in {where}") from None
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{where}: {exc}") from None
        except ValidationError as exc:
            raise ConfigError(f"{where}: {exc}") from None
    try:
        validate_specs(specs)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from None
    return tuple(specs)


def constraints_from_config(entries) -> tuple[ConstraintSpec, ...]:
    if entries is None:
        return ()
    if not isinstance(entries, list):
        raise ConfigError("constraints must be an array")
    specs = []
    for i, entry in enumerate(entries):
        where = f"constraints[{i}]"
        if not isinstance(entry, Mapping):
            raise ConfigError(f"{where} must be an object")
        unknown = set(entry) - _CONSTRAINT_KEYS
        if unknown:
            raise ConfigError(f"unknown key(s) {sorted(unknown)} in {where}")
        try:
            specs.append(
                ConstraintSpec(
                    name=str(entry["name"]),
                    comparator=str(entry["comparator"]),
                    threshold=float(entry["threshold"]),
                )
            )
        except KeyError as exc:
            raise ConfigError(f"missing key {exc.args[0]!r} in {where}") from None
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{where}: {exc}") from None
        except ValidationError as exc:
            raise ConfigError(f"{where}: {exc}") from None
    return tuple(specs)
