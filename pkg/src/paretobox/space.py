"""Gridded design spaces: parameter grids, enumeration, and unit-cube snapping.

A design space is an ordered list of gridded parameters (the variables the
designer controls) plus one operating grid (the variable the environment
controls, over which robustness is taken). Design points only ever take
values from the per-parameter grids, so continuous sampler output must be
snapped onto the grid before evaluation.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import ConfigError, ValidationError

PARAMETER_KINDS = ("gridded-float", "even-integer")


def _uniform_values(lo: float, hi: float, count: int) -> tuple[float, ...]:
    # linspace guarantees exact endpoints, which membership checks rely on
    return tuple(float(v) for v in np.linspace(lo, hi, count))


def _is_even_integer(value: float) -> bool:
    return abs(value - round(value)) < 1e-9 and round(value) % 2 == 0


@dataclass(frozen=True)
class ParameterSpec:
    """One gridded design variable: `count` uniformly spaced values in [min, max]."""

    name: str
    kind: str
    min: float
    max: float
    count: int
    values: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.name:
            raise ValidationError("parameter name must be non-empty")
        if self.kind not in PARAMETER_KINDS:
            raise ValidationError(
                f"parameter {self.name!r}: unknown kind {self.kind!r} "
                f"(expected one of {PARAMETER_KINDS})"
            )
        if not self.min < self.max:
            raise ValidationError(
                f"parameter {self.name!r}: min ({self.min}) must be < max ({self.max})"
            )
        if self.count < 2:
            raise ValidationError(
                f"parameter {self.name!r}: count must be >= 2, got {self.count}"
            )
        values = _uniform_values(self.min, self.max, self.count)
        if self.kind == "even-integer":
            for v in values:
                if not _is_even_integer(v):
                    raise ValidationError(
                        f"parameter {self.name!r}: even-integer grid produced "
                        f"non-even value {v} (while spacing [{self.min}, {self.max}] "
                        f"over {self.count} points)"
                    )
            values = tuple(float(round(v)) for v in values)
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class OperatingGrid:
    """The operating-parameter grid robustness is taken over."""

    name: str
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.name:
            raise ValidationError("operating grid name must be non-empty")
        if len(self.values) == 0:
            raise ValidationError("operating grid must be non-empty")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValidationError("operating grid values must be strictly increasing")


@dataclass(frozen=True)
class DesignPoint:
    """One assignment of all design variables, aligned with the space's parameters."""

    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))


@dataclass(frozen=True)
class DesignSpace:
    """Ordered design parameters plus the operating grid."""

    parameters: tuple[ParameterSpec, ...]
    operating: OperatingGrid

    def __post_init__(self):
        object.__setattr__(self, "parameters", tuple(self.parameters))
        if len(self.parameters) < 1:
            raise ValidationError("design space needs at least one parameter")
        names = [p.name for p in self.parameters]
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate parameter names in {names}")
        # value -> grid index per parameter, for exact membership and unit coords
        index_maps = tuple({v: i for i, v in enumerate(p.values)} for p in self.parameters)
        object.__setattr__(self, "_index_maps", index_maps)

    @property
    def dimension(self) -> int:
        return len(self.parameters)

    @property
    def grid_size(self) -> int:
        return math.prod(p.count for p in self.parameters)

    def validate_point(self, point: DesignPoint) -> None:
        """Raise unless every coordinate is an exact member of its parameter grid."""
        if len(point.values) != self.dimension:
            raise ValidationError(
                f"design point has {len(point.values)} values, space has "
                f"{self.dimension} parameters"
            )
        for value, param, index in zip(point.values, self.parameters, self._index_maps):
            if value not in index:
                raise ValidationError(
                    f"value {value} is not on the grid of parameter {param.name!r}"
                )

    def named(self, point: DesignPoint) -> dict[str, float]:
        """Map a point's values to a name -> value dict."""
        return {p.name: v for p, v in zip(self.parameters, point.values)}

    def point_from_named(self, named: Mapping[str, float]) -> DesignPoint:
        try:
            point = DesignPoint(tuple(float(named[p.name]) for p in self.parameters))
        except KeyError as exc:
            raise ValidationError(f"missing design variable {exc.args[0]!r}") from None
        self.validate_point(point)
        return point

    def unit_coordinates(self, point: DesignPoint) -> np.ndarray:
        """Inverse of :func:`snap` on grid members: grid index / (count - 1)."""
        self.validate_point(point)
        coords = [
            index[v] / (p.count - 1)
            for v, p, index in zip(point.values, self.parameters, self._index_maps)
        ]
        return np.asarray(coords, dtype=float)


def enumerate_grid(space: DesignSpace) -> list[DesignPoint]:
    """Full Cartesian product, lexicographic in parameter declaration order."""
    value_lists = [p.values for p in space.parameters]
    return [DesignPoint(combo) for combo in itertools.product(*value_lists)]


def iter_grid(space: DesignSpace) -> Iterator[DesignPoint]:
    """Lazy variant of :func:`enumerate_grid`, same ordering."""
    value_lists = [p.values for p in space.parameters]
    for combo in itertools.product(*value_lists):
        yield DesignPoint(combo)


def snap(space: DesignSpace, unit_vector: Sequence[float]) -> DesignPoint:
    """Map a vector in [0,1]^a onto the nearest grid point, ties rounding up.

    Coordinate i is interpreted through the affine map min + t * (max - min);
    entries are clamped to [0, 1] first. Rounding half-up makes midpoint ties
    deterministic (toward the larger grid value).
    """
    if len(unit_vector) != space.dimension:
        raise ValidationError(
            f"unit vector has {len(unit_vector)} entries, space has "
            f"{space.dimension} parameters"
        )
    values = []
    for t, param in zip(unit_vector, space.parameters):
        t = min(1.0, max(0.0, float(t)))
        idx = int(math.floor(t * (param.count - 1) + 0.5))
        idx = min(idx, param.count - 1)
        values.append(param.values[idx])
    return DesignPoint(tuple(values))


# ---------------------------------------------------------------------------
# Config parsing

_TOP_LEVEL_KEYS = {"parameters", "operating", "objectives", "constraints", "engine"}
_PARAMETER_KEYS = {"name", "kind", "min", "max", "count"}
_OPERATING_KEYS_VALUES = {"name", "values"}
_OPERATING_KEYS_RANGE = {"name", "min", "max", "count"}


def _reject_unknown(obj: Mapping, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) {sorted(unknown)} in {where}")


def _require(obj: Mapping, key: str, where: str):
    if key not in obj:
        raise ConfigError(f"missing key {key!r} in {where}")
    return obj[key]


def parse_config_text(text: str) -> dict:
    """Parse and schema-check the top level of a JSON config document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError("config root must be an object")
    _reject_unknown(doc, _TOP_LEVEL_KEYS, "config root")
    return doc


def _parameter_from_config(entry: Mapping, position: int) -> ParameterSpec:
    where = f"parameters[{position}]"
    if not isinstance(entry, Mapping):
        raise ConfigError(f"{where} must be an object")
    _reject_unknown(entry, _PARAMETER_KEYS, where)
    try:
        return ParameterSpec(
            name=str(_require(entry, "name", where)),
            kind=str(_require(entry, "kind", where)),
            min=float(_require(entry, "min", where)),
            max=float(_require(entry, "max", where)),
            count=int(_require(entry, "count", where)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from None
    except ValidationError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _operating_from_config(entry) -> OperatingGrid:
    where = "operating"
    if not isinstance(entry, Mapping):
        raise ConfigError(f"{where} must be an object")
    try:
        if "values" in entry:
            _reject_unknown(entry, _OPERATING_KEYS_VALUES, where)
            values = _require(entry, "values", where)
            if not isinstance(values, (list, tuple)):
                raise ConfigError(f"{where}.values must be an array")
            return OperatingGrid(str(_require(entry, "name", where)),
                                 tuple(float(v) for v in values))
        _reject_unknown(entry, _OPERATING_KEYS_RANGE, where)
        lo = float(_require(entry, "min", where))
        hi = float(_require(entry, "max", where))
        count = int(_require(entry, "count", where))
        if count < 1:
            raise ConfigError(f"{where}: count must be >= 1")
        if count == 1:
            if lo != hi:
                raise ConfigError(f"{where}: count 1 requires min == max")
            values = (lo,)
        else:
            values = _uniform_values(lo, hi, count)
        return OperatingGrid(str(_require(entry, "name", where)), values)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from None
    except ValidationError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def parse_space(config_text: str) -> DesignSpace:
    """Build a validated DesignSpace from config text.

    The text may carry `objectives`, `constraints`, and `engine` sections;
    they are validated for key structure elsewhere and ignored here.
    """
    doc = parse_config_text(config_text)
    raw_params = _require(doc, "parameters", "config root")
    if not isinstance(raw_params, list) or not raw_params:
        raise ConfigError("parameters must be a non-empty array")
    parameters = tuple(_parameter_from_config(e, i) for i, e in enumerate(raw_params))
    operating = _operating_from_config(_require(doc, "operating", "config root"))
    try:
        return DesignSpace(parameters=parameters, operating=operating)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from None
