"""Integer gradings under which every resolvent in this package is homogeneous."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .poly import MultiPoly

# Elliptic grading doubled so that octic roots get an integer weight.
CURVE_WEIGHTS = {"a": 8, "b": 12, "z": 4, "w": 6, "d": 24, "Delta": 24}


@dataclass(frozen=True)
class WeightSystem:
    weights: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        bad = {v: k for v, k in self.weights.items() if not (isinstance(k, int) and k > 0)}
        if bad:
            raise ValueError(f"weights must be positive integers: {bad}")
        object.__setattr__(self, "weights", MappingProxyType(dict(self.weights)))

    @classmethod
    def octic(cls, **extra: int) -> "WeightSystem":
        """Curve parameters plus octic roots ``x1..x8`` of weight 3."""
        return cls({**CURVE_WEIGHTS, **{f"x{i}": 3 for i in range(1, 9)}, **extra})

    @classmethod
    def sextic(cls, **extra: int) -> "WeightSystem":
        """Curve parameters plus sextic roots ``x1..x6`` of weight 4."""
        return cls({**CURVE_WEIGHTS, **{f"x{i}": 4 for i in range(1, 7)}, **extra})

    def extend(self, **extra: int) -> "WeightSystem":
        return WeightSystem({**self.weights, **extra})

    def __getitem__(self, var: str) -> int:
        return self.weights[var]

    def term_weight(self, vars, e) -> int:
        return sum(self.weights[v] * k for v, k in zip(vars, e))


def weighted_components(p: MultiPoly, ws: WeightSystem) -> list:
    """Split ``p`` into weighted-homogeneous parts, sorted by weight."""
    missing = [v for v in p.vars if v not in ws.weights]
    if missing:
        raise KeyError(f"no weight for variables {missing}")
    parts: dict = {}
    for e, c in p.terms.items():
        parts.setdefault(ws.term_weight(p.vars, e), {})[e] = c
    return [(w, MultiPoly(t, p.vars)) for w, t in sorted(parts.items())]


def homogeneous_weight(p: MultiPoly, ws: WeightSystem):
    """The single weight of ``p``, or None when ``p`` is zero or mixed."""
    comps = weighted_components(p, ws)
    return comps[0][0] if len(comps) == 1 else None
