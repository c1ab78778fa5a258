"""Record of one resolvent computation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..polyring import MultiPoly, format_poly

EXACT_MATCH = "exact-match"
ORACLE_CONFIRMED = "oracle-confirmed"
FAILED = "failed"
UNVERIFIED = "unverified"


@dataclass
class ResolventReport:
    name: str
    groups: dict
    invariant: MultiPoly
    conjugates: list
    resolvent: MultiPoly
    var: str
    engine: str
    status: str = UNVERIFIED
    notes: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        deg = self.resolvent.degree(self.var)
        if deg != len(self.conjugates):
            raise ValueError(f"resolvent degree {deg} != {len(self.conjugates)} conjugates")
        lead = self.resolvent.coeffs_in(self.var)[deg]
        if lead != MultiPoly.const(1):
            raise ValueError("resolvent is not monic")

    def to_json(self) -> dict:
        extra = {k: format_poly(v) if isinstance(v, MultiPoly) else v for k, v in self.extra.items()}
        return {
            "name": self.name,
            "groups": self.groups,
            "invariant": format_poly(self.invariant),
            "conjugates": [format_poly(c) for c in self.conjugates],
            "var": self.var,
            "resolvent": format_poly(self.resolvent),
            "engine": self.engine,
            "status": self.status,
            "notes": list(self.notes),
            "extra": extra,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)
