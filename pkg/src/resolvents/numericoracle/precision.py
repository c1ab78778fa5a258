"""Working precision for every inexact computation in the package."""

from __future__ import annotations

import os
from dataclasses import dataclass

import mpmath

DEFAULT_PRECISION_BITS = 256
ENV_VAR = "RESOLVENT_PRECISION_BITS"


def default_precision() -> int:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return DEFAULT_PRECISION_BITS
    bits = int(raw)
    if bits < 64:
        raise ValueError(f"{ENV_VAR} must be at least 64, got {bits}")
    return bits


@dataclass(frozen=True)
class ComplexAP:
    """A complex value computed at ``precision`` bits with an estimated absolute error."""

    value: mpmath.mpc
    error: mpmath.mpf
    precision: int

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def close_to(self, other, tolerance) -> bool:
        other = other.value if isinstance(other, ComplexAP) else other
        return abs(self.value - other) <= tolerance

    def __str__(self) -> str:
        return mpmath.nstr(self.value, 25)
