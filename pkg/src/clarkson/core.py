"""Vector and exponent primitives: validated finite sequences, weighted
p-norms, conjugate exponents, and componentwise combination.

All values are immutable after validation and safe to share between
workers.  Sums of p-th powers use exact compensated accumulation
(``math.fsum``) because downstream gap functionals subtract nearly equal
quantities.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional, Sequence

from .errors import (
    EmptyVector,
    ExponentOutOfRange,
    LengthMismatch,
    NegativeEntry,
    NonFiniteEntry,
    TooLarge,
)

# Desk-scale guard: reject accidental huge inputs.
MAX_LEN = 1 << 20


def _check_entries(entries: Sequence[float]) -> None:
    if len(entries) == 0:
        raise EmptyVector("vector must have at least one entry")
    if len(entries) > MAX_LEN:
        raise TooLarge(f"vector length {len(entries)} exceeds maximum {MAX_LEN}")
    for i, x in enumerate(entries):
        if not math.isfinite(x):
            raise NonFiniteEntry(i)


@dataclass(frozen=True)
class RealVector:
    """Finite real sequence of length >= 1; entries must be finite."""

    entries: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(float(x) for x in self.entries))
        _check_entries(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def scaled(self, alpha: float) -> "RealVector":
        return type(self)(tuple(alpha * x for x in self.entries))


@dataclass(frozen=True)
class NonnegVector(RealVector):
    """Refinement of RealVector with every entry >= 0."""

    def __post_init__(self):
        super().__post_init__()
        for i, x in enumerate(self.entries):
            if x < 0.0:
                raise NegativeEntry(i)


@dataclass(frozen=True)
class Weights:
    """Positive masses standing in for a discrete measure.

    Weighted vectors model simple functions; unit weights recover the
    plain sequence-space norm.
    """

    masses: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "masses", tuple(float(x) for x in self.masses))
        _check_entries(self.masses)
        for i, m in enumerate(self.masses):
            if m <= 0.0:
                raise NegativeEntry(i)

    def __len__(self) -> int:
        return len(self.masses)


class Regime(enum.Enum):
    MAIN = "main"            # 2 <= p <= q
    CONJUGATE = "conjugate"  # q = p/(p-1)
    REVERSE = "reverse"      # 1 < p <= 2
    SCALAR = "scalar"        # only q matters


@dataclass(frozen=True)
class ExponentPair:
    """Exponent pair (p, q) tagged with the regime it is meant for."""

    p: float
    q: float
    regime: Regime

    def __post_init__(self):
        if self.p <= 1.0:
            raise ExponentOutOfRange(f"p must exceed 1, got {self.p}")
        if self.regime is Regime.MAIN and not (2.0 <= self.p <= self.q):
            raise ExponentOutOfRange(f"MAIN regime needs 2 <= p <= q, got ({self.p}, {self.q})")
        if self.regime is Regime.CONJUGATE and abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise ExponentOutOfRange(f"({self.p}, {self.q}) is not a conjugate pair")
        if self.regime is Regime.REVERSE and not (1.0 < self.p <= 2.0):
            raise ExponentOutOfRange(f"REVERSE regime needs 1 < p <= 2, got {self.p}")

    @classmethod
    def main(cls, p: float, q: float) -> "ExponentPair":
        return cls(p, q, Regime.MAIN)

    @classmethod
    def conjugate(cls, p: float) -> "ExponentPair":
        return cls(p, conjugate_exponent(p), Regime.CONJUGATE)

    @classmethod
    def reverse(cls, p: float) -> "ExponentPair":
        return cls(p, conjugate_exponent(p), Regime.REVERSE)

    @classmethod
    def scalar(cls, q: float) -> "ExponentPair":
        return cls(q, q, Regime.SCALAR)


def validate_vector(raw: Iterable[float], require_nonneg: bool = False) -> RealVector:
    """Validate a raw sequence into a RealVector (or NonnegVector)."""
    entries = tuple(float(x) for x in raw)
    if require_nonneg:
        return NonnegVector(entries)
    return RealVector(entries)


def conjugate_exponent(p: float) -> float:
    """q = p/(p-1), so that 1/p + 1/q = 1."""
    if p <= 1.0:
        raise ExponentOutOfRange(f"conjugate exponent needs p > 1, got {p}")
    return p / (p - 1.0)


def sum_abs_powers(v: RealVector, p: float, weights: Optional[Weights] = None) -> float:
    """Compensated sum of w_i * |v_i|^p (unit weights when absent)."""
    if p < 1.0:
        raise ExponentOutOfRange(f"p-norm needs p >= 1, got {p}")
    if weights is not None and len(weights) != len(v):
        raise LengthMismatch(
            f"weights length {len(weights)} != vector length {len(v)}"
        )
    entries = v.entries
    # Fast paths avoid pow() for the common small integer exponents;
    # |0|^p is exactly 0 for every p > 0 on all paths.
    if p == 2.0:
        terms = (x * x for x in entries)
    elif p == 3.0:
        terms = (abs(x) * x * x for x in entries)
    elif p == 4.0:
        terms = ((x * x) * (x * x) for x in entries)
    elif p == 1.0:
        terms = (abs(x) for x in entries)
    else:
        terms = (abs(x) ** p for x in entries)
    if weights is None:
        return math.fsum(terms)
    return math.fsum(w * t for w, t in zip(weights.masses, terms))


def p_norm(v: RealVector, p: float, weights: Optional[Weights] = None) -> float:
    """Weighted p-norm (sum_i w_i |v_i|^p)^(1/p); unit weights when absent."""
    s = sum_abs_powers(v, p, weights)
    if s == 0.0:
        return 0.0
    if p == 1.0:
        return s
    if p == 2.0:
        return math.sqrt(s)
    return s ** (1.0 / p)


def combine(x: RealVector, y: RealVector, sign: Literal["plus", "minus"]) -> RealVector:
    """Componentwise x + y or x - y."""
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)} differ")
    if sign == "plus":
        return RealVector(tuple(a + b for a, b in zip(x.entries, y.entries)))
    if sign == "minus":
        return RealVector(tuple(a - b for a, b in zip(x.entries, y.entries)))
    raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
