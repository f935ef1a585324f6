"""Oriented gap functionals for the Clarkson-type norm inequalities.

Every evaluator returns a GapReport whose gap (rhs - lhs) is oriented so
that gap >= 0 means "the inequality holds in its stated regime".  For the
three classical two-sided inequalities the 1 < p < 2 reverse regime is
absorbed by exchanging lhs and rhs inside the evaluator, so callers see a
single uniform verdict rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from .core import (
    NonnegVector,
    RealVector,
    Weights,
    combine,
    conjugate_exponent,
    p_norm,
)
from .errors import (
    DominanceViolation,
    ExponentOutOfRange,
    LengthMismatch,
    RegimeViolation,
)


class InequalityId(enum.Enum):
    C11 = "c-1.1"
    C12 = "c-1.2"
    C13_LEFT = "c-1.3-left"
    C13_RIGHT = "c-1.3-right"
    MAIN_17 = "main-1.7"
    PROP_14 = "prop-1.4"
    COR_16 = "cor-1.6"
    SWAP_28 = "swap-2.8"
    SUMPOW_212 = "sumpow-2.12"
    REARR_GAIN_217 = "rearr-2.17"

    @classmethod
    def from_cli(cls, name: str) -> "InequalityId":
        for member in cls:
            if member.value == name:
                return member
        raise ValueError(f"unknown inequality id {name!r}")


class Verdict(enum.Enum):
    HOLDS = "holds"
    BORDERLINE = "borderline"
    VIOLATED = "violated"


@dataclass(frozen=True)
class TolerancePolicy:
    rel_tol: float = 1e-9
    borderline_band: float = 1e-7

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= self.borderline_band):
            raise ValueError("need 0 < rel_tol <= borderline_band")


DEFAULT_POLICY = TolerancePolicy()


def classify(gap: float, scale: float, policy: TolerancePolicy = DEFAULT_POLICY) -> Verdict:
    """Tri-state verdict: clear hold, clear violation, or borderline.

    Equality cases (e.g. y = 0) sit exactly at gap 0 and must not be
    reported as violations under roundoff, hence the borderline band.
    """
    if gap >= policy.rel_tol * scale:
        return Verdict.HOLDS
    if gap <= -policy.borderline_band * scale:
        return Verdict.VIOLATED
    return Verdict.BORDERLINE


@dataclass(frozen=True)
class GapReport:
    """One inequality evaluation: sides, oriented gap, and verdict."""

    id: InequalityId
    p: float
    q: float
    lhs: float
    rhs: float
    gap: float
    scale: float
    verdict: Verdict

    @property
    def normalized_gap(self) -> float:
        return self.gap / self.scale


def _report(
    id: InequalityId,
    p: float,
    q: float,
    lhs: float,
    rhs: float,
    policy: TolerancePolicy,
) -> GapReport:
    gap = rhs - lhs
    scale = max(abs(lhs), abs(rhs), 1.0)
    return GapReport(id, p, q, lhs, rhs, gap, scale, classify(gap, scale, policy))


def _pair_norms(
    x: RealVector, y: RealVector, p: float, w: Optional[Weights]
) -> Tuple[float, float, float, float]:
    """(||x||, ||y||, ||x+y||, ||x-y||) at exponent p."""
    return (
        p_norm(x, p, w),
        p_norm(y, p, w),
        p_norm(combine(x, y, "plus"), p, w),
        p_norm(combine(x, y, "minus"), p, w),
    )


def eval_clarkson_1_1(
    x: RealVector,
    y: RealVector,
    p: float,
    w: Optional[Weights] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> GapReport:
    """2(||x||_p^p + ||y||_p^p)^(q-1) <= ||x+y||_p^q + ||x-y||_p^q.

    q is the conjugate of p; the inequality reverses for 1 < p < 2.
    """
    q = conjugate_exponent(p)
    nx, ny, ns, nd = _pair_norms(x, y, p, w)
    lhs = 2.0 * (nx**p + ny**p) ** (q - 1.0)
    rhs = ns**q + nd**q
    if p < 2.0:
        lhs, rhs = rhs, lhs
    return _report(InequalityId.C11, p, q, lhs, rhs, policy)


def eval_clarkson_1_2(
    x: RealVector,
    y: RealVector,
    p: float,
    w: Optional[Weights] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> GapReport:
    """||x+y||_p^p + ||x-y||_p^p <= 2(||x||_p^q + ||y||_p^q)^(p-1)."""
    q = conjugate_exponent(p)
    nx, ny, ns, nd = _pair_norms(x, y, p, w)
    lhs = ns**p + nd**p
    rhs = 2.0 * (nx**q + ny**q) ** (p - 1.0)
    if p < 2.0:
        lhs, rhs = rhs, lhs
    return _report(InequalityId.C12, p, q, lhs, rhs, policy)


def eval_clarkson_1_3(
    x: RealVector,
    y: RealVector,
    p: float,
    w: Optional[Weights] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Tuple[GapReport, GapReport]:
    """Two-sided parallelogram-type bounds on ||x+y||_p^p + ||x-y||_p^p."""
    if p <= 1.0:
        raise ExponentOutOfRange(f"need p > 1, got {p}")
    nx, ny, ns, nd = _pair_norms(x, y, p, w)
    base = nx**p + ny**p
    mid = ns**p + nd**p
    left_lhs, left_rhs = 2.0 * base, mid
    right_lhs, right_rhs = mid, 2.0 ** (p - 1.0) * base
    if p < 2.0:
        left_lhs, left_rhs = left_rhs, left_lhs
        right_lhs, right_rhs = right_rhs, right_lhs
    left = _report(InequalityId.C13_LEFT, p, p, left_lhs, left_rhs, policy)
    right = _report(InequalityId.C13_RIGHT, p, p, right_lhs, right_rhs, policy)
    return left, right


def _check_main_regime(p: float, q: float) -> None:
    if not (2.0 <= p <= q):
        raise RegimeViolation(f"need 2 <= p <= q, got ({p}, {q})")


def eval_main_1_7(
    x: NonnegVector,
    y: NonnegVector,
    p: float,
    q: float,
    w: Optional[Weights] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> GapReport:
    """2(||x||_p^q + ||y||_p^q) <= ||x+y||_p^q + ||x-y||_p^q on nonneg pairs."""
    return _main_1_7_formula(x, y, p, q, w, policy)


def _main_1_7_formula(
    x: RealVector,
    y: RealVector,
    p: float,
    q: float,
    w: Optional[Weights],
    policy: TolerancePolicy,
) -> GapReport:
    """Formula of eval_main_1_7 without the nonnegativity requirement.

    Only guaranteed to hold for nonnegative inputs; the signed case is
    exploration territory.
    """
    _check_main_regime(p, q)
    nx, ny, ns, nd = _pair_norms(x, y, p, w)
    lhs = 2.0 * (nx**q + ny**q)
    rhs = ns**q + nd**q
    return _report(InequalityId.MAIN_17, p, q, lhs, rhs, policy)


def _check_dominance(u: NonnegVector, v: NonnegVector) -> None:
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")
    for i, (a, b) in enumerate(zip(u.entries, v.entries)):
        if a < b:
            raise DominanceViolation(i)


def eval_prop_1_4(
    u: NonnegVector,
    v: NonnegVector,
    p: float,
    q: float,
    w: Optional[Weights] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> GapReport:
    """Improved bound 2(||u||^q + 2^(q-2) ||v||^q) for dominated pairs u >= v."""
    _check_main_regime(p, q)
    _check_dominance(u, v)
    nu, nv, ns, nd = _pair_norms(u, v, p, w)
    lhs = 2.0 * (nu**q + 2.0 ** (q - 2.0) * nv**q)
    rhs = ns**q + nd**q
    return _report(InequalityId.PROP_14, p, q, lhs, rhs, policy)


def eval_corollary_1_6(
    x: float,
    y: float,
    q: float,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> GapReport:
    """Scalar case: 2(x^q + 2^(q-2) y^q) <= (x+y)^q + (x-y)^q for x >= y >= 0."""
    if q < 2.0:
        raise RegimeViolation(f"need q >= 2, got {q}")
    if y < 0.0 or x < y:
        raise DominanceViolation(0, f"need x >= y >= 0, got x={x}, y={y}")
    lhs = 2.0 * (x**q + 2.0 ** (q - 2.0) * y**q)
    rhs = (x + y) ** q + (x - y) ** q
    return _report(InequalityId.COR_16, q, q, lhs, rhs, policy)


def halving_substitution(x: RealVector, y: RealVector) -> Tuple[RealVector, RealVector]:
    """(x, y) -> (x+y, x-y); applying it twice gives (2x, 2y)."""
    return combine(x, y, "plus"), combine(x, y, "minus")


def evaluate(
    id: InequalityId,
    x: RealVector,
    y: RealVector,
    p: float,
    q: Optional[float] = None,
    w: Optional[Weights] = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
    strict: bool = True,
) -> GapReport:
    """Dispatch a pair (x, y) to the evaluator named by id.

    For the conjugate-pair inequalities q is derived from p and any passed
    q is ignored.  The rearrangement ids use r = q.  SWAP_28 has no
    vector-pair form and is not dispatchable here.  strict=False lets
    MAIN_17 run on signed inputs (exploration only).
    """
    from . import rearrange  # local import to avoid a cycle

    if id is InequalityId.C11:
        return eval_clarkson_1_1(x, y, p, w, policy)
    if id is InequalityId.C12:
        return eval_clarkson_1_2(x, y, p, w, policy)
    if id is InequalityId.C13_LEFT:
        return eval_clarkson_1_3(x, y, p, w, policy)[0]
    if id is InequalityId.C13_RIGHT:
        return eval_clarkson_1_3(x, y, p, w, policy)[1]
    if q is None:
        raise RegimeViolation(f"{id.value} requires an explicit q")
    if not strict and id is InequalityId.MAIN_17:
        return _main_1_7_formula(x, y, p, q, w, policy)
    xn = x if isinstance(x, NonnegVector) else NonnegVector(x.entries)
    yn = y if isinstance(y, NonnegVector) else NonnegVector(y.entries)
    if id is InequalityId.MAIN_17:
        return eval_main_1_7(xn, yn, p, q, w, policy)
    if id is InequalityId.PROP_14:
        return eval_prop_1_4(xn, yn, p, q, w, policy)
    if id is InequalityId.COR_16:
        if len(xn) != 1 or len(yn) != 1:
            raise LengthMismatch("cor-1.6 takes scalars (1-entry vectors)")
        return eval_corollary_1_6(xn.entries[0], yn.entries[0], q, policy)
    if id is InequalityId.SUMPOW_212:
        return rearrange.sum_power_rearrangement_gap(xn, yn, q, policy)
    if id is InequalityId.REARR_GAIN_217:
        return rearrange.rearrangement_norm_gain(xn, yn, p, q, policy)
    raise ValueError(f"{id.value} cannot be evaluated on a vector pair")
