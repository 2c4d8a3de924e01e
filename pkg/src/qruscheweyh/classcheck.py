"""Coefficient criterion, sharp bounds, extremal functions, extreme points.

The weight

    mu(k) = (1 + alpha (1 + |B|)) ([m+1]_(k-1) - [l+1]_(k-1))
            + | B [m+1]_(k-1) - A [l+1]_(k-1) |

is strictly positive for m > l, and the weighted l1 criterion
sum_{k>=2} mu(k) |a_k| <= A - B is sufficient for membership of a general
normalized function and exact (if and only if) for the negative-coefficient
subclass. Every boolean result carries its slack (A - B) - sum so tests can
assert tightness instead of bare membership.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import NotAMemberError
from .janowski import QClassSpec
from .qcore import q_pochhammer_sequence
from .series import NegativeCoeffSeries, TruncatedSeries

__all__ = [
    "MuProfile",
    "MembershipResult",
    "mu",
    "mu_profile",
    "membership_sufficient",
    "membership_iff_T",
    "coefficient_bound",
    "extremal_fk",
    "decompose",
    "recompose",
]

SLACK_TOL = 1e-12


def mu_profile(spec: QClassSpec, k_max: int) -> np.ndarray:
    """mu(2), mu(3), ..., mu(k_max) as a float array."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    count = k_max - 1
    upper = q_pochhammer_sequence(spec.m + 1, spec.q, count)
    lower = q_pochhammer_sequence(spec.l + 1, spec.q, count)
    lead = 1.0 + spec.alpha * (1.0 + abs(spec.B))
    return lead * (upper - lower) + np.abs(spec.B * upper - spec.A * lower)


def mu(k: int, spec: QClassSpec) -> float:
    """The coefficient weight mu(k) for a single index k >= 2."""
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    return float(mu_profile(spec, int(k))[-1])


@dataclass(frozen=True)
class MuProfile:
    """Precomputed weights mu(2..k_max) for one parameter tuple; shareable read-only."""

    spec: QClassSpec
    values: np.ndarray

    @classmethod
    def compute(cls, spec: QClassSpec, k_max: int) -> "MuProfile":
        values = mu_profile(spec, k_max)
        values.setflags(write=False)
        return cls(spec=spec, values=values)

    def value(self, k: int) -> float:
        if not 2 <= k <= len(self.values) + 1:
            raise ValueError(f"k out of profile range, got {k}")
        return float(self.values[k - 2])


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of the weighted-l1 coefficient test."""

    member: bool
    slack: float
    total: float


def _weighted_total(mags: np.ndarray, spec: QClassSpec) -> float:
    if mags.size == 0:
        return 0.0
    return float(mu_profile(spec, mags.size + 1) @ mags)


def membership_sufficient(f: TruncatedSeries, spec: QClassSpec) -> MembershipResult:
    """Sufficient test for a general normalized series: sum mu(k)|a_k| <= A - B.

    Passing implies membership; failing is inconclusive for complex
    coefficients (the criterion is one-directional outside the
    negative-coefficient subclass).
    """
    total = _weighted_total(np.abs(f.coefficients[1:]), spec)
    slack = (spec.A - spec.B) - total
    return MembershipResult(member=slack >= 0.0, slack=slack, total=total)


def membership_iff_T(f: NegativeCoeffSeries, spec: QClassSpec) -> MembershipResult:
    """Exact membership test for negative-coefficient functions (same inequality)."""
    total = _weighted_total(f.magnitudes, spec)
    slack = (spec.A - spec.B) - total
    return MembershipResult(member=slack >= 0.0, slack=slack, total=total)


def coefficient_bound(k: int, spec: QClassSpec) -> float:
    """Sharp bound (A - B)/mu(k) on the k-th coefficient magnitude of a member."""
    return (spec.A - spec.B) / mu(k, spec)


def extremal_fk(k: int, spec: QClassSpec) -> NegativeCoeffSeries:
    """The extreme point f_k(z) = z - (A-B)/mu(k) z^k; f_1 is the identity z.

    For k >= 2 the single-term function attains the coefficient bound with
    equality, so its membership slack is exactly zero.
    """
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError(f"extremal index k must be an integer >= 1, got {k!r}")
    if k == 1:
        return NegativeCoeffSeries(np.zeros(0))
    mags = np.zeros(k - 1)
    mags[-1] = coefficient_bound(k, spec)
    return NegativeCoeffSeries(mags)


def decompose(f: NegativeCoeffSeries, spec: QClassSpec) -> np.ndarray:
    """Convex weights (eta_1, ..., eta_N) expressing a member over f_1, f_2, ...

    eta_k = mu(k) b_k / (A - B) for k >= 2 and eta_1 absorbs the slack.
    Rejects non-members (eta_1 would be negative). recompose is the inverse.
    """
    result = membership_iff_T(f, spec)
    if result.slack < -SLACK_TOL:
        raise NotAMemberError(
            f"cannot decompose a non-member (slack {result.slack:.3e})"
        )
    n = f.degree
    weights = np.zeros(n)
    if n > 1:
        weights[1:] = mu_profile(spec, n) * f.magnitudes / (spec.A - spec.B)
    weights[0] = max(0.0, 1.0 - weights[1:].sum())
    return weights


def recompose(weights, spec: QClassSpec) -> NegativeCoeffSeries:
    """Convex combination sum eta_k f_k of the extreme points.

    Weights must be nonnegative and sum to 1 within 1e-10. The result is
    always a member, with slack (A - B) * eta_1.
    """
    weights = np.asarray(weights, dtype=float)
    if weights.ndim != 1 or weights.size < 1:
        raise ValueError("weights must be a nonempty 1-d sequence (eta_1, ..., eta_N)")
    if weights.min() < -SLACK_TOL:
        raise ValueError(f"weights must be nonnegative, got min {weights.min():.3e}")
    if abs(weights.sum() - 1.0) > 1e-10:
        raise ValueError(f"weights must sum to 1, got {weights.sum()!r}")
    weights = np.clip(weights, 0.0, None)
    n = weights.size
    if n == 1:
        return NegativeCoeffSeries(np.zeros(0))
    bounds = (spec.A - spec.B) / mu_profile(spec, n)
    return NegativeCoeffSeries(weights[1:] * bounds)
