"""Distortion envelopes and radii of starlikeness, convexity, close-to-convexity.

Both growth envelopes depend on the single constant c = (A - B)/mu(2):

    r - c r^2 <= |f(z)| <= r + c r^2          on |z| = r,
    1 - 2c r  <= |f'(z)| <= 1 + 2c r,

with the lower values floored at 0 (a flag records when the floor bit).
The single-term extremal with index 2 attains the |f| bounds at z = +r and
z = -r respectively.

Radii are infima over the coefficient index k of

    starlike:         [ mu(k)/(A-B) * (1-psi)/(k-psi)     ]^(1/(k-1))
    convex:           [ mu(k)/(A-B) * (1-psi)/(k(k-psi))  ]^(1/(k-1))
    close-to-convex:  [ mu(k)/(A-B) * (1-psi)/k           ]^(1/(k-1))

clamped to 1 (functions live on the unit disk); the unclamped infimum is
reported alongside. The (k-1)-th root follows from the per-index inequality
(k-psi)/(1-psi) * b_k r^(k-1) <= mu(k) b_k/(A-B); the convex and
close-to-convex variants come from the analogous obligations on
|z f''/f'| and |f' - 1| and are cross-validated by the sampling oracle in
the verify module rather than trusted blind.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classcheck import coefficient_bound, mu_profile
from .janowski import QClassSpec

__all__ = [
    "DistortionEnvelope",
    "RadiusResult",
    "distortion_f",
    "distortion_fprime",
    "radius_starlike",
    "radius_convex",
    "radius_close_to_convex",
    "RADIUS_KINDS",
]

DEFAULT_K_MAX = 64
RADIUS_KINDS = ("starlike", "convex", "close-to-convex")


@dataclass(frozen=True)
class DistortionEnvelope:
    """Two-sided bound at radius r; order is "f" or "fprime". clamped marks a floored lower value."""

    r: float
    lower: float
    upper: float
    order: str
    clamped: bool = False


def _check_radius(r: float) -> float:
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise ValueError(f"radius must satisfy 0 <= r < 1, got {r}")
    return r


def distortion_f(r: float, spec: QClassSpec) -> DistortionEnvelope:
    """Envelope r -+ c r^2 for |f| with c = (A-B)/mu(2)."""
    r = _check_radius(r)
    c = coefficient_bound(2, spec)
    raw = r - c * r * r
    return DistortionEnvelope(
        r=r, lower=max(0.0, raw), upper=r + c * r * r, order="f", clamped=raw < 0.0
    )


def distortion_fprime(r: float, spec: QClassSpec) -> DistortionEnvelope:
    """Envelope 1 -+ 2 c r for |f'|; the factor 2 comes from sum k b_k <= 2(A-B)/mu(2)."""
    r = _check_radius(r)
    c = coefficient_bound(2, spec)
    raw = 1.0 - 2.0 * c * r
    return DistortionEnvelope(
        r=r, lower=max(0.0, raw), upper=1.0 + 2.0 * c * r, order="fprime", clamped=raw < 0.0
    )


@dataclass(frozen=True)
class RadiusResult:
    """A computed radius with its per-index candidates.

    radius is clamped to 1; unclamped_inf is the bare infimum and
    minimizing_k its argmin. candidates[j] is the value for index k = j+2.
    converged is False when the candidates were still decreasing at k_max,
    in which case the infimum may not have stabilized.
    """

    kind: str
    psi: float
    radius: float
    minimizing_k: int
    candidates: np.ndarray
    unclamped_inf: float
    converged: bool


def _radius(kind: str, psi: float, spec: QClassSpec, k_max: int) -> RadiusResult:
    psi = float(psi)
    if not 0.0 <= psi < 1.0:
        raise ValueError(f"order psi must satisfy 0 <= psi < 1, got {psi}")
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    ks = np.arange(2, k_max + 1, dtype=float)
    if kind == "starlike":
        denom = ks - psi
    elif kind == "convex":
        denom = ks * (ks - psi)
    elif kind == "close-to-convex":
        denom = ks
    else:
        raise ValueError(f"unknown radius kind {kind!r}")
    base = mu_profile(spec, k_max) / (spec.A - spec.B) * (1.0 - psi) / denom
    candidates = base ** (1.0 / (ks - 1.0))
    candidates.setflags(write=False)
    j = int(np.argmin(candidates))
    inf = float(candidates[j])
    converged = k_max < 3 or candidates[-1] >= candidates[-2]
    return RadiusResult(
        kind=kind,
        psi=psi,
        radius=min(1.0, inf),
        minimizing_k=j + 2,
        candidates=candidates,
        unclamped_inf=inf,
        converged=converged,
    )


def radius_starlike(psi: float, spec: QClassSpec, k_max: int = DEFAULT_K_MAX) -> RadiusResult:
    """Radius inside which every member satisfies |z f'/f - 1| <= 1 - psi."""
    return _radius("starlike", psi, spec, k_max)


def radius_convex(psi: float, spec: QClassSpec, k_max: int = DEFAULT_K_MAX) -> RadiusResult:
    """Radius inside which every member satisfies |z f''/f'| <= 1 - psi."""
    return _radius("convex", psi, spec, k_max)


def radius_close_to_convex(psi: float, spec: QClassSpec, k_max: int = DEFAULT_K_MAX) -> RadiusResult:
    """Radius inside which every member satisfies |f' - 1| <= 1 - psi."""
    return _radius("close-to-convex", psi, spec, k_max)
