"""Janowski target domains and the subordination functional.

The class is parametrized by (q, m, l, alpha, A, B): a function f belongs
when p(z) = w(z) - alpha*|w(z) - 1|, with w the ratio of the order-m and
order-l q-Ruscheweyh images of f, takes its values inside the Janowski
region Omega[A, B] for every z in the unit disk. For B > -1 that region is
the open disk |w - (1-AB)/(1-B^2)| < (A-B)/(1-B^2); at B = -1 it degenerates
to the half-plane Re w > (1-A)/2.

Membership is equivalently the pointwise margin |p-1| / |A - B p| < 1,
which is the quantity all the numerical checks sample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import MarginPoleError, PoleError, SpecValidationError
from .series import TruncatedSeries, apply_ruscheweyh

__all__ = [
    "QClassSpec",
    "OmegaDomain",
    "omega_domain",
    "janowski_map",
    "p_functional",
    "subordination_margin",
]


@dataclass(frozen=True)
class QClassSpec:
    """Parameter tuple (q, m, l, alpha, A, B) defining one class instance.

    Constraints: 0 < q < 1, integer orders m > l >= 0 with m >= 1,
    alpha >= 0, and -1 <= B < A <= 1. Validation reports every violated
    constraint at once.
    """

    q: float
    m: int
    l: int
    alpha: float
    A: float
    B: float

    def __post_init__(self):
        violations = self.violations()
        if violations:
            raise SpecValidationError(violations)

    def violations(self) -> list[str]:
        out = []
        if not isinstance(self.m, (int, np.integer)):
            out.append(f"m must be an integer, got {self.m!r}")
        if not isinstance(self.l, (int, np.integer)):
            out.append(f"l must be an integer, got {self.l!r}")
        if not out:
            if self.m < 1:
                out.append(f"m must be >= 1, got {self.m}")
            if self.l < 0:
                out.append(f"l must be >= 0, got {self.l}")
            if self.m <= self.l:
                out.append(f"orders must satisfy m > l, got m={self.m}, l={self.l}")
        if not 0.0 < float(self.q) < 1.0:
            out.append(f"q must lie strictly inside (0, 1), got {self.q}")
        if not float(self.alpha) >= 0.0:
            out.append(f"alpha must be >= 0, got {self.alpha}")
        if not -1.0 <= float(self.B) < float(self.A) <= 1.0:
            out.append(f"require -1 <= B < A <= 1, got A={self.A}, B={self.B}")
        return out

    def to_json_dict(self) -> dict:
        return {
            "q": float(self.q),
            "m": int(self.m),
            "l": int(self.l),
            "alpha": float(self.alpha),
            "A": float(self.A),
            "B": float(self.B),
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "QClassSpec":
        from .exceptions import InputFormatError

        if not isinstance(payload, dict):
            raise InputFormatError("class parameters must be a JSON object")
        missing = [k for k in ("q", "m", "l", "alpha", "A", "B") if k not in payload]
        if missing:
            raise InputFormatError(f"class parameters missing keys: {', '.join(missing)}")

        def as_int(name):
            v = payload[name]
            if isinstance(v, bool) or not isinstance(v, (int, float)) or v != int(v):
                raise InputFormatError(f"{name} must be an integer, got {v!r}")
            return int(v)

        def as_float(name):
            v = payload[name]
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise InputFormatError(f"{name} must be a number, got {v!r}")
            return float(v)

        return cls(
            q=as_float("q"),
            m=as_int("m"),
            l=as_int("l"),
            alpha=as_float("alpha"),
            A=as_float("A"),
            B=as_float("B"),
        )


@dataclass(frozen=True)
class OmegaDomain:
    """Image region of the disk under (1+Az)/(1+Bz): a disk, or a half-plane at B = -1."""

    kind: str  # "disk" or "half-plane"
    center: float | None = None
    radius: float | None = None
    boundary_real_part: float | None = None

    def interior_margin(self, w) -> float:
        """Positive inside the region, zero on its boundary, negative outside."""
        w = complex(w)
        if self.kind == "disk":
            return self.radius - abs(w - self.center)
        return w.real - self.boundary_real_part


def omega_domain(spec: QClassSpec) -> OmegaDomain:
    """The Janowski region for (A, B); its real-axis endpoints are (1-A)/(1-B) and (1+A)/(1+B)."""
    A, B = float(spec.A), float(spec.B)
    if B == -1.0:
        return OmegaDomain(kind="half-plane", boundary_real_part=(1.0 - A) / 2.0)
    center = (1.0 - A * B) / (1.0 - B * B)
    radius = (A - B) / (1.0 - B * B)
    return OmegaDomain(kind="disk", center=center, radius=radius)


def janowski_map(z, A: float, B: float):
    """(1 + Az)/(1 + Bz); maps 0 to 1 and the open disk onto the Janowski region."""
    z = np.asarray(z, dtype=complex)
    den = 1.0 + B * z
    if np.any(den == 0):
        raise PoleError(f"janowski map pole at z = {-1.0 / B}")
    out = (1.0 + A * z) / den
    return complex(out) if out.ndim == 0 else out


def _operator_ratio(f: TruncatedSeries, z, spec: QClassSpec):
    num = apply_ruscheweyh(f, spec.m, spec.q).evaluate(z)
    den = apply_ruscheweyh(f, spec.l, spec.q).evaluate(z)
    den_arr = np.atleast_1d(np.asarray(den))
    if np.any(den_arr == 0):
        bad = np.atleast_1d(np.asarray(z, dtype=complex))[np.flatnonzero(den_arr == 0)[0]]
        raise PoleError(f"order-{spec.l} operator image vanishes at z = {bad}")
    return num / den


def p_functional(f: TruncatedSeries, z, spec: QClassSpec):
    """w - alpha*|w - 1| with w the order-m / order-l operator-image ratio.

    At z = 0 both images behave like z, so the ratio limit is 1 and the
    functional equals 1 exactly; that limit is returned without dividing.
    The subtracted term is real, so Im p = Im w.
    """
    z_arr = np.asarray(z, dtype=complex)
    if z_arr.ndim == 0:
        if complex(z_arr) == 0:
            return 1.0 + 0j
        w = _operator_ratio(f, complex(z_arr), spec)
        return w - spec.alpha * abs(w - 1.0)
    zero = z_arr == 0
    # placeholder near 0 keeps the ratio pole-free; those entries are overwritten
    zsafe = np.where(zero, 1e-8, z_arr)
    w = _operator_ratio(f, zsafe, spec)
    p = w - spec.alpha * np.abs(w - 1.0)
    p[zero] = 1.0
    return p


def subordination_margin(f: TruncatedSeries, z, spec: QClassSpec):
    """|p(z) - 1| / |A - B p(z)|; membership requires values < 1 on the disk.

    Zero at z = 0. A vanishing denominator A - B p(z) is reported as a
    MarginPoleError, distinct from a pole of the operator ratio itself.
    """
    p = p_functional(f, z, spec)
    den = np.abs(spec.A - spec.B * np.asarray(p))
    if np.any(den == 0):
        raise MarginPoleError(f"margin denominator A - B p vanished at z = {z}")
    out = np.abs(np.asarray(p) - 1.0) / den
    return float(out) if out.ndim == 0 else out
