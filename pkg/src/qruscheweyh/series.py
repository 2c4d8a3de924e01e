"""Truncated normalized power series and the operators acting on them.

A series is stored by its coefficients (a_1, ..., a_N) with the
normalization a_1 = 1, representing f(z) = z + a_2 z^2 + ... + a_N z^N.
Coefficients beyond the truncation degree are implicitly zero, so every
value here is an actual polynomial and belongs to the normalized class
exactly; no tail estimates are involved.

Plain polynomials (constant term first) appear as intermediates in the
differential form of the q-Ruscheweyh operator and in quadrature helpers;
they are passed around as numpy arrays.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .exceptions import InputFormatError
from .qcore import check_q, q_factorial, q_number, ruscheweyh_multipliers

__all__ = [
    "TruncatedSeries",
    "NegativeCoeffSeries",
    "hadamard",
    "q_derivative",
    "apply_ruscheweyh",
    "apply_ruscheweyh_differential",
    "poly_eval",
]


def poly_eval(coeffs: np.ndarray, z):
    """Horner evaluation of a constant-first coefficient array at z (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in np.asarray(coeffs)[::-1]:
        acc = acc * z + c
    return acc


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Degree-N truncation of a normalized analytic function.

    coefficients holds (a_1, ..., a_N), indexed from 1, with a_1 = 1
    exactly. Instances are immutable; all operations return new values.
    """

    coefficients: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coefficients, dtype=complex)
        if arr.ndim != 1 or arr.size < 1:
            raise InputFormatError("coefficients must be a nonempty 1-d sequence (a_1, ..., a_N)")
        if arr[0] != 1:
            raise InputFormatError(f"normalization requires a_1 = 1 exactly, got {arr[0]}")
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)

    @property
    def degree(self) -> int:
        return int(self.coefficients.size)

    def coefficient(self, k: int) -> complex:
        """a_k with 1-based index; zero beyond the truncation degree."""
        if k < 1:
            raise ValueError("coefficient index starts at 1")
        if k > self.degree:
            return 0j
        return complex(self.coefficients[k - 1])

    @classmethod
    def identity(cls, degree: int = 1) -> "TruncatedSeries":
        """The function f(z) = z, optionally zero-padded to a given degree."""
        coeffs = np.zeros(degree, dtype=complex)
        coeffs[0] = 1.0
        return cls(coeffs)

    @classmethod
    def geometric(cls, degree: int) -> "TruncatedSeries":
        """Truncation of z/(1-z): all coefficients 1 (convolution identity)."""
        return cls(np.ones(degree, dtype=complex))

    @classmethod
    def from_tail(cls, tail) -> "TruncatedSeries":
        """Build from (a_2, a_3, ...) with a_1 = 1 prepended."""
        tail = np.asarray(tail, dtype=complex)
        return cls(np.concatenate(([1.0 + 0j], tail)))

    def to_polynomial(self) -> np.ndarray:
        """Constant-first coefficient array [0, a_1, ..., a_N]."""
        return np.concatenate(([0j], self.coefficients))

    def evaluate(self, z):
        """Horner evaluation; exact 0 at z = 0. Accepts scalars or arrays.

        Values outside the closed unit disk are only extrapolations of the
        truncation; they are computed anyway but flagged with a warning.
        """
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) > 1.0):
            warnings.warn("evaluating a disk truncation outside |z| <= 1", stacklevel=2)
        acc = np.zeros_like(z)
        for c in self.coefficients[::-1]:
            acc = acc * z + c
        out = acc * z
        return complex(out) if out.ndim == 0 else out

    def evaluate_derivative(self, z):
        """Classical derivative sum k a_k z^(k-1); equals 1 at z = 0."""
        z = np.asarray(z, dtype=complex)
        weights = self.coefficients * np.arange(1, self.degree + 1)
        acc = np.zeros_like(z)
        for c in weights[::-1]:
            acc = acc * z + c
        return complex(acc) if acc.ndim == 0 else acc

    def evaluate_second_derivative(self, z):
        """Sum k (k-1) a_k z^(k-2)."""
        z = np.asarray(z, dtype=complex)
        ks = np.arange(1, self.degree + 1)
        weights = (self.coefficients * ks * (ks - 1))[1:]
        acc = np.zeros_like(z)
        for c in weights[::-1]:
            acc = acc * z + c
        return complex(acc) if acc.ndim == 0 else acc

    def to_json_dict(self) -> dict:
        # adding 0.0 maps -0.0 to 0.0 without touching other values
        return {
            "degree": self.degree,
            "coefficients": [
                [float(c.real) + 0.0, float(c.imag) + 0.0] for c in self.coefficients
            ],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "TruncatedSeries":
        try:
            degree = payload["degree"]
            pairs = payload["coefficients"]
        except (TypeError, KeyError) as exc:
            raise InputFormatError(f"series payload is missing {exc}") from exc
        if not isinstance(pairs, list) or any(len(p) != 2 for p in pairs):
            raise InputFormatError("coefficients must be a list of [re, im] pairs")
        coeffs = np.array([complex(re, im) for re, im in pairs], dtype=complex)
        if degree != coeffs.size:
            raise InputFormatError(
                f"declared degree {degree} does not match {coeffs.size} coefficients"
            )
        return cls(coeffs)


@dataclass(frozen=True, eq=False)
class NegativeCoeffSeries:
    """A function z - b_2 z^2 - ... - b_N z^N with magnitudes b_k >= 0.

    The magnitudes array holds (b_2, ..., b_N); it may be empty, which is
    the identity function z. This constrained type is what the exact
    (necessary-and-sufficient) membership test and the extreme-point
    machinery operate on.
    """

    magnitudes: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        arr = np.array(self.magnitudes, dtype=float)
        if arr.ndim != 1:
            raise InputFormatError("magnitudes must be a 1-d sequence (b_2, ..., b_N)")
        if arr.size and arr.min() < 0:
            raise InputFormatError("magnitudes must be nonnegative")
        arr.setflags(write=False)
        object.__setattr__(self, "magnitudes", arr)

    @property
    def degree(self) -> int:
        return int(self.magnitudes.size) + 1

    def magnitude(self, k: int) -> float:
        """b_k with k >= 2; zero beyond the truncation degree."""
        if k < 2:
            raise ValueError("magnitude index starts at 2")
        if k > self.degree:
            return 0.0
        return float(self.magnitudes[k - 2])

    def to_series(self) -> TruncatedSeries:
        return TruncatedSeries.from_tail(-self.magnitudes.astype(complex))

    @classmethod
    def from_series(cls, f: TruncatedSeries, tol: float = 1e-12) -> "NegativeCoeffSeries":
        """Reinterpret a series whose tail coefficients are real and <= 0."""
        tail = f.coefficients[1:]
        if tail.size and (np.abs(tail.imag).max() > tol or tail.real.max() > tol):
            raise InputFormatError(
                "series is not of the negative-coefficient form z - sum b_k z^k"
            )
        return cls(np.clip(-tail.real, 0.0, None))

    def to_json_dict(self) -> dict:
        return self.to_series().to_json_dict()

    @classmethod
    def from_json_dict(cls, payload: dict) -> "NegativeCoeffSeries":
        return cls.from_series(TruncatedSeries.from_json_dict(payload))


def hadamard(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise (Hadamard) product, truncated to the shorter input.

    The truncated geometric series acts as the identity; the operation is
    commutative and bilinear in the tails.
    """
    n = min(f.degree, g.degree)
    return TruncatedSeries(f.coefficients[:n] * g.coefficients[:n])


def q_derivative(f, q: float) -> np.ndarray:
    """q-difference derivative, mapping sum c_k z^k to sum [k] c_k z^(k-1).

    Accepts a TruncatedSeries or a constant-first coefficient array and
    returns a constant-first coefficient array one degree shorter. The
    result agrees with the quotient (f(qz) - f(z)) / (z (q - 1)) at every
    z != 0, and its value at z = 0 is c_1.
    """
    q = check_q(q)
    coeffs = f.to_polynomial() if isinstance(f, TruncatedSeries) else np.asarray(f, dtype=complex)
    if coeffs.size <= 1:
        return np.zeros(0, dtype=complex)
    brackets = np.array([q_number(k, q) for k in range(1, coeffs.size)])
    return coeffs[1:] * brackets


def apply_ruscheweyh(f: TruncatedSeries, m: int, q: float) -> TruncatedSeries:
    """Order-m q-Ruscheweyh operator: multiply a_k by [m+1]_(k-1) / [k-1]!.

    Equivalent to Hadamard convolution with the kernel whose coefficients
    are those multipliers; m = 0 is the identity.
    """
    mult = ruscheweyh_multipliers(m, q, f.degree)
    return TruncatedSeries(f.coefficients * mult)


def apply_ruscheweyh_differential(f: TruncatedSeries, m: int, q: float) -> TruncatedSeries:
    """Differential form of the operator: z D_q^m ( z^(m-1) f(z) ) / [m]!.

    For m = 0 the prefactor z^(m-1) is taken as the coefficient shift
    f(z)/z (well defined since f(0) = 0), which makes m = 0 the identity,
    consistent with the convolution form. Must agree with
    :func:`apply_ruscheweyh` coefficient-wise to ~1e-12; the two routes
    serve as mutual cross-checks.
    """
    q = check_q(q)
    if not isinstance(m, (int, np.integer)) or m < 0:
        raise ValueError(f"order m must be a nonnegative integer, got {m!r}")
    n = f.degree
    poly = f.to_polynomial()
    if m == 0:
        shifted = poly[1:]
    else:
        shifted = np.concatenate((np.zeros(m - 1, dtype=complex), poly))
    for _ in range(m):
        shifted = q_derivative(shifted, q)
    result = np.concatenate(([0j], shifted)) / q_factorial(m, q)
    coeffs = np.array(result[1 : n + 1])
    if abs(coeffs[0] - 1.0) > 1e-9:
        raise ArithmeticError("differential route lost normalization; inputs out of range")
    coeffs[0] = 1.0  # remove last-ulp product-order noise
    return TruncatedSeries(coeffs)
