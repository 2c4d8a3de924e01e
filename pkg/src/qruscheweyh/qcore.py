"""q-number primitives and the q-Ruscheweyh coefficient sequence.

Everything here is a pure function of its arguments. Products stay
well-scaled: each q-bracket lies in [0, 1/(1-q)], so a k-factor Pochhammer
product is bounded by (1-q)^(-k) and double precision is ample for the
index ranges used elsewhere (k up to a few hundred).

q is accepted strictly inside (0, 1); the endpoints are rejected because the
defining ratio divides by 1 - q. The classical q -> 1 limits are exposed
separately through :func:`classical_limit_coeff`.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "check_q",
    "q_number",
    "q_factorial",
    "q_pochhammer",
    "q_pochhammer_sequence",
    "ruscheweyh_coeff",
    "ruscheweyh_multipliers",
    "classical_limit_coeff",
]


def check_q(q: float) -> float:
    """Validate 0 < q < 1 and return q as a float."""
    q = float(q)
    if not 0.0 < q < 1.0:  # also rejects NaN
        raise ValueError(f"q must lie strictly inside (0, 1), got {q}")
    return q


def _bracket(x: float, q: float) -> float:
    # (1 - q^x)/(1 - q); callers guarantee x >= 0 and 0 < q < 1
    return (1.0 - q**x) / (1.0 - q)


def q_number(k: int, q: float) -> float:
    """q-analogue (1 - q^k)/(1 - q) of the nonnegative integer k.

    Equals 0 at k = 0, is strictly increasing in k, and is bounded above by
    1/(1 - q).
    """
    q = check_q(q)
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    return _bracket(float(k), q)


def q_factorial(k: int, q: float) -> float:
    """Product [1][2]...[k] of q-numbers; 1 for k = 0."""
    q = check_q(q)
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    out = 1.0
    for j in range(1, int(k) + 1):
        out *= _bracket(float(j), q)
    return out


def q_pochhammer(x: float, k: int, q: float) -> float:
    """Rising q-product [x][x+1]...[x+k-1]; 1 for k = 0. Requires x > 0."""
    q = check_q(q)
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"Pochhammer base x must be positive, got {x}")
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    out = 1.0
    for j in range(int(k)):
        out *= _bracket(x + j, q)
    return out


def q_pochhammer_sequence(x: float, q: float, count: int) -> np.ndarray:
    """The rising products [x]_1, [x]_2, ..., [x]_count as a float array."""
    q = check_q(q)
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"Pochhammer base x must be positive, got {x}")
    out = np.empty(count, dtype=float)
    acc = 1.0
    for j in range(count):
        acc *= _bracket(x + j, q)
        out[j] = acc
    return out


def ruscheweyh_coeff(m: int, k: int, q: float) -> float:
    """Taylor coefficient [m+1]_{k-1} / [k-1]! of the convolution kernel.

    This is the factor that the order-m q-Ruscheweyh operator applies to the
    k-th series coefficient (k >= 2). Equals 1 for every k when m = 0, and
    tends to the binomial coefficient C(m+k-1, k-1) as q -> 1.
    """
    if not isinstance(m, (int, np.integer)) or m < 0:
        raise ValueError(f"order m must be a nonnegative integer, got {m!r}")
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise ValueError(f"coefficient index k must be an integer >= 2, got {k!r}")
    return q_pochhammer(m + 1, k - 1, q) / q_factorial(k - 1, q)


def ruscheweyh_multipliers(m: int, q: float, degree: int) -> np.ndarray:
    """Multipliers for coefficients a_1..a_degree under the order-m operator.

    Entry j (0-based) is the factor for a_{j+1}; the first entry is exactly
    1 so normalization is preserved. Uses the stable ratio recurrence
    factor(k+1)/factor(k) = [m+k]/[k].
    """
    q = check_q(q)
    if not isinstance(m, (int, np.integer)) or m < 0:
        raise ValueError(f"order m must be a nonnegative integer, got {m!r}")
    if degree < 1:
        raise ValueError("degree must be at least 1")
    out = np.empty(degree, dtype=float)
    out[0] = 1.0
    for k in range(1, degree):
        out[k] = out[k - 1] * _bracket(float(m + k), q) / _bracket(float(k), q)
    return out


def classical_limit_coeff(m: int, k: int) -> int:
    """Binomial coefficient C(m+k-1, k-1), the q -> 1 limit of ruscheweyh_coeff.

    It is the k-th Taylor coefficient of z/(1-z)^(m+1) and serves as the
    classical oracle for the q-deformed sequence.
    """
    if not isinstance(m, (int, np.integer)) or m < 0:
        raise ValueError(f"order m must be a nonnegative integer, got {m!r}")
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise ValueError(f"coefficient index k must be an integer >= 2, got {k!r}")
    return math.comb(m + k - 1, k - 1)
