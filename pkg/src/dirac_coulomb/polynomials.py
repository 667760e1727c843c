"""Generalized Laguerre polynomials, terminating Kummer functions, and zero
counting of two-term Laguerre combinations.

Everything here is exact polynomial arithmetic in double precision: the
degrees of interest are small (radial quantum numbers up to a few tens), so
the three-term recurrence and the terminating hypergeometric sum are both
stable and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "LaguerreParams",
    "laguerre_eval",
    "laguerre_deriv",
    "laguerre_at_zero",
    "kummer_poly_eval",
    "combo_positive_zeros",
    "combo_zero_count",
]

# Bisection refinement target for zero locations (absolute, in the polynomial
# argument).
_BISECT_TOL = 1e-12


@dataclass(frozen=True)
class LaguerreParams:
    """One generalized-Laguerre term L_degree^order(argument)."""

    degree: int
    order: float
    argument: float

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"invalid-degree: degree must be >= 0, got {self.degree}")
        if self.order <= 0.0:
            raise ValueError(f"invalid-order: order must be > 0, got {self.order}")
        if self.argument < 0.0:
            raise ValueError(f"argument must be >= 0, got {self.argument}")

    def value(self) -> float:
        return float(laguerre_eval(self.degree, self.order, self.argument))


def laguerre_eval(degree, order, argument):
    """Evaluate L_degree^order(argument) by the three-term recurrence in degree.

    The recurrence k*L_k = (2k-1+a-x)*L_{k-1} - (k-1+a)*L_{k-2} is forward
    stable for the small degrees used here, and is exact for degrees 0 and 1.
    `argument` may be a scalar or an ndarray.
    """
    if degree < 0:
        raise ValueError(f"invalid-degree: degree must be >= 0, got {degree}")
    if order <= -1.0:
        raise ValueError(f"invalid-order: order must be > -1, got {order}")
    x = np.asarray(argument, dtype=float)
    prev = np.ones_like(x)
    if degree == 0:
        return prev if isinstance(argument, np.ndarray) else float(prev)
    cur = 1.0 + order - x
    for k in range(2, degree + 1):
        prev, cur = cur, ((2 * k - 1 + order - x) * cur - (k - 1 + order) * prev) / k
    return cur if isinstance(argument, np.ndarray) else float(cur)


def laguerre_deriv(degree, order, argument):
    """First derivative, using d/dx L_n^a(x) = -L_{n-1}^{a+1}(x)."""
    if degree == 0:
        x = np.asarray(argument, dtype=float)
        z = np.zeros_like(x)
        return z if isinstance(argument, np.ndarray) else 0.0
    out = laguerre_eval(degree - 1, order + 1.0, argument)
    return -out


def laguerre_at_zero(degree: int, order: float) -> float:
    """L_n^a(0) = (a+1)(a+2)...(a+n)/n!, computed as a direct product."""
    if degree < 0:
        raise ValueError(f"invalid-degree: degree must be >= 0, got {degree}")
    value = 1.0
    for k in range(1, degree + 1):
        value *= (order + k) / k
    return value


def kummer_poly_eval(neg_degree: int, b: float, argument):
    """Evaluate 1F1(-neg_degree, b, argument) by its terminating sum.

    Only the polynomial case (first parameter a nonpositive integer) is
    supported; the sum has neg_degree+1 terms and terminates exactly, so no
    cancellation beyond ordinary alternating-sum rounding occurs at the small
    degrees used here.
    """
    if neg_degree < 0:
        raise ValueError(f"invalid-degree: neg_degree must be >= 0, got {neg_degree}")
    if b <= 0.0:
        raise ValueError(f"invalid-b: b must be > 0, got {b}")
    x = np.asarray(argument, dtype=float)
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(neg_degree):
        term = term * (-(neg_degree - k)) * x / ((b + k) * (k + 1))
        total = total + term
    return total if isinstance(argument, np.ndarray) else float(total)


def _combo_values(coeff_a, coeff_b, degree, order, x):
    return coeff_a * laguerre_eval(degree, order, x) + coeff_b * laguerre_eval(
        degree - 1, order, x
    )


def _bisect(f, lo, hi):
    flo = f(lo)
    if flo == 0.0:
        return lo
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (flo > 0) == (fm > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def combo_positive_zeros(coeff_a, coeff_b, degree, order) -> np.ndarray:
    """Strictly positive zeros of coeff_a*L_n^a + coeff_b*L_{n-1}^a.

    Scans a geometric grid on (0, rho_max] with rho_max = 2*(2n + a + 2),
    which lies beyond the last zero of either polynomial, then refines each
    sign change by bisection.  Zeros of the combination are simple on
    (0, inf), so sign changes find all of them.
    """
    if degree < 1:
        return np.empty(0)
    rho_max = 2.0 * (2 * degree + order + 2.0)
    npts = max(int(np.ceil(64 * rho_max)), 1024)
    grid = np.geomspace(1e-14, rho_max, npts)
    vals = _combo_values(coeff_a, coeff_b, degree, order, grid)
    if not np.all(np.isfinite(vals)):
        raise ValueError("degenerate-combination: non-finite polynomial values")
    scale = abs(coeff_a) * laguerre_at_zero(degree, order) + abs(
        coeff_b
    ) * laguerre_at_zero(degree - 1, order)
    if np.max(np.abs(vals)) < 1e-250 * scale:
        raise ValueError("degenerate-combination: numerically zero polynomial")

    f = lambda x: _combo_values(coeff_a, coeff_b, degree, order, x)
    zeros = []
    for i in np.nonzero(vals == 0.0)[0]:
        zeros.append(grid[i])
    sign = np.sign(vals)
    flips = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    for i in flips:
        zeros.append(_bisect(f, grid[i], grid[i + 1]))
    return np.array(sorted(zeros))


def combo_zero_count(coeff_a, coeff_b, degree, order) -> int:
    """Number of zeros on [0, inf) of coeff_a*L_n^a + coeff_b*L_{n-1}^a.

    The count is n-1 when coeff_b/coeff_a < -(n+a)/n and n otherwise, the
    boundary case placing one zero exactly at the origin.  The count is
    obtained by scanning (combo_positive_zeros) plus an origin test, and is
    cross-asserted against that closed rule.
    """
    if coeff_a == 0.0 or coeff_b == 0.0:
        raise ValueError("degenerate-combination: both coefficients must be nonzero")
    if degree < 1:
        raise ValueError(f"invalid-degree: degree must be >= 1, got {degree}")
    zeros = combo_positive_zeros(coeff_a, coeff_b, degree, order)
    count = len(zeros)

    at_zero_n = laguerre_at_zero(degree, order)
    at_zero_nm1 = laguerre_at_zero(degree - 1, order)
    value0 = coeff_a * at_zero_n + coeff_b * at_zero_nm1
    scale0 = abs(coeff_a) * at_zero_n + abs(coeff_b) * at_zero_nm1
    origin_zero = abs(value0) <= 1e-12 * scale0
    if origin_zero:
        count += 1

    ratio = coeff_b / coeff_a
    threshold = -(degree + order) / degree
    expected = degree - 1 if (ratio < threshold and not origin_zero) else degree
    if count != expected:
        raise AssertionError(
            f"zero scan found {count} zeros, closed rule predicts {expected} "
            f"(A={coeff_a}, B={coeff_b}, n={degree}, a={order})"
        )
    return count
