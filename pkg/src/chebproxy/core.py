"""One-dimensional Chebyshev machinery.

Anchor points are the extrema x_j = cos(j*pi/n), j = 0..n, stored in
descending order (x_0 = 1 down to x_n = -1).  Interpolants are held as
coefficients c_0..c_n of the basis T_0..T_n; the coefficient transform is
the type-I discrete cosine transform of the anchor values, and evaluation
uses the Clenshaw recurrence.  Trailing coefficients provide the cheap
ex-ante error estimate that drives adaptive degree selection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from scipy.fft import dct

from .errors import DomainError, NonFiniteValueError

__all__ = [
    "Interval",
    "AnchorGrid1D",
    "Interpolant1D",
    "ErrorReport",
    "EquidistantInterpolant",
    "chebyshev_points",
    "cheb_T",
    "build_interpolant",
    "interpolant_from_values",
    "build_adaptive",
    "ex_ante_error",
    "equidistant_interpolant",
]

# Canonical coordinates may drift past +-1 by a few ulp through the affine
# domain map; anything beyond this slack is a genuine range violation.
_CANONICAL_SLACK = 1e-12


@dataclass(frozen=True)
class Interval:
    """Closed working interval [lo, hi] with its affine map to [-1, 1].

    The map is evaluated in the barycentric form ``lo*(1-t)/2 + hi*(1+t)/2``
    so that the endpoints are reproduced exactly.
    """

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"interval bounds must be finite, got [{self.lo}, {self.hi}]")
        if not self.lo < self.hi:
            raise ValueError(f"degenerate interval: lo={self.lo} must be < hi={self.hi}")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def to_canonical(self, x):
        """Map domain coordinates to [-1, 1]."""
        x = np.asarray(x, dtype=float)
        t = ((x - self.lo) - (self.hi - x)) / (self.hi - self.lo)
        return float(t) if t.ndim == 0 else t

    def from_canonical(self, t):
        """Map canonical coordinates in [-1, 1] back to the domain."""
        t = np.asarray(t, dtype=float)
        x = 0.5 * (self.lo * (1.0 - t) + self.hi * (1.0 + t))
        return float(x) if x.ndim == 0 else x

    def contains(self, x) -> bool:
        return bool(np.all((self.lo <= np.asarray(x)) & (np.asarray(x) <= self.hi)))

    def clip(self, x):
        x = np.clip(np.asarray(x, dtype=float), self.lo, self.hi)
        return float(x) if x.ndim == 0 else x


def chebyshev_points(n: int) -> np.ndarray:
    """Anchor abscissae cos(j*pi/n), j = 0..n, in descending order.

    Computed as ``sin(pi*(n-2j)/(2n))``, which is exactly antisymmetric,
    hits 0 exactly for even n, and makes the points of grid n a bitwise
    subset of the points of grid 2n (needed for anchor reuse when the
    degree doubles).  ``n = 0`` is the single point {1} by convention.
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    if n == 0:
        return np.array([1.0])
    j = np.arange(n + 1)
    return np.sin(np.pi * (n - 2 * j) / (2 * n))


def cheb_T(k: int, x):
    """Basis polynomial T_k(x) = cos(k*arccos(x)) on [-1, 1]."""
    if k < 0:
        raise ValueError(f"order must be nonnegative, got {k}")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + _CANONICAL_SLACK):
        bad = np.asarray(x)[np.abs(np.asarray(x)) > 1.0 + _CANONICAL_SLACK]
        raise DomainError(f"cheb_T argument outside [-1, 1]: {float(np.ravel(bad)[0])!r}")
    out = np.cos(k * np.arccos(np.clip(x, -1.0, 1.0)))
    return float(out) if out.ndim == 0 else out


def _vals2coeffs(values: np.ndarray) -> np.ndarray:
    """Coefficients c_0..c_n from values at the descending anchor points.

    This is the type-I DCT relation: c_k = (2/n) * sum'' v_j cos(pi*j*k/n)
    with the first and last summands halved, and c_0, c_n halved once more.
    """
    values = np.asarray(values, dtype=float)
    n = values.shape[0] - 1
    if n == 0:
        return values.copy()
    coeffs = dct(values, type=1, axis=0) / n
    coeffs[0] /= 2.0
    coeffs[-1] /= 2.0
    return coeffs


def _clenshaw(coeffs: np.ndarray, t):
    """Clenshaw evaluation of sum_k coeffs[k] * T_k(t).

    ``coeffs`` may carry trailing axes (coefficient arrays of a whole
    stack of 1-D interpolants); ``t`` must then be scalar.  With 1-D
    coefficients ``t`` may be an array.
    """
    n = coeffs.shape[0] - 1
    if n == 0:
        if np.ndim(t) == 0:
            return coeffs[0] if coeffs.ndim > 1 else float(coeffs[0])
        return np.full(np.shape(t), float(coeffs[0]))
    t = np.asarray(t, dtype=float)
    two_t = 2.0 * t
    b1 = coeffs[n] * np.ones(np.broadcast_shapes(np.shape(t), coeffs.shape[1:]))
    b2 = np.zeros_like(b1)
    for k in range(n - 1, 0, -1):
        b1, b2 = coeffs[k] + two_t * b1 - b2, b1
    out = coeffs[0] + t * b1 - b2
    if np.ndim(out) == 0 or (coeffs.ndim == 1 and np.ndim(t) == 0):
        return float(out)
    return out


def _diff_coeffs(coeffs: np.ndarray, width: float) -> np.ndarray:
    """Coefficients of the derivative, including the 2/width chain factor.

    Standard Chebyshev recurrence d_{k-1} = d_{k+1} + 2k c_k, applied along
    axis 0 so stacked coefficient arrays differentiate in one pass.
    """
    n = coeffs.shape[0] - 1
    if n == 0:
        return np.zeros_like(coeffs)
    d = np.zeros((n,) + coeffs.shape[1:], dtype=float)
    d[n - 1] = 2.0 * n * coeffs[n]
    for k in range(n - 2, -1, -1):
        upper = d[k + 2] if k + 2 < n else 0.0
        d[k] = upper + 2.0 * (k + 1) * coeffs[k + 1]
    d[0] /= 2.0
    return d * (2.0 / width)


@dataclass(frozen=True)
class ErrorReport:
    """Ex-ante error estimate read off the trailing coefficients."""

    ex_ante_estimate: float
    trailing_tail: tuple
    converged: bool
    degree_used: int

    def __post_init__(self):
        if self.trailing_tail and self.ex_ante_estimate < max(self.trailing_tail):
            raise ValueError("estimate must dominate the trailing coefficients")
        if self.ex_ante_estimate < 0.0:
            raise ValueError("estimate must be nonnegative")


@dataclass(frozen=True)
class AnchorGrid1D:
    """Anchor points mapped into a domain, paired with target values."""

    domain: Interval
    points: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if len(points) != len(values) or len(points) < 1:
            raise ValueError("points and values must have equal length >= 1")
        expected = self.domain.from_canonical(chebyshev_points(len(points) - 1))
        if not np.allclose(points, expected, rtol=0.0, atol=1e-12 * max(1.0, abs(self.domain.hi), abs(self.domain.lo))):
            raise ValueError("points are not the mapped Chebyshev anchor points in descending order")
        points.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "values", values)

    @property
    def degree(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class Interpolant1D:
    """Polynomial sum_k coeffs[k] * T_k(t) over an interval.

    ``tolerance`` and ``converged`` record the adaptive-build outcome;
    fixed-degree builds leave them at None/False.  Out-of-domain
    evaluation raises unless ``clamp`` was requested at construction.
    Instances are immutable, so concurrent evaluation is safe.
    """

    domain: Interval
    coeffs: np.ndarray
    tolerance: float | None = None
    converged: bool = False
    clamp: bool = False

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=float)
        if coeffs.ndim != 1 or len(coeffs) < 1:
            raise ValueError("coeffs must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coeffs must be finite")
        coeffs = coeffs.copy()
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Evaluate at x (scalar or array), strict on the domain by default."""
        xa = np.asarray(x, dtype=float)
        if self.clamp:
            xa = self.domain.clip(xa)
        elif not self.domain.contains(xa):
            bad = np.ravel(xa)[~((self.domain.lo <= np.ravel(xa)) & (np.ravel(xa) <= self.domain.hi))]
            raise DomainError(
                f"point {float(bad[0])!r} outside domain [{self.domain.lo}, {self.domain.hi}]"
            )
        t = np.clip(self.domain.to_canonical(xa), -1.0, 1.0)
        out = _clenshaw(self.coeffs, t)
        return float(out) if np.ndim(x) == 0 else np.asarray(out)

    def differentiate(self) -> "Interpolant1D":
        """Exact derivative of the polynomial, one degree lower."""
        d = _diff_coeffs(np.asarray(self.coeffs), self.domain.width)
        if d.size == 0:
            d = np.array([0.0])
        return Interpolant1D(self.domain, d, clamp=self.clamp)

    def ex_ante_error(self, tail_len: int = 2) -> ErrorReport:
        return ex_ante_error(self, tail_len)

    def with_clamp(self) -> "Interpolant1D":
        """Copy that clamps out-of-domain points to the boundary."""
        return replace(self, clamp=True)


def interpolant_from_values(
    domain: Interval,
    values: Sequence[float],
    tolerance: float | None = None,
    converged: bool = False,
) -> Interpolant1D:
    """Interpolant from values at the descending mapped anchor points."""
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        bad = int(np.flatnonzero(~np.isfinite(values))[0])
        raise NonFiniteValueError(f"non-finite anchor value at index {bad}")
    return Interpolant1D(domain, _vals2coeffs(values), tolerance=tolerance, converged=converged)


def build_interpolant(f: Callable[[float], float], domain: Interval, n: int) -> Interpolant1D:
    """Sample f at the n+1 mapped anchor points (exactly n+1 calls).

    Raises NonFiniteValueError naming the offending point if f returns
    NaN or infinity anywhere on the grid.
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    points = domain.from_canonical(chebyshev_points(n))
    points = np.atleast_1d(points)
    values = np.empty(n + 1)
    for j, x in enumerate(points):
        v = float(f(float(x)))
        if not math.isfinite(v):
            raise NonFiniteValueError(f"target function returned {v!r} at anchor point {float(x)!r}")
        values[j] = v
    return Interpolant1D(domain, _vals2coeffs(values))


def ex_ante_error(p: Interpolant1D, tail_len: int = 2) -> ErrorReport:
    """Max absolute value among the last ``tail_len`` coefficients.

    ``converged`` is judged against the tolerance recorded at adaptive
    construction; fixed-degree builds report False.
    """
    if not 1 <= tail_len <= p.degree + 1:
        raise ValueError(f"tail_len must be in [1, {p.degree + 1}], got {tail_len}")
    tail = tuple(float(abs(c)) for c in p.coeffs[len(p.coeffs) - tail_len:])
    estimate = max(tail)
    converged = p.tolerance is not None and estimate < p.tolerance
    return ErrorReport(estimate, tail, converged, p.degree)


def build_adaptive(
    f: Callable[[float], float],
    domain: Interval,
    tol: float,
    max_degree: int,
) -> Interpolant1D:
    """Double the degree (4, 8, 16, ...) until the trailing tail drops below tol.

    Anchor values at reused points are cached across doublings (the grids
    nest), so f is called at most max_degree + 1 times in total.  If
    max_degree is reached without convergence the last interpolant is
    returned flagged ``converged=False``; callers decide what to do.
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if max_degree < 4:
        raise ValueError(f"max_degree must be at least 4, got {max_degree}")

    cache: dict[float, float] = {}

    def value_at(t: float) -> float:
        if t not in cache:
            x = domain.from_canonical(t)
            v = float(f(float(x)))
            if not math.isfinite(v):
                raise NonFiniteValueError(f"target function returned {v!r} at anchor point {float(x)!r}")
            cache[t] = v
        return cache[t]

    n = 4
    last: Interpolant1D | None = None
    while n <= max_degree:
        ts = chebyshev_points(n)
        values = np.array([value_at(float(t)) for t in ts])
        last = Interpolant1D(domain, _vals2coeffs(values), tolerance=tol)
        if last.ex_ante_error(tail_len=2).ex_ante_estimate < tol:
            return replace(last, converged=True)
        n *= 2
    return replace(last, converged=False)


@dataclass(frozen=True)
class EquidistantInterpolant:
    """Degree-n polynomial through n+1 equidistant points (benchmark only).

    Evaluated with the second barycentric formula using the analytic
    weights (-1)^j * C(n, j); the divergence this object exhibits on hard
    targets (Runge's example) is a property of the interpolation problem,
    not of the evaluation scheme.
    """

    domain: Interval
    points: np.ndarray
    values: np.ndarray
    weights: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        values = np.asarray(self.values, dtype=float)
        n = len(points) - 1
        weights = np.array([(-1.0) ** j * math.comb(n, j) for j in range(n + 1)])
        for arr in (points, values, weights):
            arr.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "weights", weights)

    @property
    def degree(self) -> int:
        return len(self.points) - 1

    def __call__(self, x):
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        diff = xa[:, None] - self.points[None, :]
        exact_row, exact_col = np.nonzero(diff == 0.0)
        diff[exact_row, exact_col] = 1.0
        ratio = self.weights[None, :] / diff
        out = (ratio * self.values[None, :]).sum(axis=1) / ratio.sum(axis=1)
        out[exact_row] = self.values[exact_col]
        return float(out[0]) if np.ndim(x) == 0 else out


def equidistant_interpolant(
    f: Callable[[float], float], domain: Interval, n: int
) -> EquidistantInterpolant:
    """Interpolate f at n+1 equidistant points of the domain."""
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    points = np.linspace(domain.lo, domain.hi, n + 1)
    values = np.array([float(f(float(x))) for x in points])
    return EquidistantInterpolant(domain, points, values)
