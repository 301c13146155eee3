"""Point sets on the unit sphere: construction and verification.

Covers the cyclic-group design construction (each group element drives one
rotating coordinate pair), t-design verification by monomial moments or by
explicit low-degree harmonic bases, distance spectra with tolerance
clustering, and the binomial-bound duality report.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import pi

import numpy as np

from .formulas import delsarte_bound
from .sumsets import Subset

__all__ = [
    "PointSet",
    "DesignCheck",
    "DistanceSpectrum",
    "DualityReport",
    "construct_design_points",
    "sphere_moment",
    "monomials",
    "is_t_design_moments",
    "is_t_design_harmonic",
    "distance_spectrum",
    "duality_check",
    "known_configuration",
    "load_point_set",
    "save_point_set",
]

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class PointSet:
    """N points on S^dimension, as rows of an (N, dimension+1) array."""

    dimension: int
    points: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise ValueError("points must form a nonempty 2-D array")
        if pts.shape[1] != self.dimension + 1:
            raise ValueError(
                f"points on S^{self.dimension} need {self.dimension + 1} coordinates, "
                f"got {pts.shape[1]}"
            )
        if self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        norms = np.linalg.norm(pts, axis=1)
        off = float(np.abs(norms - 1.0).max())
        if off > max(self.tolerance, 1e-9):
            raise ValueError(f"points deviate from the unit sphere by {off:.3g}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def size(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class DesignCheck:
    is_design: bool
    max_residual: float
    worst: tuple[int, ...] | str | None


@dataclass(frozen=True)
class DistanceSpectrum:
    distances: tuple[float, ...]
    s: int


@dataclass(frozen=True)
class DualityReport:
    design_lower: int
    size: int
    distance_upper: int
    tight: bool


def construct_design_points(A: Subset) -> PointSet:
    """Points j = 1..N on S^(2m-1) whose coordinate pair for each element a
    is (cos(2*pi*j*a/N), sin(2*pi*j*a/N)), scaled by 1/sqrt(m).

    N is the order of the cyclic group that A lives in.
    """
    if not A.group.is_cyclic:
        raise ValueError("the construction needs a subset of a cyclic group")
    if A.m < 1:
        raise ValueError("the construction needs a nonempty subset")
    N = A.group.order
    residues = np.array([g.residues[0] for g in A.elements], dtype=float)
    j = np.arange(1, N + 1, dtype=float)[:, None]
    angles = 2.0 * pi * j * residues[None, :] / N
    pts = np.empty((N, 2 * A.m))
    pts[:, 0::2] = np.cos(angles)
    pts[:, 1::2] = np.sin(angles)
    pts /= np.sqrt(A.m)
    return PointSet(dimension=2 * A.m - 1, points=pts)


def sphere_moment(d: int, exponents) -> float:
    """Average of the monomial prod x_i**alpha_i over the uniform measure on
    S^d: zero when any exponent is odd, otherwise
    prod (alpha_i - 1)!! / prod_{j < sum(alpha)/2} (d + 1 + 2j).
    """
    alpha = tuple(int(a) for a in exponents)
    if len(alpha) != d + 1:
        raise ValueError(f"need {d + 1} exponents for S^{d}, got {len(alpha)}")
    if any(a < 0 for a in alpha):
        raise ValueError("exponents must be nonnegative")
    if any(a % 2 for a in alpha):
        return 0.0
    num = 1
    for a in alpha:
        for k in range(a - 1, 0, -2):
            num *= k
    den = 1
    for j in range(sum(alpha) // 2):
        den *= d + 1 + 2 * j
    return float(Fraction(num, den))


def monomials(d: int, degree: int):
    """All exponent tuples of the given total degree in d+1 variables."""
    for positions in combinations_with_replacement(range(d + 1), degree):
        alpha = [0] * (d + 1)
        for p in positions:
            alpha[p] += 1
        yield tuple(alpha)


def is_t_design_moments(X: PointSet, t: int, tolerance: float | None = None) -> DesignCheck:
    """Compare every monomial average of degree 1..t with its sphere moment."""
    if t < 0:
        raise ValueError("design strength must be nonnegative")
    tol = X.tolerance if tolerance is None else tolerance
    worst = None
    worst_res = 0.0
    pts = X.points
    for degree in range(1, t + 1):
        for alpha in monomials(X.dimension, degree):
            vals = np.ones(X.size)
            for i, a in enumerate(alpha):
                if a:
                    vals *= pts[:, i] ** a
            residual = abs(float(vals.mean()) - sphere_moment(X.dimension, alpha))
            if residual > worst_res:
                worst_res, worst = residual, alpha
    return DesignCheck(is_design=worst_res <= tol, max_residual=worst_res, worst=worst)


def _harmonic_basis(pts: np.ndarray, d: int, k: int) -> list[tuple[str, np.ndarray]]:
    # explicit spanning sets for the degree-k harmonics, valid for k <= 3
    x = pts.T
    out = []
    if k == 1:
        for i in range(d + 1):
            out.append((f"x{i + 1}", x[i]))
    elif k == 2:
        for i in range(d):
            out.append((f"x{i + 1}^2-x{i + 2}^2", x[i] ** 2 - x[i + 1] ** 2))
        for i, j in combinations(range(d + 1), 2):
            out.append((f"x{i + 1}x{j + 1}", x[i] * x[j]))
    elif k == 3:
        for i in range(d + 1):
            for j in range(d + 1):
                if i != j:
                    out.append((f"x{i + 1}^3-3x{i + 1}x{j + 1}^2", x[i] ** 3 - 3 * x[i] * x[j] ** 2))
        for i, j, l in combinations(range(d + 1), 3):
            out.append((f"x{i + 1}x{j + 1}x{l + 1}", x[i] * x[j] * x[l]))
    else:
        raise ValueError("explicit bases are available only for degree <= 3")
    return out


def is_t_design_harmonic(X: PointSet, t: int, tolerance: float | None = None) -> DesignCheck:
    """Zero-sum test over explicit harmonic bases.

    Supported for t <= 3 in any dimension, and for every t on the circle,
    where the degree-k harmonics are spanned by the real and imaginary parts
    of (x1 + i*x2)**k.  Sums are compared against tolerance * N; the reported
    residual is normalized by N to match the moment test's scale.
    """
    if t < 0:
        raise ValueError("design strength must be nonnegative")
    if t > 3 and X.dimension > 1:
        raise ValueError("harmonic bases cover only t <= 3 above the circle; use the moment test")
    tol = X.tolerance if tolerance is None else tolerance
    pts = X.points
    N = X.size
    worst = None
    worst_sum = 0.0
    if X.dimension == 1:
        z = pts[:, 0] + 1j * pts[:, 1]
        for k in range(1, t + 1):
            total = complex(np.sum(z**k))
            for part, value in (("re", total.real), ("im", total.imag)):
                if abs(value) > worst_sum:
                    worst_sum, worst = abs(value), f"{part}(x1+ix2)^{k}"
    else:
        for k in range(1, t + 1):
            for name, values in _harmonic_basis(pts, X.dimension, k):
                total = abs(float(values.sum()))
                if total > worst_sum:
                    worst_sum, worst = total, name
    return DesignCheck(is_design=worst_sum <= tol * N, max_residual=worst_sum / N, worst=worst)


def distance_spectrum(X: PointSet, tolerance: float | None = None) -> DistanceSpectrum:
    """Distinct pairwise distances after single-linkage clustering.

    Sorted distances are split wherever the gap between neighbors exceeds
    the tolerance; coincident points (distance within tolerance of zero) are
    rejected as input errors.
    """
    if X.size < 2:
        raise ValueError("a distance spectrum needs at least two points")
    tol = X.tolerance if tolerance is None else tolerance
    pts = X.points
    diffs = pts[:, None, :] - pts[None, :, :]
    dmat = np.sqrt(np.sum(diffs * diffs, axis=2))
    iu = np.triu_indices(X.size, k=1)
    dists = np.sort(dmat[iu])
    if dists[0] <= tol:
        raise ValueError("duplicate points: two points coincide within tolerance")
    clusters = [[float(dists[0])]]
    for value in dists[1:]:
        if float(value) - clusters[-1][-1] > tol:
            clusters.append([])
        clusters[-1].append(float(value))
    means = tuple(sum(c) / len(c) for c in clusters)
    return DistanceSpectrum(distances=means, s=len(means))


def duality_check(X: PointSet, t: int, s: int) -> DualityReport:
    """Assert design_lower <= N <= distance_upper for a verified t-design
    and s-distance set; equality of t and 2s flags the tight regime."""
    lower = delsarte_bound(X.dimension, t)
    upper = delsarte_bound(X.dimension, 2 * s)
    if not lower <= X.size <= upper:
        raise RuntimeError(
            f"size {X.size} violates [{lower}, {upper}] for t={t}, s={s}; "
            "this indicates an inconsistent verification, not new mathematics"
        )
    return DualityReport(design_lower=lower, size=X.size, distance_upper=upper, tight=t == 2 * s)


_PARAM_RE = re.compile(r"^(ngon|simplex)\((\d+)\)$")

_GOLDEN = (1 + np.sqrt(5)) / 2


def _icosahedron() -> np.ndarray:
    pts = []
    for a in (1.0, -1.0):
        for b in (_GOLDEN, -_GOLDEN):
            pts.append((0.0, a, b))
            pts.append((a, b, 0.0))
            pts.append((b, 0.0, a))
    return np.array(pts)


def _dodecahedron() -> np.ndarray:
    pts = [(sx, sy, sz) for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)]
    inv = 1 / _GOLDEN
    for a in (inv, -inv):
        for b in (_GOLDEN, -_GOLDEN):
            pts.append((0.0, a, b))
            pts.append((a, b, 0.0))
            pts.append((b, 0.0, a))
    return np.array(pts, dtype=float)


def _simplex(d: int) -> np.ndarray:
    # d+2 unit vectors in R^(d+1) with pairwise inner product -1/(d+1):
    # centered standard basis of R^(d+2), expressed in the hyperplane basis
    k = d + 2
    centered = np.eye(k) - np.full((k, k), 1.0 / k)
    u, sing, _ = np.linalg.svd(centered)
    coords = u[:, : k - 1] * sing[: k - 1]
    return coords / np.linalg.norm(coords, axis=1, keepdims=True)


def known_configuration(name: str) -> PointSet:
    """Classical configurations by name.

    Accepts ngon(N), simplex(d), tetrahedron, octahedron, cube, icosahedron,
    dodecahedron.
    """
    cleaned = name.strip().lower()
    match = _PARAM_RE.match(cleaned)
    if match:
        kind, param = match.group(1), int(match.group(2))
        if kind == "ngon":
            if param < 1:
                raise ValueError("an ngon needs at least one vertex")
            angles = 2.0 * pi * np.arange(param) / param
            return PointSet(1, np.column_stack([np.cos(angles), np.sin(angles)]))
        if param < 1:
            raise ValueError("a simplex needs dimension at least 1")
        return PointSet(param, _simplex(param))
    if cleaned == "tetrahedron":
        pts = np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], dtype=float)
        return PointSet(2, pts / np.sqrt(3.0))
    if cleaned == "octahedron":
        return PointSet(2, np.vstack([np.eye(3), -np.eye(3)]))
    if cleaned == "cube":
        pts = np.array(
            [(sx, sy, sz) for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)], dtype=float
        )
        return PointSet(2, pts / np.sqrt(3.0))
    if cleaned == "icosahedron":
        pts = _icosahedron()
        return PointSet(2, pts / np.linalg.norm(pts, axis=1, keepdims=True))
    if cleaned == "dodecahedron":
        return PointSet(2, _dodecahedron() / np.sqrt(3.0))
    raise ValueError(f"unknown configuration {name!r}")


def save_point_set(X: PointSet, path: str) -> None:
    payload = {
        "dimension": X.dimension,
        "points": [[float(c) for c in row] for row in X.points],
        "tolerance": X.tolerance,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_point_set(path: str) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    try:
        dimension = int(payload["dimension"])
        points = payload["points"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed point file {path}: {exc}") from None
    tolerance = float(payload.get("tolerance", DEFAULT_TOLERANCE))
    return PointSet(dimension=dimension, points=np.array(points, dtype=float), tolerance=tolerance)
