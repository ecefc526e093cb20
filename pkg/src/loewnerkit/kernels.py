"""Kernel catalog, Gram matrices, PSD checks, and RKHS membership heuristics."""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericsError
from .flows import RadialFlowSpec, radial_transition
from .moebius import require_disk, require_halfplane
from .representations import herglotz_eval

DUPLICATE_TOL = 1e-10
HERMITIAN_TOL = 1e-12

BOUNDED = "Bounded"
UNBOUNDED = "Unbounded"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class DbrDiskKernel:
    """de Branges-Rovnyak kernel (1 - conj(B(w)) B(z)) / (1 - conj(w) z) on D."""

    b_map: object
    domain = "disk"

    def __call__(self, z: complex, w: complex) -> complex:
        z = require_disk(z)
        w = require_disk(w)
        return (1.0 - self.b_map(w).conjugate() * self.b_map(z)) / (1.0 - w.conjugate() * z)


@dataclass(frozen=True)
class HerglotzSpaceKernel:
    """Herglotz-space kernel (conj(phi(w)) + phi(z)) / (1 - conj(w) z) on D."""

    phi: object
    domain = "disk"

    def __call__(self, z: complex, w: complex) -> complex:
        z = require_disk(z)
        w = require_disk(w)
        return (self.phi(w).conjugate() + self.phi(z)) / (1.0 - w.conjugate() * z)


@dataclass(frozen=True)
class PickSpaceKernel:
    """Pick-space kernel (phi(z) - conj(phi(w))) / (z - conj(w)) on H."""

    phi: object
    domain = "halfplane"

    def __call__(self, z: complex, w: complex) -> complex:
        z = require_halfplane(z)
        w = require_halfplane(w)
        return (self.phi(z) - self.phi(w).conjugate()) / (z - w.conjugate())


@dataclass(frozen=True)
class PaleyWienerKernel:
    """Paley-Wiener kernel sin(2 pi A (z - conj w)) / (pi (z - conj w)) on C."""

    bandwidth: float
    domain = "plane"

    def __post_init__(self):
        if not (self.bandwidth > 0.0):
            raise ValueError("bandwidth must be positive")

    def __call__(self, z: complex, w: complex) -> complex:
        xi = complex(z) - complex(w).conjugate()
        c = 2.0 * math.pi * self.bandwidth
        if abs(c * xi) < 1e-4:
            # Series around the removable singularity at z = conj(w).
            x2 = (c * xi) ** 2
            return 2.0 * self.bandwidth * (1.0 - x2 / 6.0 + x2 * x2 / 120.0)
        return cmath.sin(c * xi) / (math.pi * xi)


@dataclass(frozen=True)
class LoewnerTimeKernel:
    """Time-t kernel (conj(phi(t, B_t(w))) + phi(t, B_t(z))) / (1 - conj(w) z)
    of a radial Loewner flow with Herglotz driver phi."""

    flow: RadialFlowSpec
    t: float

    domain = "disk"

    def __call__(self, z: complex, w: complex) -> complex:
        z = require_disk(z)
        w = require_disk(w)
        mu = self.flow.driver_measure(self.t)
        phi_z = herglotz_eval(mu, radial_transition(self.flow, self.t, z))
        phi_w = herglotz_eval(mu, radial_transition(self.flow, self.t, w))
        return (phi_w.conjugate() + phi_z) / (1.0 - w.conjugate() * z)


def kernel_eval(spec, z: complex, w: complex) -> complex:
    """Evaluate a catalog kernel at (z, w); domain checks are the kernel's."""
    return spec(z, w)


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Hermitian matrix of kernel evaluations over a finite point set."""

    points: tuple
    matrix: np.ndarray

    def __post_init__(self):
        k = np.asarray(self.matrix, dtype=complex)
        if k.ndim != 2 or k.shape[0] != k.shape[1] or k.shape[0] != len(self.points):
            raise ValueError("matrix must be square and match the point count")
        scale = max(1.0, float(np.max(np.abs(k))) if k.size else 1.0)
        if float(np.max(np.abs(k - k.conj().T))) > HERMITIAN_TOL * scale:
            raise ValueError("matrix is not Hermitian within tolerance")
        diag = np.diagonal(k)
        if float(np.max(np.abs(diag.imag), initial=0.0)) > HERMITIAN_TOL * scale:
            raise ValueError("diagonal must be real")
        if float(np.min(diag.real, initial=0.0)) < -HERMITIAN_TOL * scale:
            raise ValueError("diagonal must be nonnegative")
        object.__setattr__(self, "matrix", k)
        object.__setattr__(self, "points", tuple(complex(p) for p in self.points))

    @property
    def size(self) -> int:
        return len(self.points)

    def to_json_dict(self) -> dict:
        """Row-major re/im pairs for offline inspection."""
        return {
            "points": [[p.real, p.imag] for p in self.points],
            "entries": [[[v.real, v.imag] for v in row] for row in self.matrix.tolist()],
        }


def gram(spec, points) -> GramMatrix:
    """Gram matrix K[i][j] = k(z_i, z_j) over pairwise-distinct points."""
    pts = [complex(p) for p in points]
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(pts[i] - pts[j]) < DUPLICATE_TOL:
                raise ValueError(f"points {i} and {j} coincide within {DUPLICATE_TOL}")
    k = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            k[i, j] = spec(pts[i], pts[j])
    return GramMatrix(tuple(pts), k)


def _as_matrix(k) -> np.ndarray:
    if isinstance(k, GramMatrix):
        return k.matrix
    return np.asarray(k, dtype=complex)


def psd_check(k, tol: float = 1e-8):
    """Minimum eigenvalue of a Hermitian matrix and whether it passes
    min_eig >= -tol * max(1, max_eig)."""
    matrix = _as_matrix(k)
    try:
        eigs = np.linalg.eigvalsh(matrix)
    except np.linalg.LinAlgError as exc:
        raise NumericsError(f"eigensolver failed: {exc}") from exc
    min_eig = float(eigs[0])
    max_eig = float(eigs[-1])
    return min_eig, min_eig >= -tol * max(1.0, max_eig)


def rkhs_norm_estimate(spec, points, values, eps: float = None) -> float:
    """Regularized finite-section quadratic form v* (K + eps I)^{-1} v.

    For values sampled from a kernel column k(., lambda) with lambda among
    the points, the estimate tends to k(lambda, lambda) as eps -> 0.
    Default eps is 1e-10 * trace(K)/n.
    """
    k = gram(spec, points)
    v = np.asarray([complex(x) for x in values], dtype=complex)
    if v.shape[0] != k.size:
        raise ValueError("values must match points in length")
    if k.size == 0:
        return 0.0
    if eps is None:
        eps = 1e-10 * float(np.trace(k.matrix).real) / k.size
    if not (eps > 0.0):
        raise ValueError("eps must be positive")
    try:
        x = np.linalg.solve(k.matrix + eps * np.eye(k.size), v)
    except np.linalg.LinAlgError as exc:
        raise NumericsError(f"linear solve failed: {exc}") from exc
    return float(np.real(np.vdot(v, x)))


@dataclass(frozen=True)
class MembershipReport:
    """Sequence of finite-section norm estimates with a verdict.

    The verdict is a numerical heuristic: exact membership cannot be
    certified from finite data.  ``estimates`` are regularized quadratic
    forms (squared-norm scale); ``norm_bound`` is the square root of the
    final estimate when the verdict is Bounded, else None.
    """

    point_counts: tuple
    estimates: tuple
    verdict: str
    norm_bound: float = None


def _is_nested(smaller, larger) -> bool:
    remaining = list(larger)
    for p in smaller:
        for i, q in enumerate(remaining):
            if p == q:
                del remaining[i]
                break
        else:
            return False
    return True


def membership_test(spec, func, nested_sets, eps: float, growth_ratio: float = 10.0, plateau_rtol: float = 0.01) -> MembershipReport:
    """Heuristic RKHS membership decision from nested finite sections.

    Verdict Bounded if the last three estimates agree to ``plateau_rtol``
    relatively; Unbounded if the estimate grew by ``growth_ratio`` or more
    across the last doubling of the point count; Inconclusive otherwise.
    ``eps`` is held fixed across levels so the estimates are nondecreasing.
    """
    sets = [[complex(p) for p in s] for s in nested_sets]
    counts = [len(s) for s in sets]
    if len(sets) < 2:
        raise ValueError("need at least two nested point sets")
    if any(b <= a for a, b in zip(counts, counts[1:])):
        raise ValueError("point counts must be strictly increasing")
    for smaller, larger in zip(sets, sets[1:]):
        if not _is_nested(smaller, larger):
            raise ValueError("point sets must be nested")
    estimates = []
    for pts in sets:
        values = [func(p) for p in pts]
        estimates.append(rkhs_norm_estimate(spec, pts, values, eps))

    verdict = INCONCLUSIVE
    norm_bound = None
    tiny = 1e-12
    if len(estimates) >= 3:
        last3 = estimates[-3:]
        top = max(last3)
        if top <= tiny or (top - min(last3)) <= plateau_rtol * top:
            verdict = BOUNDED
            norm_bound = math.sqrt(max(estimates[-1], 0.0))
    if verdict != BOUNDED:
        half_idx = [i for i, c in enumerate(counts[:-1]) if c <= counts[-1] / 2]
        j = half_idx[-1] if half_idx else len(counts) - 2
        if estimates[-1] >= growth_ratio * max(estimates[j], tiny):
            verdict = UNBOUNDED
    return MembershipReport(tuple(counts), tuple(estimates), verdict, norm_bound)


def diag_bound_scan(spec, compact_sample) -> float:
    """Max of k(z, z) over a sample from a compact subset of the domain."""
    pts = [complex(p) for p in compact_sample]
    if not pts:
        raise ValueError("sample must be nonempty")
    return max(spec(p, p).real for p in pts)
