"""Quadrature verification of the integral-resolution theorems and
construction of explicit reproducing-kernel space elements."""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchCutError
from .flows import ChordalFlowSpec, RadialFlowSpec, chordal_transition, radial_transition
from .kernels import DbrDiskKernel, PickSpaceKernel, gram, membership_test
from .moebius import cayley_to_disk, cayley_to_halfplane, require_disk, require_halfplane
from .representations import AtomicMeasure, PickRepresentation, herglotz_eval, pick_eval
from .sampling import membership_halfplane_sets

GAUSS_LEGENDRE = "gauss-legendre"
COMPOSITE_SIMPSON = "composite-simpson"

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and positive weights discretizing dt on [a, b]."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: str
    a: float
    b: float

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1:
            raise ValueError("nodes and weights must be 1-d arrays of equal length")
        if np.any(weights < 0.0):
            raise ValueError("weights must be nonnegative")
        if np.any(nodes < self.a - WEIGHT_SUM_TOL) or np.any(nodes > self.b + WEIGHT_SUM_TOL):
            raise ValueError("nodes must lie in [a, b]")
        if abs(float(weights.sum()) - (self.b - self.a)) > WEIGHT_SUM_TOL * max(1.0, self.b - self.a):
            raise ValueError("weights must sum to b - a")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)


def gauss_legendre(n: int, a: float, b: float) -> QuadratureRule:
    """Gauss-Legendre rule with n interior nodes on [a, b]."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least 1")
    x, w = np.polynomial.legendre.leggauss(n)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return QuadratureRule(mid + half * x, half * w, GAUSS_LEGENDRE, float(a), float(b))


def composite_simpson(n: int, a: float, b: float) -> QuadratureRule:
    """Composite Simpson rule with n (even) subintervals on [a, b]."""
    n = int(n)
    if n < 2 or n % 2:
        raise ValueError("n must be an even integer >= 2")
    h = (b - a) / n
    nodes = a + h * np.arange(n + 1)
    weights = np.full(n + 1, 2.0)
    weights[1::2] = 4.0
    weights[0] = weights[-1] = 1.0
    return QuadratureRule(nodes, weights * h / 3.0, COMPOSITE_SIMPSON, float(a), float(b))


def flow_rule(flow, nodes_per_segment: int = 64, kind: str = GAUSS_LEGENDRE) -> QuadratureRule:
    """Quadrature over the flow interval with one sub-rule per driver segment,
    so piecewise-constant drivers stay analytic on each sub-rule."""
    if isinstance(flow, RadialFlowSpec):
        lo, hi, driver = flow.a, flow.b, flow.driver
    elif isinstance(flow, ChordalFlowSpec):
        lo, hi, driver = flow.r, flow.s, flow.driver or ()
    else:
        raise TypeError(f"unsupported flow spec {type(flow).__name__}")
    breaks = sorted({lo, hi} | {bp for bp, _ in driver if lo < bp < hi})
    make = gauss_legendre if kind == GAUSS_LEGENDRE else composite_simpson
    pieces = [make(nodes_per_segment, s0, s1) for s0, s1 in zip(breaks, breaks[1:])] or [make(nodes_per_segment, lo, hi)]
    nodes = np.concatenate([p.nodes for p in pieces])
    weights = np.concatenate([p.weights for p in pieces])
    return QuadratureRule(nodes, weights, kind, lo, hi)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one kernel-identity verification."""

    identity_name: str
    sample_pairs: int
    max_abs_err: float
    tol: float
    passed: bool


def _report(name: str, pairs: int, err: float, tol: float) -> IdentityReport:
    return IdentityReport(name, pairs, float(err), float(tol), bool(err <= tol))


def integrated_kernel(b_family, base_kernel, rule: QuadratureRule, lam: complex, z: complex) -> complex:
    """Quadrature of conj(B(x, lam)) B(x, z) k(x, z, lam) over the rule:
    the reproducing kernel of the range space of the integral operator
    f -> integral of B(x, z) f(x, z)."""
    acc = 0.0 + 0.0j
    for x, w in zip(rule.nodes, rule.weights):
        acc += w * b_family(x, lam).conjugate() * b_family(x, z) * base_kernel(x, z, lam)
    return acc


def jb_kernel(kernel_family, b_family, rule: QuadratureRule, lam: complex, z: complex) -> complex:
    """Quadrature of k(x, B(x, z), B(x, lam)): the kernel of the composition
    integral operator f -> integral of f(x, B(x, z))."""
    acc = 0.0 + 0.0j
    for x, w in zip(rule.nodes, rule.weights):
        acc += w * kernel_family(x, b_family(x, z), b_family(x, lam))
    return acc


def _loewner_kernel_value(flow: RadialFlowSpec, t: float, z: complex, w: complex) -> complex:
    mu = flow.driver_measure(t)
    phi_z = herglotz_eval(mu, radial_transition(flow, t, z))
    phi_w = herglotz_eval(mu, radial_transition(flow, t, w))
    return (phi_w.conjugate() + phi_z) / (1.0 - w.conjugate() * z)


def resolution_check(flow: RadialFlowSpec, rule: QuadratureRule, point_pairs, tol: float = 1e-8) -> IdentityReport:
    """Continuous resolution of the de Branges-Rovnyak kernel along a radial
    flow: 1 + integral of conj(B_t(lam)) B_t(mu) k(t, mu, lam) dt equals
    (1 - conj(B_b(lam)) B_b(mu)) / (1 - conj(lam) mu)."""

    def b_family(t, z):
        return radial_transition(flow, t, z)

    def base_kernel(t, z, w):
        return _loewner_kernel_value(flow, t, z, w)

    max_err = 0.0
    for lam, mu in point_pairs:
        lam, mu = require_disk(lam), require_disk(mu)
        lhs = 1.0 + integrated_kernel(b_family, base_kernel, rule, lam, mu)
        b_lam = radial_transition(flow, flow.b, lam)
        b_mu = radial_transition(flow, flow.b, mu)
        rhs = (1.0 - b_lam.conjugate() * b_mu) / (1.0 - lam.conjugate() * mu)
        max_err = max(max_err, abs(lhs - rhs))
    return _report("resolution", len(point_pairs), max_err, tol)


def radial_derivative_identity_check(flow: RadialFlowSpec, t: float, lam: complex, z: complex, h: float = 1e-4, tol: float = 1e-5) -> IdentityReport:
    """d/dt of the normalized kernel quotient (1 - conj(B_t(lam)) B_t(z)) /
    (1 - conj(lam) z) against k(t, z, lam) conj(B_t(lam)) B_t(z), by central
    finite difference; the error is relative with denominator max(1, |RHS|)."""
    if not (h > 0.0):
        raise ValueError("h must be positive")
    if t - h < flow.a or t + h > flow.b:
        raise ValueError(f"step h = {h} too large: [t-h, t+h] must stay in [{flow.a}, {flow.b}]")
    lam, z = require_disk(lam), require_disk(z)
    denom = 1.0 - lam.conjugate() * z

    def quotient(s):
        return (1.0 - radial_transition(flow, s, lam).conjugate() * radial_transition(flow, s, z)) / denom

    fd = (quotient(t + h) - quotient(t - h)) / (2.0 * h)
    b_lam = radial_transition(flow, t, lam)
    b_z = radial_transition(flow, t, z)
    rhs = _loewner_kernel_value(flow, t, z, lam) * b_lam.conjugate() * b_z
    rel = abs(fd - rhs) / max(1.0, abs(rhs))
    return _report("radial-derivative", 1, rel, tol)


def chordal_derivative_identity_check(flow: ChordalFlowSpec, t: float, alpha: complex, z: complex, h: float = 1e-4, tol: float = 1e-5) -> IdentityReport:
    """d/dt of the Pick kernel quotient (B_t(z) - conj(B_t(alpha))) /
    (z - conj(alpha)) against the same quotient divided by
    conj(B_t(alpha)) B_t(z), by central finite difference (relative error).

    Neither denominator can vanish for alpha, z in H: Im(z - conj(alpha)) > 0,
    and B_t maps into H.
    """
    if not (h > 0.0):
        raise ValueError("h must be positive")
    if t - h < flow.r or t + h > flow.s:
        raise ValueError(f"step h = {h} too large: [t-h, t+h] must stay in [{flow.r}, {flow.s}]")
    alpha, z = require_halfplane(alpha), require_halfplane(z)
    denom = z - alpha.conjugate()

    def quotient(s):
        return (chordal_transition(flow, s, z) - chordal_transition(flow, s, alpha).conjugate()) / denom

    fd = (quotient(t + h) - quotient(t - h)) / (2.0 * h)
    b_alpha = chordal_transition(flow, t, alpha)
    b_z = chordal_transition(flow, t, z)
    rhs = quotient(t) / (b_alpha.conjugate() * b_z)
    rel = abs(fd - rhs) / max(1.0, abs(rhs))
    return _report("chordal-derivative", 1, rel, tol)


def dbr_element(flow: RadialFlowSpec, h, lam: complex, rule: QuadratureRule):
    """Evaluable element of the de Branges-Rovnyak space of B_b built from a
    bounded function h on the flow interval (Koebe-driver case):

        F(z) = integral of B_t(z) * (1 - conj(B_t(lam)) B_t(z)) / (1 - conj(lam) z)
               * h(t) / ((1 + conj(B_t(lam))) (1 + B_t(z))) dt.
    """
    lam = require_disk(lam)
    h_fn = h if callable(h) else (lambda _t, _v=float(h): _v)
    nodes = list(rule.nodes)
    weights = list(rule.weights)
    b_lam = [radial_transition(flow, t, lam) for t in nodes]
    h_vals = [float(h_fn(t)) for t in nodes]

    def element(z: complex) -> complex:
        z = require_disk(z)
        denom = 1.0 - lam.conjugate() * z
        acc = 0.0 + 0.0j
        for w, t, bl, hv in zip(weights, nodes, b_lam, h_vals):
            bz = radial_transition(flow, t, z)
            acc += w * bz * ((1.0 - bl.conjugate() * bz) / denom) * (hv / ((1.0 + bl.conjugate()) * (1.0 + bz)))
        return acc

    return element


def koebe_log_element_check(flow: RadialFlowSpec, rule: QuadratureRule, points, tol: float = 1e-8) -> IdentityReport:
    """The h = 1, lam = 0 element of the Koebe flow equals
    log((1 - B_b(z)) / (1 - z)) (principal branch, positivity-guarded)."""
    element = dbr_element(flow, 1.0, 0.0, rule)
    max_err = 0.0
    for z in points:
        z = require_disk(z)
        b_end = radial_transition(flow, flow.b, z)
        if (1.0 - b_end).real <= 0.0 or (1.0 - z).real <= 0.0:
            raise BranchCutError(
                f"log argument off the principal branch at z = {z}: 1 - B_b(z) = {1.0 - b_end}, 1 - z = {1.0 - z}"
            )
        closed = cmath.log((1.0 - b_end) / (1.0 - z))
        max_err = max(max_err, abs(element(z) - closed))
    return _report("koebe-log", len(points), max_err, tol)


def cayley_isometry_check(psi, point_pairs, gram_points=None, tol: float = 1e-10) -> IdentityReport:
    """Transport of the Pick kernel through the Cayley transform.

    With phi = T o psi o T^{-1} and alpha = T(lam), beta = T(mu), checks

        (phi(beta) - conj(phi(alpha))) / (beta - conj(alpha))
          = (1 - conj(lam))/(1 - conj(psi(lam)))
            * (1 - mu)/(1 - psi(mu))
            * (1 - conj(psi(lam)) psi(mu)) / (1 - conj(lam) mu)

    pointwise, and the matching Gram identity: scaling the Pick Gram of the
    mapped kernel columns reproduces the de Branges-Rovnyak Gram of psi.
    """

    def phi(w):
        return cayley_to_halfplane(psi(cayley_to_disk(w)))

    def scale(p):
        v = psi(p)
        if abs(1.0 - v) <= 1e-12:
            raise ValueError(f"psi({p}) = 1 degeneracy")
        return (1.0 - v.conjugate()) / (1.0 - p.conjugate())

    max_err = 0.0
    for lam, mu in point_pairs:
        lam, mu = require_disk(lam), require_disk(mu)
        alpha, beta = cayley_to_halfplane(lam), cayley_to_halfplane(mu)
        psi_lam, psi_mu = psi(lam), psi(mu)
        if abs(1.0 - psi_lam) <= 1e-12 or abs(1.0 - psi_mu) <= 1e-12:
            raise ValueError("psi value 1 degeneracy in point pair")
        lhs = (phi(beta) - phi(alpha).conjugate()) / (beta - alpha.conjugate())
        rhs = (
            (1.0 - lam.conjugate())
            / (1.0 - psi_lam.conjugate())
            * (1.0 - mu)
            / (1.0 - psi_mu)
            * (1.0 - psi_lam.conjugate() * psi_mu)
            / (1.0 - lam.conjugate() * mu)
        )
        max_err = max(max_err, abs(lhs - rhs))

    if gram_points is None:
        seen = []
        for pair in point_pairs:
            for p in pair:
                if all(abs(p - q) > 1e-12 for q in seen):
                    seen.append(complex(p))
        gram_points = seen[:6]
    pts = [require_disk(p) for p in gram_points]
    dbr = gram(DbrDiskKernel(psi), pts).matrix
    pick = gram(PickSpaceKernel(phi), [cayley_to_halfplane(p) for p in pts]).matrix
    c = np.array([scale(p) for p in pts])
    mapped = np.conj(c)[:, None] * pick * c[None, :]
    gram_err = float(np.max(np.abs(mapped - dbr))) if pts else 0.0
    max_err = max(max_err, gram_err)
    return _report("cayley-isometry", len(point_pairs), max_err, tol)


def pick_constant_element(psi, rep: PickRepresentation):
    """Preimage (1 - psi(z)) / (1 - z) of the constant 1 under the Cayley
    isometry; an element of the de Branges-Rovnyak space of psi when the
    linear coefficient c of the representation is nonzero."""
    if rep.c == 0.0:
        raise ValueError("requires a representation with c != 0")

    def element(z: complex) -> complex:
        z = require_disk(z)
        return (1.0 - psi(z)) / (1.0 - z)

    return element


def nevanlinna_split_check(rep: PickRepresentation, point_pairs, tol: float = 1e-12) -> IdentityReport:
    """The Pick kernel of a Nevanlinna representation splits as
    c + (1/pi) sum of w_t / ((t - conj(w)) (t - z)); exact for atoms."""
    max_err = 0.0
    for z, w in point_pairs:
        z, w = require_halfplane(z), require_halfplane(w)
        lhs = (pick_eval(rep, z) - pick_eval(rep, w).conjugate()) / (z - w.conjugate())
        acc = 0.0 + 0.0j
        for t, wt in rep.mu.atoms:
            t = t.real
            acc += wt / ((t - w.conjugate()) * (t - z))
        rhs = rep.c + acc / math.pi
        max_err = max(max_err, abs(lhs - rhs))
    return _report("nevanlinna-split", len(point_pairs), max_err, tol)


def chordal_exp_kernel_check(flow: ChordalFlowSpec, rule: QuadratureRule, point_pairs, tol: float = 1e-8) -> IdentityReport:
    """Exponential kernel of the basic slit flow:
    exp(integral of dt / (conj(B_t(alpha)) B_t(z))) equals
    (B_b(z) - conj(B_b(alpha))) / (z - conj(alpha))."""
    max_err = 0.0
    for alpha, z in point_pairs:
        alpha, z = require_halfplane(alpha), require_halfplane(z)
        acc = 0.0 + 0.0j
        for t, w in zip(rule.nodes, rule.weights):
            acc += w / (chordal_transition(flow, t, alpha).conjugate() * chordal_transition(flow, t, z))
        lhs = cmath.exp(acc)
        b_alpha = chordal_transition(flow, flow.s, alpha)
        b_z = chordal_transition(flow, flow.s, z)
        rhs = (b_z - b_alpha.conjugate()) / (z - alpha.conjugate())
        max_err = max(max_err, abs(lhs - rhs))
    return _report("chordal-exp-kernel", len(point_pairs), max_err, tol)


def chordal_exp_element_check(
    flow: ChordalFlowSpec,
    rule: QuadratureRule,
    points,
    tol: float = 1e-8,
    nested_sets=None,
    eps: float = 1e-8,
    growth_ratio: float = 10.0,
    seed: int = 1,
):
    """Pointwise identity exp(integral of dt / B_t(z)) = exp(z - B_b(z)),
    then a membership probe of exp(z - B_b(z)) in the Pick space of B_b.

    Returns (IdentityReport, MembershipReport).
    """
    max_err = 0.0
    for z in points:
        z = require_halfplane(z)
        acc = 0.0 + 0.0j
        for t, w in zip(rule.nodes, rule.weights):
            acc += w / chordal_transition(flow, t, z)
        lhs = cmath.exp(acc)
        rhs = cmath.exp(z - chordal_transition(flow, flow.s, z))
        max_err = max(max_err, abs(lhs - rhs))
    report = _report("chordal-exp-element", len(points), max_err, tol)

    def b_end(z):
        return chordal_transition(flow, flow.s, z)

    def candidate(z):
        return cmath.exp(z - b_end(z))

    if nested_sets is None:
        nested_sets = membership_halfplane_sets((16, 32, 64, 128), seed)
    membership = membership_test(PickSpaceKernel(b_end), candidate, nested_sets, eps, growth_ratio)
    return report, membership


def herglotz_mixture_check(mu: AtomicMeasure, point_pairs, tol: float = 1e-12) -> IdentityReport:
    """Mixing elementary Herglotz kernels with the atom weights reproduces
    the Herglotz kernel of the mixture; exact for atomic measures."""
    if not (mu.on_unit_circle() and mu.is_probability()):
        raise ValueError("mu must be a probability measure on the unit circle")
    max_err = 0.0
    for z, lam in point_pairs:
        z, lam = require_disk(z), require_disk(lam)
        denom = 1.0 - lam.conjugate() * z
        acc = 0.0 + 0.0j
        for xi, w in mu.atoms:
            phi_z = (1.0 + xi * z) / (1.0 - xi * z)
            phi_lam = (1.0 + xi * lam) / (1.0 - xi * lam)
            acc += w * (phi_lam.conjugate() + phi_z) / denom
        phi_mu_z = herglotz_eval(mu, z)
        phi_mu_lam = herglotz_eval(mu, lam)
        rhs = (phi_mu_lam.conjugate() + phi_mu_z) / denom
        max_err = max(max_err, abs(acc - rhs))
    return _report("herglotz-mixture", len(point_pairs), max_err, tol)


def paley_wiener_reconstruction_check(bandwidth: float, rule: QuadratureRule, point_pairs, tol: float = 1e-10) -> IdentityReport:
    """Time-limited Fourier quadrature over [-A, A] reproduces the sinc
    kernel sin(2 pi A (z - conj(lam))) / (pi (z - conj(lam)))."""
    from .kernels import PaleyWienerKernel

    if abs(rule.a + bandwidth) > 1e-12 or abs(rule.b - bandwidth) > 1e-12:
        raise ValueError("rule must cover [-A, A]")
    kernel = PaleyWienerKernel(bandwidth)

    def b_family(t, z):
        return cmath.exp(-2j * math.pi * z * t)

    max_err = 0.0
    for lam, z in point_pairs:
        lhs = integrated_kernel(b_family, lambda _t, _z, _w: 1.0, rule, lam, z)
        max_err = max(max_err, abs(lhs - kernel(z, lam)))
    return _report("pw-reconstruction", len(point_pairs), max_err, tol)
