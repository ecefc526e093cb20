"""Radial and chordal Loewner transition maps.

Each family is evaluated either by closed form (Koebe semigroup on the
disk, basic slit map on the half-plane) or by fixed-step classical RK4
integration of the corresponding Loewner ODE.  Drivers are piecewise
constant in time; RK4 steps are adjusted per driver segment so segment
breakpoints always coincide with step boundaries.
"""

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, FlowEscapeError
from .moebius import require_disk, require_halfplane
from .representations import DIRAC_MINUS_ONE, AtomicMeasure

CLOSED_FORM = "closed-form"
RUNGE_KUTTA = "rk4"

# Abort (never clamp) when a trajectory gets this close to the boundary:
# silent clamping would corrupt every downstream kernel check.
RADIAL_ESCAPE_MARGIN = 1e-9
CHORDAL_ESCAPE_MARGIN = 1e-9

_TIME_SLACK = 1e-12


@dataclass(frozen=True)
class OdeConfig:
    """Fixed-step classical 4th-order Runge-Kutta configuration."""

    step: float = 1e-3

    def __post_init__(self):
        if not (math.isfinite(self.step) and self.step > 0.0):
            raise ValueError(f"step = {self.step} must be positive and finite")


def _validate_driver(driver, start: float, on_circle: bool):
    driver = tuple((float(bp), mu) for bp, mu in driver)
    if not driver:
        raise ValueError("driver needs at least one (breakpoint, measure) segment")
    breakpoints = [bp for bp, _ in driver]
    if any(t1 <= t0 for t0, t1 in zip(breakpoints, breakpoints[1:])):
        raise ValueError("driver breakpoints must be strictly increasing")
    if breakpoints[0] > start + _TIME_SLACK:
        raise ValueError(f"first driver breakpoint {breakpoints[0]} must cover the interval start {start}")
    for _, mu in driver:
        if not isinstance(mu, AtomicMeasure):
            raise ValueError("driver segments must carry AtomicMeasure values")
        if on_circle:
            if not mu.on_unit_circle():
                raise ValueError("radial driver measures must live on the unit circle")
            if not mu.is_probability():
                raise ValueError("radial driver measures must be probability measures")
        elif not mu.on_real_line():
            raise ValueError("chordal driver measures must live on the real line")
    return driver


def _is_dirac_minus_one(mu: AtomicMeasure) -> bool:
    return (
        len(mu.atoms) == 1
        and abs(mu.atoms[0][0] - (-1.0)) <= 1e-12
        and abs(mu.atoms[0][1] - 1.0) <= 1e-12
    )


@dataclass(frozen=True)
class RadialFlowSpec:
    """Radial Loewner transition family B_{a t} on the unit disk.

    ``driver`` is a sorted tuple of (breakpoint, probability measure on the
    circle); the measure at the k-th breakpoint applies until the next one.
    The closed-form backend is only valid for the Koebe semigroup, whose
    driver is identically the Dirac measure at -1.
    """

    a: float
    b: float
    driver: tuple
    backend: str = CLOSED_FORM
    ode: OdeConfig = field(default_factory=OdeConfig)

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if not (0.0 <= self.a <= self.b) or not math.isfinite(self.b):
            raise ValueError(f"interval [{self.a}, {self.b}] must satisfy 0 <= a <= b < inf")
        object.__setattr__(self, "driver", _validate_driver(self.driver, self.a, on_circle=True))
        if self.backend not in (CLOSED_FORM, RUNGE_KUTTA):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.backend == CLOSED_FORM and not all(_is_dirac_minus_one(mu) for _, mu in self.driver):
            raise ValueError("closed-form radial backend requires the Koebe driver (Dirac at -1)")
        if self.backend == RUNGE_KUTTA and self.b > self.a and self.ode.step > (self.b - self.a) + _TIME_SLACK:
            raise ValueError("ODE step exceeds the flow interval")

    @classmethod
    def koebe(cls, a: float, b: float, backend: str = CLOSED_FORM, ode: OdeConfig = None) -> "RadialFlowSpec":
        return cls(a, b, ((float(a), DIRAC_MINUS_ONE),), backend, ode or OdeConfig())

    def driver_measure(self, t: float) -> AtomicMeasure:
        chosen = self.driver[0][1]
        for bp, mu in self.driver:
            if bp <= t + _TIME_SLACK:
                chosen = mu
        return chosen


@dataclass(frozen=True)
class ChordalFlowSpec:
    """Chordal Loewner transition family B_{r s} on the upper half-plane.

    ``driver`` is either None (the basic slit case, a Dirac measure at 0)
    or a sorted tuple of (breakpoint, measure on the real line).  The
    closed-form backend is only valid for the basic slit.
    """

    r: float
    s: float
    driver: tuple = None
    backend: str = CLOSED_FORM
    ode: OdeConfig = field(default_factory=OdeConfig)

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "s", float(self.s))
        if not (0.0 <= self.r <= self.s) or not math.isfinite(self.s):
            raise ValueError(f"interval [{self.r}, {self.s}] must satisfy 0 <= r <= s < inf")
        if self.driver is not None:
            object.__setattr__(self, "driver", _validate_driver(self.driver, self.r, on_circle=False))
        if self.backend not in (CLOSED_FORM, RUNGE_KUTTA):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.backend == CLOSED_FORM and self.driver is not None:
            raise ValueError("closed-form chordal backend requires the basic slit driver (None)")
        if self.backend == RUNGE_KUTTA and self.s > self.r and self.ode.step > (self.s - self.r) + _TIME_SLACK:
            raise ValueError("ODE step exceeds the flow interval")

    @classmethod
    def basic_slit(cls, r: float, s: float, backend: str = CLOSED_FORM, ode: OdeConfig = None) -> "ChordalFlowSpec":
        return cls(r, s, None, backend, ode or OdeConfig())

    def driver_measure(self, t: float) -> AtomicMeasure:
        if self.driver is None:
            return AtomicMeasure.dirac(0.0)
        chosen = self.driver[0][1]
        for bp, mu in self.driver:
            if bp <= t + _TIME_SLACK:
                chosen = mu
        return chosen


def koebe_eval(t: float, z: complex) -> complex:
    """Koebe function e^t z / (1 - z)^2 at z in D."""
    z = require_disk(z)
    return math.exp(float(t)) * z / (1.0 - z) ** 2


def sqrt_halfplane(w: complex) -> complex:
    """Square root branch mapping into the upper half-plane: i * principal_sqrt(-w).

    Continuous along the slit flow because z^2 - 2*tau never lies on
    [0, inf) for z in H and tau >= 0, keeping -w off the principal cut.
    """
    return 1j * cmath.sqrt(-complex(w))


def _koebe_inverse(u: complex) -> complex:
    # Rationalized inverse of B/(1-B)^2 = u; picks the branch with B(0) = 0
    # and avoids catastrophic cancellation near u = 0.  The Koebe image
    # omits (-inf, -1/4], so 1 + 4u stays off the principal cut.
    return 2.0 * u / (1.0 + 2.0 * u + cmath.sqrt(1.0 + 4.0 * u))


def _rk4_step(y: complex, h: float, f) -> complex:
    k1 = f(y)
    k2 = f(y + 0.5 * h * k1)
    k3 = f(y + 0.5 * h * k2)
    k4 = f(y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _segments(driver, t0: float, t1: float):
    out = []
    for i, (bp, mu) in enumerate(driver):
        lo = max(bp, t0)
        hi = t1 if i + 1 == len(driver) else min(driver[i + 1][0], t1)
        if hi > lo:
            out.append((lo, hi, mu))
    return out


def _herglotz_field(mu: AtomicMeasure):
    atoms = mu.atoms

    def f(w: complex) -> complex:
        phi = sum(wt * (1.0 + xi * w) / (1.0 - xi * w) for xi, wt in atoms)
        return -w * phi

    return f


def _chordal_field(mu: AtomicMeasure):
    atoms = mu.atoms

    def f(w: complex) -> complex:
        return sum(wt / (xi.real - w) for xi, wt in atoms)

    return f


def _integrate(z, segments, field_of, step, escaped, what):
    y = z
    for lo, hi, mu in segments:
        f = field_of(mu)
        n = max(1, math.ceil((hi - lo) / step - _TIME_SLACK))
        h = (hi - lo) / n
        for _ in range(n):
            try:
                y = _rk4_step(y, h, f)
            except ZeroDivisionError:
                raise FlowEscapeError(f"{what} trajectory from {z} hit a driver pole") from None
            if escaped(y):
                raise FlowEscapeError(f"{what} trajectory from {z} left the domain near {y}")
    return y


def radial_transition(spec: RadialFlowSpec, t: float, z: complex) -> complex:
    """Transition map B_{a t}(z) of a radial flow, for t in [a, b] and z in D."""
    t = float(t)
    if not (spec.a - _TIME_SLACK <= t <= spec.b + _TIME_SLACK):
        raise DomainError(f"t = {t} outside flow interval [{spec.a}, {spec.b}]")
    t = min(max(t, spec.a), spec.b)
    z = require_disk(z)
    if t <= spec.a:
        return z
    if spec.backend == CLOSED_FORM:
        u = math.exp(spec.a - t) * z / (1.0 - z) ** 2
        return _koebe_inverse(u)
    return _integrate(
        z,
        _segments(spec.driver, spec.a, t),
        _herglotz_field,
        spec.ode.step,
        lambda y: abs(y) >= 1.0 - RADIAL_ESCAPE_MARGIN,
        "radial",
    )


def chordal_transition(spec: ChordalFlowSpec, s: float, z: complex) -> complex:
    """Transition map B_{r s}(z) of a chordal flow, for s in [r, s_max] and z in H."""
    s = float(s)
    if not (spec.r - _TIME_SLACK <= s <= spec.s + _TIME_SLACK):
        raise DomainError(f"s = {s} outside flow interval [{spec.r}, {spec.s}]")
    s = min(max(s, spec.r), spec.s)
    z = require_halfplane(z)
    if s <= spec.r:
        return z
    if spec.backend == CLOSED_FORM:
        return sqrt_halfplane(z * z - 2.0 * (s - spec.r))
    driver = spec.driver if spec.driver is not None else ((spec.r, AtomicMeasure.dirac(0.0)),)
    return _integrate(
        z,
        _segments(driver, spec.r, s),
        _chordal_field,
        spec.ode.step,
        lambda y: y.imag <= CHORDAL_ESCAPE_MARGIN,
        "chordal",
    )


def flow_trace(spec, z: complex, n_samples: int):
    """Equally spaced samples (t, B_t(z)) along the flow interval."""
    n_samples = int(n_samples)
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    if isinstance(spec, RadialFlowSpec):
        lo, hi, transition = spec.a, spec.b, radial_transition
    elif isinstance(spec, ChordalFlowSpec):
        lo, hi, transition = spec.r, spec.s, chordal_transition
    else:
        raise TypeError(f"unsupported flow spec {type(spec).__name__}")
    times = [lo + (hi - lo) * i / (n_samples - 1) for i in range(n_samples)]
    return [(t, transition(spec, t, z)) for t in times]
