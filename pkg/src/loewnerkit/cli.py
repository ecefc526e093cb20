"""Command-line suite runner, configuration loader, and report/trace emitter.

Exit codes: 0 all checks passed, 2 configuration/schema error, 3 numerical
failure (a failed check, flow escape, or solver breakdown; diagnostics are
still written to the report).  Reports are JSON with every float serialized
at 17 significant digits; identical (config, seed) pairs produce identical
reports apart from the wall-clock field.
"""

import argparse
import cmath
import json
import math
import sys
import time
from dataclasses import dataclass

from . import __version__
from .errors import ConfigError, FlowEscapeError, LoewnerkitError
from .expansions import (
    cayley_isometry_check,
    chordal_derivative_identity_check,
    chordal_exp_element_check,
    chordal_exp_kernel_check,
    gauss_legendre,
    herglotz_mixture_check,
    koebe_log_element_check,
    nevanlinna_split_check,
    paley_wiener_reconstruction_check,
    radial_derivative_identity_check,
    resolution_check,
)
from .flows import (
    CLOSED_FORM,
    RUNGE_KUTTA,
    ChordalFlowSpec,
    OdeConfig,
    RadialFlowSpec,
    chordal_transition,
    radial_transition,
)
from .kernels import (
    BOUNDED,
    UNBOUNDED,
    DbrDiskKernel,
    HerglotzSpaceKernel,
    LoewnerTimeKernel,
    PaleyWienerKernel,
    PickSpaceKernel,
    gram,
    membership_test,
    psd_check,
)
from .moebius import cayley_to_disk, cayley_to_halfplane
from .representations import AtomicMeasure, PickRepresentation, pick_eval
from .sampling import (
    DISK_RMAX_SAFE,
    HALFPLANE_RECT_SAFE,
    disk_pairs,
    disk_points,
    halfplane_pairs,
    halfplane_points,
    membership_disk_sets,
    membership_halfplane_sets,
    point_pairs,
    rect_points,
)

SCHEMA_VERSION = 1

SUITES = (
    "cayley-isometry",
    "chordal-derivative",
    "chordal-exp-element",
    "chordal-exp-kernel",
    "herglotz-mixture",
    "kernel-psd",
    "koebe-log",
    "membership",
    "nevanlinna-split",
    "pw-reconstruction",
    "radial-derivative",
    "resolution",
)

DEFAULT_TOLS = {
    "cayley-isometry": 1e-10,
    "chordal-derivative": 1e-5,
    "chordal-exp-element": 1e-8,
    "chordal-exp-kernel": 1e-8,
    "herglotz-mixture": 1e-12,
    "kernel-psd": 1e-8,
    "koebe-log": 1e-8,
    "membership": 0.0,
    "nevanlinna-split": 1e-12,
    "pw-reconstruction": 1e-10,
    "radial-derivative": 1e-5,
    "resolution": 1e-8,
}

MEMBERSHIP_SIZES = (16, 32, 64, 128)
MEMBERSHIP_EPS = 1e-8


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    seed: int = 1
    a: float = 0.0
    b: float = 1.0
    nodes: int = 64
    tols: dict = None
    herglotz_atoms: tuple = None
    pick_rep: dict = None
    corrupt_psd: bool = False

    def tol_for(self, suite: str) -> float:
        if self.tols and suite in self.tols:
            return float(self.tols[suite])
        return DEFAULT_TOLS[suite]

    def echo(self) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "a": self.a,
            "b": self.b,
            "nodes": self.nodes,
        }
        if self.tols:
            out["tol"] = {k: self.tols[k] for k in sorted(self.tols)}
        if self.herglotz_atoms is not None:
            out["herglotz_atoms"] = [list(atom) for atom in self.herglotz_atoms]
        if self.pick_rep is not None:
            out["pick_rep"] = self.pick_rep
        if self.corrupt_psd:
            out["corrupt_psd"] = True
        return out


def _fail(msg: str):
    raise ConfigError(msg)


def _check_number(value, name, minimum=None):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        _fail(f"{name} must be a finite number, got {value!r}")
    if minimum is not None and value < minimum:
        _fail(f"{name} must be >= {minimum}, got {value}")
    return float(value)


def validate_config(raw: dict) -> SuiteConfig:
    """Schema-check a raw config mapping and fill in defaults."""
    if not isinstance(raw, dict):
        _fail("config must be a JSON object")
    known = {"schema", "suite", "seed", "a", "b", "nodes", "tol", "herglotz_atoms", "pick_rep", "corrupt_psd"}
    unknown = set(raw) - known
    if unknown:
        _fail(f"unknown config keys: {sorted(unknown)}")
    if "schema" in raw and raw["schema"] != SCHEMA_VERSION:
        _fail(f"unsupported schema version {raw['schema']!r}")

    suite = raw.get("suite")
    if suite not in SUITES and suite != "all":
        _fail(f"suite must be one of {SUITES + ('all',)}, got {suite!r}")

    seed = raw.get("seed", 1)
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        _fail(f"seed must be a nonnegative integer, got {seed!r}")

    a = _check_number(raw.get("a", 0.0), "a", minimum=0.0)
    b = _check_number(raw.get("b", 1.0), "b", minimum=a)

    nodes = raw.get("nodes", 64)
    if isinstance(nodes, bool) or not isinstance(nodes, int) or nodes < 1:
        _fail(f"nodes must be a positive integer, got {nodes!r}")

    tols = None
    if "tol" in raw:
        tol = raw["tol"]
        if isinstance(tol, (int, float)) and not isinstance(tol, bool):
            value = _check_number(tol, "tol", minimum=0.0)
            tols = {name: value for name in SUITES}
        elif isinstance(tol, dict):
            tols = {}
            for key, value in tol.items():
                if key not in SUITES:
                    _fail(f"tol override names unknown suite {key!r}")
                tols[key] = _check_number(value, f"tol[{key}]", minimum=0.0)
        else:
            _fail("tol must be a number or an object of per-suite numbers")

    herglotz_atoms = None
    if "herglotz_atoms" in raw:
        atoms = raw["herglotz_atoms"]
        if not isinstance(atoms, list) or not atoms:
            _fail("herglotz_atoms must be a nonempty list of [re, im, weight] triples")
        parsed = []
        for atom in atoms:
            if not isinstance(atom, list) or len(atom) != 3:
                _fail(f"herglotz atom {atom!r} must be a [re, im, weight] triple")
            re, im, w = (_check_number(v, "herglotz atom entry") for v in atom)
            parsed.append((re, im, w))
        herglotz_atoms = tuple(parsed)

    pick_rep = None
    if "pick_rep" in raw:
        rep = raw["pick_rep"]
        if not isinstance(rep, dict) or set(rep) != {"b", "c", "atoms"}:
            _fail("pick_rep must be an object with keys b, c, atoms")
        rep_b = _check_number(rep["b"], "pick_rep.b")
        rep_c = _check_number(rep["c"], "pick_rep.c", minimum=0.0)
        if not isinstance(rep["atoms"], list):
            _fail("pick_rep.atoms must be a list of [t, weight] pairs")
        rep_atoms = []
        for atom in rep["atoms"]:
            if not isinstance(atom, list) or len(atom) != 2:
                _fail(f"pick_rep atom {atom!r} must be a [t, weight] pair")
            t, w = (_check_number(v, "pick_rep atom entry") for v in atom)
            rep_atoms.append([t, w])
        pick_rep = {"b": rep_b, "c": rep_c, "atoms": rep_atoms}

    corrupt = raw.get("corrupt_psd", False)
    if not isinstance(corrupt, bool):
        _fail("corrupt_psd must be a boolean")

    return SuiteConfig(suite, seed, a, b, nodes, tols, herglotz_atoms, pick_rep, corrupt)


# --- suite runners -----------------------------------------------------

def _identity_entry(suite: str, report) -> dict:
    return {
        "suite": suite,
        "kind": "identity",
        "name": report.identity_name,
        "sample_pairs": report.sample_pairs,
        "max_abs_err": report.max_abs_err,
        "tol": report.tol,
        "pass": report.passed,
    }


def _membership_entry(suite: str, name: str, report, expected: str) -> dict:
    entry = {
        "suite": suite,
        "kind": "membership",
        "name": name,
        "point_counts": list(report.point_counts),
        "estimates": list(report.estimates),
        "verdict": report.verdict,
        "expected": expected,
        "pass": report.verdict == expected,
    }
    if report.norm_bound is not None:
        entry["norm_bound"] = report.norm_bound
    return entry


def _koebe_b_end(cfg):
    flow = RadialFlowSpec.koebe(cfg.a, cfg.b)

    def b_end(z):
        return radial_transition(flow, cfg.b, z)

    return flow, b_end


def _pick_phi(w):
    return w - 1.0 / w


def _pick_psi(z):
    return cayley_to_disk(_pick_phi(cayley_to_halfplane(z)))


def _configured_pick_rep(cfg, fallback: PickRepresentation) -> PickRepresentation:
    if cfg.pick_rep is None:
        return fallback
    atoms = tuple((t, w) for t, w in cfg.pick_rep["atoms"])
    return PickRepresentation(cfg.pick_rep["b"], cfg.pick_rep["c"], AtomicMeasure(atoms))


def _default_herglotz_measure(cfg) -> AtomicMeasure:
    if cfg.herglotz_atoms is None:
        return AtomicMeasure(((1.0, 0.5), (-1.0, 0.3), (cmath.exp(0.7j), 0.2)))
    return AtomicMeasure(tuple((complex(re, im), w) for re, im, w in cfg.herglotz_atoms))


def _suite_kernel_psd(cfg: SuiteConfig):
    tol = cfg.tol_for("kernel-psd")
    flow, b_end = _koebe_b_end(cfg)
    mid_t = 0.5 * (cfg.a + cfg.b)
    catalog = (
        ("dbr-koebe", DbrDiskKernel(b_end), "disk"),
        ("herglotz-phi-minus-one", HerglotzSpaceKernel(lambda z: (1.0 - z) / (1.0 + z)), "disk"),
        ("pick-cayley-image", PickSpaceKernel(_pick_phi), "halfplane"),
        ("paley-wiener", PaleyWienerKernel(1.0), "plane"),
        ("loewner-time", LoewnerTimeKernel(flow, mid_t), "disk"),
    )
    entries = []
    for name, spec, domain in catalog:
        worst = math.inf
        passed = True
        for offset in range(5):
            seed = cfg.seed + offset
            if domain == "disk":
                pts = disk_points(8, seed)
            elif domain == "halfplane":
                pts = halfplane_points(8, seed)
            else:
                pts = rect_points(8, seed, (-1.0, 1.0, -0.35, 0.35))
            matrix = gram(spec, pts).matrix
            if cfg.corrupt_psd:
                matrix = matrix.copy()
                matrix[0, 0] = -matrix[0, 0]  # test hook: negate one entry
            min_eig, ok = psd_check(matrix, tol)
            worst = min(worst, min_eig)
            passed = passed and ok
        entries.append(
            {
                "suite": "kernel-psd",
                "kind": "psd",
                "name": name + ("-corrupted" if cfg.corrupt_psd else ""),
                "size": 8,
                "seeds": 5,
                "min_eigenvalue": worst,
                "tol": tol,
                "pass": passed,
            }
        )
    return entries


def _suite_resolution(cfg: SuiteConfig):
    flow, _ = _koebe_b_end(cfg)
    rule = gauss_legendre(cfg.nodes, cfg.a, cfg.b)
    pairs = disk_pairs(10, cfg.seed, rmax=DISK_RMAX_SAFE)
    return [_identity_entry("resolution", resolution_check(flow, rule, pairs, cfg.tol_for("resolution")))]


def _suite_radial_derivative(cfg: SuiteConfig):
    flow, _ = _koebe_b_end(cfg)
    tol = cfg.tol_for("radial-derivative")
    h = 1e-4
    pairs = disk_pairs(20, cfg.seed, rmax=DISK_RMAX_SAFE)
    span = max(cfg.b - cfg.a - 2.0 * h, 0.0)
    max_err = 0.0
    for i, (lam, z) in enumerate(pairs):
        t = cfg.a + h + span * (i + 0.5) / len(pairs)
        report = radial_derivative_identity_check(flow, t, lam, z, h, tol)
        max_err = max(max_err, report.max_abs_err)
    return [
        {
            "suite": "radial-derivative",
            "kind": "identity",
            "name": "radial-derivative",
            "sample_pairs": len(pairs),
            "max_abs_err": max_err,
            "tol": tol,
            "pass": max_err <= tol,
        }
    ]


def _suite_chordal_derivative(cfg: SuiteConfig):
    flow = ChordalFlowSpec.basic_slit(cfg.a, cfg.b)
    tol = cfg.tol_for("chordal-derivative")
    h = 1e-4
    pairs = halfplane_pairs(20, cfg.seed, rect=HALFPLANE_RECT_SAFE)
    span = max(cfg.b - cfg.a - 2.0 * h, 0.0)
    max_err = 0.0
    for i, (alpha, z) in enumerate(pairs):
        t = cfg.a + h + span * (i + 0.5) / len(pairs)
        report = chordal_derivative_identity_check(flow, t, alpha, z, h, tol)
        max_err = max(max_err, report.max_abs_err)
    return [
        {
            "suite": "chordal-derivative",
            "kind": "identity",
            "name": "chordal-derivative",
            "sample_pairs": len(pairs),
            "max_abs_err": max_err,
            "tol": tol,
            "pass": max_err <= tol,
        }
    ]


def _suite_koebe_log(cfg: SuiteConfig):
    flow, _ = _koebe_b_end(cfg)
    rule = gauss_legendre(cfg.nodes, cfg.a, cfg.b)
    pts = disk_points(20, cfg.seed, rmax=DISK_RMAX_SAFE)
    return [_identity_entry("koebe-log", koebe_log_element_check(flow, rule, pts, cfg.tol_for("koebe-log")))]


def _suite_cayley_isometry(cfg: SuiteConfig):
    pairs = disk_pairs(10, cfg.seed, rmax=DISK_RMAX_SAFE)
    gram_pts = disk_points(6, cfg.seed + 100, rmax=DISK_RMAX_SAFE)
    report = cayley_isometry_check(_pick_psi, pairs, gram_pts, cfg.tol_for("cayley-isometry"))
    return [_identity_entry("cayley-isometry", report)]


def _suite_nevanlinna_split(cfg: SuiteConfig):
    rep = _configured_pick_rep(cfg, PickRepresentation(1.0, 2.0, AtomicMeasure.dirac(1.0, math.pi)))
    pairs = halfplane_pairs(10, cfg.seed)
    return [_identity_entry("nevanlinna-split", nevanlinna_split_check(rep, pairs, cfg.tol_for("nevanlinna-split")))]


def _suite_herglotz_mixture(cfg: SuiteConfig):
    mu = _default_herglotz_measure(cfg)
    pairs = disk_pairs(10, cfg.seed)
    return [_identity_entry("herglotz-mixture", herglotz_mixture_check(mu, pairs, cfg.tol_for("herglotz-mixture")))]


def _suite_chordal_exp_kernel(cfg: SuiteConfig):
    flow = ChordalFlowSpec.basic_slit(cfg.a, cfg.b)
    rule = gauss_legendre(cfg.nodes, cfg.a, cfg.b)
    tol = cfg.tol_for("chordal-exp-kernel")
    pairs = halfplane_pairs(10, cfg.seed, rect=HALFPLANE_RECT_SAFE)
    entries = [_identity_entry("chordal-exp-kernel", chordal_exp_kernel_check(flow, rule, pairs, tol))]
    # Hand-checked anchor: alpha = z = i on [0, 1] gives sqrt(3) on both sides.
    anchor_flow = ChordalFlowSpec.basic_slit(0.0, 1.0)
    anchor_rule = gauss_legendre(cfg.nodes, 0.0, 1.0)
    anchor = chordal_exp_kernel_check(anchor_flow, anchor_rule, [(1j, 1j)], 1e-10)
    entry = _identity_entry("chordal-exp-kernel", anchor)
    entry["name"] = "chordal-exp-kernel-anchor"
    entries.append(entry)
    return entries


def _suite_chordal_exp_element(cfg: SuiteConfig):
    flow = ChordalFlowSpec.basic_slit(cfg.a, cfg.b)
    rule = gauss_legendre(cfg.nodes, cfg.a, cfg.b)
    pts = halfplane_points(20, cfg.seed, rect=HALFPLANE_RECT_SAFE)
    sets = membership_halfplane_sets(MEMBERSHIP_SIZES, cfg.seed)
    identity, membership = chordal_exp_element_check(
        flow, rule, pts, cfg.tol_for("chordal-exp-element"), nested_sets=sets, eps=MEMBERSHIP_EPS
    )
    return [
        _identity_entry("chordal-exp-element", identity),
        _membership_entry("chordal-exp-element", "exp-slit-element", membership, BOUNDED),
    ]


def _suite_membership(cfg: SuiteConfig):
    flow, b_end = _koebe_b_end(cfg)
    sets = membership_disk_sets(MEMBERSHIP_SIZES, cfg.seed)
    dbr = DbrDiskKernel(b_end)

    def log_element(z):
        return cmath.log((1.0 - b_end(z)) / (1.0 - z))

    def reciprocal_pole(z):
        return 1.0 / (1.0 - z)

    entries = [
        _membership_entry(
            "membership",
            "koebe-log-element",
            membership_test(dbr, log_element, sets, MEMBERSHIP_EPS),
            BOUNDED,
        ),
        _membership_entry(
            "membership",
            "reciprocal-pole",
            membership_test(dbr, reciprocal_pole, sets, MEMBERSHIP_EPS),
            UNBOUNDED,
        ),
    ]

    rep = _configured_pick_rep(cfg, PickRepresentation(0.0, 1.0, AtomicMeasure.dirac(0.0, math.pi)))
    if rep.c == 0.0:
        entries.append(
            {
                "suite": "membership",
                "kind": "error",
                "name": "pick-constant-element",
                "error": "pick_rep.c must be nonzero for the constant element",
                "pass": False,
            }
        )
        return entries

    def psi_of_rep(z):
        return cayley_to_disk(pick_eval(rep, cayley_to_halfplane(z)))

    def constant_element(z):
        return (1.0 - psi_of_rep(z)) / (1.0 - z)

    entries.append(
        _membership_entry(
            "membership",
            "pick-constant-element",
            membership_test(DbrDiskKernel(psi_of_rep), constant_element, sets, MEMBERSHIP_EPS),
            BOUNDED,
        )
    )
    return entries


def _suite_pw_reconstruction(cfg: SuiteConfig):
    bandwidth = 1.0
    rule = gauss_legendre(cfg.nodes, -bandwidth, bandwidth)
    pairs = point_pairs(rect_points(38, cfg.seed, (-1.0, 1.0, -0.3, 0.3)))
    pairs.append((0.37, 0.37))  # removable-singularity diagonal
    report = paley_wiener_reconstruction_check(bandwidth, rule, pairs, cfg.tol_for("pw-reconstruction"))
    return [_identity_entry("pw-reconstruction", report)]


SUITE_RUNNERS = {
    "cayley-isometry": _suite_cayley_isometry,
    "chordal-derivative": _suite_chordal_derivative,
    "chordal-exp-element": _suite_chordal_exp_element,
    "chordal-exp-kernel": _suite_chordal_exp_kernel,
    "herglotz-mixture": _suite_herglotz_mixture,
    "kernel-psd": _suite_kernel_psd,
    "koebe-log": _suite_koebe_log,
    "membership": _suite_membership,
    "nevanlinna-split": _suite_nevanlinna_split,
    "pw-reconstruction": _suite_pw_reconstruction,
    "radial-derivative": _suite_radial_derivative,
    "resolution": _suite_resolution,
}


def run(config: SuiteConfig) -> dict:
    """Execute the configured suite(s) and return the report as a dict."""
    start = time.perf_counter()
    names = list(SUITES) if config.suite == "all" else [config.suite]
    entries = []
    for name in sorted(names):
        try:
            entries.extend(SUITE_RUNNERS[name](config))
        except LoewnerkitError as exc:
            entries.append({"suite": name, "kind": "error", "name": name, "error": str(exc), "pass": False})
    overall = all(entry["pass"] for entry in entries)
    return {
        "schema": SCHEMA_VERSION,
        "tool_version": __version__,
        "config": config.echo(),
        "entries": entries,
        "overall_pass": overall,
        "wall_clock_ms": int((time.perf_counter() - start) * 1000.0),
    }


# --- serialization -----------------------------------------------------

def dumps_report(obj) -> str:
    """JSON with floats at 17 significant digits (round-trip exact)."""
    pieces = []
    _emit(obj, pieces)
    return "".join(pieces)


def _emit(obj, out):
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize non-finite float {obj}")
        out.append(format(obj, ".17g"))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _emit(value, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, value in enumerate(obj):
            if i:
                out.append(",")
            _emit(value, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


# --- trace -------------------------------------------------------------

def trace_rows(flow, z: complex, n: int):
    """Generate CSV rows "t,re,im" for a flow trace; a mid-trace escape
    propagates as FlowEscapeError after the completed rows were yielded."""
    if isinstance(flow, RadialFlowSpec):
        lo, hi, transition = flow.a, flow.b, radial_transition
    else:
        lo, hi, transition = flow.r, flow.s, chordal_transition
    times = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    for t in times:
        value = transition(flow, t, z)
        yield f"{format(t, '.17g')},{format(value.real, '.17g')},{format(value.imag, '.17g')}"


def _run_trace(args) -> int:
    try:
        z = complex(float(args.z_re), float(args.z_im))
        ode = OdeConfig(args.step) if args.step else OdeConfig()
        if args.flow == "koebe":
            flow = RadialFlowSpec.koebe(args.a, args.b, backend=args.backend, ode=ode)
            radial_transition(flow, args.a, z)
        else:
            flow = ChordalFlowSpec.basic_slit(args.a, args.b, backend=args.backend, ode=ode)
            chordal_transition(flow, args.a, z)
        if args.n < 2:
            raise ConfigError("n must be at least 2")
    except (ValueError, LoewnerkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out = open(args.out, "w") if args.out else sys.stdout
    code = 0
    try:
        print("t,re,im", file=out)
        try:
            for row in trace_rows(flow, z, args.n):
                print(row, file=out)
        except FlowEscapeError as exc:
            print(f"error,{str(exc).replace(',', ';')}", file=out)
            code = 3
    finally:
        if args.out:
            out.close()
    return code


# --- entry point -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="loewnerkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    runp = sub.add_parser("run", help="run a verification suite and emit a JSON report")
    runp.add_argument("--suite", choices=SUITES + ("all",), help="suite to run")
    runp.add_argument("--config", help="JSON config file; flags override its values")
    runp.add_argument("--seed", type=int, help="base seed for all sampled points")
    runp.add_argument("--a", type=float, help="flow interval start")
    runp.add_argument("--b", type=float, help="flow interval end")
    runp.add_argument("--nodes", type=int, help="Gauss-Legendre nodes per segment")
    runp.add_argument("--tol", type=float, help="tolerance override for the selected suite(s)")
    runp.add_argument("--out", help="write the JSON report here instead of stdout")
    runp.add_argument("--corrupt-psd", action="store_true", help="test hook: negate one Gram entry in kernel-psd")

    tracep = sub.add_parser("trace", help="sample a flow trajectory to CSV (header t,re,im)")
    tracep.add_argument("--flow", choices=("koebe", "slit"), required=True)
    tracep.add_argument("--a", type=float, default=0.0, help="interval start")
    tracep.add_argument("--b", type=float, default=1.0, help="interval end")
    tracep.add_argument("--z-re", type=float, required=True, help="Re of the traced point")
    tracep.add_argument("--z-im", type=float, default=0.0, help="Im of the traced point")
    tracep.add_argument("--n", type=int, default=11, help="number of samples (>= 2)")
    tracep.add_argument("--backend", choices=(CLOSED_FORM, RUNGE_KUTTA), default=CLOSED_FORM)
    tracep.add_argument("--step", type=float, help="RK4 step override")
    tracep.add_argument("--out", help="write CSV here instead of stdout")
    return parser


def _run_suites(args) -> int:
    raw = {}
    if args.config:
        try:
            with open(args.config) as handle:
                raw = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 2
        if not isinstance(raw, dict):
            print("error: config must be a JSON object", file=sys.stderr)
            return 2
    if args.suite is not None:
        raw["suite"] = args.suite
    if args.seed is not None:
        raw["seed"] = args.seed
    if args.a is not None:
        raw["a"] = args.a
    if args.b is not None:
        raw["b"] = args.b
    if args.nodes is not None:
        raw["nodes"] = args.nodes
    if args.tol is not None:
        raw["tol"] = args.tol
    if args.corrupt_psd:
        raw["corrupt_psd"] = True

    try:
        config = validate_config(raw)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    report = run(config)
    text = dumps_report(report)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return 0 if report["overall_pass"] else 3


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _run_suites(args)
    return _run_trace(args)


if __name__ == "__main__":
    sys.exit(main())
