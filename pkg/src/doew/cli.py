"""Command-line front end: build states, run witness constructions, sweep angles.

Subcommands: state, rho, boost, ppt, witness, measure, sweep.  All output is
JSON on stdout except ``sweep``, which emits CSV (17 significant digits, one
row per grid point).  Exit codes: 0 success, 1 computation-domain error,
2 usage or parse error.

Weights files are JSON of the form {"q": {"1": 0.4, "3": 0.2, ...},
"parity": "odd"} with 1-based indices; missing indices are zero.  A --config
file may hold the same keys as the flags; explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from .linalg import partial_trace
from .measures import (doew_from_edge, entropy_formula, entropy_pure,
                       generalized_concurrence, hs_distance,
                       relativistic_witness_value)
from .ppt import (closed_form_momentum_pt, edge_state, feasible_region_check,
                  momentum_label_pt_spectrum, ppt_spectrum)
from .relativity import (effective_angles, effective_boost_mixture,
                         effective_boost_pure, wigner_half_angle,
                         wigner_matrix, wigner_rotation_oracle)
from .states import BELL_TYPE_ANGLE, MixtureWeights, build_mixture, phi_state
from .witness import (TieError, coefficient_table, detect, kkt_witness,
                      separability_floor_check)

DEFAULT_SEED = 2024

CSV_COLUMNS = ("parameter", "value", "witness_value_closed_form",
               "witness_value_numeric", "entropy_bits", "min_ppt_eig",
               "hs_measure")


class UsageError(Exception):
    """Bad input that should exit with code 2."""


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _complex_pairs(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=complex)
    if m.ndim == 1:
        return [[float(z.real), float(z.imag)] for z in m]
    return [_complex_pairs(row) for row in m]


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON file {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"expected a JSON object in {path!r}")
    return data


def _load_weights(path: str) -> MixtureWeights:
    data = _load_json(path)
    try:
        return MixtureWeights.from_mapping(data.get("q", {}),
                                           parity=data.get("parity", "free"))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid weights in {path!r}: {exc}") from exc


def _parse_vec(text: str) -> np.ndarray:
    try:
        v = np.array([float(part) for part in text.split(",")], dtype=float)
    except ValueError as exc:
        raise UsageError(f"expected comma-separated floats, got {text!r}") from exc
    if v.shape != (3,):
        raise UsageError(f"expected three components, got {text!r}")
    return v


def _emit(doc: dict, out: str | None) -> None:
    doc = {"tool_version": __version__, **doc}
    text = json.dumps(doc, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------- subcommands

def cmd_state(args) -> None:
    v = phi_state(args.phi, args.theta)
    _emit({
        "command": "state",
        "phi": args.phi,
        "theta": args.theta,
        "amplitudes": _complex_pairs(v),
        "norm": float(np.linalg.norm(v)),
    }, args.out)


def _boosted_rho(args, weights: MixtureWeights) -> np.ndarray:
    rho = build_mixture(weights, args.theta)
    if args.theta1 or args.theta2:
        rho = effective_boost_mixture(rho, args.theta1, args.theta2)
    return rho


def cmd_rho(args) -> None:
    weights = _load_weights(args.weights)
    rho = _boosted_rho(args, weights)
    doc = {
        "command": "rho",
        "parity": weights.parity,
        "theta": args.theta,
        "theta1": args.theta1,
        "theta2": args.theta2,
        "trace": float(np.trace(rho).real),
        "eigenvalues": [float(x) for x in np.linalg.eigvalsh(rho)],
        "purity": float(np.einsum("ij,ji->", rho, rho).real),
        "reduced_A_eigenvalues": [float(x) for x in
                                  np.linalg.eigvalsh(partial_trace(rho, (4, 4), "B"))],
    }
    if args.full:
        doc["matrix"] = _complex_pairs(rho)
    _emit(doc, args.out)


def cmd_boost(args) -> None:
    e_hat = _parse_vec(args.e)
    e_hat = e_hat / np.linalg.norm(e_hat)
    particles = []
    angles = []
    for delta, p_text in ((args.delta1, args.p1), (args.delta2, args.p2)):
        p_hat = _parse_vec(p_text)
        p_hat = p_hat / np.linalg.norm(p_hat)
        cos_half, sin_axis = wigner_half_angle(args.alpha, e_hat, delta, p_hat)
        oc, ov = wigner_rotation_oracle(args.alpha, e_hat, delta, p_hat)
        rot = wigner_matrix(cos_half, sin_axis)
        residual = max(abs(cos_half - oc), float(np.max(np.abs(sin_axis - ov))))
        particles.append({
            "delta": delta,
            "p_hat": [float(x) for x in p_hat],
            "cos_half": cos_half,
            "sin_half_axis": [float(x) for x in sin_axis],
            "omega": rot.omega,
            "axis": [float(x) for x in rot.axis],
            "d_matrix": _complex_pairs(rot.matrix),
            "oracle_residual": residual,
        })
        angles.append(rot.omega)
    _emit({
        "command": "boost",
        "alpha": args.alpha,
        "e_hat": [float(x) for x in e_hat],
        "particles": particles,
        "effective_angles": angles,
    }, args.out)


def cmd_ppt(args) -> None:
    weights = _load_weights(args.weights)
    rho = _boosted_rho(args, weights)
    spec_a = ppt_spectrum(rho, "A")
    spec_b = ppt_spectrum(rho, "B")
    doc = {
        "command": "ppt",
        "theta1": args.theta1,
        "theta2": args.theta2,
        "ppt_spectrum_A": [float(x) for x in spec_a],
        "ppt_spectrum_B": [float(x) for x in spec_b],
        "min_eigenvalue_A": float(spec_a[0]),
        "min_eigenvalue_B": float(spec_b[0]),
    }
    if weights.parity == "odd":
        report = feasible_region_check(weights)
        mom = momentum_label_pt_spectrum(rho)
        closed = closed_form_momentum_pt(weights, args.theta1, args.theta2)
        doc["feasible_region"] = {
            "equalities": [[name, float(r)] for name, r in report.equalities],
            "inequalities": [[name, float(m)] for name, m in report.inequalities],
            "is_ppt": report.is_ppt,
        }
        doc["momentum_label_spectrum"] = [float(x) for x in mom]
        doc["closed_form_spectrum"] = [float(x) for x in closed]
        doc["closed_form_residual"] = float(np.max(np.abs(mom - closed)))
    _emit(doc, args.out)


def cmd_witness(args) -> None:
    weights = _load_weights(args.weights)
    rho = _boosted_rho(args, weights)
    coeffs, w = kkt_witness(rho)
    doc = {
        "command": "witness",
        "theta1": args.theta1,
        "theta2": args.theta2,
        "A": [[float(x) for x in row] for row in coeffs.A],
        "W_spectrum": [float(x) for x in np.linalg.eigvalsh(w)],
        "min_value": coeffs.min_value,
        "detection": detect(w, rho),
        "verdict": "entangled" if coeffs.min_value < -1e-10 else "not detected",
    }
    if weights.parity == "odd":
        doc["closed_form_min_value"] = relativistic_witness_value(
            weights, args.theta1, args.theta2)
        try:
            table = coefficient_table(weights)
            doc["coefficient_table_max_diff"] = float(np.max(np.abs(table - coeffs.A)))
        except TieError as exc:
            doc["warning"] = f"closed-form table undefined ({exc}); using KKT coefficients"
    if args.floor_samples:
        doc["separability_floor"] = separability_floor_check(
            coeffs.A, samples=args.floor_samples, seed=args.seed)
        doc["seed"] = args.seed
    _emit(doc, args.out)


def cmd_measure(args) -> None:
    weights = _load_weights(args.weights)
    rho = _boosted_rho(args, weights)
    edge = edge_state(1, args.theta)
    try:
        _, measure = doew_from_edge(rho, edge)
    except ValueError:
        measure = 0.0   # coincident with the edge state
    doc = {
        "command": "measure",
        "theta1": args.theta1,
        "theta2": args.theta2,
        "hs_measure_to_edge": measure,
        "entropy_bits_formula": entropy_formula(args.theta1, args.theta2),
        "boosted_phi1_entropy_bits": entropy_pure(
            effective_boost_pure(phi_state(1, args.theta), args.theta1, args.theta2)
        ).entropy_bits,
    }
    conc = generalized_concurrence(args.theta1, args.theta2)
    doc["concurrence"] = {"chi": conc.chi, "d": conc.d,
                          "lambda1": conc.lambda1, "lambda2": conc.lambda2}
    if weights.parity == "odd":
        doc["witness_value_closed_form"] = relativistic_witness_value(
            weights, args.theta1, args.theta2)
        doc["witness_value_numeric"] = kkt_witness(rho)[0].min_value
    _emit(doc, args.out)


# --------------------------------------------------------------------- sweep

def fr_companion_weights(q1: float) -> MixtureWeights:
    """Feasible-region family with q1 = q7 swept and the residual spread evenly."""
    if not 0.0 <= q1 <= 0.5:
        raise UsageError("q1 must lie in [0, 0.5]")
    rest = (1.0 - 2.0 * q1) / 6.0
    mapping = {1: q1, 7: q1}
    mapping.update({i: rest for i in (3, 5, 9, 11, 13, 15)})
    return MixtureWeights.odd(mapping)


def _sweep_point(weights: MixtureWeights, theta1: float, theta2: float,
                 edge: np.ndarray) -> dict:
    rho = build_mixture(weights)
    boosted = effective_boost_mixture(rho, theta1, theta2)
    coeffs, _ = kkt_witness(boosted)
    return {
        "witness_value_closed_form": relativistic_witness_value(weights, theta1, theta2),
        "witness_value_numeric": coeffs.min_value,
        "entropy_bits": entropy_formula(theta1, theta2),
        "min_ppt_eig": float(ppt_spectrum(boosted, "A")[0]),
        "hs_measure": hs_distance(edge, boosted),
    }


def build_sweep_rows(args) -> list[dict]:
    if args.steps < 2:
        raise UsageError("steps must be at least 2")
    if not args.start < args.stop:
        raise UsageError("start must be strictly below stop")
    grid = np.linspace(args.start, args.stop, args.steps)
    edge = edge_state(1)
    if args.parameter == "q1":
        base = None
    else:
        if not args.weights:
            raise UsageError(f"--weights is required for a {args.parameter} sweep")
        base = _load_weights(args.weights)
        if base.parity != "odd":
            raise UsageError("sweeps need odd-parity weights")
    rows = []
    for value in grid:
        if args.parameter == "theta1":
            w, t1, t2 = base, float(value), args.theta2
        elif args.parameter == "theta2":
            w, t1, t2 = base, args.theta1, float(value)
        elif args.parameter == "alpha":
            e_hat = np.array([0.0, 0.0, 1.0])
            p1 = np.array([0.0, np.sin(args.chi1), np.cos(args.chi1)])
            p2 = np.array([0.0, np.sin(args.chi2), np.cos(args.chi2)])
            t1, t2 = effective_angles(float(value), e_hat,
                                      args.delta1, p1, args.delta2, p2)
            w = base
        elif args.parameter == "q1":
            w, t1, t2 = fr_companion_weights(float(value)), args.theta1, args.theta2
        else:
            raise UsageError(f"unknown sweep parameter {args.parameter!r}")
        row = {"parameter": args.parameter, "value": float(value)}
        row.update(_sweep_point(w, t1, t2, edge))
        rows.append(row)
    return rows


def cmd_sweep(args) -> None:
    rows = build_sweep_rows(args)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row["parameter"]] + [_fmt(row[c]) for c in CSV_COLUMNS[1:]])
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.record:
        record = {
            "tool_version": __version__,
            "seed": args.seed,
            "inputs": {k: v for k, v in vars(args).items()
                       if k not in ("func", "record", "out", "config")},
            "rows": rows,
        }
        with open(args.record, "w") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")


# ------------------------------------------------------------------- parsing

def _add_angle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--theta", type=float, default=BELL_TYPE_ANGLE,
                   help="mixing angle of the state family (default pi/4)")
    p.add_argument("--theta1", type=float, default=0.0,
                   help="effective rotation angle of momentum sector 1")
    p.add_argument("--theta2", type=float, default=0.0,
                   help="effective rotation angle of momentum sector 2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doew",
        description="Entanglement witnesses for two-particle momentum-spin states")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON file of default flag values")
        p.add_argument("--out", help="write JSON/CSV to this file instead of stdout")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help=f"seed for all sampling (default {DEFAULT_SEED})")

    p = sub.add_parser("state", help="print one entangled basis state")
    p.add_argument("--phi", type=int, required=True, choices=range(1, 17),
                   metavar="1..16")
    p.add_argument("--theta", type=float, default=BELL_TYPE_ANGLE)
    common(p)
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("rho", help="build a mixture and report its spectrum")
    p.add_argument("--weights", required=True, help="weights JSON file")
    p.add_argument("--full", action="store_true", help="include the full matrix")
    _add_angle_args(p)
    common(p)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("boost", help="Wigner rotation data for two particles")
    p.add_argument("--alpha", type=float, required=True, help="observer rapidity")
    p.add_argument("--e", default="0,0,1", help="boost direction (comma separated)")
    p.add_argument("--delta1", type=float, default=2.0)
    p.add_argument("--p1", default="0,0.8660254037844386,0.5")
    p.add_argument("--delta2", type=float, default=2.0)
    p.add_argument("--p2", default="0,0.8660254037844386,-0.5")
    common(p)
    p.set_defaults(func=cmd_boost)

    p = sub.add_parser("ppt", help="partial-transpose spectra and feasible region")
    p.add_argument("--weights", required=True)
    _add_angle_args(p)
    common(p)
    p.set_defaults(func=cmd_ppt)

    p = sub.add_parser("witness", help="construct the optimal witness")
    p.add_argument("--weights", required=True)
    p.add_argument("--floor-samples", type=int, default=0,
                   help="also sample the separable-state floor with this many states")
    _add_angle_args(p)
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("measure", help="entanglement measures for a mixture")
    p.add_argument("--weights", required=True)
    _add_angle_args(p)
    common(p)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sweep", help="sweep one parameter and emit CSV")
    p.add_argument("--parameter", required=True,
                   choices=("theta1", "theta2", "alpha", "q1"))
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--weights", help="weights JSON (theta/alpha sweeps)")
    p.add_argument("--theta1", type=float, default=0.0)
    p.add_argument("--theta2", type=float, default=0.0)
    p.add_argument("--delta1", type=float, default=2.0,
                   help="particle 1 rapidity for alpha sweeps")
    p.add_argument("--delta2", type=float, default=2.0)
    p.add_argument("--chi1", type=float, default=np.pi / 3,
                   help="particle 1 momentum polar angle (yz-plane)")
    p.add_argument("--chi2", type=float, default=2 * np.pi / 3)
    p.add_argument("--record", help="write a reproducible run record JSON here")
    common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def _apply_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if not getattr(args, "config", None):
        return
    config = _load_json(args.config)
    defaults = parser.parse_args([args.command] + _required_stub(args))
    for key, value in config.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise UsageError(f"unknown config key {key!r}")
        # a flag still holding its default is overridden by the config value
        if getattr(args, attr) == getattr(defaults, attr, None):
            setattr(args, attr, value)


def _required_stub(args: argparse.Namespace) -> list[str]:
    # minimal argv to re-derive defaults for the active subcommand
    stub = []
    for name in ("weights", "parameter"):
        if getattr(args, name, None) is not None:
            stub += [f"--{name}", str(getattr(args, name))]
    for name in ("phi", "alpha", "start", "stop", "steps"):
        if getattr(args, name, None) is not None:
            stub += [f"--{name}", str(getattr(args, name))]
    return stub


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, parser)
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, np.linalg.LinAlgError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 1
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
