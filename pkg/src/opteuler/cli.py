"""Command-line front end.

Angles are read and printed in units of pi unless ``--radians`` is given.
"""

from __future__ import annotations

import csv
import io
import json
import math

import click
import numpy as np

from .cartan import cnot_error
from .decomp import TargetGate, decompose_su2, lowenthal_bound
from .errors import OptEulerError
from .fidelity import (
    TiltModel,
    average_tilt_error,
    gate_fidelity,
    max_tilt_error,
    threshold_kappa,
    tilted_z_fidelity,
)
from .gates import NAMED_GATES, named_gate
from .rotkit import AxisFrame, su2_from_params
from .table import compute_table
from .transfer import (
    TransferProblem,
    ladder_transfer,
    min_steps_g_first,
    min_steps_h_first,
    minimal_step_count,
    transfer_sequence,
)

AXIS_LABEL = {"H": "H1", "G": "H2"}


def parse_kappa(value) -> float:
    if value is None:
        return None
    if isinstance(value, (int, float)):
        return float(value)
    s = str(value).strip().lower()
    if s in ("inf", "infinity", "∞"):
        return math.inf
    try:
        k = float(s)
    except ValueError:
        raise click.BadParameter(f"not a number: {value!r}") from None
    if not k > 0:
        raise click.BadParameter("kappa must be positive")
    return k


def kappa_json(k: float | None):
    if k is None:
        return None
    return "inf" if math.isinf(k) else k


def parse_axes(value: str) -> AxisFrame:
    try:
        nums = [float(x) for x in value.split(",")]
    except ValueError:
        raise click.BadParameter("--axes needs six comma-separated numbers") from None
    if len(nums) != 6:
        raise click.BadParameter("--axes needs six comma-separated numbers")
    return AxisFrame(np.array(nums[:3]), np.array(nums[3:]))


def build_frame(kappa, axes, zeta=None, radians=False) -> tuple[AxisFrame, float | None]:
    given = sum(x is not None for x in (kappa, axes, zeta))
    if given > 1:
        raise click.UsageError("give only one of --kappa, --axes, --zeta")
    try:
        if axes is not None:
            return parse_axes(axes), None
        if zeta is not None:
            z = zeta if radians else zeta * math.pi
            return AxisFrame(np.array([0.0, 0.0, 1.0]), np.array([math.sin(z), 0.0, math.cos(z)])), None
        k = parse_kappa(kappa if kappa is not None else "inf")
        return AxisFrame.from_kappa(k), k
    except OptEulerError as exc:
        raise click.ClickException(str(exc)) from None


def angle_out(a: float, radians: bool) -> float:
    return a if radians else a / math.pi


def angle_in(a: float, radians: bool) -> float:
    return a if radians else a * math.pi


def emit(text: str) -> None:
    click.echo(text.rstrip("\n"))


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def fmt_angle(a: float, digits: int) -> str:
    return f"{a:.{digits}f}"


_format = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv", "table"]), default="table", show_default=True
)
_digits = click.option("--digits", type=click.IntRange(min=1), default=4, show_default=True,
                       help="decimals kept for angles (units of pi)")
_radians = click.option("--radians", is_flag=True, help="angles in radians instead of units of pi")
_kappa = click.option("--kappa", default=None, help="H2 = sigma_x + kappa sigma_z; 'inf' for orthogonal")
_axes = click.option("--axes", default=None, help="hx,hy,hz,gx,gy,gz")


@click.group()
def main():
    """Rotation sequences over two fixed axes."""


@main.command()
@click.option("--gate", default=None, help=f"one of {', '.join(sorted(NAMED_GATES))}")
@click.option("--params", nargs=3, type=float, default=None, help="alpha beta gamma")
@click.option("--generator", nargs=4, type=float, default=None, help="phi nx ny nz for exp(i phi n.sigma)")
@_kappa
@_axes
@_digits
@_format
@_radians
def decompose(gate, params, generator, kappa, axes, digits, fmt, radians):
    """Optimized Euler angles for a single-qubit gate."""
    chosen = [x is not None for x in (gate, params, generator)]
    if sum(chosen) != 1:
        raise click.UsageError("give exactly one of --gate, --params, --generator")
    if gate is not None:
        try:
            U = named_gate(gate)
        except KeyError as exc:
            raise click.BadParameter(str(exc.args[0]), param_hint="--gate") from None
        label = gate
    elif params is not None:
        a, b, c = (angle_in(x, radians) for x in params)
        U = su2_from_params(a, b, c)
        label = "params(" + ",".join(repr(x) for x in params) + ")"
    else:
        phi = angle_in(generator[0], radians)
        n = np.array(generator[1:])
        if np.linalg.norm(n) == 0:
            raise click.BadParameter("generator axis must be nonzero")
        U = TargetGate.from_generator(phi, n).su2()
        label = "generator(" + ",".join(repr(x) for x in generator) + ")"
    frame, k = build_frame(kappa, axes)
    res = decompose_su2(U, frame)
    seq = res.sequence
    trunc = seq.truncated(digits)
    report = {
        "gate": label,
        "kappa": kappa_json(k),
        "zeta_rad": frame.zeta,
        "steps": [{"angle_pi": s.angle / math.pi, "axis": AXIS_LABEL[s.axis]} for s in seq],
        "lowenthal_bound": lowenthal_bound(min(frame.zeta, math.pi - frame.zeta)),
        "fidelity_full": gate_fidelity(U, seq.su2(frame)),
        "fidelity_truncated": gate_fidelity(U, trunc.su2(frame)),
        "axes": {"h": frame.h.tolist(), "g": frame.g.tolist()},
    }
    if fmt == "json":
        emit(json.dumps(report, indent=2))
        return
    unit = "rad" if radians else "pi"
    if fmt == "csv":
        rows = [(i, AXIS_LABEL[s.axis], fmt_angle(angle_out(t.angle, radians), digits))
                for i, (s, t) in enumerate(zip(seq, trunc))]
        emit(to_csv(["step", "axis", f"angle_{unit}"], rows))
        return
    lines = [
        f"gate: {label}",
        f"kappa: {kappa_json(k)}  zeta: {frame.zeta:.6f} rad",
        f"steps ({len(seq)}, bound {report['lowenthal_bound']}):",
    ]
    for s, t in zip(seq, trunc):
        lines.append(f"  {fmt_angle(angle_out(t.angle, radians), digits)} {unit} about {AXIS_LABEL[s.axis]}")
    lines.append(f"error full precision: {1 - report['fidelity_full']:.3e}")
    lines.append(f"error at {digits} decimals: {1 - report['fidelity_truncated']:.3e}")
    emit("\n".join(lines))


@main.command()
@click.option("--start", nargs=2, type=float, required=True, help="theta0 phi0")
@click.option("--goal", nargs=2, type=float, required=True, help="thetaf phif")
@_kappa
@_axes
@click.option("--zeta", type=float, default=None, help="frame h = z, g at polar angle zeta")
@click.option("--method", type=click.Choice(["shortest", "ladder"]), default="shortest", show_default=True)
@_digits
@_format
@_radians
def transfer(start, goal, kappa, axes, zeta, method, digits, fmt, radians):
    """Rotation steps moving one Bloch point to another."""
    frame, k = build_frame(kappa, axes, zeta, radians)
    th0, ph0 = (angle_in(x, radians) for x in start)
    thf, phf = (angle_in(x, radians) for x in goal)
    for th in (th0, thf):
        if not 0 <= th <= math.pi:
            raise click.BadParameter("theta must lie in [0, pi]")
    pb = TransferProblem.from_angles(th0, ph0, thf, phf, frame)
    try:
        seq = transfer_sequence(pb, method)
        a1 = ladder_transfer(pb)
    except OptEulerError as exc:
        raise click.ClickException(str(exc)) from None
    report = {
        "kappa": kappa_json(k),
        "zeta_rad": frame.zeta,
        "method": method,
        "steps": [{"angle_pi": s.angle / math.pi, "axis": AXIS_LABEL[s.axis]} for s in seq],
        "step_count": len(seq),
        "min_steps_h_first": min_steps_h_first(pb),
        "min_steps_g_first": min_steps_g_first(pb),
        "min_steps_exact": minimal_step_count(pb),
        "ladder_p": a1.p,
        "branch": a1.branch,
        "endpoint_error": pb.endpoint_error(seq),
    }
    if fmt == "json":
        emit(json.dumps(report, indent=2))
        return
    unit = "rad" if radians else "pi"
    if fmt == "csv":
        rows = [(i, AXIS_LABEL[s.axis], fmt_angle(angle_out(s.angle, radians), digits))
                for i, s in enumerate(seq)]
        emit(to_csv(["step", "axis", f"angle_{unit}"], rows))
        return
    lines = [f"zeta: {frame.zeta:.6f} rad  method: {method}", f"steps ({len(seq)}):"]
    for s in seq:
        lines.append(f"  {fmt_angle(angle_out(s.angle, radians), digits)} {unit} about {AXIS_LABEL[s.axis]}")
    lines.append(
        f"N (h first): {report['min_steps_h_first']}  N' (g first): {report['min_steps_g_first']}"
        f"  exact minimum: {report['min_steps_exact']}"
    )
    lines.append(f"endpoint error: {report['endpoint_error']:.3e}")
    emit("\n".join(lines))


@main.command()
@_digits
@_format
def table1(digits, fmt):
    """Optimized angles and baseline errors for the standard gate set."""
    rows = compute_table(digits)
    if fmt == "json":
        out = [
            {
                "gate": r.gate,
                "kappa": kappa_json(r.kappa),
                "e0_percent": r.e0_percent,
                "e0_reference": r.ref_e0_percent,
                "steps": [{"angle_pi": s.angle / math.pi, "axis": AXIS_LABEL[s.axis]} for s in r.sequence],
                "lowenthal_bound": r.lowenthal_bound,
                "error_full": r.error_full,
                "error_truncated": r.error_rounded,
                "angles_match": r.angles_ok,
                "e0_match": r.e0_ok,
            }
            for r in rows
        ]
        emit(json.dumps(out, indent=2))
        return
    if fmt == "csv":
        emit(to_csv(
            ["gate", "kappa", "e0_percent", "e0_reference", "angles_pi", "axes",
             "error_full", "error_truncated", "angles_match", "e0_match"],
            [(r.gate, kappa_json(r.kappa), f"{r.e0_percent:.4f}", f"{r.ref_e0_percent:.4f}",
              " ".join(fmt_angle(a, digits) for a in r.angles_pi),
              " ".join(AXIS_LABEL[a] for a in r.sequence.axes),
              f"{r.error_full:.3e}", f"{r.error_rounded:.3e}", r.angles_ok, r.e0_ok) for r in rows],
        ))
        return
    lines = [f"{'gate':<6}{'kappa':>6}{'E0 %':>10}{'ref':>10}  angles (units of pi)"]
    for r in rows:
        flags = "" if (r.angles_ok and r.e0_ok) else "  <-- " + ",".join(
            n for n, ok in (("angles", r.angles_ok), ("E0", r.e0_ok)) if not ok
        )
        ang = " ".join(f"{fmt_angle(a, digits)}({AXIS_LABEL[x]})" for a, x in zip(r.angles_pi, r.sequence.axes))
        lines.append(
            f"{r.gate:<6}{str(kappa_json(r.kappa)):>6}{r.e0_percent:>10.4f}{r.ref_e0_percent:>10.4f}  "
            f"{ang}  err {r.error_rounded:.2e}{flags}"
        )
    emit("\n".join(lines))


@main.command("cnot-sweep")
@click.option("--kappas", default="inf,100,50,10,5,1", show_default=True, help="comma-separated list")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "table"]), default="csv", show_default=True)
def cnot_sweep(kappas, fmt):
    """CNOT error with standard and optimized single-qubit angles."""
    ks = [parse_kappa(x) for x in kappas.split(",") if x.strip()]
    rows = [(k, cnot_error(k, "standard").error, cnot_error(k, "optimized").error) for k in ks]
    if fmt == "json":
        emit(json.dumps(
            [{"kappa": kappa_json(k), "error_standard": s, "error_optimized": o} for k, s, o in rows],
            indent=2,
        ))
    elif fmt == "csv":
        emit(to_csv(["kappa", "error_standard", "error_optimized"],
                    [(kappa_json(k), repr(s), repr(o)) for k, s, o in rows]))
    else:
        lines = [f"{'kappa':>8}{'standard':>14}{'optimized':>14}"]
        lines += [f"{str(kappa_json(k)):>8}{s:>14.4e}{o:>14.4e}" for k, s, o in rows]
        emit("\n".join(lines))


@main.command()
@_kappa
@click.option("--epsilon", type=float, default=None, help="tilt fraction instead of kappa")
@click.option("--beta", type=float, default=None, help="z rotation angle for F(beta, epsilon)")
@click.option("--max-error", type=float, default=None, help="report the kappa threshold for this error")
@_format
@_radians
def fidelity(kappa, epsilon, beta, max_error, fmt, radians):
    """Tilted-axis error figures."""
    if kappa is not None and epsilon is not None:
        raise click.UsageError("give only one of --kappa, --epsilon")
    model = TiltModel.from_epsilon(epsilon) if epsilon is not None else TiltModel(parse_kappa(kappa or "inf"))
    eps = model.epsilon
    report = {
        "kappa": kappa_json(model.kappa),
        "zeta_rad": model.zeta,
        "epsilon": eps,
        "average_error": average_tilt_error(eps),
        "max_error": max_tilt_error(eps),
    }
    if beta is not None:
        report["beta"] = beta
        report["fidelity_beta"] = tilted_z_fidelity(angle_in(beta, radians), eps)
    if max_error is not None:
        if not 0 < max_error < 1:
            raise click.BadParameter("--max-error must lie in (0, 1)")
        report["threshold_kappa"] = threshold_kappa(max_error)
    if fmt == "json":
        emit(json.dumps(report, indent=2))
    elif fmt == "csv":
        emit(to_csv(list(report), [[kappa_json(model.kappa)] + list(report.values())[1:]]))
    else:
        emit("\n".join(f"{k}: {v}" for k, v in report.items()))


if __name__ == "__main__":  # pragma: no cover
    main()
