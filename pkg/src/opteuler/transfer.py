"""Steering one point of the unit sphere to another with h and g rotations.

Points are given by polar angles relative to an :class:`AxisFrame`, so h is
the pole and g sits at azimuth 0 with polar angle zeta.

Two solvers are provided.  :func:`ladder_transfer` is the pole-ladder scheme:
rotate the start into the h-g plane, walk down in polar angle with pairs of
pi rotations (each pair lowers theta by 2 zeta), finish with a two-step PR1
or PR2 move and a last h rotation.  :func:`shortest_transfer` builds a
minimum-length alternating sequence from the exact reachable sets.  A point
at distance ``a`` from one axis can be moved, by one rotation about that
axis, to any distance from the other axis in
``[|a - zeta|, min(a + zeta, 2 pi - a - zeta)]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DomainError, NumericError
from .rotkit import (
    AxisFrame,
    PolarCoords,
    embed,
    polar,
    rotation_about_axis,
    safe_arccos,
)
from .sequence import EulerSequence, Step, normalize_angle

__all__ = [
    "TransferProblem",
    "pr1",
    "pr2",
    "ladder",
    "transfer_sequence",
    "shortest_transfer",
    "minimal_step_count",
    "min_steps_h_first",
    "min_steps_g_first",
    "reachable_interval",
]

TWO_PI = 2 * math.pi
_TOL = 1e-12
_LAND_TOL = 1e-9


@dataclass(frozen=True)
class TransferProblem:
    start: PolarCoords
    goal: PolarCoords
    frame: AxisFrame

    @classmethod
    def from_angles(cls, theta0, phi0, thetaf, phif, frame: AxisFrame) -> "TransferProblem":
        return cls(PolarCoords(theta0, phi0 % TWO_PI), PolarCoords(thetaf, phif % TWO_PI), frame)

    @classmethod
    def from_vectors(cls, s, t, frame: AxisFrame) -> "TransferProblem":
        return cls(polar(s, frame), polar(t, frame), frame)

    @property
    def start_vector(self) -> np.ndarray:
        return embed(self.start, self.frame)

    @property
    def goal_vector(self) -> np.ndarray:
        return embed(self.goal, self.frame)

    def endpoint_error(self, seq: EulerSequence) -> float:
        return float(np.linalg.norm(seq.apply(self.start_vector, self.frame) - self.goal_vector))


# ---------------------------------------------------------------- subroutines


def _arccos_or_domain(x: float, what: str) -> float:
    try:
        return safe_arccos(x)
    except NumericError as exc:
        raise DomainError(f"{what}: target not reachable in one two-step move") from exc


def pr1(theta0: float, thetaf: float, zeta: float) -> tuple[float, float]:
    """g rotation by theta, then h rotation by phi, from (theta0, 0) to (thetaf, 0).

    Returns (theta, phi) as magnitudes in [0, pi]; the signs depend on the side
    of the sphere and are fixed by the caller.
    """
    sf = math.sin(thetaf)
    if abs(sf) < _TOL:
        phi = 0.0
    else:
        cphi = (math.sin(theta0) - (math.cos(thetaf) - math.cos(theta0)) / math.tan(zeta)) / sf
        phi = _arccos_or_domain(cphi, "pr1")
    den = math.sin(zeta) * math.sin(zeta - theta0)
    if abs(den) < _TOL:
        raise DomainError("pr1: start lies on the g axis")
    ctheta = (-math.cos(zeta) * math.cos(zeta - theta0) + math.cos(thetaf)) / den
    return _arccos_or_domain(ctheta, "pr1"), phi


def pr2(theta0: float, thetaf: float, zeta: float) -> tuple[float, float]:
    """h rotation by phi, then g rotation by theta, from (theta0, 0) onto the thetaf circle.

    Returns (phi, theta) as magnitudes in [0, pi].
    """
    s0 = math.sin(theta0)
    if abs(s0) < _TOL:
        phi = 0.0
    else:
        cphi = (math.sin(thetaf) - (math.cos(theta0) - math.cos(thetaf)) / math.tan(zeta)) / s0
        phi = _arccos_or_domain(cphi, "pr2")
    den = math.sin(zeta) * math.sin(zeta - thetaf)
    if abs(den) < _TOL:
        raise DomainError("pr2: goal lies on the g axis")
    ctheta = (-math.cos(zeta) * math.cos(zeta - thetaf) + math.cos(theta0)) / den
    return phi, _arccos_or_domain(ctheta, "pr2")


def _signed_pair(frame: AxisFrame, a, b, tags, target) -> list[tuple[float, str]]:
    """Pick signs of the two magnitudes so the two steps carry a to target."""
    best = None
    for s1, s2 in product((1.0, -1.0), repeat=2):
        steps = [(s1 * a, tags[0]), (s2 * b, tags[1])]
        err = np.linalg.norm(EulerSequence(steps).apply(target[0], frame) - target[1])
        if best is None or err < best[0] - 1e-15:
            best = (err, steps)
    if best[0] > _LAND_TOL:
        raise NumericError(f"two-step move misses its target by {best[0]:.3e}")
    return best[1]


# ------------------------------------------------------------- pole ladder


def _reduce(th0, ph0, thf, phf, zeta):
    """Map to zeta <= pi/2 and theta0 >= thetaf; return the undo flags."""
    reflected = zeta > math.pi / 2
    if reflected:
        # measure from -h: (theta, phi) -> (pi - theta, -phi), h angles flip sign
        th0, ph0, thf, phf, zeta = math.pi - th0, -ph0, math.pi - thf, -phf, math.pi - zeta
    swapped = th0 < thf
    if swapped:
        th0, ph0, thf, phf = thf, phf, th0, ph0
    return (th0, ph0 % TWO_PI, thf, phf % TWO_PI, zeta), reflected, swapped


def _undo(steps, reflected, swapped):
    seq = EulerSequence(steps)
    if swapped:
        seq = seq.inverse()
    if reflected:
        seq = EulerSequence((-s.angle if s.axis == "H" else s.angle, s.axis) for s in seq)
    return seq.normalized()


def _canonical_frame(zeta: float) -> AxisFrame:
    return AxisFrame(np.array([0.0, 0.0, 1.0]), np.array([math.sin(zeta), 0.0, math.cos(zeta)]))


def _ladder_canonical(th0, ph0, thf, phf, zeta):
    """Pole-ladder transfer for zeta <= pi/2, theta0 >= thetaf; steps in application order."""
    if abs(th0 - thf) < _TOL:
        return [(phf - ph0, "H")], 0, "equal"
    p = int(math.floor((th0 - thf) / (2 * zeta) + _TOL))
    thb = th0 - 2 * p * zeta
    ladder = [(math.pi, "G"), (math.pi, "H")] * p
    if abs(thb - thf) < _TOL:
        return [(-ph0, "H")] + ladder + [(phf, "H")], p, "ladder"
    frame = _canonical_frame(zeta)
    A = embed(PolarCoords(thb, 0.0), frame)
    B = embed(PolarCoords(thf, 0.0), frame)
    if thb <= zeta or (2 * zeta - thb >= 0 and 2 * zeta - thb > thf):
        phi, theta = pr2(thb, thf, zeta)
        move = _signed_pair(frame, phi, theta, ("H", "G"), (A, B))
        branch = "PR2"
    else:
        theta, phi = pr1(thb, thf, zeta)
        move = _signed_pair(frame, theta, phi, ("G", "H"), (A, B))
        branch = "PR1"
    return [(-ph0, "H")] + ladder + move + [(phf, "H")], p, branch


@dataclass(frozen=True)
class LadderTransferResult:
    sequence: EulerSequence
    p: int
    branch: str
    reflected: bool
    swapped: bool


def ladder_transfer(problem: TransferProblem) -> LadderTransferResult:
    """The pole-ladder scheme, unsimplified, in application order.

    Obtuse frames are first reflected through the h-g plane's normal
    (theta -> pi - theta, zeta -> pi - zeta).  A start below the goal is
    handled by solving the swapped problem and inverting the sequence.
    """
    s, t, z = problem.start, problem.goal, problem.frame.zeta
    if abs(s.theta - t.theta) < _TOL and abs(_wrap(s.phi - t.phi)) < _TOL:
        return LadderTransferResult(EulerSequence(), 0, "identity", False, False)
    args, reflected, swapped = _reduce(s.theta, s.phi, t.theta, t.phi, z)
    steps, p, branch = _ladder_canonical(*args)
    return LadderTransferResult(_undo(steps, reflected, swapped), p, branch, reflected, swapped)


def _wrap(a: float) -> float:
    return (a + math.pi) % TWO_PI - math.pi


# ---------------------------------------------------------- shortest sequence


def _range(a: float, zeta: float) -> tuple[float, float]:
    return abs(a - zeta), min(a + zeta, TWO_PI - a - zeta)


def reachable_interval(lo: float, hi: float, zeta: float) -> tuple[float, float]:
    """Distances to the other axis after one rotation, from distances in [lo, hi]."""
    if lo <= zeta <= hi:
        new_lo = 0.0
    else:
        new_lo = min(abs(lo - zeta), abs(hi - zeta))
    peak = min(max(math.pi - zeta, lo), hi)
    return new_lo, min(peak + zeta, TWO_PI - peak - zeta)


def _dist(v, axis) -> float:
    return safe_arccos(float(np.clip(v @ axis, -1.0 - 1e-15, 1.0 + 1e-15)))


def _plan_length(problem: TransferProblem, first: str, kmax: int):
    """Smallest k and its interval chain for sequences starting with ``first``."""
    fr = problem.frame
    s, t = problem.start_vector, problem.goal_vector
    other = {"H": "G", "G": "H"}
    axes = [first]
    a = _dist(s, fr.axis(first))
    chain = [(a, a)]
    for k in range(1, kmax + 1):
        lo, hi = chain[-1]
        c = _dist(t, fr.axis(axes[-1]))
        if lo - 1e-10 <= c <= hi + 1e-10:
            return k, axes, chain
        chain.append(reachable_interval(lo, hi, fr.zeta))
        axes.append(other[axes[-1]])
    return None


def _max_steps(zeta: float) -> int:
    return math.ceil(math.pi / min(zeta, math.pi - zeta) - _TOL) + 2


def minimal_step_count(problem: TransferProblem, first: str | None = None) -> int:
    """Exact minimum number of alternating steps, optionally fixing the first axis."""
    if problem.endpoint_error(EulerSequence()) < 1e-12:
        return 0
    kmax = _max_steps(problem.frame.zeta)
    firsts = ("H", "G") if first is None else (first,)
    ks = [r[0] for r in (_plan_length(problem, f, kmax) for f in firsts) if r]
    if not ks:
        raise NumericError("no sequence found within the step bound")
    return min(ks)


def _angle_to_distance(x, A, B, c: float) -> float:
    """Rotation angle about A that puts x at distance c from B."""
    along = float(x @ A)
    perp = x - along * A
    P = along * float(A @ B)
    Q = float(B @ perp)
    S = float(B @ np.cross(A, perp))
    rho = math.hypot(Q, S)
    if rho < 1e-14:
        return 0.0
    arg = (math.cos(c) - P) / rho
    arg = min(1.0, max(-1.0, arg))
    return math.atan2(S, Q) + math.acos(arg)


def _azimuth_gap(x, t, A, B) -> float:
    fr = AxisFrame(A, B)
    return polar(t, fr).phi - polar(x, fr).phi


def shortest_transfer(problem: TransferProblem) -> EulerSequence:
    """A minimum-length alternating sequence (ties prefer starting with h)."""
    if problem.endpoint_error(EulerSequence()) < 1e-12:
        return EulerSequence()
    fr = problem.frame
    kmax = _max_steps(fr.zeta)
    plans = [r for r in (_plan_length(problem, f, kmax) for f in ("H", "G")) if r]
    if not plans:
        raise NumericError("no sequence found within the step bound")
    k, axes, chain = min(plans, key=lambda r: r[0])
    t = problem.goal_vector
    # backward: pick target distances c_j in the middle of the feasible window
    cs = [0.0] * k
    cs[-1] = _dist(t, fr.axis(axes[-1]))
    for j in range(k - 2, -1, -1):
        lo, hi = chain[j]
        rlo, rhi = _range(cs[j + 1], fr.zeta)
        wlo, whi = max(lo, rlo), min(hi, rhi)
        cs[j] = 0.5 * (wlo + whi) if wlo <= whi else min(max(cs[j + 1], lo), hi)
    # forward: realize each distance with one rotation
    x = problem.start_vector
    steps = []
    for j in range(k):
        A = fr.axis(axes[j])
        if j == k - 1:
            B = fr.axis("G" if axes[j] == "H" else "H")
            eps = _azimuth_gap(x, t, A, B)
        else:
            B = fr.axis(axes[j + 1])
            eps = _angle_to_distance(x, A, B, cs[j + 1])
        steps.append(Step(normalize_angle(eps), axes[j]))
        x = rotation_about_axis(A, eps) @ x
    return EulerSequence(steps)


def transfer_sequence(problem: TransferProblem, method: str = "shortest") -> EulerSequence:
    """Rotation steps taking ``problem.start`` to ``problem.goal``.

    ``method="ladder"`` returns the simplified pole-ladder sequence.
    ``"shortest"`` also builds a minimum-length sequence and uses it when it
    is strictly shorter than the pole-ladder one.
    """
    if method not in ("ladder", "shortest"):
        raise ValueError(f"unknown method {method!r}")
    seq = ladder_transfer(problem).sequence.simplified()
    if method == "shortest":
        alt = shortest_transfer(problem)
        if len(alt) < len(seq):
            seq = alt
    return seq


# ------------------------------------------------------- closed-form counts


def _theta_step(x: float) -> int:
    return 1 if x > _TOL else 0


def _q(thetab, thetaf, phif, zeta) -> float:
    return math.cos(thetaf) - (
        math.tan(zeta) * (math.sin(thetab) - math.sin(thetaf) * math.cos(phif)) + math.cos(thetab)
    )


def min_steps_h_first(problem: TransferProblem) -> int:
    """N = 2p + 2 + Theta(q) for sequences opening with an h rotation.

    The problem is first reduced to zeta <= pi/2 and theta0 >= thetaf, as in
    :func:`ladder_transfer`.
    """
    (th0, ph0, thf, phf, zeta), _, _ = _reduce(
        problem.start.theta, problem.start.phi, problem.goal.theta, problem.goal.phi,
        problem.frame.zeta,
    )
    if abs(th0 - thf) < _TOL:
        return 1
    p = int((th0 - thf) / (2 * zeta))
    thb = th0 - 2 * p * zeta
    return 2 * p + 2 + _theta_step(_q(thb, thf, phf, zeta))


def min_steps_g_first(problem: TransferProblem) -> int:
    """N' = 2 + Theta(theta' - thetaf)[2p + 1 + Theta(q)] for sequences opening with g."""
    (th0, ph0, thf, phf, zeta), _, _ = _reduce(
        problem.start.theta, problem.start.phi, problem.goal.theta, problem.goal.phi,
        problem.frame.zeta,
    )
    thp = safe_arccos(
        math.cos(zeta) * math.cos(th0) + math.sin(zeta) * math.sin(th0) * math.cos(ph0)
    ) - zeta
    if not thp - thf > _TOL:
        return 2
    p = int((thp - thf) / (2 * zeta))
    thb = thp - 2 * p * zeta
    return 2 + 2 * p + 1 + _theta_step(_q(thb, thf, phf, zeta))
