"""Generalized Euler angles over two fixed, possibly non-orthogonal axes.

Any rotation is written as ``R_h(e0)`` first, then ``R_g(e1)``, then
``R_h``, then an alternating ladder of pi rotations, ending on ``h``.  With
inter-axis angle zeta the sequence has 3 steps when ``R h`` is within
``2 zeta`` of ``h`` and ``2p + 3`` steps otherwise.  That alone can be one
step over ``ceil(pi/zeta) + 1`` when ``ceil(pi/zeta)`` is odd; the default
method also tries a variant closed by a ``g`` rotation, and with it the
length stays within the bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rotkit import (
    AxisFrame,
    params_from_su2,
    polar,
    rotation_about_axis,
    safe_arccos,
    so3_from_su2,
    su2_from_so3,
)
from .sequence import EulerSequence, Step, normalize_angle

__all__ = [
    "DecompositionResult",
    "TargetGate",
    "generalized_euler_angles",
    "decompose_su2",
    "reconstruct",
    "reconstruct_su2",
    "standard_euler_angles",
    "lowenthal_bound",
    "lowenthal_bound_kappa",
    "ladder_count",
]

# slack for the ceiling in p so exact multiples of 2 zeta stay exact
_CEIL_TOL = 1e-12


@dataclass(frozen=True)
class DecompositionResult:
    sequence: EulerSequence
    p: int
    reconstructed: np.ndarray
    residual: float
    raw: EulerSequence
    variant: str = "direct"

    @property
    def length(self) -> int:
        return len(self.sequence)


@dataclass(frozen=True)
class TargetGate:
    """A single-qubit target in any of its three equivalent forms."""

    rotation: np.ndarray

    @classmethod
    def from_su2(cls, U) -> "TargetGate":
        return cls(so3_from_su2(U))

    @classmethod
    def from_generator(cls, phi: float, n) -> "TargetGate":
        """U = exp(i phi n.sigma)."""
        n = np.asarray(n, dtype=float)
        n = n / np.linalg.norm(n)
        return cls(rotation_about_axis(n, -2.0 * phi))

    @classmethod
    def from_so3(cls, R) -> "TargetGate":
        return cls(np.asarray(R, dtype=float))

    def su2(self) -> np.ndarray:
        return su2_from_so3(self.rotation)


def ladder_count(theta_af: float, zeta: float) -> int:
    """Largest integer strictly below theta_af / (2 zeta), floored at 0."""
    p = math.ceil(theta_af / (2.0 * zeta) - _CEIL_TOL)
    return max(p - 1, 0)


def _decompose_acute(R: np.ndarray, frame: AxisFrame) -> tuple[list[tuple[float, str]], int]:
    h, g, zeta = frame.h, frame.g, frame.zeta
    pa = polar(R @ h, frame)
    p = ladder_count(pa.theta, zeta)
    theta = pa.theta - 2.0 * zeta * p
    # h angle then g angle of the two-step move from the pole onto the theta-circle
    # cot(zeta) from the axes themselves: exactly 0 for orthogonal h, g
    cot = float(h @ g) / float(np.linalg.norm(np.cross(h, g)))
    e2 = -safe_arccos(cot * math.tan(theta / 2.0))
    e1 = -safe_arccos((math.cos(theta) - math.cos(zeta) ** 2) / math.sin(zeta) ** 2)
    e3 = pa.phi
    Tp = np.linalg.matrix_power(rotation_about_axis(h, math.pi) @ rotation_about_axis(g, math.pi), p)
    # e2 is the azimuth gap between the laddered point and R_g(e1) h.  The
    # closed form has a square-root singularity at theta = 2 zeta, so take
    # the gap from the actual points (identical in exact arithmetic).
    c = Tp @ rotation_about_axis(h, -e3) @ R @ h
    q = rotation_about_axis(g, e1) @ h
    if math.hypot(float(q @ frame.x), float(q @ frame.y)) > 1e-6:
        e2 = polar(c, frame).phi - polar(q, frame).phi
    S1 = rotation_about_axis(g, -e1) @ rotation_about_axis(h, -e2) @ Tp @ rotation_about_axis(h, -e3)
    b = S1 @ R @ rotation_about_axis(frame.y, math.pi / 2) @ h
    e0 = polar(b, frame).phi
    if p == 0:
        steps = [(e0, "H"), (e1, "G"), (e2 + e3, "H")]
    else:
        ladder = [(math.pi, "G" if i % 2 == 0 else "H") for i in range(2 * p - 1)]
        steps = [(e0, "H"), (e1, "G"), (e2 + math.pi, "H")] + ladder + [(e3, "H")]
    return [(normalize_angle(e), a) for e, a in steps], p


def _assemble(R, frame, steps, p, simplify, variant):
    raw = EulerSequence(Step(e, a) for e, a in steps)
    seq = raw.simplified() if simplify else raw
    rec = seq.matrix(frame)
    return DecompositionResult(seq, p, rec, float(np.linalg.norm(rec - R)), raw, variant)


def _plan(R: np.ndarray, frame: AxisFrame, closing: bool):
    """Steps for R; with ``closing`` a final g step absorbs part of the move."""
    if closing:
        # rotate R h about g onto the h-g half plane containing h
        delta = polar(R @ frame.h, AxisFrame(frame.g, frame.h)).phi
        R = rotation_about_axis(frame.g, -delta) @ R
    if frame.zeta > math.pi / 2:
        steps, p = _decompose_acute(R, AxisFrame(frame.h, -frame.g))
        steps = [(normalize_angle(-e) if a == "G" else e, a) for e, a in steps]
    else:
        steps, p = _decompose_acute(R, frame)
    if closing:
        steps = steps + [(normalize_angle(delta), "G")]
    return steps, p


def generalized_euler_angles(
    R, frame: AxisFrame, simplify: bool = True, method: str = "shortest"
) -> DecompositionResult:
    """Decompose the rotation ``R`` into steps about ``frame.h`` and ``frame.g``.

    ``method="direct"`` runs the pole-ladder construction only; its raw
    sequence has 3 or 2p + 3 steps.  For a large tilt of R h and an odd
    ceil(pi/zeta) this can be one step over the Lowenthal bound, so the
    default ``"shortest"`` also tries a variant ending with a g rotation
    (2p + 4 raw steps) and keeps it only when it is strictly shorter.

    For an obtuse frame (zeta > pi/2) the problem is solved over (h, -g),
    whose angle is pi - zeta, and every g angle is negated on the way back.
    """
    R = np.asarray(R, dtype=float)
    if method not in ("direct", "shortest"):
        raise ValueError(f"unknown method {method!r}")
    steps, p = _plan(R, frame, closing=False)
    best = _assemble(R, frame, steps, p, simplify, "direct")
    if method == "shortest":
        steps, p = _plan(R, frame, closing=True)
        alt = _assemble(R, frame, steps, p, simplify, "closing-g")
        if len(alt.sequence) < len(best.sequence):
            best = alt
    return best


def decompose_su2(U, frame: AxisFrame, simplify: bool = True) -> DecompositionResult:
    return generalized_euler_angles(so3_from_su2(U), frame, simplify)


def reconstruct(seq: EulerSequence, frame: AxisFrame) -> np.ndarray:
    return seq.matrix(frame)


def reconstruct_su2(seq: EulerSequence, frame: AxisFrame) -> np.ndarray:
    return seq.su2(frame)


def standard_euler_angles(W) -> EulerSequence:
    """z-x-z Euler angles for the orthogonal frame h = z, g = x.

    With W = W(alpha, beta, gamma) the steps, in application order, are
    z(gamma - beta + pi/2), x(2 alpha), z(-beta - gamma - pi/2); their SU(2)
    product equals W up to sign.  The returned sequence uses tag H for z
    and G for x, so build the frame as ``AxisFrame(z, x)``.
    """
    alpha, beta, gamma = params_from_su2(W)
    steps = [
        (gamma - beta + math.pi / 2, "H"),
        (2.0 * alpha, "G"),
        (-beta - gamma - math.pi / 2, "H"),
    ]
    return EulerSequence(Step(normalize_angle(e), a) for e, a in steps)


def lowenthal_bound(zeta: float) -> int:
    """At most ceil(pi/zeta) + 1 alternating steps reach any rotation."""
    if not 0 < zeta <= math.pi / 2 + 1e-15:
        raise ValueError("zeta must lie in (0, pi/2]")
    return math.ceil(math.pi / zeta - _CEIL_TOL) + 1


def lowenthal_bound_kappa(kappa: float) -> int:
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    if math.isinf(kappa):
        return lowenthal_bound(math.pi / 2)
    return lowenthal_bound(math.acos(1.0 / math.sqrt(1.0 + kappa * kappa)))
