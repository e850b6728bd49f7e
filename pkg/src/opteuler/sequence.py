"""Rotation step lists over two tagged axes.

Steps are stored in application order: the first step acts first, so the
matrix of ``[(a, H), (b, G)]`` is ``R_g(b) @ R_h(a)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .rotkit import AxisFrame, rotation_about_axis, su2_rotation

__all__ = ["Step", "EulerSequence", "normalize_angle", "ZERO_TOL"]

TWO_PI = 2 * math.pi
ZERO_TOL = 1e-12


def normalize_angle(eps: float) -> float:
    """Map an angle into [0, 2pi), snapping values within ZERO_TOL of 2pi to 0."""
    e = float(eps) % TWO_PI
    if TWO_PI - e < ZERO_TOL:
        e = 0.0
    return e


@dataclass(frozen=True)
class Step:
    angle: float
    axis: str

    def __post_init__(self):
        if self.axis not in ("H", "G"):
            raise ValueError(f"axis tag must be 'H' or 'G', got {self.axis!r}")
        object.__setattr__(self, "angle", float(self.angle))


@dataclass(frozen=True)
class EulerSequence:
    steps: tuple[Step, ...] = ()

    def __init__(self, steps: Iterable = ()):
        out = []
        for s in steps:
            out.append(s if isinstance(s, Step) else Step(*s))
        object.__setattr__(self, "steps", tuple(out))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def angles(self) -> list[float]:
        return [s.angle for s in self.steps]

    @property
    def axes(self) -> list[str]:
        return [s.axis for s in self.steps]

    def normalized(self) -> "EulerSequence":
        return EulerSequence(Step(normalize_angle(s.angle), s.axis) for s in self.steps)

    def simplified(self, tol: float = ZERO_TOL) -> "EulerSequence":
        """Merge adjacent same-axis steps and drop null rotations.

        Works on angles mod 2pi, so the SO(3) product is unchanged; the SU(2)
        lift can change sign.
        """
        out: list[Step] = []
        for s in self.steps:
            cur = Step(normalize_angle(s.angle), s.axis)
            # merging can null a step and expose another same-axis pair
            while True:
                if min(cur.angle, TWO_PI - cur.angle) <= tol:
                    break
                if out and out[-1].axis == cur.axis:
                    prev = out.pop()
                    cur = Step(normalize_angle(prev.angle + cur.angle), cur.axis)
                    continue
                out.append(cur)
                break
        return EulerSequence(out)

    def inverse(self) -> "EulerSequence":
        """Reversed order with negated angles, normalized."""
        return EulerSequence(
            Step(normalize_angle(-s.angle), s.axis) for s in reversed(self.steps)
        )

    def truncated(self, digits: int, mode: str = "round") -> "EulerSequence":
        """Quantize every angle to ``digits`` decimals in units of pi."""
        scale = 10.0**digits
        q = {"round": np.round, "floor": np.floor, "trunc": np.trunc}[mode]
        return EulerSequence(
            Step(float(q(s.angle / math.pi * scale)) / scale * math.pi, s.axis)
            for s in self.steps
        )

    def matrix(self, frame: AxisFrame) -> np.ndarray:
        """SO(3) product, first step rightmost."""
        R = np.eye(3)
        for s in self.steps:
            R = rotation_about_axis(frame.axis(s.axis), s.angle) @ R
        return R

    def su2(self, frame: AxisFrame) -> np.ndarray:
        """SU(2) product of exp(-i eps/2 u.sigma) factors, first step rightmost."""
        U = np.eye(2, dtype=complex)
        for s in self.steps:
            U = su2_rotation(frame.axis(s.axis), s.angle) @ U
        return U

    def apply(self, v, frame: AxisFrame) -> np.ndarray:
        return self.matrix(frame) @ np.asarray(v, dtype=float)

    def in_units_of_pi(self) -> list[tuple[float, str]]:
        return [(s.angle / math.pi, s.axis) for s in self.steps]
