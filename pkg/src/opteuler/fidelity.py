"""Gate fidelity under a tilted control axis.

The hardware offers H1 ~ sigma_x and H2 ~ sigma_x + kappa sigma_z.  A
sequence written for orthogonal x/z axes that is run on this hardware
performs every z step about the tilted axis (x + kappa z)/sqrt(1 + kappa^2).
The tilt is measured by zeta, the angle between the two axes, with
cos(zeta) = 1/sqrt(1 + kappa^2), or by the fraction epsilon where
sin(zeta) = cos(epsilon pi/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .rotkit import su2_rotation

__all__ = [
    "TiltModel",
    "ErrorReport",
    "gate_fidelity",
    "tilted_axis",
    "tilted_z_fidelity",
    "average_tilt_error",
    "max_tilt_error",
    "threshold_kappa",
    "run_xz_sequence",
    "standard_sequence_error",
]


@dataclass(frozen=True)
class TiltModel:
    kappa: float

    def __post_init__(self):
        if not self.kappa > 0:
            raise ValueError("kappa must be positive")

    @property
    def zeta(self) -> float:
        if math.isinf(self.kappa):
            return math.pi / 2
        return math.atan(self.kappa)

    @property
    def epsilon(self) -> float:
        """Tilt fraction with zeta = (1 - epsilon) pi/2."""
        return 1.0 - 2.0 * self.zeta / math.pi

    @classmethod
    def from_epsilon(cls, epsilon: float) -> "TiltModel":
        zeta = (1.0 - epsilon) * math.pi / 2
        if abs(zeta - math.pi / 2) < 1e-15:
            return cls(math.inf)
        return cls(math.tan(zeta))

    def axis(self) -> np.ndarray:
        return tilted_axis(self.kappa)


@dataclass(frozen=True)
class ErrorReport:
    fidelity: float
    model: str = "ideal"

    @property
    def error(self) -> float:
        return 1.0 - self.fidelity


def gate_fidelity(U, V) -> float:
    """|Tr(U^dag V)| / d, insensitive to global phase."""
    U = np.asarray(U, dtype=complex)
    V = np.asarray(V, dtype=complex)
    f = float(abs(np.trace(U.conj().T @ V)) / U.shape[0])
    return min(f, 1.0)


def tilted_axis(kappa: float) -> np.ndarray:
    if math.isinf(kappa):
        return np.array([0.0, 0.0, 1.0])
    return np.array([1.0, 0.0, kappa]) / math.sqrt(1.0 + kappa * kappa)


def tilted_z_fidelity(beta: float, epsilon: float) -> float:
    """Closed-form fidelity of a z rotation by beta run about the tilted axis."""
    c = math.cos(epsilon * math.pi / 2)
    return math.cos(beta / 2) ** 2 * (1.0 - c) + abs(c)


def average_tilt_error(epsilon: float) -> float:
    """Mean of 1 - tilted_z_fidelity over beta uniform on [0, 2 pi)."""
    return 0.5 * (1.0 - math.cos(epsilon * math.pi / 2))


def max_tilt_error(epsilon: float) -> float:
    """Worst case over beta, reached at beta = pi."""
    return 1.0 - abs(math.cos(epsilon * math.pi / 2))


def threshold_kappa(max_error: float) -> float:
    """Smallest kappa whose worst single-qubit tilt error is at most max_error."""
    if not 0.0 < max_error < 1.0:
        raise ValueError("max_error must lie in (0, 1)")
    s = 1.0 - max_error
    return s / math.sqrt(1.0 - s * s)


def run_xz_sequence(steps: Sequence[tuple[str, float]], kappa: float = math.inf) -> np.ndarray:
    """SU(2) product of ('x'|'z', angle) steps in application order.

    x steps are exact; z steps run about :func:`tilted_axis` (exact z for
    kappa = inf).
    """
    zaxis = tilted_axis(kappa)
    xaxis = np.array([1.0, 0.0, 0.0])
    U = np.eye(2, dtype=complex)
    for ax, a in steps:
        if ax == "x":
            u = xaxis
        elif ax == "z":
            u = zaxis
        else:
            raise ValueError(f"axis must be 'x' or 'z', got {ax!r}")
        U = su2_rotation(u, a) @ U
    return U


def standard_sequence_error(steps, kappa: float, target) -> ErrorReport:
    """Error of an ideal x/z sequence executed with tilted z steps."""
    V = run_xz_sequence(steps, kappa)
    return ErrorReport(gate_fidelity(target, V), f"tilted({kappa})")
