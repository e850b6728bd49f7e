"""Optimized-angle table for the standard gate set.

``REFERENCE`` holds the tabulated values: for each gate and kappa the
baseline error E0 in percent and the optimized angles in units of pi,
alternating H1, H2, H1, ... in application order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .decomp import decompose_su2, lowenthal_bound_kappa
from .fidelity import gate_fidelity, standard_sequence_error
from .gates import STANDARD_SEQUENCES, TABLE_GATES, named_gate
from .rotkit import AxisFrame
from .sequence import EulerSequence, Step

__all__ = [
    "KAPPAS",
    "REFERENCE",
    "TableRow",
    "table_row",
    "compute_table",
    "angles_match",
    "reference_sequence",
    "reference_sequence_error",
]

INF = math.inf
KAPPAS = (INF, 100.0, 50.0, 10.0, 5.0, 1.0)

REFERENCE: dict[str, dict[float, tuple[float, tuple[float, ...]]]] = {
    "T": {
        INF: (0.0, (0.0, 1.75, 0.0)),
        100.0: (0.0007, (0.0013, 1.7500, 0.0013)),
        50.0: (0.0029, (0.0026, 1.7499, 0.0026)),
        10.0: (0.0727, (0.0132, 1.7487, 0.0132)),
        5.0: (0.2844, (0.0264, 1.7448, 0.0264)),
        1.0: (4.2893, (0.1359, 1.6359, 0.1359)),
    },
    "S": {
        INF: (0.0, (0.0, 1.5, 0.0)),
        100.0: (0.0025, (0.0032, 1.5000, 0.0032)),
        50.0: (0.0100, (0.0064, 1.4999, 0.0064)),
        10.0: (0.2481, (0.0319, 1.4968, 0.0319)),
        5.0: (0.9710, (0.0641, 1.4873, 0.0641)),
        1.0: (14.6446, (0.5000, 1.0, 0.5000)),
    },
    "Had": {
        INF: (0.0, (1.5, 1.5, 1.5)),
        100.0: (0.0025, (1.5032, 1.5000, 1.5032)),
        50.0: (0.0100, (1.5064, 1.4999, 1.5064)),
        10.0: (0.2481, (1.5319, 1.4968, 1.5319)),
        5.0: (0.9709, (1.5641, 1.4873, 1.5641)),
        1.0: (14.6442, (0.0, 1.0, 0.0)),
    },
    "U1_2": {
        INF: (0.0, (0.5, 1.5, 1.5)),
        100.0: (0.0025, (0.5032, 1.5000, 1.5032)),
        50.0: (0.0100, (0.5064, 1.4999, 1.5064)),
        10.0: (0.2481, (0.5319, 1.4968, 1.5319)),
        5.0: (0.9709, (0.5641, 1.4873, 1.5641)),
        1.0: (14.6443, (1.0, 1.0, 0.0)),
    },
    "U2_2": {
        INF: (0.0, (0.0, 1.5, 0.5)),
        100.0: (0.0025, (0.0032, 1.5000, 0.5032)),
        50.0: (0.0100, (0.0064, 1.4999, 0.5064)),
        10.0: (0.2481, (0.0319, 1.4968, 0.5319)),
        5.0: (0.9709, (0.0641, 1.4873, 0.5641)),
        1.0: (14.6445, (0.5000, 1.0, 1.0)),
    },
    "Ky": {
        INF: (0.0, (0.0, 0.0, 1.0, 1.0)),
        100.0: (0.0050, (0.5000, 1.9936, 0.5000, 1.0)),
        50.0: (0.0200, (0.5001, 1.9873, 0.5001, 1.0)),
        10.0: (0.4963, (0.5032, 1.9362, 0.5032, 1.0)),
        5.0: (1.9419, (0.5127, 1.8718, 0.5127, 1.0)),
        1.0: (29.2893, (1.0, 1.0, 1.0, 1.0)),
    },
}

ANGLE_TOL = 1e-4  # units of pi
E0_TOL = 2e-4  # percentage points


def reference_sequence(gate: str, kappa: float) -> EulerSequence:
    """Tabulated angles as a sequence (radians), before simplification."""
    _, angles = REFERENCE[gate][kappa]
    return EulerSequence(
        Step(a * math.pi, "H" if i % 2 == 0 else "G") for i, a in enumerate(angles)
    )


def angles_match(seq: EulerSequence, ref: EulerSequence, tol: float = ANGLE_TOL) -> bool:
    """Same axis pattern and angles within ``tol`` (units of pi, mod 2).

    Both sides are simplified first, so zero steps and merged neighbours in
    the tabulated form (e.g. 0, 1, 0 for a single pi step) compare equal.
    """
    a, b = seq.simplified(), ref.simplified()
    if a.axes != b.axes:
        return False
    for x, y in zip(a.angles, b.angles):
        d = abs(x - y) / math.pi % 2.0
        if min(d, 2.0 - d) > tol:
            return False
    return True


@dataclass(frozen=True)
class TableRow:
    gate: str
    kappa: float
    e0_percent: float
    sequence: EulerSequence
    lowenthal_bound: int
    error_full: float
    error_rounded: float
    ref_e0_percent: float
    ref_sequence: EulerSequence

    @property
    def angles_ok(self) -> bool:
        return angles_match(self.sequence, self.ref_sequence)

    @property
    def e0_ok(self) -> bool:
        return abs(self.e0_percent - self.ref_e0_percent) <= E0_TOL + 1e-12

    @property
    def angles_pi(self) -> list[float]:
        return [a / math.pi for a in self.sequence.angles]


def table_row(gate: str, kappa: float, digits: int = 4, mode: str = "round") -> TableRow:
    U = named_gate(gate)
    frame = AxisFrame.from_kappa(kappa)
    seq = decompose_su2(U, frame).sequence
    e0 = standard_sequence_error(STANDARD_SEQUENCES[gate], kappa, U).error * 100.0
    full = 1.0 - gate_fidelity(U, seq.su2(frame))
    rounded = 1.0 - gate_fidelity(U, seq.truncated(digits, mode).su2(frame))
    ref_e0, _ = REFERENCE[gate][kappa]
    return TableRow(
        gate, kappa, e0, seq, lowenthal_bound_kappa(kappa), full, rounded,
        ref_e0, reference_sequence(gate, kappa),
    )


def compute_table(digits: int = 4, mode: str = "round") -> list[TableRow]:
    return [table_row(g, k, digits, mode) for g in TABLE_GATES for k in KAPPAS]


def reference_sequence_error(gate: str, kappa: float) -> float:
    """Gate error of the tabulated (4-decimal) angles themselves."""
    frame = AxisFrame.from_kappa(kappa)
    V = reference_sequence(gate, kappa).su2(frame)
    return 1.0 - gate_fidelity(named_gate(gate), V)
