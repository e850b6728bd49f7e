"""Two-qubit gates from local factors and Ising flows.

A Cartan form is assembled as the matrix product

    U = U1 [Kx^dag Z(a1) Kx] [Ky^dag Z(a2) Ky] Z(a3) U2

with Z(a) = exp(-i a sz(x)sz) and each local factor a tensor product of two
single-qubit gates.  Qubit 1 is the most significant tensor factor.

The CNOT here uses Ising angles (pi/8, pi/8, 0) and qubit-1 locals
U_z(pi/4).  The commonly quoted (pi/4, pi/4, 0) with U_z(7pi/4) is not a
CNOT under Z(a) = exp(-i a sz(x)sz): Kx and Ky commute with sz(x)sz, so the
two flows merge into exp(-i pi/2 sz(x)sz) = -i sz(x)sz, which is local.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .decomp import decompose_su2
from .fidelity import ErrorReport, gate_fidelity, run_xz_sequence
from .gates import XZ_PRODUCTS
from .rotkit import AxisFrame, SZ

__all__ = [
    "CNOT",
    "CartanSpec",
    "ising_flow",
    "assemble",
    "cnot_spec",
    "cnot_error",
    "CNOT_ALPHAS",
]

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)
CNOT_ALPHAS = (math.pi / 8, math.pi / 8, 0.0)
_ZZ = np.kron(SZ, SZ)


def ising_flow(alpha: float) -> np.ndarray:
    """exp(-i alpha sz(x)sz), diagonal."""
    return np.diag(np.exp(-1j * alpha * np.diag(_ZZ).real))


@dataclass(frozen=True)
class CartanSpec:
    """Ising angles plus (qubit 1, qubit 2) gates for U1, U2, Kx and Ky."""

    alphas: tuple[float, float, float]
    u1: tuple[np.ndarray, np.ndarray]
    u2: tuple[np.ndarray, np.ndarray]
    kx: tuple[np.ndarray, np.ndarray]
    ky: tuple[np.ndarray, np.ndarray]

    def local(self, name: str) -> np.ndarray:
        a, b = getattr(self, name)
        return np.kron(a, b)


def assemble(spec: CartanSpec) -> np.ndarray:
    a1, a2, a3 = spec.alphas
    Kx, Ky = spec.local("kx"), spec.local("ky")
    return (
        spec.local("u1")
        @ (Kx.conj().T @ ising_flow(a1) @ Kx)
        @ (Ky.conj().T @ ising_flow(a2) @ Ky)
        @ ising_flow(a3)
        @ spec.local("u2")
    )


_CNOT_LOCALS = {
    "u1": ("U1_1", "U1_2"),
    "u2": ("U2_1", "U2_2"),
    "kx": ("Kx", "Kx"),
    "ky": ("Ky", "Ky"),
}


def _local_gate(name: str, mode: str, kappa: float) -> np.ndarray:
    steps = XZ_PRODUCTS[name]
    if mode == "ideal":
        return run_xz_sequence(steps)
    if mode == "standard":
        return run_xz_sequence(steps, kappa)
    if mode == "optimized":
        frame = AxisFrame.from_kappa(kappa)
        res = decompose_su2(run_xz_sequence(steps), frame)
        return res.sequence.su2(frame)
    raise ValueError(f"unknown execution mode {mode!r}")


def cnot_spec(mode: str = "ideal", kappa: float = math.inf) -> CartanSpec:
    """Locals of the CNOT Cartan form under an execution mode.

    ``ideal`` uses exact x/z rotations.  ``standard`` runs the same x/z steps
    with every z step about the tilted axis for ``kappa``.  ``optimized``
    decomposes each local gate over the kappa frame and runs the result.
    """
    if mode != "ideal" and not kappa > 0:
        raise ValueError("kappa must be positive")
    kw = {
        field: tuple(_local_gate(n, mode, kappa) for n in names)
        for field, names in _CNOT_LOCALS.items()
    }
    return CartanSpec(alphas=CNOT_ALPHAS, **kw)


def cnot_error(kappa: float, mode: str = "standard") -> ErrorReport:
    U = assemble(cnot_spec(mode, kappa))
    return ErrorReport(gate_fidelity(CNOT, U), f"{mode}({kappa})")


def cnot_sweep(kappas: Sequence[float]) -> list[tuple[float, float, float]]:
    """(kappa, standard error, optimized error) in input order."""
    return [
        (k, cnot_error(k, "standard").error, cnot_error(k, "optimized").error)
        for k in kappas
    ]
