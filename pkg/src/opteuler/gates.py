"""Named single-qubit gates.

Products of elementary rotations are listed in application order, so
``("x", a), ("z", b)`` is the matrix ``U_z(b) @ U_x(a)`` with
``U_u(a) = exp(-i a/2 sigma_u)``.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import expm

from .fidelity import run_xz_sequence
from .rotkit import I2, SX, SZ

__all__ = ["NAMED_GATES", "XZ_PRODUCTS", "STANDARD_SEQUENCES", "named_gate", "TABLE_GATES"]

_P = math.pi

# gates defined as x/z products, also used as their ideal sequences
XZ_PRODUCTS: dict[str, tuple[tuple[str, float], ...]] = {
    "X": (("x", _P),),
    "Z": (("z", _P),),
    "Kx": (("x", _P),),
    "Ky": (("x", _P), ("z", _P)),
    "U1_1": (("z", 0.25 * _P),),
    "U2_1": (("z", 0.25 * _P),),
    "U1_2": (("x", 0.5 * _P), ("z", 1.5 * _P), ("x", 1.5 * _P)),
    "U2_2": (("z", 1.5 * _P), ("x", 0.5 * _P)),
}

NAMED_GATES: dict[str, np.ndarray] = {
    "I": I2.copy(),
    "T": expm(1j * _P / 8 * SZ),
    "S": expm(1j * _P / 4 * SZ),
    "Had": expm(1j * _P / (2 * math.sqrt(2)) * (SX + SZ)),
}
NAMED_GATES.update({k: run_xz_sequence(v) for k, v in XZ_PRODUCTS.items()})

# ideal x/z sequences used as the baseline for the tabulated gates
STANDARD_SEQUENCES: dict[str, tuple[tuple[str, float], ...]] = {
    "T": (("z", 1.75 * _P),),
    "S": (("z", 1.5 * _P),),
    "Had": (("x", 1.5 * _P), ("z", 1.5 * _P), ("x", 1.5 * _P)),
    "U1_2": XZ_PRODUCTS["U1_2"],
    "U2_2": XZ_PRODUCTS["U2_2"],
    "Ky": XZ_PRODUCTS["Ky"],
}

# rows of the reference optimized-angle table, in its order
TABLE_GATES = ("T", "S", "Had", "U1_2", "U2_2", "Ky")


def named_gate(name: str) -> np.ndarray:
    try:
        return NAMED_GATES[name].copy()
    except KeyError:
        raise KeyError(f"unknown gate {name!r}; known: {sorted(NAMED_GATES)}") from None
