"""SU(2)/SO(3) primitives, axis frames, polar coordinates and Bloch states.

Conventions
-----------
A rotation by ``eps`` about the unit axis ``u`` is the adjoint action of
``exp(-i eps/2 u.sigma)``; it is right handed, so a rotation by pi/2 about
z sends x to y.  Gates are plain ``numpy`` arrays: 2x2 complex for SU(2)
and 3x3 real for SO(3).  All angles are in radians.

Bloch states use the linear radius ``r`` in ``rho = (I + r s.sigma)/2``,
which gives purity ``(1 + r**2)/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateGate, FrameError, NumericError

__all__ = [
    "I2",
    "SX",
    "SY",
    "SZ",
    "PAULI",
    "CLAMP_TOL",
    "POLE_TOL",
    "safe_arccos",
    "safe_arcsin",
    "is_su2",
    "is_so3",
    "su2_from_params",
    "params_from_su2",
    "GeneratorVector",
    "su2_exp",
    "SingleStep",
    "single_step_params",
    "so3_from_su2",
    "su2_from_so3",
    "generator_matrices",
    "so3_from_generator",
    "rotation_about_axis",
    "su2_rotation",
    "AxisFrame",
    "PolarCoords",
    "polar",
    "embed",
    "BlochState",
    "bloch_roundtrip",
]

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SX, SY, SZ)

# arguments of arccos/arcsin this far outside [-1, 1] are treated as roundoff
CLAMP_TOL = 1e-9
# below this transverse length a vector sits on a pole and phi is set to 0
POLE_TOL = 1e-12


def _clamp_unit(x: float, name: str) -> float:
    x = float(x)
    if abs(x) <= 1.0:
        return x
    if abs(x) <= 1.0 + CLAMP_TOL:
        return math.copysign(1.0, x)
    raise NumericError(f"{name} argument {x!r} lies outside [-1, 1]")


def safe_arccos(x: float) -> float:
    """arccos that clamps roundoff excursions and rejects real ones."""
    return math.acos(_clamp_unit(x, "arccos"))


def safe_arcsin(x: float) -> float:
    """arcsin counterpart of :func:`safe_arccos`."""
    return math.asin(_clamp_unit(x, "arcsin"))


def _unit(v, name: str = "vector") -> np.ndarray:
    v = np.asarray(v, dtype=float).reshape(3)
    n = np.linalg.norm(v)
    if not np.isfinite(n) or n < 1e-15:
        raise FrameError(f"{name} must be a nonzero finite 3-vector")
    return v / n


def is_su2(U, tol: float = 1e-12) -> bool:
    U = np.asarray(U)
    if U.shape != (2, 2):
        return False
    unitary = np.allclose(U.conj().T @ U, I2, rtol=0, atol=tol)
    return bool(unitary and abs(np.linalg.det(U) - 1) < tol)


def is_so3(R, tol: float = 1e-12) -> bool:
    R = np.asarray(R)
    if R.shape != (3, 3) or np.iscomplexobj(R):
        return False
    orth = np.allclose(R.T @ R, np.eye(3), rtol=0, atol=tol)
    return bool(orth and abs(np.linalg.det(R) - 1) < tol)


def su2_from_params(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """W(alpha, beta, gamma) = [[cos a e^{ib}, sin a e^{ig}], [-sin a e^{-ig}, cos a e^{-ib}]]."""
    ca, sa = math.cos(alpha), math.sin(alpha)
    eb, eg = np.exp(1j * beta), np.exp(1j * gamma)
    return np.array(
        [[ca * eb, sa * eg], [-sa * np.conj(eg), ca * np.conj(eb)]], dtype=complex
    )


def params_from_su2(W) -> tuple[float, float, float]:
    """Inverse of :func:`su2_from_params` with alpha in [0, pi/2].

    A U(2) input is first divided by a square root of its determinant.
    When one of the two entries vanishes its phase is set to 0.
    """
    W = np.asarray(W, dtype=complex)
    W = W / np.sqrt(np.linalg.det(W))
    w11, w12 = W[0, 0], W[0, 1]
    alpha = math.atan2(abs(w12), abs(w11))
    beta = float(np.angle(w11)) if abs(w11) > POLE_TOL else 0.0
    gamma = float(np.angle(w12)) if abs(w12) > POLE_TOL else 0.0
    return alpha, beta, gamma


@dataclass(frozen=True)
class GeneratorVector:
    """Hamiltonian vector d with H = d.sigma; Omega = |d| and n = d/Omega."""

    d: tuple[float, float, float]

    def __post_init__(self):
        d = tuple(float(c) for c in np.asarray(self.d, dtype=float).reshape(3))
        object.__setattr__(self, "d", d)

    @property
    def omega(self) -> float:
        return float(np.linalg.norm(self.d))

    @property
    def n(self) -> np.ndarray:
        om = self.omega
        if om == 0.0:
            raise DegenerateGate("zero generator has no axis")
        return np.asarray(self.d) / om

    def hamiltonian(self) -> np.ndarray:
        return sum(c * s for c, s in zip(self.d, PAULI))


def su2_exp(d, t: float = 1.0) -> np.ndarray:
    """exp(-i t d.sigma) in closed form."""
    if not isinstance(d, GeneratorVector):
        d = GeneratorVector(d)
    om = d.omega
    if om == 0.0:
        return I2.copy()
    n = np.asarray(d.d) / om
    c, s = math.cos(om * t), math.sin(om * t)
    return c * I2 - 1j * s * (n[0] * SX + n[1] * SY + n[2] * SZ)


@dataclass(frozen=True)
class SingleStep:
    """Axis and duration of a single constant Hamiltonian realizing a gate."""

    n: np.ndarray
    omega_t: float
    degenerate: bool = False

    @property
    def generator(self) -> GeneratorVector:
        return GeneratorVector(self.n * self.omega_t)


def single_step_params(W, strict: bool = False) -> SingleStep:
    """Find n and Omega*T with exp(-i Omega T n.sigma) = W.

    For W = +-I the axis is undefined.  The result is then flagged as
    degenerate with axis z; ``strict=True`` raises :class:`DegenerateGate`
    instead.
    """
    W = np.asarray(W, dtype=complex)
    # Re W11 = cos a cos b
    omega_t = safe_arccos(W[0, 0].real)
    s = math.sin(omega_t)
    if abs(s) < 1e-12:
        if strict:
            raise DegenerateGate("W = +-I has no rotation axis")
        return SingleStep(np.array([0.0, 0.0, 1.0]), omega_t, True)
    n = -np.array([W[0, 1].imag, W[0, 1].real, W[0, 0].imag]) / s
    return SingleStep(n / np.linalg.norm(n), omega_t, False)


def so3_from_su2(U) -> np.ndarray:
    """R with U (s.sigma) U^dag = (R s).sigma, i.e. R_ij = Tr(s_i U s_j U^dag)/2."""
    U = np.asarray(U, dtype=complex)
    Ud = U.conj().T
    R = np.empty((3, 3))
    for i, si in enumerate(PAULI):
        for j, sj in enumerate(PAULI):
            R[i, j] = 0.5 * np.trace(si @ U @ sj @ Ud).real
    return R


def su2_from_so3(R) -> np.ndarray:
    """One of the two SU(2) lifts of R (the sign is not meaningful)."""
    R = np.asarray(R, dtype=float)
    # axis-angle via the unit quaternion with the largest component
    tr = np.trace(R)
    q = np.empty(4)
    k = int(np.argmax([tr, R[0, 0], R[1, 1], R[2, 2]]))
    if k == 0:
        w = 0.5 * math.sqrt(max(1.0 + tr, 0.0))
        q[:] = [w, (R[2, 1] - R[1, 2]) / (4 * w), (R[0, 2] - R[2, 0]) / (4 * w),
                (R[1, 0] - R[0, 1]) / (4 * w)]
    else:
        i = k - 1
        j, l = (i + 1) % 3, (i + 2) % 3
        v = 0.5 * math.sqrt(max(1.0 + R[i, i] - R[j, j] - R[l, l], 0.0))
        q[0] = (R[l, j] - R[j, l]) / (4 * v)
        q[1 + i] = v
        q[1 + j] = (R[i, j] + R[j, i]) / (4 * v)
        q[1 + l] = (R[i, l] + R[l, i]) / (4 * v)
    q /= np.linalg.norm(q)
    return q[0] * I2 - 1j * (q[1] * SX + q[2] * SY + q[3] * SZ)


def generator_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The factor-2 so(3) generators R_x, R_y, R_z."""
    Rx = np.array([[0, 0, 0], [0, 0, 2], [0, -2, 0]], dtype=float)
    Ry = np.array([[0, 0, -2], [0, 0, 0], [2, 0, 0]], dtype=float)
    Rz = np.array([[0, 2, 0], [-2, 0, 0], [0, 0, 0]], dtype=float)
    return Rx, Ry, Rz


def _skew(u: np.ndarray) -> np.ndarray:
    return np.array([[0, -u[2], u[1]], [u[2], 0, -u[0]], [-u[1], u[0], 0]])


def rotation_about_axis(u, eps: float) -> np.ndarray:
    """Right-handed Rodrigues rotation by ``eps`` about ``u``."""
    u = _unit(u, "axis")
    K = _skew(u)
    return np.eye(3) + math.sin(eps) * K + (1.0 - math.cos(eps)) * (K @ K)


def su2_rotation(u, eps: float) -> np.ndarray:
    """exp(-i eps/2 u.sigma), the SU(2) lift of :func:`rotation_about_axis`."""
    u = _unit(u, "axis")
    return math.cos(eps / 2) * I2 - 1j * math.sin(eps / 2) * (
        u[0] * SX + u[1] * SY + u[2] * SZ
    )


def so3_from_generator(n, phi: float) -> np.ndarray:
    """exp[phi (n_x R_x + n_y R_y + n_z R_z)], equal to so3 of exp(i phi n.sigma).

    The factor-2 generators make this a rotation by -2*phi about n.
    """
    return rotation_about_axis(n, -2.0 * phi)


@dataclass(frozen=True)
class AxisFrame:
    """Two rotation axes h, g and the orthonormal frame z = h, y ~ h x g, x = y x h."""

    h: np.ndarray
    g: np.ndarray
    x: np.ndarray = field(init=False, repr=False)
    y: np.ndarray = field(init=False, repr=False)
    z: np.ndarray = field(init=False, repr=False)
    zeta: float = field(init=False)

    def __post_init__(self):
        h = _unit(self.h, "h")
        g = _unit(self.g, "g")
        y = np.cross(h, g)
        ny = np.linalg.norm(y)
        if ny < 1e-12:
            raise FrameError("axes h and g are parallel; frame undefined")
        y = y / ny
        for name, val in (("h", h), ("g", g), ("x", np.cross(y, h)), ("y", y), ("z", h)):
            val.setflags(write=False)
            object.__setattr__(self, name, val)
        object.__setattr__(self, "zeta", math.atan2(ny, float(h @ g)))

    @classmethod
    def from_kappa(cls, kappa: float) -> "AxisFrame":
        """h = x (fixed coupling), g = (x + kappa z)/sqrt(1 + kappa^2)."""
        if not kappa > 0:
            raise FrameError("kappa must be positive")
        if math.isinf(kappa):
            return cls(np.array([1.0, 0.0, 0.0]), np.array([0.0, 0.0, 1.0]))
        return cls(np.array([1.0, 0.0, 0.0]), np.array([1.0, 0.0, kappa]))

    def axis(self, tag: str) -> np.ndarray:
        if tag == "H":
            return self.h
        if tag == "G":
            return self.g
        raise ValueError(f"unknown axis tag {tag!r}")

    @property
    def basis(self) -> np.ndarray:
        """Rows x, y, z."""
        return np.vstack([self.x, self.y, self.z])


@dataclass(frozen=True)
class PolarCoords:
    theta: float
    phi: float

    def __post_init__(self):
        if not (-1e-12 <= self.theta <= math.pi + 1e-12):
            raise ValueError(f"theta={self.theta} outside [0, pi]")


def polar(a, frame: AxisFrame) -> PolarCoords:
    """Polar angles of ``a`` relative to ``frame``; phi = 0 on the poles."""
    a = np.asarray(a, dtype=float)
    ax, ay, az = float(a @ frame.x), float(a @ frame.y), float(a @ frame.z)
    rho = math.hypot(ax, ay)
    theta = math.atan2(rho, az)
    if rho < POLE_TOL:
        return PolarCoords(theta, 0.0)
    phi = math.atan2(ay, ax) % (2 * math.pi)
    if phi >= 2 * math.pi:
        phi = 0.0
    return PolarCoords(theta, phi)


def embed(pc: PolarCoords, frame: AxisFrame) -> np.ndarray:
    """Unit vector with the given polar angles in ``frame``."""
    st = math.sin(pc.theta)
    return (
        st * math.cos(pc.phi) * frame.x
        + st * math.sin(pc.phi) * frame.y
        + math.cos(pc.theta) * frame.z
    )


@dataclass(frozen=True)
class BlochState:
    """Qubit state rho = (I + r s.sigma)/2 with s at polar angles (theta, phi)."""

    r: float
    theta: float
    phi: float

    def __post_init__(self):
        if not (0.0 <= self.r <= 1.0 + 1e-12):
            raise ValueError(f"purity radius r={self.r} outside [0, 1]")

    @property
    def vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return self.r * np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )

    def density_matrix(self) -> np.ndarray:
        v = self.vector
        return 0.5 * (I2 + v[0] * SX + v[1] * SY + v[2] * SZ)

    @classmethod
    def from_density(cls, rho) -> "BlochState":
        rho = np.asarray(rho, dtype=complex)
        v = np.array([np.trace(rho @ s).real for s in PAULI])
        r = float(np.linalg.norm(v))
        if r < POLE_TOL:
            return cls(0.0, 0.0, 0.0)
        theta = safe_arccos(v[2] / r)
        if math.hypot(v[0], v[1]) < POLE_TOL * r:
            phi = 0.0
        else:
            phi = math.atan2(v[1], v[0]) % (2 * math.pi)
        return cls(min(r, 1.0), theta, phi)


def bloch_roundtrip(state: BlochState) -> BlochState:
    return BlochState.from_density(state.density_matrix())
