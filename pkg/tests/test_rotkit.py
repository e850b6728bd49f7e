import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import adjoint_rotation, random_su2, random_unit, rodrigues_via_expm, taylor_expm
from opteuler.errors import DegenerateGate, FrameError, NumericError
from opteuler.rotkit import (
    I2,
    SX,
    SY,
    SZ,
    AxisFrame,
    BlochState,
    GeneratorVector,
    PolarCoords,
    bloch_roundtrip,
    embed,
    generator_matrices,
    is_so3,
    is_su2,
    params_from_su2,
    polar,
    rotation_about_axis,
    safe_arccos,
    single_step_params,
    so3_from_generator,
    so3_from_su2,
    su2_exp,
    su2_from_params,
    su2_from_so3,
    su2_rotation,
)

angles = st.floats(-10, 10, allow_nan=False)
unit_vectors = st.tuples(*[st.floats(-1, 1) for _ in range(3)]).filter(
    lambda v: np.linalg.norm(v) > 0.1
).map(lambda v: np.asarray(v) / np.linalg.norm(v))


def test_su2_from_params_examples():
    np.testing.assert_allclose(su2_from_params(0, 0, 0), I2)
    np.testing.assert_allclose(su2_from_params(math.pi / 2, 0, 0), [[0, 1], [-1, 0]], atol=1e-16)


@given(angles, angles, angles)
def test_su2_from_params_is_su2(a, b, c):
    W = su2_from_params(a, b, c)
    assert is_su2(W)
    # direct arithmetic on the defining entries
    assert W[0, 0] == pytest.approx(math.cos(a) * np.exp(1j * b))
    assert W[1, 0] == pytest.approx(-math.sin(a) * np.exp(-1j * c))


def test_params_roundtrip(rng):
    for _ in range(50):
        a = rng.uniform(0, math.pi / 2)
        b, c = rng.uniform(-math.pi, math.pi, 2)
        W = su2_from_params(a, b, c)
        np.testing.assert_allclose(su2_from_params(*params_from_su2(W)), W, atol=1e-12)


def test_su2_exp_examples():
    np.testing.assert_allclose(su2_exp((0, 0, 0), 3.0), I2)
    np.testing.assert_allclose(su2_exp((1, 0, 0), math.pi / 2), [[0, -1j], [-1j, 0]], atol=1e-15)


def test_su2_exp_matches_taylor(rng):
    for _ in range(30):
        d = rng.normal(size=3)
        t = rng.uniform(-3, 3)
        H = d[0] * SX + d[1] * SY + d[2] * SZ
        np.testing.assert_allclose(su2_exp(d, t), taylor_expm(-1j * t * H), atol=1e-12)


@given(st.tuples(*[st.floats(-3, 3) for _ in range(3)]).filter(lambda v: np.linalg.norm(v) > 1e-3), angles)
def test_su2_exp_sign_flip_half_period(d, t):
    om = np.linalg.norm(d)
    np.testing.assert_allclose(su2_exp(d, t + math.pi / om), -su2_exp(d, t), atol=1e-11)


def test_generator_vector():
    g = GeneratorVector((0.0, 3.0, 4.0))
    assert g.omega == 5.0
    np.testing.assert_allclose(g.n, [0, 0.6, 0.8])
    with pytest.raises(DegenerateGate):
        GeneratorVector((0, 0, 0)).n


def test_single_step_identity_flagged():
    r = single_step_params(I2)
    assert r.degenerate and r.omega_t == 0.0
    np.testing.assert_array_equal(r.n, [0, 0, 1])
    assert single_step_params(-I2).omega_t == pytest.approx(math.pi)
    with pytest.raises(DegenerateGate):
        single_step_params(I2, strict=True)


def test_single_step_hadamard():
    from scipy.linalg import expm

    U = expm(1j * math.pi / (2 * math.sqrt(2)) * (SX + SZ))
    r = single_step_params(U)
    assert r.omega_t == pytest.approx(math.pi / 2)
    np.testing.assert_allclose(r.n, -np.array([1, 0, 1]) / math.sqrt(2), atol=1e-12)
    np.testing.assert_allclose(su2_exp(r.generator, 1.0), U, atol=1e-10)


def test_single_step_roundtrip(rng):
    for _ in range(100):
        W = random_su2(rng)
        r = single_step_params(W)
        V = su2_exp(r.generator, 1.0)
        assert abs(np.trace(W.conj().T @ V)) / 2 == pytest.approx(1.0, abs=1e-10)


def test_so3_examples():
    np.testing.assert_allclose(so3_from_su2(I2), np.eye(3))
    U = np.cos(math.pi / 4) * I2 - 1j * np.sin(math.pi / 4) * SZ
    R = so3_from_su2(U)
    np.testing.assert_allclose(R, adjoint_rotation(U), atol=1e-14)
    np.testing.assert_allclose(R @ [1, 0, 0], [0, 1, 0], atol=1e-15)
    np.testing.assert_allclose(R @ [0, 1, 0], [-1, 0, 0], atol=1e-15)
    np.testing.assert_allclose(so3_from_su2(-1j * SX), np.diag([1, -1, -1]), atol=1e-15)


def test_so3_matches_adjoint_oracle(rng):
    for _ in range(50):
        U = random_su2(rng)
        R = so3_from_su2(U)
        assert is_so3(R)
        np.testing.assert_allclose(R, adjoint_rotation(U), atol=1e-12)


def test_homomorphism_and_sign_blindness(rng):
    for _ in range(200):
        U, V = random_su2(rng), random_su2(rng)
        np.testing.assert_allclose(so3_from_su2(U @ V), so3_from_su2(U) @ so3_from_su2(V), atol=1e-11)
        assert np.array_equal(so3_from_su2(U), so3_from_su2(-U))


def test_su2_from_so3_lift(rng):
    for _ in range(100):
        U = random_su2(rng)
        V = su2_from_so3(so3_from_su2(U))
        assert abs(abs(np.trace(U.conj().T @ V)) / 2 - 1) < 1e-12


def test_so3_from_generator_examples():
    np.testing.assert_allclose(so3_from_generator([0, 0, 1], 0.0), np.eye(3))
    _, _, Rz = generator_matrices()
    A = taylor_expm(math.pi / 4 * Rz).real
    np.testing.assert_allclose(so3_from_generator([0, 0, 1], math.pi / 4), A, atol=1e-12)
    np.testing.assert_allclose(A @ [1, 0, 0], [math.cos(math.pi / 2), -math.sin(math.pi / 2), 0], atol=1e-12)


def test_so3_from_generator_homomorphism(rng):
    gens = generator_matrices()
    for _ in range(50):
        n = random_unit(rng)
        phi = rng.uniform(-4, 4)
        A = taylor_expm(phi * sum(c * G for c, G in zip(n, gens))).real
        U = taylor_expm(1j * phi * sum(c * s for c, s in zip(n, (SX, SY, SZ))))
        np.testing.assert_allclose(so3_from_generator(n, phi), A, atol=1e-12)
        np.testing.assert_allclose(so3_from_generator(n, phi), so3_from_su2(U), atol=1e-12)


def test_rotation_about_axis():
    u = np.array([0.3, -0.4, 0.866])
    np.testing.assert_allclose(rotation_about_axis(u, 0.0), np.eye(3))
    np.testing.assert_allclose(rotation_about_axis([0, 0, 1], math.pi / 2) @ [1, 0, 0], [0, 1, 0], atol=1e-15)
    R = rotation_about_axis([1, 0, 0], math.pi)
    np.testing.assert_allclose(R @ R, np.eye(3), atol=1e-12)


@settings(max_examples=60)
@given(unit_vectors, angles, angles)
def test_rotation_about_axis_properties(u, a, b):
    R = rotation_about_axis(u, a)
    assert is_so3(R, 1e-12)
    np.testing.assert_allclose(R, so3_from_su2(su2_rotation(u, a)), atol=1e-12)
    np.testing.assert_allclose(R, rodrigues_via_expm(u, a), atol=1e-10)
    np.testing.assert_allclose(R @ rotation_about_axis(u, b), rotation_about_axis(u, a + b), atol=1e-12)


def test_frame_rejects_parallel_axes():
    with pytest.raises(FrameError):
        AxisFrame([0, 0, 1], [0, 0, 2])
    with pytest.raises(FrameError):
        AxisFrame([0, 0, 1], [0, 0, -1])
    with pytest.raises(FrameError):
        AxisFrame([0, 0, 0], [0, 0, 1])


def test_frame_orthonormal(rng):
    for _ in range(200):
        f = AxisFrame(random_unit(rng), random_unit(rng))
        B = f.basis
        np.testing.assert_allclose(B @ B.T, np.eye(3), atol=1e-12)
        assert math.cos(f.zeta) == pytest.approx(f.h @ f.g, abs=1e-12)
        np.testing.assert_allclose(f.z, f.h)
        assert f.g @ f.y == pytest.approx(0, abs=1e-12)
        assert f.g @ f.x > 0


def test_frame_from_kappa():
    f = AxisFrame.from_kappa(1.0)
    assert f.zeta == pytest.approx(math.pi / 4)
    assert AxisFrame.from_kappa(math.inf).zeta == pytest.approx(math.pi / 2)
    with pytest.raises(FrameError):
        AxisFrame.from_kappa(0.0)


def test_polar_examples():
    f = AxisFrame([0.2, 0.5, 0.1], [1, -0.3, 0.4])
    pc = polar(f.h, f)
    assert pc.theta == pytest.approx(0.0, abs=1e-15) and pc.phi == 0.0
    assert polar(-f.h, f).phi == 0.0
    pc = polar(f.x, f)
    assert pc.theta == pytest.approx(math.pi / 2) and pc.phi == pytest.approx(0.0)
    pc = polar(f.y, f)
    assert pc.theta == pytest.approx(math.pi / 2) and pc.phi == pytest.approx(math.pi / 2)


def test_polar_embed_roundtrip(rng):
    for _ in range(300):
        f = AxisFrame(random_unit(rng), random_unit(rng))
        th, ph = rng.uniform(0.01, math.pi - 0.01), rng.uniform(0, 2 * math.pi)
        pc = polar(embed(PolarCoords(th, ph), f), f)
        assert pc.theta == pytest.approx(th, abs=1e-10)
        d = (pc.phi - ph + math.pi) % (2 * math.pi) - math.pi
        assert abs(d) < 1e-10
        assert 0 <= pc.phi < 2 * math.pi


def test_safe_arccos_clamp():
    assert safe_arccos(1 + 5e-10) == 0.0
    assert safe_arccos(-1 - 5e-10) == pytest.approx(math.pi)
    with pytest.raises(NumericError):
        safe_arccos(1 + 1e-6)


def test_bloch_examples():
    rho = BlochState(1, 0, 0).density_matrix()
    np.testing.assert_allclose(rho, np.diag([1, 0]))
    assert bloch_roundtrip(BlochState(1, 0, 0)).r == pytest.approx(1)
    mixed = BlochState(0, 1.0, 2.0)
    np.testing.assert_allclose(mixed.density_matrix(), I2 / 2)
    assert bloch_roundtrip(mixed).r == 0.0
    out = bloch_roundtrip(BlochState(0.5, math.pi / 3, math.pi / 4))
    assert (out.r, out.theta, out.phi) == pytest.approx((0.5, math.pi / 3, math.pi / 4), abs=1e-10)


@given(st.floats(0, 1), st.floats(0.01, math.pi - 0.01), st.floats(0, 2 * math.pi - 1e-6))
def test_bloch_state_invariants(r, th, ph):
    s = BlochState(r, th, ph)
    rho = s.density_matrix()
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(rho, rho.conj().T)
    assert np.trace(rho @ rho).real == pytest.approx((1 + r * r) / 2, abs=1e-12)
    if r > 1e-6:
        out = bloch_roundtrip(s)
        assert out.r == pytest.approx(r, abs=1e-10)
        assert out.theta == pytest.approx(th, abs=1e-8)
