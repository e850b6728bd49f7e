import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import random_unit
from opteuler.rotkit import AxisFrame, rotation_about_axis
from opteuler.sequence import EulerSequence, Step, normalize_angle

step = st.tuples(st.floats(-20, 20, allow_nan=False), st.sampled_from("HG"))


@pytest.fixture
def frame():
    return AxisFrame([0.0, 0.0, 1.0], [math.sin(1.0), 0.0, math.cos(1.0)])


def test_normalize_angle():
    assert normalize_angle(-math.pi / 2) == pytest.approx(1.5 * math.pi)
    assert normalize_angle(2 * math.pi) == 0.0
    assert normalize_angle(2 * math.pi - 1e-14) == 0.0
    assert normalize_angle(7 * math.pi) == pytest.approx(math.pi)


def test_step_rejects_bad_axis():
    with pytest.raises(ValueError):
        Step(1.0, "X")


def test_matrix_order(frame):
    seq = EulerSequence([(0.3, "H"), (1.1, "G")])
    want = rotation_about_axis(frame.g, 1.1) @ rotation_about_axis(frame.h, 0.3)
    np.testing.assert_allclose(seq.matrix(frame), want)


def test_simplify_examples():
    seq = EulerSequence([(0.0, "H"), (math.pi, "G"), (0.0, "H")])
    assert seq.simplified().in_units_of_pi() == [(1.0, "G")]
    seq = EulerSequence([(0.5, "H"), (0.25, "H"), (1.0, "G")])
    s = seq.simplified()
    assert s.axes == ["H", "G"] and s.angles[0] == pytest.approx(0.75)
    # a cancelling pair exposes another merge
    seq = EulerSequence([(0.2, "G"), (1.0, "H"), (-1.0, "H"), (0.3, "G")])
    s = seq.simplified()
    assert s.axes == ["G"] and s.angles[0] == pytest.approx(0.5)
    assert len(EulerSequence().simplified()) == 0


@given(st.lists(step, max_size=8))
def test_simplify_preserves_rotation_and_alternates(steps):
    f = AxisFrame([0.0, 0.0, 1.0], [math.sin(1.0), 0.0, math.cos(1.0)])
    seq = EulerSequence(steps)
    s = seq.simplified()
    np.testing.assert_allclose(s.matrix(f), seq.matrix(f), atol=1e-9)
    assert all(a != b for a, b in zip(s.axes, s.axes[1:]))
    assert all(0 < e < 2 * math.pi for e in s.angles)
    assert len(s) <= len(seq)


@given(st.lists(step, max_size=8))
def test_inverse(steps):
    f = AxisFrame([0.0, 0.0, 1.0], [math.sin(1.0), 0.0, math.cos(1.0)])
    seq = EulerSequence(steps)
    np.testing.assert_allclose(seq.inverse().matrix(f) @ seq.matrix(f), np.eye(3), atol=1e-9)


def test_truncated_modes():
    seq = EulerSequence([(0.123456 * math.pi, "H"), (-0.98767 * math.pi, "G")])
    assert [a for a, _ in seq.truncated(4).in_units_of_pi()] == pytest.approx([0.1235, -0.9877])
    assert [a for a, _ in seq.truncated(4, "trunc").in_units_of_pi()] == pytest.approx([0.1234, -0.9876])
    assert [a for a, _ in seq.truncated(4, "floor").in_units_of_pi()] == pytest.approx([0.1234, -0.9877])


def test_su2_projects_to_matrix(rng):
    from opteuler.rotkit import so3_from_su2

    f = AxisFrame(random_unit(rng), random_unit(rng))
    seq = EulerSequence((rng.uniform(0, 6), "HG"[i % 2]) for i in range(5))
    np.testing.assert_allclose(so3_from_su2(seq.su2(f)), seq.matrix(f), atol=1e-12)
    v = random_unit(rng)
    np.testing.assert_allclose(seq.apply(v, f), seq.matrix(f) @ v)
