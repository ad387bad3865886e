import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pixelmpc.errors import ContractViolationError
from pixelmpc.grid import (
    FlowField,
    Image,
    PixelDistribution,
    bilinear_warp,
    expected_position,
    image_metrics,
    one_hot,
    warp_distribution,
)


def gray(values):
    return Image(np.asarray(values, dtype=np.float64)[..., None])


def const_flow(h, w, dy, dx):
    f = np.zeros((h, w, 2))
    f[..., 0] = dy
    f[..., 1] = dx
    return FlowField(f)


class TestBilinearWarp:
    def test_identity_flow_is_identity_bit_for_bit(self):
        rng = np.random.default_rng(0)
        img = Image(rng.random((5, 7, 3)))
        out = bilinear_warp(img, const_flow(5, 7, 0.0, 0.0))
        assert np.array_equal(out.data, img.data)

    def test_unit_left_shift_with_edge_clamp(self):
        img = gray([[0.0, 1.0, 0.0]])
        out = bilinear_warp(img, const_flow(1, 3, 0.0, -1.0))
        np.testing.assert_allclose(out.data[0, :, 0], [0.0, 0.0, 1.0], atol=1e-6)

    def test_half_shift_interpolates(self):
        img = gray([[0.0, 1.0]])
        out = bilinear_warp(img, const_flow(1, 2, 0.0, -0.5))
        np.testing.assert_allclose(out.data[0, :, 0], [0.0, 0.5], atol=1e-6)

    def test_dim_mismatch_rejected(self):
        with pytest.raises(ContractViolationError):
            bilinear_warp(gray([[0.0, 1.0]]), const_flow(2, 2, 0.0, 0.0))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1))
    def test_output_bounded_by_source_range(self, seed):
        rng = np.random.default_rng(seed)
        h, w = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        img = Image(rng.random((h, w, 3)))
        flow = FlowField(rng.normal(0.0, 2.0, size=(h, w, 2)))
        out = bilinear_warp(img, flow)
        for c in range(3):
            assert out.data[..., c].min() >= img.data[..., c].min() - 1e-12
            assert out.data[..., c].max() <= img.data[..., c].max() + 1e-12


class TestWarpDistribution:
    def test_identity_flow_keeps_one_hot(self):
        d = one_hot(4, 5, (2, 3))
        out = warp_distribution(d, const_flow(4, 5, 0.0, 0.0))
        assert out.mass[2, 3] == 1.0
        assert out.mass.sum() == pytest.approx(1.0, abs=1e-6)
        assert not out.degenerate

    def test_left_shift_of_corner_one_hot(self):
        # Hand evaluation on the 4x4 grid: with flow (0,-1) both output
        # pixels (0,0) and (0,1) sample source (0,0) (the first via edge
        # clamping), so the renormalized result splits mass 0.5/0.5.
        d = one_hot(4, 4, (0, 0))
        out = warp_distribution(d, const_flow(4, 4, 0.0, -1.0))
        expect = np.zeros((4, 4))
        expect[0, 0] = 0.5
        expect[0, 1] = 0.5
        np.testing.assert_allclose(out.mass, expect, atol=1e-12)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1))
    def test_any_flow_yields_valid_distribution(self, seed):
        rng = np.random.default_rng(seed)
        h, w = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        mass = rng.random((h, w))
        mass /= mass.sum()
        flow = FlowField(rng.normal(0.0, 1.5, size=(h, w, 2)))
        out = warp_distribution(PixelDistribution(mass), flow)
        assert out.mass.min() >= 0.0
        assert out.mass.sum() == pytest.approx(1.0, abs=1e-6)

    def test_dim_mismatch_rejected(self):
        with pytest.raises(ContractViolationError):
            warp_distribution(one_hot(2, 2, (0, 0)), const_flow(3, 3, 0.0, 0.0))


class TestOneHotAndExpectedPosition:
    def test_one_hot_basics(self):
        np.testing.assert_array_equal(one_hot(2, 2, (0, 0)).mass, [[1.0, 0.0], [0.0, 0.0]])
        np.testing.assert_array_equal(one_hot(1, 1, (0, 0)).mass, [[1.0]])
        with pytest.raises(ContractViolationError):
            one_hot(3, 3, (3, 3))

    def test_expected_position_of_one_hot_is_exact(self):
        np.testing.assert_array_equal(expected_position(one_hot(5, 6, (2, 3))), [2.0, 3.0])

    def test_expected_position_of_two_point_mix(self):
        mass = np.zeros((1, 3))
        mass[0, 0] = 0.5
        mass[0, 2] = 0.5
        np.testing.assert_allclose(expected_position(PixelDistribution(mass)), [0.0, 1.0])

    def test_expected_position_uniform_is_center(self):
        mass = np.full((3, 3), 1.0 / 9.0)
        np.testing.assert_allclose(expected_position(PixelDistribution(mass)), [1.0, 1.0])


class TestImageMetrics:
    def test_identical_images(self):
        img = gray([[0.25, 0.5], [0.75, 1.0]])
        m = image_metrics(img, img)
        assert m == {"l1": 0.0, "mse": 0.0, "psnr": 99.0, "ssim": 1.0}

    def test_opposite_1x1(self):
        m = image_metrics(gray([[0.0]]), gray([[1.0]]))
        assert m["mse"] == pytest.approx(1.0)
        assert m["psnr"] == pytest.approx(0.0)

    def test_single_pixel_half_difference(self):
        a = gray([[0.0, 0.0], [0.0, 0.0]])
        b = gray([[0.5, 0.0], [0.0, 0.0]])
        m = image_metrics(a, b)
        assert m["mse"] == pytest.approx(0.0625)
        assert m["l1"] == pytest.approx(0.125)

    def test_symmetry(self):
        rng = np.random.default_rng(7)
        a = Image(rng.random((9, 9, 3)))
        b = Image(rng.random((9, 9, 3)))
        m1 = image_metrics(a, b)
        m2 = image_metrics(b, a)
        for k in ("l1", "mse", "psnr", "ssim"):
            assert m1[k] == pytest.approx(m2[k], rel=1e-12)

    def test_dim_mismatch_rejected(self):
        with pytest.raises(ContractViolationError):
            image_metrics(gray([[0.0]]), gray([[0.0, 1.0]]))


class TestTypeInvariants:
    def test_image_range_enforced(self):
        with pytest.raises(ContractViolationError):
            Image(np.full((2, 2, 1), 1.5))

    def test_distribution_must_sum_to_one(self):
        with pytest.raises(ContractViolationError):
            PixelDistribution(np.full((2, 2), 1.0))

    def test_distribution_nonnegative(self):
        mass = np.array([[1.5, -0.5], [0.0, 0.0]])
        with pytest.raises(ContractViolationError):
            PixelDistribution(mass)

    def test_flow_must_be_finite(self):
        f = np.zeros((2, 2, 2))
        f[0, 0, 0] = np.nan
        with pytest.raises(ContractViolationError):
            FlowField(f)
