"""Core raster types and warping/metric primitives.

Everything here operates on channel-last float arrays. The single bilinear
backward-warp kernel in :func:`warp_arrays` is shared by image prediction,
designated-pixel tracking, and their gradients, so there is exactly one
sampling convention in the codebase:

* output pixel ``p`` samples the source at ``p + flow(p)``,
* sample coordinates are clamped to the image rectangle (clamp-to-edge),
* integer coordinates belong to the *left* cell (the subgradient used by
  the trainer picks the left cell's slope at cell boundaries).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolationError

__all__ = [
    "Image",
    "FlowField",
    "PixelDistribution",
    "bilinear_warp",
    "warp_arrays",
    "warp_distribution",
    "one_hot",
    "expected_position",
    "image_metrics",
]

MASS_TOLERANCE = 1e-6
DEGENERATE_MASS = 1e-9


@dataclass
class Image:
    """Raster image, intensities in [0, 1], shape (height, width, channels)."""

    data: np.ndarray

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.float64) if self.data.dtype.kind != "f" else np.asarray(self.data)
        if self.data.ndim != 3 or self.data.shape[2] not in (1, 3):
            raise ContractViolationError(f"image must be (h, w, 1|3), got {self.data.shape}")
        if self.data.shape[0] < 1 or self.data.shape[1] < 1:
            raise ContractViolationError("image dims must be >= 1")
        if not np.isfinite(self.data).all():
            raise ContractViolationError("image values must be finite")
        if self.data.min() < 0.0 or self.data.max() > 1.0:
            raise ContractViolationError("image values must lie in [0, 1]")

    @property
    def height(self):
        return self.data.shape[0]

    @property
    def width(self):
        return self.data.shape[1]

    @property
    def channels(self):
        return self.data.shape[2]


@dataclass
class FlowField:
    """Per-pixel (dy, dx) source displacement in pixel units, shape (h, w, 2)."""

    offsets: np.ndarray

    def __post_init__(self):
        self.offsets = np.asarray(self.offsets)
        if self.offsets.ndim != 3 or self.offsets.shape[2] != 2:
            raise ContractViolationError(f"flow must be (h, w, 2), got {self.offsets.shape}")
        if not np.isfinite(self.offsets).all():
            raise ContractViolationError("flow offsets must be finite")

    @property
    def height(self):
        return self.offsets.shape[0]

    @property
    def width(self):
        return self.offsets.shape[1]


@dataclass
class PixelDistribution:
    """Nonnegative per-pixel mass summing to 1, shape (h, w).

    ``degenerate`` flags distributions that had to be reset to uniform
    because warping left them with (numerically) no mass.
    """

    mass: np.ndarray
    degenerate: bool = field(default=False)

    def __post_init__(self):
        self.mass = np.asarray(self.mass, dtype=np.float64)
        if self.mass.ndim != 2:
            raise ContractViolationError(f"distribution must be (h, w), got {self.mass.shape}")
        if self.mass.min() < 0.0:
            raise ContractViolationError("distribution mass must be nonnegative")
        total = self.mass.sum()
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise ContractViolationError(f"distribution mass must sum to 1, got {total}")

    @property
    def height(self):
        return self.mass.shape[0]

    @property
    def width(self):
        return self.mass.shape[1]


def _check_dims(a_shape, b_shape, what):
    if a_shape[:2] != b_shape[:2]:
        raise ContractViolationError(f"{what}: spatial dims {a_shape[:2]} vs {b_shape[:2]}")


def warp_arrays(src: np.ndarray, flow: np.ndarray) -> np.ndarray:
    """Bilinear backward warp of ``src`` (..., h, w, c) by ``flow`` (..., h, w, 2).

    Leading batch dimensions must match between the two arguments. Pure
    array kernel shared by the public ops and the predictor.
    """
    if src.shape[:-1] != flow.shape[:-1]:
        raise ContractViolationError(f"warp: src {src.shape} vs flow {flow.shape}")
    h, w = src.shape[-3], src.shape[-2]
    ys = np.arange(h, dtype=src.dtype)[:, None] + flow[..., 0]
    xs = np.arange(w, dtype=src.dtype)[None, :] + flow[..., 1]
    np.clip(ys, 0.0, h - 1.0, out=ys)
    np.clip(xs, 0.0, w - 1.0, out=xs)
    # Left-cell convention: integer coordinates get frac 1.0 in the cell to
    # their left, except at the low edge where no left cell exists.
    y0 = np.clip(np.ceil(ys).astype(np.intp) - 1, 0, max(h - 2, 0))
    x0 = np.clip(np.ceil(xs).astype(np.intp) - 1, 0, max(w - 2, 0))
    fy = ys - y0
    fx = xs - x0
    y1 = np.minimum(y0 + 1, h - 1)
    x1 = np.minimum(x0 + 1, w - 1)

    flat = src.reshape(src.shape[:-3] + (h * w, src.shape[-1]))
    idx00 = y0 * w + x0
    idx01 = y0 * w + x1
    idx10 = y1 * w + x0
    idx11 = y1 * w + x1
    g = np.take_along_axis
    v00 = g(flat, idx00.reshape(idx00.shape[:-2] + (h * w, 1)), axis=-2).reshape(src.shape)
    v01 = g(flat, idx01.reshape(idx01.shape[:-2] + (h * w, 1)), axis=-2).reshape(src.shape)
    v10 = g(flat, idx10.reshape(idx10.shape[:-2] + (h * w, 1)), axis=-2).reshape(src.shape)
    v11 = g(flat, idx11.reshape(idx11.shape[:-2] + (h * w, 1)), axis=-2).reshape(src.shape)
    fy = fy[..., None]
    fx = fx[..., None]
    return ((1.0 - fy) * ((1.0 - fx) * v00 + fx * v01)
            + fy * ((1.0 - fx) * v10 + fx * v11))


def bilinear_warp(src: Image, flow: FlowField) -> Image:
    """Warp an image by a flow field (the diamond operator on images)."""
    _check_dims(src.data.shape, flow.offsets.shape, "bilinear_warp")
    out = warp_arrays(src.data, flow.offsets.astype(src.data.dtype, copy=False))
    # Convex combination of in-range samples; clip only guards float dust.
    np.clip(out, 0.0, 1.0, out=out)
    return Image(out)


def warp_distribution(dist: PixelDistribution, flow: FlowField) -> PixelDistribution:
    """Warp a pixel distribution by a flow field (the diamond operator on P).

    The backward warp does not conserve mass, so the result is clamped to
    be nonnegative and renormalized. A result with (numerically) zero mass
    degenerates to uniform and is flagged.
    """
    _check_dims(dist.mass.shape, flow.offsets.shape, "warp_distribution")
    warped = warp_arrays(dist.mass[..., None], flow.offsets.astype(np.float64, copy=False))[..., 0]
    np.clip(warped, 0.0, None, out=warped)
    total = warped.sum()
    if total < DEGENERATE_MASS:
        uniform = np.full_like(warped, 1.0 / warped.size)
        return PixelDistribution(uniform, degenerate=True)
    return PixelDistribution(warped / total)


def one_hot(height: int, width: int, pos) -> PixelDistribution:
    """Distribution with all mass at integer pixel ``pos`` = (row, col)."""
    r, c = int(pos[0]), int(pos[1])
    if not (0 <= r < height and 0 <= c < width):
        raise ContractViolationError(f"one_hot position {pos} outside {height}x{width} grid")
    mass = np.zeros((height, width))
    mass[r, c] = 1.0
    return PixelDistribution(mass)


def expected_position(dist: PixelDistribution) -> np.ndarray:
    """Mass-weighted mean (row, col) of a distribution."""
    h, w = dist.mass.shape
    rows = dist.mass.sum(axis=1) @ np.arange(h, dtype=np.float64)
    cols = dist.mass.sum(axis=0) @ np.arange(w, dtype=np.float64)
    return np.array([rows, cols])


def _uniform_window_mean(x: np.ndarray, k: int) -> np.ndarray:
    """Mean over every k x k window (valid placement), per channel."""
    win = np.lib.stride_tricks.sliding_window_view(x, (k, k), axis=(0, 1))
    return win.mean(axis=(-2, -1))


def image_metrics(a: Image, b: Image) -> dict:
    """l1 / mse / psnr / ssim between two images of matching shape.

    PSNR is capped at 99 dB so identical images compare finitely. SSIM uses
    a uniform window (7x7, shrunk to the image for tiny inputs) with the
    standard stabilizing constants for unit dynamic range.
    """
    if a.data.shape != b.data.shape:
        raise ContractViolationError(f"image_metrics: shapes {a.data.shape} vs {b.data.shape}")
    x = a.data.astype(np.float64, copy=False)
    y = b.data.astype(np.float64, copy=False)
    diff = x - y
    l1 = float(np.abs(diff).mean())
    mse = float((diff * diff).mean())
    psnr = 99.0 if mse == 0.0 else float(min(99.0, 10.0 * np.log10(1.0 / mse)))

    h, w = x.shape[:2]
    k = min(7, h, w)
    if k % 2 == 0:
        k -= 1
    c1 = 0.01 ** 2
    c2 = 0.03 ** 2
    mu_x = _uniform_window_mean(x, k)
    mu_y = _uniform_window_mean(y, k)
    var_x = _uniform_window_mean(x * x, k) - mu_x * mu_x
    var_y = _uniform_window_mean(y * y, k) - mu_y * mu_y
    cov = _uniform_window_mean(x * y, k) - mu_x * mu_y
    ssim_map = ((2 * mu_x * mu_y + c1) * (2 * cov + c2)) / (
        (mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2))
    ssim = float(ssim_map.mean())
    return {"l1": l1, "mse": mse, "psnr": psnr, "ssim": ssim}
