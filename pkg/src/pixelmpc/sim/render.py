"""Deterministic rasterizer: arena texture, elongated-disk objects, and an
oriented two-finger gripper, composited through the camera similarity.

Colors are quantized to the 8-bit grid so rendered images survive the
database's u8 storage bit-exactly.
"""

import numpy as np

from ..errors import ContractViolationError
from ..grid import Image
from .world import SOFT, EnvConfig, WorldState

# How strongly gripper height scales its rendered size (depth cue).
Z_SIZE_GAIN = 0.3

_RIGID_COLORS = [(0.86, 0.08, 0.24), (1.0, 0.65, 0.0), (0.58, 0.0, 0.83)]
_SOFT_COLORS = [(1.0, 0.84, 0.0), (0.0, 0.81, 0.82)]


def _quantize(rgb):
    return tuple(np.round(np.asarray(rgb) * 255.0) / 255.0)


def camera_world_to_norm(config: EnvConfig, pts: np.ndarray) -> np.ndarray:
    """Map world (x, y) points (n, 2) to normalized image coordinates."""
    cam = config.camera
    c, s = np.cos(cam.angle), np.sin(cam.angle)
    rot = np.array([[c, -s], [s, c]])
    centered = (pts - 0.5) * cam.scale
    return centered @ rot.T + 0.5 + np.asarray(cam.translation)


def _camera_norm_to_world(config: EnvConfig, pts: np.ndarray) -> np.ndarray:
    cam = config.camera
    c, s = np.cos(-cam.angle), np.sin(-cam.angle)
    rot = np.array([[c, -s], [s, c]])
    centered = pts - 0.5 - np.asarray(cam.translation)
    return (centered @ rot.T) / cam.scale + 0.5


def _background(config: EnvConfig, world_xy: np.ndarray) -> np.ndarray:
    base = np.asarray(_quantize(config.arena.base_color))
    x, y = world_xy[:, 0], world_xy[:, 1]
    tid = config.arena.texture_id
    out = np.tile(base, (world_xy.shape[0], 1))
    if tid == 1:
        parity = (np.floor(x * 8) + np.floor(y * 8)) % 2 == 1
        out[parity] = _quantize(base * 0.7)
    elif tid == 2:
        parity = np.floor(x * 10) % 2 == 1
        out[parity] = _quantize(base * 0.75)
    elif tid == 3:
        shade = np.clip(0.6 + 0.4 * y, 0.6, 1.0)
        out = base[None, :] * shade[:, None]
    return out


def render(state: WorldState, config: EnvConfig) -> Image:
    """Rasterize the world as seen through the embodiment's camera."""
    h, w = config.image_size
    rows, cols = np.mgrid[0:h, 0:w]
    norm = np.stack([cols.ravel() / (w - 1), rows.ravel() / (h - 1)], axis=1)
    world = _camera_norm_to_world(config, norm)

    img = _background(config, world)

    for i, obj in enumerate(state.objects):
        palette = _SOFT_COLORS if obj.kind == SOFT else _RIGID_COLORS
        color = _quantize(palette[i % len(palette)])
        dx = (world[:, 0] - obj.center[0]) / (obj.radius * obj.elongation)
        dy = (world[:, 1] - obj.center[1]) / obj.radius
        img[dx * dx + dy * dy <= 1.0] = color

    gx, gy, gz, yaw = state.gripper
    geo = config.gripper
    z_hi = config.bounds_high[2]
    sz = 1.0 + Z_SIZE_GAIN * (gz / z_hi if z_hi > 0 else 0.0)
    gap = (0.8 if state.grip_closed else 2.0) * geo.finger_width
    half_len = 0.5 * geo.finger_length * sz
    half_wid = 0.5 * geo.finger_width * sz
    v_center = (0.5 * gap + 0.5 * geo.finger_width) * sz
    cy_, sy_ = np.cos(yaw), np.sin(yaw)
    rel_x = world[:, 0] - gx
    rel_y = world[:, 1] - gy
    u = rel_x * cy_ + rel_y * sy_
    v = -rel_x * sy_ + rel_y * cy_
    fingers = (np.abs(u) <= half_len) & (np.abs(np.abs(v) - v_center) <= half_wid)
    img[fingers] = _quantize(geo.color)

    img = np.round(img * 255.0) / 255.0
    return Image(img.reshape(h, w, 3))


def project_designated(state: WorldState, config: EnvConfig, index: int):
    """Ground-truth pixel (row, col) of an object center under the camera."""
    if not 0 <= index < len(state.objects):
        raise ContractViolationError(f"object index {index} out of range")
    h, w = config.image_size
    norm = camera_world_to_norm(config, np.asarray([state.objects[index].center]))[0]
    col = int(np.clip(np.rint(norm[0] * (w - 1)), 0, w - 1))
    row = int(np.clip(np.rint(norm[1] * (h - 1)), 0, h - 1))
    return (row, col)
