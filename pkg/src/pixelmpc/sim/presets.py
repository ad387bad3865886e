"""Shipped embodiment presets: six robot bundles, twelve camera views each.

Presets live as versioned JSON files under ``pixelmpc/sim/presets/``; this
module builds them (for the generator script and tests) and loads them for
everyone else. A seventh gripper geometry is shipped for the unseen-gripper
experiments.
"""

import json
from importlib import resources

from ..errors import ConfigError
from .world import (
    ArenaStyle,
    CameraView,
    Dynamics,
    EnvConfig,
    GripperGeometry,
    RIGID,
    SOFT,
)

PRESET_SCHEMA_VERSION = 1

ROBOT_IDS = ("emb-A", "emb-B", "emb-C", "emb-D", "emb-E", "emb-F")
NUM_CAMERAS = 12

# Unseen two-finger gripper used by the gripper-holdout experiments.
HOLDOUT_GRIPPER_ID = "grip-X"
HOLDOUT_GRIPPER = GripperGeometry(finger_width=0.07, finger_length=0.11,
                                  color=(0.75, 0.75, 0.10))

_CAM_ANGLES = (0.0, 0.18, -0.18, 0.40, -0.40, 0.62, -0.62, 0.09, -0.30, 0.30, 0.50, -0.50)
_CAM_SCALES = (1.0, 0.95, 1.06, 0.90, 1.10, 1.0, 0.97, 1.04, 0.93, 1.0, 1.08, 0.92)
_CAM_SHIFTS = ((0.0, 0.0), (0.03, -0.02), (-0.03, 0.02), (0.02, 0.03), (-0.02, -0.03),
               (0.04, 0.0), (0.0, 0.04), (-0.04, 0.01), (0.01, -0.04), (0.03, 0.03),
               (-0.03, -0.02), (0.02, -0.02))

_EMBODIMENTS = {
    "emb-A": dict(
        lab_id="lab-1", arena=ArenaStyle(1, (0.16, 0.17, 0.21)),
        gripper=GripperGeometry(0.045, 0.16, (0.16, 0.35, 0.95)),
        dynamics=Dynamics(push_gain=0.95),
        policy_stds=(0.060, 0.060, 0.040, 0.12, 1.0),
    ),
    "emb-B": dict(
        lab_id="lab-1", arena=ArenaStyle(2, (0.23, 0.16, 0.12)),
        gripper=GripperGeometry(0.055, 0.14, (0.10, 0.75, 0.29)),
        dynamics=Dynamics(push_gain=0.80, z_contact=0.33, z_grasp=0.17),
        policy_stds=(0.070, 0.070, 0.040, 0.12, 1.0),
    ),
    "emb-C": dict(
        lab_id="lab-2", arena=ArenaStyle(0, (0.13, 0.20, 0.16)),
        gripper=GripperGeometry(0.040, 0.18, (0.0, 0.72, 0.92)),
        dynamics=Dynamics(push_gain=1.10, z_lift=0.50),
        policy_stds=(0.055, 0.055, 0.045, 0.10, 1.0),
    ),
    "emb-D": dict(
        lab_id="lab-2", arena=ArenaStyle(3, (0.20, 0.14, 0.24)),
        gripper=GripperGeometry(0.050, 0.15, (0.92, 0.92, 0.95)),
        dynamics=Dynamics(push_gain=0.90, z_contact=0.37),
        policy_stds=(0.065, 0.065, 0.040, 0.14, 1.0),
    ),
    "emb-E": dict(
        lab_id="lab-3", arena=ArenaStyle(1, (0.12, 0.12, 0.30)),
        gripper=GripperGeometry(0.060, 0.13, (0.90, 0.20, 0.70)),
        dynamics=Dynamics(push_gain=1.00),
        policy_stds=(0.060, 0.060, 0.045, 0.0, 1.0),
        action_mask=(True, True, True, False, True),
    ),
    "emb-F": dict(
        lab_id="lab-4", arena=ArenaStyle(2, (0.14, 0.22, 0.25)),
        gripper=GripperGeometry(0.050, 0.17, (0.55, 0.62, 0.85)),
        dynamics=Dynamics(push_gain=0.85),
        policy_stds=(0.065, 0.065, 0.0, 0.0, 0.0),
        action_mask=(True, True, False, False, False),
        bounds_low=(0.05, 0.05, 0.30, -3.14159265),
        bounds_high=(0.95, 0.95, 0.30, 3.14159265),
    ),
}


def camera_ids():
    return tuple(f"cam{i:02d}" for i in range(NUM_CAMERAS))


def _camera_view(robot_index: int, cam_index: int) -> CameraView:
    # Small per-embodiment twist so no two robots share an exact viewpoint.
    return CameraView(
        angle=_CAM_ANGLES[cam_index] + 0.02 * robot_index,
        scale=_CAM_SCALES[cam_index],
        translation=_CAM_SHIFTS[cam_index],
    )


def build_preset(robot_id: str, image_size=(32, 32)) -> dict:
    """Build the JSON document for one embodiment preset."""
    if robot_id not in _EMBODIMENTS:
        raise ConfigError(f"unknown embodiment {robot_id!r}")
    spec = _EMBODIMENTS[robot_id]
    robot_index = ROBOT_IDS.index(robot_id)
    base = EnvConfig(
        robot_id=robot_id,
        gripper_id=f"grip-{robot_id[-1]}",
        camera_config_id=f"{robot_id}-cam00",
        arena_id=f"arena-{robot_id[-1]}",
        lab_id=spec["lab_id"],
        gripper=spec["gripper"],
        camera=_camera_view(robot_index, 0),
        arena=spec["arena"],
        dynamics=spec["dynamics"],
        policy_stds=spec["policy_stds"],
        action_mask=spec.get("action_mask", (True,) * 5),
        bounds_low=spec.get("bounds_low", (0.05, 0.05, 0.05, -3.14159265)),
        bounds_high=spec.get("bounds_high", (0.95, 0.95, 0.80, 3.14159265)),
        image_size=tuple(image_size),
    )
    cameras = {}
    for i in range(NUM_CAMERAS):
        view = _camera_view(robot_index, i)
        cameras[f"cam{i:02d}"] = {
            "angle": view.angle, "scale": view.scale, "translation": list(view.translation),
        }
    return {
        "schema_version": PRESET_SCHEMA_VERSION,
        "robot_id": robot_id,
        "base": base.to_json_dict(),
        "cameras": cameras,
    }


def _preset_doc(robot_id: str) -> dict:
    path = resources.files("pixelmpc.sim").joinpath(f"presets/{robot_id}.json")
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise ConfigError(f"no shipped preset for {robot_id!r}") from exc
    doc = json.loads(text)
    if doc.get("schema_version") != PRESET_SCHEMA_VERSION:
        raise ConfigError(f"preset {robot_id}: unsupported schema_version")
    return doc


def load_preset(robot_id: str, camera: int = 0, image_size=None) -> EnvConfig:
    """Load a shipped embodiment, selecting one of its camera views."""
    doc = _preset_doc(robot_id)
    base = EnvConfig.from_json_dict(doc["base"])
    cam_key = f"cam{camera:02d}"
    if cam_key not in doc["cameras"]:
        raise ConfigError(f"preset {robot_id} has no camera {cam_key}")
    cam = doc["cameras"][cam_key]
    config = base.with_camera(
        CameraView(angle=cam["angle"], scale=cam["scale"], translation=tuple(cam["translation"])),
        camera_config_id=f"{robot_id}-{cam_key}",
    )
    if image_size is not None:
        from dataclasses import replace
        config = replace(config, image_size=tuple(image_size))
    return config


def with_holdout_gripper(config: EnvConfig) -> EnvConfig:
    """The same embodiment wearing the unseen gripper geometry."""
    from dataclasses import replace
    return replace(config, gripper=HOLDOUT_GRIPPER, gripper_id=HOLDOUT_GRIPPER_ID)


def generate_preset_files(directory) -> list:
    """Write all embodiment JSON files into ``directory`` (dev tool)."""
    from pathlib import Path
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for robot_id in ROBOT_IDS:
        doc = build_preset(robot_id)
        path = directory / f"{robot_id}.json"
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        written.append(path)
    return written
