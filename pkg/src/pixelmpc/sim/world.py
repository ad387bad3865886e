"""World state, action, and embodiment configuration for the tabletop simulator.

The world is the unit square. A single downward-pointing gripper moves in
(x, y, z, yaw) between axis-aligned safety bounds and interacts with disk
objects lying on the table. Embodiments bundle gripper geometry, camera
transform, arena texture, dynamics gains, bounds, action mask, and the
collection-policy scales; they are serializable as versioned JSON.
"""

import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from ..errors import ConfigError, ContractViolationError

ENV_SCHEMA_VERSION = 1

RIGID = "rigid"
SOFT = "soft"

# Gripper contact footprint is a disk; yaw only affects rendering.
FOOTPRINT_RADIUS_PER_FINGER_WIDTH = 2.0
MAX_ELONGATION = 2.5


@dataclass
class ObjectState:
    """A tabletop object: a disk (soft ones stretch into ellipses)."""

    center: tuple
    radius: float
    kind: str = RIGID
    elongation: float = 1.0
    held: bool = False

    def __post_init__(self):
        self.center = (float(self.center[0]), float(self.center[1]))
        if self.radius <= 0:
            raise ContractViolationError("object radius must be > 0")
        if self.kind not in (RIGID, SOFT):
            raise ContractViolationError(f"unknown object kind {self.kind!r}")
        if self.kind == RIGID and self.elongation != 1.0:
            raise ContractViolationError("rigid objects keep elongation 1")
        if self.elongation < 1.0:
            raise ContractViolationError("elongation must be >= 1")

    def copy(self):
        return ObjectState(self.center, self.radius, self.kind, self.elongation, self.held)


@dataclass
class WorldState:
    """Gripper pose (x, y, z, yaw), gripper joint, and all objects."""

    gripper: np.ndarray
    grip_closed: bool
    objects: list

    def __post_init__(self):
        self.gripper = np.asarray(self.gripper, dtype=np.float64)
        if self.gripper.shape != (4,):
            raise ContractViolationError("gripper pose must be (x, y, z, yaw)")
        if sum(o.held for o in self.objects) > 1:
            raise ContractViolationError("at most one object may be held")

    def copy(self):
        return WorldState(self.gripper.copy(), self.grip_closed, [o.copy() for o in self.objects])

    def held_index(self):
        for i, o in enumerate(self.objects):
            if o.held:
                return i
        return None

    def state_vector(self) -> np.ndarray:
        """The 5-vector (x, y, z, yaw, grip joint) recorded per frame."""
        return np.concatenate([self.gripper, [1.0 if self.grip_closed else 0.0]])


@dataclass
class Action:
    """Delta command (dx, dy, dz, dyaw, grip); grip acts through its sign."""

    delta: np.ndarray

    def __post_init__(self):
        self.delta = np.asarray(self.delta, dtype=np.float64)
        if self.delta.shape != (5,):
            raise ContractViolationError("action delta must have 5 components")
        if not np.isfinite(self.delta).all():
            raise ContractViolationError("action delta must be finite")


@dataclass(frozen=True)
class GripperGeometry:
    finger_width: float
    finger_length: float
    color: tuple  # rgb in [0,1]

    @property
    def footprint_radius(self):
        return FOOTPRINT_RADIUS_PER_FINGER_WIDTH * self.finger_width


@dataclass(frozen=True)
class CameraView:
    """2-D similarity applied at render time: rotate/scale about the arena
    center, then translate, all in normalized world coordinates."""

    angle: float = 0.0
    scale: float = 1.0
    translation: tuple = (0.0, 0.0)


@dataclass(frozen=True)
class ArenaStyle:
    texture_id: int = 0  # 0 plain, 1 checker, 2 stripes, 3 gradient
    base_color: tuple = (0.18, 0.18, 0.22)


@dataclass(frozen=True)
class Dynamics:
    push_gain: float = 0.9
    soft_drag: float = 0.55       # fraction of rigid displacement soft objects get
    soft_deform_gain: float = 0.8  # elongation added per unit overlap depth
    z_contact: float = 0.35
    z_grasp: float = 0.18
    z_lift: float = 0.55


@dataclass(frozen=True)
class EnvConfig:
    """One embodiment: who the robot is and how its world looks and moves."""

    robot_id: str
    gripper_id: str
    camera_config_id: str
    arena_id: str
    lab_id: str
    gripper: GripperGeometry
    camera: CameraView
    arena: ArenaStyle
    dynamics: Dynamics
    bounds_low: tuple = (0.05, 0.05, 0.05, -math.pi)
    bounds_high: tuple = (0.95, 0.95, 0.80, math.pi)
    action_mask: tuple = (True, True, True, True, True)
    image_size: tuple = (32, 32)
    policy_stds: tuple = (0.06, 0.06, 0.04, 0.12, 1.0)
    action_bounds: tuple = (0.12, 0.12, 0.08, 0.25, 1.0)
    object_kinds: tuple = (RIGID,)

    def __post_init__(self):
        for lo, hi in zip(self.bounds_low, self.bounds_high):
            if hi < lo:
                raise ConfigError("safety bounds must be non-empty")
        if min(self.image_size) < 16:
            raise ConfigError("image size must be at least 16x16")
        if self.dynamics.push_gain <= 0:
            raise ConfigError("push gain must be > 0")
        for ident in (self.robot_id, self.gripper_id, self.camera_config_id,
                      self.arena_id, self.lab_id):
            if not ident:
                raise ConfigError("config labels must be non-empty")

    def with_camera(self, camera: CameraView, camera_config_id: str) -> "EnvConfig":
        return replace(self, camera=camera, camera_config_id=camera_config_id)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": ENV_SCHEMA_VERSION,
            "robot_id": self.robot_id,
            "gripper_id": self.gripper_id,
            "camera_config_id": self.camera_config_id,
            "arena_id": self.arena_id,
            "lab_id": self.lab_id,
            "gripper": {
                "finger_width": self.gripper.finger_width,
                "finger_length": self.gripper.finger_length,
                "color": list(self.gripper.color),
            },
            "camera": {
                "angle": self.camera.angle,
                "scale": self.camera.scale,
                "translation": list(self.camera.translation),
            },
            "arena": {
                "texture_id": self.arena.texture_id,
                "base_color": list(self.arena.base_color),
            },
            "dynamics": {
                "push_gain": self.dynamics.push_gain,
                "soft_drag": self.dynamics.soft_drag,
                "soft_deform_gain": self.dynamics.soft_deform_gain,
                "z_contact": self.dynamics.z_contact,
                "z_grasp": self.dynamics.z_grasp,
                "z_lift": self.dynamics.z_lift,
            },
            "bounds_low": list(self.bounds_low),
            "bounds_high": list(self.bounds_high),
            "action_mask": [bool(m) for m in self.action_mask],
            "image_size": list(self.image_size),
            "policy_stds": list(self.policy_stds),
            "action_bounds": list(self.action_bounds),
            "object_kinds": list(self.object_kinds),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, doc: dict) -> "EnvConfig":
        if not isinstance(doc, dict):
            raise ConfigError("env config document must be a JSON object")
        version = doc.get("schema_version")
        if version != ENV_SCHEMA_VERSION:
            raise ConfigError(f"unsupported env config schema_version {version!r}")
        try:
            return cls(
                robot_id=doc["robot_id"],
                gripper_id=doc["gripper_id"],
                camera_config_id=doc["camera_config_id"],
                arena_id=doc["arena_id"],
                lab_id=doc["lab_id"],
                gripper=GripperGeometry(
                    finger_width=float(doc["gripper"]["finger_width"]),
                    finger_length=float(doc["gripper"]["finger_length"]),
                    color=tuple(doc["gripper"]["color"]),
                ),
                camera=CameraView(
                    angle=float(doc["camera"]["angle"]),
                    scale=float(doc["camera"]["scale"]),
                    translation=tuple(doc["camera"]["translation"]),
                ),
                arena=ArenaStyle(
                    texture_id=int(doc["arena"]["texture_id"]),
                    base_color=tuple(doc["arena"]["base_color"]),
                ),
                dynamics=Dynamics(**{k: float(v) for k, v in doc["dynamics"].items()}),
                bounds_low=tuple(doc["bounds_low"]),
                bounds_high=tuple(doc["bounds_high"]),
                action_mask=tuple(bool(m) for m in doc["action_mask"]),
                image_size=tuple(doc["image_size"]),
                policy_stds=tuple(doc["policy_stds"]),
                action_bounds=tuple(doc["action_bounds"]),
                object_kinds=tuple(doc["object_kinds"]),
            )
        except KeyError as exc:
            raise ConfigError(f"env config missing field {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "EnvConfig":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"env config is not valid JSON: {exc}") from exc
        return cls.from_json_dict(doc)
