"""Trajectory records and their filterable attribute sets."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractViolationError

ATTRIBUTE_KEYS = (
    "robot_id",
    "gripper_id",
    "camera_config_id",
    "arena_id",
    "lab_id",
    "object_classes",
    "policy_description",
    "action_mask",
)


@dataclass(frozen=True)
class AttributeSet:
    """Filterable metadata describing how one trajectory was collected."""

    robot_id: str
    gripper_id: str
    camera_config_id: str
    arena_id: str
    lab_id: str
    object_classes: frozenset
    policy_description: str = ""
    action_mask: tuple = (True, True, True, True, True)

    def __post_init__(self):
        for name in ("robot_id", "gripper_id", "camera_config_id", "arena_id", "lab_id"):
            if not getattr(self, name):
                raise ContractViolationError(f"attribute {name} must be non-empty")
        object.__setattr__(self, "object_classes", frozenset(self.object_classes))
        if not self.object_classes:
            raise ContractViolationError("object_classes must be non-empty")
        object.__setattr__(self, "action_mask", tuple(bool(m) for m in self.action_mask))

    def to_json_dict(self) -> dict:
        return {
            "robot_id": self.robot_id,
            "gripper_id": self.gripper_id,
            "camera_config_id": self.camera_config_id,
            "arena_id": self.arena_id,
            "lab_id": self.lab_id,
            "object_classes": sorted(self.object_classes),
            "policy_description": self.policy_description,
            "action_mask": list(self.action_mask),
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "AttributeSet":
        return cls(
            robot_id=doc["robot_id"],
            gripper_id=doc["gripper_id"],
            camera_config_id=doc["camera_config_id"],
            arena_id=doc["arena_id"],
            lab_id=doc["lab_id"],
            object_classes=frozenset(doc["object_classes"]),
            policy_description=doc.get("policy_description", ""),
            action_mask=tuple(doc.get("action_mask", (True,) * 5)),
        )


@dataclass
class TrajectoryRecord:
    """One collected episode.

    images (T+1, h, w, c) float in [0, 1] on the 8-bit grid, states
    (T+1, 5) float32, actions (T, 5) float32, optional pixel_tracks
    (n_objects, T+1, 2) uint16 as (row, col).
    """

    images: np.ndarray
    states: np.ndarray
    actions: np.ndarray
    attributes: AttributeSet
    pixel_tracks: np.ndarray = None

    def __post_init__(self):
        self.images = np.asarray(self.images)
        self.states = np.asarray(self.states, dtype=np.float32)
        self.actions = np.asarray(self.actions, dtype=np.float32)
        if self.images.ndim != 4:
            raise ContractViolationError("images must be (T+1, h, w, c)")
        n = self.images.shape[0]
        if self.states.shape != (n, 5):
            raise ContractViolationError("states must be (T+1, 5)")
        if self.actions.ndim != 2 or self.actions.shape != (n - 1, 5):
            raise ContractViolationError("need exactly one action between consecutive frames")
        if self.pixel_tracks is not None:
            self.pixel_tracks = np.asarray(self.pixel_tracks, dtype=np.uint16)
            if self.pixel_tracks.ndim != 3 or self.pixel_tracks.shape[1] != n or self.pixel_tracks.shape[2] != 2:
                raise ContractViolationError("pixel_tracks must be (objects, T+1, 2)")

    @property
    def num_frames(self):
        return self.images.shape[0]

    @property
    def image_shape(self):
        return self.images.shape[1:]

    def equals(self, other: "TrajectoryRecord") -> bool:
        if self.attributes != other.attributes:
            return False
        if not (np.array_equal(self.images, other.images)
                and np.array_equal(self.states, other.states)
                and np.array_equal(self.actions, other.actions)):
            return False
        if (self.pixel_tracks is None) != (other.pixel_tracks is None):
            return False
        if self.pixel_tracks is not None and not np.array_equal(self.pixel_tracks, other.pixel_tracks):
            return False
        return True
