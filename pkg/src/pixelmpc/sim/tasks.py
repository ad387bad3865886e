"""Object-relocation benchmark tasks and their ground-truth scoring."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractViolationError
from .collect import OBJECT_RADIUS_RANGE
from .render import camera_world_to_norm, project_designated
from .world import EnvConfig, ObjectState, WorldState

DEFAULT_SUCCESS_RADIUS = 0.08  # world units; 8% of the arena width
DEFAULT_MAX_STEPS = 10
GOAL_DISTANCE_RANGE = (0.22, 0.38)
GRIPPER_OFFSET_RANGE = (0.10, 0.18)


@dataclass
class Task:
    """Move designated object pixels to goal pixels within a step budget."""

    initial_state: WorldState
    designated_pixels: list
    goal_pixels: list
    goal_positions: list  # world (x, y) per target object
    target_indices: list
    max_steps: int = DEFAULT_MAX_STEPS
    success_radius: float = DEFAULT_SUCCESS_RADIUS

    def __post_init__(self):
        n = len(self.designated_pixels)
        if n < 1 or len(self.goal_pixels) != n or len(self.goal_positions) != n:
            raise ContractViolationError("designated/goal lists must match and be non-empty")


def _goal_pixel(config: EnvConfig, goal_xy) -> tuple:
    h, w = config.image_size
    norm = camera_world_to_norm(config, np.asarray([goal_xy]))[0]
    col = int(np.clip(np.rint(norm[0] * (w - 1)), 0, w - 1))
    row = int(np.clip(np.rint(norm[1] * (h - 1)), 0, h - 1))
    return (row, col)


def make_task(config: EnvConfig, rng: np.random.Generator,
              max_steps: int = DEFAULT_MAX_STEPS,
              success_radius: float = DEFAULT_SUCCESS_RADIUS,
              object_kind: str = "rigid") -> Task:
    """One-object pushing task: seeded scene, nearby gripper, reachable goal."""
    radius = float(rng.uniform(*OBJECT_RADIUS_RANGE))
    margin = radius + 0.08
    center = rng.uniform(margin, 1.0 - margin, size=2)
    for _ in range(64):
        angle = rng.uniform(0, 2 * np.pi)
        dist = rng.uniform(*GOAL_DISTANCE_RANGE)
        goal = center + dist * np.array([np.cos(angle), np.sin(angle)])
        if (goal > margin).all() and (goal < 1.0 - margin).all():
            break
    else:
        goal = np.clip(center + np.array([GOAL_DISTANCE_RANGE[0], 0.0]), margin, 1.0 - margin)

    # Gripper starts near the object, at contact height, biased opposite the goal.
    away = center - goal
    away /= np.linalg.norm(away)
    offset = rng.uniform(*GRIPPER_OFFSET_RANGE)
    start_xy = np.clip(center + away * (radius + offset),
                       np.asarray(config.bounds_low[:2]),
                       np.asarray(config.bounds_high[:2]))
    z0 = min(config.dynamics.z_contact, config.bounds_high[2])
    z0 = max(z0, config.bounds_low[2])
    pose = np.array([start_xy[0], start_xy[1], z0, 0.0])

    obj = ObjectState((center[0], center[1]), radius, object_kind,
                      elongation=1.0 if object_kind == "rigid" else 1.0)
    state = WorldState(pose, grip_closed=False, objects=[obj])
    designated = [project_designated(state, config, 0)]
    goals_px = [_goal_pixel(config, goal)]
    return Task(
        initial_state=state,
        designated_pixels=designated,
        goal_pixels=goals_px,
        goal_positions=[(float(goal[0]), float(goal[1]))],
        target_indices=[0],
        max_steps=max_steps,
        success_radius=success_radius,
    )


def eval_task(final_state: WorldState, task: Task) -> dict:
    """Euclidean object-to-goal distance in world units and the success flag."""
    dists = []
    for idx, goal in zip(task.target_indices, task.goal_positions):
        c = final_state.objects[idx].center
        dists.append(float(np.hypot(c[0] - goal[0], c[1] - goal[1])))
    distance = float(np.mean(dists))
    return {"distance": distance, "success": distance <= task.success_radius}
