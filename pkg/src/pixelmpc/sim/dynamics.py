"""Deterministic kinematic step rule: clamped deltas, overlap pushing,
footprint grasping."""

import numpy as np

from ..errors import ContractViolationError
from .world import SOFT, Action, EnvConfig, MAX_ELONGATION, WorldState


def _point_segment_distance(p, a, b):
    """Distance from point p to segment ab, and the closest point."""
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return float(np.linalg.norm(p - a)), a
    t = float(np.clip((p - a) @ ab / denom, 0.0, 1.0))
    closest = a + t * ab
    return float(np.linalg.norm(p - closest)), closest


def step(state: WorldState, action: Action, config: EnvConfig) -> WorldState:
    """Advance the world by one blocking delta command.

    The commanded pose is current pose + masked delta, clamped to the safety
    bounds. The grip command binarizes by sign (positive closes). With the
    gripper at contact height, objects overlapping the swept footprint are
    pushed along the motion direction by push_gain * overlap depth; soft
    objects move with extra drag and stretch. Closing at grasp height over
    an object's center picks it up; it then tracks the gripper until the
    gripper opens.
    """
    if not np.isfinite(action.delta).all():
        raise ContractViolationError("action delta must be finite")

    new = state.copy()
    mask = np.asarray(config.action_mask, dtype=bool)
    delta = np.where(mask[:4], action.delta[:4], 0.0)
    old_pose = state.gripper
    pose = np.clip(old_pose + delta,
                   np.asarray(config.bounds_low), np.asarray(config.bounds_high))
    new.gripper = pose

    grip_cmd = action.delta[4] if mask[4] else 0.0
    was_closed = state.grip_closed
    now_closed = grip_cmd > 0.0
    new.grip_closed = now_closed

    dyn = config.dynamics
    r_grip = config.gripper.footprint_radius
    old_xy = old_pose[:2]
    new_xy = pose[:2]
    motion = new_xy - old_xy
    motion_norm = float(np.linalg.norm(motion))

    held_idx = new.held_index()

    # Release before contact resolution so a dropped object can be pushed.
    if held_idx is not None and not now_closed:
        new.objects[held_idx].held = False
        held_idx = None

    if held_idx is not None:
        new.objects[held_idx].center = (float(new_xy[0]), float(new_xy[1]))
    elif pose[2] <= dyn.z_contact:
        for obj in new.objects:
            center = np.asarray(obj.center)
            dist, closest = _point_segment_distance(center, old_xy, new_xy)
            depth = (obj.radius + r_grip) - dist
            if depth <= 0.0:
                continue
            if motion_norm > 1e-12:
                direction = motion / motion_norm
            else:
                away = center - closest
                away_norm = float(np.linalg.norm(away))
                direction = away / away_norm if away_norm > 1e-12 else np.array([1.0, 0.0])
            push = dyn.push_gain * depth
            if obj.kind == SOFT:
                push *= dyn.soft_drag
                obj.elongation = min(MAX_ELONGATION,
                                     obj.elongation + dyn.soft_deform_gain * depth)
            center = center + push * direction
            obj.center = (float(center[0]), float(center[1]))

    # Closing event at grasp height picks up the nearest covered object.
    if now_closed and not was_closed and held_idx is None and pose[2] <= dyn.z_grasp:
        best = None
        best_dist = r_grip
        for i, obj in enumerate(new.objects):
            d = float(np.hypot(obj.center[0] - new_xy[0], obj.center[1] - new_xy[1]))
            if d <= best_dist:
                best = i
                best_dist = d
        if best is not None:
            new.objects[best].held = True
            new.objects[best].center = (float(new_xy[0]), float(new_xy[1]))

    for obj in new.objects:
        cx = float(np.clip(obj.center[0], obj.radius, 1.0 - obj.radius))
        cy = float(np.clip(obj.center[1], obj.radius, 1.0 - obj.radius))
        obj.center = (cx, cy)

    return new
