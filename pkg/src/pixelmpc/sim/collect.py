"""Episode collection: random scene, exploration rollout, attribute tagging."""

import numpy as np

from ..db.records import AttributeSet, TrajectoryRecord
from ..errors import ContractViolationError
from .dynamics import step
from .render import project_designated, render
from .world import Action, EnvConfig, ObjectState, RIGID, SOFT, WorldState

OBJECT_RADIUS_RANGE = (0.09, 0.14)


def random_initial_state(config: EnvConfig, rng: np.random.Generator,
                         num_objects=None, kinds=None) -> WorldState:
    """Objects placed uniformly inside the arena, gripper uniform in bounds."""
    if num_objects is None:
        num_objects = int(rng.integers(1, 4))
    kinds = tuple(kinds) if kinds is not None else tuple(config.object_kinds)
    objects = []
    for _ in range(num_objects):
        kind = kinds[int(rng.integers(0, len(kinds)))]
        radius = float(rng.uniform(*OBJECT_RADIUS_RANGE))
        center = rng.uniform(radius, 1.0 - radius, size=2)
        objects.append(ObjectState((center[0], center[1]), radius, kind))
    low = np.asarray(config.bounds_low)
    high = np.asarray(config.bounds_high)
    pose = rng.uniform(low, high)
    return WorldState(pose, grip_closed=False, objects=objects)


def collect_trajectory(config: EnvConfig, policy, T: int,
                       rng: np.random.Generator) -> TrajectoryRecord:
    """Roll ``policy`` for T steps from a randomized scene.

    The record carries T+1 images/states, T actions, the embodiment's
    attributes, and ground-truth pixel tracks for every object.
    """
    if T < 2:
        raise ContractViolationError("trajectories need at least 2 steps")
    state = random_initial_state(config, rng)
    n_obj = len(state.objects)

    images = [render(state, config).data]
    states = [state.state_vector()]
    actions = []
    tracks = [[project_designated(state, config, i)] for i in range(n_obj)]

    for _ in range(T):
        action = policy(rng, state, config)
        state = step(state, action, config)
        actions.append(action.delta)
        images.append(render(state, config).data)
        states.append(state.state_vector())
        for i in range(n_obj):
            tracks[i].append(project_designated(state, config, i))

    classes = frozenset(o.kind for o in state.objects) or frozenset({RIGID})
    attrs = AttributeSet(
        robot_id=config.robot_id,
        gripper_id=config.gripper_id,
        camera_config_id=config.camera_config_id,
        arena_id=config.arena_id,
        lab_id=config.lab_id,
        object_classes=classes,
        policy_description=policy.describe() if hasattr(policy, "describe") else "",
        action_mask=tuple(config.action_mask),
    )
    return TrajectoryRecord(
        images=np.stack(images).astype(np.float32),
        states=np.stack(states),
        actions=np.stack(actions),
        attributes=attrs,
        pixel_tracks=np.asarray(tracks, dtype=np.uint16),
    )
