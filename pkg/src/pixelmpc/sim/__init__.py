from .world import (
    Action,
    ArenaStyle,
    CameraView,
    Dynamics,
    EnvConfig,
    GripperGeometry,
    ObjectState,
    RIGID,
    SOFT,
    WorldState,
)
from .dynamics import step
from .render import camera_world_to_norm, project_designated, render
from .policy import PolicyParams, RandomInteractionPolicy, gaussian_policy, grasp_primitive
from .collect import collect_trajectory, random_initial_state
from .tasks import Task, eval_task, make_task
from . import presets

__all__ = [
    "Action", "ArenaStyle", "CameraView", "Dynamics", "EnvConfig",
    "GripperGeometry", "ObjectState", "RIGID", "SOFT", "WorldState",
    "step", "render", "project_designated", "camera_world_to_norm",
    "PolicyParams", "RandomInteractionPolicy", "gaussian_policy", "grasp_primitive",
    "collect_trajectory", "random_initial_state",
    "Task", "make_task", "eval_task",
    "presets",
]
