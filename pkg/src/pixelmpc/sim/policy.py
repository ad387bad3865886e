"""Random-interaction exploration: diagonal Gaussian deltas plus the
height-triggered grasping primitive."""

from dataclasses import dataclass

import numpy as np

from ..errors import ContractViolationError
from .world import Action, EnvConfig, WorldState


@dataclass(frozen=True)
class PolicyParams:
    """Per-dimension stds of the exploration Gaussian plus the action mask."""

    stds: tuple
    action_mask: tuple = (True, True, True, True, True)

    @classmethod
    def from_config(cls, config: EnvConfig) -> "PolicyParams":
        return cls(stds=tuple(config.policy_stds), action_mask=tuple(config.action_mask))

    def describe(self) -> str:
        return "gaussian stds=" + ",".join(f"{s:g}" for s in self.stds)


def gaussian_policy(rng: np.random.Generator, params: PolicyParams) -> Action:
    """Zero-mean diagonal-Gaussian delta; masked dimensions are zero."""
    stds = np.asarray(params.stds, dtype=np.float64)
    if (stds < 0).any():
        raise ContractViolationError("policy stds must be nonnegative")
    delta = rng.normal(0.0, 1.0, size=5) * stds
    delta[~np.asarray(params.action_mask, dtype=bool)] = 0.0
    return Action(delta)


def grasp_primitive(action: Action, state: WorldState, config: EnvConfig) -> Action:
    """Force the grip command closed below the grasp height and open above
    the lift height when nothing is held; otherwise pass it through."""
    z = state.gripper[2]
    dyn = config.dynamics
    delta = action.delta.copy()
    if z < dyn.z_grasp:
        delta[4] = 1.0
    elif z > dyn.z_lift and state.held_index() is None:
        delta[4] = -1.0
    return Action(delta)


@dataclass(frozen=True)
class RandomInteractionPolicy:
    """The collection policy: Gaussian exploration, optionally wrapped by the
    grasping primitive."""

    params: PolicyParams
    use_grasp_primitive: bool = True

    @classmethod
    def for_config(cls, config: EnvConfig, use_grasp_primitive: bool = True):
        return cls(PolicyParams.from_config(config), use_grasp_primitive)

    def __call__(self, rng: np.random.Generator, state: WorldState, config: EnvConfig) -> Action:
        action = gaussian_policy(rng, self.params)
        if self.use_grasp_primitive:
            action = grasp_primitive(action, state, config)
        return action

    def describe(self) -> str:
        suffix = "+grasp-primitive" if self.use_grasp_primitive else ""
        return self.params.describe() + suffix
