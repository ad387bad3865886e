"""Desk-scale visual foresight pipeline.

Subpackages:
  grid     -- raster types, bilinear warping, image metrics
  sim      -- multi-embodiment 2-D tabletop simulator
  db       -- attribute-filterable trajectory database
  model    -- flow-based action-conditioned video predictor (numpy, own gradients)
  planner  -- MPPI visual MPC with predictor-propagation tracking
  inverse  -- one-step goal-image-conditioned inverse model
  bench    -- experiment harness and command-line interface
"""

__version__ = "0.1.0"
