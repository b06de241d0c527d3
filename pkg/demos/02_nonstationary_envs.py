"""
Non-stationary control environments
===================================

Two analytic systems (point mass, pendulum) host dynamical changes (wind,
mass, friction, actuator faults), objective changes (target velocities,
angular skills), and combinations.  A schedule decides whether the hidden
task resamples between episodes or every fixed number of steps within one.
"""

import numpy as np

from adaptwm.envs import ChangeSchedule, ScheduleMode, env_ids, make_env

print("registered environments:", env_ids())

# Inter-episodic: each reset draws a fresh task that stays fixed.
env = make_env("pointmass-velocity", ChangeSchedule(ScheduleMode.INTER_EPISODIC))
rng = np.random.default_rng(0)
state, obs = env.reset(rng)
print("\nhidden target velocity:", state.active_task.params["target_velocity"])
print("oracle vector exposed to the oracle agent:",
      env.oracle_vector(state.active_task))

# Reward is highest when the (observed) velocity matches the hidden target.
for _ in range(5):
    state, obs, reward, done = env.step(state, np.array([1.0]))
print("velocity after 5 full-throttle steps:", obs, " reward:", round(reward, 3))

# Intra-episodic: the task resamples every period_steps inside the episode.
env = make_env("pendulum-skills",
               ChangeSchedule(ScheduleMode.INTRA_EPISODIC, period_steps=50))
state, obs = env.reset(rng)
labels = [state.active_task.label()]
for t in range(1, 200):
    state, obs, reward, done = env.step(state, rng.uniform(-1, 1, size=1))
    if state.active_task.label() != labels[-1]:
        labels.append(state.active_task.label())
        print(f"step {t}: skill switched to {labels[-1]!r}")
print("skills seen in one episode:", labels)
