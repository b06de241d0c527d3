"""
Behavior learning inside the model: imagination and lambda-returns
==================================================================

The actor and critic never see real transitions.  Starting from filtered
latent states, the (frozen) world model rolls forward under the actor's
own actions, and the critic regresses lambda-returns computed along those
imagined trajectories.  This script shows the return recursion on a hand
case, then learns a one-step bandit purely by gradient through imagination.
"""

import numpy as np

import adaptwm.autodiff as ad
from adaptwm import nn
from adaptwm.behavior import Actor, lambda_return

# -- lambda-returns on numbers you can check by hand --------------------
# rewards r = [1, 1], bootstrap values v = [0, 0, 10], gamma=0.9, lam=0.5.
# Working backward: G_1 = r_1 + 0.9*(0.5*G_2 + 0.5*v_2) with G_2 = 1 + 0.9*10.
rewards = [ad.tensor(np.array([1.0])), ad.tensor(np.array([1.0]))]
values = [ad.tensor(np.array([0.0])), ad.tensor(np.array([0.0])),
          ad.tensor(np.array([10.0]))]
rets = lambda_return(rewards, values, gamma=0.9, lam=0.5)
print("lambda-returns:", [float(r.values[0]) for r in rets])
print("by hand:       ", [1 + 0.9 * (0.5 * 10 + 0.5 * 0.0), 1 + 0.9 * 10])
print()

# lam=0 gives one-step TD targets, lam=1 the full Monte-Carlo return.
for lam, name in ((0.0, "lam=0 (TD)"), (1.0, "lam=1 (MC)")):
    rets = lambda_return(rewards, values, gamma=0.9, lam=lam)
    print(f"{name:12s} ->", [round(float(r.values[0]), 3) for r in rets])
print()

# -- policy improvement through a differentiable reward -----------------
# A one-step "imagination": the return is -(a - 0.7)^2, so the actor's
# squashed-Gaussian mode should migrate to 0.7 purely from reparameterized
# gradients -- the same pathway the full agent uses through the world model.
rng = np.random.default_rng(0)
actor = Actor(rng, feature_dim=3, task_dim=0, action_dim=1, hidden=32)
opt = nn.Adam(actor.parameters(), lr=3e-3)
feats = ad.tensor(np.zeros((64, 3)))
for step in range(400):
    ad.clear_tape()
    noise = rng.standard_normal((64, 1))
    action = actor.act(feats, None, noise)
    loss = ad.tmean(ad.square(ad.sub(action, ad.tensor(np.full((64, 1), 0.7)))))
    ad.backward(loss)
    opt.step()
    if step % 100 == 0:
        mode = float(actor.act(feats, None, None).values[0, 0])
        print(f"step {step:3d}  actor mode {mode:+.3f}  (target +0.700)")
mode = float(actor.act(feats, None, None).values[0, 0])
print(f"final mode {mode:+.3f} -> the policy moved to the rewarding action")
print("without ever observing a real transition.")
