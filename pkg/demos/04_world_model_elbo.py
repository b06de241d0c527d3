"""
World-model learning: the ELBO approaches the exact log-likelihood
==================================================================

On a 1-D linear-Gaussian system the true log-likelihood of an observation
sequence is computable exactly with a Kalman filter.  The recurrent
state-space model trained on such data should drive its evidence lower
bound up toward (but never past) that exact value -- a sharp correctness
check with no tuning freedom.
"""

import numpy as np

import adaptwm.autodiff as ad
from adaptwm import nn
from adaptwm.worldmodel import WorldModel

rng = np.random.default_rng(3)

# The system: s' = a*s + q-noise, obs = s + r-noise.  A slow state with a
# clean sensor, so filtering genuinely pays off over an unconditional model.
A, Q, C, R, M0, P0 = 0.9, 0.3, 1.0, 0.1, 0.0, 1.0
T = 8


def sample_sequences(n):
    s = M0 + np.sqrt(P0) * rng.standard_normal(n)
    obs = np.empty((n, T))
    for t in range(T):
        obs[:, t] = C * s + np.sqrt(R) * rng.standard_normal(n)
        s = A * s + np.sqrt(Q) * rng.standard_normal(n)
    return obs


def kalman_loglik(obs):
    """Exact log p(o_1..T) via the innovations decomposition."""
    n = obs.shape[0]
    m = np.full(n, M0)
    p = np.full(n, P0)
    ll = np.zeros(n)
    for t in range(T):
        sv = C * C * p + R
        ll += -0.5 * (np.log(2 * np.pi * sv) + (obs[:, t] - C * m) ** 2 / sv)
        k = p * C / sv
        m, p = m + k * (obs[:, t] - C * m), (1 - k * C) * p
        m, p = A * m, A * A * p + Q
    return ll


wm = WorldModel(rng, obs_dim=1, action_dim=1, task_dim=0,
                h_dim=16, s_dim=4, hidden=32, embed_dim=16)
opt = nn.Adam(wm.parameters(), lr=3e-3)


def held_out_bound(data, samples=4):
    n = data.shape[0]
    obs_seq = [ad.tensor(data[:, t][:, None]) for t in range(T)]
    za = [ad.tensor(np.zeros((n, 1))) for _ in range(T)]
    zr = [ad.tensor(np.zeros((n, 1))) for _ in range(T)]
    with ad.no_grad():
        vals = []
        for _ in range(samples):
            states, priors = wm.observe_sequence(obs_seq, za, None, rng)
            terms = wm.elbo_loss(states, priors, obs_seq, zr, None,
                                 kl_balance=0.8)
            vals.append(float(terms.recon_obs.values)
                        + float(terms.recon_reward.values)
                        - float(terms.kl_reg.values))
    return float(np.mean(vals))


probe = sample_sequences(128)
zeros_a = [ad.tensor(np.zeros((64, 1))) for _ in range(T)]
zeros_r = [ad.tensor(np.zeros((64, 1))) for _ in range(T)]
for step in range(200):
    data = sample_sequences(64)
    obs_seq = [ad.tensor(data[:, t][:, None]) for t in range(T)]
    ad.clear_tape()
    states, priors = wm.observe_sequence(obs_seq, zeros_a, None, rng)
    terms = wm.elbo_loss(states, priors, obs_seq, zeros_r, None,
                         kl_balance=0.8)
    ad.backward(terms.total)
    opt.step()
    if step % 50 == 0:
        print(f"step {step:3d}  held-out bound {held_out_bound(probe):+.3f}  "
              f"(recon {float(terms.recon_obs.values):+.2f}, "
              f"kl {float(terms.kl_reg.values):+.2f})")

# Evaluate the bound on held-out data against the exact answer.  The joint
# model also decodes the (identically-zero) reward with unit variance, so
# the exact side gets the matching constant T * logN(0 | 0, 1).
held = sample_sequences(256)
exact = kalman_loglik(held).mean() + T * (-0.5 * np.log(2 * np.pi))
obs_seq = [ad.tensor(held[:, t][:, None]) for t in range(T)]
zeros_a = [ad.tensor(np.zeros((256, 1))) for _ in range(T)]
zeros_r = [ad.tensor(np.zeros((256, 1))) for _ in range(T)]
with ad.no_grad():
    bounds = []
    for _ in range(8):
        states, priors = wm.observe_sequence(obs_seq, zeros_a, None, rng)
        terms = wm.elbo_loss(states, priors, obs_seq, zeros_r, None,
                             kl_balance=0.8)
        bounds.append(float(terms.recon_obs.values)
                      + float(terms.recon_reward.values)
                      - float(terms.kl_reg.values))
    elbo = float(np.mean(bounds))

print(f"\nexact log-likelihood (Kalman):  {exact:+.3f} per sequence")
print(f"trained evidence lower bound:   {elbo:+.3f} per sequence")
print("-> reconstruction improves sharply while the KL term prices the")
print("   information the filter extracts; the total always stays a valid")
print("   lower bound on the exact value (the residual gap is approximation")
print("   slack: sampled filtering and the posterior's std floor).")
