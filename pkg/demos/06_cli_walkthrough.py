"""
End-to-end command-line walkthrough: train, eval, export, compare
=================================================================

Everything the package does is reachable from the `adaptwm` command.  This
script drives a deliberately tiny training run through every subcommand so
the whole loop finishes in about a minute; real configurations only change
the numbers in the INI file.
"""

import os
import subprocess
import sys
import tempfile

PKG = os.path.join(os.path.dirname(__file__), "..")

CONFIG = """\
# Tiny smoke-test configuration: a few hundred environment steps.
env_id = pointmass-velocity
agent_variant = taskinfer
schedule_mode = inter_episodic
seed = 0
total_env_steps = 1200
seed_episodes = 2
collect_interval = 2
batch_size = 4
sequence_length = 8
trajectory_length = 40
action_repeat = 2
context_size = 5
h_dim = 12
s_dim = 4
hidden_dim = 16
embed_dim = 16
encoder_units = 24
task_dim = 4
horizon = 5
eval_every = 10
eval_episodes = 2
"""


def run(*args):
    cmd = [sys.executable, "-m", "adaptwm.cli", *args]
    print("$ adaptwm " + " ".join(args))
    env = dict(os.environ, PYTHONPATH=os.path.join(PKG, "src"))
    out = subprocess.run(cmd, capture_output=True, text=True, env=env, cwd=PKG)
    if out.returncode != 0:
        sys.exit(out.stdout + out.stderr)
    print(out.stdout)


with tempfile.TemporaryDirectory() as tmp:
    cfg_path = os.path.join(tmp, "smoke.ini")
    with open(cfg_path, "w") as f:
        f.write(CONFIG)
    run_dir = os.path.join(tmp, "run")

    # 1. Train.  The run directory gets a byte-exact copy of the config, a
    #    metrics.jsonl with one record per epoch, and periodic checkpoints.
    run("train", cfg_path, "--run-dir", run_dir)

    # 2. Evaluate the latest checkpoint with deterministic policy+belief.
    run("eval", run_dir, "--episodes", "3")

    # 3. Export per-step latent statistics (belief mean + model features)
    #    to CSV for offline analysis tools.
    run("export-latents", run_dir, "--episodes", "2")
    with open(os.path.join(run_dir, "latents.csv")) as f:
        lines = f.read().splitlines()
    print(f"latents.csv: {len(lines) - 1} rows")
    print("header:", lines[0][:72] + "...")
    print("first: ", lines[1][:72] + "...\n")

    # 4. Compare runs side by side (here just the one).
    run("compare", run_dir)
