import sys, tempfile
sys.path.insert(0, "/root/pkg/src")
from adaptwm import runio, trainer
from adaptwm.config import Config, dump_config
seed = int(sys.argv[1]); alr = 0.0
cfg = Config(env_id="pendulum-mass", agent_variant="taskinfer",
             schedule_mode="intra_episodic", schedule_period=50, seed=seed,
             total_env_steps=100_000, seed_episodes=5,
             collect_interval=8, batch_size=8, sequence_length=16,
             trajectory_length=200, action_repeat=2, context_size=10,
             h_dim=64, s_dim=16, hidden_dim=64, embed_dim=64,
             encoder_units=96, task_dim=8, horizon=15,
             eval_every=50, eval_episodes=5,
             model_lr=1e-3, actor_lr=3e-4, critic_lr=3e-4)
cfg.validate()
d = tempfile.mkdtemp(prefix=f"pilot_big_s{seed}_")
run = runio.RunDirectory.create(d, dump_config(cfg))
tr = trainer.Trainer(cfg, run)
def progress(rec):
    if "eval_mean_return" in rec:
        print(f"s{seed} big {rec['env_steps']} {rec['eval_mean_return']:.1f}", flush=True)
tr.train(progress)
ev = [r for r in run.read_metrics() if "eval_mean_return" in r]
print(f"FINAL s{seed} big {ev[-1]['eval_mean_return']:.1f}", flush=True)
