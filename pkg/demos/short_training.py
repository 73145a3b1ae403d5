"""A few minutes of training on the 4v4 two-type scenario, one variant at a time.

Run:  python demos/short_training.py [max_step]

Prints the greedy win rate at every evaluation.  The default of 30k steps is
too short for the curves to separate reliably; the acceptance runs use 200k.
"""
import sys
import time

import torch

from qtypemix import MixerConfig, TrainConfig, Variant, make_scenario, run

torch.set_num_threads(1)
max_step = int(sys.argv[1]) if len(sys.argv) > 1 else 30_000
scenario = make_scenario("mixed4v4")
train = TrainConfig(max_step=max_step, test_interval=5_000, test_nepisode=32, epsilon_anneal_time=max_step // 2)

for variant in (Variant.VDN, Variant.QMIX, Variant.QTYPEMIX):
    t0 = time.time()
    result = run(scenario, MixerConfig(variant=variant), train, seed=0)
    curve = " ".join(f"{r['win_rate']:.2f}" for r in result.history)
    print(f"{variant.value:10s} {time.time() - t0:5.0f}s  win rate by evaluation: {curve}")
