"""Time the sweep kernel on both backends.

    python3 benchmarks/bench_kernels.py [--sweeps 2000] [--repeat 5]

Prints sweeps/second for the compiled and the numpy path on the default
synthetic problem (200 x 500), for each loss and kernel mode, and checks that
the two paths agree.
"""
import argparse
import time

import numpy as np

from admmbda import _accel, kernels
from admmbda.admm_bda import InnerState, SolverConfig, Surrogate
from admmbda.data import SynthConfig, synth_generate
from admmbda.problems import LowerLevelModel, ScalingConfig, UpperLevelObjective

CASES = [
    ("en", 2, kernels.MODE_BDA),
    ("en", 2, kernels.MODE_PLAIN),
    ("en", 2, kernels.MODE_PGM),
    ("gen", 1, kernels.MODE_BDA),
    ("gen", 2, kernels.MODE_BDA),
    ("gen", "inf", kernels.MODE_BDA),
]
MODE_NAMES = {kernels.MODE_BDA: "bda", kernels.MODE_PLAIN: "plain", kernels.MODE_PGM: "pgm"}


def time_case(sur, lam, sweeps, repeat):
    best = np.inf
    for _ in range(repeat):
        st = InnerState.initial(sur.model)
        t = time.perf_counter()
        sur.run(lam, sweeps, st)
        best = min(best, time.perf_counter() - t)
    return best, st.x


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sweeps", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    ds = synth_generate(SynthConfig(seed=0))
    ul = UpperLevelObjective(ds.val_A, ds.val_b)
    lam = np.array([3e-4, 1e-5])
    print(f"{'case':<16}{'numba sw/s':>12}{'numpy sw/s':>12}{'speedup':>9}{'max|dx|':>11}")
    for kind, q, mode in CASES:
        model = LowerLevelModel(kind, ds.train_A, ds.train_b, q=q)
        cfg = SolverConfig(ScalingConfig(1e-4), mu=0.7)
        sur = Surrogate(model, ul, cfg, mode)
        _accel.set_backend("numba")
        sur.run(lam, 1, InnerState.initial(model))  # compile outside the timing
        t_nb, x_nb = time_case(sur, lam, args.sweeps, args.repeat)
        _accel.set_backend("numpy")
        t_np, x_np = time_case(sur, lam, args.sweeps, args.repeat)
        name = f"{kind}{'' if kind == 'en' else '-q' + str(q)}/{MODE_NAMES[mode]}"
        print(f"{name:<16}{args.sweeps / t_nb:12.0f}{args.sweeps / t_np:12.0f}{t_np / t_nb:8.1f}x"
              f"{np.max(np.abs(x_nb - x_np)):11.1e}")
    _accel.set_backend("numba")


if __name__ == "__main__":
    main()
