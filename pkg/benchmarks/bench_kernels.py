"""Time the numba kernels against the numpy fallback on random complex inputs.

    python3 benchmarks/bench_kernels.py --sizes 1000,10000,100000 --repeats 5
"""
import argparse
import time

import numpy as np

from scatdet.specfun import _kernels_numba as nb
from scatdet.specfun import _kernels_numpy as npk


def _inputs(n, rng):
    z = rng.uniform(-8, 30, n) + 1j * rng.uniform(-20, 20, n)
    a = rng.uniform(0.1, 5.0, n) + 0j
    return z, a


def _hurwitz_s(z):
    # the direct Euler-Maclaurin sum is only accurate for Re s >= -1
    return np.where(z.real < -1, -z.real - 2 + 1j * z.imag, z)


CASES = {
    "loggamma": lambda k, z, a: k.loggamma(z),
    "digamma": lambda k, z, a: k.digamma(z),
    "zeta": lambda k, z, a: k.zeta(z),
    "hurwitz": lambda k, z, a: k.hurwitz(_hurwitz_s(z), a),
}


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1000,10000,100000")
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    z, a = _inputs(8, rng)
    t0 = time.perf_counter()
    for f in CASES.values():
        f(nb, z, a)
    print(f"numba compile/load: {time.perf_counter() - t0:.2f} s")

    print(f"{'kernel':<10}{'n':>9}{'numpy [ms]':>13}{'numba [ms]':>13}{'speedup':>9}{'max rel diff':>14}")
    for n in (int(x) for x in args.sizes.split(",")):
        z, a = _inputs(n, rng)
        for name, f in CASES.items():
            t_np, v_np = best_of(lambda: f(npk, z, a), args.repeats)
            t_nb, v_nb = best_of(lambda: f(nb, z, a), args.repeats)
            diff = np.max(np.abs(v_np - v_nb) / np.maximum(np.abs(v_np), 1e-300))
            print(f"{name:<10}{n:>9}{1e3 * t_np:>13.2f}{1e3 * t_nb:>13.2f}{t_np / t_nb:>9.1f}{diff:>14.2e}")


if __name__ == "__main__":
    main()
