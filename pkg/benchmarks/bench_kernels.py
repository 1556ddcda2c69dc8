"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from paigelab import kernels
from paigelab.coxmodel import CoxGroup
from paigelab.gf import field_of_order, tables
from paigelab.paige import close, standard_generators
from paigelab.zorn import PaigeElement


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    F3 = field_of_order(3)
    t3 = tables(F3)
    g = standard_generators(F3)
    seeds = np.array([PaigeElement.identity(F3).key, g.g3.key, g.g4.key, g.g5.key], dtype=np.int64)
    loop = close([g.g3, g.g4, g.g5])
    rng = np.random.default_rng(0)
    xs = loop.keys[rng.integers(0, len(loop), 10**6)]
    ys = loop.keys[rng.integers(0, len(loop), 10**6)]
    T2 = close([*standard_generators(field_of_order(2)).pair("34"),
                standard_generators(field_of_order(2)).g5]).table
    G = CoxGroup(13)
    table = G.table
    return {
        "loop closure M*(3)": lambda m: m.loop_closure(seeds, 3, t3.add, t3.mul, t3.neg, 10**6),
        "10^6 products in M*(3)": lambda m: m.zorn_mul_keys(xs, ys, 3, t3.add, t3.mul, t3.neg),
        "Moufang table M*(2)": lambda m: m.moufang_table(T2),
        "200 closures in E(13)": lambda m: [m.group_closure(table, np.array([i, i + 7], dtype=np.int64), 0)
                                            for i in range(200)],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.backends()
    names = sorted(backends)
    print(f"{'case':<26}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases().items():
        ts = {n: best_of(lambda: fn(backends[n]), args.repeat) for n in names}
        row = f"{label:<26}" + "".join(f"{ts[n]:>11.3f}s" for n in names)
        if "cython" in ts:
            row += f"{ts['python'] / ts['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
