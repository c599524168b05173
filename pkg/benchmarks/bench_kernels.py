"""Time the numba kernels against the numpy fallback on random integer matrices.

    python3 benchmarks/bench_kernels.py --sizes 4,6,8 --repeat 5

Each kernel is run once per backend before timing so numba compilation is
excluded. Outputs of the two backends are compared on every run.
"""
import argparse
import json
import time

import numpy as np

from tropalg import kernels as K
from tropalg.combinatorics import zero_based_combos

NEG = K.NEG


def random_arrays(n, kind, rng, batch=None):
    shape = (n, n) if batch is None else (batch, n, n)
    m = rng.integers(-50, 51, size=shape).astype(np.int64)
    m[rng.random(shape) < 0.15] = NEG
    if kind == 0:
        t = np.zeros(shape, np.int64)
    elif kind == 1:
        t = rng.choice(3, size=shape, p=[0.45, 0.45, 0.10]).astype(np.int64)
    else:
        t = rng.choice([0, 2], size=shape, p=[0.85, 0.15]).astype(np.int64)
    t[m == NEG] = 0
    return m, t


def cases(n, kind, rng):
    m, t = random_arrays(n, kind, rng)
    m2, t2 = random_arrays(n, kind, rng)
    bm, bt = random_arrays(n, kind, rng, batch=64)
    k = max(1, n // 2)
    combos = np.array(zero_based_combos(n, k), np.int64)
    w = np.where(m == NEG, NEG, m)
    return {
        "matmul": lambda: K.matmul(m, t, m2, t2, kind),
        "det": lambda: K.det(m, t, kind),
        "det_batch[64]": lambda: K.det_batch(bm, bt, kind),
        f"compound[k={k}]": lambda: K.compound(m, t, combos, kind),
        "principal_traces": lambda: K.principal_traces(m, t, kind),
        "adjoint": lambda: K.adjoint(m, t, kind),
        "assignment_value": lambda: K.assignment_value(w),
    }


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(sizes, kinds, repeat, seed):
    rows = []
    for kind in kinds:
        for n in sizes:
            rng = np.random.default_rng([seed, kind, n])
            for name, fn in cases(n, kind, rng).items():
                out = {}
                times = {}
                for be in ("numba", "numpy"):
                    with K.use_backend(be):
                        out[be] = fn()  # warm-up, compiles under numba
                        times[be] = best_time(fn, repeat)
                rows.append({
                    "kernel": name,
                    "kind": kind,
                    "n": n,
                    "numba_s": times["numba"],
                    "numpy_s": times["numpy"],
                    "speedup": times["numpy"] / times["numba"] if times["numba"] else float("inf"),
                    "agree": _same(out["numba"], out["numpy"]),
                })
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="3,5,8")
    p.add_argument("--kinds", default="0,1,2", help="0 rmax, 1 smax, 2 supertropical")
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    a = p.parse_args(argv)
    rows = run([int(x) for x in a.sizes.split(",")], [int(x) for x in a.kinds.split(",")], a.repeat, a.seed)
    if a.json:
        print(json.dumps(rows, indent=1))
    else:
        print(f"{'kernel':<20}{'kind':>5}{'n':>4}{'numba ms':>12}{'numpy ms':>12}{'speedup':>9}  agree")
        for r in rows:
            print(f"{r['kernel']:<20}{r['kind']:>5}{r['n']:>4}{r['numba_s'] * 1e3:>12.3f}"
                  f"{r['numpy_s'] * 1e3:>12.3f}{r['speedup']:>9.1f}  {r['agree']}")
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
