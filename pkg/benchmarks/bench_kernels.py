"""Compare the compiled and pure-Python Hilbert basis kernels.

    python benchmarks/bench_kernels.py [--cones N] [--seed S]
"""

import argparse
import random
import time

from torusdegen import _kernels_py, kernels
from torusdegen.polyhedra import RationalCone


def random_cones(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        r = rng.choice([2, 3])
        gens = [tuple(rng.randint(-5, 5) for _ in range(r)) for _ in range(r + 1)]
        c = RationalCone(r, [g for g in gens if any(g)])
        if c.generators and c.is_pointed and c.is_full_dimensional:
            ineqs = [list(m) for m in c.dual.generators]
            bounds = [sum(abs(g[k]) for g in c.minimal().generators) for k in range(r)]
            out.append((ineqs, bounds, list(c.dual.interior_point())))
    return out


def run(module, cones):
    start = time.perf_counter()
    results = []
    for ineqs, bounds, grading in cones:
        pts = module.cone_points(ineqs, bounds)
        results.append([tuple(p) for p in module.minimal_elements(pts, ineqs, grading)])
    return time.perf_counter() - start, results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cones", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cones = random_cones(a.cones, a.seed)
    t_py, r_py = run(_kernels_py, cones)
    print(f"python  {t_py:8.3f} s")
    if kernels.BACKEND != "cython":
        print("cython  (extension not built)")
        return
    t_cy, r_cy = run(kernels, cones)
    assert r_cy == r_py, "backends disagree"
    print(f"cython  {t_cy:8.3f} s   speedup {t_py / t_cy:5.1f}x")


if __name__ == "__main__":
    main()
