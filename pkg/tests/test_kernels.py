import os
import random
import subprocess
import sys

import pytest

from torusdegen import _kernels_py, kernels
from torusdegen.polyhedra import RationalCone, hilbert_basis


def _random_cone(rng, r):
    while True:
        gens = [tuple(rng.randint(-4, 4) for _ in range(r)) for _ in range(r + 1)]
        c = RationalCone(r, [g for g in gens if any(g)])
        if c.generators and c.is_pointed and c.is_full_dimensional:
            return c


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")
def test_compiled_matches_pure():
    rng = random.Random(51)
    for _ in range(100):
        r = rng.choice([2, 3])
        c = _random_cone(rng, r)
        ineqs = [list(m) for m in c.dual.generators]
        bounds = [sum(abs(g[k]) for g in c.minimal().generators) for k in range(r)]
        grading = list(c.dual.interior_point())
        pts_c = kernels.cone_points(ineqs, bounds)
        pts_p = _kernels_py.cone_points(ineqs, bounds)
        assert [tuple(p) for p in pts_c] == [tuple(p) for p in pts_p]
        assert ([tuple(p) for p in kernels.minimal_elements(pts_c, ineqs, grading)]
                == [tuple(p) for p in _kernels_py.minimal_elements(pts_p, ineqs, grading)])


def test_pure_fallback_env():
    code = ("from torusdegen import kernels; from torusdegen.polyhedra import RationalCone, hilbert_basis;"
            "print(kernels.BACKEND, hilbert_basis(RationalCone(2, [(1, 0), (1, 2)])))")
    env = dict(os.environ, TORUSDEGEN_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.strip()
    assert out == "python " + str(hilbert_basis(RationalCone(2, [(1, 0), (1, 2)])))
