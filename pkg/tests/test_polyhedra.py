import random
from itertools import product

import pytest

from helpers import SQRT2, XI, brute_decomposes, brute_hilbert_basis, iv_value
from torusdegen.errors import (
    EmptyInput,
    NonpositiveSlope,
    NotPointed,
    RankMismatch,
    RankTooLarge,
)
from torusdegen.polyhedra import (
    RationalCone,
    WallPoint,
    WeightVectorXi,
    certify_irrational,
    cone_contains,
    decompose,
    dot,
    dual_cone,
    envelope_breakpoints,
    format_cone,
    hilbert_basis,
)
from torusdegen.scalars import QuadExtScalar, qx


def cone(*gens):
    return RationalCone(len(gens[0]), list(gens))


def test_dual_examples():
    assert dual_cone(cone((1, 0), (0, 1))).generators == ((0, 1), (1, 0))
    assert dual_cone(cone((1, 1), (0, 1))).same_as(cone((1, 0), (-1, 1)))
    assert dual_cone(cone((1,))).generators == ((1,),)


def test_dual_of_nonfull_and_empty():
    # a ray in rank 2 has a half-plane as dual
    d = dual_cone(cone((1, 0)))
    assert all(dot(m, (1, 0)) >= 0 for m in d.generators)
    assert d.contains((0, 1)) and d.contains((0, -1)) and not d.contains((-1, 0))
    assert dual_cone(RationalCone(2, [])).contains((-3, 5))


def test_generators_canonical():
    c = RationalCone(2, [(0, 2), (3, 3), (0, 1)])
    assert c.generators == ((0, 1), (1, 1))


def test_hilbert_examples():
    assert hilbert_basis(cone((1, 0), (0, 1))) == [(0, 1), (1, 0)]
    assert hilbert_basis(cone((1, 0), (1, 2))) == [(1, 0), (1, 1), (1, 2)]
    # cone((1,0),(-1,1)) is unimodular, so its basis is the two rays;
    # (0,1) = (1,0) + (-1,1) is decomposable
    c = cone((1, 0), (-1, 1))
    assert hilbert_basis(c) == brute_hilbert_basis(c) == [(-1, 1), (1, 0)]


def test_hilbert_errors():
    with pytest.raises(NotPointed):
        hilbert_basis(cone((1, 0), (-1, 0), (0, 1)))
    with pytest.raises(RankTooLarge):
        hilbert_basis(RationalCone.orthant(4))
    with pytest.raises(RankTooLarge):
        dual_cone(RationalCone.orthant(5))


def _random_cone(rng, r):
    while True:
        gens = [tuple(rng.randint(-3, 3) for _ in range(r)) for _ in range(rng.randint(r, r + 2))]
        c = RationalCone(r, [g for g in gens if any(g)])
        if c.generators and c.is_pointed and c.is_full_dimensional:
            return c


def test_double_dual():
    rng = random.Random(11)
    for _ in range(50):
        c = _random_cone(rng, rng.choice([2, 3]))
        assert dual_cone(dual_cone(c)).same_as(c.minimal())


def test_hilbert_basis_brute_force():
    rng = random.Random(12)
    for _ in range(15):
        c = _random_cone(rng, 2)
        basis = hilbert_basis(c)
        # every basis element lies in the zonotope spanned by the rays
        box = max(sum(abs(g[k]) for g in c.minimal().generators) for k in range(2))
        assert basis == brute_hilbert_basis(c, box=box)
        ineqs = c.dual.generators
        for p in product(range(-10, 11), repeat=2):
            if any(p) and all(dot(m, p) >= 0 for m in ineqs):
                assert decompose(p, basis, ineqs, c.dual.interior_point()) is not None
                if max(map(abs, p)) <= 4:
                    assert brute_decomposes(p, basis, bound=10)
        for i, h in enumerate(basis):
            others = basis[:i] + basis[i + 1:]
            assert not brute_decomposes(h, others, bound=10)


def test_hilbert_basis_rank3():
    c = cone((1, 0, 0), (0, 1, 0), (1, 1, 2))
    basis = hilbert_basis(c)
    assert basis == brute_hilbert_basis(c, box=3)


def test_contains_examples():
    assert cone_contains(RationalCone.orthant(2), XI)
    assert cone_contains(cone((1, 1), (0, 1)), XI)
    assert not cone_contains(cone((1, 1), (0, 1)), WeightVectorXi((SQRT2, 1)))
    with pytest.raises(RankMismatch):
        cone_contains(RationalCone.orthant(3), XI)


def test_contains_scaling():
    rng = random.Random(13)
    for _ in range(50):
        c = _random_cone(rng, 2)
        k = qx(rng.randint(1, 9)) / rng.randint(1, 9)
        assert cone_contains(c, XI) == cone_contains(c, XI.scaled(k))


def test_certify():
    assert certify_irrational(XI)
    assert not certify_irrational(WeightVectorXi((qx(1), qx(2))))
    assert not certify_irrational(WeightVectorXi((SQRT2, 2 * SQRT2)))
    assert certify_irrational(WeightVectorXi((SQRT2 - 1, qx(3))))


def test_envelope_examples():
    walls = [WallPoint(2, qx(1), 0), WallPoint(3, SQRT2, 1)]
    out = envelope_breakpoints(walls)
    assert out == [QuadExtScalar(0, qx(3).a / 2), qx(2)]
    assert iv_value(out[0]).a > 2
    assert envelope_breakpoints([WallPoint(5, qx(1), 0)]) == [qx(5)]
    assert envelope_breakpoints([WallPoint(2, qx(1), 0), WallPoint(4, qx(2), 1)]) == [qx(2)]
    with pytest.raises(EmptyInput):
        envelope_breakpoints([])
    with pytest.raises(NonpositiveSlope):
        envelope_breakpoints([WallPoint(1, qx(0), 0)])


def test_envelope_properties():
    rng = random.Random(14)
    for _ in range(100):
        walls = [WallPoint(rng.randint(0, 9), QuadExtScalar(rng.randint(1, 5), rng.randint(0, 3)), j)
                 for j in range(rng.randint(1, 6))]
        out = envelope_breakpoints(walls)
        assert all(a > b for a, b in zip(out, out[1:]))
        assert all(v >= 0 for v in out)
        assert out[-1] == min(qx(w.level) / w.slope for w in walls)


def test_format_cone():
    assert format_cone(cone((1, 0), (1, 2))) == "cone: (1,0) (1,2)"
