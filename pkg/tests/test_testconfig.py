import random

import pytest
import sympy

from helpers import XI, random_action, random_homogeneous_ideal, sympy_same_ideal
from torusdegen.errors import ConeTooLarge, NotInCone, NotPointed
from torusdegen.groebner import WeightOrder, hilbert_function, initial_ideal, parse_polynomial
from torusdegen.polyhedra import RationalCone, TorusAction, dot
from torusdegen.testconfig import (
    canonical_degeneration,
    family_fiber,
    orbit_closure_family,
    rational_restriction,
)

XY = ["x", "y"]
COORD2 = TorusAction.coordinate(2)
TAU = RationalCone(2, [(1, 1), (0, 1)])


def P(text):
    return parse_polynomial(text, XY)


def fmt(polys, names=XY):
    return [f.format(names) for f in polys]


def test_orbit_closure_examples():
    cfg = orbit_closure_family([P("x + y")], COORD2, TAU, XY, XI)
    assert cfg.base_hilbert == ((-1, 1), (1, 0))
    assert fmt(cfg.family_gens, cfg.all_names()) == ["y*u1 + x"]

    mono = orbit_closure_family([P("x^2")], COORD2, TAU, XY, XI)
    assert fmt(mono.family_gens, mono.all_names()) == ["x^2"]

    with pytest.raises(ConeTooLarge):
        orbit_closure_family([P("x + y")], COORD2, RationalCone.orthant(2))
    with pytest.raises(NotPointed):
        orbit_closure_family([P("x + y")], COORD2, RationalCone(2, [(1, 1)]))


def test_u_exponents_in_dual():
    cfg = orbit_closure_family([P("x + y"), P("x^2 + x*y")], COORD2, TAU)
    n = cfg.nvars
    for f in cfg.family_gens:
        for e in f.terms:
            m = [sum(k * h[i] for k, h in zip(e[n:], cfg.base_hilbert)) for i in range(2)]
            assert all(dot(m, g) >= 0 for g in TAU.generators)


def test_fiber_examples():
    cfg = orbit_closure_family([P("x + y")], COORD2, TAU, XY, XI)
    assert fmt(family_fiber(cfg, "identity")) == ["x + y"]
    assert fmt(family_fiber(cfg, "deep_torus_fixed")) == ["x"]
    assert fmt(initial_ideal([P("x + y")], WeightOrder(XI, COORD2))) == ["x"]
    mono = orbit_closure_family([P("x^2")], COORD2, TAU, XY, XI)
    assert fmt(family_fiber(mono, "identity")) == fmt(family_fiber(mono, "deep_torus_fixed")) == ["x^2"]
    with pytest.raises(ValueError):
        family_fiber(cfg, "elsewhere")


def test_restriction_examples():
    cfg = orbit_closure_family([P("x + y")], COORD2, TAU, XY, XI)
    one = rational_restriction(cfg, (1, 2))
    assert fmt(one.family_gens, XY + ["t"]) == ["y*t + x"]
    assert one.weight_profile == (1, 2)
    assert fmt(one.special_fiber()) == ["x"]
    assert fmt(one.general_fiber()) == ["x + y"]

    wall = rational_restriction(cfg, (1, 1))
    assert fmt(wall.family_gens, XY + ["t"]) == ["x + y"]

    mono = orbit_closure_family([P("x^2")], COORD2, TAU, XY, XI)
    assert fmt(rational_restriction(mono, (1, 2)).family_gens, XY + ["t"]) == ["x^2"]

    with pytest.raises(NotInCone):
        rational_restriction(cfg, (2, 1))


def test_canonical_examples():
    cfg = canonical_degeneration([P("x + y")], COORD2, XI, XY)
    assert cfg.base_cone.contains((1, 2)) and not cfg.base_cone.contains((2, 1))
    assert cfg.irrational
    assert fmt(family_fiber(cfg, "deep_torus_fixed")) == ["x"]

    mono = canonical_degeneration([P("x^2")], COORD2, XI, XY)
    assert mono.base_cone.same_as(RationalCone.whole_space(2))
    assert fmt(family_fiber(mono, "deep_torus_fixed")) == ["x^2"]

    cubic = canonical_degeneration([P("x^2 - y")], COORD2, XI, XY)
    assert fmt(family_fiber(cubic, "deep_torus_fixed")) == ["y"]
    assert fmt(family_fiber(cubic, "identity")) == ["-x^2 + y"]


def test_round_trips_and_flatness():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.choice([2, 3])
        action = random_action(rng, n)
        ideal = random_homogeneous_ideal(rng, n)
        syms = sympy.symbols(f"w0:{n}")
        cfg = canonical_degeneration(ideal, action, XI)
        ident = family_fiber(cfg, "identity")
        deep = family_fiber(cfg, "deep_torus_fixed")
        assert sympy_same_ideal(ident, ideal, syms)
        assert sympy_same_ideal(deep, initial_ideal(ideal, WeightOrder(XI, action)), syms)
        assert hilbert_function(ident, n, 6) == hilbert_function(deep, n, 6)
