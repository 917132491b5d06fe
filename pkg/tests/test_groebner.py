import random
from fractions import Fraction

import pytest
import sympy

from helpers import SQRT2, XI, random_action, random_homogeneous_ideal, random_ideal, sympy_same_ideal
from torusdegen.errors import BudgetExceeded, EmptyInput, ParseError, ShapeMismatch
from torusdegen.groebner import (
    GREVLEX,
    Polynomial,
    WeightOrder,
    buchberger,
    compare_monomials,
    groebner_cone,
    hilbert_function,
    initial_form,
    initial_ideal,
    is_groebner_basis,
    monomial_weight,
    normal_form,
    parse_polynomial,
    s_polynomial,
    same_ideal,
    standard_monomial_counts,
)
from torusdegen.polyhedra import RationalCone, TorusAction, WeightVectorXi
from torusdegen.scalars import Order, qx

XY = ["x", "y"]
COORD2 = TorusAction.coordinate(2)
ORDER = WeightOrder(XI, COORD2)


def P(text, names=XY):
    return parse_polynomial(text, names)


def fmt(polys, names=XY):
    return [f.format(names) for f in polys]


def test_parse_and_print():
    f = P("x^2*y + 3*y - 1/2")
    assert f.format(XY) == "x^2*y + 3*y - 1/2"
    assert P("(x + y)^2") == P("x^2 + 2*x*y + y^2")
    assert P("2 x y") == P("2*x*y")
    with pytest.raises(ParseError):
        P("x + z")
    with pytest.raises(ParseError):
        P("x^(1/2)")


def test_monomial_weight_examples():
    assert monomial_weight((1, 1), ORDER) == 1 + SQRT2
    assert monomial_weight((0, 0), ORDER) == 0
    assert monomial_weight((2, 0), ORDER) == 2
    with pytest.raises(ShapeMismatch):
        monomial_weight((1, 1, 1), ORDER)


def test_compare_examples():
    assert compare_monomials((1, 0), (0, 1), ORDER) is Order.LESS
    assert compare_monomials((2, 0), (1, 1), ORDER) is Order.LESS
    assert compare_monomials((1, 1), (1, 1), ORDER) is Order.EQUAL


def test_buchberger_examples():
    assert fmt(buchberger([P("x + y")], ORDER)) == ["x + y"]
    assert fmt(buchberger([P("x"), P("x")], ORDER)) == ["x"]
    basis = buchberger([P("x^2 - y"), P("y^2 - x")], ORDER)
    assert is_groebner_basis(basis, ORDER)
    assert sympy_same_ideal(basis, [P("x^2 - y"), P("y^2 - x")], sympy.symbols("a b"))
    with pytest.raises(EmptyInput):
        buchberger([], ORDER)


def test_budget():
    gens = [P("x^3 - y^2 + x*y"), P("y^3 - x^2 + 2*x"), P("x^2*y - y + 1")]
    with pytest.raises(BudgetExceeded):
        buchberger(gens, ORDER, budget=1)


def test_initial_ideal_examples():
    assert fmt(initial_ideal([P("x + y")], ORDER)) == ["x"]
    assert fmt(initial_ideal([P("x + y")], WeightOrder(WeightVectorXi((SQRT2, 1)), COORD2))) == ["y"]
    assert initial_form(P("x^2 + x*y + y^3"), ORDER) == P("x^2")
    # rational oracle: substitute xi'' = (100, 141) and keep the lowest order
    f = P("x^2 + x*y + y^3")
    w = {e: 100 * e[0] + 141 * e[1] for e in f.terms}
    assert min(w, key=w.get) == (2, 0)
    assert fmt(initial_ideal([P("x^2 - y")], ORDER)) == ["y"]


def test_fixed_point():
    rng = random.Random(21)
    for _ in range(20):
        n = rng.choice([2, 3])
        action = random_action(rng, n)
        order = WeightOrder(XI, action)
        ideal = random_homogeneous_ideal(rng, n)
        basis = buchberger(ideal, order)
        assert buchberger(basis, order) == basis
        assert is_groebner_basis(basis, order)


def test_matches_sympy():
    rng = random.Random(22)
    for _ in range(25):
        n = rng.choice([2, 3])
        action = random_action(rng, n)
        ideal = random_ideal(rng, n) if rng.random() < 0.5 else random_homogeneous_ideal(rng, n)
        syms = sympy.symbols(f"v0:{n}")
        assert sympy_same_ideal(buchberger(ideal, WeightOrder(XI, action)), ideal, syms)


def test_presentation_independent():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.choice([2, 3])
        action = random_action(rng, n)
        order = WeightOrder(XI, action)
        ideal = random_homogeneous_ideal(rng, n, ngens=2)
        a, b = ideal
        mixed = [a + b.scale(Fraction(rng.randint(1, 5), rng.randint(1, 3))), b.scale(rng.randint(1, 4))]
        assert initial_ideal(ideal, order) == initial_ideal(mixed, order)


def test_groebner_cone_examples():
    gc = groebner_cone([P("x + y")], ORDER)
    assert gc.cone.same_as(RationalCone(2, [(1, 1), (-1, 1), (-1, -1)]))
    assert gc.cone.contains((1, 2)) and not gc.cone.contains((2, 1))
    assert fmt(initial_ideal([P("x + y")], WeightOrder(WeightVectorXi.from_lattice((1, 2)), COORD2))) == ["x"]
    assert fmt(initial_ideal([P("x + y")], WeightOrder(WeightVectorXi.from_lattice((2, 1)), COORD2))) == ["y"]

    assert groebner_cone([P("x^2")], ORDER).cone.same_as(RationalCone.whole_space(2))

    xyz = ["x", "y", "z"]
    action = TorusAction(2, ((1, 0), (0, 1), (0, 0)))
    gc = groebner_cone([parse_polynomial("x + y + z", xyz)], WeightOrder(XI, action))
    assert len(gc.inequalities) == 2
    assert gc.cone.same_as(RationalCone.orthant(2))


def test_hilbert_examples():
    assert hilbert_function([], 2, 2) == [1, 2, 3]
    assert hilbert_function([P("x")], 2, 2) == [1, 1, 1]
    assert hilbert_function([P("x + y")], 2, 3) == [1, 1, 1, 1]


def test_hilbert_two_oracles_agree():
    rng = random.Random(24)
    for _ in range(20):
        n = rng.choice([2, 3])
        ideal = random_homogeneous_ideal(rng, n)
        assert hilbert_function(ideal, n, 5) == standard_monomial_counts(ideal, n, 5)


def test_normal_form_and_spoly():
    f, g = P("x^2 - y"), P("x*y - 1")
    s = s_polynomial(f, g, GREVLEX)
    assert s == P("x - y^2") or s == P("y^2 - x")
    assert not normal_form(P("x^3 - x*y"), [f], GREVLEX)


def test_same_ideal():
    assert same_ideal([P("x + y"), P("y")], [P("x"), P("y")])
    assert not same_ideal([P("x")], [P("y")])


def test_polynomial_helpers():
    f = P("x^2*y + x - 3")
    assert f.evaluate((2, 1)) == 3
    h = f.homogenize()
    assert h.is_homogeneous() and h.dehomogenize() == f
    assert f.degree() == 3
    assert isinstance(f, Polynomial)
