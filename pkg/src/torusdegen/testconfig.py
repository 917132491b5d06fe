"""Generalized test configurations presented by generators.

A family over the affine toric base ``U_tau`` is stored as polynomials in the
original variables followed by the toric coordinates ``u_1..u_k`` (the Hilbert
basis of ``tau^dual``).  Fibers are substitutions of the ``u``'s.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConeTooLarge, NotInCone, NotPointed, ShapeMismatch
from .groebner import (
    DEFAULT_BUDGET,
    GREVLEX,
    Polynomial,
    WeightOrder,
    buchberger,
    groebner_cone,
    initial_ideal,
)
from .polyhedra import (
    RationalCone,
    WeightVectorXi,
    certify_irrational,
    decompose,
    dot,
    hilbert_basis,
)


@dataclass(frozen=True)
class GeneralizedTestConfig:
    base_cone: RationalCone
    base_hilbert: tuple
    action: object
    family_gens: tuple
    var_names: tuple = ()
    xi: WeightVectorXi = None
    irrational: bool = None

    @property
    def nvars(self):
        return self.action.nvars

    @property
    def u_names(self):
        return tuple(f"u{i + 1}" for i in range(len(self.base_hilbert)))

    def all_names(self):
        names = self.var_names or tuple(f"x{i + 1}" for i in range(self.nvars))
        return tuple(names) + self.u_names


@dataclass(frozen=True)
class OneParamTestConfig:
    """Family over ``k[t]``; ``t`` is the last variable of each generator."""

    family_gens: tuple
    weight_profile: tuple
    var_names: tuple = field(default=())

    def special_fiber(self):
        """Lowest-``t``-order part of each generator, with ``t`` removed."""
        out = []
        for f in self.family_gens:
            if not f:
                continue
            low = min(e[-1] for e in f.terms)
            g = Polynomial(f.nvars - 1, {e[:-1]: c for e, c in f.terms.items() if e[-1] == low})
            out.append(g)
        return out

    def general_fiber(self):
        return [f.dehomogenize() for f in self.family_gens]


def _min_term_exponent(f, action, tau_gens):
    """Exponent whose character is below every other character of ``f`` in the
    ``tau^dual`` order, or ``None``."""
    degs = {e: action.degree(e) for e in f.terms}
    for e, d in sorted(degs.items(), key=lambda kv: GREVLEX.key(kv[0])):
        if all(all(dot(m, tuple(a - b for a, b in zip(d2, d))) >= 0 for m in tau_gens)
               for d2 in degs.values()):
            return e
    return None


def orbit_closure_family(ideal, action, tau, var_names=(), xi=None):
    """Substitute ``z_j -> chi^{w_j} z_j`` and divide by the lowest character."""
    ideal = [f for f in ideal if f]
    if not ideal:
        raise ValueError("empty ideal")
    if tau.rank != action.rank:
        raise ShapeMismatch(f"cone of rank {tau.rank} against action of rank {action.rank}")
    if not tau.is_full_dimensional:
        # tau^dual must be pointed for its Hilbert basis to be canonical
        raise NotPointed(f"dual of {tau} contains a line")
    dual = tau.dual
    basis = hilbert_basis(dual) if dual.generators else []
    ineqs = [list(g) for g in tau.generators]
    grading = tau.interior_point()
    n = action.nvars
    k = len(basis)
    gens = []
    for f in ideal:
        if f.nvars != n:
            raise ShapeMismatch(f"polynomial in {f.nvars} variables, action has {n}")
        e0 = _min_term_exponent(f, action, tau.generators)
        if e0 is None:
            raise ConeTooLarge("no term of minimal character over tau; shrink tau")
        d0 = action.degree(e0)
        terms = {}
        for e, c in f.terms.items():
            m = tuple(a - b for a, b in zip(action.degree(e), d0))
            mult = decompose(m, basis, ineqs, grading) if any(m) else [0] * k
            if mult is None:
                raise ConeTooLarge(f"character {m} leaves the dual cone; shrink tau")
            terms[tuple(e) + tuple(mult)] = c
        gens.append(Polynomial(n + k, terms))
    return GeneralizedTestConfig(tau, tuple(basis), action, tuple(gens), tuple(var_names), xi,
                                 certify_irrational(xi) if xi is not None else None)


def _substitute_u(config, values):
    n = config.nvars
    out = []
    for f in config.family_gens:
        terms = {}
        for e, c in f.terms.items():
            coeff = c
            for v, k in zip(values, e[n:]):
                if k:
                    coeff *= Fraction(v) ** k
            if coeff:
                terms[e[:n]] = terms.get(e[:n], 0) + coeff
        g = Polynomial(n, terms)
        if g:
            out.append(g)
    return out


def family_fiber(config, point):
    """``identity``: every ``u = 1``.  ``deep_torus_fixed``: ``u = 0`` when its
    pairing with xi is positive, 1 otherwise (the fiber over ``p_tau``).

    Without a recorded xi, ``u`` survives exactly when it vanishes on all of
    tau (pairing zero with the whole cone)."""
    if point == "identity":
        values = [1] * len(config.base_hilbert)
    elif point == "deep_torus_fixed":
        values = []
        for h in config.base_hilbert:
            if config.xi is not None:
                positive = config.xi.pair(h) > 0
            else:
                positive = any(dot(h, g) != 0 for g in config.base_cone.generators)
            values.append(0 if positive else 1)
    else:
        raise ValueError(f"unknown fiber {point!r}")
    return _substitute_u(config, values)


def rational_restriction(config, xi2):
    """``u^m -> t^{<m, xi2>}``: a one-parameter test configuration."""
    xi2 = tuple(int(x) for x in xi2)
    if len(xi2) != config.base_cone.rank or not config.base_cone.contains(xi2):
        raise NotInCone(f"{xi2} is not in the base cone")
    n = config.nvars
    gens = []
    for f in config.family_gens:
        terms = {}
        for e, c in f.terms.items():
            tpow = sum(k * dot(h, xi2) for k, h in zip(e[n:], config.base_hilbert))
            key = e[:n] + (tpow,)
            terms[key] = terms.get(key, 0) + c
        gens.append(Polynomial(n + 1, terms))
    profile = tuple(dot(w, xi2) for w in config.action.weights)
    names = tuple(config.var_names) + ("t",) if config.var_names else ()
    return OneParamTestConfig(tuple(gens), profile, names)


def canonical_degeneration(ideal, action, xi, var_names=(), budget=DEFAULT_BUDGET):
    """Orbit-closure family of the reduced basis over the Groebner cone of xi."""
    order = WeightOrder(xi, action)
    gc = groebner_cone(ideal, order, budget)
    basis = buchberger(ideal, order, budget)
    if not basis:
        return GeneralizedTestConfig(gc.cone, (), action, (), tuple(var_names), xi,
                                     certify_irrational(xi))
    return orbit_closure_family(basis, action, gc.cone, var_names, xi)


def initial_ideal_of(ideal, action, xi, budget=DEFAULT_BUDGET):
    return initial_ideal(ideal, WeightOrder(xi, action), budget)
