"""Shared random generators and independent oracles for the test suite."""

import random
from fractions import Fraction
from itertools import product

import mpmath
import sympy

from torusdegen.groebner import Polynomial
from torusdegen.novikov import NovikovSeries
from torusdegen.polyhedra import RationalCone, TorusAction, WeightVectorXi
from torusdegen.reduction import ArcFamily, attractor_locus
from torusdegen.scalars import QuadExtScalar, qx

SQRT2 = QuadExtScalar(0, 1, 2)
XI = WeightVectorXi((1, SQRT2))


# ---------------------------------------------------------------------------
# interval oracle (mpmath, independent of the exact sign test)

def iv_value(x, dps=100):
    ctx = mpmath.iv
    saved = ctx.dps
    ctx.dps = dps
    try:
        a = ctx.mpf(x.a.numerator) / x.a.denominator
        b = ctx.mpf(x.b.numerator) / x.b.denominator
        return a + b * ctx.sqrt(x.d)
    finally:
        ctx.dps = saved


def iv_sign(x, dps=100):
    """Sign of ``x`` from a 100-digit enclosure, or ``None`` if undecided."""
    v = iv_value(x, dps)
    if v.a > 0:
        return 1
    if v.b < 0:
        return -1
    return None


def to_mpf(x, dps=60):
    mpmath.mp.dps = dps
    return mpmath.mpf(x.a.numerator) / x.a.denominator + \
        mpmath.mpf(x.b.numerator) / x.b.denominator * mpmath.sqrt(x.d)


# ---------------------------------------------------------------------------
# brute-force monoid oracles

def brute_hilbert_basis(cone, box=10):
    """Irreducible lattice points of the cone, from an explicit box scan."""
    ineqs = cone.dual.generators
    r = cone.rank

    def inside(p):
        return all(sum(a * b for a, b in zip(m, p)) >= 0 for m in ineqs)

    pts = [p for p in product(range(-box, box + 1), repeat=r) if any(p) and inside(p)]
    ptset = set(pts)
    out = []
    for p in pts:
        if not any(q != p and tuple(a - b for a, b in zip(p, q)) in ptset for q in pts):
            out.append(p)
    return sorted(out)


def brute_decomposes(p, basis, bound=10):
    """``p`` as an N-combination of ``basis`` with coefficients <= bound."""
    for coeffs in product(range(bound + 1), repeat=len(basis)):
        if tuple(sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(len(p))) == tuple(p):
            return True
    return False


def brute_group_member(x, gens, bound=20):
    """``x = sum c_i g_i`` with integers ``|c_i| <= bound`` (brute force)."""
    rng = range(-bound, bound + 1)
    for coeffs in product(rng, repeat=len(gens)):
        s = sum((c * g for c, g in zip(coeffs, gens)), QuadExtScalar(0, 0, x.d))
        if s == x:
            return True
    return False


# ---------------------------------------------------------------------------
# sympy oracles

def to_sympy(f, symbols):
    expr = 0
    for e, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(symbols, e):
            term *= s ** k
        expr += term
    return expr


def sympy_grevlex(polys, symbols):
    return sympy.groebner([to_sympy(f, symbols) for f in polys], *symbols, order="grevlex", domain="QQ")


def sympy_standard_counts(polys, symbols, D):
    """Degree-wise standard monomial counts from sympy's grevlex basis."""
    polys = [f for f in polys if f]
    n = len(symbols)
    if not polys:
        leads = []
    else:
        G = sympy_grevlex(polys, symbols)
        leads = [sympy.Poly(g, *symbols).monoms(order="grevlex")[0] for g in G.exprs]
    counts = []
    for k in range(D + 1):
        c = 0
        for e in product(range(k + 1), repeat=n):
            if sum(e) != k:
                continue
            if not any(all(a <= b for a, b in zip(l, e)) for l in leads):
                c += 1
        counts.append(c)
    return counts


def sympy_same_ideal(a, b, symbols):
    a = [f for f in a if f]
    b = [f for f in b if f]
    if not a or not b:
        return not a and not b
    Ga = sympy_grevlex(a, symbols)
    Gb = sympy_grevlex(b, symbols)
    return set(Ga.exprs) == set(Gb.exprs)


def sympy_contains(ideal, f, symbols):
    G = sympy_grevlex(ideal, symbols)
    return G.contains(to_sympy(f, symbols))


# ---------------------------------------------------------------------------
# random instances

def random_rational(rng, lo, hi, den=4):
    q = rng.randint(1, den)
    return Fraction(rng.randint(lo * q, hi * q), q)


def random_series(rng, positive, max_terms=8, precision=None):
    """Series with rational exponents (> 0 if ``positive``) and <= max_terms terms."""
    n = rng.randint(1, max_terms)
    exps = set()
    while len(exps) < n:
        e = random_rational(rng, 0, 6)
        if positive and e == 0:
            continue
        exps.add(e)
    terms = [(e, rng.choice([-3, -2, -1, 1, 2, 3, Fraction(1, 2)])) for e in exps]
    if precision is not None:
        precision = max(precision, max(exps) + 1)
    return NovikovSeries(terms, precision, 2)


def random_tau(rng):
    """Pointed full-dimensional rank-2 cone containing (1, sqrt 2) in its interior."""
    if rng.random() < 0.4:
        return RationalCone.orthant(2)
    while True:
        p1, q1 = rng.randint(1, 4), rng.randint(-3, 4)
        p2, q2 = rng.randint(0, 4), rng.randint(1, 6)
        lo, hi = Fraction(q1, p1), (Fraction(q2, p2) if p2 else None)
        if qx(lo) < SQRT2 and (hi is None or qx(hi) > SQRT2):
            return RationalCone(2, [(p1, q1), (p2, q2)])


def random_reduction_instance(rng, max_vars=6, max_terms=8):
    """``(arc, strata, xi)`` with the arc SpecialInGenericOut and a
    destabilizing direction for xi = (1, sqrt 2)."""
    while True:
        n = rng.randint(2, max_vars)
        weights = [(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(n)]
        tau = random_tau(rng)
        action = TorusAction(2, weights)
        strata = attractor_locus(action, tau)
        S = strata.destabilized
        pairs = [XI.pair(w) for w in weights]
        if not any(pairs[j] < 0 for j in S):
            continue
        prec = Fraction(rng.randint(8, 14)) if rng.random() < 0.7 else None
        coords = []
        for j in range(n):
            if j in S:
                if pairs[j] >= 0 and rng.random() < 0.3:
                    coords.append(NovikovSeries([], None, 2))
                else:
                    coords.append(random_series(rng, True, max_terms, prec))
            else:
                coords.append(random_series(rng, False, max_terms, prec))
        arc = ArcFamily(tuple(coords), action)
        if not any(pairs[j] < 0 and not coords[j].is_zero for j in S):
            continue
        return arc, strata, XI


def random_homogeneous_ideal(rng, nvars, max_deg=3, ngens=None):
    ngens = ngens or rng.randint(1, 3)
    gens = []
    for _ in range(ngens):
        deg = rng.randint(1, max_deg)
        mons = [e for e in product(range(deg + 1), repeat=nvars) if sum(e) == deg]
        chosen = rng.sample(mons, rng.randint(1, min(4, len(mons))))
        f = Polynomial(nvars, {e: rng.choice([-2, -1, 1, 2, 3]) for e in chosen})
        gens.append(f)
    return gens


def random_ideal(rng, nvars, max_deg=3):
    ngens = rng.randint(1, 2)
    gens = []
    for _ in range(ngens):
        mons = [e for e in product(range(max_deg + 1), repeat=nvars) if sum(e) <= max_deg]
        chosen = rng.sample(mons, rng.randint(1, 3))
        gens.append(Polynomial(nvars, {e: rng.choice([-2, -1, 1, 2]) for e in chosen}))
    return gens


def random_action(rng, nvars):
    if nvars == 2:
        return TorusAction.coordinate(2)
    while True:
        w = [(rng.randint(-1, 2), rng.randint(-1, 2)) for _ in range(nvars)]
        if len(set(w)) == nvars and all(any(x) for x in w):
            return TorusAction(2, w)


def rng_for(seed):
    return random.Random(seed)


def qxs(text):
    return qx(text, 2)
