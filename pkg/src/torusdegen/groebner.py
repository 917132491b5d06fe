"""Polynomials over Q, xi-weight orders, Buchberger, initial ideals, Groebner cones.

Initial forms follow the min-weight convention: under ``z_j -> t^<w_j, xi> z_j``
and ``t -> 0`` the surviving terms of ``f`` are those of minimal xi-weight.

A min-weight order is not a well-order on all monomials, so Groebner bases are
computed for standard-homogeneous ideals only.  There the order
``(total degree, -xi-weight, grevlex)`` is a genuine monomial order whose
leading terms are the min-weight terms.  Other ideals are homogenized with an
extra variable ``h`` of torus weight 0; initial ideals are then read off the
homogenization and dehomogenized afterwards.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .errors import BudgetExceeded, EmptyInput, ParseError, ShapeMismatch
from .linalg import rank as mat_rank
from .polyhedra import RationalCone, TorusAction, WeightVectorXi, certify_irrational, dual_cone
from .scalars import Order, format_rational, qx
from .textio import evaluate

DEFAULT_BUDGET = 20000


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Sparse polynomial: ``{exponent tuple: nonzero Fraction}`` in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ShapeMismatch(f"exponent {e} in a ring of {nvars} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        return cls(nvars, {tuple(int(k == i) for k in range(nvars)): 1})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ShapeMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return Polynomial(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(1 / Fraction(other))
        if isinstance(other, Polynomial) and other.degree() == 0:
            return self / other.terms[(0,) * self.nvars]
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Polynomial.constant(self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c):
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def shift(self, exp, c=1):
        """Multiply by the monomial ``c * x^exp``."""
        return Polynomial(self.nvars, {tuple(a + b for a, b in zip(e, exp)): c * v
                                       for e, v in self.terms.items()})

    def substitute(self, values):
        """Substitute ``values[i]`` (a Polynomial, Fraction or int) for variable i."""
        result = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * (v ** k)
            result = result + term
        return result

    def evaluate(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total

    def embed(self, nvars, positions):
        """Same polynomial in a larger ring; variable i goes to ``positions[i]``."""
        t = {}
        for e, c in self.terms.items():
            new = [0] * nvars
            for i, k in zip(positions, e):
                new[i] += k
            t[tuple(new)] = c
        return Polynomial(nvars, t)

    def homogenize(self):
        """Homogenization with a new last variable."""
        deg = self.degree()
        return Polynomial(self.nvars + 1, {e + (deg - sum(e),): c for e, c in self.terms.items()})

    def dehomogenize(self):
        """Set the last variable to 1."""
        t = {}
        for e, c in self.terms.items():
            t[e[:-1]] = t.get(e[:-1], 0) + c
        return Polynomial(self.nvars - 1, t)

    def monic(self, order=None):
        if not self.terms:
            return self
        lead = leading_term(self, order or GREVLEX)[1]
        return self.scale(1 / lead)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def format(self, names):
        """Canonical text: terms in decreasing grevlex order."""
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, key=GREVLEX.key, reverse=True):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        names = [f"x{i + 1}" for i in range(self.nvars)]
        return f"Polynomial({self.format(names)!r})"


def parse_polynomial(text, names):
    """Parse an infix polynomial over the declared variable names."""
    n = len(names)
    env = {name: Polynomial.variable(n, i) for i, name in enumerate(names)}
    try:
        value = evaluate(text, names=env)
    except ZeroDivisionError:
        raise ParseError("division by zero") from None
    if isinstance(value, Fraction):
        value = Polynomial.constant(n, value)
    if not isinstance(value, Polynomial):
        raise ParseError(f"not a polynomial: {text!r}")
    return value


# ---------------------------------------------------------------------------
# orders

def _grevlex_key(e):
    return (sum(e), tuple(-k for k in reversed(e)))


class GrevlexOrder:
    """Graded reverse lexicographic order; larger key = leading."""

    def key(self, e):
        return _grevlex_key(e)


GREVLEX = GrevlexOrder()


class WeightOrder:
    """Min-xi-weight order with grevlex tiebreak.

    ``key`` sorts so that the leading (maximal key) term of a homogeneous
    polynomial is its minimal-weight term.  Extra trailing variables beyond the
    action (homogenizing or parameter variables) carry weight 0.
    """

    def __init__(self, xi, action):
        if not isinstance(xi, WeightVectorXi):
            xi = WeightVectorXi(tuple(xi))
        if xi.rank != action.rank:
            raise ShapeMismatch(f"xi of rank {xi.rank} against action of rank {action.rank}")
        self.xi = xi
        self.action = action
        if xi.is_rational:
            self.var_weights = tuple(Fraction(xi.pair(w).a) for w in action.weights)
        else:
            self.var_weights = tuple(xi.pair(w) for w in action.weights)
        self.irrational = certify_irrational(xi)
        self._cache = {}

    def weight(self, e):
        total = 0
        for k, w in zip(e, self.var_weights):
            if k:
                total = total + k * w
        return total

    def key(self, e):
        k = self._cache.get(e)
        if k is None:
            w = self.weight(e)
            k = (sum(e), -w, tuple(-x for x in reversed(e)))
            self._cache[e] = k
        return k


def monomial_weight(m, order):
    m = tuple(m)
    if len(m) != order.action.nvars:
        raise ShapeMismatch(f"monomial of length {len(m)} against {order.action.nvars} variables")
    return qx(order.weight(m), order.xi.d)


def compare_monomials(m1, m2, order):
    """``Less`` when ``m1`` comes first (smaller weight, then grevlex-larger)."""
    for m in (m1, m2):
        if len(m) != order.action.nvars:
            raise ShapeMismatch(f"monomial of length {len(m)} against {order.action.nvars} variables")
    m1, m2 = tuple(m1), tuple(m2)
    if m1 == m2:
        return Order.EQUAL
    w1, w2 = order.weight(m1), order.weight(m2)
    if w1 != w2:
        return Order.LESS if w1 < w2 else Order.GREATER
    return Order.LESS if _grevlex_key(m1) > _grevlex_key(m2) else Order.GREATER


def leading_term(f, order):
    e = max(f.terms, key=order.key)
    return e, f.terms[e]


def initial_form(f, order):
    """Sum of the terms of minimal xi-weight."""
    weights = {e: order.weight(e) for e in f.terms}
    low = min(weights.values())
    return Polynomial(f.nvars, {e: c for e, c in f.terms.items() if weights[e] == low})


# ---------------------------------------------------------------------------
# Buchberger

def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f, basis, order, leads=None):
    """Full reduction of ``f`` modulo ``basis``."""
    if leads is None:
        leads = [leading_term(g, order) for g in basis]
    rem = {}
    p = dict(f.terms)
    key = order.key
    while p:
        e = max(p, key=key)
        c = p[e]
        for g, (ge, gc) in zip(basis, leads):
            if _divides(ge, e):
                q = c / gc
                shift = tuple(x - y for x, y in zip(e, ge))
                for te, tc in g.terms.items():
                    ne = tuple(x + y for x, y in zip(te, shift))
                    v = p.get(ne, 0) - q * tc
                    if v:
                        p[ne] = v
                    else:
                        p.pop(ne, None)
                break
        else:
            rem[e] = c
            del p[e]
    return Polynomial(f.nvars, rem)


def s_polynomial(f, g, order):
    fe, fc = leading_term(f, order)
    ge, gc = leading_term(g, order)
    l = _lcm(fe, ge)
    return (f.shift(tuple(a - b for a, b in zip(l, fe)), 1 / fc)
            - g.shift(tuple(a - b for a, b in zip(l, ge)), 1 / gc))


def _buchberger_core(gens, order, budget):
    basis = []
    for f in gens:
        f = normal_form(f, basis, order) if basis else f
        if f:
            basis.append(f.monic(order))
    leads = [leading_term(g, order)[0] for g in basis]
    pairs = [(i, j) for i, j in combinations(range(len(basis)), 2)]
    steps = 0
    while pairs:
        # smallest lcm first
        pairs.sort(key=lambda p: order.key(_lcm(leads[p[0]], leads[p[1]])), reverse=True)
        i, j = pairs.pop()
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"more than {budget} S-pairs")
        a, b = leads[i], leads[j]
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        l = _lcm(a, b)
        if any(k not in (i, j) and _divides(leads[k], l)
               and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
               for k in range(len(basis))):
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h:
            h = h.monic(order)
            basis.append(h)
            leads.append(leading_term(h, order)[0])
            n = len(basis) - 1
            pairs.extend((k, n) for k in range(n))
    return _interreduce(basis, order)


def _interreduce(basis, order):
    basis = [g for g in basis if g]
    # minimal: drop elements whose leading monomial is divisible by another's
    leads = [leading_term(g, order)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        dominated = False
        for j, h in enumerate(basis):
            if i != j and _divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order) if others else g
        out.append(r.monic(order))
    return sorted(out, key=lambda g: order.key(leading_term(g, order)[0]))


def _check_nonempty(ideal):
    ideal = list(ideal)
    if not ideal:
        raise EmptyInput("empty generator list")
    return ideal


def grevlex_basis(ideal, budget=DEFAULT_BUDGET):
    """Reduced Groebner basis for grevlex (any input)."""
    ideal = _check_nonempty(ideal)
    return _buchberger_core(ideal, GREVLEX, budget)


def _homogeneous(ideal):
    return all(f.is_homogeneous() for f in ideal)


def _homogenized_order(order):
    action = order.action
    ext = TorusAction(action.rank, action.weights + ((0,) * action.rank,))
    return WeightOrder(order.xi, ext)


def _weighted_basis(ideal, order, budget):
    """``(basis, homogenized)``: reduced basis of the (homogenized) ideal."""
    ideal = [f for f in _check_nonempty(ideal)]
    for f in ideal:
        if f.nvars != order.action.nvars:
            raise ShapeMismatch(f"polynomial in {f.nvars} variables, action has {order.action.nvars}")
    ideal = [f for f in ideal if f]
    if not ideal:
        return [], False
    if _homogeneous(ideal):
        return _buchberger_core(ideal, order, budget), False
    gb = grevlex_basis(ideal, budget)
    hom = [g.homogenize() for g in gb]
    horder = _homogenized_order(order)
    return _buchberger_core(hom, horder, budget), True


def buchberger(ideal, order, budget=DEFAULT_BUDGET):
    """Reduced Groebner basis whose leading terms are the min-weight terms.

    For non-homogeneous input this is the dehomogenization of the reduced basis
    of the homogenized ideal (a standard basis for the local order)."""
    basis, hom = _weighted_basis(ideal, order, budget)
    if not hom:
        return basis
    out = []
    for g in basis:
        d = g.dehomogenize()
        if d and d not in out:
            out.append(d)
    return out


def initial_ideal(ideal, order, budget=DEFAULT_BUDGET):
    """Generators of ``in_xi(I)``: the initial forms of the reduced basis.

    Non-homogeneous input returns the reduced grevlex basis of the dehomogenized
    initial ideal, which is canonical."""
    basis, hom = _weighted_basis(ideal, order, budget)
    if not basis:
        return []
    if not hom:
        return [initial_form(g, order).monic(order) for g in basis]
    horder = _homogenized_order(order)
    forms = [initial_form(g, horder).dehomogenize() for g in basis]
    return grevlex_basis(forms, budget)


def same_ideal(a, b, budget=DEFAULT_BUDGET):
    """Equality of ideals via reduced grevlex bases."""
    a = [f for f in a if f]
    b = [f for f in b if f]
    if not a or not b:
        return not a and not b
    return grevlex_basis(a, budget) == grevlex_basis(b, budget)


# ---------------------------------------------------------------------------
# Groebner cone

@dataclass(frozen=True)
class GroebnerCone:
    cone: RationalCone
    inequalities: tuple = ()
    basis: tuple = ()


def cone_inequalities(basis, action):
    """Integer vectors ``v`` with ``<v, xi'> >= 0`` cutting out the Groebner cone.

    For each basis element: ``(tail - initial) . weights`` for every tail term and
    ``+-(initial - initial_0) . weights`` for the other initial terms.
    """
    vs = []
    for g, init in basis:
        init_exps = sorted(init.terms)
        e0 = init_exps[0]
        d0 = _torus_degree(e0, action)
        for e in g.terms:
            v = tuple(a - b for a, b in zip(_torus_degree(e, action), d0))
            if e in init.terms:
                if any(v):
                    vs.append(v)
                    vs.append(tuple(-x for x in v))
            elif any(v):
                vs.append(v)
    return vs


def _torus_degree(e, action):
    # trailing variables beyond the action (homogenizing) carry weight 0
    r = action.rank
    return tuple(sum(k * w[i] for k, w in zip(e, action.weights)) for i in range(r))


def groebner_cone(ideal, order, budget=DEFAULT_BUDGET):
    basis, hom = _weighted_basis(ideal, order, budget)
    o = _homogenized_order(order) if hom else order
    pairs = [(g, initial_form(g, o)) for g in basis]
    vs = cone_inequalities(pairs, order.action)
    r = order.action.rank
    if vs:
        cone = dual_cone(RationalCone(r, vs))
    else:
        cone = RationalCone.whole_space(r)
    return GroebnerCone(cone, tuple(sorted(set(vs))), tuple(basis))


# ---------------------------------------------------------------------------
# Hilbert functions

def monomials_of_degree(n, k):
    out = []
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def hilbert_function(ideal, nvars, D, budget=DEFAULT_BUDGET):
    """``[dim (k[x]/I)_k for k = 0..D]``.

    Homogeneous ideals: rank of the degree-k slice by dense linear algebra.
    Otherwise: standard monomials of degree k for grevlex (the Hilbert function
    of the associated graded ring of the degree filtration)."""
    ideal = [f for f in ideal if f]
    if not ideal:
        return [len(monomials_of_degree(nvars, k)) for k in range(D + 1)]
    if _homogeneous(ideal):
        return [_slice_dim(ideal, nvars, k) for k in range(D + 1)]
    return standard_monomial_counts(ideal, nvars, D, budget)


def _slice_dim(ideal, nvars, k):
    mons = monomials_of_degree(nvars, k)
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for f in ideal:
        df = f.degree()
        if df > k:
            continue
        for m in monomials_of_degree(nvars, k - df):
            g = f.shift(m)
            row = [0] * len(mons)
            for e, c in g.terms.items():
                row[index[e]] = c
            rows.append(row)
    return len(mons) - (mat_rank(rows, len(mons)) if rows else 0)


def standard_monomial_counts(ideal, nvars, D, budget=DEFAULT_BUDGET):
    """Degree-wise count of grevlex standard monomials (second Hilbert oracle)."""
    ideal = [f for f in ideal if f]
    if not ideal:
        return [len(monomials_of_degree(nvars, k)) for k in range(D + 1)]
    leads = [leading_term(g, GREVLEX)[0] for g in grevlex_basis(ideal, budget)]
    return [sum(1 for m in monomials_of_degree(nvars, k)
                if not any(_divides(l, m) for l in leads)) for k in range(D + 1)]


def is_groebner_basis(basis, order):
    """Every S-pair reduces to zero."""
    leads = [leading_term(g, order) for g in basis]
    for f, g in combinations(basis, 2):
        if normal_form(s_polynomial(f, g, order), basis, order, leads):
            return False
    return True

