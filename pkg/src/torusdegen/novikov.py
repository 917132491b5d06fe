"""Truncated Novikov series and the value monoids of their base rings.

A :class:`NovikovSeries` is ``sum c_i t^(e_i)`` with exponents in
Q(sqrt(d)), rational coefficients, and an explicit precision ``p``: the
series is known modulo ``t^p``.  ``precision=None`` means the series is
exact (a finite sum).

A :class:`GammaMonoid` is the nonnegative part of a finitely generated
subgroup of Q(sqrt(d)); it is stored by a canonical Z-basis of that group.
This is the shape of the exponent monoids ``Gamma_{>=0} + b * M_{xi>=0}``
met when the base ring is extended along an irrational direction.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
import functools

from .errors import MismatchedField, NonpositiveInput, RankMismatch
from .scalars import QuadExtScalar, format_rational, qx

__all__ = [
    "INFINITY",
    "NovikovSeries",
    "GammaMonoid",
    "RingDesc",
    "pairing_value",
    "series_arith",
    "series_valuation",
    "extend_ring",
    "graded_generators",
]


@functools.total_ordering
class _Infinity:
    """Valuation of a series that vanishes to the known precision."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("oo")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "oo"


INFINITY = _Infinity()


def _min_prec(p, q):
    if p is None:
        return q
    if q is None:
        return p
    return p if p <= q else q


class NovikovSeries:
    """Immutable truncated series with exponents in Q(sqrt(d))."""

    __slots__ = ("terms", "precision", "d")

    def __init__(self, terms=(), precision=None, d=2):
        acc = {}
        for e, c in terms:
            e = qx(e, d)
            c = Fraction(c)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        if precision is not None:
            precision = qx(precision, d)
        items = sorted((e, c) for e, c in acc.items()
                       if c != 0 and (precision is None or e < precision))
        object.__setattr__(self, "terms", tuple(items))
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("NovikovSeries is immutable")

    # constructors ------------------------------------------------------------
    @classmethod
    def monomial(cls, exponent, coeff=1, precision=None, d=2):
        return cls([(exponent, coeff)], precision, d)

    @classmethod
    def constant(cls, c, precision=None, d=2):
        return cls([(0, c)], precision, d)

    @classmethod
    def zero(cls, precision=None, d=2):
        return cls([], precision, d)

    # queries -----------------------------------------------------------------
    @property
    def valuation(self):
        return self.terms[0][0] if self.terms else INFINITY

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_exact(self):
        return self.precision is None

    def lower_bound(self):
        """Largest exponent known to bound the order of vanishing from below."""
        if self.terms:
            return self.terms[0][0]
        return INFINITY if self.precision is None else self.precision

    def coefficient(self, exponent):
        exponent = qx(exponent, self.d)
        for e, c in self.terms:
            if e == exponent:
                return c
        return Fraction(0)

    def leading_coefficient(self):
        return self.terms[0][1] if self.terms else Fraction(0)

    def exponents(self):
        return [e for e, _ in self.terms]

    # arithmetic --------------------------------------------------------------
    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return NovikovSeries.constant(other, None, self.d)
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        if other.d != self.d:
            raise MismatchedField(f"Q(sqrt({self.d})) vs Q(sqrt({other.d}))")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return NovikovSeries(self.terms + other.terms,
                             _min_prec(self.precision, other.precision), self.d)

    __radd__ = __add__

    def __neg__(self):
        return NovikovSeries([(e, -c) for e, c in self.terms], self.precision, self.d)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadExtScalar):
            return NotImplemented
        other = self._check(other)
        if other is NotImplemented:
            return other
        prec = None
        if self.precision is not None:
            prec = self.precision + other.lower_bound() if other.lower_bound() is not INFINITY else None
        if other.precision is not None:
            lb = self.lower_bound()
            prec = _min_prec(prec, other.precision + lb if lb is not INFINITY else None)
        terms = [(e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms]
        return NovikovSeries(terms, prec, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent):
        """``t ** e`` for a monomial ``t`` with unit coefficient; integer powers in general."""
        if isinstance(exponent, int) and exponent >= 0:
            result = NovikovSeries.constant(1, None, self.d)
            for _ in range(exponent):
                result = result * self
            return result
        if len(self.terms) == 1 and self.terms[0][1] == 1 and self.precision is None:
            e = self.terms[0][0] * qx(exponent, self.d) if not isinstance(exponent, QuadExtScalar) \
                else self.terms[0][0] * exponent
            return NovikovSeries.monomial(e, 1, None, self.d)
        raise ValueError("only unit monomials can be raised to non-integer powers")

    def scale(self, c):
        c = Fraction(c)
        return NovikovSeries([(e, c * v) for e, v in self.terms], self.precision, self.d)

    def shift(self, exponent):
        """Multiply by ``t^exponent``; exponent may be negative as long as no
        stored exponent becomes negative."""
        exponent = qx(exponent, self.d)
        prec = None if self.precision is None else self.precision + exponent
        return NovikovSeries([(e + exponent, c) for e, c in self.terms], prec, self.d)

    def truncate(self, precision):
        return NovikovSeries(self.terms, _min_prec(self.precision, qx(precision, self.d)), self.d)

    def with_precision(self, precision):
        return NovikovSeries(self.terms, precision, self.d)

    # comparison / text -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        return (self.d == other.d and self.terms == other.terms
                and self.precision == other.precision)

    def __hash__(self):
        return hash((self.terms, self.precision, self.d))

    def __str__(self):
        parts = []
        for e, c in self.terms:
            if e == 0:
                mono = format_rational(abs(c))
            else:
                mono = "t" if e == 1 else f"t^({e})"
                if abs(c) != 1:
                    mono = f"{format_rational(abs(c))} {mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(f"{sign} {mono}")
        if self.precision is not None:
            parts.append(("+ " if parts else "") + f"O(t^({self.precision}))")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"NovikovSeries({str(self)!r})"


def series_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown op {op!r}")


def series_valuation(a):
    return a.valuation


def pairing_value(m, xi):
    """``<m, xi>`` for an integer vector ``m``."""
    if len(m) != xi.rank:
        raise RankMismatch(f"vector of length {len(m)} against rank {xi.rank}")
    return xi.pair(m)


# ---------------------------------------------------------------------------
# value groups

def _hnf_basis(vectors):
    """Canonical basis of the Z-span of integer 2-vectors (Hermite normal form)."""
    rows = [list(v) for v in vectors if any(v)]
    basis = []
    for col in range(2):
        # gcd-combine all rows on this column
        pivot = None
        rest = []
        for r in rows:
            if r[col] == 0:
                rest.append(r)
                continue
            if pivot is None:
                pivot = r
                continue
            a, b = pivot[col], r[col]
            # extended Euclid on (a, b)
            x0, x1, y0, y1 = 1, 0, 0, 1
            aa, bb = a, b
            while bb:
                q = aa // bb
                aa, bb = bb, aa - q * bb
                x0, x1 = x1, x0 - q * x1
                y0, y1 = y1, y0 - q * y1
            g = aa
            new_pivot = [x0 * p + y0 * s for p, s in zip(pivot, r)]
            other = [(b // g) * p - (a // g) * s for p, s in zip(pivot, r)]
            pivot = new_pivot
            rest.append(other)
        if pivot is not None:
            if pivot[col] < 0:
                pivot = [-x for x in pivot]
            basis.append(pivot)
        rows = [r for r in rest if any(r)]
    # reduce the upper entry modulo the lower pivot
    if len(basis) == 2:
        s = basis[1][1]
        q = basis[0][1] // s
        basis[0] = [basis[0][0] - q * basis[1][0], basis[0][1] - q * s]
    return basis


@dataclass(frozen=True)
class GammaMonoid:
    """Nonnegative part of the subgroup of Q(sqrt(d)) generated by ``generators``.

    ``generators`` is replaced by a canonical Z-basis with positive entries,
    sorted increasingly.
    """

    d: int
    generators: tuple = (1,)

    def __post_init__(self):
        gens = [qx(g, self.d) for g in self.generators]
        object.__setattr__(self, "generators", _canonical_group_basis(gens, self.d))

    def contains(self, x):
        """Exact membership: ``x >= 0`` and ``x`` lies in the group."""
        x = qx(x, self.d)
        if x < 0:
            return False
        return self.coordinates(x) is not None

    def coordinates(self, x):
        """Integer coordinates of ``x`` in the canonical basis, or ``None``."""
        x = qx(x, self.d)
        gens = self.generators
        if not gens:
            return [] if not x else None
        if len(gens) == 1:
            g = gens[0]
            if g.b == 0:
                if x.b != 0:
                    return None
                q = x.a / g.a
            else:
                q = x.b / g.b
                if x.a != q * g.a:
                    return None
            return [int(q)] if q.denominator == 1 else None
        (g1, g2) = gens
        det = g1.a * g2.b - g1.b * g2.a
        c1 = (x.a * g2.b - x.b * g2.a) / det
        c2 = (g1.a * x.b - g1.b * x.a) / det
        if c1.denominator != 1 or c2.denominator != 1:
            return None
        return [int(c1), int(c2)]

    def extended(self, more):
        return GammaMonoid(self.d, tuple(self.generators) + tuple(more))

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.generators) + "}"


def _canonical_group_basis(gens, d):
    vecs = [(g.b, g.a) for g in gens if g]
    if not vecs:
        return ()
    den = 1
    for b, a in vecs:
        for q in (b, a):
            den = den * q.denominator // gcd(den, q.denominator)
    ints = [(int(b * den), int(a * den)) for b, a in vecs]
    basis = _hnf_basis(ints)
    out = []
    for b, a in basis:
        s = QuadExtScalar(Fraction(a, den), Fraction(b, den), d)
        out.append(-s if s < 0 else s)
    return tuple(sorted(out))


@dataclass(frozen=True)
class RingDesc:
    """Base ring bookkeeping: value monoid, applied extensions, and the pairing
    values ``<e_i, xi>`` of the lattice basis (generators of ``<M, xi>``)."""

    monoid: GammaMonoid
    relations: tuple = ()
    pairing_generators: tuple = field(default=())

    @classmethod
    def power_series(cls, d=2, exponents=(), xi=None):
        """``k[[t^(1/q)]]`` containing the given rational exponents."""
        monoid = GammaMonoid(d, (1,) + tuple(e for e in exponents if e))
        pairs = tuple(xi.coords) if xi is not None else ()
        return cls(monoid, (), pairs)

    @property
    def d(self):
        return self.monoid.d


def extend_ring(ring, pi_valuation, m_value, pairing_generators=None):
    """Value monoid of ``R[[M_{xi>=0}]] / (pi - chi^m)``.

    With ``b = v(pi) / <xi, m>`` the new monoid is generated by the old one and
    ``b * <M, xi>``.
    """
    d = ring.d
    pi_valuation = qx(pi_valuation, d)
    m_value = qx(m_value, d)
    if pi_valuation <= 0 or m_value <= 0:
        raise NonpositiveInput(f"pi_valuation={pi_valuation}, m_value={m_value}")
    pairs = tuple(ring.pairing_generators if pairing_generators is None else
                  (qx(p, d) for p in pairing_generators))
    b = pi_valuation / m_value
    monoid = ring.monoid.extended(b * p for p in pairs)
    return RingDesc(monoid, ring.relations + ((pi_valuation, m_value),), pairs)


def graded_generators(ring):
    return list(ring.monoid.generators)

