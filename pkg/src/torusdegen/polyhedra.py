"""Lattices, rational polyhedral cones and irrational weight vectors.

Lattice vectors are plain tuples of ints.  A :class:`RationalCone` is stored by
primitive integer generators (duplicate-free, lexicographically sorted); the
empty generator list is the zero cone.  Dual cones are computed by
enumerating facet normals, which is exact and cheap at rank <= 4.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import kernels
from .errors import (
    EmptyInput,
    NonpositiveSlope,
    NotPointed,
    RankMismatch,
    RankTooLarge,
)
from .linalg import nullspace, primitive, rank as mat_rank
from .scalars import QuadExtScalar, qx

MAX_DUAL_RANK = 4
MAX_HILBERT_RANK = 3


def dot(m, v):
    """Pairing of an integer vector with a vector of ints, Fractions or scalars."""
    total = 0
    for a, b in zip(m, v):
        if a:
            total = total + a * b
    return total


def _canonical_generators(gens, rank):
    out = set()
    for g in gens:
        g = tuple(g)
        if len(g) != rank:
            raise RankMismatch(f"generator {g} is not of rank {rank}")
        p = primitive(g)
        if any(p):
            out.add(p)
    return tuple(sorted(out))


@dataclass(frozen=True)
class RationalCone:
    """The cone ``sum R_{>=0} g`` over the generators ``g`` in ``Z^rank``."""

    rank: int
    generators: tuple = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        object.__setattr__(self, "generators",
                           _canonical_generators(self.generators, self.rank))

    @classmethod
    def orthant(cls, rank):
        return cls(rank, [tuple(int(i == j) for j in range(rank)) for i in range(rank)])

    @classmethod
    def whole_space(cls, rank):
        gens = []
        for i in range(rank):
            e = tuple(int(i == j) for j in range(rank))
            gens += [e, tuple(-x for x in e)]
        return cls(rank, gens)

    @cached_property
    def dual(self):
        return dual_cone(self)

    @property
    def dim(self):
        return mat_rank(self.generators, self.rank) if self.generators else 0

    @property
    def is_pointed(self):
        # pointed iff the dual cone is full-dimensional
        return self.dual.dim == self.rank

    @property
    def is_full_dimensional(self):
        return self.dim == self.rank

    def contains(self, v):
        """Exact membership of a vector of ints, Fractions or scalars."""
        if len(v) != self.rank:
            raise RankMismatch(f"vector of length {len(v)} in a rank {self.rank} cone")
        return all(dot(m, v) >= 0 for m in self.dual.generators)

    def contains_strictly(self, v):
        """Membership in the relative interior (all non-lineality facets strict)."""
        if not self.contains(v):
            return False
        facets = self.facet_normals()
        return all(dot(m, v) > 0 for m in facets)

    def facet_normals(self):
        """Dual generators that are not part of the lineality of the dual (i.e.
        genuine facet normals)."""
        dual = self.dual
        gens = set(dual.generators)
        return [m for m in dual.generators if tuple(-x for x in m) not in gens]

    def minimal(self):
        """Same cone with redundant generators removed (extreme rays when pointed)."""
        gens = list(self.generators)
        for g in sorted(self.generators, reverse=True):
            rest = [h for h in gens if h != g]
            if rest and RationalCone(self.rank, rest).contains(g):
                gens = rest
        return RationalCone(self.rank, gens)

    def same_as(self, other):
        """Set equality of the two cones (generator lists may differ)."""
        return (self.rank == other.rank
                and all(other.contains(g) for g in self.generators)
                and all(self.contains(g) for g in other.generators))

    def interior_point(self):
        """Sum of the generators: a point of the relative interior."""
        return tuple(sum(g[k] for g in self.generators) for k in range(self.rank))

    def __str__(self):
        return format_cone(self)


def format_vector(v):
    return "(" + ",".join(str(x) for x in v) + ")"


def format_cone(cone):
    if not cone.generators:
        return "cone: {0}"
    return "cone: " + " ".join(format_vector(g) for g in cone.generators)


@dataclass(frozen=True)
class WeightVectorXi:
    """A nonzero direction in N_R with coordinates in Q(sqrt(d))."""

    coords: tuple
    d: int = 2

    def __post_init__(self):
        coords = tuple(qx(c, self.d) for c in self.coords)
        if not coords:
            raise ValueError("empty weight vector")
        if not any(coords):
            raise ValueError("weight vector must be nonzero")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_lattice(cls, v, d=2):
        return cls(tuple(QuadExtScalar(x, 0, d) for x in v), d)

    @property
    def rank(self):
        return len(self.coords)

    @property
    def is_rational(self):
        return all(c.is_rational for c in self.coords)

    def pair(self, m):
        if len(m) != self.rank:
            raise RankMismatch(f"vector of length {len(m)} against rank {self.rank}")
        return QuadExtScalar(0, 0, self.d) + dot(m, self.coords)

    def scaled(self, factor):
        return WeightVectorXi(tuple(c * factor for c in self.coords), self.d)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class WallPoint:
    level: object
    slope: QuadExtScalar
    label: int = 0


@dataclass(frozen=True)
class TorusAction:
    """Diagonal action of the rank-``rank`` torus: variable j has character ``weights[j]``."""

    rank: int
    weights: tuple = field(default=())

    def __post_init__(self):
        ws = tuple(tuple(int(x) for x in w) for w in self.weights)
        for w in ws:
            if len(w) != self.rank:
                raise RankMismatch(f"weight {w} is not of rank {self.rank}")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def coordinate(cls, n):
        return cls(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @property
    def nvars(self):
        return len(self.weights)

    def degree(self, exponent):
        """Character of the monomial with the given exponent vector."""
        return tuple(sum(e * w[k] for e, w in zip(exponent, self.weights))
                     for k in range(self.rank))


# --------------------------------------------------------------------------
# operations

def dual_cone(cone):
    """Generators of ``{x : <x, g> >= 0 for all generators g}``."""
    r = cone.rank
    if r > MAX_DUAL_RANK:
        raise RankTooLarge(f"dual_cone supports rank <= {MAX_DUAL_RANK}, got {r}")
    G = [list(g) for g in cone.generators]
    if not G:
        return RationalCone.whole_space(r)
    lin = nullspace(G, r)           # lineality space of the dual
    rho = r - len(lin)             # dimension of the pointed part
    rays = set()
    for subset in combinations(range(len(G)), rho - 1):
        rows = [G[i] for i in subset] + [list(v) for v in lin]
        sol = nullspace(rows, r)
        if len(sol) != 1:
            continue
        v = primitive(sol[0])
        vals = [dot(g, v) for g in G]
        if all(x >= 0 for x in vals):
            rays.add(v)
        elif all(x <= 0 for x in vals):
            rays.add(tuple(-x for x in v))
    gens = list(rays)
    for v in lin:
        p = primitive(v)
        gens += [p, tuple(-x for x in p)]
    return RationalCone(r, gens)


def hilbert_basis(cone):
    """Minimal generating set of the monoid ``cone ∩ Z^rank``."""
    r = cone.rank
    if r > MAX_HILBERT_RANK:
        raise RankTooLarge(f"hilbert_basis supports rank <= {MAX_HILBERT_RANK}, got {r}")
    if not cone.generators:
        return []
    if not cone.is_pointed:
        raise NotPointed(f"{format_cone(cone)} contains a line")
    gens = cone.minimal().generators
    bounds = [sum(abs(g[k]) for g in gens) for k in range(r)]
    ineqs = [list(m) for m in cone.dual.generators]
    grading = cone.dual.interior_point()
    points = kernels.cone_points(ineqs, bounds)
    basis = kernels.minimal_elements(points, ineqs, list(grading))
    return sorted(tuple(p) for p in basis)


def cone_contains(cone, xi):
    coords = xi.coords if isinstance(xi, WeightVectorXi) else tuple(xi)
    if len(coords) != cone.rank:
        raise RankMismatch(f"xi of rank {len(coords)} against cone of rank {cone.rank}")
    return cone.contains(coords)


def certify_irrational(xi):
    """True iff no nonzero integer vector pairs to zero with ``xi``.

    ``<m, xi> = 0`` splits into the rational systems ``<m, a> = 0`` and
    ``<m, b> = 0``; a common nonzero kernel exists iff their rank is < r.
    """
    a_part = [c.a for c in xi.coords]
    b_part = [c.b for c in xi.coords]
    return mat_rank([a_part, b_part], xi.rank) == xi.rank


def envelope_breakpoints(walls):
    """Distinct ratios ``level / slope`` in strictly decreasing order."""
    if not walls:
        raise EmptyInput("no walls")
    ratios = set()
    for w in walls:
        if w.slope <= 0:
            raise NonpositiveSlope(f"slope {w.slope} of wall {w.label}")
        ratios.add(qx(w.level, w.slope.d) / w.slope)
    return sorted(ratios, reverse=True)


def decompose(vector, basis, ineqs, grading):
    """An N-combination of ``basis`` equal to ``vector`` (a point of the monoid).

    Greedy depth-first search in basis order; deterministic.  Returns the list
    of multiplicities, or ``None`` if ``vector`` is not in the monoid.
    """
    memo = {}

    def deg(p):
        return sum(g * x for g, x in zip(grading, p))

    def in_cone(p):
        return all(sum(m_i * x for m_i, x in zip(m, p)) >= 0 for m in ineqs)

    def search(p):
        if not any(p):
            return [0] * len(basis)
        if p in memo:
            return memo[p]
        memo[p] = None
        for i, h in enumerate(basis):
            rest = tuple(a - b for a, b in zip(p, h))
            if deg(rest) < deg(p) and in_cone(rest):
                sub = search(rest)
                if sub is not None:
                    sub = list(sub)
                    sub[i] += 1
                    memo[p] = sub
                    return sub
        return None

    vector = tuple(vector)
    if not in_cone(vector):
        return None
    return search(vector)
