"""Semistable reduction of arcs for diagonal torus actions on affine space.

An arc ``z(t)`` has one truncated series per coordinate.  A stratum is the
attractor locus ``{z_j = 0 : j in S}`` of a cone ``tau``.  One reduction step
rescales ``z_j -> t^(c <w_j, xi>) z_j`` at the smallest scale ``c'`` where some
destabilized coordinate acquires a nonzero constant term, and reads off the
limit at ``t = 0``.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import (
    AmbientViolation,
    LimitDoesNotExist,
    NoDestabilizingDirection,
    NonincreasingLabels,
    NonpositiveInput,
    NotInCone,
    PrecisionExhausted,
    PreconditionViolated,
    RankMismatch,
    ShapeMismatch,
)
from .novikov import INFINITY, NovikovSeries, RingDesc, extend_ring
from .polyhedra import (
    RationalCone,
    TorusAction,
    WallPoint,
    WeightVectorXi,
    cone_contains,
    dot,
    dual_cone,
    envelope_breakpoints,
)
from .scalars import QuadExtScalar, qx


class ArcClass(Enum):
    SPECIAL_IN_GENERIC_OUT = "SpecialInGenericOut"
    BOTH_IN = "BothIn"
    BOTH_OUT = "BothOut"
    PRECISION_EXHAUSTED = "PrecisionExhausted"

    def __str__(self):
        return self.value


class Direction(Enum):
    TOWARD_FIXED = "toward_fixed"
    AWAY = "away"


class _Diverges:
    def __repr__(self):
        return "DIVERGES"

    __str__ = __repr__


DIVERGES = _Diverges()


@dataclass(frozen=True)
class ArcFamily:
    coordinates: tuple
    action: TorusAction
    ambient_ideal: tuple = None

    def __post_init__(self):
        coords = tuple(self.coordinates)
        if len(coords) != self.action.nvars:
            raise ShapeMismatch(f"{len(coords)} series against {self.action.nvars} weights")
        object.__setattr__(self, "coordinates", coords)
        if self.ambient_ideal is not None:
            object.__setattr__(self, "ambient_ideal", tuple(self.ambient_ideal))

    @property
    def d(self):
        return self.coordinates[0].d if self.coordinates else 2

    def valuations(self):
        return [z.valuation for z in self.coordinates]

    def constant_terms(self):
        return [z.coefficient(0) for z in self.coordinates]

    def ambient_residuals(self):
        """Each ambient generator evaluated on the arc (zero modulo precision)."""
        if not self.ambient_ideal:
            return []
        return [f.substitute(self.coordinates) for f in self.ambient_ideal]

    def satisfies_ambient(self):
        return all(isinstance(r, NovikovSeries) and r.is_zero or r == 0
                   for r in self.ambient_residuals())

    def rescaled(self, torus_element):
        """Act by ``lambda``: coordinate j picks up the factor ``chi^{w_j}(lambda)``."""
        out = []
        for z, w in zip(self.coordinates, self.action.weights):
            out.append(z.scale(character_value(w, torus_element)))
        return ArcFamily(tuple(out), self.action, self.ambient_ideal)


def character_value(w, torus_element):
    value = Fraction(1)
    for k, lam in zip(w, torus_element):
        value *= Fraction(lam) ** k
    return value


@dataclass(frozen=True)
class StrataSpec:
    cone: RationalCone
    destabilized: frozenset

    def __post_init__(self):
        object.__setattr__(self, "destabilized", frozenset(self.destabilized))

    def contains_point(self, point):
        return all(point[j] == 0 for j in self.destabilized)


@dataclass(frozen=True)
class ReductionStep:
    critical_scale: QuadExtScalar
    exit_set: frozenset
    new_family: tuple
    limit_point: tuple
    base_ring: RingDesc
    wall_scales: tuple
    deeper_limit: tuple = None
    xi: WeightVectorXi = None
    label: object = None


@dataclass(frozen=True)
class StratumEntry:
    label: Fraction
    strata: StrataSpec
    xi: WeightVectorXi


@dataclass(frozen=True)
class Stratification:
    entries: tuple = field(default=())

    def __post_init__(self):
        entries = tuple(self.entries)
        labels = [e.label for e in entries]
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise NonincreasingLabels(f"labels {labels} are not strictly increasing")
        object.__setattr__(self, "entries", entries)


@dataclass(frozen=True)
class ApproxResult:
    matched: bool
    witness: str = None

    def __str__(self):
        return "Match" if self.matched else f"Mismatch({self.witness})"


# ---------------------------------------------------------------------------

def attractor_locus(action, tau):
    if tau.rank != action.rank:
        raise RankMismatch(f"cone of rank {tau.rank} against action of rank {action.rank}")
    S = set()
    for j, w in enumerate(action.weights):
        if tau.generators and min(dot(w, g) for g in tau.generators) < 0:
            S.add(j)
    return StrataSpec(tau, frozenset(S))


def classify_arc(arc, strata):
    S = sorted(strata.destabilized)
    vals = {j: arc.coordinates[j].valuation for j in S}
    if any(v is not INFINITY and v == 0 for v in vals.values()):
        return ArcClass.BOTH_OUT
    if any(arc.coordinates[j].is_zero and not arc.coordinates[j].is_exact for j in S):
        return ArcClass.PRECISION_EXHAUSTED
    if all(v is INFINITY for v in vals.values()):
        return ArcClass.BOTH_IN
    return ArcClass.SPECIAL_IN_GENERIC_OUT


def _require_special_in(arc, strata):
    cls = classify_arc(arc, strata)
    if cls is ArcClass.PRECISION_EXHAUSTED:
        raise PrecisionExhausted("a destabilized coordinate vanishes to the given precision")
    if cls is not ArcClass.SPECIAL_IN_GENERIC_OUT:
        raise PreconditionViolated(f"arc is {cls}, expected SpecialInGenericOut")


def _pairings(action, xi):
    return [xi.pair(w) for w in action.weights]


def critical_scale(arc, strata, xi):
    """``(c', exit_set, walls)``: the first wall and the full decreasing wall list."""
    _require_special_in(arc, strata)
    if not cone_contains(strata.cone, xi):
        raise PreconditionViolated(f"xi = {xi} is not in the stratum cone")
    pairs = _pairings(arc.action, xi)
    walls = []
    for j in sorted(strata.destabilized):
        v = arc.coordinates[j].valuation
        if v is INFINITY or pairs[j] >= 0:
            continue
        walls.append(WallPoint(v, -pairs[j], j))
    if not walls:
        raise NoDestabilizingDirection("no destabilized coordinate pairs negatively with xi")
    scales = envelope_breakpoints(walls)
    c = scales[-1]
    exit_set = frozenset(w.label for w in walls if qx(w.level, xi.d) / w.slope == c)
    return c, exit_set, tuple(scales)


def base_ring_of(arc, xi):
    """``k[[t^(1/q)]]`` for the arc's exponents, with xi's pairing generators."""
    exps = set()
    for z in arc.coordinates:
        exps.update(z.exponents())
        if z.precision is not None:
            exps.add(z.precision)
    return RingDesc.power_series(xi.d, sorted(exps), xi)


def elementary_modification(arc, xi, c, ring=None):
    """Coordinates ``t^(c <w_j, xi>) z_j``, their limit at ``t = 0`` and the base ring."""
    c = qx(c, xi.d)
    if c < 0:
        raise NonpositiveInput(f"scale {c} is negative")
    pairs = _pairings(arc.action, xi)
    new = []
    for j, (z, p) in enumerate(zip(arc.coordinates, pairs)):
        s = c * p
        if z.is_zero:
            if z.precision is not None and z.precision + s <= 0:
                raise PrecisionExhausted(f"coordinate {j + 1} is unknown after rescaling")
        elif z.valuation + s < 0:
            raise LimitDoesNotExist(f"coordinate {j + 1} acquires valuation {z.valuation + s}")
        new.append(z.shift(s))
    limit = tuple(z.coefficient(0) for z in new)
    if ring is None:
        ring = base_ring_of(arc, xi)
    if c > 0:
        # pi = t has valuation 1; b = c so that c <M, xi> joins the monoid
        ring = extend_ring(ring, 1, 1 / c, xi.coords)
    return tuple(new), limit, ring


def limit_along(point, action, xi2, direction="toward_fixed"):
    """Limit of ``lambda(s) . point`` as ``s -> 0``.

    ``toward_fixed`` flows coordinates with negative pairing to 0, keeps
    pairing-0 coordinates and diverges on a nonzero positive-pairing
    coordinate; ``away`` is the opposite flow."""
    direction = Direction(direction)
    if not isinstance(xi2, WeightVectorXi):
        xi2 = WeightVectorXi.from_lattice(tuple(xi2))
    sign = -1 if direction is Direction.TOWARD_FIXED else 1
    out = []
    for x, w in zip(point, action.weights):
        p = xi2.pair(w) * sign
        if p == 0:
            out.append(Fraction(x))
        elif p > 0:
            out.append(Fraction(0))
        elif x != 0:
            return DIVERGES
        else:
            out.append(Fraction(0))
    return tuple(out)


def semistable_reduce(arc, strata, xi, ring=None):
    c, exit_set, walls = critical_scale(arc, strata, xi)
    new, limit, ring = elementary_modification(arc, xi, c, ring)
    if not any(limit[j] != 0 for j in exit_set):
        raise AssertionError("limit stayed in the stratum")
    if arc.ambient_ideal:
        for f in arc.ambient_ideal:
            if f.evaluate(limit) != 0:
                raise AmbientViolation("limit point violates the ambient ideal")
    deeper = limit_along(limit, arc.action, xi, "toward_fixed")
    if deeper is DIVERGES or not strata.contains_point(deeper):
        raise AssertionError("deeper limit left the stratum")
    return ReductionStep(c, exit_set, new, limit, ring, walls, deeper, xi)


def _as_rational_xi(xi2, d):
    if isinstance(xi2, WeightVectorXi):
        return xi2
    return WeightVectorXi(tuple(QuadExtScalar(Fraction(x), 0, d) for x in xi2), d)


def check_rational_approx(step, arc, strata, xi2):
    """Compare the step with the one computed from a rational direction ``xi2``."""
    xi2 = _as_rational_xi(xi2, arc.d)
    if not xi2.is_rational:
        raise ValueError("xi2 must be rational")
    if xi2.rank != strata.cone.rank or not cone_contains(strata.cone, xi2):
        raise NotInCone(f"{xi2} is not in the stratum cone")
    try:
        c2, exit2, _ = critical_scale(arc, strata, xi2)
    except NoDestabilizingDirection:
        return ApproxResult(False, "no_direction")
    if exit2 != step.exit_set:
        return ApproxResult(False, "tie" if len(exit2) > 1 else "exit_set")
    try:
        _, limit2, _ = elementary_modification(arc, xi2, c2)
    except LimitDoesNotExist:
        return ApproxResult(False, "limit")
    if tuple(limit2) != tuple(step.limit_point):
        return ApproxResult(False, "limit")
    return ApproxResult(True)


def safety_inequalities(step, arc, strata):
    """Integer vectors ``u`` with ``<u, xi''> > 0`` on the open safety cone.

    For ``j*`` in the exit set and every other destabilized ``k`` of finite
    valuation: ``val(j*) w_k - val(k) w_j*`` (the wall between j* and k stays
    on the right side), ``-w_j*`` (j* keeps destabilizing), the tau facets, and
    ``w_j`` for pairing-0-limit coordinates outside S."""
    jstar = min(step.exit_set)
    weights = arc.action.weights
    vals = arc.valuations()
    vj = _rational(vals[jstar])
    ineqs = [tuple(-x for x in weights[jstar])]
    for k in sorted(strata.destabilized):
        if k == jstar or vals[k] is INFINITY:
            continue
        vk = _rational(vals[k])
        u = tuple(vj * a - vk * b for a, b in zip(weights[k], weights[jstar]))
        u = _integral(u)
        if k in step.exit_set:
            ineqs += [u, tuple(-x for x in u)]
        else:
            ineqs.append(u)
    for j, w in enumerate(weights):
        if j not in strata.destabilized and vals[j] is not INFINITY and vals[j] == 0 and any(w):
            ineqs.append(tuple(w))
    ineqs += list(strata.cone.dual.generators)
    return [u for u in ineqs if any(u)]


def _rational(v):
    v = v if isinstance(v, QuadExtScalar) else qx(v)
    if not v.is_rational:
        raise ValueError("safety cones need rational valuations")
    return v.a


def _integral(u):
    den = 1
    for x in u:
        den = den * Fraction(x).denominator
    return tuple(int(Fraction(x) * den) for x in u)


def safety_cone(step, arc, strata):
    r = arc.action.rank
    return dual_cone(RationalCone(r, safety_inequalities(step, arc, strata)))


def stratum_of(point, strat):
    """Entries of the stratification containing ``point``, lowest label first."""
    return [e for e in strat.entries if e.strata.contains_point(point)]


def iterate_reduction(arc, strat, max_steps=None):
    """Reduce along the stratification until the limit leaves every stratum."""
    for e in strat.entries:
        cls = classify_arc(arc, e.strata)
        if cls is ArcClass.BOTH_IN:
            raise PreconditionViolated("generic fiber lies in a stratum")
        if cls is ArcClass.PRECISION_EXHAUSTED:
            raise PrecisionExhausted("a destabilized coordinate vanishes to the given precision")
    point = tuple(arc.constant_terms())
    steps = []
    ring = None
    prev = None
    limit = max_steps if max_steps is not None else len(strat.entries)
    while True:
        hits = stratum_of(point, strat)
        if not hits:
            return steps
        entry = hits[0]
        if prev is not None and entry.label <= prev:
            raise NonincreasingLabels(f"label {entry.label} does not exceed {prev}")
        if len(steps) >= limit:
            raise NonincreasingLabels("reduction did not leave the stratification")
        if ring is None:
            ring = base_ring_of(arc, entry.xi)
        step = semistable_reduce(arc, entry.strata, entry.xi, ring)
        step = ReductionStep(step.critical_scale, step.exit_set, step.new_family,
                             step.limit_point, step.base_ring, step.wall_scales,
                             step.deeper_limit, step.xi, entry.label)
        steps.append(step)
        ring = step.base_ring
        prev = entry.label
        arc = ArcFamily(step.new_family, arc.action, arc.ambient_ideal)
        point = tuple(step.limit_point)
