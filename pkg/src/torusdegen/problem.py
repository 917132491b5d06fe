"""Line-oriented problem files.

::

    [lattice]
    rank = 2
    d = 2

    [xi]
    xi = (1, sqrt(2))

    [action]
    variables = x, y, z
    weights = (-1,0) (0,-1) (1,1)

    [cone]
    cone = (1,0) (0,1)

    [arc]
    precision = 10
    x = t^2
    y = t^3
    z = 1 + t

Other sections: ``[ideal]`` (one polynomial per key), ``[strata]`` (optional
``cone`` and 1-based ``destabilized`` indices), ``[stratification]``
(repeated ``stratum = label ; cone ; xi``) and ``[novikov]``
(``base``, ``pi_valuation``, ``m_value``, optional ``pairing``).  ``#`` starts a comment.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConsistencyError, ParseError, TorusDegenError
from .groebner import Polynomial, parse_polynomial
from .novikov import NovikovSeries
from .polyhedra import RationalCone, TorusAction, WeightVectorXi, format_vector
from .reduction import StrataSpec, Stratification, StratumEntry, attractor_locus
from .scalars import QuadExtScalar, format_rational, is_squarefree
from .textio import (
    _sqrt_factory,
    detect_d,
    evaluate,
    parse_int_tuple,
    parse_scalar,
    parse_scalar_tuple,
    parse_tuple_groups,
    split_top_level,
)

SECTIONS = ("lattice", "xi", "action", "cone", "arc", "ideal", "strata",
            "stratification", "novikov")

REQUIRED = {
    "in-ideal": ("lattice", "xi", "action", "ideal"),
    "gcone": ("lattice", "xi", "action", "ideal"),
    "family": ("lattice", "xi", "action", "ideal"),
    "restrict": ("lattice", "xi", "action", "ideal"),
    "reduce": ("lattice", "xi", "action", "cone", "arc"),
    "check-approx": ("lattice", "xi", "action", "cone", "arc"),
    "iterate": ("lattice", "action", "arc", "stratification"),
    "novikov-extend": ("lattice", "novikov"),
}


@dataclass
class ProblemFile:
    rank: int = None
    d: int = 2
    xi: WeightVectorXi = None
    variables: tuple = ()
    action: TorusAction = None
    cone: RationalCone = None
    arc: tuple = None
    arc_precision: object = None
    ideal: tuple = None
    strata: StrataSpec = None
    stratification: Stratification = None
    novikov: dict = None
    present: frozenset = field(default=frozenset(), compare=False)

    def require(self, command):
        missing = [s for s in REQUIRED.get(command, ()) if s not in self.present]
        if missing:
            raise ConsistencyError(f"{command} needs section(s): " + ", ".join(f"[{m}]" for m in missing))

    def strata_spec(self):
        if self.strata is not None:
            return self.strata
        return attractor_locus(self.action, self.cone)

    def to_text(self):
        out = []
        if "lattice" in self.present:
            out += ["[lattice]", f"rank = {self.rank}", f"d = {self.d}", ""]
        if self.xi is not None:
            out += ["[xi]", "xi = " + format_scalar_tuple(self.xi.coords), ""]
        if self.action is not None:
            out += ["[action]", "variables = " + ", ".join(self.variables),
                    "weights = " + " ".join(format_vector(w) for w in self.action.weights), ""]
        if self.cone is not None:
            out += ["[cone]", "cone = " + format_generators(self.cone), ""]
        if self.arc is not None:
            out.append("[arc]")
            if self.arc_precision is not None:
                out.append(f"precision = {self.arc_precision}")
            for name, z in zip(self.variables, self.arc):
                out.append(f"{name} = {z}")
            out.append("")
        if self.ideal is not None:
            out.append("[ideal]")
            for i, f in enumerate(self.ideal):
                out.append(f"f{i + 1} = {f.format(self.variables)}")
            out.append("")
        if self.strata is not None:
            out += ["[strata]", "cone = " + format_generators(self.strata.cone),
                    "destabilized = " + ", ".join(str(j + 1) for j in sorted(self.strata.destabilized)),
                    ""]
        if self.stratification is not None:
            out.append("[stratification]")
            for e in self.stratification.entries:
                idx = ", ".join(str(j + 1) for j in sorted(e.strata.destabilized))
                out.append(f"stratum = {format_rational(e.label)} ; {format_generators(e.strata.cone)}"
                           f" ; {format_scalar_tuple(e.xi.coords)} ; {{{idx}}}")
            out.append("")
        if self.novikov is not None:
            out.append("[novikov]")
            out.append("base = " + ", ".join(str(g) for g in self.novikov["base"]))
            out.append(f"pi_valuation = {self.novikov['pi_valuation']}")
            out.append(f"m_value = {self.novikov['m_value']}")
            out.append("pairing = " + ", ".join(str(g) for g in self.novikov["pairing"]))
            out.append("")
        return "\n".join(out)


def format_scalar_tuple(values):
    return "(" + ", ".join(str(v) for v in values) + ")"


def format_generators(cone):
    return " ".join(format_vector(g) for g in cone.generators) if cone.generators else "{0}"


# ---------------------------------------------------------------------------

def _sections(text):
    """``{section: [(key, value, lineno), ...]}`` preserving order."""
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError("malformed section header", lineno)
            name = line[1:-1].strip()
            if name not in SECTIONS:
                raise ParseError(f"unknown section [{name}]", lineno)
            if name in sections:
                raise ParseError(f"duplicate section [{name}]", lineno)
            sections[name] = []
            current = name
            continue
        if current is None:
            raise ParseError("content outside a section", lineno)
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno)
        key, value = line.split("=", 1)
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise ParseError("empty key or value", lineno)
        sections[current].append((key, value, lineno))
    return sections


def _one(entries, key, section, required=True):
    found = [(v, n) for k, v, n in entries if k == key]
    if len(found) > 1:
        raise ParseError(f"duplicate key '{key}' in [{section}]", found[1][1])
    if not found:
        if required:
            raise ConsistencyError(f"[{section}] is missing '{key}'")
        return None, None
    return found[0]


def _at(lineno, fn, *args):
    try:
        return fn(*args)
    except ParseError as exc:
        raise ParseError(exc.message, lineno) from None
    except TorusDegenError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), lineno) from None


def _parse_cone(text, rank):
    text = text.strip()
    if text == "{0}":
        return RationalCone(rank, ())
    gens = [parse_int_tuple(g) for g in parse_tuple_groups(text)]
    for g in gens:
        if len(g) != rank:
            raise ConsistencyError(f"cone generator {g} is not of rank {rank}")
    return RationalCone(rank, gens)


def _parse_xi(text, rank, d):
    coords = parse_scalar_tuple(text, d)
    if len(coords) != rank:
        raise ConsistencyError(f"xi has {len(coords)} coordinates, lattice rank is {rank}")
    return WeightVectorXi(coords, d)


def parse_series(text, d=2):
    t = NovikovSeries.monomial(1, 1, None, d)
    sqrt = _sqrt_factory(d)

    def big_o(arg):
        if isinstance(arg, NovikovSeries) and len(arg.terms) == 1 and arg.is_exact:
            return NovikovSeries.zero(arg.terms[0][0], d)
        if isinstance(arg, (Fraction, QuadExtScalar)) and arg == 1:
            return NovikovSeries.zero(0, d)
        raise ParseError("O() expects a power of t")

    try:
        value = evaluate(text, names={"t": t}, functions={"sqrt": sqrt, "O": big_o})
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad series {text!r}: {exc}") from None
    if isinstance(value, Fraction):
        value = NovikovSeries.constant(value, None, d)
    if isinstance(value, QuadExtScalar):
        if not value.is_rational:
            raise ParseError("series coefficients must be rational")
        value = NovikovSeries.constant(value.a, None, d)
    if not isinstance(value, NovikovSeries):
        raise ParseError(f"not a series: {text!r}")
    return value


def parse_problem(text, command=None):
    """Parse and validate a problem file; ``command`` adds its section requirements."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    secs = _sections(text)
    p = ProblemFile(present=frozenset(secs))
    if command is not None:
        p.require(command)

    if "lattice" in secs:
        v, n = _one(secs["lattice"], "rank", "lattice")
        p.rank = _at(n, _positive_int, v)
        v, n = _one(secs["lattice"], "d", "lattice", required=False)
        if v is not None:
            p.d = _at(n, _positive_int, v)
            if not is_squarefree(p.d):
                raise ParseError(f"d = {p.d} is not square-free > 1", n)
        else:
            p.d = detect_d(text) or 2
    elif any(s in secs for s in ("xi", "action", "cone", "arc", "strata", "stratification")):
        raise ConsistencyError("[lattice] is required to fix the rank")

    if "xi" in secs:
        v, n = _one(secs["xi"], "xi", "xi")
        p.xi = _at(n, _parse_xi, v, p.rank, p.d)

    if "action" in secs:
        v, n = _one(secs["action"], "variables", "action")
        names = tuple(s.strip() for s in v.split(","))
        if not all(s.isidentifier() for s in names) or len(set(names)) != len(names):
            raise ParseError("bad variable list", n)
        if "t" in names or "sqrt" in names:
            raise ParseError("'t' and 'sqrt' are reserved", n)
        p.variables = names
        v, n = _one(secs["action"], "weights", "action")
        weights = _at(n, lambda s: [parse_int_tuple(g) for g in parse_tuple_groups(s)], v)
        if len(weights) != len(names):
            raise ConsistencyError(f"{len(weights)} weights for {len(names)} variables")
        for w in weights:
            if len(w) != p.rank:
                raise ConsistencyError(f"weight {w} is not of rank {p.rank}")
        p.action = TorusAction(p.rank, weights)

    if "cone" in secs:
        v, n = _one(secs["cone"], "cone", "cone")
        p.cone = _at(n, _parse_cone, v, p.rank)

    if "arc" in secs:
        if p.action is None:
            raise ConsistencyError("[arc] needs [action]")
        entries = secs["arc"]
        v, n = _one(entries, "precision", "arc", required=False)
        prec = _at(n, parse_scalar, v, p.d) if v is not None else None
        if prec is not None and prec <= 0:
            raise ParseError("precision must be positive", n)
        p.arc_precision = prec
        series = {}
        for k, val, ln in entries:
            if k == "precision":
                continue
            if k not in p.variables:
                raise ConsistencyError(f"line {ln}: arc series for unknown variable '{k}'")
            if k in series:
                raise ParseError(f"duplicate series for '{k}'", ln)
            z = _at(ln, parse_series, val, p.d)
            if prec is not None:
                z = z.truncate(prec)
            series[k] = z
        if len(series) != len(p.variables):
            raise ConsistencyError(f"arc has {len(series)} series against {len(p.variables)} weights")
        p.arc = tuple(series[name] for name in p.variables)

    if "ideal" in secs:
        if p.action is None:
            raise ConsistencyError("[ideal] needs [action]")
        gens = []
        for k, val, ln in secs["ideal"]:
            gens.append(_at(ln, parse_polynomial, val, p.variables))
        if not gens:
            raise ConsistencyError("[ideal] is empty")
        p.ideal = tuple(gens)

    if "strata" in secs:
        if p.action is None:
            raise ConsistencyError("[strata] needs [action]")
        v, n = _one(secs["strata"], "cone", "strata", required=False)
        cone = _at(n, _parse_cone, v, p.rank) if v is not None else p.cone
        if cone is None:
            raise ConsistencyError("[strata] needs a cone")
        v, n = _one(secs["strata"], "destabilized", "strata", required=False)
        computed = attractor_locus(p.action, cone)
        if v is not None:
            idx = _at(n, _parse_indices, v, len(p.variables))
            if idx != computed.destabilized:
                raise ConsistencyError(
                    f"line {n}: destabilized set does not match the attractor of the cone")
        p.strata = computed

    if "stratification" in secs:
        if p.action is None:
            raise ConsistencyError("[stratification] needs [action]")
        entries = []
        for k, val, ln in secs["stratification"]:
            if k != "stratum":
                raise ParseError("expected 'stratum = label ; cone ; xi'", ln)
            entries.append(_at(ln, _parse_stratum, val, p))
        try:
            p.stratification = Stratification(tuple(entries))
        except TorusDegenError as exc:
            raise ConsistencyError(str(exc)) from None

    if "novikov" in secs:
        entries = secs["novikov"]
        v, n = _one(entries, "base", "novikov", required=False)
        base = (_at(n, lambda s: tuple(parse_scalar(x, p.d) for x in split_top_level(s)), v)
                if v is not None else (QuadExtScalar(1, 0, p.d),))
        v, n = _one(entries, "pi_valuation", "novikov")
        pi = _at(n, parse_scalar, v, p.d)
        v, n = _one(entries, "m_value", "novikov")
        m = _at(n, parse_scalar, v, p.d)
        v, n = _one(entries, "pairing", "novikov", required=False)
        if v is not None:
            pairing = _at(n, lambda s: tuple(parse_scalar(x, p.d) for x in split_top_level(s)), v)
        elif p.xi is not None:
            pairing = tuple(p.xi.coords)
        else:
            raise ConsistencyError("[novikov] needs 'pairing' or an [xi] section")
        p.novikov = {"base": base, "pi_valuation": pi, "m_value": m, "pairing": pairing}
    return p


def _positive_int(text):
    value = evaluate(text)
    if not isinstance(value, Fraction) or value.denominator != 1 or value < 1:
        raise ParseError(f"expected a positive integer, got {text!r}")
    return int(value)


def _parse_indices(text, n):
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    if not text.strip():
        return frozenset()
    idx = parse_int_tuple(text)
    for i in idx:
        if not 1 <= i <= n:
            raise ParseError(f"index {i} out of range 1..{n}")
    return frozenset(i - 1 for i in idx)


def _parse_stratum(text, p):
    parts = [s.strip() for s in text.split(";")]
    if len(parts) not in (3, 4):
        raise ParseError("expected 'label ; cone ; xi' with an optional '; {indices}'")
    label = evaluate(parts[0])
    if not isinstance(label, Fraction):
        raise ParseError("stratum label must be rational")
    cone = _parse_cone(parts[1], p.rank)
    xi = _parse_xi(parts[2], p.rank, p.d)
    spec = attractor_locus(p.action, cone)
    if len(parts) == 4:
        idx = _parse_indices(parts[3], len(p.variables))
        if idx != spec.destabilized:
            raise ConsistencyError("destabilized set does not match the attractor of the cone")
    return StratumEntry(label, spec, xi)


def polynomials_text(polys, names):
    return "{ " + ", ".join(f.format(names) for f in polys) + " }" if polys else "{ }"


__all__ = ["ProblemFile", "parse_problem", "parse_series", "polynomials_text", "Polynomial"]
