"""Command line front end: ``torusdegen <command> [problem files] [flags]``."""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ConsistencyError, ParseError, TorusDegenError
from .groebner import (
    WeightOrder,
    buchberger,
    groebner_cone,
    hilbert_function,
    initial_ideal,
    same_ideal,
)
from .novikov import GammaMonoid, RingDesc, extend_ring, graded_generators
from .polyhedra import cone_contains, format_cone, format_vector
from .problem import parse_problem, polynomials_text
from .reduction import (
    ArcFamily,
    check_rational_approx,
    classify_arc,
    iterate_reduction,
    semistable_reduce,
)
from .scalars import format_rational
from .testconfig import (
    canonical_degeneration,
    family_fiber,
    orbit_closure_family,
    rational_restriction,
)
from .textio import parse_scalar, parse_scalar_tuple

COMMANDS = ("in-ideal", "gcone", "family", "restrict", "reduce", "iterate",
            "check-approx", "novikov-extend")


@dataclass
class Report:
    lines: list = field(default_factory=list)
    status: int = 0

    def add(self, key, value):
        self.lines.append((key, value))

    def text(self):
        out = [f"{k} = {v}" for k, v in self.lines]
        out.append(f"status = {self.status}")
        return "\n".join(out) + "\n"


def emit_report(report, sink):
    sink.write(report.text())


# formatting -------------------------------------------------------------------

def fmt_scalar(x):
    return format_rational(x) if not hasattr(x, "sign") else str(x)


def fmt_point(p):
    return "(" + ", ".join(fmt_scalar(x) for x in p) + ")"


def fmt_indices(s):
    return "{" + ", ".join(str(j + 1) for j in sorted(s)) + "}"


def fmt_list(xs):
    return "[" + ", ".join(str(x) for x in xs) + "]"


def fmt_monoid(m):
    return "{" + ", ".join(str(g) for g in m.generators) + "}"


# commands ---------------------------------------------------------------------

def _order(p):
    return WeightOrder(p.xi, p.action)


def cmd_in_ideal(p, args, rep):
    order = _order(p)
    rep.add("xi", fmt_point(p.xi.coords))
    rep.add("irrational", str(order.irrational).lower())
    rep.add("groebner_basis", polynomials_text(buchberger(p.ideal, order), p.variables))
    rep.add("initial_ideal", polynomials_text(initial_ideal(p.ideal, order), p.variables))


def cmd_gcone(p, args, rep):
    gc = groebner_cone(p.ideal, _order(p))
    rep.add("groebner_cone", format_cone(gc.cone))
    rep.add("inequalities", " ".join(format_vector(v) for v in gc.inequalities) or "none")
    rep.add("contains_xi", str(cone_contains(gc.cone, p.xi)).lower())


def _family(p):
    if p.cone is not None:
        return orbit_closure_family(p.ideal, p.action, p.cone, p.variables, p.xi)
    return canonical_degeneration(p.ideal, p.action, p.xi, p.variables)


def cmd_family(p, args, rep):
    cfg = _family(p)
    names = cfg.all_names()
    rep.add("tau", format_cone(cfg.base_cone))
    rep.add("irrational", str(bool(cfg.irrational)).lower())
    for u, h in zip(cfg.u_names, cfg.base_hilbert):
        rep.add(u, format_vector(h))
    rep.add("family", polynomials_text(cfg.family_gens, names))
    ident = family_fiber(cfg, "identity")
    deep = family_fiber(cfg, "deep_torus_fixed")
    rep.add("identity_fiber", polynomials_text(ident, p.variables))
    rep.add("deep_fiber", polynomials_text(deep, p.variables))
    D = args.degree_bound
    n = len(p.variables)
    h1 = hilbert_function(ident, n, D)
    h2 = hilbert_function(deep, n, D)
    rep.add("hilbert_identity", fmt_list(h1))
    rep.add("hilbert_deep", fmt_list(h2))
    if all(f.is_homogeneous() for f in ident):
        rep.add("flatness_witness", str(h1 == h2).lower())
    else:
        # degree slices are only comparable for homogeneous ideals
        rep.add("flatness_witness", "n/a")
    rep.add("deep_equals_initial", str(same_ideal(deep, initial_ideal(p.ideal, _order(p)))).lower())


def _xi2(args, integral, d=2):
    if args.xi2 is None:
        raise ConsistencyError("--xi2 is required")
    try:
        coords = parse_scalar_tuple(args.xi2, d)
    except ParseError as exc:
        raise ParseError(f"--xi2: {exc.message}") from None
    if not all(c.is_rational for c in coords):
        raise ParseError("--xi2 must be rational")
    vals = [c.a for c in coords]
    if integral:
        if any(v.denominator != 1 for v in vals):
            raise ParseError("--xi2 must be a lattice vector")
        return tuple(int(v) for v in vals)
    return tuple(vals)


def cmd_restrict(p, args, rep):
    cfg = _family(p)
    xi2 = _xi2(args, integral=True, d=p.d)
    one = rational_restriction(cfg, xi2)
    names = tuple(p.variables) + ("t",)
    rep.add("xi2", format_vector(xi2))
    rep.add("weight_profile", format_vector(one.weight_profile))
    rep.add("family", polynomials_text(one.family_gens, names))
    rep.add("special_fiber", polynomials_text(one.special_fiber(), p.variables))


def _arc(p, args):
    coords = p.arc
    if args.precision is not None:
        q = parse_scalar(args.precision, p.d)
        if q <= 0:
            raise ParseError("--precision must be positive")
        coords = tuple(z.truncate(q) for z in coords)
    return ArcFamily(coords, p.action, p.ideal)


def _step_lines(rep, step, names, prefix=""):
    rep.add(prefix + "critical_scale", str(step.critical_scale))
    rep.add(prefix + "exit_set", fmt_indices(step.exit_set))
    rep.add(prefix + "walls", fmt_list(step.wall_scales))
    rep.add(prefix + "limit", fmt_point(step.limit_point))
    rep.add(prefix + "deeper_limit", fmt_point(step.deeper_limit))
    rep.add(prefix + "base_monoid", fmt_monoid(step.base_ring.monoid))
    for name, z in zip(names, step.new_family):
        rep.add(f"{prefix}new.{name}", str(z))


def cmd_reduce(p, args, rep):
    arc = _arc(p, args)
    strata = p.strata_spec()
    rep.add("destabilized", fmt_indices(strata.destabilized))
    rep.add("classification", str(classify_arc(arc, strata)))
    step = semistable_reduce(arc, strata, p.xi)
    _step_lines(rep, step, p.variables)


def cmd_check_approx(p, args, rep):
    arc = _arc(p, args)
    strata = p.strata_spec()
    xi2 = _xi2(args, integral=False, d=p.d)
    step = semistable_reduce(arc, strata, p.xi)
    rep.add("critical_scale", str(step.critical_scale))
    rep.add("exit_set", fmt_indices(step.exit_set))
    rep.add("xi2", fmt_point(xi2))
    rep.add("result", str(check_rational_approx(step, arc, strata, xi2)))


def cmd_iterate(p, args, rep):
    arc = _arc(p, args)
    steps = iterate_reduction(arc, p.stratification)
    rep.add("steps", str(len(steps)))
    for i, step in enumerate(steps, 1):
        rep.add(f"step{i}.label", format_rational(step.label))
        _step_lines(rep, step, p.variables, f"step{i}.")
    final = steps[-1].limit_point if steps else tuple(arc.constant_terms())
    rep.add("final_limit", fmt_point(final))


def cmd_novikov_extend(p, args, rep):
    nv = p.novikov
    ring = RingDesc(GammaMonoid(p.d, nv["base"]), (), nv["pairing"])
    new = extend_ring(ring, nv["pi_valuation"], nv["m_value"])
    rep.add("b", str(nv["pi_valuation"] / nv["m_value"]))
    rep.add("base_monoid", fmt_monoid(ring.monoid))
    rep.add("extended_monoid", fmt_monoid(new.monoid))
    rep.add("graded_generators", fmt_list(graded_generators(new)))


DISPATCH = {
    "in-ideal": cmd_in_ideal,
    "gcone": cmd_gcone,
    "family": cmd_family,
    "restrict": cmd_restrict,
    "reduce": cmd_reduce,
    "iterate": cmd_iterate,
    "check-approx": cmd_check_approx,
    "novikov-extend": cmd_novikov_extend,
}


def run_command(cmd, problem, args):
    rep = Report()
    try:
        DISPATCH[cmd](problem, args, rep)
    except TorusDegenError as exc:
        rep.add("error", f"{type(exc).__name__}: {exc}")
        rep.status = exc.exit_code
    return rep


def run_text(cmd, text, args):
    try:
        problem = parse_problem(text, cmd)
    except TorusDegenError as exc:
        rep = Report()
        rep.add("error", f"{type(exc).__name__}: {exc}")
        rep.status = exc.exit_code
        return rep
    return run_command(cmd, problem, args)


def _run_path(cmd, path, args):
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        rep = Report()
        rep.add("error", f"IoError: {exc}")
        rep.status = 2
        return rep
    return run_text(cmd, data, args)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", metavar="Q", help="truncate arc series at t^Q")
    common.add_argument("--degree-bound", metavar="D", type=int, default=6,
                        help="degree bound for Hilbert function witnesses (default 6)")
    common.add_argument("--jobs", metavar="N", type=int, default=1,
                        help="process several problem files concurrently")
    common.add_argument("--xi2", metavar="(a,b)", help="rational direction for restrict/check-approx")
    parser = argparse.ArgumentParser(prog="torusdegen", parents=[common],
                                     description="Degenerations along irrational torus directions.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("paths", nargs="*", default=["-"], help="problem files ('-' for stdin)")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.degree_bound < 0 or args.degree_bound > 8:
        parser.error("--degree-bound must be between 0 and 8")
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    paths = args.paths or ["-"]
    if len(paths) > 1 and args.jobs > 1 and "-" not in paths:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_path, [args.command] * len(paths), paths,
                                    [args] * len(paths)))
    else:
        reports = [_run_path(args.command, path, args) for path in paths]
    status = 0
    for path, rep in zip(paths, reports):
        if len(paths) > 1:
            sys.stdout.write(f"file = {path}\n")
        emit_report(rep, sys.stdout)
        status = max(status, rep.status)
    return status


if __name__ == "__main__":
    sys.exit(main())
