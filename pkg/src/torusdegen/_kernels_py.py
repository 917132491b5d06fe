"""Pure-Python lattice kernels (reference implementation and fallback)."""

from itertools import product


def cone_points(ineqs, bounds):
    """Nonzero integer points of the box ``|x_k| <= bounds[k]`` with ``<m, x> >= 0``
    for every row ``m`` of ``ineqs``."""
    out = []
    ranges = [range(-b, b + 1) for b in bounds]
    for x in product(*ranges):
        if not any(x):
            continue
        for m in ineqs:
            s = 0
            for mi, xi in zip(m, x):
                s += mi * xi
            if s < 0:
                break
        else:
            out.append(x)
    return out


def minimal_elements(points, ineqs, grading):
    """Irreducible elements of the monoid sampled by ``points``.

    ``grading`` must be strictly positive on every nonzero point.  A point is
    reducible when subtracting an irreducible point of smaller degree leaves a
    point of the cone.
    """
    def deg(p):
        return sum(g * x for g, x in zip(grading, p))

    ordered = sorted(points, key=lambda p: (deg(p), p))
    irreducible = []
    degrees = []
    for p in ordered:
        dp = deg(p)
        reducible = False
        for q, dq in zip(irreducible, degrees):
            if dq >= dp:
                break
            diff = [a - b for a, b in zip(p, q)]
            for m in ineqs:
                s = 0
                for mi, xi in zip(m, diff):
                    s += mi * xi
                if s < 0:
                    break
            else:
                reducible = True
                break
        if not reducible:
            irreducible.append(p)
            degrees.append(dp)
    return irreducible
