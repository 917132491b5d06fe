# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled lattice kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef inline bint _in_cone(long *x, long *ineqs, int nineq, int r) nogil:
    cdef int i, k
    cdef long s
    for i in range(nineq):
        s = 0
        for k in range(r):
            s += ineqs[i * r + k] * x[k]
        if s < 0:
            return 0
    return 1


def cone_points(ineqs, bounds):
    cdef int r = len(bounds)
    cdef int nineq = len(ineqs)
    cdef long *A = <long *> malloc(sizeof(long) * max(1, nineq * r))
    cdef long *x = <long *> malloc(sizeof(long) * max(1, r))
    cdef long *b = <long *> malloc(sizeof(long) * max(1, r))
    cdef int i, k
    cdef bint nonzero
    out = []
    try:
        for i in range(nineq):
            for k in range(r):
                A[i * r + k] = ineqs[i][k]
        for k in range(r):
            b[k] = bounds[k]
            x[k] = -b[k]
        if r == 0:
            return out
        while True:
            nonzero = 0
            for k in range(r):
                if x[k] != 0:
                    nonzero = 1
                    break
            if nonzero and _in_cone(x, A, nineq, r):
                out.append(tuple([x[k] for k in range(r)]))
            # odometer increment, last coordinate fastest
            k = r - 1
            while k >= 0:
                x[k] += 1
                if x[k] <= b[k]:
                    break
                x[k] = -b[k]
                k -= 1
            if k < 0:
                break
        return out
    finally:
        free(A)
        free(x)
        free(b)


def minimal_elements(points, ineqs, grading):
    cdef int r = len(grading)
    cdef int n = len(points)
    cdef int nineq = len(ineqs)
    if n == 0:
        return []
    ordered = sorted(points, key=lambda p: (sum(g * v for g, v in zip(grading, p)), p))
    cdef long *P = <long *> malloc(sizeof(long) * n * r)
    cdef long *D = <long *> malloc(sizeof(long) * n)
    cdef long *A = <long *> malloc(sizeof(long) * max(1, nineq * r))
    cdef long *diff = <long *> malloc(sizeof(long) * r)
    cdef int *irr = <int *> malloc(sizeof(int) * n)
    cdef int nirr = 0
    cdef int i, j, k, q
    cdef bint reducible
    try:
        for i in range(nineq):
            for k in range(r):
                A[i * r + k] = ineqs[i][k]
        for i in range(n):
            p = ordered[i]
            D[i] = 0
            for k in range(r):
                P[i * r + k] = p[k]
                D[i] += grading[k] * p[k]
        for i in range(n):
            reducible = 0
            for j in range(nirr):
                q = irr[j]
                if D[q] >= D[i]:
                    break
                for k in range(r):
                    diff[k] = P[i * r + k] - P[q * r + k]
                if _in_cone(diff, A, nineq, r):
                    reducible = 1
                    break
            if not reducible:
                irr[nirr] = i
                nirr += 1
        return [ordered[irr[j]] for j in range(nirr)]
    finally:
        free(P)
        free(D)
        free(A)
        free(diff)
        free(irr)
