# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hit-counting kernel for Monte-Carlo volume estimation.

Must stay decision-for-decision identical to ``_mc_kernel_py`` so that the
two backends produce the same hit counts for the same sample matrix.
"""

from libc.math cimport fabs

import numpy as np

FAMILY_GENUINE = 0
FAMILY_BISEP_MINUS_FBI = 1
FAMILY_FBI = 2
FAMILY_MERMIN = 3

BACKEND = "cython"


def count_hits(double[:, ::1] p, int family, double nu):
    """Count rows of the (m, d) probability matrix falling in the region."""
    cdef Py_ssize_t m = p.shape[0]
    cdef Py_ssize_t d = p.shape[1]
    cdef Py_ssize_t r, j
    cdef double maxp, maxdiff, minsum, diff, s, v
    cdef long long hits = 0

    for r in range(m):
        if family == 3:
            if p[r, 0] - p[r, d - 1] > nu:
                hits += 1
            continue
        maxp = p[r, 0]
        maxdiff = 0.0
        minsum = 2.0
        for j in range(d):
            v = p[r, j]
            if v > maxp:
                maxp = v
            diff = fabs(v - p[r, d - 1 - j])
            if diff > maxdiff:
                maxdiff = diff
            s = v + p[r, d - 1 - j]
            if s < minsum:
                minsum = s
        if family == 0:
            if maxp > 0.5:
                hits += 1
        elif family == 2:
            if maxdiff <= minsum:
                hits += 1
        else:
            if maxp <= 0.5 and maxdiff > minsum:
                hits += 1
    return int(hits)
