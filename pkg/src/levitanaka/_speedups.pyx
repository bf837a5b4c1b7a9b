# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled row-combination kernel for the sparse integer eliminator.

Bit-for-bit identical to levitanaka._elim_py.combine: the same merge,
the same gcd normalization.  Values stay Python ints (arbitrary
precision is part of the contract); the win is the C-level merge loop.
"""

from math import gcd


def combine(list pcols, list pvals, list rcols, list rvals):
    cdef Py_ssize_t np = len(pcols)
    cdef Py_ssize_t nr = len(rcols)
    cdef Py_ssize_t i = 1
    cdef Py_ssize_t j = 1
    cdef long long cp, cr
    a = pvals[0]
    b = rvals[0]
    cdef list cols = []
    cdef list vals = []
    g = 0
    while i < np and j < nr:
        cp = <long long> pcols[i]
        cr = <long long> rcols[j]
        if cr < cp:
            v = a * rvals[j]
            cols.append(rcols[j])
            vals.append(v)
            g = gcd(g, v)
            j += 1
        elif cp < cr:
            v = -b * pvals[i]
            cols.append(pcols[i])
            vals.append(v)
            g = gcd(g, v)
            i += 1
        else:
            v = a * rvals[j] - b * pvals[i]
            if v:
                cols.append(pcols[i])
                vals.append(v)
                g = gcd(g, v)
            i += 1
            j += 1
    while j < nr:
        v = a * rvals[j]
        cols.append(rcols[j])
        vals.append(v)
        g = gcd(g, v)
        j += 1
    while i < np:
        v = -b * pvals[i]
        cols.append(pcols[i])
        vals.append(v)
        g = gcd(g, v)
        i += 1
    if g > 1:
        vals = [v // g for v in vals]
    return cols, vals
