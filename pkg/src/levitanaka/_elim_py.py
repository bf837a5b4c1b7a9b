"""Pure-Python row-combination kernel for the sparse integer eliminator.

The compiled extension ``levitanaka._speedups`` implements the same
function with identical semantics; results must be bit-for-bit equal.
"""

from __future__ import annotations

from math import gcd


def combine(pcols, pvals, rcols, rvals):
    """Return a*row_r - b*row_p with the shared leading column cancelled.

    Both rows must be sparse (strictly increasing column lists, nonzero
    integer values) and share the same leading column; a = pvals[0] is
    the pivot value, b = rvals[0] the value being eliminated.  The result
    is divided by the gcd of its entries, so entries stay small.
    """
    a = pvals[0]
    b = rvals[0]
    np_ = len(pcols)
    nr = len(rcols)
    cols = []
    vals = []
    i = 1  # leading entries cancel by construction
    j = 1
    g = 0
    while i < np_ and j < nr:
        cp = pcols[i]
        cr = rcols[j]
        if cr < cp:
            v = a * rvals[j]
            cols.append(cr)
            vals.append(v)
            g = gcd(g, v)
            j += 1
        elif cp < cr:
            v = -b * pvals[i]
            cols.append(cp)
            vals.append(v)
            g = gcd(g, v)
            i += 1
        else:
            v = a * rvals[j] - b * pvals[i]
            if v:
                cols.append(cp)
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
    while i < np_:
        v = -b * pvals[i]
        cols.append(pcols[i])
        vals.append(v)
        g = gcd(g, v)
        i += 1
    if g > 1:
        vals = [v // g for v in vals]
    return cols, vals
