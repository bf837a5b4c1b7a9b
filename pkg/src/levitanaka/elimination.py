"""Sparse exact row reduction over the integers: rank, kernel, solve.

This is the hot kernel of the package; every linear question (matrix
rank, null spaces of derivation systems, characteristic-element and
Levi-correction solves) reduces to it.

Rows are sparse pairs (cols, vals): strictly increasing column indices
with nonzero arbitrary-precision integer values.  Reduction is
fraction-free: a combined row is ``p*row - r*pivot_row`` followed by
division by the gcd of its entries, which keeps growth under control
while staying exact.  Columns are processed left to right; within a
column the pivot is the candidate whose leading value has the smallest
bit length, ties broken by arrival order.  Everything is deterministic.

The inner row combination is provided by the compiled extension
``levitanaka._speedups`` when built; set LEVITANAKA_PURE=1 to force the
pure-Python twin (results are identical either way).
"""

from __future__ import annotations

import heapq
import os
from fractions import Fraction
from math import gcd

from . import _elim_py

if os.environ.get("LEVITANAKA_PURE"):
    combine = _elim_py.combine
    BACKEND = "pure"
else:
    try:
        from . import _speedups

        combine = _speedups.combine
        BACKEND = "compiled"
    except ImportError:
        combine = _elim_py.combine
        BACKEND = "pure"


def _normalize_row(cols, vals):
    """Divide a fresh row by the gcd of its entries."""
    g = 0
    for v in vals:
        g = gcd(g, v)
    if g > 1:
        vals = [v // g for v in vals]
    return cols, vals


def row_echelon(rows, ncols, max_pivot_col=None):
    """Reduce sparse integer rows; return (pivot_cols, pivot_rows).

    ``rows`` is an iterable of (cols, vals) sparse rows.  Columns at or
    beyond ``max_pivot_col`` are never chosen as pivots (used for the
    right-hand side of augmented systems); rows whose leading column
    lands there are returned in the second slot of the result triple.

    Returns (pivots, pivot_rows, residual_rows): ``pivots`` is the sorted
    list of pivot columns, ``pivot_rows[i]`` the echelon row leading at
    ``pivots[i]``, and ``residual_rows`` the nonzero rows that lead at a
    non-pivotable column.
    """
    if max_pivot_col is None:
        max_pivot_col = ncols
    buckets = {}
    heap = []
    arrival = 0

    def push(cols, vals):
        nonlocal arrival
        lead = cols[0]
        entry = (arrival, cols, vals)
        arrival += 1
        b = buckets.get(lead)
        if b is None:
            buckets[lead] = [entry]
            heapq.heappush(heap, lead)
        else:
            b.append(entry)

    for cols, vals in rows:
        if cols:
            push(*_normalize_row(list(cols), list(vals)))

    pivots = []
    pivot_rows = []
    residual = []
    while heap:
        c = heapq.heappop(heap)
        bucket = buckets.pop(c, None)
        if not bucket:
            continue
        if c >= max_pivot_col:
            residual.extend(bucket)
            continue
        best = 0
        best_key = (abs(bucket[0][2][0]).bit_length(), bucket[0][0])
        for idx in range(1, len(bucket)):
            key = (abs(bucket[idx][2][0]).bit_length(), bucket[idx][0])
            if key < best_key:
                best_key = key
                best = idx
        _, pcols, pvals = bucket.pop(best)
        pivots.append(c)
        pivot_rows.append((pcols, pvals))
        for _, rcols, rvals in bucket:
            ncols_, nvals_ = combine(pcols, pvals, rcols, rvals)
            if ncols_:
                push(ncols_, nvals_)
    residual.sort()
    return pivots, pivot_rows, [(cols, vals) for _, cols, vals in residual]


def rank(rows, ncols) -> int:
    pivots, _, _ = row_echelon(rows, ncols)
    return len(pivots)


def _back_substitute(pivots, pivot_rows, assignment):
    """Fill pivot coordinates of ``assignment`` (dict col -> Fraction)."""
    for i in range(len(pivots) - 1, -1, -1):
        cols, vals = pivot_rows[i]
        s = Fraction(0)
        for c, v in zip(cols[1:], vals[1:]):
            x = assignment.get(c)
            if x:
                s += v * x
        assignment[pivots[i]] = -s / vals[0]


def kernel_basis(rows, ncols):
    """Primitive integer basis of the right null space.

    One vector per free column, in increasing column order; each vector
    is scaled to coprime integers with positive entry at its free column.
    """
    pivots, pivot_rows, _ = row_echelon(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        assignment = {f: Fraction(1)}
        _back_substitute(pivots, pivot_rows, assignment)
        vec = [assignment.get(c, Fraction(0)) for c in range(ncols)]
        lcm = 1
        for x in vec:
            d = x.denominator
            lcm = lcm // gcd(lcm, d) * d
        ints = [int(x * lcm) for x in vec]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        basis.append(ints)
    return basis


def solve(rows, ncols_total, bcol):
    """Exact solution of an augmented sparse system, or None.

    ``rows`` span [A | b] with the right-hand side in column ``bcol``;
    all other columns are unknowns.  Free unknowns are set to zero.
    Returns a list of Fractions of length ``bcol`` or None when the
    system is inconsistent.
    """
    pivots, pivot_rows, residual = row_echelon(rows, ncols_total, max_pivot_col=bcol)
    if residual:
        return None
    assignment = {bcol: Fraction(-1)}
    _back_substitute(pivots, pivot_rows, assignment)
    return [assignment.get(c, Fraction(0)) for c in range(bcol)]
