"""Dense exact matrices over the rationals or Gaussian rationals.

Rational matrices route rank/kernel/solve through the sparse integer
eliminator (rows are scaled to integers first).  Gaussian-rational
matrices are reduced directly as a field with first-nonzero pivoting;
they only ever appear at hermitian-form size, so a dense pass is fine.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import elimination
from .scalars import GaussRational


def _as_scalar(x):
    if isinstance(x, GaussRational):
        return x
    return Fraction(x)


class ExactMatrix:
    """Immutable-by-convention dense matrix with exact entries."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries):
        if len(entries) != nrows * ncols:
            raise ValueError("entry count does not match shape")
        self.nrows = nrows
        self.ncols = ncols
        self.entries = [_as_scalar(x) for x in entries]

    # -- construction ------------------------------------------------

    @classmethod
    def from_rows(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(nrows, ncols, flat)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols, [Fraction(0)] * (nrows * ncols))

    @classmethod
    def column(cls, vec):
        return cls(len(vec), 1, list(vec))

    # -- access ------------------------------------------------------

    def entry(self, i, j):
        return self.entries[i * self.ncols + j]

    def row(self, i):
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def col(self, j):
        return [self.entries[i * self.ncols + j] for i in range(self.nrows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def is_gaussian(self) -> bool:
        return any(isinstance(x, GaussRational) for x in self.entries)

    # -- arithmetic ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(str(x) for x in self.entries)))

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return ExactMatrix(self.nrows, self.ncols,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return ExactMatrix(self.nrows, self.ncols,
                           [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return ExactMatrix(self.nrows, self.ncols, [-a for a in self.entries])

    def scale(self, c):
        c = _as_scalar(c)
        return ExactMatrix(self.nrows, self.ncols, [c * a for a in self.entries])

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        n, m, k = self.nrows, other.ncols, self.ncols
        out = []
        for i in range(n):
            ri = self.row(i)
            for j in range(m):
                s = None
                for t in range(k):
                    a = ri[t]
                    if not a:
                        continue
                    term = a * other.entries[t * m + j]
                    s = term if s is None else s + term
                out.append(s if s is not None else Fraction(0))
        return ExactMatrix(n, m, out)

    def apply(self, vec):
        """Matrix times a plain vector (list of scalars)."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.nrows):
            s = None
            ri = self.row(i)
            for a, x in zip(ri, vec):
                if not a or not x:
                    continue
                term = a * x
                s = term if s is None else s + term
            out.append(s if s is not None else Fraction(0))
        return out

    def apply_sparse(self, vec):
        """Like apply(), but iterates only the nonzero vector entries."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        out = [Fraction(0)] * self.nrows
        m = self.ncols
        for j, x in enumerate(vec):
            if not x:
                continue
            for i in range(self.nrows):
                a = self.entries[i * m + j]
                if a:
                    out[i] = out[i] + a * x
        return out

    def transpose(self):
        return ExactMatrix(self.ncols, self.nrows,
                           [self.entries[i * self.ncols + j]
                            for j in range(self.ncols) for i in range(self.nrows)])

    def conj_transpose(self):
        def conj(x):
            return x.conjugate() if isinstance(x, GaussRational) else x
        return ExactMatrix(self.ncols, self.nrows,
                           [conj(self.entries[i * self.ncols + j])
                            for j in range(self.ncols) for i in range(self.nrows)])

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- integer rows for the sparse eliminator -----------------------

    def _int_rows(self, augment=None):
        """Scale each row to coprime integers; optionally append a column."""
        rows = []
        for i in range(self.nrows):
            r = self.row(i)
            extra = [] if augment is None else [Fraction(augment[i])]
            lcm = 1
            for x in list(r) + extra:
                d = x.denominator
                lcm = lcm // gcd(lcm, d) * d
            cols = []
            vals = []
            for j, x in enumerate(r):
                if x:
                    cols.append(j)
                    vals.append(int(x * lcm))
            if extra and extra[0]:
                cols.append(self.ncols)
                vals.append(int(extra[0] * lcm))
            if cols:
                rows.append((cols, vals))
        return rows

    # -- rank / kernel / solve ----------------------------------------

    def rank(self) -> int:
        if self.is_gaussian():
            return _field_rank(self.to_rows())
        return elimination.rank(self._int_rows(), self.ncols)

    def kernel_vectors(self):
        """Basis of the right null space as plain vectors."""
        if self.is_gaussian():
            return _field_kernel(self.to_rows(), self.ncols)
        basis = elimination.kernel_basis(self._int_rows(), self.ncols)
        return [[Fraction(v) for v in vec] for vec in basis]

    def kernel(self):
        """Basis of the right null space as column matrices."""
        return [ExactMatrix.column(v) for v in self.kernel_vectors()]

    def solve(self, b):
        """Exact x with A x = b (free unknowns zero), or None."""
        if isinstance(b, ExactMatrix):
            b = b.col(0)
        if len(b) != self.nrows:
            raise ValueError("right-hand side length mismatch")
        if self.is_gaussian() or any(isinstance(x, GaussRational) for x in b):
            return _field_solve(self.to_rows(), [_as_scalar(x) for x in b])
        return elimination.solve(self._int_rows(augment=b), self.ncols + 1, self.ncols)

    def det(self):
        """Determinant by dense Gauss elimination (small matrices only)."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of non-square matrix")
        rows = self.to_rows()
        n = self.nrows
        det = Fraction(1) if not self.is_gaussian() else GaussRational(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c]), None)
            if piv is None:
                return det * 0
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c]
            for r in range(c + 1, n):
                if rows[r][c]:
                    f = rows[r][c] / inv
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return det

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


# -- generic field elimination for Gaussian-rational matrices ---------

def _field_echelon(rows):
    """In-place row echelon with first-nonzero pivoting; returns pivots."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _field_rank(rows) -> int:
    return len(_field_echelon([list(r) for r in rows]))


def _field_kernel(rows, ncols):
    work = [list(r) for r in rows]
    pivots = _field_echelon(work)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [GaussRational(0) for _ in range(ncols)]
        vec[f] = GaussRational(1)
        for r, pc in enumerate(pivots):
            # reduced echelon: pivot rows have unit leads and cleared columns
            vec[pc] = -_as_scalar(work[r][f]) * GaussRational(1)
        basis.append(vec)
    return basis


def _field_solve(rows, b):
    work = [list(r) + [bb] for r, bb in zip(rows, b)]
    if not work:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        lead = work[r][c]
        work[r] = [x / lead for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    for i in range(r, len(work)):
        if work[i][ncols]:
            return None
    x = [GaussRational(0) for _ in range(ncols)]
    for row_idx, pc in enumerate(pivots):
        x[pc] = _as_scalar(work[row_idx][ncols]) * GaussRational(1)
    return x
