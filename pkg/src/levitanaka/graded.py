"""Finite-dimensional graded real Lie algebras given by structure constants.

The algebra is a named basis with integer degrees, a sparse antisymmetric
bracket table over the rationals, and an optional complex structure J on
the degree -1 block.  On top of that sit the classical exact tools:
Killing form, solvable radical, nilpotency series, grading element, a
graded Levi-Malcev decomposition computed by correcting a section along
the derived series of the radical, and the split into simple ideals.

Everything is exact; every structural claim an operation returns is
re-verified by membership and rank tests before it is handed back.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

from . import elimination
from .errors import (
    LiftFailedError,
    NilradicalUnsupportedError,
    NoCharacteristicElementError,
    NotUniqueCharacteristicElementError,
)
from .matrices import ExactMatrix
from .scalars import rat_from_str, rat_to_str

Q = Fraction


def _int_sparse_row(coeffs, rhs=None, rhs_col=None):
    """Scale a {col: Fraction} row (plus optional rhs) to coprime ints."""
    items = sorted(coeffs.items())
    lcm = 1
    for _, v in items:
        d = v.denominator
        lcm = lcm // gcd(lcm, d) * d
    if rhs is not None and rhs != 0:
        d = rhs.denominator
        lcm = lcm // gcd(lcm, d) * d
    cols = [c for c, _ in items]
    vals = [int(v * lcm) for _, v in items]
    if rhs is not None and rhs != 0:
        cols.append(rhs_col)
        vals.append(int(rhs * lcm))
    return cols, vals


class Subspace:
    """Span of exact vectors inside a parent algebra's coordinate space."""

    def __init__(self, parent, vectors):
        self.parent = parent
        self.vectors = [list(v) for v in vectors]
        self._echelon = None

    @property
    def dim(self):
        return len(self.vectors)

    def _echelon_rows(self):
        if self._echelon is None:
            rows = [[Q(x) for x in v] for v in self.vectors]
            self._echelon = _rref(rows)
        return self._echelon

    def reduce(self, vector):
        """Residual of a vector after reduction against the span."""
        rows, pivots = self._echelon_rows()
        v = [Q(x) for x in vector]
        for r, pc in enumerate(pivots):
            if v[pc]:
                f = v[pc]
                v = [a - f * b for a, b in zip(v, rows[r])]
        return v

    def contains(self, vector) -> bool:
        return not any(self.reduce(vector))

    def coords_of(self, vector):
        """Coordinates of a member vector on self.vectors, or None."""
        if not self.vectors:
            return [] if not any(vector) else None
        m = ExactMatrix.from_rows(self.vectors).transpose()
        return m.solve(list(vector))

    def __repr__(self):
        return f"Subspace(dim={self.dim})"


def _rref(rows):
    """Reduced row echelon over Q; drops zero rows; returns (rows, pivots)."""
    if not rows:
        return [], []
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
    return rows[:r], pivots


def span_basis(vectors):
    """Echelonized basis of the span of the given vectors."""
    rows, _ = _rref([[Q(x) for x in v] for v in vectors])
    return rows


class _GreedyBasis:
    """Incremental echelon accumulator for independence-filtered extension."""

    def __init__(self, vectors=()):
        self.rows = []
        self.pivots = []
        for v in vectors:
            self.add(v)

    def add(self, vector) -> bool:
        v = [Q(x) for x in vector]
        for row, pc in zip(self.rows, self.pivots):
            if v[pc]:
                f = v[pc]
                v = [a - f * b for a, b in zip(v, row)]
        pc = next((i for i, x in enumerate(v) if x), None)
        if pc is None:
            return False
        lead = v[pc]
        v = [x / lead for x in v]
        self.rows.append(v)
        self.pivots.append(pc)
        return True


class ValidationReport:
    """Outcome of validate(): a certificate or a list of violations."""

    def __init__(self):
        self.violations = []

    @property
    def ok(self):
        return not self.violations

    def add(self, check, detail, **info):
        self.violations.append({"check": check, "detail": detail, **info})

    def __repr__(self):
        status = "certificate" if self.ok else f"{len(self.violations)} violation(s)"
        return f"ValidationReport({status})"


class GradedLieAlgebra:
    """Graded Lie algebra over Q from sparse structure constants.

    ``table`` maps (i, j) with i < j to {k: c} giving [e_i, e_j] = sum c e_k;
    the antisymmetric completion is implied.  ``J`` (optional) is an
    ExactMatrix on the degree -1 block, in basis order of that block.
    """

    def __init__(self, names, degrees, table, J=None):
        if len(names) != len(degrees):
            raise ValueError("names/degrees length mismatch")
        self.names = list(names)
        self.degrees = list(degrees)
        self.table = {}
        for (i, j), comp in table.items():
            if i == j:
                if any(comp.values()):
                    raise ValueError("nonzero [x,x] entry")
                continue
            if i > j:
                i, j, comp = j, i, {k: -c for k, c in comp.items()}
            clean = {k: Q(c) for k, c in comp.items() if c}
            if clean:
                if (i, j) in self.table:
                    raise ValueError(f"duplicate bracket entry ({i},{j})")
                self.table[(i, j)] = clean
        self.J = J
        self._cols = None
        self._killing = None

    # -- basic structure ----------------------------------------------

    @property
    def dim(self):
        return len(self.names)

    def degree_indices(self, p):
        return [i for i, d in enumerate(self.degrees) if d == p]

    def degree_dims(self):
        dims = {}
        for d in self.degrees:
            dims[d] = dims.get(d, 0) + 1
        return dict(sorted(dims.items()))

    def bracket_elements(self, i, j):
        """[e_i, e_j] as a sparse {k: coeff} dict (sign handled)."""
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        comp = self.table.get((j, i))
        if not comp:
            return {}
        return {k: -c for k, c in comp.items()}

    def _columns(self):
        """ad-columns: cols[i][j] = sparse [e_i, e_j] for all i, j."""
        if self._cols is None:
            cols = [{} for _ in range(self.dim)]
            for (i, j), comp in self.table.items():
                cols[i][j] = comp
                cols[j][i] = {k: -c for k, c in comp.items()}
            self._cols = cols
        return self._cols

    def bracket(self, x, y):
        """Bilinear extension of the table to dense coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension mismatch")
        cols = self._columns()
        out = [Q(0)] * self.dim
        supp_y = [j for j, v in enumerate(y) if v]
        for i, xi in enumerate(x):
            if not xi:
                continue
            ci = cols[i]
            if len(ci) < len(supp_y):
                items = ((j, ci[j]) for j in ci if y[j])
            else:
                items = ((j, ci[j]) for j in supp_y if j in ci)
            for j, comp in items:
                coef = xi * y[j]
                for k, c in comp.items():
                    out[k] += coef * c
        return out

    def ad_vector(self, x):
        """Dense matrix of ad(x) acting on coordinate vectors."""
        n = self.dim
        cols = self._columns()
        mat = [[Q(0)] * n for _ in range(n)]
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, comp in cols[i].items():
                for k, c in comp.items():
                    mat[k][j] += xi * c
        return ExactMatrix.from_rows(mat)

    # -- validation -----------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check degree additivity, Jacobi on all triples, and J^2 = -Id."""
        report = ValidationReport()
        deg = self.degrees
        for (i, j), comp in self.table.items():
            for k, c in comp.items():
                if deg[k] != deg[i] + deg[j]:
                    report.add("degree_additivity",
                               f"[{self.names[i]},{self.names[j]}] hits degree "
                               f"{deg[k]} != {deg[i]}+{deg[j]}",
                               triple=(i, j, k))
        cols = self._columns()
        n = self.dim
        for i in range(n):
            ci = cols[i]
            for j in range(i + 1, n):
                cij = ci.get(j)
                cj = cols[j]
                for k in range(j + 1, n):
                    acc = {}
                    cjk = cj.get(k)
                    if cjk:
                        for m, c in cjk.items():
                            for t, c2 in ci.get(m, {}).items():
                                acc[t] = acc.get(t, Q(0)) + c * c2
                    cik = ci.get(k)
                    if cik:
                        for m, c in cik.items():
                            for t, c2 in cj.get(m, {}).items():
                                acc[t] = acc.get(t, Q(0)) - c * c2
                    if cij:
                        for m, c in cij.items():
                            for t, c2 in cols[k].get(m, {}).items():
                                acc[t] = acc.get(t, Q(0)) + c * c2
                    if any(acc.values()):
                        report.add("jacobi",
                                   f"Jacobi fails on ({self.names[i]},"
                                   f"{self.names[j]},{self.names[k]})",
                                   triple=(i, j, k))
                        return report
        if self.J is not None:
            block = self.degree_indices(-1)
            d = len(block)
            if self.J.nrows != d or self.J.ncols != d:
                report.add("J_block", f"J is {self.J.nrows}x{self.J.ncols}, "
                                      f"degree -1 block has dim {d}")
            else:
                sq = self.J * self.J
                if sq != ExactMatrix.identity(d).scale(Q(-1)):
                    report.add("J_square", "J^2 != -Id on the degree -1 block")
        return report

    # -- Killing form and radical ----------------------------------------

    def killing_form(self) -> ExactMatrix:
        """Symmetric matrix of trace(ad x_i ad x_j)."""
        if self._killing is not None:
            return self._killing
        n = self.dim
        cols = self._columns()
        mat = [[Q(0)] * n for _ in range(n)]
        for i in range(n):
            ci = cols[i]
            for j in range(i, n):
                cj = cols[j]
                s = Q(0)
                for l, col in cj.items():
                    # contribution sum_k ad_i[l, k] ad_j[k, l]
                    for k, c in col.items():
                        c2 = ci.get(k, {}).get(l)
                        if c2:
                            s += c * c2
                mat[i][j] = s
                mat[j][i] = s
        self._killing = ExactMatrix.from_rows(mat)
        return self._killing

    def derived_subalgebra_basis(self):
        """Echelon basis of [g, g]."""
        vecs = []
        for comp in self.table.values():
            v = [Q(0)] * self.dim
            for k, c in comp.items():
                v[k] = c
            vecs.append(v)
        return span_basis(vecs)

    def graded_components(self, vectors):
        """Split a graded subspace's spanning set into homogeneous bases.

        Returns vectors sorted by (degree, elimination pivot order);
        raises AssertionError if the span is not degree-homogeneous.
        """
        if not vectors:
            return []
        total = len(span_basis(vectors))
        out = []
        degrees_present = sorted(set(self.degrees))
        for p in degrees_present:
            idxs = self.degree_indices(p)
            projections = []
            for v in vectors:
                proj = [Q(0)] * self.dim
                nonzero = False
                for i in idxs:
                    if v[i]:
                        proj[i] = Q(v[i])
                        nonzero = True
                if nonzero:
                    projections.append(proj)
            out.extend(span_basis(projections))
        assert len(out) == total, "subspace is not graded"
        return out

    def radical(self) -> Subspace:
        """Solvable radical: Killing-orthogonal of the derived algebra."""
        derived = self.derived_subalgebra_basis()
        if not derived:
            units = [[Q(int(i == j)) for j in range(self.dim)]
                     for i in range(self.dim)]
            return Subspace(self, self.graded_components(units))
        killing = self.killing_form()
        rows = []
        for d in derived:
            coeffs = {}
            kd = killing.apply(d)
            for j, val in enumerate(kd):
                if val:
                    coeffs[j] = val
            rows.append(_int_sparse_row(coeffs))
        basis = elimination.kernel_basis(rows, self.dim)
        vectors = self.graded_components([[Q(x) for x in v] for v in basis])
        rad = Subspace(self, vectors)
        self._verify_ideal(rad, "radical")
        series = self.derived_series(rad)
        if series and series[-1].dim != 0:
            raise AssertionError("radical candidate is not solvable (bug)")
        return rad

    def _verify_ideal(self, sub: Subspace, label: str):
        for i in range(self.dim):
            cols = self._columns()[i]
            for v in sub.vectors:
                w = [Q(0)] * self.dim
                for j, comp in cols.items():
                    if v[j]:
                        for k, c in comp.items():
                            w[k] += v[j] * c
                if any(w) and not sub.contains(w):
                    raise AssertionError(f"{label} is not an ideal (bug)")

    def derived_series(self, sub: Subspace):
        """sub, [sub,sub], ... down to 0 (strictly decreasing, 0 included)."""
        series = [sub]
        current = sub
        while current.dim:
            brackets = []
            for a in range(current.dim):
                for b in range(a + 1, current.dim):
                    w = self.bracket(current.vectors[a], current.vectors[b])
                    if any(w):
                        brackets.append(w)
            nxt = Subspace(self, span_basis(brackets))
            if nxt.dim >= current.dim:
                break
            series.append(nxt)
            current = nxt
        return series

    def lower_central_series(self, sub: Subspace):
        """sub, [sub,sub], [[sub,sub],sub], ... strictly decreasing prefix."""
        series = [sub]
        current = sub
        while current.dim:
            brackets = []
            for a in range(current.dim):
                for b in range(sub.dim):
                    w = self.bracket(current.vectors[a], sub.vectors[b])
                    if any(w):
                        brackets.append(w)
            nxt = Subspace(self, span_basis(brackets))
            if nxt.dim >= current.dim:
                break
            series.append(nxt)
            current = nxt
        return series

    def nilradical(self) -> Subspace:
        """Largest nilpotent ideal, by a verified heuristic.

        Candidate: radical vectors Killing-orthogonal to the whole algebra.
        Certified to be an ideal, nilpotent, and to contain [g, radical];
        raises NilradicalUnsupportedError when certification fails.
        """
        rad = self.radical()
        if rad.dim == 0:
            return rad
        killing = self.killing_form()
        rows = []
        for j in range(self.dim):
            coeffs = {}
            for t, v in enumerate(rad.vectors):
                s = Q(0)
                for i, x in enumerate(v):
                    if x:
                        s += x * killing.entry(i, j)
                if s:
                    coeffs[t] = s
            if coeffs:
                rows.append(_int_sparse_row(coeffs))
        coeff_basis = elimination.kernel_basis(rows, rad.dim)
        vectors = []
        for cv in coeff_basis:
            w = [Q(0)] * self.dim
            for t, c in enumerate(cv):
                if c:
                    for i, x in enumerate(rad.vectors[t]):
                        w[i] += c * x
            vectors.append(w)
        nil = Subspace(self, self.graded_components(vectors))
        try:
            self._verify_ideal(nil, "nilradical")
        except AssertionError as exc:
            raise NilradicalUnsupportedError(str(exc)) from exc
        lcs = self.lower_central_series(nil)
        if nil.dim and (not lcs or lcs[-1].dim != 0):
            raise NilradicalUnsupportedError("candidate is not nilpotent")
        for i in range(self.dim):
            for v in rad.vectors:
                w = self.bracket([Q(int(t == i)) for t in range(self.dim)], v)
                if any(w) and not nil.contains(w):
                    raise NilradicalUnsupportedError(
                        "[g, radical] is not inside the candidate")
        return nil

    # -- characteristic element -----------------------------------------

    def characteristic_element(self):
        """The unique E in g_0 with [E, x] = p x on each degree-p vector."""
        zero_idx = self.degree_indices(0)
        nun = len(zero_idx)
        cols = self._columns()
        rows = []
        bcol = nun
        for j in range(self.dim):
            per_k = {}
            for pos, i in enumerate(zero_idx):
                for k, c in cols[i].get(j, {}).items():
                    per_k.setdefault(k, {})[pos] = c
            rhs_deg = Q(self.degrees[j])
            touched = set(per_k) | ({j} if rhs_deg else set())
            for k in sorted(touched):
                coeffs = per_k.get(k, {})
                rhs = rhs_deg if k == j else Q(0)
                if coeffs or rhs:
                    rows.append(_int_sparse_row(coeffs, rhs, bcol))
        if nun == 0:
            if any(self.degrees):
                raise NoCharacteristicElementError("degree-0 part is zero")
            return [Q(0)] * self.dim
        sol = elimination.solve(rows, nun + 1, nun)
        if sol is None:
            raise NoCharacteristicElementError("grading is not inner")
        hom_rows = []
        for cols_, vals_ in rows:
            if cols_ and cols_[-1] == bcol:
                cols_, vals_ = cols_[:-1], vals_[:-1]
            if cols_:
                hom_rows.append((cols_, vals_))
        ambiguity = elimination.kernel_basis(hom_rows, nun)
        if ambiguity:
            raise NotUniqueCharacteristicElementError(len(ambiguity))
        e = [Q(0)] * self.dim
        for pos, i in enumerate(zero_idx):
            e[i] = sol[pos]
        for j in range(self.dim):
            w = self.bracket(e, [Q(int(t == j)) for t in range(self.dim)])
            expect = [Q(self.degrees[j]) if t == j else Q(0) for t in range(self.dim)]
            assert w == expect, "characteristic element verification failed"
        return e

    def center(self) -> Subspace:
        rows = []
        cols = self._columns()
        per = {}
        for i in range(self.dim):
            for j, comp in cols[i].items():
                for k, c in comp.items():
                    per.setdefault((j, k), {})[i] = c
        for key in sorted(per):
            rows.append(_int_sparse_row(per[key]))
        basis = elimination.kernel_basis(rows, self.dim)
        return Subspace(self, [[Q(x) for x in v] for v in basis])

    # -- subalgebra extraction ------------------------------------------

    def subalgebra(self, vectors):
        """Structure constants of a bracket-closed homogeneous span.

        Returns (GradedLieAlgebra, vectors); vector i of the result's
        basis is ``vectors[i]`` in the parent's coordinates.
        """
        vecs = [list(v) for v in vectors]
        d = len(vecs)
        degs = []
        for v in vecs:
            present = {self.degrees[i] for i, x in enumerate(v) if x}
            if len(present) != 1:
                raise ValueError("subalgebra basis vector is not homogeneous")
            degs.append(present.pop())
        n = self.dim
        # extend to a full basis once; coordinates come from one inverse
        ext = list(vecs)
        acc = _GreedyBasis(vecs)
        for i in range(n):
            if len(ext) == n:
                break
            unit = [Q(int(t == i)) for t in range(n)]
            if acc.add(unit):
                ext.append(unit)
        minv = _inverse(ExactMatrix.from_rows(ext).transpose()) if d else None
        table = {}
        for a in range(d):
            for b in range(a + 1, d):
                w = self.bracket(vecs[a], vecs[b])
                if not any(w):
                    continue
                coords = minv.apply_sparse(w)
                if any(coords[d:]):
                    raise ValueError("span is not bracket-closed")
                comp = {k: c for k, c in enumerate(coords[:d]) if c}
                if comp:
                    table[(a, b)] = comp
        names = [f"v{a}" for a in range(d)]
        return GradedLieAlgebra(names, degs, table), vecs

    # -- Levi decomposition ----------------------------------------------

    def levi_decomposition(self):
        """Graded Levi-Malcev decomposition; see LeviDecomposition."""
        rad = self.radical()
        n = self.dim
        if rad.dim == n:
            raise ValueError("algebra is solvable; no Levi factor")
        complement_idx = []
        acc = _GreedyBasis(rad.vectors)
        for p in sorted(set(self.degrees)):
            for i in self.degree_indices(p):
                unit = [Q(int(t == i)) for t in range(n)]
                if acc.add(unit):
                    complement_idx.append(i)
        nq = len(complement_idx)
        assert nq + rad.dim == n
        basis_cols = [[Q(int(t == i)) for t in range(n)] for i in complement_idx]
        basis_cols += [list(v) for v in rad.vectors]
        minv = _inverse(ExactMatrix.from_rows(basis_cols).transpose())

        def q_coords(vec):
            full = minv.apply_sparse(vec)
            return full[:nq]

        q_deg = [self.degrees[i] for i in complement_idx]
        sigma = [[Q(int(t == i)) for t in range(n)] for i in complement_idx]
        q_table = {}
        for a in range(nq):
            for b in range(a + 1, nq):
                w = self.bracket(sigma[a], sigma[b])
                comp = {k: c for k, c in enumerate(q_coords(w)) if c}
                if comp:
                    q_table[(a, b)] = comp

        def q_bracket_coords(a, b):
            if a == b:
                return {}
            if a < b:
                return q_table.get((a, b), {})
            return {k: -c for k, c in q_table.get((b, a), {}).items()}

        def sigma_of_coords(coords):
            out = [Q(0)] * n
            for c, val in coords.items():
                if val:
                    for t, x in enumerate(sigma[c]):
                        out[t] += val * x
            return out

        def defects():
            out = {}
            for a in range(nq):
                for b in range(a + 1, nq):
                    w = self.bracket(sigma[a], sigma[b])
                    target = sigma_of_coords(q_bracket_coords(a, b))
                    delta = [x - y for x, y in zip(w, target)]
                    if any(delta):
                        out[(a, b)] = delta
            return out

        chain = self.derived_series(rad)
        chain.append(Subspace(self, []))
        stage = 0
        delta = defects()
        while delta:
            if stage + 1 >= len(chain):
                raise LiftFailedError("defect survived past the derived series")
            level = chain[stage]
            nxt = chain[stage + 1]
            for d in delta.values():
                assert level.contains(d), "defect escaped the expected ideal"
            # unknown phi maps q-basis a into the degree-matching part of level
            slots = []
            slot_index = {}
            level_degree = []
            for m, w in enumerate(level.vectors):
                wd = {self.degrees[i] for i, x in enumerate(w) if x}
                assert len(wd) == 1, "radical layer vector is not homogeneous"
                level_degree.append(wd.pop())
            for a in range(nq):
                for m in range(level.dim):
                    if level_degree[m] == q_deg[a]:
                        slot_index[(a, m)] = len(slots)
                        slots.append((a, m))
            rows = []
            bcol = len(slots)
            # reductions mod the next derived ideal, precomputed sparsely
            level_red = []
            for w in level.vectors:
                red = nxt.reduce(w)
                level_red.append({t: x for t, x in enumerate(red) if x})
            sig_red = {}
            for a in range(nq):
                for m in range(level.dim):
                    br = self.bracket(sigma[a], level.vectors[m])
                    red = nxt.reduce(br)
                    sp = {t: x for t, x in enumerate(red) if x}
                    if sp:
                        sig_red[(a, m)] = sp

            for (a, b), dvec in delta.items():
                per_coord = {}

                def accumulate(slot, sparse_vec, sign):
                    for t, x in sparse_vec.items():
                        d = per_coord.setdefault(t, {})
                        d[slot] = d.get(slot, Q(0)) + sign * x

                qc = q_bracket_coords(a, b)
                for c, val in qc.items():
                    for m in range(level.dim):
                        slot = slot_index.get((c, m))
                        if slot is not None and level_red[m]:
                            accumulate(slot, {t: val * x
                                              for t, x in level_red[m].items()},
                                       Q(1))
                for m in range(level.dim):
                    slot = slot_index.get((b, m))
                    if slot is not None and (a, m) in sig_red:
                        accumulate(slot, sig_red[(a, m)], Q(-1))
                    slot = slot_index.get((a, m))
                    if slot is not None and (b, m) in sig_red:
                        accumulate(slot, sig_red[(b, m)], Q(1))
                rhs_red = nxt.reduce(dvec)
                touched = set(per_coord) | {t for t, x in enumerate(rhs_red) if x}
                for t in sorted(touched):
                    coeffs = {s: v for s, v in per_coord.get(t, {}).items() if v}
                    rhs = rhs_red[t]
                    if coeffs or rhs:
                        rows.append(_int_sparse_row(coeffs, rhs, bcol))
            sol = elimination.solve(rows, bcol + 1, bcol)
            if sol is None:
                raise LiftFailedError(f"correction system inconsistent at stage {stage}")
            for (a, m), slot in slot_index.items():
                c = sol[slot]
                if c:
                    sigma[a] = [x + c * y for x, y in zip(sigma[a], level.vectors[m])]
            stage += 1
            delta = defects()

        s_sub = Subspace(self, sigma)
        s_alg = GradedLieAlgebra(
            [f"s{a}" for a in range(nq)], q_deg,
            {k: dict(v) for k, v in q_table.items()})
        killing_s = s_alg.killing_form()
        if killing_s.rank() != nq:
            raise LiftFailedError("Levi factor has degenerate Killing form (bug)")
        try:
            e = self.characteristic_element()
            e_q = q_coords(e)
            e_s = sigma_of_coords({k: c for k, c in enumerate(e_q) if c})
            e_r = [x - y for x, y in zip(e, e_s)]
            assert rad.contains(e_r)
        except (NoCharacteristicElementError, NotUniqueCharacteristicElementError):
            e_s = None
            e_r = None
        return LeviDecomposition(s_sub, rad, e_s, e_r, s_alg)

    def simple_ideals(self, sub: Subspace):
        """Split a semisimple subalgebra into its simple ideals."""
        result = []
        self._split_simple(sub.vectors, result)
        return [Subspace(self, vecs) for vecs in result]

    def _split_simple(self, vectors, out):
        alg, vecs = self.subalgebra(self.graded_components(vectors))
        d = alg.dim
        if d == 0:
            return
        killing = alg.killing_form()
        for t in range(d):
            ideal = _ideal_closure(alg, t)
            di = len(ideal)
            if di == d:
                continue
            rows = []
            for v in ideal:
                coeffs = {}
                kv = killing.apply(v)
                for j, val in enumerate(kv):
                    if val:
                        coeffs[j] = val
                rows.append(_int_sparse_row(coeffs))
            comp = elimination.kernel_basis(rows, d)
            assert len(comp) + di == d, "Killing complement has wrong dimension"
            to_parent = lambda cv: [
                sum((Q(c) * vecs[i][tt] for i, c in enumerate(cv) if c), Q(0))
                for tt in range(self.dim)]
            self._split_simple([to_parent(v) for v in ideal], out)
            self._split_simple([to_parent([Q(x) for x in v]) for v in comp], out)
            return
        out.append(vecs)

    def change_basis(self, p: ExactMatrix) -> "GradedLieAlgebra":
        """Algebra in the new basis whose j-th vector is column j of p.

        Columns must be degree-homogeneous; names are kept positional.
        """
        n = self.dim
        if p.nrows != n or p.ncols != n:
            raise ValueError("basis change must be square of matching size")
        pinv = _inverse(p)
        new_deg = []
        cols = [p.col(j) for j in range(n)]
        for j, col in enumerate(cols):
            present = {self.degrees[i] for i, x in enumerate(col) if x}
            if len(present) != 1:
                raise ValueError("basis-change column is not degree-homogeneous")
            new_deg.append(present.pop())
        table = {}
        for a in range(n):
            for b in range(a + 1, n):
                w = self.bracket(cols[a], cols[b])
                if not any(w):
                    continue
                coords = pinv.apply_sparse(w)
                comp = {k: c for k, c in enumerate(coords) if c}
                if comp:
                    table[(a, b)] = comp
        jmat = None
        if self.J is not None:
            # J transforms by restriction of the change to the degree -1 block
            block = self.degree_indices(-1)
            new_block = [j for j, d in enumerate(new_deg) if d == -1]
            if sorted(block) != sorted(new_block):
                raise ValueError("degree -1 block changed position")
            sub = ExactMatrix.from_rows(
                [[p.entry(i, j) for j in new_block] for i in block])
            jmat = _inverse(sub) * self.J * sub
        return GradedLieAlgebra(list(self.names), new_deg, table, jmat)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        entries = []
        for (i, j) in sorted(self.table):
            for k in sorted(self.table[(i, j)]):
                entries.append([i, j, k, rat_to_str(self.table[(i, j)][k])])
        jblock = None
        if self.J is not None:
            jblock = {"rows": self.J.nrows,
                      "entries": [rat_to_str(x) for x in self.J.entries]}
        return {"basis": list(self.names), "degrees": list(self.degrees),
                "brackets": entries, "J": jblock}

    @classmethod
    def from_json(cls, obj):
        table = {}
        for i, j, k, c in obj["brackets"]:
            table.setdefault((i, j), {})[k] = rat_from_str(c)
        jmat = None
        if obj.get("J") is not None:
            r = obj["J"]["rows"]
            entries = [rat_from_str(x) for x in obj["J"]["entries"]]
            jmat = ExactMatrix(r, len(entries) // r if r else 0, entries)
        return cls(obj["basis"], obj["degrees"], table, jmat)

    def dump(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self):
        return f"GradedLieAlgebra(dim={self.dim}, degrees={self.degree_dims()})"


class LeviDecomposition:
    """g = s + r with s a graded semisimple subalgebra, r the radical."""

    def __init__(self, s, r, e_s, e_r, s_algebra):
        self.s = s
        self.r = r
        self.E_s = e_s
        self.E_r = e_r
        self.s_algebra = s_algebra

    def __repr__(self):
        return f"LeviDecomposition(s_dim={self.s.dim}, r_dim={self.r.dim})"


def _ideal_closure(alg: GradedLieAlgebra, t: int):
    """Echelon basis of the smallest ideal containing basis vector t."""
    cols = alg._columns()
    current = span_basis([[Q(int(i == t)) for i in range(alg.dim)]])
    while True:
        new = list(current)
        for i in range(alg.dim):
            ci = cols[i]
            for v in current:
                w = [Q(0)] * alg.dim
                hit = False
                for j, comp in ci.items():
                    if v[j]:
                        hit = True
                        for k, c in comp.items():
                            w[k] += v[j] * c
                if hit and any(w):
                    new.append(w)
        nxt = span_basis(new)
        if len(nxt) == len(current):
            return nxt
        current = nxt


def _inverse(m: ExactMatrix) -> ExactMatrix:
    n = m.nrows
    if n != m.ncols:
        raise ValueError("inverse of non-square matrix")
    work = [list(m.row(i)) + [Q(int(i == j)) for j in range(n)] for i in range(n)]
    rows, pivots = _rref(work)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return ExactMatrix.from_rows([r[n:] for r in rows])
