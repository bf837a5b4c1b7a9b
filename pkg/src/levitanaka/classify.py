"""Simple graded factors: Satake data, admissible node subsets, gradings,
and the grading-reversal decision.

A factor is a diagram (A_l, D_l or E6) with a real-form tag or the
complex tag, compact nodes, the diagram involution eps, and a subset
phi of nodes.  phi defines the grading element E by alpha(E) = 1 on
phi and eps(phi), 0 elsewhere; the kind is the E-degree of the highest
root.  The decision procedure for the reversal symmetry is membership
in hardcoded classification lists, with an independent oracle that
tests w_0 E = -E through the actual longest Weyl element.

Complex-type factors are modeled as two diagram copies with eps the
swap; available Weyl elements act diagonally, so the oracle tests the
single-copy w_0 against the common support.  For the one-sided singleton
pattern (hermitian kind-1 factors) the two-copy component condition is
relaxed; see phi_is_admissible.
"""

from __future__ import annotations

import json

from .errors import AdmissibilityError, IncompleteFactorsError, KindError
from .rootdata import root_system

REAL_FORMS = ("A III", "A IV", "D Ib", "D IIIb", "E II", "E III")
ALL_FORMS = REAL_FORMS + ("COMPLEX",)


def node(i: int, primed: bool = False) -> str:
    return f"a{i}'" if primed else f"a{i}"


def node_index(name: str) -> int:
    return int(name.rstrip("'")[1:])


def node_primed(name: str) -> bool:
    return name.endswith("'")


def dynkin_edges(family: str, rank: int):
    """1-based edges of one diagram copy."""
    if family in ("A", "D"):
        edges = [(i, i + 1) for i in range(1, rank)]
        if family == "D":
            edges[-1] = (rank - 2, rank)
            edges.append((rank - 2, rank - 1))
        return sorted(edges)
    if family == "E6":
        return [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)]
    raise ValueError(f"unsupported family {family}")


class FactorDescriptor:
    """One simple graded factor: (family, rank, form, phi)."""

    def __init__(self, family, rank, form, phi, p=None, q=None):
        if form not in ALL_FORMS:
            raise ValueError(f"unknown form {form!r}")
        if family not in ("A", "D", "E6"):
            raise ValueError(f"unknown family {family!r}")
        if family == "E6" and rank != 6:
            raise ValueError("E6 factors have rank 6")
        if family == "D" and rank < 4:
            raise ValueError("D factors need rank >= 4")
        if family == "A" and rank < 1:
            raise ValueError("A factors need rank >= 1")
        self.family = family
        self.rank = rank
        self.form = form
        self.p = p
        self.q = q
        if form in ("A III", "A IV"):
            if family != "A":
                raise ValueError("A III/IV requires family A")
            if p is None or q is None or p + q != rank + 1 or not 1 <= p <= q:
                raise ValueError("A III/IV needs p + q = rank + 1, 1 <= p <= q")
            if form == "A IV" and p != 1:
                raise ValueError("A IV means p = 1")
        elif form == "D Ib":
            if family != "D":
                raise ValueError("D Ib requires family D")
        elif form == "D IIIb":
            if family != "D" or rank % 2 == 0:
                raise ValueError("D IIIb requires family D of odd rank")
        elif form in ("E II", "E III"):
            if family != "E6":
                raise ValueError("E II/III requires family E6")
        self.phi = frozenset(phi)
        nodes = self.nodes()
        if not self.phi or not self.phi <= nodes:
            raise ValueError("phi must be a nonempty subset of the nodes")

    # -- diagram data ------------------------------------------------------

    @property
    def is_complex(self) -> bool:
        return self.form == "COMPLEX"

    def nodes(self) -> frozenset:
        base = {node(i) for i in range(1, self.rank + 1)}
        if self.is_complex:
            base |= {node(i, True) for i in range(1, self.rank + 1)}
        return frozenset(base)

    def compact_nodes(self) -> frozenset:
        if self.form in ("A III", "A IV"):
            return frozenset(node(i) for i in range(self.p + 1, self.q))
        if self.form == "D IIIb":
            return frozenset(node(i) for i in range(1, self.rank - 1, 2))
        if self.form == "E III":
            return frozenset({node(3), node(4), node(5)})
        return frozenset()

    def epsilon(self) -> dict:
        l = self.rank
        if self.is_complex:
            out = {}
            for i in range(1, l + 1):
                out[node(i)] = node(i, True)
                out[node(i, True)] = node(i)
            return out
        if self.form in ("A III", "A IV"):
            return {node(i): node(l + 1 - i) for i in range(1, l + 1)}
        if self.form in ("D Ib", "D IIIb"):
            out = {node(i): node(i) for i in range(1, l + 1)}
            out[node(l - 1)] = node(l)
            out[node(l)] = node(l - 1)
            return out
        if self.form == "E II":
            out = {node(i): node(i) for i in range(1, 7)}
            out[node(1)], out[node(6)] = node(6), node(1)
            out[node(3)], out[node(5)] = node(5), node(3)
            return out
        out = {node(i): node(i) for i in range(1, 7)}  # E III
        out[node(1)], out[node(6)] = node(6), node(1)
        return out

    def edges(self):
        base = dynkin_edges(self.family, self.rank)
        out = [(node(i), node(j)) for i, j in base]
        if self.is_complex:
            out += [(node(i, True), node(j, True)) for i, j in base]
        return out

    def components(self):
        if self.is_complex:
            return [frozenset(node(i) for i in range(1, self.rank + 1)),
                    frozenset(node(i, True) for i in range(1, self.rank + 1))]
        return [frozenset(node(i) for i in range(1, self.rank + 1))]

    def _tree_path(self, a, b):
        """Unique path between two nodes of the same component."""
        adj = {}
        for x, y in self.edges():
            adj.setdefault(x, []).append(y)
            adj.setdefault(y, []).append(x)
        prev = {a: None}
        queue = [a]
        while queue:
            cur = queue.pop(0)
            if cur == b:
                path = []
                while cur is not None:
                    path.append(cur)
                    cur = prev[cur]
                return path
            for nb in adj.get(cur, []):
                if nb not in prev:
                    prev[nb] = cur
                    queue.append(nb)
        return None

    def highest_root_coeff(self, name) -> int:
        rs = root_system("E6" if self.family == "E6" else self.family, self.rank)
        _, coeffs = rs.highest_root()
        return coeffs[node_index(name) - 1]

    # -- serialization -------------------------------------------------------

    def to_json(self):
        out = {"family": self.family, "rank": self.rank, "form": self.form,
               "phi": sorted(self.phi), "complex": self.is_complex}
        if self.p is not None:
            out["p"] = self.p
            out["q"] = self.q
        return out

    @classmethod
    def from_json(cls, obj):
        return cls(obj["family"], obj["rank"], obj["form"], obj["phi"],
                   obj.get("p"), obj.get("q"))

    def __repr__(self):
        phi = ",".join(sorted(self.phi))
        return f"FactorDescriptor({self.family}{self.rank} {self.form} phi={{{phi}}})"

    def __eq__(self, other):
        return isinstance(other, FactorDescriptor) and \
            self.to_json() == other.to_json()

    def __hash__(self):
        return hash(json.dumps(self.to_json(), sort_keys=True))


class GradingData:
    """Values of the simple roots on the grading element, plus the kind."""

    def __init__(self, e_coords, kind):
        self.e_coords = e_coords
        self.kind = kind

    def support_indices(self):
        return sorted({node_index(n) for n, v in self.e_coords.items() if v})

    def __repr__(self):
        return f"GradingData(kind={self.kind})"


def phi_is_admissible(d: FactorDescriptor) -> bool:
    """The four diagram conditions on phi, in the two-copy reading.

    (1) phi avoids the compact nodes; (2) phi and eps(phi) are disjoint;
    (3) every component meets both phi and eps(phi); (4) every path
    between two phi-nodes passes through eps(phi).  A complex singleton
    sitting at a coefficient-1 node is the one-sided hermitian pattern:
    its grading pairs the node with its mirror copy, so condition (3)
    is waived for it (such factors have kind 1 and no compatibility
    constraint to protect).
    """
    eps = d.epsilon()
    eps_phi = {eps[n] for n in d.phi}
    if d.phi & d.compact_nodes():
        return False
    if d.phi & eps_phi:
        return False
    hermitian_singleton = (
        d.is_complex and len(d.phi) == 1
        and d.highest_root_coeff(next(iter(d.phi))) == 1)
    if not hermitian_singleton:
        for comp in d.components():
            if not (comp & d.phi) or not (comp & eps_phi):
                return False
    phi_sorted = sorted(d.phi)
    for i, a in enumerate(phi_sorted):
        for b in phi_sorted[i + 1:]:
            path = d._tree_path(a, b)
            if path is None:
                continue
            if not any(n in eps_phi for n in path):
                return False
    return True


def grading_data(d: FactorDescriptor) -> GradingData:
    if not phi_is_admissible(d):
        raise AdmissibilityError(f"{d!r} is not admissible")
    eps = d.epsilon()
    support = set(d.phi) | {eps[n] for n in d.phi}
    e_coords = {n: (1 if n in support else 0) for n in sorted(d.nodes())}
    if d.is_complex:
        per_copy = []
        for primed in (False, True):
            total = sum(d.highest_root_coeff(n) for n in support
                        if node_primed(n) == primed)
            per_copy.append(total)
        assert per_copy[0] == per_copy[1], "copies disagree on the kind"
        kind = per_copy[0]
    else:
        kind = sum(d.highest_root_coeff(n) for n in support)
    return GradingData(e_coords, kind)


def support_indices(d: FactorDescriptor) -> set:
    """Single-diagram indices where the grading element evaluates to 1.

    For complex factors both copies carry the same index set (one from
    phi, one from its mirror), so one set describes either copy.
    """
    if d.is_complex:
        return {node_index(n) for n in d.phi}
    eps = d.epsilon()
    return {node_index(n) for n in set(d.phi) | {eps[n] for n in d.phi}}


def w0_reverses_E(d: FactorDescriptor) -> bool:
    """Oracle: does the longest Weyl element send E to -E?

    Real forms use w_0 of the underlying diagram; complex factors act
    diagonally on the two copies, so the single-copy w_0 must negate the
    common support indicator.
    """
    grading_data(d)  # admissibility gate
    rs = root_system("E6" if d.family == "E6" else d.family, d.rank)
    rows = rs.w0_on_simple_coeffs()
    support = support_indices(d)
    c = [1 if (i + 1) in support else 0 for i in range(d.rank)]
    for i in range(d.rank):
        value = sum(rows[i][k] * c[k] for k in range(d.rank))
        if value != -c[i]:
            return False
    return True


def _phi_index_pair(d: FactorDescriptor):
    """(unprimed index, primed index) for a two-node complex phi."""
    unprimed = [node_index(n) for n in d.phi if not node_primed(n)]
    primed = [node_index(n) for n in d.phi if node_primed(n)]
    if len(unprimed) == 1 and len(primed) == 1:
        return unprimed[0], primed[0]
    return None


def in_kind2_list(d: FactorDescriptor) -> bool:
    """Membership in the classification of reversal-symmetric kind-2 factors."""
    l = d.rank
    if d.form in ("A III", "A IV"):
        if len(d.phi) != 1:
            return False
        i = node_index(next(iter(d.phi)))
        return (i <= d.p or i >= d.q) and 2 * i != l + 1
    if d.form in ("D Ib", "D IIIb"):
        return d.phi in (frozenset({node(l - 1)}), frozenset({node(l)}))
    if d.form in ("E II", "E III"):
        return d.phi in (frozenset({node(1)}), frozenset({node(6)}))
    pair = _phi_index_pair(d)
    if pair is None:
        return False
    i, j = pair
    if d.family == "A":
        return i + j == l + 1 and i != j
    if d.family == "D":
        if l % 2 == 0:
            return {i, j} <= {1, l - 1, l} and i != j
        return {i, j} == {l - 1, l}
    return {i, j} == {1, 6}  # E6 complex


def in_kind1_list(d: FactorDescriptor) -> bool:
    """Membership in the list of reversal-symmetric hermitian kind-1 factors."""
    if not d.is_complex or len(d.phi) != 1:
        return False
    i = node_index(next(iter(d.phi)))
    l = d.rank
    if d.family == "A":
        return l % 2 == 1 and 2 * i == l + 1
    if d.family == "D":
        if l % 2 == 0:
            return i in (1, l - 1, l)
        return i == 1
    return False  # E6 complex kind-1 factors never pass


def theorem_membership(d: FactorDescriptor) -> bool:
    kind = grading_data(d).kind
    if kind == 2:
        return in_kind2_list(d)
    if kind == 1:
        return in_kind1_list(d)
    raise KindError(f"kind {kind} outside the classification lists")


def tilde_s_semisimple(factors) -> bool:
    """Reversal symmetry of a sum of kind-2 simple factors."""
    for d in factors:
        g = grading_data(d)  # raises AdmissibilityError when inadmissible
        if g.kind != 2:
            raise KindError(f"{d!r} has kind {g.kind}, expected 2")
    return all(in_kind2_list(d) for d in factors)


def tilde_s_general(kind2_factors, kind1_factors, e_r_is_zero: bool) -> bool:
    """Reversal symmetry with a radical present.

    Requires the grading element to sit inside the Levi factor
    (e_r_is_zero), the kind-2 ideals in the kind-2 list and the kind-1
    ideals in the hermitian list.  A Levi factor of a kind-2 algebra
    always contains a kind-2 ideal, so an empty kind-2 list is invalid.
    """
    if not kind2_factors:
        raise IncompleteFactorsError("a Levi factor must contain a kind-2 ideal")
    for d in kind2_factors:
        g = grading_data(d)
        if g.kind != 2:
            raise KindError(f"{d!r} has kind {g.kind}, expected 2")
    for d in kind1_factors:
        g = grading_data(d)
        if g.kind != 1:
            raise KindError(f"{d!r} has kind {g.kind}, expected 1")
    if not e_r_is_zero:
        return False
    return all(in_kind2_list(d) for d in kind2_factors) and \
        all(in_kind1_list(d) for d in kind1_factors)


# -- enumeration -------------------------------------------------------------


def _forms_for_rank(l):
    out = []
    for p in range(1, (l + 1) // 2 + 1):
        q = l + 1 - p
        out.append(("A", l, "A IV" if p == 1 else "A III", p, q))
    if l >= 4:
        out.append(("D", l, "D Ib", None, None))
    if l >= 5 and l % 2 == 1:
        out.append(("D", l, "D IIIb", None, None))
    if l == 6:
        out.append(("E6", 6, "E II", None, None))
        out.append(("E6", 6, "E III", None, None))
    out.append(("A", l, "COMPLEX", None, None))
    if l >= 4:
        out.append(("D", l, "COMPLEX", None, None))
    if l == 6:
        out.append(("E6", 6, "COMPLEX", None, None))
    return out


def enumerate_descriptors(max_rank: int):
    """All admissible descriptors of kind 1 or 2 up to the given rank.

    Kind >= |phi| for complex factors and kind >= 2|phi| for real forms,
    so only singleton and two-node subsets can reach kind <= 2.
    """
    for l in range(1, max_rank + 1):
        for family, rank, form, p, q in _forms_for_rank(l):
            names = sorted(
                FactorDescriptor(family, rank, form,
                                 [node(1)], p, q).nodes(),
                key=lambda n: (node_primed(n), node_index(n)))
            subsets = [[n] for n in names]
            subsets += [[a, b] for i, a in enumerate(names)
                        for b in names[i + 1:]]
            for phi in subsets:
                d = FactorDescriptor(family, rank, form, phi, p, q)
                if not phi_is_admissible(d):
                    continue
                kind = grading_data(d).kind
                if kind in (1, 2):
                    yield d, kind


def regenerate_tables(max_rank: int):
    """Oracle-versus-list table over every admissible descriptor."""
    if max_rank < 4:
        raise ValueError("max_rank must be at least 4")
    rows = {1: [], 2: []}
    disagreements = []
    for d, kind in enumerate_descriptors(max_rank):
        oracle = w0_reverses_E(d)
        listed = in_kind2_list(d) if kind == 2 else in_kind1_list(d)
        row = {"descriptor": d.to_json(), "kind": kind, "admissible": True,
               "w0_reverses_E": oracle, "in_theorem_list": listed}
        rows[kind].append(row)
        if oracle != listed:
            disagreements.append(row)
    return {"max_rank": max_rank, "kind_1": rows[1], "kind_2": rows[2],
            "disagreements": disagreements}
