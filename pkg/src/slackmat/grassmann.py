"""Pluecker relations, the Grassmannian ideal of a matroid, the per-hyperplane
substitution matrices linking slack entries to Pluecker coordinates, and the
universal realization ideal with its two projections."""

from itertools import combinations

from .fields import Field, QQ
from .groebner import Budget, BudgetExceeded, Ideal, eliminate, saturate
from .linalg import _minor, field_det
from .matroid import Matroid, PointConfiguration
from .ring import Poly, PolyRing, UsageError
from .slack import SymbolicSlackMatrix


def _p_name(labels):
    labs = [str(x) for x in labels]
    joined = "".join(labs) if all(len(s) == 1 for s in labs) else ",".join(labs)
    return f"p_{{{joined}}}"


class PlueckerRing:
    """One variable p_sigma per (d+1)-subset sigma of the ground set, indexed
    in lexicographic order of sorted label tuples."""

    def __init__(self, matroid_or_rank, n=None, field: Field = QQ, labels=None):
        if isinstance(matroid_or_rank, Matroid):
            M = matroid_or_rank
            self.rank, self.n = M.rank, M.n
            self.labels = M.labels
            self.matroid = M
        else:
            self.rank = matroid_or_rank
            self.n = n
            self.labels = tuple(labels) if labels else tuple(range(1, n + 1))
            self.matroid = None
        self.subsets = list(combinations(range(self.n), self.rank))
        names = [_p_name([self.labels[i] for i in s]) for s in self.subsets]
        self.ring = PolyRing(field, names)
        self.index = {s: k for k, s in enumerate(self.subsets)}

    def var(self, subset):
        """p variable for a position subset; zero for repeated indices, with
        the permutation sign for unsorted input."""
        subset = tuple(subset)
        if len(set(subset)) != len(subset):
            return self.ring.zero()
        sign, key = _sort_sign(subset)
        v = self.ring.var(self.index[key])
        return v if sign > 0 else -v


def _sort_sign(tup):
    lst = list(tup)
    sign = 1
    for i in range(len(lst)):
        for j in range(len(lst) - 1 - i):
            if lst[j] > lst[j + 1]:
                lst[j], lst[j + 1] = lst[j + 1], lst[j]
                sign = -sign
    return sign, tuple(lst)


def plucker_ideal(pring: PlueckerRing) -> Ideal:
    """The quadratic Grassmann-Pluecker exchange relations: for every
    (d)-subset alpha and (d+2)-subset beta,
        sum_k (-1)^k p_{alpha + beta_k} p_{beta - beta_k} = 0,
    deduplicated and sign-normalized."""
    r, n = pring.rank, pring.n
    ring = pring.ring
    gens = []
    seen = set()
    if r == 0 or r >= n:
        return Ideal(ring, ())
    for alpha in combinations(range(n), r - 1):
        aset = set(alpha)
        for beta in combinations(range(n), r + 1):
            f = ring.zero()
            for k, b in enumerate(beta):
                if b in aset:
                    continue
                pa = pring.var(alpha + (b,))
                pb = pring.var(tuple(x for x in beta if x != b))
                term = pa * pb
                f = f + term if k % 2 == 0 else f - term
            if f:
                f = f.primitive()
                if f.terms not in seen:
                    seen.add(f.terms)
                    gens.append(f)
    return Ideal(ring, gens)


def plucker_vector(config: PointConfiguration):
    """All maximal minors, as {sorted position tuple: field element}."""
    field = config.field
    r, n = config.nrows, config.ncols
    out = {}
    for sub in combinations(range(n), r):
        mat = [[config.entries[i][j] for j in sub] for i in range(r)]
        out[sub] = field_det(mat, field)
    return out


def grassmannian_ideal(matroid: Matroid, field: Field = QQ,
                       pring: PlueckerRing | None = None) -> Ideal:
    """Pluecker relations with the non-basis variables set to zero.  The
    generators only involve basis variables."""
    pring = pring or PlueckerRing(matroid, field=field)
    zeros = {pring.index[tuple(sorted(b))]: 0 for b in matroid.nonbases}
    base = plucker_ideal(pring)
    gens = []
    seen = set()
    for g in base.gens:
        h = g.evaluate(zeros, partial=True)
        if h:
            h = h.primitive()
            if h.terms not in seen:
                seen.add(h.terms)
                gens.append(h)
    ideal = Ideal(pring.ring, gens)
    ideal.pluecker = pring
    return ideal


class MHMatrix:
    """For hyperplane H: column 0 holds the slack variables of H's column,
    column J (one per independent spanning d-subset J of H) holds
    sgn(i,J) * p_{i u J}; realizations make all columns proportional."""

    def __init__(self, matroid, hyperplane, col_index, sym: SymbolicSlackMatrix,
                 pring: PlueckerRing, ring: PolyRing):
        self.matroid = matroid
        self.hyperplane = hyperplane
        self.col_index = col_index
        self.rows_elems = [i for i in range(matroid.n) if i not in hyperplane]
        self.subsets = matroid.independent_spanning_subsets(hyperplane)
        rows = []
        for i in self.rows_elems:
            row = [ring.var(sym.var_name(sym.var_index[(i, col_index)]))]
            for J in self.subsets:
                sign = 1 if sum(1 for j in J if j < i) % 2 == 0 else -1
                p = pring.var(tuple(sorted((i,) + J)))
                p = ring.convert(p)
                row.append(p if sign > 0 else -p)
            rows.append(row)
        self.rows = rows

    def two_minors(self, ring):
        gens = []
        seen = set()
        memo = {}
        ncols = 1 + len(self.subsets)
        for ri in combinations(range(len(self.rows)), 2):
            for ci in combinations(range(ncols), 2):
                det = _minor(self.rows, ri, ci, ring, memo)
                if det:
                    det = det.primitive()
                    if det.terms not in seen:
                        seen.add(det.terms)
                        gens.append(det)
        return gens


def joint_ring(matroid: Matroid, field: Field, hyperplane_order=None):
    """k[x, p_B]: slack variables first, then one p per basis."""
    sym = SymbolicSlackMatrix(matroid, hyperplane_order)
    pring = PlueckerRing(matroid, field=field)
    basis_subsets = [s for s in pring.subsets if frozenset(s) in matroid.bases]
    names = sym.names() + [_p_name([matroid.labels[i] for i in s]) for s in basis_subsets]
    ring = PolyRing(field, names)
    return sym, pring, ring


def mh_matrix(matroid: Matroid, hyperplane, field: Field = QQ,
              hyperplane_order=None) -> MHMatrix:
    sym, pring, ring = joint_ring(matroid, field, hyperplane_order)
    if not isinstance(hyperplane, frozenset):
        hyperplane = frozenset(matroid.pos_of(x) for x in hyperplane)
    col = sym.hyperplanes.index(hyperplane)
    return MHMatrix(matroid, hyperplane, col, sym, pring, ring)


def universal_ideal(matroid: Matroid, field: Field = QQ, hyperplane_order=None) -> Ideal:
    """Grassmannian ideal plus the rank-1 conditions of every hyperplane's
    substitution matrix, in the joint slack/Pluecker ring."""
    sym, pring, ring = joint_ring(matroid, field, hyperplane_order)
    gens = []
    gr = grassmannian_ideal(matroid, field, pring)
    for g in gr.gens:
        gens.append(ring.convert(g))
    seen = {g.terms for g in gens}
    for col, H in enumerate(sym.hyperplanes):
        mh = MHMatrix(matroid, H, col, sym, pring, ring)
        for g in mh.two_minors(ring):
            if g.terms not in seen:
                seen.add(g.terms)
                gens.append(g)
    ideal = Ideal(ring, gens)
    ideal.joint = (sym, pring)
    return ideal


def universal_projections(matroid: Matroid, field: Field = QQ,
                          hyperplane_order=None, budget: Budget | None = None,
                          max_variables: int = 48):
    """Eliminations of the universal ideal onto the Pluecker side and (after
    saturation by all variables) onto the slack side.

    Returns {"pluecker_side": Ideal|None, "slack_side": Ideal|None,
    "status": ...}; a side is None with status "unknown" on budget
    exhaustion."""
    U = universal_ideal(matroid, field, hyperplane_order)
    sym, pring = U.joint
    ring = U.ring
    if ring.nvars > max_variables:
        raise UsageError(
            f"universal ideal has {ring.nvars} variables (> {max_variables}); "
            "raise max_variables to force the attempt")
    x_names = set(sym.names())
    x_ix = [i for i, nm in enumerate(ring.names) if nm in x_names]
    p_ix = [i for i, nm in enumerate(ring.names) if nm not in x_names]
    out = {"pluecker_side": None, "slack_side": None, "status": "ok"}
    try:
        out["pluecker_side"] = eliminate(U, x_ix, budget=budget)
    except BudgetExceeded:
        out["status"] = "unknown"
    try:
        prod = ring.one()
        for i in range(ring.nvars):
            prod = prod * ring.var(i)
        sat = saturate(U, prod, budget=budget)
        out["slack_side"] = eliminate(sat, p_ix, budget=budget)
    except BudgetExceeded:
        out["status"] = "unknown"
    return out
