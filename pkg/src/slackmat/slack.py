"""Slack matrices (symbolic and numeric), slack ideals, spanning-forest
scaling, cycle/toric ideals, equivalence of slack matrices, and projective
uniqueness."""

from dataclasses import dataclass, field as dfield
from fractions import Fraction
from itertools import combinations
import math
import warnings

from .fields import Field, QQ
from .graph import NonIncidenceGraph
from .groebner import Budget, GBReport, Ideal, buchberger, normal_form, saturate
from .linalg import _minor, field_matrix_rank
from .matroid import Matroid, MatroidError, PointConfiguration
from .ring import Poly, PolyRing, UsageError


def _resolve_hyperplanes(matroid: Matroid, hyperplane_order):
    """Canonical hyperplane list, or a caller-supplied permutation of it
    (hyperplanes given as label tuples)."""
    canonical = matroid.hyperplanes()
    if hyperplane_order is None:
        return canonical
    chosen = [frozenset(matroid.pos_of(x) for x in H) for H in hyperplane_order]
    if sorted(chosen, key=sorted) != sorted(canonical, key=sorted):
        raise UsageError("hyperplane_order is not a permutation of the hyperplanes")
    return chosen


class SymbolicSlackMatrix:
    """Support pattern of the slack matrix: entry (i,j) is a fresh variable
    when element i avoids hyperplane H_j, zero otherwise.  Variables are
    numbered row-major over the support and display as x_{label,column}."""

    def __init__(self, matroid: Matroid, hyperplane_order=None):
        self.matroid = matroid
        self.hyperplanes = _resolve_hyperplanes(matroid, hyperplane_order)
        self.graph = NonIncidenceGraph(matroid, self.hyperplanes)
        self.var_pos = list(self.graph.edges)  # variable index -> (i, j)
        self.var_index = dict(self.graph.edge_index)  # (i, j) -> variable index
        self.nvars = len(self.var_pos)

    @property
    def shape(self):
        return (self.matroid.n, len(self.hyperplanes))

    def var_name(self, k):
        i, j = self.var_pos[k]
        return f"x_{{{self.matroid.label_of(i)},{j + 1}}}"

    def names(self):
        return [self.var_name(k) for k in range(self.nvars)]

    def ring(self, field: Field, order="grevlex") -> PolyRing:
        return PolyRing(field, self.names(), order)

    def entry_matrix(self, ring: PolyRing, fixed=None):
        """Rows of Poly entries; variables in `fixed` (a set of variable
        indices, or dict index->value) are substituted."""
        n, h = self.shape
        fixed = fixed or {}
        if not isinstance(fixed, dict):
            fixed = {k: 1 for k in fixed}
        # Over a scaled ring some variables may be absent; map by name.
        rows = []
        for i in range(n):
            row = []
            for j in range(h):
                k = self.var_index.get((i, j))
                if k is None:
                    row.append(ring.zero())
                elif k in fixed:
                    row.append(ring.const(fixed[k]))
                else:
                    row.append(ring.var(self.var_name(k)))
            rows.append(row)
        return rows

    def support(self):
        n, h = self.shape
        return [[(i, j) in self.var_index for j in range(h)] for i in range(n)]

    def __str__(self):
        n, h = self.shape
        cells = [[self.var_name(self.var_index[(i, j)]) if (i, j) in self.var_index else "0"
                  for j in range(h)] for i in range(n)]
        w = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(w) for c in row) for row in cells)


def symbolic_slack(matroid: Matroid, hyperplane_order=None) -> SymbolicSlackMatrix:
    return SymbolicSlackMatrix(matroid, hyperplane_order)


class NumericSlackMatrix:
    """A concrete n x h slack matrix over a field, with provenance."""

    def __init__(self, matroid, field, entries, hyperplanes=None, provenance=None):
        self.matroid = matroid
        self.field = field
        self.hyperplanes = list(hyperplanes) if hyperplanes is not None else matroid.hyperplanes()
        self.entries = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        self.provenance = provenance or {}
        n, h = matroid.n, len(self.hyperplanes)
        if len(self.entries) != n or any(len(r) != h for r in self.entries):
            raise UsageError(f"slack matrix must be {n} x {h}")

    @property
    def shape(self):
        return (len(self.entries), len(self.entries[0]))

    def rank(self):
        return field_matrix_rank(self.entries, self.field)

    def support_matches(self):
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if (x == 0) != (i in self.hyperplanes[j]):
                    return False
        return True

    def entry_by_var(self, sym: SymbolicSlackMatrix):
        """Values indexed by the symbolic matrix's variable numbering."""
        return [self.entries[i][j] for (i, j) in sym.var_pos]

    def rows_configuration(self) -> PointConfiguration:
        """The rows, as column vectors of a point configuration (the rows of
        a slack matrix realize the matroid)."""
        n, h = self.shape
        cols = [[self.entries[i][j] for i in range(n)] for j in range(h)]
        return PointConfiguration(self.field, cols)

    def scale(self, row_scalars, col_scalars):
        mul = self.field.mul
        r = [self.field.coerce(x) for x in row_scalars]
        t = [self.field.coerce(x) for x in col_scalars]
        entries = [[mul(mul(r[i], t[j]), self.entries[i][j])
                    for j in range(len(t))] for i in range(len(r))]
        return NumericSlackMatrix(self.matroid, self.field, entries, self.hyperplanes,
                                  dict(self.provenance, scaled=True))

    def reorder_columns(self, hyperplane_order):
        """Same matrix with columns permuted into the given hyperplane order."""
        target = _resolve_hyperplanes(self.matroid, hyperplane_order)
        perm = [self.hyperplanes.index(H) for H in target]
        entries = [[row[j] for j in perm] for row in self.entries]
        return NumericSlackMatrix(self.matroid, self.field, entries, target,
                                  dict(self.provenance))

    def to_json(self):
        return {
            "field": self.field.name,
            "entries": [[str(x) for x in row] for row in self.entries],
            "hyperplanes": [list(self.matroid.set_labels(H)) for H in self.hyperplanes],
        }

    def __str__(self):
        cells = [[str(x) for x in row] for row in self.entries]
        w = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(w) for c in row) for row in cells)


def slack_of_realization(config: PointConfiguration, matroid: Matroid | None = None,
                         hyperplane_order=None) -> NumericSlackMatrix:
    """Slack matrix V^T W of a realization.

    Each hyperplane normal is the generalized cross product of the
    lexicographically least independent spanning subset of the hyperplane
    (the determinant-with-unit-vectors formula), so output is deterministic;
    normals are only canonical up to a column scale."""
    if config.nrows > config.rank():
        config = config.full_rank_form()
    M = matroid if matroid is not None else Matroid.from_matrix(config)
    hyps = _resolve_hyperplanes(M, hyperplane_order)
    field = config.field
    r, n = config.nrows, config.ncols
    if M.n != n or M.rank != r:
        raise UsageError("configuration does not match the matroid")
    cols = [config.column(j) for j in range(n)]
    normals = []
    chosen = []
    for H in hyps:
        J = M.independent_spanning_subsets(H)
        if not J:
            raise MatroidError("hyperplane without independent spanning subset")
        sub = J[0]
        chosen.append(sub)
        normals.append(_cross(cols, sub, field))
    entries = [[_dot(cols[i], w, field) for w in normals] for i in range(n)]
    out = NumericSlackMatrix(M, field, entries, hyps,
                             provenance={"realization": config.to_json(),
                                         "normal_subsets": [list(s) for s in chosen]})
    return out


def _dot(u, v, field):
    acc = field.zero
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


def _cross(cols, subset, field):
    """Generalized cross product: component k is the signed d x d minor that
    the unit-vector column expansion produces."""
    from .linalg import field_det

    d1 = len(cols[subset[0]])
    mat = [[cols[j][i] for j in subset] for i in range(d1)]  # (d+1) x d
    out = []
    for k in range(d1):
        minor = [mat[i] for i in range(d1) if i != k]
        det = field_det(minor, field) if minor else field.one
        out.append(det if k % 2 == 0 else field.neg(det))
    return out


def check_slack(entries_or_matrix, matroid: Matroid, field: Field | None = None,
                hyperplane_order=None) -> bool:
    """support(S) == support(S_M) and rank(S) == rank(M): exactly the two
    conditions characterizing slack matrices of realizations."""
    if isinstance(entries_or_matrix, NumericSlackMatrix):
        S = entries_or_matrix
        hyps = S.hyperplanes
        entries, field = S.entries, S.field
    else:
        if field is None:
            raise UsageError("field required for raw entries")
        hyps = _resolve_hyperplanes(matroid, hyperplane_order)
        entries = [[field.coerce(x) for x in row] for row in entries_or_matrix]
    n, h = matroid.n, len(hyps)
    if len(entries) != n or any(len(r) != h for r in entries):
        raise UsageError(f"expected a {n} x {h} matrix")
    for i in range(n):
        for j, H in enumerate(hyps):
            if (entries[i][j] == 0) != (i in H):
                return False
    return field_matrix_rank(entries, field) == matroid.rank


def non_incidence_graph(matroid: Matroid, hyperplane_order=None) -> NonIncidenceGraph:
    return NonIncidenceGraph(matroid, _resolve_hyperplanes(matroid, hyperplane_order))


def spanning_forest_scaling(matroid: Matroid, hyperplane_order=None, forest=None):
    """Variable indices fixed to 1 by a maximal spanning forest of the
    non-incidence graph (deterministic BFS forest by default; a user-supplied
    forest, as a list of (element label, column index 1-based) pairs, is
    validated and used instead)."""
    sym = SymbolicSlackMatrix(matroid, hyperplane_order)
    G = sym.graph
    if forest is None:
        return sym, sorted(G.spanning_forest())
    edges = []
    for lab, col in forest:
        i = matroid.pos_of(lab)
        j = col - 1
        if (i, j) not in sym.var_index:
            raise UsageError(f"({lab},{col}) is not a support position")
        edges.append(sym.var_index[(i, j)])
    G.validate_forest(edges)
    return sym, sorted(edges)


@dataclass
class SlackContext:
    """Everything downstream passes around about one slack-ideal computation."""

    matroid: Matroid
    sym: SymbolicSlackMatrix
    ring: PolyRing
    fixed_vars: tuple      # variable indices fixed to 1 (empty when unscaled)
    free_vars: tuple       # variable indices that remain as ring variables
    minor_size: int

    def var_poly(self, k):
        return self.ring.var(self.sym.var_name(k))

    def product_of_variables(self):
        prod = self.ring.one()
        for name in self.ring.names:
            prod = prod * self.ring.var(name)
        return prod


def _slack_minor_generators(sym: SymbolicSlackMatrix, ring, fixed, generators):
    """(d+2)-minor generators of the (possibly scaled) symbolic slack matrix.

    "all": every (d+2)-minor.  "bordered": the minors bordering the diagonal
    submatrix on a basis' rows and its coatom columns; after saturation by
    the product of variables both generate the same ideal (the diagonal
    determinant is a unit monomial on the torus)."""
    M = sym.matroid
    n, h = sym.shape
    k = M.rank + 1
    rows = sym.entry_matrix(ring, fixed=fixed)
    if h < k or n < k:
        return None
    memo = {}
    gens = []
    seen = set()
    if generators == "all":
        for ri in combinations(range(n), k):
            for ci in combinations(range(h), k):
                det = _minor(rows, ri, ci, ring, memo)
                if det:
                    det = det.primitive()
                    if det.terms not in seen:
                        seen.add(det.terms)
                        gens.append(det)
        return gens
    if generators != "bordered":
        raise UsageError(f"unknown generator mode {generators!r}")
    basis = min(M.bases, key=sorted)
    brows = sorted(basis)
    bcols = []
    for i in brows:
        H = M.closure_of(basis - {i})
        bcols.append(sym.hyperplanes.index(H))
    for i in range(n):
        if i in basis:
            continue
        for j in range(h):
            if j in bcols:
                continue
            ri = tuple(sorted(brows + [i]))
            ci = tuple(sorted(bcols + [j]))
            det = _minor(rows, ri, ci, ring, memo)
            if det:
                det = det.primitive()
                if det.terms not in seen:
                    seen.add(det.terms)
                    gens.append(det)
    return gens


def minor_ideal(matroid: Matroid, field: Field, hyperplane_order=None,
                rows=None, columns=None, size=None) -> Ideal:
    """Ideal of all size-minors (default d+2) of the symbolic slack matrix,
    optionally restricted to a row/column submatrix (columns as 0-based
    indices into the hyperplane order).  Not saturated."""
    sym = SymbolicSlackMatrix(matroid, hyperplane_order)
    n, h = sym.shape
    rows = list(range(n)) if rows is None else list(rows)
    columns = list(range(h)) if columns is None else list(columns)
    k = size if size is not None else matroid.rank + 1
    used = sorted({sym.var_index[(i, j)] for i in rows for j in columns
                   if (i, j) in sym.var_index})
    ring = PolyRing(field, [sym.var_name(v) for v in used])
    sub = [[ring.var(sym.var_name(sym.var_index[(i, j)]))
            if (i, j) in sym.var_index else ring.zero()
            for j in columns] for i in rows]
    memo = {}
    gens = []
    seen = set()
    if len(rows) >= k and len(columns) >= k:
        for ri in combinations(range(len(rows)), k):
            for ci in combinations(range(len(columns)), k):
                det = _minor(sub, ri, ci, ring, memo)
                if det:
                    det = det.primitive()
                    if det.terms not in seen:
                        seen.add(det.terms)
                        gens.append(det)
    ideal = Ideal(ring, gens)
    ideal.slack = SlackContext(matroid, sym, ring, (), tuple(used), k)
    return ideal


def slack_ideal(matroid: Matroid, field: Field, scaling: str = "none",
                forest=None, hyperplane_order=None, generators: str = "auto",
                saturation: str = "auto", budget: Budget | None = None) -> Ideal:
    """The slack ideal: (d+2)-minors of the symbolic slack matrix, saturated
    by the product of the (surviving) variables.

    scaling "spanning-forest" fixes a maximal forest's variables to 1 first
    (the scaled slack ideal); `forest` optionally supplies the forest as
    (element label, column index) pairs.  generators "all" takes every
    (d+2)-minor, "bordered" the equivalent bordered family (same saturation),
    "auto" picks by minor count.
    """
    sym = SymbolicSlackMatrix(matroid, hyperplane_order)
    if scaling in ("spanning-forest", "forest"):
        _, fixed = spanning_forest_scaling(matroid, hyperplane_order, forest)
    elif scaling == "none":
        if forest is not None:
            raise UsageError("forest supplied but scaling is 'none'")
        fixed = []
    else:
        raise UsageError(f"unknown scaling mode {scaling!r}")
    fixed = tuple(fixed)
    free = tuple(k for k in range(sym.nvars) if k not in set(fixed))
    ring = PolyRing(field, [sym.var_name(k) for k in free])
    ctx = SlackContext(matroid, sym, ring, fixed, free, matroid.rank + 1)
    if generators == "auto":
        n, h = sym.shape
        k = matroid.rank + 1
        count = math.comb(n, k) * math.comb(h, k)
        generators = "all" if count <= 2000 else "bordered"
    gens = _slack_minor_generators(sym, ring, set(fixed), generators)
    if gens is None:
        warnings.warn("matrix has no (d+2)-minors; slack ideal is zero")
        ideal = Ideal(ring, ())
        ideal.slack = ctx
        return ideal
    ideal = Ideal(ring, gens)
    prod = ctx.product_of_variables()
    sat = saturate(ideal, prod, strategy=saturation, budget=budget)
    sat.slack = ctx
    return sat


# ---------------------------------------------------------------------------
# cycle ideals


def cycle_binomial(graph: NonIncidenceGraph, cycle, ring: PolyRing, sym,
                   slack_values=None):
    """x^{c+} - alpha_c x^{c-} for one cycle; alpha read off a slack matrix
    (all-ones when none given, the plain toric case)."""
    field = ring.field
    edges = graph.cycle_edges(cycle)
    plus = edges[0::2]
    minus = edges[1::2]
    sp = field.one
    sm = field.one
    if slack_values is not None:
        for e in plus:
            sp = field.mul(sp, slack_values[e])
        for e in minus:
            sm = field.mul(sm, slack_values[e])
    exps_p = [0] * ring.nvars
    exps_m = [0] * ring.nvars
    for e in plus:
        exps_p[ring.index[sym.var_name(e)]] += 1
    for e in minus:
        exps_m[ring.index[sym.var_name(e)]] += 1
    # s^{c-} x^{c+} - s^{c+} x^{c-}, normalized
    f = ring.from_dict({tuple(exps_p): sm, tuple(exps_m): field.neg(sp)})
    return f.primitive()


def cycle_ideal(source, matroid: Matroid | None = None, hyperplane_order=None,
                mode: str = "chordless", cap: int = 100000) -> Ideal:
    """Cycle ideal of a realization (or of a numeric slack matrix).

    One binomial per cycle of the non-incidence graph, with coefficient the
    alternating-product ratio of the slack entries.  `mode` "chordless"
    (default; the published generator tables correspond to these) or
    "simple" for all simple cycles; both generate the same ideal.
    """
    if isinstance(source, PointConfiguration):
        S = slack_of_realization(source, matroid, hyperplane_order)
    elif isinstance(source, NumericSlackMatrix):
        S = source
    else:
        raise UsageError("need a PointConfiguration or NumericSlackMatrix")
    if not S.support_matches():
        raise UsageError("slack entries vanish on the support")
    sym = SymbolicSlackMatrix(S.matroid, [S.matroid.set_labels(H) for H in S.hyperplanes])
    G = sym.graph
    vals = S.entry_by_var(sym)
    ring = sym.ring(S.field)
    cycles = G.chordless_cycles(cap) if mode == "chordless" else G.simple_cycles(cap)
    gens = [cycle_binomial(G, c, ring, sym, vals) for c in cycles]
    ideal = Ideal(ring, gens)
    ideal.slack = SlackContext(S.matroid, sym, ring, (), tuple(range(sym.nvars)),
                               S.matroid.rank + 1)
    return ideal


def cycle_kernel_check(S: NumericSlackMatrix, ideal: Ideal, samples: int = 8,
                       budget: Budget | None = None) -> bool:
    """Is `ideal` contained in the kernel of x_{ij} -> s_ij * r_i * t_j, and
    does a sample of kernel elements (fundamental-cycle binomials) lie in
    `ideal`?  Together: a Markov-basis-free two-sided containment check."""
    sym = SymbolicSlackMatrix(S.matroid, [S.matroid.set_labels(H) for H in S.hyperplanes])
    ring = ideal.ring
    field = S.field
    n, h = S.shape
    rt_ring = PolyRing(field, [f"r_{i}" for i in range(n)] + [f"t_{j}" for j in range(h)])
    vals = S.entry_by_var(sym)
    images = {}
    for k, (i, j) in enumerate(sym.var_pos):
        name = sym.var_name(k)
        if name in ring.index:
            exps = [0] * rt_ring.nvars
            exps[rt_ring.index[f"r_{i}"]] = 1
            exps[rt_ring.index[f"t_{j}"]] = 1
            images[ring.index[name]] = rt_ring.from_dict({tuple(exps): vals[k]})
    for g in ideal.gens:
        acc = rt_ring.zero()
        for m, c in g.terms:
            term = rt_ring.const(c)
            for v, e in enumerate(ring.unpack(m)):
                if e:
                    term = term * images[v] ** e
            acc = acc + term
        if acc:
            return False
    # sample kernel elements: fundamental-cycle binomials must sit in `ideal`
    G = sym.graph
    cycles = G.fundamental_cycles()[:samples]
    for c in cycles:
        b = cycle_binomial(G, c, ring, sym, vals)
        if not ideal.contains(ring.convert(b), budget):
            return False
    return True


# ---------------------------------------------------------------------------
# equivalence and uniqueness


def _forest_normalize(S: NumericSlackMatrix, forest_edges, sym):
    """Row/column scalings making the forest entries 1; returns (r, t)."""
    field = S.field
    G = sym.graph
    n = S.matroid.n
    r = [None] * n
    t = [None] * len(S.hyperplanes)
    vals = {e: S.entries[i][j] for e, (i, j) in enumerate(sym.var_pos)}
    adj = {}
    for e in forest_edges:
        i, j = sym.var_pos[e]
        adj.setdefault(("r", i), []).append(("t", j, e))
        adj.setdefault(("t", j), []).append(("r", i, e))
    for start in range(n + len(S.hyperplanes)):
        kind, idx = ("r", start) if start < n else ("t", start - n)
        cur = r if kind == "r" else t
        if cur[idx] is not None:
            continue
        cur[idx] = field.one
        stack = [(kind, idx)]
        while stack:
            k0, i0 = stack.pop()
            for (k1, i1, e) in adj.get((k0, i0), []):
                tgt = r if k1 == "r" else t
                if tgt[i1] is None:
                    src = r if k0 == "r" else t
                    # want r_i * t_j * s_ij = 1 along forest edges
                    tgt[i1] = field.inv(field.mul(src[i0], vals[e]))
                    stack.append((k1, i1))
    r = [x if x is not None else field.one for x in r]
    t = [x if x is not None else field.one for x in t]
    return r, t


def equivalence(S1: NumericSlackMatrix, S2: NumericSlackMatrix, mode: str = "projective"):
    """Decide linear (column scaling) or projective (row+column scaling)
    equivalence.  Returns (bool, witness) with witness = (row_scalars,
    col_scalars) such that scaling S1 gives S2, or a reason string."""
    if S1.matroid != S2.matroid:
        return False, "different matroids"
    if S1.field != S2.field:
        return False, "different fields"
    if [frozenset(h) for h in S1.hyperplanes] != [frozenset(h) for h in S2.hyperplanes]:
        return False, "different hyperplane orders"
    field = S1.field
    n, h = S1.shape
    for i in range(n):
        for j in range(h):
            if (S1.entries[i][j] == 0) != (S2.entries[i][j] == 0):
                return False, "support mismatch"
    if mode == "linear":
        t = []
        for j in range(h):
            ratio = None
            for i in range(n):
                if S1.entries[i][j] == 0:
                    continue
                q = field.div(S2.entries[i][j], S1.entries[i][j])
                if ratio is None:
                    ratio = q
                elif ratio != q:
                    return False, f"column {j + 1} is not a uniform rescaling"
            t.append(ratio if ratio is not None else field.one)
        return True, ([field.one] * n, t)
    if mode != "projective":
        raise UsageError(f"unknown mode {mode!r}")
    sym = SymbolicSlackMatrix(S1.matroid, [S1.matroid.set_labels(H) for H in S1.hyperplanes])
    forest = sym.graph.spanning_forest()
    r1, t1 = _forest_normalize(S1, forest, sym)
    r2, t2 = _forest_normalize(S2, forest, sym)
    N1 = S1.scale(r1, t1)
    N2 = S2.scale(r2, t2)
    if N1.entries != N2.entries:
        return False, "normalized matrices differ"
    r = [field.div(a, b) for a, b in zip(r1, r2)]
    t = [field.div(a, b) for a, b in zip(t1, t2)]
    return True, (r, t)


@dataclass
class UniquenessResult:
    status: str                      # unique | not_unique | no_realization | unknown
    matrix: NumericSlackMatrix | None = None
    evidence: str | None = None
    obstruction: Poly | None = None
    non_reduced: bool = False
    assignments: dict = dfield(default_factory=dict)


def _univariate_elements(basis):
    out = []
    for g in basis:
        vs = g.variables()
        if len(vs) == 1 and g.degree() >= 1:
            out.append((g, vs[0]))
    return out


def _field_roots(f: Poly, v: int):
    """Roots in the coefficient field of a univariate polynomial, with
    multiplicities; rational candidates via the rational root theorem,
    GF(p) by full scan."""
    ring = f.ring
    field = ring.field
    f = f.primitive()
    coeffs = {ring.unpack(m)[v]: c for m, c in f.terms}
    if field.char:
        cands = list(range(field.char))
    else:
        low = min(coeffs)
        shifted = {e - low: int(c) for e, c in coeffs.items()}
        cands = {Fraction(0)} if low > 0 else set()
        for p_ in _divisors(abs(int(shifted[0]))):
            for q_ in _divisors(abs(int(shifted[max(shifted)]))):
                cands.add(Fraction(p_, q_))
                cands.add(Fraction(-p_, q_))
        cands = sorted(cands)
    roots = []
    for c in cands:
        x = field.coerce(c)
        if _eval_univariate(coeffs, x, field) == 0:
            mult = 1
            g = _deflate(coeffs, x, field)
            while g is not None and _eval_univariate(g, x, field) == 0:
                mult += 1
                g = _deflate(g, x, field)
            roots.append((x, mult))
    return roots


def _eval_univariate(coeffs, x, field):
    val = field.zero
    for e, c in coeffs.items():
        val = field.add(val, field.mul(field.coerce(c), field.coerce(x**e)))
    return val


def _deflate(coeffs, root, field):
    """Divide the univariate (as {exp: coeff}) by (x - root); None if the
    degree drops to zero."""
    deg = max(coeffs)
    if deg <= 1:
        return None
    dense = [field.coerce(coeffs.get(e, 0)) for e in range(deg + 1)]
    out = [field.zero] * deg
    carry = field.zero
    for e in range(deg, 0, -1):
        carry = field.add(dense[e], field.mul(carry, field.coerce(root)))
        out[e - 1] = carry
    return {e: c for e, c in enumerate(out) if c != 0}


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def is_squarefree_univariate(f: Poly, v: int) -> bool:
    ring = f.ring
    field = ring.field
    coeffs = {}
    for m, c in f.terms:
        coeffs[ring.unpack(m)[v]] = c
    deriv = {e - 1: field.mul(field.coerce(e), c) for e, c in coeffs.items() if e >= 1}
    deriv = {e: c for e, c in deriv.items() if c != 0}
    if not deriv:
        return False  # p | deg: treat pure p-th powers as non-squarefree
    g = _uni_gcd(coeffs, deriv, field)
    return max(g) == 0


def _uni_gcd(a, b, field):
    def norm(d):
        return {e: c for e, c in d.items() if c != 0}

    a, b = norm(a), norm(b)
    while b:
        # a mod b
        da, db = max(a), max(b)
        while a and max(a) >= db:
            shift = max(a) - db
            factor = field.div(a[max(a)], b[db])
            for e, c in b.items():
                prev = a.get(e + shift, field.zero)
                a[e + shift] = field.sub(prev, field.mul(factor, c))
            a = norm(a)
        a, b = b, a
        if not b:
            break
    return a if a else {0: field.one}


def projectively_unique(matroid: Matroid, field: Field, forest=None,
                        hyperplane_order=None, budget: Budget | None = None,
                        _ideal=None) -> UniquenessResult:
    """Classify the scaled slack ideal's reduced GB: a point (all variables
    pinned to nonzero constants) means projectively unique; a univariate with
    several field roots or positive dimension means not; a unit ideal means
    no realization over the field at all."""
    try:
        ideal = _ideal if _ideal is not None else slack_ideal(
            matroid, field, scaling="spanning-forest", forest=forest,
            hyperplane_order=hyperplane_order, budget=budget)
        ctx = ideal.slack
        basis = ideal.basis(budget=budget)
    except Exception as e:  # budget exhaustion
        from .groebner import BudgetExceeded
        if isinstance(e, BudgetExceeded):
            return UniquenessResult(status="unknown", evidence=str(e))
        raise
    assignments = {}
    non_reduced = False
    ring = ideal.ring
    while True:
        if any(g.degree() == 0 for g in basis):
            return UniquenessResult(status="no_realization",
                                    evidence="scaled slack ideal is the unit ideal")
        linear = {}
        for g in basis:
            vs = g.variables()
            if len(vs) == 1 and g.degree() == 1:
                v = vs[0]
                cs = {ring.unpack(m)[v]: c for m, c in g.terms}
                val = field.neg(field.div(field.coerce(cs.get(0, 0)), field.coerce(cs[1])))
                linear[v] = val
        remaining = [v for v in range(ring.nvars)
                     if v not in assignments and v not in linear]
        if not remaining and len(linear) + len(assignments) == ring.nvars:
            assignments.update(linear)
            if any(val == 0 for val in assignments.values()):
                return UniquenessResult(status="no_realization",
                                        evidence="pinned variable is zero")
            mat = _reconstruct_matrix(ctx, assignments, field)
            return UniquenessResult(status="unique", matrix=mat,
                                    non_reduced=non_reduced, assignments=dict(assignments))
        progressed = False
        for g, v in _univariate_elements(basis):
            if g.degree() == 1:
                continue
            roots = _field_roots(g, v)
            distinct = [rc for rc in roots]
            if len(distinct) >= 2:
                return UniquenessResult(status="not_unique", obstruction=g,
                                        evidence=f"{g} has {len(distinct)} roots in {field.name}")
            if not distinct:
                return UniquenessResult(status="no_realization", obstruction=g,
                                        evidence=f"{g} has no root in {field.name}")
            root, mult = distinct[0]
            if not is_squarefree_univariate(g, v):
                non_reduced = True
            if mult < g.degree():
                # a root plus a rootless factor: the field points all use the root
                non_reduced = non_reduced or mult > 1
            assignments[v] = root
            subst = [h.evaluate({v: root}, partial=True) for h in basis]
            subst = [h for h in subst if h]
            try:
                basis = Ideal(ring, subst).basis(budget=budget)
            except Exception:
                return UniquenessResult(status="unknown", evidence="budget exhausted")
            progressed = True
            break
        if progressed:
            continue
        # no univariate to use; decide by dimension
        from .hilbert import dimension_and_degree
        try:
            dim, _deg = dimension_and_degree(Ideal(ring, basis), budget)
        except Exception:
            return UniquenessResult(status="unknown", evidence="budget exhausted")
        if dim > 0:
            return UniquenessResult(status="not_unique",
                                    evidence=f"scaled slack variety has dimension {dim}")
        return UniquenessResult(status="unknown",
                                evidence="zero-dimensional but not in split position")


def _reconstruct_matrix(ctx: SlackContext, assignments, field) -> NumericSlackMatrix:
    sym = ctx.sym
    n, h = sym.shape
    entries = [[field.zero] * h for _ in range(n)]
    name_to_assign = {}
    for v, val in assignments.items():
        name_to_assign[ctx.ring.names[v]] = val
    for k, (i, j) in enumerate(sym.var_pos):
        if k in ctx.fixed_vars:
            entries[i][j] = field.one
        else:
            entries[i][j] = field.coerce(name_to_assign[sym.var_name(k)])
    return NumericSlackMatrix(ctx.matroid, field, entries, sym.hyperplanes,
                              provenance={"from": "scaled slack ideal point"})
