"""Realizability decisions: monomial (final-polynomial) certificates,
unit-ideal tests, obstruction polynomials from scaled slack ideals, the
finite-field brute-force oracle, and re-checkable Certificate objects.

Soundness over a non-closed field: a monomial certificate or unit ideal
proves non-realizability; their absence proves nothing, so the pipeline
returns Unknown rather than guessing.
"""

from dataclasses import dataclass, field as dfield
from fractions import Fraction
from itertools import combinations
import time

from .fields import Field, GF, QQ, parse_field
from .groebner import Budget, BudgetExceeded, Ideal, normal_form
from .linalg import field_det
from .matroid import Matroid, PointConfiguration
from .ring import Poly, TermOrder, UsageError
from .slack import (SymbolicSlackMatrix, _field_roots, is_squarefree_univariate,
                    minor_ideal, projectively_unique, slack_ideal, symbolic_slack)


@dataclass
class Certificate:
    kind: str          # NonRealizable-Monomial | NonRealizable-UnitIdeal |
                       # NonRealizable-Exhaustion | Realizable-Witness | Unknown
    field: str
    payload: dict
    seconds: float = 0.0

    def to_json(self):
        return {"kind": self.kind, "field": self.field,
                "payload": self.payload, "seconds": round(self.seconds, 3)}

    @property
    def conclusive(self):
        return self.kind != "Unknown"

    @property
    def exit_code(self):
        if self.kind == "Realizable-Witness":
            return 0
        if self.kind.startswith("NonRealizable"):
            return 1
        return 2


@dataclass
class StrategyPlan:
    """Ordered strategies; the first conclusive result wins.

    (a) product-of-variables monomial test on column submatrices
        (explicit `column_subsets` as lists of hyperplane label tuples, else
        a heuristic starting from the non-basis hyperplanes);
    (b) the same on the full matrix;
    (c) scaled slack ideal: unit test, plus witness extraction when the
        reduced GB pins a unique point;
    (d) finite-field oracle search (witness or exhaustion proof).
    """

    submatrix_monomial: bool = True
    column_subsets: list | None = None
    full_monomial: bool = True
    scaled_unit: bool = True
    oracle: bool = True
    forest: list | None = None
    budget: Budget | None = None
    oracle_nodes: int = 2_000_000
    max_minors: int = 20000       # skip heuristic submatrices beyond this
    max_scaled_vars: int = 80     # skip the scaled-ideal stage beyond this
    heuristic_stage_seconds: float = 60.0
    # cap per heuristic monomial stage when no overall budget is given, so a
    # slow minor GB cannot starve the later (often cheaper) strategies;
    # explicit column subsets always get the full budget


def _heuristic_column_subsets(matroid: Matroid, hyperplanes):
    """Column subsets to try: hyperplanes containing a non-basis first (they
    carry the dependencies), then everything."""
    d = matroid.rank - 1
    nonbasis_cols = [j for j, H in enumerate(hyperplanes) if len(H) > d]
    out = []
    if nonbasis_cols and len(nonbasis_cols) < len(hyperplanes):
        out.append(nonbasis_cols)
    out.append(list(range(len(hyperplanes))))
    return out


def monomial_certificate(matroid: Matroid, field: Field, columns=None,
                         hyperplane_order=None, monomial=None, size=None,
                         budget: Budget | None = None):
    """Try `monomial` (default: the product of the submatrix's variables) for
    membership in the (d+2)-minor ideal of the column submatrix.  Returns a
    Certificate or None."""
    t0 = time.monotonic()
    ideal = minor_ideal(matroid, field, hyperplane_order=hyperplane_order,
                        columns=columns, size=size)
    if not ideal.gens:
        return None
    ring = ideal.ring
    if monomial is None:
        mono = ring.one()
        for nm in ring.names:
            mono = mono * ring.var(nm)
    else:
        mono = ring.parse(monomial) if isinstance(monomial, str) else ring.convert(monomial)
    try:
        gb = ideal.basis(budget=budget)
        if normal_form(mono, gb, budget):
            return None
    except BudgetExceeded:
        return None
    cols = list(columns) if columns is not None else list(range(len(ideal.slack.sym.hyperplanes)))
    return Certificate(
        kind="NonRealizable-Monomial",
        field=field.name,
        payload={
            "monomial": str(mono),
            "columns": [list(matroid.set_labels(ideal.slack.sym.hyperplanes[j])) for j in cols],
            "minor_size": ideal.slack.minor_size,
            "gb_size": len(gb),
        },
        seconds=time.monotonic() - t0,
    )


def _minor_count(matroid, sym, cols):
    import math as _math
    k = matroid.rank + 1
    return _math.comb(matroid.n, k) * _math.comb(len(cols), k)


def final_polynomial_search(matroid: Matroid, field: Field,
                            column_subsets="heuristic", hyperplane_order=None,
                            budget: Budget | None = None, max_minors: int = 20000):
    """Search column submatrices for a monomial certificate, trying the
    product of the submatrix's variables first.  Returns (monomial string,
    column label lists) or None; absence proves nothing.  Heuristic subsets
    whose minor count exceeds `max_minors` are skipped (explicit subsets are
    always attempted)."""
    sym = symbolic_slack(matroid, hyperplane_order)
    if column_subsets == "heuristic":
        subsets = [c for c in _heuristic_column_subsets(matroid, sym.hyperplanes)
                   if _minor_count(matroid, sym, c) <= max_minors]
    else:
        subsets = []
        for cols in column_subsets:
            subsets.append([sym.hyperplanes.index(frozenset(matroid.pos_of(x) for x in H))
                            for H in cols])
    for cols in subsets:
        cert = monomial_certificate(matroid, field, columns=cols,
                                    hyperplane_order=hyperplane_order, budget=budget)
        if cert is not None:
            return cert.payload["monomial"], cert.payload["columns"]
    return None


@dataclass
class ObstructionReport:
    variable: str
    poly: str
    degree: int
    roots: list            # [(root as str, multiplicity)]
    squarefree: bool
    rational_roots: int
    discriminant: int | None = None
    real_roots: bool | None = None

    def to_json(self):
        return self.__dict__.copy()


def obstruction_polynomials(matroid: Matroid, field: Field, forest=None,
                            hyperplane_order=None, budget: Budget | None = None):
    """Univariate elements of the reduced lex GB of the scaled slack ideal,
    each with its root status over the field.  Returns (reports, status);
    status is "unit" for the unit ideal, "partial" on budget exhaustion."""
    try:
        ideal = slack_ideal(matroid, field, scaling="spanning-forest",
                            forest=forest, hyperplane_order=hyperplane_order,
                            budget=budget)
        basis = ideal.basis(budget=budget)
    except BudgetExceeded:
        return [], "partial"
    if any(g.degree() == 0 for g in basis):
        return [], "unit"
    ring = ideal.ring
    try:
        lex = ideal.groebner(TermOrder.lex(ring.nvars), budget=budget)
        lex_basis = lex.basis
    except BudgetExceeded:
        lex_basis = basis  # fall back to the default-order GB univariates
        status = "partial"
    else:
        status = "ok"
    out = []
    for g in lex_basis:
        vs = g.variables()
        if len(vs) != 1 or g.degree() < 1:
            continue
        v = vs[0]
        lring = g.ring
        roots = _field_roots(g, v)
        coeffs = {lring.unpack(m)[v]: c for m, c in g.terms}
        disc = None
        real = None
        if field.char == 0 and max(coeffs) == 2:
            a = int(coeffs.get(2, 0))
            b = int(coeffs.get(1, 0))
            c = int(coeffs.get(0, 0))
            disc = b * b - 4 * a * c
            real = disc >= 0
        out.append(ObstructionReport(
            variable=lring.names[v],
            poly=str(g),
            degree=g.degree(),
            roots=[(str(r), m) for r, m in roots],
            squarefree=is_squarefree_univariate(g, v),
            rational_roots=len(roots) if field.char == 0 else len(roots),
            discriminant=disc,
            real_roots=real,
        ))
    return out, status


# ---------------------------------------------------------------------------
# finite-field oracle


def _projective_points(p, r):
    """Canonical representatives (first nonzero coordinate 1) of PG(r-1, p),
    in lexicographic order."""
    out = []

    def rec(prefix, seen_nonzero):
        if len(prefix) == r:
            if seen_nonzero:
                out.append(tuple(prefix))
            return
        if seen_nonzero:
            for x in range(p):
                rec(prefix + [x], True)
        else:
            rec(prefix + [0], False)
            rec(prefix + [1], True)

    rec([], False)
    return out


class OracleResult:
    def __init__(self, status, config=None, nodes=0, p=None):
        self.status = status      # found | exhausted | unknown
        self.config = config
        self.nodes = nodes
        self.p = p

    def __repr__(self):
        return f"OracleResult({self.status}, nodes={self.nodes})"


def oracle_search(matroid: Matroid, p: int, max_nodes: int = 2_000_000,
                  budget: Budget | None = None) -> OracleResult:
    """Brute-force hunt for a realization over GF(p) in canonical form: the
    lexicographically least basis becomes the identity, the remaining columns
    run over canonical projective points, pruned by partial matroid
    consistency.  A completed exhaustion proves GF(p)-non-realizability."""
    field = GF(p)
    r, n = matroid.rank, matroid.n
    basis0 = sorted(min(matroid.bases, key=sorted))
    others = [i for i in range(n) if i not in basis0]
    pts = _projective_points(p, r)
    if len(pts) < n:  # a simple rank-r matroid needs n distinct points
        return OracleResult("exhausted", nodes=0, p=p)
    cols = [None] * n
    for k, i in enumerate(basis0):
        cols[i] = tuple(1 if j == k else 0 for j in range(r))
    deadline = None
    if budget and budget.seconds:
        deadline = time.monotonic() + budget.seconds
    nodes = 0

    # subsets become checkable once their last position (in assignment
    # order: basis0 first, then `others` ascending) is filled
    check_at = {i: [] for i in others}
    for sub in combinations(range(n), r):
        last = max(sub, key=lambda x: (x in others, others.index(x) if x in others else -1))
        if last in others:
            check_at[last].append(sub)

    def consistent(pos):
        for sub in check_at[pos]:
            mat = [[cols[j][i] for j in sub] for i in range(r)]
            det = field_det(mat, field)
            if (det != 0) != matroid.is_basis(sub):
                return False
        return True

    def search(k):
        nonlocal nodes
        if k == len(others):
            return True
        pos = others[k]
        for pt in pts:
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExceeded("oracle node budget exhausted")
            if deadline is not None and nodes % 512 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded("oracle time budget exhausted")
            if pt in cols:
                continue  # parallel/repeated projective point: not simple
            cols[pos] = pt
            if consistent(pos) and search(k + 1):
                return True
            cols[pos] = None
        return False

    try:
        found = search(0)
    except BudgetExceeded:
        return OracleResult("unknown", nodes=nodes, p=p)
    if not found:
        return OracleResult("exhausted", nodes=nodes, p=p)
    entries = [[cols[j][i] for j in range(n)] for i in range(r)]
    config = PointConfiguration(field, entries)
    if Matroid.from_matrix(config, labels=list(matroid.labels)) != matroid:
        raise AssertionError("oracle returned a non-realization (internal error)")
    return OracleResult("found", config=config, nodes=nodes, p=p)


# ---------------------------------------------------------------------------
# the pipeline


def certify(matroid: Matroid, field: Field, plan: StrategyPlan | None = None,
            hyperplane_order=None) -> Certificate:
    """Run the strategy plan; first conclusive certificate wins.  Unknown
    only on budget exhaustion / inconclusive strategies."""
    plan = plan or StrategyPlan()
    budget = plan.budget
    stage_budget = budget if budget is not None else Budget(
        seconds=plan.heuristic_stage_seconds)
    t0 = time.monotonic()
    sym = symbolic_slack(matroid, hyperplane_order)

    if plan.submatrix_monomial and plan.column_subsets:
        for cols in plan.column_subsets:
            col_ix = [sym.hyperplanes.index(frozenset(matroid.pos_of(x) for x in H))
                      for H in cols]
            cert = monomial_certificate(matroid, field, columns=col_ix,
                                        hyperplane_order=hyperplane_order, budget=budget)
            if cert:
                cert.seconds = time.monotonic() - t0
                return cert
    elif plan.submatrix_monomial:
        for cols in _heuristic_column_subsets(matroid, sym.hyperplanes)[:-1]:
            if _minor_count(matroid, sym, cols) > plan.max_minors:
                continue
            cert = monomial_certificate(matroid, field, columns=cols,
                                        hyperplane_order=hyperplane_order,
                                        budget=stage_budget)
            if cert:
                cert.seconds = time.monotonic() - t0
                return cert

    if plan.full_monomial:
        if _minor_count(matroid, sym, range(sym.shape[1])) <= plan.max_minors:
            cert = monomial_certificate(matroid, field,
                                        hyperplane_order=hyperplane_order,
                                        budget=stage_budget)
            if cert:
                cert.seconds = time.monotonic() - t0
                return cert

    free_count = sym.nvars - (sym.graph.n_vertices - len(sym.graph.components()))
    if plan.scaled_unit and free_count <= plan.max_scaled_vars:
        try:
            res = projectively_unique(matroid, field, forest=plan.forest,
                                      hyperplane_order=hyperplane_order, budget=budget)
        except BudgetExceeded:
            res = None
        if (res is not None and res.status == "no_realization"
                and res.obstruction is None):
            # the unit-ideal case; a rootless univariate obstruction is sound
            # too but stays advisory (see obstruction_polynomials)
            return Certificate(
                kind="NonRealizable-UnitIdeal", field=field.name,
                payload={"evidence": res.evidence, "forest": plan.forest},
                seconds=time.monotonic() - t0)
        if res is not None and res.status == "unique" and res.matrix is not None:
            config = res.matrix.rows_configuration()
            return Certificate(
                kind="Realizable-Witness", field=field.name,
                payload={"matrix": config.to_json(),
                         "via": "unique point of the scaled slack ideal"},
                seconds=time.monotonic() - t0)

    if plan.oracle and field.char:
        res = oracle_search(matroid, field.char, max_nodes=plan.oracle_nodes,
                            budget=budget)
        if res.status == "found":
            return Certificate(
                kind="Realizable-Witness", field=field.name,
                payload={"matrix": res.config.to_json(), "via": "oracle search",
                         "nodes": res.nodes},
                seconds=time.monotonic() - t0)
        if res.status == "exhausted":
            return Certificate(
                kind="NonRealizable-Exhaustion", field=field.name,
                payload={"nodes": res.nodes, "p": field.char},
                seconds=time.monotonic() - t0)

    return Certificate(kind="Unknown", field=field.name, payload={},
                       seconds=time.monotonic() - t0)


def verify_certificate(cert: Certificate, matroid: Matroid,
                       hyperplane_order=None, budget: Budget | None = None) -> bool:
    """Independent re-validation of a certificate from its payload alone."""
    field = parse_field(cert.field)
    if cert.kind == "NonRealizable-Monomial":
        sym = symbolic_slack(matroid, hyperplane_order)
        cols = [sym.hyperplanes.index(frozenset(matroid.pos_of(x) for x in H))
                for H in cert.payload["columns"]]
        ideal = minor_ideal(matroid, field, hyperplane_order=hyperplane_order,
                            columns=cols, size=cert.payload.get("minor_size"))
        mono = ideal.ring.parse(cert.payload["monomial"])
        if not mono or len(mono.terms) != 1:
            return False
        gb = ideal.basis(budget=budget)
        return not normal_form(mono, gb, budget)
    if cert.kind == "NonRealizable-UnitIdeal":
        ideal = slack_ideal(matroid, field, scaling="spanning-forest",
                            forest=cert.payload.get("forest"),
                            hyperplane_order=hyperplane_order, budget=budget)
        return ideal.is_unit(budget)
    if cert.kind == "Realizable-Witness":
        config = PointConfiguration.from_json(cert.payload["matrix"])
        got = Matroid.from_matrix(config, labels=list(matroid.labels))
        return got == matroid
    if cert.kind == "NonRealizable-Exhaustion":
        res = oracle_search(matroid, cert.payload["p"],
                            max_nodes=max(2_000_000, 2 * cert.payload["nodes"]),
                            budget=budget)
        return res.status == "exhausted"
    return cert.kind == "Unknown"
