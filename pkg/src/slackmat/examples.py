"""Built-in regression examples: the bundled matroids with their published
facts, re-derived and re-validated on demand (CLI `examples` subcommand)."""

import json
from importlib import resources
from itertools import combinations

from .certify import (StrategyPlan, certify, final_polynomial_search,
                      monomial_certificate, obstruction_polynomials,
                      oracle_search, verify_certificate)
from .fields import GF, QQ
from .groebner import Budget, BudgetExceeded
from .hilbert import dimension_and_degree
from .matroid import Matroid, PointConfiguration
from .slack import (NumericSlackMatrix, check_slack, cycle_ideal, equivalence,
                    non_incidence_graph, projectively_unique, slack_ideal,
                    slack_of_realization, symbolic_slack)

EXAMPLES = ("m4", "fano", "nonfano", "vamos", "m8", "perles", "u23", "u24")


def fixture(name: str) -> dict:
    with resources.files("slackmat.fixtures").joinpath(f"{name}.json").open() as fh:
        return json.load(fh)


def load_example(name: str):
    data = fixture(name)
    matroid = Matroid.from_json(data)
    return matroid, data


def _meta(data):
    return {
        "hyperplane_order": [tuple(h) for h in data.get("hyperplane_order", [])] or None,
        "forest": [tuple(e) for e in data.get("forest", [])] or None,
        "column_subsets": [[tuple(h) for h in sub] for sub in data.get("column_subsets", [])] or None,
    }


def _check_m4(budget):
    matroid, data = load_example("m4")
    meta = _meta(data)
    order = meta["hyperplane_order"]
    out = {}
    V = PointConfiguration.from_json(data["realization"])
    S = slack_of_realization(V, matroid, order)
    expected = NumericSlackMatrix(matroid, QQ, data["expected_slack_matrix"],
                                  S.hyperplanes)
    out["slack matrix reproduced"] = S.entries == expected.entries
    out["slack matrix valid"] = check_slack(S, matroid)
    G = non_incidence_graph(matroid, order)
    out["72 induced cycles"] = len(G.chordless_cycles()) == 72
    C = cycle_ideal(V, matroid, order)
    I = slack_ideal(matroid, QQ, hyperplane_order=order, budget=budget)
    out["slack ideal = cycle ideal"] = I.equals(C, budget)
    dim, deg = dimension_and_degree(I, budget)
    out["codimension 12, degree 293"] = (I.ring.nvars - dim, deg) == (12, 293)
    return out


def _check_fano(budget):
    matroid, data = load_example("fano")
    meta = _meta(data)
    order = meta["hyperplane_order"]
    out = {}
    cert = certify(matroid, QQ, StrategyPlan(budget=budget), hyperplane_order=order)
    out["non-realizable over Q"] = cert.kind == "NonRealizable-Monomial"
    out["certificate reverified"] = verify_certificate(cert, matroid,
                                                       hyperplane_order=order,
                                                       budget=budget)
    res = oracle_search(matroid, 2, budget=budget)
    out["realization over GF(2) found"] = res.status == "found"
    sym = symbolic_slack(matroid, order)
    ones = [[1 if (i, j) in sym.var_index else 0 for j in range(7)] for i in range(7)]
    S = NumericSlackMatrix(matroid, GF(2), ones, sym.hyperplanes)
    out["all-ones matrix is a slack matrix over GF(2)"] = check_slack(S, matroid)
    return out


def _check_nonfano(budget):
    matroid, data = load_example("nonfano")
    meta = _meta(data)
    order = meta["hyperplane_order"]
    out = {}
    res = projectively_unique(matroid, QQ, forest=meta["forest"],
                              hyperplane_order=order, budget=budget)
    out["projectively unique over Q"] = res.status == "unique"
    exp = data["expected_matrix"]
    E = NumericSlackMatrix(matroid, QQ, exp["entries"],
                           [frozenset(matroid.pos_of(x) for x in H)
                            for H in exp["hyperplane_order"]])
    if res.matrix is not None:
        ok, _ = equivalence(res.matrix, E.reorder_columns(order), "projective")
        out["matches the reference matrix"] = ok
    else:
        out["matches the reference matrix"] = False
    out["GF(2): oracle exhausts"] = oracle_search(matroid, 2, budget=budget).status == "exhausted"
    I2 = slack_ideal(matroid, GF(2), scaling="spanning-forest",
                     forest=meta["forest"], hyperplane_order=order, budget=budget)
    out["GF(2): scaled slack ideal is unit"] = I2.is_unit(budget)
    return out


def _check_vamos(budget):
    matroid, data = load_example("vamos")
    meta = _meta(data)
    out = {}
    out["41 hyperplanes"] = len(matroid.hyperplanes()) == 41
    sym = symbolic_slack(matroid)
    cols = [sym.hyperplanes.index(frozenset(matroid.pos_of(x) for x in H))
            for H in meta["column_subsets"][0]]
    cert = monomial_certificate(matroid, GF(2), columns=cols, budget=budget)
    out["GF(2): submatrix monomial certificate"] = cert is not None
    if cert is not None:
        out["certificate reverified"] = verify_certificate(cert, matroid, budget=budget)
    return out


def _check_m8(budget):
    matroid, data = load_example("m8")
    meta = _meta(data)
    order = meta["hyperplane_order"]
    out = {}
    reports, status = obstruction_polynomials(matroid, QQ, forest=meta["forest"],
                                              hyperplane_order=order, budget=budget)
    target = data["obstruction"].replace(" ", "")
    hits = [r for r in reports if r.poly.replace(" ", "") == target]
    out["obstruction quadratic found"] = bool(hits) and status == "ok"
    out["no roots in Q, none real"] = all(
        not r.roots and r.real_roots is False for r in hits) and bool(hits)
    got = final_polynomial_search(matroid, QQ, budget=budget or Budget(seconds=60))
    out["no monomial certificate"] = got is None
    return out


def _check_perles(budget):
    matroid, data = load_example("perles")
    meta = _meta(data)
    order = meta["hyperplane_order"]
    out = {}
    I = slack_ideal(matroid, QQ, scaling="spanning-forest", forest=meta["forest"],
                    hyperplane_order=order, budget=budget)
    basis = I.basis(budget=budget)
    target = data["obstruction"].replace(" ", "")
    out["quadratic obstruction over Q"] = any(
        str(g).replace(" ", "") == target for g in basis)
    dim, deg = dimension_and_degree(I, budget)
    out["dimension 0, degree 2"] = (dim, deg) == (0, 2)
    res5 = projectively_unique(matroid, GF(5), forest=meta["forest"],
                               hyperplane_order=order, budget=budget)
    out["GF(5): unique with non-reduced scaled ideal"] = (
        res5.status == "unique" and res5.non_reduced)
    return out


def _check_u23(budget):
    matroid, data = load_example("u23")
    out = {}
    I = slack_ideal(matroid, QQ, budget=budget)
    out["principal cubic binomial"] = [str(g) for g in I.basis()] == [
        "x_{1,2}*x_{2,3}*x_{3,1} + x_{1,3}*x_{2,1}*x_{3,2}"]
    out["GF(2): realizable"] = oracle_search(matroid, 2, budget=budget).status == "found"
    return out


def _check_u24(budget):
    matroid, data = load_example("u24")
    out = {}
    out["GF(2): oracle exhausts"] = oracle_search(matroid, 2, budget=budget).status == "exhausted"
    # the GF(2)-coefficient ideal keeps its GF(4) points, so it is NOT unit
    I2 = slack_ideal(matroid, GF(2), scaling="spanning-forest", budget=budget)
    out["GF(2): scaled slack ideal sees the GF(4) points (non-unit)"] = not I2.is_unit(budget)
    cert = certify(matroid, GF(2), StrategyPlan(budget=budget))
    out["GF(2): certified non-realizable by exhaustion"] = (
        cert.kind == "NonRealizable-Exhaustion" and verify_certificate(cert, matroid, budget=budget))
    out["GF(3): realizable"] = oracle_search(matroid, 3, budget=budget).status == "found"
    return out


_CHECKS = {
    "m4": _check_m4,
    "fano": _check_fano,
    "nonfano": _check_nonfano,
    "vamos": _check_vamos,
    "m8": _check_m8,
    "perles": _check_perles,
    "u23": _check_u23,
    "u24": _check_u24,
}


def run_example(name: str, budget: Budget | None = None, verbose: bool = True):
    try:
        results = _CHECKS[name](budget)
    except BudgetExceeded as e:
        results = {"completed within budget": False}
    if verbose:
        for check, ok in results.items():
            print(f"[{name}] {'PASS' if ok else 'FAIL'}: {check}")
    return results
