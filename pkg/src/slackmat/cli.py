"""Command-line surface: batch computations on matroid JSON files and the
built-in regression examples.

Exit codes: 0 realizable-witnessed, 1 non-realizable-certified, 2 unknown /
budget exhausted, 64 malformed input.
"""

import argparse
import json
import sys

from .certify import (Certificate, StrategyPlan, certify, final_polynomial_search,
                      obstruction_polynomials, oracle_search, verify_certificate)
from .examples import EXAMPLES, load_example, run_example
from .fields import FieldError, QQ, parse_field
from .groebner import Budget, BudgetExceeded, Ideal
from .grassmann import universal_projections
from .hilbert import dimension_and_degree
from .matroid import Matroid, MatroidError, PointConfiguration
from .ring import UsageError
from .slack import (cycle_ideal, projectively_unique, slack_ideal,
                    slack_of_realization, symbolic_slack)

EX_OK = 0
EX_NONREALIZABLE = 1
EX_UNKNOWN = 2
EX_USAGE = 64


def _load_input(args):
    """Matroid plus optional figure metadata from a JSON file or inline JSON."""
    text = None
    if args.matroid == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.matroid) as fh:
                text = fh.read()
        except OSError:
            if args.matroid.lstrip().startswith("{"):
                text = args.matroid
            else:
                raise
    data = json.loads(text)
    matroid = Matroid.from_json(data)
    meta = {
        "hyperplane_order": [tuple(h) for h in data["hyperplane_order"]]
        if "hyperplane_order" in data else None,
        "forest": [tuple(e) for e in data["forest"]] if "forest" in data else None,
        "column_subsets": [[tuple(h) for h in sub] for sub in data["column_subsets"]]
        if "column_subsets" in data else None,
        "realization": PointConfiguration.from_json(data["realization"])
        if "realization" in data else None,
    }
    return matroid, meta


def _budget(args):
    return Budget(seconds=args.timeout, max_pairs=args.max_pairs)


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_hyperplanes(args):
    matroid, meta = _load_input(args)
    hyps = meta["hyperplane_order"]
    if hyps is not None:
        sym = symbolic_slack(matroid, hyps)
        hlist = sym.hyperplanes
    else:
        hlist = matroid.hyperplanes()
    labs = [list(matroid.set_labels(H)) for H in hlist]
    _emit(args, {"hyperplanes": labs, "count": len(labs)},
          [" ".join(str(x) for x in h) for h in labs])
    return EX_OK


def cmd_slack_matrix(args):
    matroid, meta = _load_input(args)
    if meta["realization"] is not None:
        S = slack_of_realization(meta["realization"], matroid, meta["hyperplane_order"])
        _emit(args, S.to_json(), [str(S)])
    else:
        sym = symbolic_slack(matroid, meta["hyperplane_order"])
        _emit(args, {"pattern": [[c for c in row] for row in
                                 [[sym.var_name(sym.var_index[(i, j)])
                                   if (i, j) in sym.var_index else "0"
                                   for j in range(sym.shape[1])]
                                  for i in range(sym.shape[0])]],
                     "variables": sym.nvars},
              [str(sym), f"{sym.nvars} variables"])
    return EX_OK


def cmd_slack_ideal(args):
    matroid, meta = _load_input(args)
    field = parse_field(args.field)
    ideal = slack_ideal(matroid, field,
                        scaling="spanning-forest" if args.scaled else "none",
                        forest=meta["forest"] if args.scaled else None,
                        hyperplane_order=meta["hyperplane_order"],
                        budget=_budget(args))
    basis = ideal.basis(budget=_budget(args))
    dim, deg = (None, None)
    if basis and not any(g.degree() == 0 for g in basis):
        dim, deg = dimension_and_degree(ideal)
    _emit(args, {"field": field.name, "scaled": bool(args.scaled),
                 "groebner_basis": [str(g) for g in basis],
                 "dimension": dim, "degree": deg},
          [str(g) for g in basis] +
          ([f"dimension {dim}, degree {deg}"] if dim is not None else []))
    return EX_OK


def cmd_certify(args):
    matroid, meta = _load_input(args)
    field = parse_field(args.field)
    plan = StrategyPlan(column_subsets=meta["column_subsets"],
                        forest=meta["forest"], budget=_budget(args))
    if args.strategy:
        plan.submatrix_monomial = "a" in args.strategy
        plan.full_monomial = "b" in args.strategy
        plan.scaled_unit = "c" in args.strategy
        plan.oracle = "d" in args.strategy
    cert = certify(matroid, field, plan, hyperplane_order=meta["hyperplane_order"])
    checked = verify_certificate(cert, matroid, hyperplane_order=meta["hyperplane_order"],
                                 budget=_budget(args)) if cert.conclusive else None
    _emit(args, dict(cert.to_json(), reverified=checked),
          [f"{cert.kind} over {field.name}" +
           (f" (reverified: {checked})" if checked is not None else "")])
    return cert.exit_code


def cmd_final_poly(args):
    matroid, meta = _load_input(args)
    field = parse_field(args.field)
    subsets = meta["column_subsets"] or "heuristic"
    got = final_polynomial_search(matroid, field, column_subsets=subsets,
                                  hyperplane_order=meta["hyperplane_order"],
                                  budget=_budget(args))
    if got is None:
        _emit(args, {"found": False}, ["no monomial certificate found"])
        return EX_UNKNOWN
    mono, cols = got
    _emit(args, {"found": True, "monomial": mono, "columns": cols},
          [f"monomial {mono}", f"columns {cols}"])
    return EX_NONREALIZABLE


def cmd_cycle_ideal(args):
    matroid, meta = _load_input(args)
    if meta["realization"] is None:
        print("cycle-ideal needs a realization in the input JSON", file=sys.stderr)
        return EX_USAGE
    ideal = cycle_ideal(meta["realization"], matroid, meta["hyperplane_order"])
    _emit(args, {"generators": [str(g) for g in ideal.gens],
                 "count": len(ideal.gens)},
          [str(g) for g in ideal.gens])
    return EX_OK


def cmd_unique(args):
    matroid, meta = _load_input(args)
    field = parse_field(args.field)
    res = projectively_unique(matroid, field, forest=meta["forest"],
                              hyperplane_order=meta["hyperplane_order"],
                              budget=_budget(args))
    payload = {"status": res.status, "evidence": res.evidence,
               "non_reduced": res.non_reduced,
               "obstruction": str(res.obstruction) if res.obstruction else None,
               "matrix": res.matrix.to_json() if res.matrix else None}
    lines = [f"status: {res.status}"]
    if res.evidence:
        lines.append(f"evidence: {res.evidence}")
    if res.matrix:
        lines.append(str(res.matrix))
    _emit(args, payload, lines)
    return EX_OK if res.status != "unknown" else EX_UNKNOWN


def cmd_obstructions(args):
    matroid, meta = _load_input(args)
    field = parse_field(args.field)
    reports, status = obstruction_polynomials(matroid, field, forest=meta["forest"],
                                              hyperplane_order=meta["hyperplane_order"],
                                              budget=_budget(args))
    _emit(args, {"status": status, "obstructions": [r.to_json() for r in reports]},
          [f"[{status}]"] + [f"{r.poly}  roots={r.roots} squarefree={r.squarefree}"
                             for r in reports])
    return EX_OK if status == "ok" else EX_UNKNOWN


def cmd_universal(args):
    matroid, meta = _load_input(args)
    field = parse_field(args.field)
    out = universal_projections(matroid, field,
                                hyperplane_order=meta["hyperplane_order"],
                                budget=_budget(args))
    payload = {"status": out["status"]}
    lines = [f"status: {out['status']}"]
    for side in ("pluecker_side", "slack_side"):
        ideal = out[side]
        payload[side] = [str(g) for g in ideal.gens] if ideal is not None else None
        if ideal is not None:
            lines.append(f"{side}: {len(ideal.gens)} generators")
    _emit(args, payload, lines)
    return EX_OK if out["status"] == "ok" else EX_UNKNOWN


def cmd_oracle(args):
    matroid, meta = _load_input(args)
    field = parse_field(args.field)
    if not field.char:
        print("oracle works over prime fields only", file=sys.stderr)
        return EX_USAGE
    res = oracle_search(matroid, field.char, max_nodes=args.max_nodes,
                        budget=_budget(args))
    payload = {"status": res.status, "nodes": res.nodes,
               "matrix": res.config.to_json() if res.config else None}
    _emit(args, payload, [f"{res.status} after {res.nodes} nodes"])
    if res.status == "found":
        return EX_OK
    if res.status == "exhausted":
        return EX_NONREALIZABLE
    return EX_UNKNOWN


def cmd_examples(args):
    names = args.names or sorted(EXAMPLES)
    failures = 0
    results = {}
    for name in names:
        if name not in EXAMPLES:
            print(f"unknown example {name!r}; known: {sorted(EXAMPLES)}", file=sys.stderr)
            return EX_USAGE
        outcome = run_example(name, budget=_budget(args), verbose=not args.json)
        results[name] = outcome
        if not all(v for v in outcome.values()):
            failures += 1
    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
    return EX_OK if failures == 0 else EX_NONREALIZABLE


def build_parser():
    ap = argparse.ArgumentParser(
        prog="slackmat",
        description="slack matrices, slack ideals and realization-space "
                    "certificates for matroids")
    ap.add_argument("--json", action="store_true", help="JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("matroid", help="matroid JSON file, inline JSON, or -")
        p.add_argument("--field", default="Q", help="Q or GF(p)")
        p.add_argument("--timeout", type=float, default=None,
                       help="budget in seconds (default: env SLACKMAT_TIMEOUT)")
        p.add_argument("--max-pairs", type=int, default=None)

    p = sub.add_parser("hyperplanes", help="list the hyperplanes")
    common(p)
    p.set_defaults(fn=cmd_hyperplanes)

    p = sub.add_parser("slack-matrix", help="symbolic pattern, or numeric from a realization")
    common(p)
    p.set_defaults(fn=cmd_slack_matrix)

    p = sub.add_parser("slack-ideal", help="reduced GB of the (scaled) slack ideal")
    common(p)
    p.add_argument("--scaled", action=argparse.BooleanOptionalAction, default=False)
    p.set_defaults(fn=cmd_slack_ideal)

    p = sub.add_parser("certify", help="realizability certificate")
    common(p)
    p.add_argument("--strategy", default=None,
                   help="subset of 'abcd': submatrix/full monomial, scaled unit, oracle")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("final-poly", help="search for a monomial certificate")
    common(p)
    p.set_defaults(fn=cmd_final_poly)

    p = sub.add_parser("cycle-ideal", help="cycle binomials of a realization")
    common(p)
    p.set_defaults(fn=cmd_cycle_ideal)

    p = sub.add_parser("unique", help="projective uniqueness via the scaled slack ideal")
    common(p)
    p.set_defaults(fn=cmd_unique)

    p = sub.add_parser("obstructions", help="univariate obstruction polynomials")
    common(p)
    p.set_defaults(fn=cmd_obstructions)

    p = sub.add_parser("universal", help="projections of the universal realization ideal")
    common(p)
    p.set_defaults(fn=cmd_universal)

    p = sub.add_parser("oracle", help="brute-force realization search over GF(p)")
    common(p)
    p.add_argument("--max-nodes", type=int, default=2_000_000)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("examples", help="run built-in regression examples")
    p.add_argument("names", nargs="*", help=f"subset of {sorted(EXAMPLES)}")
    p.add_argument("--field", default="Q")
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--max-pairs", type=int, default=None)
    p.set_defaults(fn=cmd_examples)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (json.JSONDecodeError, MatroidError, FieldError, UsageError, OSError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EX_USAGE
    except BudgetExceeded as e:
        print(json.dumps({"status": "unknown", "reason": str(e)}))
        return EX_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
