"""Command-line front end.

Exit codes: 0 success / member, 1 not a member, 2 unreadable input,
3 invalid matroid, 4 matroid with loops, 5 methods disagree.
"""

import argparse
import json
import sys

from . import bergman, kernels, phylo, tropical
from .files import format_weights, read_matroid, read_weights
from .matroid import ExchangeAxiomError, LoopError, MatroidError, positions
from .rational import ParseError, format_rational
from .subdominant import (
    blue_rule_witness,
    red_rule_witness,
    subdominant,
    subdominant_red,
    subdominant_via_basis,
)

EXIT_NOT_MEMBER = 1
EXIT_PARSE = 2
EXIT_AXIOM = 3
EXIT_LOOP = 4
EXIT_DISAGREE = 5

METHODS = ("blue", "red", "basis", "tropical")


class Disagreement(RuntimeError):
    pass


def _set(matroid, mask):
    return "{" + ",".join(matroid.labels(mask)) + "}"


def _argmax(w, mask):
    return max(positions(mask), key=lambda i: w[i])


def _load(args):
    matroid = read_matroid(args.matroid)
    weights = read_weights(args.weights, matroid)
    return matroid, weights


def cmd_check(args, out):
    matroid, w = _load(args)
    name = matroid.elements
    bad_basis = bergman.bases_violation(matroid, w)
    bad_circuit = bergman.circuit_violation(matroid, w)
    bad_cocircuit = bergman.cocircuit_violation(matroid, w)
    verdicts = {
        "bases": (bad_basis, lambda v: f"element {name[v]} is in no minimum-weight basis"),
        "circuits": (
            bad_circuit,
            lambda c: f"circuit {_set(matroid, c)} has unique max {name[_argmax(w, c)]} (weight {format_rational(w[_argmax(w, c)])})",
        ),
        "cocircuits": (bad_cocircuit, lambda v: f"element {name[v]} is minimum in no cocircuit"),
    }
    yes = 0
    for label, (bad, describe) in verdicts.items():
        if bad is None:
            yes += 1
            print(f"{label}: yes", file=out)
        elif args.witness:
            print(f"{label}: no ({describe(bad)})", file=out)
        else:
            print(f"{label}: no", file=out)
    if yes == len(verdicts):
        print(f"ultrametric: yes ({yes}/{yes} methods agree)", file=out)
        return 0
    if yes:
        raise Disagreement(f"membership tests disagree ({yes}/{len(verdicts)} say yes)")
    top = name[_argmax(w, bad_circuit)]
    print(f"ultrametric: no; witness circuit {_set(matroid, bad_circuit)} unique max {top}", file=out)
    return EXIT_NOT_MEMBER


def _compute(matroid, w, method):
    if method == "blue":
        return subdominant(matroid, w)
    if method == "red":
        return subdominant_red(matroid, w)
    if method == "basis":
        return subdominant_via_basis(matroid, w)
    if method == "tropical":
        return tropical.project_bergman(matroid, w)
    raise ValueError(method)


def _witnesses(matroid, w, method):
    out = []
    if method == "basis":
        b = matroid.min_weight_basis(w)
    for e in range(matroid.n):
        if method in ("blue", "tropical"):
            _, c = blue_rule_witness(matroid, w, e)
            # for the projection, the hyperplane is the complement of the cocircuit
            mask = c if method == "blue" else matroid.full ^ c
        elif method == "red":
            _, mask = red_rule_witness(matroid, w, e)
        else:
            mask = 0 if b >> e & 1 else matroid.fundamental_circuit(b, e)
        out.append(_set(matroid, mask) if mask else "-")
    return out


def cmd_subdominant(args, out):
    matroid, w = _load(args)
    method = args.method
    if method == "all":
        results = {m: _compute(matroid, w, m) for m in METHODS}
        distinct = set(results.values())
        if len(distinct) != 1:
            detail = "; ".join(f"{m}={[format_rational(x) for x in r]}" for m, r in results.items())
            raise Disagreement(f"methods disagree: {detail}")
        result = results["blue"]
        wmethod = "blue"
    else:
        result = _compute(matroid, w, method)
        wmethod = method
    if args.output == "json":
        doc = {
            "method": method,
            "weights": {e: format_rational(v) for e, v in zip(matroid.elements, result)},
        }
        if args.witness:
            doc["witness"] = dict(zip(matroid.elements, _witnesses(matroid, w, wmethod)))
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        extra = {"witness": _witnesses(matroid, w, wmethod)} if args.witness else None
        out.write(format_weights(matroid, result, extra))
    return 0


def cmd_fit_tree(args, out):
    d = phylo.read_distance_matrix(args.matrix)
    if d.n < 2:
        raise ParseError("need at least two taxa")
    fit, eps = phylo.linf_fit(d)
    tree = phylo.tree_from_ultrametric(fit)
    if args.output == "json":
        doc = {"epsilon": format_rational(eps), "tree": phylo.tree_to_json(tree)}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        print(f"epsilon: {format_rational(eps)}", file=out)
        print(phylo.newick_export(tree), file=out)
    return 0


def cmd_info(args, out):
    m = read_matroid(args.matroid)
    print(f"type: {m.kind}", file=out)
    print(f"elements: {m.n}", file=out)
    print(f"rank: {m.rank()}", file=out)
    print(f"bases: {len(m.bases)}", file=out)
    print(f"circuits: {len(m.circuits)}", file=out)
    print(f"cocircuits: {len(m.cocircuits)}", file=out)
    print(f"flats: {len(m.flats)}", file=out)
    print(f"hyperplanes: {len(m.hyperplanes)}", file=out)
    print(f"coloops: {_set(m, m.coloops)}", file=out)
    print(f"kernels: {kernels.BACKEND}", file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="matroid-ultrametric",
        description="Bergman fan membership, subdominant M-ultrametrics and l-infinity tree fitting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test whether weights are an M-ultrametric")
    p.add_argument("matroid", help="matroid spec (JSON)")
    p.add_argument("weights", help="weights (CSV with header element,weight)")
    p.add_argument("--witness", action="store_true", help="explain each failing test")
    p.set_defaults(func=cmd_check)

    for name, helptext in (
        ("subdominant", "compute the subdominant M-ultrametric"),
        ("project", "tropical projection onto the Bergman fan (subdominant --method tropical)"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("matroid", help="matroid spec (JSON)")
        p.add_argument("weights", help="weights (CSV with header element,weight)")
        if name == "subdominant":
            p.add_argument("--method", choices=(*METHODS, "all"), default="blue")
        else:
            p.set_defaults(method="tropical")
        p.add_argument("--output", choices=("csv", "json"), default="csv")
        p.add_argument("--witness", action="store_true", help="add the set that fixed each value")
        p.set_defaults(func=cmd_subdominant)

    p = sub.add_parser("fit-tree", help="l-infinity optimal equidistant tree for a distance matrix")
    p.add_argument("matrix", help="square CSV distance matrix with taxa header")
    p.add_argument("--output", choices=("newick", "json"), default="newick")
    p.set_defaults(func=cmd_fit_tree)

    p = sub.add_parser("info", help="count bases, circuits, cocircuits and flats")
    p.add_argument("matroid", help="matroid spec (JSON)")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except LoopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOOP
    except ExchangeAxiomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except Disagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
