"""Command-line surface: info, weyl, check, sl2, ssets.

JSON documents are the stable contract; every machine report carries the
package version and an "exact": true flag.  Schema violations are reported
with a JSON-pointer path and exit status 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .criteria import (
    Verdict,
    criterion_set,
    cyclicity_guaranteed,
    irreducibility_guaranteed,
)
from .dims import (
    chain_dim,
    lie_fundamental_dim,
    weyl_module_dim,
    yangian_fundamental_dim,
)
from .drinfeld import DrinfeldTuple, FactorChain, chain_to_poly, order_factors
from .exact import (
    GaussianRational,
    ScalarParseError,
    format_scalar,
    parse_scalar,
    unit_vector,
)
from .rootsys import (
    LieType,
    cartan_datum,
    duality_shift,
    lie_type,
    longest_word,
    node_involution,
)
from .ysl2 import defining_relation_failures, submodule_dimension, tensor_module


class SchemaError(ValueError):
    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer


def _fraction_str(value) -> str:
    return format_scalar(GaussianRational(value))


def _parse_type(doc, pointer="") -> LieType:
    if not isinstance(doc, dict):
        raise SchemaError(pointer or "/", "expected an object")
    family = doc.get("type")
    if family not in ("A", "B", "C", "D", "G2"):
        raise SchemaError(f"{pointer}/type", "expected one of A, B, C, D, G2")
    rank = doc.get("rank")
    if rank is None and family == "G2":
        rank = 2
    if not isinstance(rank, int):
        raise SchemaError(f"{pointer}/rank", "expected an integer rank")
    try:
        return lie_type(family, rank)
    except ValueError as exc:
        raise SchemaError(f"{pointer}/rank", str(exc)) from exc


def _parse_scalar_at(text, pointer) -> GaussianRational:
    if not isinstance(text, str):
        raise SchemaError(pointer, "expected a scalar string")
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise SchemaError(pointer, str(exc)) from exc


def parse_tuple_doc(doc) -> DrinfeldTuple:
    t = _parse_type(doc)
    polys = doc.get("polys")
    if not isinstance(polys, dict):
        raise SchemaError("/polys", "expected an object mapping nodes to root lists")
    rows = {}
    for key, roots in polys.items():
        try:
            node = int(key)
        except (TypeError, ValueError):
            raise SchemaError(f"/polys/{key}", "node keys must be integers") from None
        if not 1 <= node <= t.rank:
            raise SchemaError(f"/polys/{key}", f"node out of range 1..{t.rank}")
        if not isinstance(roots, list):
            raise SchemaError(f"/polys/{key}", "expected a list of scalar strings")
        rows[node] = [
            _parse_scalar_at(root, f"/polys/{key}/{i}") for i, root in enumerate(roots)
        ]
    pi = DrinfeldTuple.from_dict(t, rows)
    if pi.total_degree == 0:
        raise SchemaError("/polys", "trivial module: at least one root is required")
    return pi


def parse_chain_doc(doc) -> FactorChain:
    t = _parse_type(doc)
    factors = doc.get("factors")
    if not isinstance(factors, list) or not factors:
        raise SchemaError("/factors", "expected a nonempty list")
    parsed = []
    for i, factor in enumerate(factors):
        if not isinstance(factor, dict):
            raise SchemaError(f"/factors/{i}", "expected an object")
        node = factor.get("node")
        if not isinstance(node, int) or not 1 <= node <= t.rank:
            raise SchemaError(f"/factors/{i}/node", f"expected a node in 1..{t.rank}")
        parsed.append((node, _parse_scalar_at(factor.get("a"), f"/factors/{i}/a")))
    return FactorChain(t, tuple(parsed))


def parse_sl2_doc(doc):
    if not isinstance(doc, list) or not doc:
        raise SchemaError("/", "expected a nonempty list of [m, a] pairs")
    spec = []
    for i, item in enumerate(doc):
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f"/{i}", "expected a [m, a] pair")
        m, a = item
        if not isinstance(m, int) or m < 1:
            raise SchemaError(f"/{i}/0", "expected a positive integer m")
        spec.append((m, _parse_scalar_at(a, f"/{i}/1")))
    return tuple(spec)


def tuple_to_doc(pi: DrinfeldTuple) -> dict:
    t = pi.lie_type
    polys = {
        str(node): [format_scalar(r) for r in roots]
        for node, roots in enumerate(pi.roots, start=1)
        if roots
    }
    return {"type": t.family, "rank": t.rank, "polys": polys}


def chain_to_doc(chain: FactorChain) -> dict:
    t = chain.lie_type
    return {
        "type": t.family,
        "rank": t.rank,
        "factors": [
            {"node": node, "a": format_scalar(a)} for node, a in chain.factors
        ],
    }


def _verdict_doc(verdict: Verdict) -> dict:
    return {
        "guaranteed": verdict.guaranteed,
        "exact": verdict.exact,
        "witnesses": [
            {"i": i, "j": j, "difference": format_scalar(d)}
            for i, j, d in verdict.witnesses
        ],
    }


def _report(command: str, body: dict) -> dict:
    return {"version": __version__, "exact": True, "command": command, **body}


def _emit(report: dict, as_json: bool, lines):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# Subcommands.


def _cmd_info(args) -> int:
    t = _parse_type({"type": args.type, "rank": args.rank})
    datum = cartan_datum(t)
    nu = node_involution(t)
    dims = []
    for i in range(1, t.rank + 1):
        flagged = t.family == "G2" and i == 1
        dims.append(
            {
                "node": i,
                "lie_dim": lie_fundamental_dim(t, i),
                "yangian_dim": yangian_fundamental_dim(t, i),
                "provenance": "external" if flagged else "standard",
            }
        )
    body = {
        "lie_type": {"type": t.family, "rank": t.rank},
        "cartan": [list(row) for row in datum.cartan],
        "d": list(datum.d),
        "kappa": _fraction_str(duality_shift(t)),
        "longest_word": list(longest_word(t)),
        "involution": {str(i): nu[i - 1] for i in range(1, t.rank + 1)},
        "fundamental_dims": dims,
    }
    lines = [
        f"type {t}",
        "cartan matrix:",
        *("  " + " ".join(f"{e:3d}" for e in row) for row in datum.cartan),
        f"d = {list(datum.d)}",
        f"kappa = {body['kappa']}",
        f"longest word = {body['longest_word']}",
        f"involution = {body['involution']}",
        "fundamental modules (node: lie dim / yangian dim):",
        *(
            "  {node}: {lie_dim} / {yangian_dim}{flag}".format(
                flag=" (external)" if row["provenance"] == "external" else "", **row
            )
            for row in dims
        ),
    ]
    _emit(_report("info", body), args.json, lines)
    return 0


def _cmd_weyl(args) -> int:
    pi = parse_tuple_doc(_load_doc(args.document))
    chain = order_factors(pi)
    audit = []
    factors = chain.factors
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            diff = factors[j][1] - factors[i][1]
            values = criterion_set(chain.lie_type, factors[i][0], factors[j][0]).values
            audit.append(
                {
                    "i": i + 1,
                    "j": j + 1,
                    "difference": format_scalar(diff),
                    "in_criterion_set": diff.im == 0 and diff.re in values,
                }
            )
    body = {
        "input": tuple_to_doc(pi),
        "chain": chain_to_doc(chain)["factors"],
        "dimension": weyl_module_dim(pi),
        "pair_audit": audit,
    }
    assert chain_to_poly(chain) == pi
    assert chain_dim(chain) == body["dimension"]
    lines = [
        f"ordered factorization over {chain.lie_type}:",
        *(
            f"  {k + 1}: node {node}, a = {format_scalar(a)}"
            for k, (node, a) in enumerate(factors)
        ),
        f"dimension = {body['dimension']}",
        "pair audit (i < j, difference, in criterion set):",
        *(
            "  ({i},{j}) diff {difference} -> {in_criterion_set}".format(**row)
            for row in audit
        ),
    ]
    _emit(_report("weyl", body), args.json, lines)
    return 0


def _cmd_check(args) -> int:
    chain = parse_chain_doc(_load_doc(args.document))
    if args.mode == "cyclic":
        verdict = cyclicity_guaranteed(chain)
    else:
        verdict = irreducibility_guaranteed(chain)
    body = {"mode": args.mode, "chain": chain_to_doc(chain), "verdict": _verdict_doc(verdict)}
    lines = [
        f"{args.mode} guaranteed: {verdict.guaranteed} (exact={verdict.exact})",
        *(
            f"  witness ({i},{j}): difference {format_scalar(d)}"
            for i, j, d in verdict.witnesses
        ),
    ]
    _emit(_report("check", body), args.json, lines)
    return 0


def _cmd_sl2(args) -> int:
    spec = parse_sl2_doc(_load_doc(args.document))
    body: dict = {"spec": [[m, format_scalar(a)] for m, a in spec]}
    lines = []
    if args.verify == "closure":
        module = tensor_module(spec)
        seed = unit_vector(module.dim, module.highest_index)
        dim = submodule_dimension(module, seed)
        body.update(
            {
                "dimension": module.dim,
                "closure_dimension": dim,
                "highest_weight": dim == module.dim,
            }
        )
        lines = [
            f"dimension {module.dim}, closure from the top vector {dim}",
            f"highest weight: {body['highest_weight']}",
        ]
    elif args.verify == "series":
        from .drinfeld import eigenvalue_series
        from .ysl2 import verify_drinfeld_series

        order = args.order
        ok = verify_drinfeld_series(spec, order)
        roots = []
        for m, a in spec:
            roots.extend(a + s for s in range(m))
        series = eigenvalue_series(roots, 1, order + 1)
        body.update(
            {
                "order": order,
                "matches": ok,
                "series": [format_scalar(c) for c in series.coeffs],
            }
        )
        lines = [
            f"eigenvalue series to order {order}: "
            + ", ".join(format_scalar(c) for c in series.coeffs),
            f"matrix action matches: {ok}",
        ]
    else:  # identities
        module = tensor_module(spec)
        failures = defining_relation_failures(module, K=2)
        body.update({"relations_hold": not failures, "failures": failures})
        lines = [f"defining relations hold: {not failures}"]
        lines.extend(f"  failed: {name}" for name in failures)
    _emit(_report("sl2", body), args.json, lines)
    return 0


def _cmd_ssets(args) -> int:
    t = _parse_type({"type": args.type, "rank": args.rank})
    table = {}
    lines = [f"criterion sets for {t}:"]
    for b_m in range(1, t.rank + 1):
        for b_n in range(1, t.rank + 1):
            values = sorted(criterion_set(t, b_m, b_n).values)
            table[f"{b_m},{b_n}"] = [_fraction_str(v) for v in values]
            lines.append(
                f"  S({b_m},{b_n}) = {{{', '.join(_fraction_str(v) for v in values)}}}"
            )
    body = {"lie_type": {"type": t.family, "rank": t.rank}, "sets": table}
    _emit(_report("ssets", body), args.json, lines)
    return 0


def _load_doc(text: str):
    if text == "-":
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("/", f"invalid JSON: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yangian-weyl",
        description=(
            "Exact computations with local Weyl modules of Yangians: "
            "ordered factorizations, cyclicity criteria, and a rank-one "
            "brute-force oracle."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="Cartan data, longest word, dimensions")
    p_info.add_argument("--type", required=True, choices=["A", "B", "C", "D", "G2"])
    p_info.add_argument("--rank", type=int, default=None)
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(func=_cmd_info)

    p_weyl = sub.add_parser(
        "weyl", help="ordered tensor factorization of a local Weyl module"
    )
    p_weyl.add_argument("document", help="Drinfeld tuple JSON (or - for stdin)")
    p_weyl.add_argument("--json", action="store_true")
    p_weyl.set_defaults(func=_cmd_weyl)

    p_check = sub.add_parser("check", help="cyclicity/irreducibility verdicts")
    p_check.add_argument("document", help="factor chain JSON (or - for stdin)")
    p_check.add_argument(
        "--mode", choices=["cyclic", "irreducible"], default="cyclic"
    )
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=_cmd_check)

    p_sl2 = sub.add_parser("sl2", help="rank-one brute-force oracles")
    p_sl2.add_argument("document", help="[[m, a], ...] JSON (or - for stdin)")
    p_sl2.add_argument(
        "--verify", choices=["series", "closure", "identities"], default="closure"
    )
    p_sl2.add_argument("--order", type=int, default=3)
    p_sl2.add_argument("--json", action="store_true")
    p_sl2.set_defaults(func=_cmd_sl2)

    p_ssets = sub.add_parser("ssets", help="dump all criterion sets for a type")
    p_ssets.add_argument("--type", required=True, choices=["A", "B", "C", "D", "G2"])
    p_ssets.add_argument("--rank", type=int, default=None)
    p_ssets.add_argument("--json", action="store_true")
    p_ssets.set_defaults(func=_cmd_ssets)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error at {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
