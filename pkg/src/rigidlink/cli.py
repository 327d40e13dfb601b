"""Command-line front end.

Every subcommand reads one graph document and prints a JSON report with
sorted keys (or a plain table with ``--human``). Exit statuses: 0 success,
2 unreadable or malformed input, 3 a violated precondition, 4 an internal
cross-check disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bodybar, decomposition, numeric, rigidity
from .errors import InvalidArgumentError, OracleDisagreement, ParseError, PreconditionError
from .graph import Graph, Multigraph, components, local_connectivity
from .io import GraphDocument, load

DEFAULT_SEED = 20240531

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_ORACLE = 4


def _edge(doc: GraphDocument, e) -> list:
    return [doc.name(e[0]), doc.name(e[1])]


def _verts(doc: GraphDocument, vs) -> list:
    return [doc.name(v) for v in sorted(vs)]


def _graph(doc: GraphDocument) -> Graph:
    if doc.kind != "graph":
        raise PreconditionError("this command needs a simple graph, not a multigraph")
    return doc.to_graph()


def _multigraph(doc: GraphDocument) -> Multigraph:
    return doc.to_multigraph()


def cmd_rank(doc, args):
    G = _graph(doc)
    return {
        "r2_rank": rigidity.r2_rank(G),
        "rigid": rigidity.is_rigid_2d(G),
        "redundantly_rigid": rigidity.is_redundantly_rigid_2d(G),
    }


def cmd_components(doc, args):
    dec = rigidity.r2_components(_graph(doc))
    comps = [
        {
            "id": i,
            "trivial": dec.trivial[i],
            "vertices": _verts(doc, dec.vertex_sets[i]),
            "edges": [_edge(doc, e) for e in sorted(c)],
        }
        for i, c in enumerate(dec.components)
    ]
    return {"components": comps, "bridges": [_edge(doc, e) for e in sorted(dec.bridges)]}


def cmd_blocks(doc, args):
    dec = rigidity.r2_components(_graph(doc))
    out = []
    for i in dec.nontrivial():
        tree = decomposition.blocks_of_edges(dec.components[i])
        out.append(
            {
                "component": i,
                "blocks": [
                    {
                        "vertices": _verts(doc, b.vertices),
                        "virtual_edges": [_edge(doc, e) for e in sorted(b.virtual)],
                    }
                    for b in tree.blocks
                ],
                "separators": [{"pair": _edge(doc, s), "h": h} for s, h in sorted(tree.separators.items())],
                "t": tree.t,
                "k": tree.k,
            }
        )
    return {"components": out}


def cmd_linked(doc, args):
    G = _graph(doc)
    u, v = doc.vertex(args.u), doc.vertex(args.v)
    if args.d == 1:
        return {"linked": decomposition.is_globally_linked_1d(G, u, v), "dimension": 1}
    witness = decomposition.linked_witness(G, u, v)
    report = {"linked": witness is not None, "dimension": 2}
    if witness is not None:
        report["witness_component"] = witness
    return report


def cmd_linked_all(doc, args):
    pairs = decomposition.linked_nonadjacent_pairs(_graph(doc))
    return {"added_edges": [_edge(doc, e) for e in pairs], "count": len(pairs)}


def cmd_clusters(doc, args):
    cover = decomposition.globally_linked_clusters(_graph(doc))
    return {
        "clusters": [_verts(doc, c) for c in cover.clusters],
        "uncovered_edges": [_edge(doc, e) for e in sorted(cover.uncovered)],
        "overlaps": [{"pair": _edge(doc, p), "h": h} for p, h in sorted(cover.multiplicities.items())],
        "ordering": list(cover.ordering),
        "three_shellable": decomposition.is_shellable(cover.clusters, cover.ordering, 3),
        "identity": (
            f"{cover.rank} = {len(cover.uncovered)} + {cover.cluster_rank_sum} - {cover.overlap_excess}"
        ),
        "identity_holds": cover.tight_holds,
    }


def cmd_globally_rigid(doc, args):
    failure = decomposition.global_rigidity_failure(_graph(doc))
    report = {"globally_rigid": failure is None}
    if failure is not None:
        report["failure"] = failure
    return report


def cmd_localizable(doc, args):
    G = _graph(doc)
    anchors = [doc.vertex(tok) for tok in args.anchors.split(",") if tok.strip()]
    target = doc.vertex(args.target)
    return {
        "anchors": _verts(doc, set(anchors)),
        "target": doc.name(target),
        "uniquely_localizable": decomposition.uniquely_localizable(G, anchors, target),
    }


def cmd_bodybar(doc, args):
    H = _multigraph(doc)
    d = args.d
    k = bodybar.bodybar_k(d)
    query = args.query
    if query == "superbricks":
        sb = bodybar.superbricks(H, k)
        return {
            "k": k,
            "parts": [_verts(doc, p) for p in sb.parts.parts],
            "bridges": sorted(sb.bridges),
        }
    if query == "rigid":
        return {"k": k, "rigid": bodybar.is_rigid_bodybar(H, d)}
    if query == "globally-rigid":
        return {"k": k, "globally_rigid": bodybar.is_globally_rigid_bodybar(H, d)}
    if query == "linked":
        if args.u is None or args.v is None:
            raise InvalidArgumentError("bodybar linked needs two vertices of the body-bar graph")
        bb = bodybar.body_bar_construct(H)
        u, v = int(args.u), int(args.v)
        return {
            "k": k,
            "linked": bodybar.is_globally_linked_bodybar(H, d, u, v, bb=bb),
            "bodies": [doc.name(bb.host_of(u)), doc.name(bb.host_of(v))],
        }
    raise InvalidArgumentError(f"unknown bodybar query {query!r}")


def _graphic_rank(G: Graph) -> int:
    return G.n - len(components(G.adj))


def cmd_verify(doc, args):
    d = args.d
    if d < 1:
        raise PreconditionError("dimension must be at least 1")
    seeds = [args.seed + i for i in range(args.seeds)]
    rows = []
    if doc.kind == "graph":
        G = doc.to_graph()
        if d == 1:
            combinatorial = _graphic_rank(G)
        elif d == 2:
            combinatorial = rigidity.r2_rank(G)
        else:
            raise PreconditionError("no combinatorial rank for simple graphs beyond dimension 2")
        for s in seeds:
            got = numeric.numeric_rank(G, d, s)
            rows.append({"seed": s, "numeric_rank": got, "agree": got == combinatorial})
        report = {"kind": "graph", "combinatorial_rank": combinatorial}
    else:
        H = doc.to_multigraph()
        combinatorial = bodybar.is_rigid_bodybar(H, d)
        bb = bodybar.body_bar_construct(H)
        for s in seeds:
            got = numeric.is_rigid_numeric(bb.graph, d, s, method="modular")
            rows.append({"seed": s, "numeric_rigid": got, "agree": got == combinatorial})
        report = {"kind": "multigraph", "combinatorial_rigid": combinatorial}
    report["dimension"] = d
    report["runs"] = rows
    report["agree"] = all(r["agree"] for r in rows)
    if not report["agree"]:
        raise OracleDisagreement(json.dumps(report, sort_keys=True))
    return report


def cmd_refute(doc, args):
    G = _graph(doc)
    u, v = doc.vertex(args.u), doc.vertex(args.v)
    if u == v:
        raise InvalidArgumentError("a pair needs two distinct vertices")
    found = numeric.separating_pair_between(G, u, v)
    if found is None:
        return {"witness": None, "message": "no separator witness"}
    sep, side = found
    for attempt in range(args.attempts):
        F = numeric.realize_random(G, 2, args.seed + attempt)
        out = numeric.reflect_refute(F, sep, side, u, v)
        if out is not None:
            if not numeric.check_equivalent(F, out):
                raise OracleDisagreement("reflected framework is not equivalent")
            return {
                "witness": {
                    "separator": _edge(doc, sep),
                    "reflected_side": _verts(doc, side),
                    "original": numeric.framework_to_json(F),
                    "reflected": numeric.framework_to_json(out),
                    "distance_squared": [_fmt(F.sqdist(u, v)), _fmt(out.sqdist(u, v))],
                    "seed": args.seed + attempt,
                }
            }
    return {"witness": None, "message": "reflection preserved the distance in every attempt"}


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


COMMANDS = {
    "rank": cmd_rank,
    "components": cmd_components,
    "blocks": cmd_blocks,
    "linked": cmd_linked,
    "linked-all": cmd_linked_all,
    "clusters": cmd_clusters,
    "globally-rigid": cmd_globally_rigid,
    "localizable": cmd_localizable,
    "bodybar": cmd_bodybar,
    "verify": cmd_verify,
    "refute": cmd_refute,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigidlink", description="Global rigidity and linkedness reports.")
    parser.add_argument("--human", action="store_true", help="tabular output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.add_argument("--human", action="store_true", default=argparse.SUPPRESS)
        return p

    add("rank", "planar rigidity rank and rigidity flags")
    add("components", "R2-components and bridges")
    add("blocks", "3-block tree of each non-trivial R2-component")
    p = add("linked", "is the pair globally linked")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("-d", type=int, choices=(1, 2), default=2)
    add("linked-all", "non-adjacent globally linked pairs in the plane")
    add("clusters", "globally linked clusters and the cover identity")
    add("globally-rigid", "global rigidity in the plane")
    p = add("localizable", "unique localizability of a target from anchors")
    p.add_argument("--anchors", required=True, help="comma-separated anchor vertices")
    p.add_argument("--target", required=True)
    p = add("bodybar", "body-bar queries on a multigraph")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("query", choices=("superbricks", "rigid", "globally-rigid", "linked"))
    p.add_argument("u", nargs="?")
    p.add_argument("v", nargs="?")
    p = add("verify", "combinatorial rank against exact numeric rank")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p = add("refute", "reflection witness that a pair is not globally linked")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--attempts", type=int, default=5)
    return parser


def _human(report, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key in sorted(report):
        val = report[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines += _human(val, indent + 1)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(f"{pad}  -")
                lines += _human(item, indent + 2)
        else:
            lines.append(f"{pad}{key:<20} {json.dumps(val)}")
    return lines


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        doc = load(args.file)
        report = COMMANDS[args.command](doc, args)
    except ParseError as exc:
        print(json.dumps({"error": "parse", "message": exc.reason, "line": exc.line, "column": exc.column}, sort_keys=True), file=err)
        return EXIT_PARSE
    except (InvalidArgumentError, PreconditionError) as exc:
        print(json.dumps({"error": "precondition", "message": str(exc)}, sort_keys=True), file=err)
        return EXIT_PRECONDITION
    except OracleDisagreement as exc:
        print(json.dumps({"error": "oracle-disagreement", "message": str(exc)}, sort_keys=True), file=err)
        return EXIT_ORACLE
    if args.human:
        print("\n".join(_human(report)), file=out)
    else:
        print(json.dumps(report, sort_keys=True), file=out)
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(argv))
