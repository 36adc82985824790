"""Command-line front end.

Graphs travel as HypergraphFile text: `gen` writes one to stdout, every other
subcommand reads one from stdin (or --in) and emits a JSON run report.  Exit
codes: 0 success, 1 negative or failed result (computed, answer is "no"),
2 usage or input errors.

Seeds come from --seed or HYPERCHROME_SEED (flag wins); the extremal cache
path from --cache or HYPERCHROME_CACHE.  Cache records are one tab-separated
line each: kind, canonical key of H, parameter, value, status, witness graph
as n:k:v1,v2,v3/... with 1-based vertices (see hyperchrome.cache).  Reports
are byte-identical for identical command and seed, except for the wall_ms
field.
"""

import argparse
import hashlib
import json
import os
import sys
from time import monotonic

from . import coloring as col
from . import constructions as cons
from . import exact, extremal
from .cache import ResultCache, encode_graph
from .containment import contains, embedding_ok
from .core import (VertexOrder, balance, is_hyperforest, is_ordered_chain,
                   is_proper)
from .fileio import parse_hypergraph, serialize_hypergraph


class UsageError(Exception):
    pass


def _read_graph(path):
    if path and path != "-":
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return parse_hypergraph(text), hashlib.sha256(text.encode()).hexdigest()
    except ValueError as exc:
        raise UsageError(f"bad hypergraph file: {exc}") from None


def _budget(args):
    return exact.SearchBudget(max_nodes=getattr(args, "budget_nodes", 0) or 0,
                              max_millis=getattr(args, "budget_ms", 0) or 0)


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("HYPERCHROME_SEED")
    return int(env) if env else 0


def _order(G, name, seed):
    if name == "identity":
        return VertexOrder.identity(G.n)
    if name == "reverse":
        return VertexOrder(tuple(reversed(range(G.n))))
    if name == "degree":
        degs = G.degrees()
        return VertexOrder(tuple(sorted(range(G.n), key=lambda v: (-degs[v], v))))
    if name == "random":
        import random
        perm = list(range(G.n))
        random.Random(seed).shuffle(perm)
        return VertexOrder(tuple(perm))
    raise UsageError(f"unknown order {name!r}")


def _emit(args, report, quiet_line):
    if getattr(args, "quiet", False):
        print(quiet_line)
    else:
        print(json.dumps(report, sort_keys=True, indent=2))


def _report(command, digest, G, params, seed, status, result, certificate,
            started):
    return {
        "command": command,
        "input": None if G is None else
                 {"sha256": digest, "n": G.n, "k": G.k, "m": len(G.edges)},
        "params": params,
        "seed": seed,
        "status": status,
        "result": result,
        "certificate": certificate,
        "wall_ms": round((monotonic() - started) * 1000.0, 3),
    }


def _gen(args):
    name = args.family
    seed = _seed(args)
    if name == "complete":
        G = cons.complete(args.n)
    elif name == "loose-cycle":
        G = cons.loose_cycle(args.l)
    elif name == "loose-path":
        G = cons.loose_path(args.l)
    elif name == "partition":
        G = cons.partition_example(args.r, args.t)
    elif name == "gq":
        G = cons.gq(args.q)
    elif name == "fq-blowup":
        G = cons.fq_blowup(cons.BlowupSpec(args.n, args.tau, seed))
    elif name == "random":
        G = cons.random_3graph(args.n, args.m, seed)
    elif name == "hypertree":
        G = cons.random_hypertree(args.e, seed)
    else:
        G = cons.named(name.replace("-", "_"))
    sys.stdout.write(serialize_hypergraph(G))
    return 0


def _cmd_chi(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    chi = exact.chromatic_number(G, _budget(args))
    if chi is exact.EXHAUSTED:
        rep = _report("chi", digest, G, {}, None, "exhausted", None, None, started)
        _emit(args, rep, "chi exhausted")
        return 1
    witness = exact.k_colorable(G, chi, _budget(args))
    cert = {"type": "coloring", "colors": list(witness.colors), "palette": chi}
    assert is_proper(G, witness)[0]
    rep = _report("chi", digest, G, {}, None, "exact", {"chi": chi}, cert, started)
    _emit(args, rep, f"chi = {chi}")
    return 0


def _cmd_alpha(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    res = exact.max_independent_set(G, _budget(args))
    if res is exact.EXHAUSTED:
        rep = _report("alpha", digest, G, {}, None, "exhausted", None, None, started)
        _emit(args, rep, "alpha exhausted")
        return 1
    cert = {"type": "independent-set", "vertices": sorted(v + 1 for v in res)}
    rep = _report("alpha", digest, G, {}, None, "exact",
                  {"alpha": len(res)}, cert, started)
    _emit(args, rep, f"alpha = {len(res)}")
    return 0


def _cmd_kcolor(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    res = exact.k_colorable(G, args.k, _budget(args))
    if res is exact.EXHAUSTED:
        rep = _report("kcolor", digest, G, {"k": args.k}, None, "exhausted",
                      None, None, started)
        _emit(args, rep, "kcolor exhausted")
        return 1
    if res is None:
        rep = _report("kcolor", digest, G, {"k": args.k}, None, "exact",
                      {"colorable": False}, None, started)
        _emit(args, rep, f"not {args.k}-colorable")
        return 1
    cert = {"type": "coloring", "colors": list(res.colors), "palette": args.k}
    rep = _report("kcolor", digest, G, {"k": args.k}, None, "exact",
                  {"colorable": True}, cert, started)
    _emit(args, rep, f"{args.k}-colorable")
    return 0


def _coloring_payload(G, result):
    if isinstance(result, col.ColoringFailure):
        detail = {k: v for k, v in result.detail.items()
                  if isinstance(v, (int, str, bool))}
        return None, {"failure": result.stage, "detail": detail}
    ok, _ = is_proper(G, result)
    assert ok
    cert = {"type": "coloring", "colors": list(result.colors),
            "palette": result.palette}
    return cert, {"colors_used": result.used()}


def _cmd_color(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    seed = _seed(args)
    params = {"algo": args.algo}
    if args.algo == "greedy":
        ordv = _order(G, args.order, seed)
        trace = col.greedy_pluhar(G, ordv)
        result = trace.coloring
        params["order"] = args.order
    elif args.algo == "lll":
        if args.r is None:
            raise UsageError("--algo lll needs --r")
        params["r"] = args.r
        if not col.lll_check(G, args.r).ok:
            rep = _report("color", digest, G, params, seed, "failure",
                          {"failure": "lll-check"}, None, started)
            _emit(args, rep, "lll-check failed")
            return 1
        result = col.lll_color(G, args.r, seed)
    elif args.algo == "layered":
        if args.theta is None or args.per_layer is None:
            raise UsageError("--algo layered needs --theta and --per-layer")
        params.update(theta=args.theta, per_layer=args.per_layer)
        result = col.layered_color(G, args.theta, args.per_layer, seed)
    elif args.algo == "dyadic":
        if args.r is None:
            raise UsageError("--algo dyadic needs --r")
        params["r"] = args.r
        result = col.independent_removal_color(G, args.r, seed, _budget(args))
    else:
        raise UsageError(f"unknown algorithm {args.algo!r}")
    cert, payload = _coloring_payload(G, result)
    status = "exact" if cert else "failure"
    rep = _report("color", digest, G, params, seed, status, payload, cert, started)
    if cert:
        _emit(args, rep, f"proper coloring, {payload['colors_used']} colors")
        return 0
    _emit(args, rep, f"failure: {payload['failure']}")
    return 1


def _cmd_contains(args, want_free):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    H, hdigest = _read_graph(args.pattern)
    emb = contains(G, H)
    name = "free" if want_free else "contains"
    params = {"h_sha256": hdigest, "h_n": H.n, "h_m": len(H.edges)}
    if emb is not None:
        assert embedding_ok(G, H, emb)
        cert = {"type": "embedding",
                "vertex_map": {str(h + 1): g + 1 for h, g in emb.vertex_map}}
    else:
        cert = None
    if want_free:
        result = {"free": emb is None}
        rep = _report(name, digest, G, params, None, "exact", result, cert, started)
        _emit(args, rep, f"free = {emb is None}")
        return 0 if emb is None else 1
    result = {"contains": emb is not None}
    rep = _report(name, digest, G, params, None, "exact", result, cert, started)
    _emit(args, rep, f"contains = {emb is not None}")
    return 0 if emb is not None else 1


def _cmd_chain(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    seed = _seed(args)
    ordv = _order(G, args.order, seed)
    trace = col.greedy_pluhar(G, ordv)
    used = trace.coloring.used()
    if used >= 2:
        chain = col.extract_chain(G, ordv, trace)
        assert is_ordered_chain(G, chain, ordv)
        edges = [[v + 1 for v in e] for e in chain.chain]
    else:
        edges = []
    cert = {"type": "chain", "edges": edges,
            "order": [v + 1 for v in ordv.order]}
    rep = _report("chain", digest, G, {"order": args.order}, seed, "exact",
                  {"greedy_colors": used, "chain_length": len(edges)},
                  cert, started)
    _emit(args, rep, f"greedy colors {used}, chain length {len(edges)}")
    return 0


def _cache(args):
    path = args.cache or os.environ.get("HYPERCHROME_CACHE")
    return ResultCache(path) if path else None


def _cmd_ex(args):
    started = monotonic()
    H, hdigest = _read_graph(args.pattern)
    rec = extremal.turan_ex(args.n, H, _budget(args), _cache(args))
    cert = {"type": "extremal-witness", "witness": encode_graph(rec.witness)}
    rep = _report("ex", hdigest, H, {"n": args.n}, None, rec.status,
                  {"ex": rec.value}, cert, started)
    _emit(args, rep, f"ex({args.n}, H) = {rec.value} [{rec.status}]")
    return 0


def _cmd_ramsey(args):
    started = monotonic()
    H, hdigest = _read_graph(args.pattern)
    rec = extremal.ramsey(H, args.t, args.n_max, _budget(args), _cache(args))
    cert = {"type": "ramsey-witness", "witness": encode_graph(rec.witness)}
    rep = _report("ramsey", hdigest, H, {"t": args.t, "n_max": args.n_max},
                  None, rec.status, {"ramsey": rec.value}, cert, started)
    _emit(args, rep, f"R(H, K_{args.t}) = {rec.value} [{rec.status}]")
    return 0


def _cmd_balance(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    try:
        bal = balance(G)
    except ValueError as exc:
        rep = _report("balance", digest, G, {}, None, "failure",
                      {"failure": str(exc)}, None, started)
        _emit(args, rep, f"failure: {exc}")
        return 1
    cert = {"type": "balance-witness",
            "edges": [[v + 1 for v in e] for e in bal.witness]}
    rep = _report("balance", digest, G, {}, None, "exact",
                  {"balance": f"{bal.value.numerator}/{bal.value.denominator}",
                   "is_balanced": bal.is_balanced}, cert, started)
    _emit(args, rep, f"{bal.value.numerator}/{bal.value.denominator}")
    return 0


def _cmd_hyperforest(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    flag = is_hyperforest(G)
    rep = _report("hyperforest", digest, G, {}, None, "exact",
                  {"hyperforest": flag}, None, started)
    _emit(args, rep, f"hyperforest = {flag}")
    return 0 if flag else 1


def _cmd_witness(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    H, hdigest = _read_graph(args.pattern)
    wr = extremal.verify_witness(G, H, args.r, _budget(args))
    result = {"h_free": wr.h_free, "chi": wr.chi,
              "chi_exceeds_r": wr.chi_exceeds_r, "edge_count": wr.edge_count,
              "implied_bound": wr.implied_bound}
    rep = _report("witness", digest, G,
                  {"r": args.r, "h_sha256": hdigest}, None, wr.status,
                  result, None, started)
    ok = wr.h_free and wr.chi_exceeds_r
    _emit(args, rep, f"m_H({args.r}) <= {wr.implied_bound}" if ok
          else "not a witness")
    return 0 if ok else 1


def _cmd_embed_order(args):
    started = monotonic()
    G, digest = _read_graph(args.infile)
    H, hdigest = _read_graph(args.pattern)
    ordering = extremal.find_edge_ordering(H)
    if ordering is None:
        rep = _report("embed-order", digest, G, {"h_sha256": hdigest}, None,
                      "exact", {"ordering": None}, None, started)
        _emit(args, rep, "no edge ordering")
        return 1
    emb = extremal.embed_by_edge_order(G, H, ordering)
    if emb is None:
        rep = _report("embed-order", digest, G, {"h_sha256": hdigest}, None,
                      "exact", {"ordering": True, "embedding": False},
                      None, started)
        _emit(args, rep, "ordering found, no embedding")
        return 1
    assert embedding_ok(G, H, emb)
    cert = {"type": "embedding",
            "vertex_map": {str(h + 1): g + 1 for h, g in emb.vertex_map}}
    rep = _report("embed-order", digest, G, {"h_sha256": hdigest}, None,
                  "exact", {"ordering": True, "embedding": True}, cert, started)
    _emit(args, rep, "embedding found")
    return 0


def build_parser():
    top = argparse.ArgumentParser(
        prog="hyperchrome",
        description="3-uniform hypergraph coloring laboratory")
    sub = top.add_subparsers(dest="cmd", required=True)

    def common(p, infile=True, pattern=False, seeded=False, budgeted=False,
               cached=False):
        if infile:
            p.add_argument("--in", dest="infile", default=None,
                           help="input HypergraphFile (default: stdin)")
        if pattern:
            p.add_argument("--h", dest="pattern", required=True,
                           help="pattern hypergraph H (HypergraphFile)")
        if seeded:
            p.add_argument("--seed", type=int, default=None)
        if budgeted:
            p.add_argument("--budget-nodes", type=int, default=0)
            p.add_argument("--budget-ms", type=int, default=0)
        if cached:
            p.add_argument("--cache", default=None)
        p.add_argument("--json", action="store_true", default=True,
                       help="JSON report (default)")
        p.add_argument("--quiet", action="store_true",
                       help="one-line summary instead of JSON")

    g = sub.add_parser("gen", help="write a generated hypergraph to stdout")
    g.add_argument("family", choices=[
        "complete", "loose-cycle", "loose-path", "partition", "gq",
        "fq-blowup", "random", "hypertree", "k4", "k4-minus", "linear-pair",
        "neighborhood5", "sunflower7", "fano"])
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--m", type=int, default=0)
    g.add_argument("--l", type=int, default=3)
    g.add_argument("--r", type=int, default=2)
    g.add_argument("--t", type=int, default=3)
    g.add_argument("--q", type=int, default=2)
    g.add_argument("--tau", type=int, default=1)
    g.add_argument("--e", type=int, default=1)
    g.add_argument("--seed", type=int, default=None)
    g.set_defaults(func=_gen)

    p = sub.add_parser("chi", help="exact chromatic number")
    common(p, budgeted=True)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("alpha", help="exact independence number")
    common(p, budgeted=True)
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("kcolor", help="exact k-colorability")
    common(p, budgeted=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_kcolor)

    p = sub.add_parser("color", help="run a coloring algorithm")
    common(p, seeded=True, budgeted=True)
    p.add_argument("--algo", choices=["greedy", "lll", "layered", "dyadic"],
                   required=True)
    p.add_argument("--order", default="identity",
                   choices=["identity", "reverse", "degree", "random"])
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--theta", type=int, default=None)
    p.add_argument("--per-layer", dest="per_layer", type=int, default=None)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("contains", help="subgraph containment")
    common(p, pattern=True)
    p.set_defaults(func=lambda a: _cmd_contains(a, want_free=False))

    p = sub.add_parser("free", help="H-freeness")
    common(p, pattern=True)
    p.set_defaults(func=lambda a: _cmd_contains(a, want_free=True))

    p = sub.add_parser("chain", help="greedy coloring plus chain certificate")
    common(p, seeded=True)
    p.add_argument("--order", default="identity",
                   choices=["identity", "reverse", "degree", "random"])
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("ex", help="Turan number ex(n, H)")
    common(p, infile=False, pattern=True, budgeted=True, cached=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_ex)

    p = sub.add_parser("ramsey", help="Ramsey number R(H, K_t)")
    common(p, infile=False, pattern=True, budgeted=True, cached=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.set_defaults(func=_cmd_ramsey)

    p = sub.add_parser("balance", help="exact balance of a 3-graph")
    common(p)
    p.set_defaults(func=_cmd_balance)

    p = sub.add_parser("hyperforest", help="incidence-acyclicity test")
    common(p)
    p.set_defaults(func=_cmd_hyperforest)

    p = sub.add_parser("witness", help="verify an m_H(r) upper-bound witness")
    common(p, pattern=True, budgeted=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("embed-order", help="edge ordering + incremental embedding")
    common(p, pattern=True)
    p.set_defaults(func=_cmd_embed_order)

    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # infeasible preconditions are negative results, reported in-band
        print(json.dumps({"status": "failure", "error": str(exc)},
                         sort_keys=True))
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
