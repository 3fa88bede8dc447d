"""Command-line surface for the arrangement census toolkit.

Every subcommand wraps one library operation and emits a RunReport: the
command name, digests of its inputs, per-phase timings in milliseconds, the
result payload, the tool version, and the seed (when one is in play).
Payloads are deterministic given inputs and seed; timings are not and live
outside the payload.  Artifacts written with --out are the bare payload
files (normal system, arrangement, catalog), so they can be fed back in.

Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.
"""

import argparse
import hashlib
import json
import os
import random
import sys
import time
from math import comb

from . import __version__
from .affine_geometry import (are_isomorphic_trivial, region_census,
                              simplex_signature)
from .chambers import (Classified, catalog_from_dict, catalog_to_dict,
                       classify_b, enumerate_chambers, verify_catalog)
from .charpoly import (combinatorial_charpoly, iso_class_count,
                       poset_charpoly, whitney_charpoly, zaslavsky_regions)
from .concurrency import (SubsetCollection, base_collection,
                          collection_from_dict, collection_to_dict,
                          combinatorial_rank, concurrency_closure,
                          concurrency_orders, is_concurrency_free)
from .discriminantal import build, da_to_dict
from .errors import ArrangementError, TooLarge
from .exact_linalg import rational
from .normal_system import (Arrangement, arrangement_from_b, ns_from_dict,
                            ns_to_dict, random_normal_system)

DEFAULT_MAX_SUBSETS = 2 ** 22
DEFAULT_MAX_CHAMBERS = 10 ** 4


def _digest(data):
    return hashlib.sha256(data).hexdigest()[:16]


def _load_json(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    return json.loads(raw.decode("utf-8")), _digest(raw)


def _load_ns(path):
    data, dig = _load_json(path)
    return ns_from_dict(data), dig


def _parse_b(text):
    return tuple(rational(part.strip()) for part in text.split(","))


def _parse_members(text):
    out = []
    for code in text.split(","):
        code = code.strip()
        if not code.isdigit():
            raise ArrangementError("subset codes must be digit strings",
                                   got=code)
        out.append(tuple(int(c) for c in code))
    return out


def _subset_codes(subsets):
    return [list(s) for s in subsets]


def _guard_subsets(n, m, limit):
    if comb(n, m + 1) > limit:
        raise TooLarge("subset universe exceeds --max-subsets",
                       count=comb(n, m + 1), limit=limit)


class _Timer:
    def __init__(self):
        self.marks = {}
        self._last = time.monotonic()

    def mark(self, phase):
        now = time.monotonic()
        self.marks[phase] = round((now - self._last) * 1000)
        self._last = now

    def report(self):
        out = dict(self.marks)
        out["total"] = sum(self.marks.values())
        return out


def _flatten(payload, prefix=""):
    rows = []
    if isinstance(payload, dict):
        for k in sorted(payload):
            rows.extend(_flatten(payload[k], prefix + str(k) + "."))
    elif isinstance(payload, (list, tuple)):
        rows.append((prefix[:-1], json.dumps(payload)))
    else:
        rows.append((prefix[:-1], payload))
    return rows


def _emit(report, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True) + "\n")
        return
    rows = _flatten(report["payload"])
    if fmt == "csv":
        stream.write("key,value\n")
        for k, v in rows:
            stream.write("%s,%s\n" % (k, v))
    else:
        width = max((len(k) for k, _ in rows), default=0)
        for k, v in rows:
            stream.write("%-*s  %s\n" % (width, k, v))


def _write_artifact(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, sort_keys=True, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------- commands


def cmd_gen(args, timer):
    args.seed = args.seed if args.seed is not None else 0
    ns = random_normal_system(args.n, args.m, seed=args.seed,
                              bound=args.bound)
    timer.mark("compute")
    data = ns_to_dict(ns)
    if args.out:
        _write_artifact(args.out, data)
    return {"system": data, "rejections": ns.rejections}, {
        "n": args.n, "m": args.m, "bound": args.bound}


def cmd_disc(args, timer):
    ns, dig = _load_ns(args.ns)
    timer.mark("load")
    _guard_subsets(ns.n, ns.m, args.max_subsets)
    da = build(ns)
    timer.mark("compute")
    data = da_to_dict(da)
    if args.out:
        _write_artifact(args.out, data)
    return data, {"ns": dig}


def cmd_charpoly(args, timer):
    ns, dig = _load_ns(args.ns)
    timer.mark("load")
    _guard_subsets(ns.n, ns.m, args.max_subsets)
    da = build(ns)
    chi = (whitney_charpoly(da) if args.method == "whitney"
           else poset_charpoly(da))
    timer.mark("compute")
    return {"coefficients": list(chi.coefficients),
            "polynomial": chi.as_str(),
            "factored": chi.factored_str(),
            "method": args.method}, {"ns": dig}


def cmd_count(args, timer):
    ns, dig = _load_ns(args.ns)
    timer.mark("load")
    _guard_subsets(ns.n, ns.m, args.max_subsets)
    chi = poset_charpoly(build(ns))
    timer.mark("compute")
    return {"coefficients": list(chi.coefficients),
            "cones": zaslavsky_regions(chi),
            "classes": iso_class_count(chi)}, {"ns": dig}


def cmd_chambers(args, timer):
    ns, dig = _load_ns(args.ns)
    timer.mark("load")
    _guard_subsets(ns.n, ns.m, args.max_subsets)
    catalog = enumerate_chambers(build(ns), max_chambers=args.max_chambers)
    timer.mark("compute")
    data = catalog_to_dict(catalog)
    if args.out:
        _write_artifact(args.out, data)
    return data, {"ns": dig}


def cmd_classify(args, timer):
    ns, dig = _load_ns(args.ns)
    b = _parse_b(args.b)
    digests = {"ns": dig, "b": args.b}
    catalog = None
    da = build(ns)
    if args.catalog:
        data, cdig = _load_json(args.catalog)
        catalog = catalog_from_dict(da, data)
        digests["catalog"] = cdig
    timer.mark("load")
    res = classify_b(da, b, catalog)
    timer.mark("compute")
    if isinstance(res, Classified):
        return {"signs": res.signs, "class": res.class_id,
                "on_wall": None}, digests
    return {"signs": None, "class": None,
            "on_wall": _subset_codes(res.subsets)}, digests


def cmd_check_cf(args, timer):
    ns, dig = _load_ns(args.ns)
    timer.mark("load")
    _guard_subsets(ns.n, ns.m, args.max_subsets)
    verdict = is_concurrency_free(ns)
    timer.mark("compute")
    witness = (None if verdict.witness is None
               else _subset_codes(verdict.witness))
    return {"free": verdict.free, "witness": witness}, {"ns": dig}


def cmd_closure(args, timer):
    digests = {}
    if args.collection:
        data, dig = _load_json(args.collection)
        col = collection_from_dict(data)
        digests["collection"] = dig
    else:
        if args.n is None or args.m is None or args.members is None:
            raise ArrangementError(
                "closure needs --collection or --n/--m/--members")
        col = SubsetCollection(args.n, args.m, _parse_members(args.members))
        digests["args"] = "%d,%d,%s" % (args.n, args.m, args.members)
    timer.mark("load")
    closed = concurrency_closure(col)
    orders = concurrency_orders(closed)
    base = base_collection(closed)
    timer.mark("compute")
    return {"closure": collection_to_dict(closed),
            "orders": [{"set": list(u), "order": k} for u, k in orders],
            "base": _subset_codes(base.sorted_members),
            "combinatorial_rank": combinatorial_rank(col)}, digests


def cmd_regions(args, timer):
    ns, dig = _load_ns(args.ns)
    arr = arrangement_from_b(ns, _parse_b(args.b))
    timer.mark("load")
    census = region_census(arr)
    timer.mark("compute")
    return census, {"ns": dig, "b": args.b}


def cmd_signature(args, timer):
    ns, dig = _load_ns(args.ns)
    arr = arrangement_from_b(ns, _parse_b(args.b))
    timer.mark("load")
    triples = sorted(simplex_signature(arr))
    timer.mark("compute")
    return {"triangles": _subset_codes(triples)}, {
        "ns": dig, "b": args.b}


def cmd_iso(args, timer):
    ns, dig = _load_ns(args.ns)
    a1 = arrangement_from_b(ns, _parse_b(args.b1))
    a2 = arrangement_from_b(ns, _parse_b(args.b2))
    timer.mark("load")
    verdict = are_isomorphic_trivial(a1, a2)
    timer.mark("compute")
    return {"isomorphic": verdict}, {"ns": dig, "b1": args.b1,
                                     "b2": args.b2}


def cmd_catalog_verify(args, timer):
    ns, dig = _load_ns(args.ns)
    digests = {"ns": dig}
    da = build(ns)
    if args.catalog:
        data, cdig = _load_json(args.catalog)
        catalog = catalog_from_dict(da, data)
        digests["catalog"] = cdig
    else:
        catalog = enumerate_chambers(da, max_chambers=args.max_chambers)
    timer.mark("load")
    report = verify_catalog(da, catalog)
    # cross-validation: class-id equality must coincide with the oracle
    args.seed = args.seed if args.seed is not None else 0
    rng = random.Random(args.seed)
    k = len(catalog)
    pairs = ([(i, j) for i in range(k) for j in range(k)]
             if k * k <= args.pairs
             else [(rng.randrange(k), rng.randrange(k))
                   for _ in range(args.pairs)])
    mismatches = 0
    for i, j in pairs:
        ci, cj = catalog[i], catalog[j]
        iso = are_isomorphic_trivial(Arrangement(ns, ci.witness),
                                     Arrangement(ns, cj.witness))
        if iso != (ci.class_id == cj.class_id):
            mismatches += 1
    timer.mark("compute")
    checks = dict(report)
    ok = checks.pop("ok")
    payload = {
        "catalog": checks,
        "cross_validation": {"pairs": len(pairs),
                             "mismatches": mismatches},
        "ok": ok and mismatches == 0,
    }
    return payload, digests


def cmd_census(args, timer):
    digests = {"mode": args.mode}
    if args.mode == "concurrency-free":
        if args.n is None or args.m is None:
            raise ArrangementError("census needs --n and --m in "
                                   "concurrency-free mode")
        _guard_subsets(args.n, args.m, args.max_subsets)
        chi = combinatorial_charpoly(args.n, args.m)
        n, m = args.n, args.m
        digests["args"] = "%d,%d" % (n, m)
    else:
        if not args.ns:
            raise ArrangementError("census needs --ns in ns-file mode")
        ns, dig = _load_ns(args.ns)
        _guard_subsets(ns.n, ns.m, args.max_subsets)
        chi = poset_charpoly(build(ns))
        n, m = ns.n, ns.m
        digests["ns"] = dig
    timer.mark("compute")
    return {"n": n, "m": m,
            "chi": list(chi.coefficients),
            "cones": zaslavsky_regions(chi),
            "classes": iso_class_count(chi)}, digests


# ----------------------------------------------------------------- wiring


def _build_parser():
    top = argparse.ArgumentParser(
        prog="arrcensus",
        description="Exact census of generic hyperplane arrangements "
                    "via discriminantal cones.")
    top.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"],
                        default="json")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int,
                        default=int(os.environ.get("ARRCENSUS_THREADS", "1")))
    common.add_argument("--max-subsets", type=int,
                        default=DEFAULT_MAX_SUBSETS)
    common.add_argument("--max-chambers", type=int,
                        default=DEFAULT_MAX_CHAMBERS)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common],
                       help="sample a random valid normal system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, default=9)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("disc", parents=[common],
                       help="build the discriminantal arrangement")
    p.add_argument("--ns", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("charpoly", parents=[common],
                       help="characteristic polynomial of the arrangement")
    p.add_argument("--ns", required=True)
    p.add_argument("--method", choices=["poset", "whitney"],
                   default="poset")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("count", parents=[common],
                       help="cone and class counts via the poset method")
    p.add_argument("--ns", required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("chambers", parents=[common],
                       help="enumerate all cones with exact witnesses")
    p.add_argument("--ns", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("classify", parents=[common],
                       help="locate a constant vector b among the cones")
    p.add_argument("--ns", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--catalog")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-cf", parents=[common],
                       help="decide concurrency freeness, with witness")
    p.add_argument("--ns", required=True)
    p.set_defaults(func=cmd_check_cf)

    p = sub.add_parser("closure", parents=[common],
                       help="concurrency closure, orders, base, rank")
    p.add_argument("--collection")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--members")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("regions", parents=[common],
                       help="count regions of the affine arrangement at b")
    p.add_argument("--ns", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("signature", parents=[common],
                       help="triangle signature of a planar arrangement")
    p.add_argument("--ns", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("iso", parents=[common],
                       help="test two b-vectors for trivial isomorphism")
    p.add_argument("--ns", required=True)
    p.add_argument("--b1", required=True)
    p.add_argument("--b2", required=True)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("catalog-verify", parents=[common],
                       help="verify a catalog and cross-validate classes")
    p.add_argument("--ns", required=True)
    p.add_argument("--catalog")
    p.add_argument("--pairs", type=int, default=50)
    p.set_defaults(func=cmd_catalog_verify)

    p = sub.add_parser("census", parents=[common],
                       help="one table row: chi, cones, classes")
    p.add_argument("--mode", choices=["concurrency-free", "ns-file"],
                   default="concurrency-free")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--ns")
    p.set_defaults(func=cmd_census)

    return top


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    timer = _Timer()
    try:
        payload, digests = args.func(args, timer)
    except ArrangementError as err:
        sys.stderr.write(json.dumps({"error": err.as_dict()},
                                    sort_keys=True) + "\n")
        return 1
    except (OSError, json.JSONDecodeError) as err:
        sys.stderr.write(json.dumps(
            {"error": {"type": type(err).__name__,
                       "message": str(err)}}) + "\n")
        return 1
    report = {
        "command": args.command,
        "version": __version__,
        "seed": args.seed,
        "inputs": digests,
        "timings_ms": timer.report(),
        "payload": payload,
    }
    _emit(report, args.format, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
