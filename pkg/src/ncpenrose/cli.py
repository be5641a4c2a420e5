"""Command-line interface: ``ncpenrose <command> --r R ...``.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""
import argparse
import json
import sys

from . import k0ring, multimatrix, points, quivermap, seqspace, tiling, verify, wordalg


def _emit(args, obj, text):
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def cmd_hilbert(args):
    bs = [wordalg.b(args.r, n) for n in range(args.N + 1)]
    ok = wordalg.hilbert_identity(args.r, args.N)
    _emit(args, {"r": args.r, "N": args.N, "b": bs, "identity": ok},
          f"b_0..b_{args.N} = {','.join(map(str, bs))}\n"
          f"(1 - t - ... - t^{args.r + 1}) H_B = 1 + ... + t^{args.r} mod t^{args.N + 1}: {str(ok).lower()}")
    return 0 if ok else 1


def cmd_enumerate(args):
    if args.what == "words":
        items = wordalg.basis(args.r, args.n)
        shown = [w or "1" for w in items]
    else:
        items = [s.digits for s in seqspace.enumerate_Xn(args.r, args.n)]
        shown = [w or "(empty)" for w in items]
    _emit(args, {"r": args.r, "n": args.n, "what": args.what, "count": len(items), "items": items},
          f"{len(items)} {args.what}\n" + "\n".join(shown))
    return 0


def cmd_bratteli(args):
    d = multimatrix.tower_diagram(args.r, args.N)
    if args.dot:
        sys.stdout.write(d.to_dot())
        return 0
    lines = [f"A({n}): " + " ".join(map(str, sizes)) for n, sizes in enumerate(d.levels)]
    _emit(args, dict(d.to_json(), r=args.r), "\n".join(lines))
    return 0


def _zalpha_text(x):
    return f"{x}  (approx {x.decimal(30)})"


def cmd_k0(args):
    r = args.r
    if args.k0cmd == "expand":
        g = k0ring.parse_zalpha(args.cls, r)
        digits = k0ring.digit_expand(g, args.depth)
        ok = k0ring.resum(r, digits) == g
        text = (",".join(f"({e},{d})" for e, d in digits) or "(empty)")
        _emit(args, {"r": r, "class": g.to_json(), "digits": [list(p) for p in digits], "resum_exact": ok},
              f"digits {text}\nresum exact: {str(ok).lower()}")
        return 0 if ok else 1
    if args.k0cmd == "shift":
        x = k0ring.class_of_shift(r, args.n, args.flip)
        _emit(args, {"r": r, "n": args.n, "class": x.to_json()}, f"[O({args.n})] = {_zalpha_text(x)}")
        return 0
    if args.k0cmd == "eval":
        x = k0ring.eval_laurent(r, k0ring.parse_laurent(args.poly), args.flip)
        _emit(args, {"r": r, "poly": args.poly, "class": x.to_json()}, _zalpha_text(x))
        return 0
    if args.k0cmd == "compare":
        order, F = k0ring.cancellation_compare(r, k0ring.parse_laurent(args.pm), k0ring.parse_laurent(args.pn))
        fs = None if F is None else {str(k): v for k, v in sorted(F.items())}
        ftxt = "" if F is None else " complement: " + (" + ".join(
            f"O({k})" + (f"^{v}" if v > 1 else "") for k, v in sorted(F.items(), reverse=True)) or "0")
        _emit(args, {"r": r, "order": order, "complement": fs}, order + ftxt)
        return 0
    if args.k0cmd == "matrix":
        M = k0ring.transition_matrix(r)
        v = k0ring.eigvec_v(r)
        ok = k0ring.vM_equals_alpha_v(r)
        _emit(args, {"r": r, "M": M, "v": [x.to_json() for x in v], "vM_eq_alpha_v": ok},
              "M = " + str(M) + "\nv = (" + ", ".join(map(str, v)) + ")\nvM = alpha v: " + str(ok).lower())
        return 0 if ok else 1
    if args.k0cmd == "growth":
        ok = k0ring.growth_limit_check(r, args.n)
        val = k0ring.growth_constant_decimal(r)
        _emit(args, {"r": r, "n": args.n, "constant_approx": str(val), "within_1e-6": ok},
              f"limit constant approx {val}\n|b_{args.n} alpha^-{args.n} - L| < 1e-6: {str(ok).lower()}")
        return 0 if ok else 1
    raise AssertionError(args.k0cmd)


def cmd_quiver(args):
    q = quivermap.Quiver(args.r)
    if args.dot:
        sys.stdout.write(q.to_dot())
        return 0
    w = []
    inj = quivermap.injectivity_check(args.r, args.N, w)
    ideal = quivermap.ideal_check(args.r, min(args.N, 8), w)
    coker = quivermap.coker_check(args.r, w)
    rel, ex = quivermap.k0_presentation(args.r)
    k0ok = quivermap.k0_check(args.r)
    reports = [
        {"check": "injectivity", "r": args.r, "N": args.N, "pass": inj, "witnesses": []},
        {"check": "ideal", "r": args.r, "N": min(args.N, 8), "pass": ideal, "witnesses": []},
        {"check": "coker", "r": args.r, "N": args.r + 2, "pass": coker, "witnesses": []},
        {"check": "k0_presentation", "r": args.r, "N": None, "pass": k0ok,
         "witnesses": [repr(rel), repr(ex["O"])]},
    ]
    if w:
        reports[0]["witnesses"] = [str(x) for x in w]
    text = "\n".join(f"{'PASS' if rp['pass'] else 'FAIL'} {rp['check']}" for rp in reports)
    text += f"\nrelation: ({rel}) p1 = 0\n[O] = ({ex['O']}) p1 = t^-1 p1 mod relation"
    _emit(args, {"r": args.r, "checks": reports}, text)
    return 0 if all(rp["pass"] for rp in reports) else 1


def _seq(text, r):
    pre, _, cyc = text.partition(":")
    if not cyc:
        raise ValueError(f"sequence {text!r} must look like PRE:CYC")
    return seqspace.EventualSeq(pre, cyc, r)


def cmd_points(args):
    if args.pcmd == "f2":
        rep = points.enumerate_f2(args.N, args.r)
        lines = [f"{rep['total']} action strings of length {args.N}; {rep['pure']} of sequence form; "
                 f"{rep['unresolved']} with (1,1) positions (unresolved)"]
        lines += [f"{z}: {v['count']} ({v['pure']} sequence form)" for z, v in rep["classes"].items()]
        _emit(args, rep, "\n".join(lines))
        return 0
    z = _seq(args.z, args.r)
    M = points.from_seq(z)
    if args.pcmd == "module":
        obj = {"module": M.to_json(), "cartwheel_class": seqspace.is_cartwheel_class(z)}
        text = json.dumps(M.to_json(), sort_keys=True)
        if args.r == 1:
            s = points.to_sphere_seq(M)
            path = points.psi_path(s)
            fmt = lambda a: "inf" if a == points.INF else str(a)
            obj["sphere"] = {"pre": [fmt(a) for a in s.pre], "cyc": [fmt(a) for a in s.cyc]}
            obj["path"] = {"pre": [list(a) for a in path.pre], "cyc": [list(a) for a in path.cyc]}
            text += "\nsphere sequence: " + " ".join(fmt(s.entry(i)) for i in range(12)) + " ..."
            text += "\npath: " + " ".join(f"{lab}({a}->{b})" for lab, a, b in (path.arrow(i) for i in range(12))) + " ..."
        text += f"\ncartwheel class: {str(seqspace.is_cartwheel_class(z)).lower()}"
        _emit(args, obj, text)
        return 0
    if args.pcmd == "iso":
        w = _seq(args.w, args.r)
        iso = points.qgr_iso(M, points.from_seq(w))
        _emit(args, {"z": z.to_json(), "w": w.to_json(), "iso": iso, "tail_equal": seqspace.tail_equal(z, w)},
              f"isomorphic tails: {str(iso).lower()}")
        return 0
    raise AssertionError(args.pcmd)


def cmd_tiles(args):
    if args.r != 1:
        print("tiles supports r = 1 only", file=sys.stderr)
        return 2
    P = tiling.patch_from_prefix(seqspace.FiniteSeq(args.prefix, 1), args.max_tiles)
    code = tiling.code_point(P, P.point).digits
    ok_match, viol = tiling.verify_matching(P.triangles)
    items = P.triangles
    extra = {}
    if args.merge:
        merged = tiling.merge_to_kites_darts(P.triangles)
        items = merged["quads"] + merged["unpaired"]
        ok_q, _ = tiling.verify_matching(merged["quads"])
        ok_match = ok_match and ok_q
        extra = {"kites": sum(q.kind == "kite" for q in merged["quads"]),
                 "darts": sum(q.kind == "dart" for q in merged["quads"]),
                 "unpaired": len(merged["unpaired"])}
    if args.out:
        tiling.render_svg(items, args.out, dots=args.dots)
    if args.dump:
        obj = P.to_json()
        if args.merge:
            obj["quads"] = [q.to_json() for q in merged["quads"]]
        with open(args.dump, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, sort_keys=True, indent=1)
            fh.write("\n")
    counts = tiling.kind_counts(P.triangles, 0)
    obj = dict({"prefix": args.prefix, "triangles": len(P.triangles), "A": counts[0], "a": counts[1],
                "code": code, "round_trip": code == args.prefix, "matching": ok_match}, **extra)
    text = (f"{len(P.triangles)} triangles (A: {counts[0]}, a: {counts[1]})\n"
            f"code of marked point: {code} (round trip {str(code == args.prefix).lower()})\n"
            f"matching rule: {'ok' if ok_match else 'violated'}")
    if extra:
        text += f"\nkites: {extra['kites']}, darts: {extra['darts']}, unpaired half-tiles: {extra['unpaired']}"
    _emit(args, obj, text)
    return 0 if (code == args.prefix and ok_match) else 1


def cmd_verify(args):
    reports = verify.run_checks(args.r, args.level, args.only)
    ok = all(rp.passed for rp in reports)
    if args.json:
        print(json.dumps({"r": args.r, "level": args.level, "pass": ok,
                          "checks": [rp.to_json(args.timing) for rp in reports]}, sort_keys=True))
    else:
        for rp in reports:
            tail = f"  {rp.seconds:.2f}s" if args.timing else ""
            wit = f"  {rp.witnesses}" if rp.witnesses else ""
            print(f"{'PASS' if rp.passed else 'FAIL'} {rp.check} (r={rp.r}, N={rp.N}){wit}{tail}")
        print(f"{sum(rp.passed for rp in reports)}/{len(reports)} checks passed")
    return 0 if ok else 1


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=_positive, default=1, help="allowed run of consecutive 1s (default 1)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="ncpenrose", description=__doc__.splitlines()[0],
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hilbert", parents=[common], help="dimensions b_n and the Hilbert identity")
    s.add_argument("--N", type=_nonneg, default=10)
    s.set_defaults(fn=cmd_hilbert)

    s = sub.add_parser("enumerate", parents=[common], help="list X(n) or the words of B_n")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--what", choices=["seqs", "words"], default="seqs")
    s.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("bratteli", parents=[common], help="Bratteli diagram of the tower A(n)")
    s.add_argument("--N", type=_nonneg, default=6)
    s.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    s.set_defaults(fn=cmd_bratteli)

    s = sub.add_parser("k0", parents=[common], help="arithmetic in Z[alpha]")
    ks = s.add_subparsers(dest="k0cmd", required=True)
    e = ks.add_parser("expand", parents=[common], help="greedy base-alpha digits of a class")
    e.add_argument("--class", dest="cls", required=True, help="polynomial in a, e.g. '2' or 'a^2 - 1'")
    e.add_argument("--depth", type=_positive, default=k0ring.DEFAULT_DEPTH)
    e = ks.add_parser("shift", parents=[common], help="class of O(n)")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--flip", action="store_true", help="use [O(n)] -> alpha^-n")
    e = ks.add_parser("eval", parents=[common], help="class of a Laurent polynomial in t")
    e.add_argument("--poly", required=True)
    e.add_argument("--flip", action="store_true")
    e = ks.add_parser("compare", parents=[common], help="compare two classes, with a complement")
    e.add_argument("--pm", required=True)
    e.add_argument("--pn", required=True)
    ks.add_parser("matrix", parents=[common], help="transition matrix and eigenvector")
    e = ks.add_parser("growth", parents=[common], help="growth constant check")
    e.add_argument("--n", type=_positive, default=60)
    s.set_defaults(fn=cmd_k0)

    s = sub.add_parser("quiver", parents=[common], help="quiver embedding checks")
    s.add_argument("--N", type=_nonneg, default=10)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(fn=cmd_quiver)

    s = sub.add_parser("points", parents=[common], help="point modules")
    ps = s.add_subparsers(dest="pcmd", required=True)
    e = ps.add_parser("module", parents=[common], help="module of a sequence PRE:CYC")
    e.add_argument("--z", required=True)
    e = ps.add_parser("iso", parents=[common], help="compare two sequence modules")
    e.add_argument("--z", required=True)
    e.add_argument("--w", required=True)
    e = ps.add_parser("f2", parents=[common], help="classify all F2 action strings of length N")
    e.add_argument("--N", type=_nonneg, default=4)
    s.set_defaults(fn=cmd_points)

    s = sub.add_parser("tiles", parents=[common], help="patch coded by a prefix")
    s.add_argument("--prefix", required=True)
    s.add_argument("--merge", action="store_true", help="amalgamate into kites and darts")
    s.add_argument("--out", "--svg", dest="out", help="write SVG here")
    s.add_argument("--dump", help="write the exact patch as JSON here")
    s.add_argument("--dots", action="store_true", help="draw vertex colors")
    s.add_argument("--max-tiles", type=_positive, default=tiling.DEFAULT_MAX_TILES)
    s.set_defaults(fn=cmd_tiles)

    s = sub.add_parser("verify", parents=[common], help="run the check suite")
    s.add_argument("--level", choices=verify.LEVELS, default="quick")
    s.add_argument("--only", action="append", help="run checks whose id starts with this (repeatable)")
    s.add_argument("--timing", action="store_true", help="include timings (breaks byte-identical output)")
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run(argv):
    """Entry point returning the exit code, treating argparse exits the same way."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
