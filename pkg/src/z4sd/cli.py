"""Command line interface: ``z4sd <subcommand> ...``.

Code arguments accept a ``.z4c`` path or a catalog id such as ``D_24_1``.
Exit status is 0 when every check passes, 1 on a failed check and 2 on a
usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from z4sd import catalog, gf2
from z4sd import search as zsearch
from z4sd.bounds import (
    HypothesisError,
    binary_sd_upper_bound,
    check_prop5,
    check_theorem_residue_extremal,
    euclidean_upper_bound,
    lee_upper_bound,
)
from z4sd.constructions import bordered_double_circulant, four_negacirculant, run_lift_search
from z4sd.z4 import format_z4c, read_z4c, residue, write_z4c


def _load_code(spec: str):
    p = Path(spec)
    if p.exists():
        return read_z4c(p)
    try:
        return catalog.get(spec)
    except KeyError:
        raise ValueError(f"{spec}: no such file or catalog id") from None


def _emit(args, pairs) -> None:
    if args.format == "tsv":
        for k, v in pairs:
            print(f"{k}\t{v}")
    else:
        width = max((len(k) for k, _ in pairs), default=0)
        for k, v in pairs:
            print(f"{k:<{width}}  {v}")


def _fmt_inf(v) -> str:
    return "-" if v == float("inf") else str(v)


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    if args.kind == "bdc":
        border = tuple(int(x) for x in args.border.split(","))
        if len(border) != 3:
            raise ValueError("--border takes three comma-separated values a,b,g")
        code = bordered_double_circulant(args.row, border)
        note = f"bordered double circulant row={args.row} border={args.border}"
    else:
        code = four_negacirculant(args.rowA, args.rowB)
        note = f"four-negacirculant A={args.rowA} B={args.rowB}"
    if args.output:
        write_z4c(args.output, code, [note])
    else:
        sys.stdout.write(format_z4c(code, [note]))
    return 0


def cmd_verify_catalog(args) -> int:
    rep = catalog.verify_catalog(args.pattern, threads=args.threads)
    sys.stdout.write(rep.render(args.format))
    return 0 if rep.ok else 1


def cmd_minlee(args) -> int:
    code = _load_code(args.code)
    if args.exact or (args.budget is None and code.log2_size <= zsearch.ENUM_MAX_LOG2):
        prof = zsearch.enumerate_weights(code, threads=args.threads)
    else:
        budget = args.budget if args.budget is not None else 1_000_000
        prof = zsearch.bounded_search(code, budget, rng_seed=args.seed, info_sets=args.info_sets)
    pairs = [
        ("exact", prof.exact),
        ("d_hamming", _fmt_inf(prof.d_hamming)),
        ("d_lee", _fmt_inf(prof.d_lee)),
        ("d_euclidean", _fmt_inf(prof.d_euclidean)),
        ("counts_at_min", ",".join(map(str, prof.counts_at_min))),
    ]
    for name, w in sorted(prof.witnesses.items()):
        pairs.append((f"witness_{name}", str(w)))
    _emit(args, pairs)
    return 0


def cmd_census(args) -> int:
    code = _load_code(args.code)
    cen = zsearch.lee_split_census(code, args.lee, threads=args.threads)
    pairs = [(f"({a},{b})", cen[(a, b)]) for a, b in sorted(cen)]
    _emit(args, pairs or [("none", 0)])
    return 0


def cmd_sinv(args) -> int:
    code = _load_code(args.code)
    rows = []
    for k in range(1, args.k + 1) if args.all_k else [args.k]:
        s = zsearch.s_invariant(code, args.t, k, threads=args.threads)
        rows.append((f"S_{args.t},{k}", "(" + ",".join(map(str, s.triple())) + ")"))
    _emit(args, rows)
    return 0


def cmd_distinguish(args) -> int:
    codes = [_load_code(c) for c in args.codes]
    groups = zsearch.distinguish(codes, args.t, args.kmax, threads=args.threads)
    _emit(args, [(f"group_{g}", " ".join(args.codes[i] for i in members)) for g, members in enumerate(groups, 1)])
    return 0


def cmd_residue(args) -> int:
    code = _load_code(args.code)
    res = residue(code)
    if args.output:
        gf2.write_g2c(args.output, res, [f"residue of {args.code}"])
    d = gf2.min_weight(res) if res.dimension else 0
    _emit(args, [
        ("length", res.length),
        ("dimension", res.dimension),
        ("min_weight", d),
        ("parity", gf2.parity_class(res)),
        ("self_dual", res.is_self_dual()),
    ])
    return 0


def cmd_bounds(args) -> int:
    if args.which == "lee":
        _emit(args, [("lee_upper_bound", lee_upper_bound(args.n))])
    elif args.which == "euclid":
        _emit(args, [("euclidean_upper_bound", euclidean_upper_bound(args.n, args.type))])
    else:
        _emit(args, [("binary_sd_upper_bound", binary_sd_upper_bound(args.n))])
    return 0


def cmd_check(args) -> int:
    code = _load_code(args.code)
    if args.which == "thm3":
        rep = check_theorem_residue_extremal(code, d_lee=args.d_lee, code_id=args.code)
    else:
        rep = check_prop5(code, gf2.read_g2c(args.container), d_lee=args.d_lee, code_id=args.code)
    pairs = [("code", rep.code_id), ("quantity", rep.quantity), ("claimed", rep.claimed), ("bound", rep.bound), ("source", rep.source)]
    pairs += [(k, v) for k, v in rep.facts.items()]
    pairs.append(("result", "PASS" if rep.satisfied else "FAIL"))
    _emit(args, pairs)
    return 0 if rep.satisfied else 1


def cmd_lift_search(args) -> int:
    c1 = gf2.read_g2c(args.residue)
    res = run_lift_search(c1, args.trials, args.seed, args.target_dl, limit=args.limit, kicks=args.kicks)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, code in enumerate(res.codes, 1):
            write_z4c(out / f"lift_{i}.z4c", code, [f"lift search seed={args.seed} target_dl={args.target_dl}"])
    _emit(args, [
        ("trials", res.trials),
        ("descended_to_zero", res.descended_to_zero),
        ("duplicates", res.duplicates),
        ("rejected_not_self_dual", res.rejected_not_self_dual),
        ("rejected_weight", res.rejected_weight),
        ("found", len(res.codes)),
    ])
    return 0


def cmd_report_table3(args) -> int:
    rep = catalog.report_table3(threads=args.threads)
    sys.stdout.write(rep.render(args.format))
    return 0 if rep.ok else 1


def cmd_report_distinct60(args) -> int:
    ids = args.ids.split(",") if args.ids else None
    rep = catalog.report_distinct60(ids, threads=args.threads)
    sys.stdout.write(rep.render(args.format))
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="z4sd", description="Self-dual Z4-codes: construction, weights, bounds and catalog checks.")
    p.add_argument("--threads", type=int, default=1, help="worker threads for enumeration (default 1)")
    p.add_argument("--format", choices=("text", "tsv"), default="text", help="output format")
    # the global flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "tsv"), default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a double circulant code")
    csub = c.add_subparsers(dest="kind", required=True)
    b = csub.add_parser("bdc", parents=[common], help="bordered double circulant")
    b.add_argument("--row", required=True, help="first row of the circulant block, Z4 digits")
    b.add_argument("--border", required=True, help="alpha,beta,gamma")
    b.add_argument("-o", "--output")
    f = csub.add_parser("fnc", parents=[common], help="four-negacirculant")
    f.add_argument("--rowA", required=True)
    f.add_argument("--rowB", required=True)
    f.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify-catalog", parents=[common], help="check catalog codes against the manifest")
    v.add_argument("pattern", nargs="?", default="*", help="id glob, e.g. 'D_24*'")
    v.set_defaults(func=cmd_verify_catalog)

    m = sub.add_parser("minlee", parents=[common], help="minimum weights, exact or bounded")
    m.add_argument("code")
    m.add_argument("--exact", action="store_true", help="force full enumeration")
    m.add_argument("--budget", type=int, help="codewords to visit in a bounded search")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--info-sets", type=int, default=0, help="split the budget over random information sets")
    m.set_defaults(func=cmd_minlee)

    s = sub.add_parser("census", parents=[common], help="(n1+n3, n2) split of the codewords of one Lee weight")
    s.add_argument("code")
    s.add_argument("--lee", type=int, required=True)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("sinv", parents=[common], help="S_{t,k} invariant triple")
    s.add_argument("code")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--all-k", action="store_true", help="report k = 1..K")
    s.set_defaults(func=cmd_sinv)

    d = sub.add_parser("distinguish", parents=[common], help="group codes by S_{t,k} fingerprints")
    d.add_argument("codes", nargs="+")
    d.add_argument("--t", type=int, required=True)
    d.add_argument("--kmax", type=int, default=4)
    d.set_defaults(func=cmd_distinguish)

    r = sub.add_parser("residue", parents=[common], help="residue code summary")
    r.add_argument("code")
    r.add_argument("-o", "--output", help="write the residue as .g2c")
    r.set_defaults(func=cmd_residue)

    bnd = sub.add_parser("bounds", parents=[common], help="upper bounds")
    bsub = bnd.add_subparsers(dest="which", required=True)
    x = bsub.add_parser("lee", parents=[common])
    x.add_argument("--n", type=int, required=True)
    x = bsub.add_parser("euclid", parents=[common])
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--type", required=True, choices=("I", "II"))
    x = bsub.add_parser("binary", parents=[common])
    x.add_argument("--n", type=int, required=True)
    bnd.set_defaults(func=cmd_bounds)

    chk = sub.add_parser("check", parents=[common], help="certificate checks on one code")
    chsub = chk.add_subparsers(dest="which", required=True)
    x = chsub.add_parser("thm3", parents=[common], help="extremal residue at lengths 24k, 24k+8")
    x.add_argument("code")
    x.add_argument("--d-lee", type=int, help="established minimum Lee weight (else enumerated)")
    x = chsub.add_parser("prop5", parents=[common], help="s-extremal self-dual container of the residue")
    x.add_argument("code")
    x.add_argument("container", help=".g2c file")
    x.add_argument("--d-lee", type=int)
    chk.set_defaults(func=cmd_check)

    ls = sub.add_parser("lift-search", parents=[common], help="seeded search for lifts of a doubly even code")
    ls.add_argument("--residue", required=True, help=".g2c file")
    ls.add_argument("--trials", type=int, required=True)
    ls.add_argument("--seed", type=int, default=0)
    ls.add_argument("--target-dl", type=int, required=True)
    ls.add_argument("--limit", type=int, help="stop after this many codes")
    ls.add_argument("--kicks", type=int, default=32, help="perturbed restarts per trial when the descent stalls")
    ls.add_argument("--out-dir", help="write found codes here")
    ls.set_defaults(func=cmd_lift_search)

    t3 = sub.add_parser("report-table3", parents=[common], help="S-invariant triples of the length-24 double circulant codes")
    t3.set_defaults(func=cmd_report_table3)
    d60 = sub.add_parser("report-distinct60", parents=[common], help="fingerprint classes of the length-24 catalog codes")
    d60.add_argument("--ids", help="comma-separated subset of catalog ids")
    d60.set_defaults(func=cmd_report_distinct60)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    zsearch.set_threads(args.threads)
    try:
        return args.func(args)
    except (ValueError, KeyError, HypothesisError) as exc:
        print(f"z4sd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
