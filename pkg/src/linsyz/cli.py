"""Command-line interface.

Every subcommand assembles one report dict; ``--format json`` prints it
as JSON and ``--format text`` renders the same data as indented text, so
the two formats always carry identical information.  Exit code is 0
exactly when all requested checks pass (informational commands always
pass unless they error).
"""

from __future__ import annotations

import argparse
import json
import sys

from .linalg import GF, QQ
from .rings import hilbert_function, dim_degree_estimate, poly_str
from .strand import DEFAULT_STEP_CAP, StrandError, compute_strand
from .syzygy import LiftError, classify, involved, syzygy_ideal
from .gensyz import (decomposition_check_k0, decomposition_check_k1,
                     generic_syzygy_ideal, grassmannian_union_check,
                     verify_cone)
from .corpus import corpus_names, find_ideal
from .verify import report_lines, run_verify_all


def _field(name):
    if name == "QQ":
        return QQ
    try:
        return GF(int(name))
    except ValueError:
        raise SystemExit("error: --field must be a prime or QQ, got %r" % name)


def _render_text(data, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)):
                lines.append("%s%s:" % (pad, k))
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, v))
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, (dict, list)):
                lines.append("%s-" % pad)
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append("%s- %s" % (pad, v))
    else:
        lines.append("%s%s" % (pad, data))
    return lines


def _emit(report, fmt):
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print("\n".join(_render_text(report)))


def _load(args):
    try:
        return find_ideal(args.ideal, _field(args.field))
    except (KeyError, ValueError) as exc:
        raise SystemExit("error: %s" % exc)


def _strand(args, ideal):
    cap = args.max_step if args.max_step is not None else DEFAULT_STEP_CAP
    try:
        return compute_strand(ideal, cap=cap)
    except StrandError as exc:
        raise SystemExit("error: %s" % exc)


def cmd_strand(args):
    strand = _strand(args, _load(args))
    report = {"command": "strand", "ideal": args.ideal,
              "dims": {str(p): d for p, d in enumerate(strand.dims)}}
    return report, True


def cmd_syzygies(args):
    strand = _strand(args, _load(args))
    p = args.step
    if not 1 <= p <= strand.length or strand.dim(p) == 0:
        raise SystemExit("error: no syzygies at step %d (strand dims %s)"
                         % (p, strand.dims))
    rows = []
    for f in strand.basis_syzygies(p):
        data = involved(f)
        rows.append({"index": f.label, "rank": data.rank,
                     "classification": classify(f, data)})
    return {"command": "syzygies", "ideal": args.ideal, "step": p,
            "syzygies": rows}, True


def _pick_syzygy(strand, p, index):
    try:
        return strand.syzygy(p, index)
    except StrandError as exc:
        raise SystemExit("error: %s" % exc)


def cmd_syzscheme(args):
    strand = _strand(args, _load(args))
    f = _pick_syzygy(strand, args.step, args.index)
    try:
        rep = syzygy_ideal(f, max_degree=args.max_degree or 6)
    except LiftError as exc:
        raise SystemExit("error: %s" % exc)
    return {"command": "syzscheme", "ideal": args.ideal, **rep.to_dict()}, True


def cmd_gensyz(args):
    model = generic_syzygy_ideal(args.g, args.k, _field(args.field))
    return {"command": "gensyz", "g": args.g, "k": args.k,
            "variables": list(model.ring.variables),
            "generators": [poly_str(q) for q in model.ideal.generators]}, True


def cmd_verify_cone(args):
    strand = _strand(args, _load(args))
    targets = []
    if args.all:
        for p in range(1, strand.length + 1):
            targets.extend(strand.basis_syzygies(p))
    else:
        if args.step is None or args.index is None:
            raise SystemExit("error: need --step and --index, or --all")
        targets.append(_pick_syzygy(strand, args.step, args.index))
    rows = []
    for f in targets:
        try:
            rows.append(verify_cone(f).to_dict())
        except LiftError as exc:
            rows.append({"step": f.p, "syzygy": f.label,
                         "error": str(exc), "pass": False})
    ok = all(r["pass"] for r in rows)
    return {"command": "verify-cone", "ideal": args.ideal,
            "results": rows, "pass": ok}, ok


def cmd_verify_decomposition(args):
    field = _field(args.field)
    d = args.max_degree or 5
    if args.k == 0:
        rep = decomposition_check_k0(args.g, d, field)
    elif args.k == 1:
        rep = decomposition_check_k1(args.g, field)
    elif args.k == 2:
        rep = grassmannian_union_check(args.g, d, field)
    else:
        raise SystemExit("error: decomposition checks cover k = 0, 1, 2")
    return {"command": "verify-decomposition", **rep.to_dict()}, rep.passed


def cmd_verify_all(args):
    report = run_verify_all(_field(args.field), args.seed)
    if args.format == "text":
        print("\n".join(report_lines(report)))
        return None, report["pass"]
    return {"command": "verify-all", **report}, report["pass"]


def cmd_hilbert(args):
    ideal = _load(args)
    dmax = args.max_degree or 6
    hil = [hilbert_function(ideal, d) for d in range(1, dmax + 1)]
    est = dim_degree_estimate(hil) if dmax >= 3 else None
    report = {"command": "hilbert", "ideal": args.ideal,
              "hilbert": {str(d): h for d, h in enumerate(hil, start=1)}}
    if est is not None:
        report["estimate"] = est.to_dict()
    return report, True


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="32003",
                        help="prime p for F_p, or QQ (default 32003)")
    common.add_argument("--max-step", type=int, default=None,
                        help="cap on strand steps")
    common.add_argument("--max-degree", type=int, default=None,
                        help="degree bound for Hilbert tables and decompositions")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized sections")
    common.add_argument("--format", choices=("text", "json"), default="text")
    ap = argparse.ArgumentParser(
        prog="linsyz",
        description="Linear strands, syzygy schemes and generic syzygy ideals "
                    "of quadric-generated graded ideals.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("strand", cmd_strand, help="Betti numbers of the linear strand")
    p.add_argument("ideal", help="corpus name (%s) or ideal file"
                   % ", ".join(corpus_names()[:4]) + ", ...")
    p = add("syzygies", cmd_syzygies, help="rank/classification table")
    p.add_argument("ideal")
    p.add_argument("--step", type=int, required=True)
    p = add("syzscheme", cmd_syzscheme, help="syzygy ideal report")
    p.add_argument("ideal")
    p.add_argument("--step", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p = add("gensyz", cmd_gensyz, help="emit generic syzygy ideal generators")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("verify-cone", cmd_verify_cone, help="cone-structure check")
    p.add_argument("ideal")
    p.add_argument("--step", type=int)
    p.add_argument("--index", type=int)
    p.add_argument("--all", action="store_true")
    p = add("verify-decomposition", cmd_verify_decomposition,
            help="degreewise decomposition check for Gensyz_k")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("verify-all", cmd_verify_all, help="full verification battery")
    p = add("hilbert", cmd_hilbert, help="Hilbert table and dim/degree estimate")
    p.add_argument("ideal")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report, ok = args.fn(args)
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if report is not None:
        _emit(report, args.format)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
