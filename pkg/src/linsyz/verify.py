"""Verification battery: every structure theorem checked mechanically.

Each check_* function returns a plain dict with a "pass" key; the dicts
are JSON-serializable, deterministic for a fixed seed and field, and
contain only field-independent data (dimensions, flags, labels) so that
runs over different primes can be compared table-for-table.
"""

from __future__ import annotations

import math

from .linalg import GF
from .rings import hilbert_function, GradedIdeal
from .strand import compute_strand, koszul_betti
from .syzygy import LiftError, chain_lift, classify, involved, syzygy_ideal
from .gensyz import (decomposition_check_k0, decomposition_check_k1,
                     grassmannian_union_check, is_one_generic_2xg,
                     pluecker_ideal, section_vanishing_ideal, subkoszul_check,
                     verify_cone)
from .corpus import corpus

AGREEMENT_CAP = 4
CONE_IDEALS = ("rnc3", "rnc4", "rnc5", "reducible",
               "gensyz_2_0", "gensyz_2_1", "gensyz_3_0", "gensyz_3_1",
               "gensyz_3_2", "gensyz_4_0", "gensyz_4_1", "gensyz_4_2")
SUBKOSZUL_CASES = ((3, 1), (4, 1), (4, 2), (5, 2))


class VerifyContext:
    """Shared corpus and strand cache for one verification run."""

    def __init__(self, field=None, seed=0, cap=AGREEMENT_CAP):
        self.field = field or GF()
        self.seed = seed
        self.cap = cap
        self.entries = {e.name: e for e in corpus(self.field)}
        self._strands = {}

    def strand(self, name):
        if name not in self._strands:
            self._strands[name] = compute_strand(self.entries[name].ideal,
                                                 cap=self.cap)
        return self._strands[name]


def check_gensyz0(ctx, up_to=5, gs=(2, 3, 4, 5, 6)):
    """Gensyz_0 equals hyperplane-ideal intersect point-ideal degreewise."""
    cases = []
    for g in gs:
        rep = decomposition_check_k0(g, up_to, ctx.field)
        cases.append(rep.to_dict())
    return {"check": "gensyz0_decomposition",
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def check_gensyz1(ctx, gs=(2, 3, 4, 5, 6)):
    """Gensyz_1 generators span exactly the Segre quadrics."""
    cases = []
    for g in gs:
        rep = decomposition_check_k1(g, ctx.field)
        d = rep.to_dict()
        d["expected_dim"] = math.comb(g, 2)
        d["pass"] = d["pass"] and d["degrees"][0]["gensyz_dim"] == math.comb(g, 2)
        cases.append(d)
    return {"check": "gensyz1_segre",
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def check_gensyz2(ctx, up_to=5, gs=(3, 4, 5)):
    """Gensyz_2 equals (x-ideal) intersect (Pluecker ideal) degreewise."""
    cases = []
    for g in gs:
        rep = grassmannian_union_check(g, up_to, ctx.field)
        cases.append(rep.to_dict())
    return {"check": "gensyz2_grassmannian_union",
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def check_strand_agreement(ctx):
    """Iterative strand dims equal the independent Koszul-kernel dims."""
    cases = []
    for name in sorted(ctx.entries):
        strand = ctx.strand(name)
        steps = []
        for p in range(1, min(strand.length, ctx.cap) + 1):
            iterative = strand.dim(p)
            koszul = koszul_betti(ctx.entries[name].ideal, p)
            steps.append({"p": p, "iterative": iterative, "koszul": koszul,
                          "equal": iterative == koszul})
        cases.append({"ideal": name, "steps": steps,
                      "pass": all(s["equal"] for s in steps)})
    return {"check": "strand_agreement",
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def check_rank_bound(ctx):
    """rank f >= p + 1 for every basis syzygy of every corpus ideal."""
    cases = []
    for name in sorted(ctx.entries):
        strand = ctx.strand(name)
        rows = []
        for p in range(1, strand.length + 1):
            for f in strand.basis_syzygies(p):
                try:
                    data = involved(f)
                    ok = data.rank >= p + 1
                    rows.append({"p": p, "index": f.label, "rank": data.rank,
                                 "pass": ok})
                except LiftError as exc:
                    rows.append({"p": p, "index": f.label, "rank": None,
                                 "pass": False, "error": str(exc)})
        cases.append({"ideal": name, "syzygies": rows,
                      "pass": all(r["pass"] for r in rows)})
    return {"check": "rank_bound",
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def check_cone(ctx):
    """verify_cone for every basis syzygy of the cone-test ideals."""
    cases = []
    for name in CONE_IDEALS:
        strand = ctx.strand(name)
        rows = []
        for p in range(1, strand.length + 1):
            for f in strand.basis_syzygies(p):
                try:
                    rep = verify_cone(f)
                    rows.append({"p": p, "index": f.label,
                                 "rank": rep.rank, "k": rep.k,
                                 "spans_equal": rep.spans_equal,
                                 "pass": rep.passed})
                except LiftError as exc:
                    rows.append({"p": p, "index": f.label,
                                 "pass": False, "error": str(exc)})
        cases.append({"ideal": name, "syzygies": rows,
                      "pass": all(r["pass"] for r in rows)})
    return {"check": "cone",
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def check_scroll_data(ctx):
    """Scrollar p=1 syzygies of rnc3/rnc4: degree 3, codim 2, 1-generic."""
    cases = []
    for name in ("rnc3", "rnc4"):
        strand = ctx.strand(name)
        rows = []
        for f in strand.basis_syzygies(1):
            lift = chain_lift(f)
            if classify(f, lift.data) != "scrollar":
                continue
            rep = syzygy_ideal(f, lift)
            from .gensyz import build_phi
            phi = build_phi(f, lift)
            r = lift.rank
            row1 = phi.assignment[:r]
            row2 = phi.assignment[r:2 * r]
            og = is_one_generic_2xg(row1, row2, strand.ring, seed=ctx.seed)
            ok = (rep.estimate.ok and rep.estimate.degree == 3
                  and rep.to_dict()["codimension"] == 2 and og.one_generic)
            rows.append({"index": f.label, "rank": lift.rank,
                         "degree": rep.estimate.degree,
                         "codimension": rep.to_dict()["codimension"],
                         "one_generic": og.one_generic, "pass": ok})
        cases.append({"ideal": name, "scrollar_syzygies": rows,
                      "pass": bool(rows) and all(r["pass"] for r in rows)})
    return {"check": "scroll_data",
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def check_subkoszul(ctx):
    """Distinguished rank-g syzygy at step g-k-1 of Gensyz_k(G)."""
    cases = []
    for g, k in SUBKOSZUL_CASES:
        name = "gensyz_%d_%d" % (g, k)
        strand = ctx.strand(name) if name in ctx.entries else None
        rep = subkoszul_check(g, k, ctx.field, strand)
        cases.append(rep.to_dict())
    return {"check": "subkoszul",
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def _expected_grassmannian_hilbert(w, d, field):
    """Hilbert function of the Grassmannian of 2-quotients of a (w-1)-space."""
    if w - 1 == 3:
        return math.comb(d + 2, 2)
    ideal = pluecker_ideal(w - 1, field)
    return hilbert_function(ideal, d)


def check_section_ideals(ctx, ws=(4, 5), n_random=5, max_degree=5):
    """V(Pluecker + section ideal) has the Hilbert function of a smaller
    Grassmannian, for basis and seeded-random sections."""
    import random
    rng = random.Random(ctx.seed)
    field = ctx.field
    cases = []
    for w in ws:
        big = pluecker_ideal(w, field)
        ring = big.ring
        expected = [_expected_grassmannian_hilbert(w, d, field)
                    for d in range(1, max_degree + 1)]
        sections = [("e%d" % i, {i: field.one}) for i in range(w)]
        for t in range(n_random):
            if field.kind == "prime":
                s = {i: field(rng.randrange(1, field.p)) for i in range(w)}
            else:
                s = {i: field(rng.randrange(1, 100)) for i in range(w)}
            sections.append(("random%d" % t, s))
        rows = []
        for label, s in sections:
            lin = section_vanishing_ideal(w, s, field)
            combined = GradedIdeal(ring, big.generators + lin.generators)
            hil = [hilbert_function(combined, d) for d in range(1, max_degree + 1)]
            rows.append({"section": label, "hilbert": hil,
                         "expected": expected, "pass": hil == expected})
        cases.append({"w": w, "sections": rows,
                      "pass": all(r["pass"] for r in rows)})
    return {"check": "section_ideals", "seed": ctx.seed,
            "cases": cases, "pass": all(c["pass"] for c in cases)}


def check_reducible(ctx, up_to=5):
    """The reducible example: rank p+1 syzygy, Syz(f) = hyperplane + line."""
    from .rings import ideal_intersect_piece
    field = ctx.field
    strand = ctx.strand("reducible")
    f = strand.syzygy(1, 0)
    lift = chain_lift(f)
    cls = classify(f, lift.data)
    rep = syzygy_ideal(f, lift)
    ring = strand.ring
    hyper = GradedIdeal(ring, [ring.variable(2)])          # (y)
    space = GradedIdeal(ring, [ring.variable(0), ring.variable(1)])
    degrees = []
    for d in range(2, up_to + 1):
        inter = ideal_intersect_piece(hyper, space, d)
        lhs = rep.ideal.piece(d)
        degrees.append({"d": d, "syzygy_ideal_dim": lhs.dim,
                        "intersection_dim": inter.dim,
                        "equal": lhs == inter})
    ok = (cls == "reducible" and lift.rank == f.p + 1
          and all(e["equal"] for e in degrees))
    return {"check": "reducible_decomposition", "rank": lift.rank,
            "classification": cls, "degrees": degrees, "pass": ok}


CHECKS = (
    ("gensyz0", check_gensyz0),
    ("gensyz1", check_gensyz1),
    ("gensyz2", check_gensyz2),
    ("strand_agreement", check_strand_agreement),
    ("rank_bound", check_rank_bound),
    ("cone", check_cone),
    ("scroll_data", check_scroll_data),
    ("subkoszul", check_subkoszul),
    ("section_ideals", check_section_ideals),
    ("reducible", check_reducible),
)


def run_verify_all(field=None, seed=0):
    """Run every check; returns a single report dict."""
    ctx = VerifyContext(field, seed)
    field = ctx.field
    report = {
        "suite": "verify-all",
        "field": "QQ" if field.kind == "rationals" else str(field.p),
        "seed": seed,
        "checks": [],
    }
    for name, fn in CHECKS:
        report["checks"].append(fn(ctx))
    report["pass"] = all(c["pass"] for c in report["checks"])
    return report


def strip_field_dependent(report):
    """Report with the field marker removed, for cross-prime comparison."""
    out = dict(report)
    out.pop("field", None)
    return out


def report_lines(report, prefix=""):
    """Human-readable PASS/FAIL rendering of a report dict."""
    lines = []
    if "suite" in report:
        lines.append("%s (field %s, seed %s)"
                     % (report["suite"], report["field"], report["seed"]))
        for c in report["checks"]:
            lines.extend(report_lines(c, prefix="  "))
        lines.append("overall: %s" % ("PASS" if report["pass"] else "FAIL"))
        return lines
    status = "PASS" if report.get("pass") else "FAIL"
    name = report.get("check", "?")
    lines.append("%s%s: %s" % (prefix, name, status))
    for c in report.get("cases", []):
        label = c.get("ideal") or ("g=%s" % c.get("g") if "g" in c
                                   else "w=%s" % c.get("w") if "w" in c else "")
        cstat = "PASS" if c.get("pass") else "FAIL"
        lines.append("%s  %s %s" % (prefix, label, cstat))
        if not c.get("pass"):
            lines.append("%s    detail: %r" % (prefix, c))
    if "degrees" in report and not report.get("pass"):
        lines.append("%s  detail: %r" % (prefix, report["degrees"]))
    return lines
