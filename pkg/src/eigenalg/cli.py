"""The `tool` command: verification suites, rank tables, Hall listings.

Every suite builds objects from the library, runs named checks, and writes a
deterministic JSON report (and CSV tables for rank suites).  Exit status: 0
when every check passes, 1 when a check fails, 2 on a configuration error.
"""

import argparse
import csv
import itertools
import json
import math
import os
import random
import sys
from fractions import Fraction

from .exactla import Field, GF2, QQ
from .freealg import GrTuple, Word, hall_set, multilinear_basis
from . import monadcore, outerh, passi, primfr, primgr

DEFAULT_CONFIG = {
    "max_n": 3, "max_m": 3, "max_d": 3, "magnus_D": 3,
    "word_len_bound": 3, "conjugator_bound": 4, "field": 0,
    "intermediate_cap": 8,
}

DEFAULT_SEED = 20240816

SUITES = ("passi-ranks", "ideal-equality", "monad-laws", "prim-gr",
          "prim-fr", "abelianization", "outer", "eigenring-examples",
          "adjunction", "genealogy")


class ConfigError(ValueError):
    pass


def load_config(path=None, overrides=None):
    cfg = dict(DEFAULT_CONFIG)
    if path:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}")
        text = text.strip()
        if text.startswith("{"):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"bad JSON config: {exc}")
        else:
            data = {}
            for line in text.splitlines():
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"bad config line: {line!r}")
                k, v = line.split("=", 1)
                data[k.strip()] = v.strip()
        for k, v in data.items():
            if k not in cfg:
                raise ConfigError(f"unknown config key: {k}")
            cfg[k] = int(v)
    for k, v in (overrides or {}).items():
        if v is not None:
            cfg[k] = int(v)
    for k, v in cfg.items():
        if v < 0:
            raise ConfigError(f"config {k} must be >= 0")
    return cfg


def config_field(cfg):
    q = cfg["field"]
    if q == 0:
        return QQ
    return Field(q)


def rank_formula(kind, n, m, d):
    if kind == passi.GR:
        return sum(n ** k * math.comb(m + k - 1, k) for k in range(d + 1))
    return sum(math.comb(n * m + k - 1, k) for k in range(d + 1))


def check(checks, cid, anchor, computed, expected, cap_stable=None):
    status = "pass" if computed == expected else "fail"
    checks.append({"id": cid, "paper_anchor": anchor, "status": status,
                   "computed": _jsonable(computed),
                   "expected": _jsonable(expected),
                   "cap_stable": cap_stable})
    return status == "pass"


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_passi_ranks(cfg, rng, report):
    rows = []
    for kind in (passi.GR, passi.FR):
        for n in range(1, cfg["max_n"] + 1):
            for m in range(1, cfg["max_m"] + 1):
                for d in range(cfg["max_d"] + 1):
                    cell = passi.passi_cell(kind, n, m, d)
                    expect = rank_formula(kind, n, m, d)
                    rows.append({"kind": kind, "n": n, "m": m, "d": d,
                                 "dim_formula": expect,
                                 "dim_computed": cell.dim,
                                 "match": cell.dim == expect})
                    check(report["checks"],
                          f"rank-{kind}-{n}-{m}-{d}",
                          f"passi rank closed form ({kind})",
                          cell.dim, expect)
    report["table"] = rows


def suite_ideal_equality(cfg, rng, report):
    bound = cfg["word_len_bound"]
    for kind in (passi.GR, passi.FR):
        for n in range(1, min(cfg["max_n"], 2) + 1):
            for m in range(1, min(cfg["max_m"], 2) + 1):
                for d in range(1, min(cfg["max_d"], 3) + 1):
                    cell = passi.passi_cell(kind, n, m, d)
                    try:
                        sub = passi.polynomial_ideal(cell, d,
                                                     word_len_bound=bound)
                        fam_ok = True
                    except passi.GenerationIncomplete:
                        fam_ok = False
                        sub = passi.aug_power(cell, d)
                    check(report["checks"],
                          f"ideal-family-{kind}-{n}-{m}-{d}",
                          "polynomial ideal = augmentation power",
                          fam_ok, True)
                    rep = passi.kappa_generators(cell, d,
                                                 family_bound=2000)
                    check(report["checks"],
                          f"ideal-kappa-{kind}-{n}-{m}-{d}",
                          "kappa-tilde span and product form",
                          (rep["span_equal"], rep["product_form"]),
                          (True, True))


def _corrupt(grid):
    """Flip one composition entry; used as the negative control."""
    for (z, y, x), tensor in sorted(grid.comp.items()):
        for (i, j), col in sorted(tensor.items()):
            for c, v in sorted(col.items()):
                col[c] = grid.field.add(v, grid.field.one)
                return (z, y, x)
    raise RuntimeError("no composition entry to corrupt")


def suite_monad_laws(cfg, rng, report, inject_corruption=False):
    w3 = range(0, min(cfg["max_n"], cfg["max_m"], 3) + 1)
    w2 = range(0, min(cfg["max_n"], cfg["max_m"], 2) + 1)
    grids = []
    for kind in (passi.GR, passi.FR):
        for d in range(min(cfg["magnus_D"], 2) + 1):
            win = w3 if d <= 1 else w2
            grids.append((f"passi-{kind}-d{d}",
                          passi.passi_monad(kind, d, win)))
    grids.append(("ass", primgr.ass_monad(w3)))
    grids.append(("lie", primgr.lie_monad(w3)))
    grids.append(("ls-k", primfr.ls_monad(primfr.ring_k(), w3)))
    grids.append(("ls-dual", primfr.ls_monad(primfr.dual_numbers(), w2)))
    for name, grid in grids:
        if inject_corruption:
            triple = _corrupt(grid)
            report.setdefault("corrupted_triples", {})[name] = list(triple)
        violations = monadcore.check_monad_laws(grid)
        check(report["checks"], f"laws-{name}",
              "monad unit and associativity laws",
              [_jsonable(v) for v in violations[:1]], [])


def suite_prim_gr(cfg, rng, report):
    lim = min(cfg["max_n"], 3)
    re_ok = True
    for m in range(lim + 1):
        for n in range(lim + 1):
            for b in primgr.ass_basis(m, n):
                e = passi.SparseGroupElt(passi.GR, n, m,
                                         {primgr.E_map(b, m, n): 1})
                if primgr.R_map(e) != {b: Fraction(1)}:
                    re_ok = False
    check(report["checks"], "prim-gr-RE", "R after E is the identity",
          re_ok, True)
    cells = [(m, n) for n in range(1, 4) for m in range(1, 5)] + [(1, 4)]
    rep = primgr.prim_eigenmonad_check(cells, rng=rng, pairs=50)
    for c in rep["cells"]:
        check(report["checks"],
              f"prim-gr-kernel-{c['cell'][0]}-{c['cell'][1]}",
              "theta kernel equals the Lie image",
              (c["kernel_dim"], c["equal"]), (c["lie_dim"], True))
    check(report["checks"], "prim-gr-transport",
          "composition transported through R and E",
          rep["transport_ok"], True)


def suite_prim_fr(cfg, rng, report):
    Bk = primfr.ring_k()
    lim = min(cfg["max_n"], 3)
    ok = True
    for m in range(lim + 1):
        for n in range(lim + 1):
            for b in primfr.lfin_basis(Bk, m, n):
                x = primfr.FinMapElt(Bk, m, n, {b: QQ.one})
                if primfr.E_R_inverse_elt(primfr.E_R(x)) != x:
                    ok = False
    check(report["checks"], "prim-fr-ERinv", "E_R inverse identity on bases",
          ok, True)
    ok = True
    for _ in range(100):
        n, m = rng.randint(2, 4), rng.randint(1, 3)
        X = [[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)]
        j = rng.randint(1, n - 1)
        terms = {}
        for k, c in zip(primfr.theta_composite(X, j), (1, -1, -1)):
            terms[k] = terms.get(k, 0) + c
        z = primfr.E_R_inverse_elt(
            passi.SparseGroupElt(passi.FR, n - 1, m, terms))
        if not z.is_zero():
            ok = False
    check(report["checks"], "prim-fr-theta-composites",
          "E_R inverse annihilates theta composites", ok, True)
    for B, tag in ((Bk, "qq"), (primfr.ring_k(GF2), "f2")):
        for m in range(lim + 1):
            for n in range(lim + 1):
                V, _ = primfr.vanishing_fin(B, m, n)
                expect = math.factorial(n) * (B.dim ** n) if m == n else 0
                check(report["checks"], f"prim-fr-vanishing-{tag}-{m}-{n}",
                      "vanishing dims n! when square else 0",
                      V.dim, expect)
    rep = primfr.exterior_char2_check()
    check(report["checks"], "prim-fr-exterior",
          "char-2 exterior module: zero image, strict containment",
          (rep["element_nonzero_f2"], rep["theta_image_zero_f2"],
           rep["strict_containment_f2"], rep["theta_image_nonzero_qq"]),
          (True, True, True, True))
    report["exterior"] = _jsonable(rep)


def suite_abelianization(cfg, rng, report):
    ok = True
    for _ in range(200):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        key = tuple(tuple(rng.randint(-2, 2) for _ in range(n))
                    for _ in range(m))
        e = passi.SparseGroupElt(passi.FR, n, m,
                                 {key: rng.randint(-2, 2) or 1})
        if primfr.abelianization(primfr.gamma_section(e)) != e:
            ok = False
    check(report["checks"], "ab-section", "alpha after gamma is the identity",
          ok, True)
    for n in range(1, cfg["max_n"] + 1):
        for m in range(1, cfg["max_m"] + 1):
            for d in (0, 1):
                r = primfr.graded_alpha_compare(n, m, d)
                check(report["checks"], f"ab-graded-{n}-{m}-{d}",
                      "graded pieces agree in degree 0 and 1",
                      (r["gr_dim"], r["iso"]), (r["fr_dim"], True))
    r = primfr.graded_alpha_compare(2, 1, 2)
    check(report["checks"], "ab-strict-2-1-2",
          "strict graded inequality at (2,1,2)",
          (r["gr_dim"], r["fr_dim"], r["iso"]), (4, 3, False))


def suite_outer(cfg, rng, report):
    def rword(n, L):
        return Word(n, [rng.choice([i for i in range(-n, n + 1) if i])
                        for _ in range(rng.randint(0, L))])
    ok = True
    for _ in range(500):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        rho = GrTuple(n, m, tuple(rword(n, 4) for _ in range(m)))
        g = rword(m, 4)
        holds, _h = outerh.outer_exchange_check(g, rho)
        if not holds:
            ok = False
    check(report["checks"], "outer-exchange",
          "exchange identity on random samples", ok, True)
    ok = True
    for _ in range(100):
        n = rng.randint(1, 3)
        g = rword(n, cfg["conjugator_bound"])
        a = outerh.h0_to_abelianization(
            outerh.ad_action(g, GrTuple.identity(n)))
        if a != outerh.h0_to_abelianization(GrTuple.identity(n)):
            ok = False
    check(report["checks"], "outer-ab-kills-ad",
          "abelianization kills inner conjugation", ok, True)
    status, _ = outerh.h0_equal(
        GrTuple(2, 1, (Word(2, (1, 2)),)),
        GrTuple(2, 1, (Word(2, (2, 1)),)), cfg["conjugator_bound"])
    check(report["checks"], "outer-h0-conjugate",
          "bounded conjugacy certificate", status, "equal_certified")


def _matrix_algebra_example():
    # basis e11, e12, e21, e22 of the 2x2 matrix algebra
    idx = [(0, 0), (0, 1), (1, 0), (1, 1)]
    rid = {v: k for k, v in enumerate(idx)}
    table = []
    for (i, j) in idx:
        row = []
        for (k, l) in idx:
            dense = [0, 0, 0, 0]
            if j == k:
                dense[rid[(i, l)]] = 1
            row.append(dense)
        table.append(row)
    return monadcore.algebra_data(QQ, 4, table, [1, 0, 0, 1])


def _c2_group_algebra():
    # basis e, s with s^2 = e
    table = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    return monadcore.algebra_data(QQ, 2, table, [1, 0])


def _eigenring_instances():
    F = QQ
    out = []
    T = _matrix_algebra_example()
    # e12 and e22 generate D(0, u0), the second-column left ideal
    J = monadcore.left_ideal_closure(
        T, {(0, 0): [{1: F.one}, {3: F.one}]})
    out.append(("m2", T, J))
    T2 = _c2_group_algebra()
    # e - s spans the augmentation ideal
    J2 = monadcore.left_ideal_closure(T2, {(0, 0): [{0: F.one,
                                                     1: F.of(-1)}]})
    out.append(("kc2", T2, J2))
    return out


def suite_eigenring_examples(cfg, rng, report):
    for name, T, J in _eigenring_instances():
        em = monadcore.eigenmonad(T, J)
        if name == "m2":
            check(report["checks"], "eig-m2-D-dim",
                  "column left ideal dimension", J.dims()[(0, 0)], 2)
            I = monadcore.idealizer(T, J)
            check(report["checks"], "eig-m2-idealizer-dim",
                  "idealizer dimension", I.dims()[(0, 0)], 3)
            check(report["checks"], "eig-m2-E-dim",
                  "eigenmonad is the ground field", em.grid.dim(0, 0), 1)
            mods = monadcore.quotient_bimodule_modules(em)
            NE, _V = monadcore.vanishing_as_E_module(em, mods[0])
            bt = monadcore.tensor_over_E(em, NE)
            check(report["checks"], "eig-m2-tensor",
                  "quotient tensor vanishing reproduces the column space",
                  bt.dim(0), 2)
        else:
            M = monadcore.regular_module(T)[0]
            V = monadcore.vanishing_module(T, J, M)
            check(report["checks"], "eig-kc2-V-dim",
                  "vanishing module = invariants", V.dims()[0], 1)


def suite_adjunction(cfg, rng, report):
    for name, T, J in _eigenring_instances():
        em = monadcore.eigenmonad(T, J)
        # four descriptions: E, V_J(T/J), hom_T(T/J, T/J)
        dE = em.grid.dim(0, 0)
        mods = monadcore.quotient_bimodule_modules(em)
        V = monadcore.vanishing_module(T, J, mods[0])
        dV = V.dims()[0]
        dH = monadcore.hom_modules(mods[0], mods[0]).dim
        check(report["checks"], f"adj-{name}-four-descriptions",
              "eigenmonad dimension agrees across descriptions",
              (dV, dH), (dE, dE))
        M = monadcore.regular_module(T)[0]
        NE, _ = monadcore.vanishing_as_E_module(em, mods[0])
        res = monadcore.adjunction_checks(em, M, NE)
        check(report["checks"], f"adj-{name}-counit",
              "regular module vanishingly generated iff the socle spans",
              res["counit_epi"], name == "m2")
        check(report["checks"], f"adj-{name}-unit",
              "unit of the adjunction injective on the vanishing module",
              res["unit_mono"], True)


def suite_genealogy(cfg, rng, report):
    edges = []
    # gr dominates fr through the abelianization (split epi)
    r = primfr.graded_alpha_compare(2, 2, 1)
    edges.append({"edge": "L_gr >> L_fr",
                  "witness": f"alpha splits; graded dims {r['gr_dim']} >= "
                             f"{r['fr_dim']} with gamma section"})
    ker, _, _ = primgr.theta_kernel(2, 2)
    edges.append({"edge": "L_gr >> A_Lie",
                  "witness": f"theta-kernel dim {ker.dim} matches the Lie "
                             "operad cell (2,2)"})
    V, _ = primfr.vanishing_fin(primfr.ring_k(), 2, 2)
    edges.append({"edge": "L_fr >> L_S",
                  "witness": f"vanishing cell (2,2) dim {V.dim} = 2! "
                             "(bijections survive)"})
    dims = passi.filtration_witness(passi.GR, cfg["magnus_D"])
    edges.append({"edge": "P^{d+1} >> P^d",
                  "witness": f"graded pieces at (1,1): {dims} all positive"})
    a = outerh.h0_to_abelianization(
        outerh.ad_action(Word(2, (1, 2)), GrTuple.identity(2)))
    edges.append({"edge": "H0 >> L_fr",
                  "witness": "conjugation acts trivially on exponent sums: "
                             f"{a} = identity matrix"})
    report["edges"] = edges
    check(report["checks"], "genealogy-edges",
          "all subquotient witnesses computed", len(edges), 5)


SUITE_FNS = {
    "passi-ranks": suite_passi_ranks,
    "ideal-equality": suite_ideal_equality,
    "monad-laws": suite_monad_laws,
    "prim-gr": suite_prim_gr,
    "prim-fr": suite_prim_fr,
    "abelianization": suite_abelianization,
    "outer": suite_outer,
    "eigenring-examples": suite_eigenring_examples,
    "adjunction": suite_adjunction,
    "genealogy": suite_genealogy,
}


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

def run_suite(suite, cfg, seed, out_dir, inject_corruption=False):
    rng = random.Random(seed)
    report = {"suite": suite, "seed": seed, "config": cfg, "checks": []}
    fn = SUITE_FNS[suite]
    if suite == "monad-laws":
        fn(cfg, rng, report, inject_corruption=inject_corruption)
    else:
        fn(cfg, rng, report)
    failed = [c for c in report["checks"] if c["status"] != "pass"]
    report["passed"] = len(report["checks"]) - len(failed)
    report["failed"] = len(failed)
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{suite}.json")
    with open(path, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    if "table" in report:
        cpath = os.path.join(out_dir, f"{suite}.csv")
        with open(cpath, "w", newline="") as fh:
            wr = csv.DictWriter(fh, fieldnames=["kind", "n", "m", "d",
                                                "dim_formula",
                                                "dim_computed", "match"])
            wr.writeheader()
            for row in report["table"]:
                wr.writerow(row)
    return 0 if not failed else 1, report


def cmd_table_passi(args):
    rows = []
    for n in range(1, args.max_n + 1):
        for m in range(1, args.max_m + 1):
            for d in range(args.max_d + 1):
                cell = passi.passi_cell(args.kind, n, m, d)
                expect = rank_formula(args.kind, n, m, d)
                rows.append([args.kind, n, m, d, expect, cell.dim,
                             cell.dim == expect])
    wr = csv.writer(sys.stdout)
    wr.writerow(["kind", "n", "m", "d", "dim_formula", "dim_computed",
                 "match"])
    for row in rows:
        wr.writerow(row)
    return 0 if all(r[-1] for r in rows) else 1


def cmd_hall(args):
    try:
        parts = [int(x) for x in args.multidegree.split(",")]
    except ValueError:
        print("bad multidegree", file=sys.stderr)
        return 2
    if len(parts) > args.letters:
        print("multidegree longer than letter count", file=sys.stderr)
        return 2
    delta = {i + 1: parts[i] for i in range(len(parts)) if parts[i]}
    trees = hall_set(delta)
    print(f"# {len(trees)} Hall trees of multidegree {parts}")
    for t in trees:
        print(repr(t))
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="tool",
        description="exact verification suites for window monads")
    sub = ap.add_subparsers(dest="cmd")

    runp = sub.add_parser("run", help="run a verification suite")
    runp.add_argument("suite", choices=SUITES)
    runp.add_argument("--config", default=None)
    runp.add_argument("--out", default="reports")
    runp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    runp.add_argument("--field", type=int, default=None)
    runp.add_argument("--inject-corruption", action="store_true")

    tab = sub.add_parser("table", help="emit a rank table")
    tsub = tab.add_subparsers(dest="table_kind")
    tp = tsub.add_parser("passi")
    tp.add_argument("--kind", choices=[passi.GR, passi.FR], required=True)
    tp.add_argument("--max-n", type=int, default=3)
    tp.add_argument("--max-m", type=int, default=3)
    tp.add_argument("--max-d", type=int, default=3)

    hp = sub.add_parser("hall", help="list Hall trees")
    hp.add_argument("--letters", type=int, required=True)
    hp.add_argument("--multidegree", required=True)

    args = ap.parse_args(argv)
    if args.cmd == "run":
        try:
            cfg = load_config(args.config, {"field": args.field})
        except ConfigError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return 2
        code, report = run_suite(args.suite, cfg, args.seed, args.out,
                                 inject_corruption=args.inject_corruption)
        print(f"{args.suite}: {report['passed']} passed, "
              f"{report['failed']} failed")
        return code
    if args.cmd == "table":
        if args.table_kind != "passi":
            ap.error("unknown table")
        return cmd_table_passi(args)
    if args.cmd == "hall":
        return cmd_hall(args)
    ap.print_help()
    return 2


if __name__ == "__main__":
    sys.exit(main())
