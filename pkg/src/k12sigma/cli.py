"""Command-line front end: ``python -m k12sigma <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import codes as cd
from . import f3
from . import lattices as lt
from . import permgroup as pg
from . import sigma as sg
from . import suites
from . import virasoro as vir


def _out(obj):
    print(json.dumps(obj, indent=2, sort_keys=True, default=str))


def _lattice_arg(args) -> lt.IntegerLattice | None:
    return lt.read_gram_file(args.lattice) if getattr(args, "lattice", None) else None


def _code_arg(args) -> cd.F4Code:
    return cd.read_code_file(args.code) if getattr(args, "code", None) else cd.hexacode()


def _model(name: str, lattice_file=None) -> sg.SigmaModel:
    if lattice_file:
        return sg.build_E_tensor(lt.read_gram_file(lattice_file))
    if name.lower() == "k12":
        return sg.build_E_K12()
    return sg.build_E_tensor(name)


# -- run ---------------------------------------------------------------


def cmd_run(args) -> int:
    code = cd.read_code_file(args.code) if args.code else None
    report = suites.run_suite(args.suite, seed=args.seed, lattice=_lattice_arg(args), code=code,
                              threads=args.threads)
    text = report.to_json(timings=args.timings)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.tsv:
        with open(args.tsv, "w") as fh:
            fh.write(report.to_tsv())
    for c in sorted(report.checks, key=lambda c: c.lemma):
        print(f"{c.status.upper():4}  {c.lemma}", file=sys.stderr)
    return 0 if report.passed else 1


# -- vir ---------------------------------------------------------------


def cmd_vir(args) -> int:
    if args.vir_cmd == "cc":
        print(vir.central_charge(args.m))
    elif args.vir_cmd == "hw":
        print(vir.highest_weight(args.m, args.r, args.s))
    else:
        out = vir.fusion(args.m, (args.r1, args.s1), (args.r2, args.s2))
        for r, s in out:
            print(f"({r},{s})\th={vir.highest_weight(args.m, r, s)}")
    return 0


# -- codes -------------------------------------------------------------


def cmd_codes(args) -> int:
    code = _code_arg(args)
    if args.codes_cmd == "enumerate":
        for w in code.codewords():
            print(cd.format_word(w))
        _out({"weight_enumerator": code.weight_enumerator(), "self_dual": code.is_self_dual,
              "minimum_weight": code.minimum_weight(), "dimension": code.dimension})
    elif args.codes_cmd == "lattice":
        el = cd.eisenstein_lattice(code)
        info = {"rank": len(el.basis), "integral": el.is_integral, "even": el.is_even}
        if el.is_integral:
            L = el.lattice
            info.update(det=L.det, minimum=L.minimum(), gram=[list(r) for r in L.gram])
        else:
            info["gram"] = [[str(x) for x in r] for r in el.gram_fraction]
        _out(info)
    else:
        el = cd.eisenstein_lattice(code)
        census = cd.coset_census(el)
        _out({"index": el.quotient.order,
              "classes": [{"norm": n, "size": s, "count": c} for (n, s), c in census.table().items()]})
    return 0


# -- sigma ---------------------------------------------------------------


def cmd_sigma(args) -> int:
    if args.sigma_cmd == "build":
        m = _model(args.target if args.kind == "tensor" else "k12",
                   getattr(args, "lattice", None) if args.kind == "tensor" else None)
        gram = {str(v): int(c) for v, c in zip(*np.unique(m.gram_code, return_counts=True))}
        _out({"model": m.name, "symbols": len(m), "E1": len(m.e1_indices()),
              "E2": len(m.e2_indices()), "sublattices": m.n_sublattices,
              "gram_code_counts": gram, "invariants": suites.model_invariants(m)})
        if args.perms:
            with open(args.perms, "w") as fh:
                for row in m.sigma:
                    fh.write(pg.format_perm(row) + "\n")
        return 0
    report = suites.run_suite(args.suite, seed=args.seed)
    sys.stdout.write(report.to_json())
    return 0 if report.passed else 1


# -- group ---------------------------------------------------------------


def _gens(args):
    if args.perms:
        with open(args.perms) as fh:
            return [pg.parse_perm(ln) for ln in fh if ln.strip()]
    return list(_model(args.model).sigma)


def cmd_group(args) -> int:
    if args.group_cmd == "order":
        G = pg.bsgs(_gens(args), seed=args.seed)
        _out({"order": G.order(), "base": G.base, "orbit_lengths": G.orbit_lengths,
              "orbits": sorted(len(o) for o in G.orbits())})
        return 0
    if args.group_cmd == "check-3t":
        r = pg.is_3transposition(_gens(args))
        _out({"ok": r.ok, "pairs_checked": r.pairs_checked, "pair": r.pair, "order": r.order})
        return 0 if r.ok else 1
    # compare: K12 sigma model against the (8,-) reflection model through phi
    m = sg.build_E_K12()
    res = f3.phi_correspondence(m)
    _, _, line_gens = f3.reflection_permutations(f3.quad_space(8, -1), 1)
    G1 = pg.bsgs(line_gens, seed=args.seed)
    G2 = pg.bsgs(m.sigma, seed=args.seed + 1)
    cmp = pg.actions_isomorphic(res.line_generators, [m.sigma[k] for k in res.phi], res.phi,
                                G1.order(), G2.order())
    _out({"labeling": str(res.labeling), "reflection_order": G1.order(), "sigma_order": G2.order(),
          "equivariant": res.ok, "ok": cmp.ok, "reason": cmp.reason})
    return 0 if cmp.ok else 1


# -- f3 ------------------------------------------------------------------


def _sign(text: str) -> int:
    return {"+": 1, "-": -1, "+1": 1, "-1": -1, "plus": 1, "minus": -1}[text]


def cmd_f3(args) -> int:
    if args.f3_cmd == "space":
        V = f3.quad_space(args.n, _sign(args.sign))
        _out({"dim": V.dim, "sign": V.sign, "discriminant": V.discriminant,
              "nonzero_by_Q": V.census(), "expected_isotropic": V.expected_isotropic(),
              "norm1_lines": len(V.lines(1))})
    elif args.f3_cmd == "reflgroup":
        V = f3.quad_space(args.n, _sign(args.sign))
        G = f3.reflection_group(V, _sign(args.gamma) % 3, on=args.on, seed=args.seed)
        _out({"order": G.order(), "degree": G.degree, "orbit_lengths": G.orbit_lengths})
    else:
        res = f3.phi_correspondence(sg.build_E_K12())
        _out({"ok": res.ok, "labeling": str(res.labeling), "case_counts": res.case_counts,
              "failure": res.failure})
        return 0 if res.ok else 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k12sigma", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    r = sub.add_parser("run", help="run a verification suite and write a JSON report")
    r.add_argument("--suite", default="all", choices=list(suites.SUITES) + ["all"])
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out")
    r.add_argument("--tsv", help="also write a TSV summary with timings")
    r.add_argument("--timings", action="store_true", help="include runtimes in the JSON")
    r.add_argument("--lattice", help="Gram file with extra lattice checks")
    r.add_argument("--code", help="F4 code file with extra code checks")
    r.add_argument("--threads", type=int, default=1)
    r.set_defaults(func=cmd_run)

    v = sub.add_parser("vir", help="unitary series data")
    vs = v.add_subparsers(dest="vir_cmd", required=True)
    x = vs.add_parser("cc")
    x.add_argument("m", type=int)
    x = vs.add_parser("hw")
    for a in ("m", "r", "s"):
        x.add_argument(a, type=int)
    x = vs.add_parser("fuse")
    for a in ("m", "r1", "s1", "r2", "s2"):
        x.add_argument(a, type=int)
    v.set_defaults(func=cmd_vir)

    c = sub.add_parser("codes", help="F4 codes and their lattices")
    cs = c.add_subparsers(dest="codes_cmd", required=True)
    for name in ("enumerate", "lattice", "census"):
        x = cs.add_parser(name)
        x.add_argument("--code", help="code file (default: hexacode)")
    c.set_defaults(func=cmd_codes)

    s = sub.add_parser("sigma", help="sigma models")
    ss = s.add_subparsers(dest="sigma_cmd", required=True)
    b = ss.add_parser("build")
    bs = b.add_subparsers(dest="kind", required=True)
    t = bs.add_parser("tensor")
    t.add_argument("target", nargs="?", default="A2", help="root lattice name, e.g. A3, D4, E6")
    t.add_argument("--lattice", help="Gram file of R instead of a named root lattice")
    t.add_argument("--perms", help="write the sigma permutations to this file")
    k = bs.add_parser("k12")
    k.add_argument("--perms", help="write the sigma permutations to this file")
    vv = ss.add_parser("verify")
    vv.add_argument("suite", choices=list(suites.SUITES) + ["all"])
    vv.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sigma)

    g = sub.add_parser("group", help="permutation groups of sigma models")
    gs = g.add_subparsers(dest="group_cmd", required=True)
    for name in ("order", "check-3t"):
        x = gs.add_parser(name)
        x.add_argument("model", nargs="?", default="k12", help="k12 or a root lattice name")
        x.add_argument("--perms", help="file with one permutation (image list) per line")
        x.add_argument("--seed", type=int, default=0)
    x = gs.add_parser("compare")
    x.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_group)

    f = sub.add_parser("f3", help="quadratic spaces over F3")
    fs = f.add_subparsers(dest="f3_cmd", required=True)
    x = fs.add_parser("space")
    x.add_argument("n", type=int)
    x.add_argument("sign")
    x = fs.add_parser("reflgroup")
    x.add_argument("n", type=int)
    x.add_argument("sign")
    x.add_argument("gamma")
    x.add_argument("--on", choices=("lines", "vectors"), default="lines")
    x.add_argument("--seed", type=int, default=0)
    fs.add_parser("phi-check")
    f.set_defaults(func=cmd_f3)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
