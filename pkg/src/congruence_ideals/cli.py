"""Command-line front end.

Exit codes: 0 success, 1 a --verify cross-check failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from . import composition, correspondence, ideals, parameterization, zeta
from .exact_linalg import det, matmul
from .order_core import InvalidPolynomial, MonicPoly, NotARoot, discriminant, roots_mod

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, **obj}, sort_keys=True)
    return _text(obj)


def _text(obj) -> str:
    return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in obj.items())


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _verdict(name: str, checked: int, failures: list) -> dict:
    return {"verify": {"check": name, "pass": checked - len(failures), "fail": len(failures), "failures": failures[:20]}}


def _parse_root(text: str) -> tuple[int, int]:
    m, mu = text.split(":")
    return int(m), int(mu)


def _parse_pair(text: str) -> tuple[int, int, int, int]:
    a, b = text.split(",")
    m1, mu1 = _parse_root(a)
    m2, mu2 = _parse_root(b)
    return m1, mu1, m2, mu2


def _roots_line(F_coeffs, m):
    F = MonicPoly(F_coeffs)
    return m, [r.mu for r in roots_mod(F, m)]


def cmd_roots(F: MonicPoly, args) -> tuple[str, int]:
    if args.range:
        lo, hi = (int(x) for x in args.range.split(":"))
    elif args.m is not None:
        lo = hi = args.m
    else:
        raise UsageError("roots needs --m or --range")
    if lo < 1 or hi < lo:
        raise UsageError("moduli must be positive")
    ms = list(range(lo, hi + 1))
    if args.threads > 1 and len(ms) > 1:
        with ProcessPoolExecutor(args.threads) as ex:
            res = list(ex.map(_roots_line, [F.coeffs] * len(ms), ms))
    else:
        res = [(m, [r.mu for r in roots_mod(F, m)]) for m in ms]
    if args.format == "json":
        return _emit({"roots": [{"m": m, "mu": mus} for m, mus in res]}, "json"), 0
    if args.format == "csv":
        return _csv(["m", "mu"], [(m, mu) for m, mus in res for mu in mus]), 0
    return "\n".join(f"{m}:" + "".join(f" {x}" for x in mus) for m, mus in res), 0


def cmd_ideal(F: MonicPoly, args) -> tuple[str, int]:
    out: dict = {}
    if args.m is not None:
        root = correspondence.make_root(F, args.mu or 0, args.m)
        I = correspondence.root_to_ideal(F, root)
        out["root"] = root.to_json()
        out["ideal"] = I.to_json()
        out["invariant_factors"] = list(ideals.invariant_factors(I))
        out["norm"] = ideals.norm(I)
    code = 0
    if args.verify:
        fails, n = [], 0
        for m in range(1, args.bound + 1):
            for r in roots_mod(F, m):
                n += 1
                I = correspondence.root_to_ideal(F, r)
                inv = ideals.invariant_factors(I)
                if correspondence.ideal_to_root(I) != r or inv != (m,) + (1,) * (F.d - 1):
                    fails.append(r.to_json())
        out.update(_verdict("root_ideal_roundtrip", n, fails))
        code = 1 if fails else 0
    if not out:
        raise UsageError("ideal needs --m/--mu or --verify")
    return _emit(out, args.format), code


def cmd_pair(F: MonicPoly, args) -> tuple[str, int]:
    if F.d != 3:
        raise UsageError("pair needs a cubic polynomial")
    out: dict = {}
    if args.m1 is not None:
        p = correspondence.make_pair(F, args.mu1 or 0, args.m1, args.mu2 or 0, args.m2 or 1)
        I = correspondence.pair_to_ideal(F, p)
        out["pair"] = p.to_json()
        out["ideal"] = I.to_json()
        out["invariant_factors"] = list(ideals.invariant_factors(I))
    code = 0
    if args.verify:
        D = discriminant(F)
        fails, n = [], 0
        for N in range(1, args.bound + 1):
            if gcd(N, D) != 1:
                continue
            n += 1
            a = sorted(correspondence.pair_to_ideal(F, p).B for p in correspondence.all_pairs(F, N, exact_norm=N))
            b = sorted(I.B for I in ideals.brute_force_ideals(F, N) if ideals.integer_content(I) == 1)
            if a != b:
                fails.append(N)
        out.update(_verdict("pair_bijection", n, fails))
        code = 1 if fails else 0
    if not out:
        raise UsageError("pair needs --m1/--mu1/--m2/--mu2 or --verify")
    return _emit(out, args.format), code


def cmd_compose(F: MonicPoly, args) -> tuple[str, int]:
    out: dict = {}
    if args.roots:
        if len(args.roots) != 2:
            raise UsageError("--roots takes two m:mu values")
        r1, r2 = (correspondence.make_root(F, mu, m) for m, mu in map(_parse_root, args.roots))
        out.update(composition.compose_roots(F, r1, r2).to_json())
    elif args.pairs:
        if len(args.pairs) != 2:
            raise UsageError("--pairs takes two m1:mu1,m2:mu2 values")
        p, q = (correspondence.make_pair(F, mu1, m1, mu2, m2) for m1, mu1, m2, mu2 in map(_parse_pair, args.pairs))
        out.update(composition.compose_pairs(F, p, q).to_json())
    code = 0
    if args.verify:
        D = discriminant(F)
        fails, n = [], 0
        rs = [r for m in range(1, args.bound + 1) if gcd(m, D) == 1 for r in roots_mod(F, m)]
        if args.samples:
            rng = random.Random(args.seed)
            todo = [(rng.choice(rs), rng.choice(rs)) for _ in range(args.samples)]
        else:
            todo = [(a, b) for a in rs for b in rs]
        for a, b in todo:
            n += 1
            c = composition.compose_roots(F, a, b)
            prod = ideals.multiply(correspondence.root_to_ideal(F, a), correspondence.root_to_ideal(F, b))
            inv = ideals.invariant_factors(prod)
            cyclic = all(x == 1 for x in inv[1:])
            good = (c.status == composition.COMPOSED) == cyclic and (
                not cyclic or correspondence.ideal_to_root(prod) == c.result
            )
            if not good:
                fails.append([a.to_json(), b.to_json()])
        out.update(_verdict("compose_roots_vs_multiply", n, fails))
        code = 1 if fails else 0
    if not out:
        raise UsageError("compose needs --roots, --pairs or --verify")
    return _emit(out, args.format), code


def cmd_param(F: MonicPoly, args) -> tuple[str, int]:
    try:
        data = parameterization.preset_for(F)
    except KeyError:
        raise UsageError(f"no class-number-one preset for {F}")
    out: dict = {}
    if args.c:
        c = [int(x) for x in args.c.split(",")]
        if len(c) != F.d:
            raise UsageError(f"--c needs {F.d} integers")
        try:
            w = parameterization.params_from_c(data, c)
            out["witness"] = w.to_json()
            ap = parameterization.approximation(w)
            out["approximation"] = {"k": ap.k, "point": [str(x) for x in ap.point], "m_error": str(ap.m_error)}
        except parameterization.Degenerate as e:
            out["degenerate"] = str(e)
        if F.d == 3 and F.coeffs == (0, 0, -2):
            try:
                h = parameterization.hooley_params(*c)
                out["hooley"] = {"m1": h.m1, "mu1": h.mu1, "m2": h.m2, "mu2": h.mu2, "plucker": list(h.plucker)}
            except parameterization.Degenerate as e:
                out["hooley"] = {"degenerate": str(e)}
    elif args.m is not None:
        root = correspondence.make_root(F, args.mu or 0, args.m)
        c = parameterization.c_from_root(data, root)
        out["witness"] = parameterization.params_from_c(data, c).to_json()
    code = 0
    if args.verify:
        fails, n = [], 0
        b = args.bound
        for c in itertools.product(range(-b, b + 1), repeat=F.d):
            if not any(c):
                continue
            try:
                w = parameterization.params_from_c(data, c)
            except parameterization.Degenerate:
                continue
            n += 1
            R = parameterization.root_matrix(F.d, w.m, w.mu)
            if matmul([list(r) for r in w.gamma], [list(r) for r in w.C]) != R or det(w.gamma) != 1:
                fails.append(list(c))
        out.update(_verdict("gamma_C_identity", n, fails))
        code = 1 if fails else 0
    if not out:
        raise UsageError("param needs --c, --m/--mu or --verify")
    return _emit(out, args.format), code


def cmd_zeta(F: MonicPoly, args) -> tuple[str, int]:
    if args.kind == "dedekind":
        chk = zeta.quadratic_dedekind_check(F, args.bound)
        if args.format == "csv":
            return _csv(["n", "ideals", "root_side", "match"], [(n, a, b, int(a == b)) for n, a, b in chk.rows]), 0 if chk.ok else 1
        return _emit({"ok": chk.ok, "rows": [list(r) for r in chk.rows]}, args.format), 0 if chk.ok else 1
    if F.coeffs != (0, 0, -2):
        raise UsageError("the co-type Euler product is implemented for X^3 - 2")
    if args.verify:
        rows = zeta.enumerate_ideals_by_cotype(args.bound)
    else:
        eu = zeta.euler_cotype_coefficients(args.bound)
        rows = [zeta.CotypeRow(*k, v, -1, -1) for k, v in eu.items()]
    ok = all(r.match for r in rows) if args.verify else True
    if args.format == "csv":
        lines = []
        for r in rows:
            lines.append((r.n1, r.n2, r.n3, r.euler, "euler", ""))
            if args.verify:
                lines.append((r.n1, r.n2, r.n3, r.enumeration, "enumeration", int(r.match)))
        return _csv(["N1", "N2", "N3", "count", "source", "match"], lines), 0 if ok else 1
    if args.format == "json":
        items = []
        for r in rows:
            item = {"N": [r.n1, r.n2, r.n3], "euler": r.euler}
            if args.verify:
                item.update({"enumeration": r.enumeration, "pairs": r.pairs, "match": r.match})
            items.append(item)
        return _emit({"bound": args.bound, "rows": items, "ok": ok}, "json"), 0 if ok else 1
    return "\n".join(f"({r.n1},{r.n2},{r.n3}) {r.euler}" for r in rows), 0 if ok else 1


def cmd_census(F: MonicPoly, args) -> tuple[str, int]:
    if args.kind == "spacing":
        M = args.M or 100
        res = parameterization.spacing_census(F, M)
        out = {
            "M": M,
            "points": res.n_points,
            "max_occupancy": res.max_occupancy,
            "histogram": {str(k): v for k, v in res.histogram.items()},
        }
        return _emit(out, args.format if args.format != "csv" else "json"), 0
    try:
        data = parameterization.preset_for(F)
    except KeyError:
        raise UsageError(f"no class-number-one preset for {F}")
    D = discriminant(F)
    ws = parameterization.witness_census(data, args.bound, coprime_to=abs(D))
    rows = []
    for w in ws:
        ap = parameterization.approximation(w)
        q = parameterization.torsion_lattice(w).q
        rows.append([w.m, w.mu, *[str(x) for x in ap.point], q, f"{float(ap.m_error):.6f}"])
    code = 0
    if args.verify:
        expect = {(m, r.mu) for m in range(1, args.bound + 1) if gcd(m, D) == 1 for r in roots_mod(F, m)}
        got = {(w.m, w.mu) for w in ws}
        missing = sorted(expect - got)
        code = 1 if missing or got - expect else 0
    if args.format == "csv":
        header = ["m", "mu"] + [f"point{j}" for j in range(1, F.d)] + ["denominator", "m_error"]
        return _csv(header, rows), code
    out = {"count": len(rows), "max_m_error": max((float(r[-1]) for r in rows), default=0.0)}
    if args.verify:
        out.update(_verdict("witness_coverage", len(expect), [list(x) for x in missing]))
    return _emit(out, args.format), code


COMMANDS = {
    "roots": cmd_roots,
    "ideal": cmd_ideal,
    "pair": cmd_pair,
    "compose": cmd_compose,
    "param": cmd_param,
    "zeta": cmd_zeta,
    "census": cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--poly", default="0,0,-2", help="comma-separated a1,...,ad of the monic F")
    common.add_argument("--format", choices=["json", "csv", "text"], default=None)
    common.add_argument("--bound", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--verify", action="store_true")
    common.add_argument("--m", type=int)
    common.add_argument("--mu", type=int)
    common.add_argument("--m1", type=int)
    common.add_argument("--mu1", type=int)
    common.add_argument("--m2", type=int)
    common.add_argument("--mu2", type=int)

    p = argparse.ArgumentParser(prog="congruence-ideals", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("roots", parents=[common], help="roots of F mod m")
    r.add_argument("--range", help="lo:hi range of moduli")
    sub.add_parser("ideal", parents=[common], help="ideal of a root mod m")
    sub.add_parser("pair", parents=[common], help="ideal of a cubic root pair")
    c = sub.add_parser("compose", parents=[common], help="compose roots or root pairs")
    c.add_argument("--roots", nargs="+", help="two roots as m:mu")
    c.add_argument("--pairs", nargs="+", help="two pairs as m1:mu1,m2:mu2")
    pa = sub.add_parser("param", parents=[common], help="parameterization witness")
    pa.add_argument("--c", help="comma-separated c1,...,cd")
    z = sub.add_parser("zeta", parents=[common], help="co-type zeta coefficients")
    z.add_argument("kind", choices=["cotype", "dedekind"])
    ce = sub.add_parser("census", parents=[common], help="root point census")
    ce.add_argument("kind", choices=["approx", "spacing"])
    ce.add_argument("--M", type=int)
    return p


DEFAULT_BOUND = {"ideal": 200, "pair": 60, "compose": 50, "param": 8, "zeta": 300, "census": 1000, "roots": 0}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "text" if args.command == "roots" else "json"
    if args.bound is None:
        args.bound = DEFAULT_BOUND[args.command]
    if args.bound < 0 or args.threads < 1:
        parser.error("bounds and thread counts must be positive")
    try:
        F = MonicPoly.parse(args.poly)
        text, code = COMMANDS[args.command](F, args)
    except (UsageError, InvalidPolynomial, NotARoot, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
