"""Command-line front end: ``indmod <command> ...``.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or input
error, 3 a resource cap was hit.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Callable, Sequence

from . import __version__
from .caps import CapError
from .charlat import parse_theta, stabilizer
from .decomp import CROSS, NATURAL, SCHEMA, decompose, finite_level_dimensions
from .rootsys import PRESETS, RootDatum, build_root_system, datum_from_name
from .weyl import format_word, hasse_dot, parse_word, poincare_polynomial, weyl_group

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj: dict[str, Any]) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True, indent=2))


def _datum(text: str) -> RootDatum:
    text = text.strip()
    if text.startswith("["):
        try:
            matrix = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--type: bad Cartan matrix JSON ({exc})") from None
        return build_root_system(matrix)
    if text.upper() not in PRESETS:
        raise UsageError(f"--type: unknown type {text!r}; presets are {', '.join(PRESETS)}")
    return datum_from_name(text)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# -- decompose ----------------------------------------------------------------

def cmd_decompose(args: argparse.Namespace) -> int:
    datum = _datum(args.type)
    if (args.theta is None) == (args.itheta is None):
        raise UsageError("give exactly one of --theta and --itheta")
    mode = NATURAL if args.char == "natural" else CROSS
    if args.theta is not None:
        rep = decompose(datum, parse_theta(args.theta), mode)
    else:
        rep = decompose(datum, None, mode, itheta=_ints(args.itheta))
    if args.json:
        print(json.dumps(rep.to_dict(args.q, args.a), sort_keys=True, indent=2))
        return EXIT_OK
    print(f"type {datum.name or 'custom'}  theta {rep.to_list(rep.theta)}  I(theta) {sorted(rep.itheta)}  mode {mode}")
    if not rep.series_exists:
        print(f"no composition series: <theta, alpha_{rep.witness}^vee> > 0")
        return EXIT_OK
    dims = finite_level_dimensions(rep, args.a, args.q) if args.q else None
    print(f"{len(rep.factors)} composition factors" + (" (irreducible)" if rep.irreducible else ""))
    for k, f in enumerate(rep.factors):
        line = f"  E_{{{','.join(map(str, sorted(f.J)))}}}  |Z_J| = {len(f.z_set)}  dim poly {f.dim_poly}"
        if dims is not None:
            line += f"  dim at q^a={args.q ** args.a}: {dims[k]}"
        print(line)
    for note in rep.notes:
        print(f"note: {note}")
    return EXIT_OK


# -- weyl -----------------------------------------------------------------------

def cmd_weyl(args: argparse.Namespace) -> int:
    W = weyl_group(_datum(args.type))
    if args.weyl_cmd == "hasse":
        if args.dot:
            sys.stdout.write(hasse_dot(W))
        elif args.json:
            _emit({"type": W.datum.name, "covers": [[list(W.words[a]), list(W.words[b])]
                                                     for a, b in W.bruhat_covers()]})
        else:
            for a, b in W.bruhat_covers():
                print(f"{format_word(W.words[a])} < {format_word(W.words[b])}")
        return EXIT_OK
    if args.weyl_cmd == "stabilizer":
        st = stabilizer(W, parse_theta(args.theta))
        out = {"type": W.datum.name, "theta": _ints(args.theta),
               "elements": sorted(list(W.words[k]) for k in st.elements),
               "is_parabolic": st.is_parabolic, "J_theta": sorted(st.J_theta), "itheta": sorted(st.itheta)}
        if args.json:
            _emit(out)
        else:
            print(f"|W_theta| = {len(st)}  parabolic: {st.is_parabolic}  J(theta) = {sorted(st.J_theta)}")
            for w in out["elements"]:
                print(f"  {format_word(w)}")
        return EXIT_OK
    info = {"type": W.datum.name, "rank": W.rank, "order": len(W),
            "longest": list(W.words[W.longest()]), "poincare": poincare_polynomial(W)}
    if args.json:
        _emit(info)
    else:
        print(f"{info['type'] or 'custom'}: rank {W.rank}, |W| = {len(W)}, "
              f"w_0 = {format_word(info['longest'])}, Poincare {info['poincare']}")
    return EXIT_OK


# -- kl -------------------------------------------------------------------------

def cmd_kl(args: argparse.Namespace) -> int:
    from .klpoly import kl_table, transition_matrices

    W = weyl_group(_datum(args.type))
    if args.kl_cmd == "poly":
        if (args.y is None) != (args.w is None):
            raise UsageError("give both --y and --w, or neither for the full table")
        table = kl_table(W)
        if args.y is not None:
            y, w = W.index_from_word(parse_word(args.y)), W.index_from_word(parse_word(args.w))
            P = table.P(y, w)
            if args.json:
                _emit({"type": W.datum.name, "y": list(W.words[y]), "w": list(W.words[w]),
                       "coeffs": list(P.coeffs), "mu": table.mu(y, w)})
            else:
                print(str(P))
            return EXIT_OK
        rows = [{"y": list(W.words[y]), "w": list(W.words[w]), "coeffs": list(P.coeffs)}
                for (y, w), P in table.items()]
        if args.json:
            _emit({"type": W.datum.name, "order": len(W), "polynomials": rows})
        else:
            for r in rows:
                print(f"P[{format_word(r['y'])}, {format_word(r['w'])}] = {r['coeffs']}")
        return EXIT_OK
    J = _ints(args.J) if args.J else []
    reps, A, Ai = transition_matrices(W, J)
    if args.json:
        _emit({"type": W.datum.name, "J": sorted(J), "reps": [list(W.words[x]) for x in reps],
               "A": A, "A_inv": Ai})
    else:
        print("reps: " + " ".join(format_word(W.words[x]) for x in reps))
        for name, M in (("A", A), ("A^-1", Ai)):
            print(name)
            for row in M:
                print("  " + " ".join(f"{c:3d}" for c in row))
    return EXIT_OK


# -- sl2 ------------------------------------------------------------------------

def cmd_sl2(args: argparse.Namespace) -> int:
    from . import sl2lab

    if args.sl2_cmd == "factors":
        fs = sl2lab.factor_set(args.m, args.p, allow_zero=not args.no_zero)
        seqs = sl2lab.admissible_sequences(args.m, args.p, allow_zero=not args.no_zero)
        if args.json:
            _emit({"m": args.m, "p": args.p, "S": fs.sorted(),
                   "sequences": [{"e": list(s.e), "result": s.result} for s in seqs]})
        else:
            print(f"S({args.m}) at p={args.p}: {fs.sorted()}")
        return EXIT_OK
    if args.sl2_cmd == "lattice":
        lat = sl2lab.submodule_lattice(args.m, args.p, order=args.order)
        if args.dot:
            sys.stdout.write(lat.to_dot())
        elif args.json:
            _emit({"m": args.m, "p": args.p, "order": args.order,
                   "elements": [{"E": sorted(d.E, reverse=True),
                                 "factors": sorted(d.factor_weights, reverse=True)} for d in lat.elements],
                   "covers": [list(c) for c in lat.covers]})
        else:
            print(f"{len(lat.elements)} submodules of H^0({args.m}) at p={args.p}")
            for k, d in enumerate(lat.elements):
                print(f"  [{k}] factors {sorted(d.factor_weights, reverse=True)}  generators {sorted(d.E, reverse=True)}")
        return EXIT_OK
    cert = sl2lab.strict_chain_certificate(args.lam, args.p, args.a, args.t, args.tprime, tuple(_ints(args.e)))
    if args.json:
        _emit(cert.to_dict())
    else:
        for k, v in cert.to_dict().items():
            print(f"{k}: {v}")
    return EXIT_OK if cert.valid else EXIT_FAIL


# -- oracle ---------------------------------------------------------------------

def _oracle_checks(seed: int) -> list[tuple[str, Callable[[], Any]]]:
    from . import fforacle as ff
    from .sl2lab import factor_set, strict_chain_certificate

    def factors(p: int, top: int):
        bad = [m for m in range(top + 1) if ff.brute_factors(m, p) != factor_set(m, p).S]
        return ff.CheckResult(f"factors_p{p}", not bad, {"p": p, "m_max": top, "mismatches": bad})

    def chain(args):
        cert = strict_chain_certificate(*args)
        res = ff.verify_chain(*args, target_index=cert.target_index)
        return ff.CheckResult("chain", res.ok and cert.valid, {**res.detail, "certificate_valid": cert.valid})

    def sus(p: int, N: int):
        F = ff.ambient_field(p, N)
        rng = random.Random(seed)
        bad = []
        for _ in range(20):
            a = rng.randrange(1, F.order)
            sol = ff.solve_sus(a, F)
            if sol.y != a or not ff.sus_unique(sol, F):
                bad.append(a)
        return ff.CheckResult("sus", not bad, {"field": f"F_{p}^{N}", "failures": bad})

    def power_sums(p: int, N: int):
        F = ff.ambient_field(p, N)
        bad = [(d, k) for d in F.subfield_degrees() for k in range(2 * p ** d + 1)
               if not ff.verify_power_sum(p ** d, k, F)]
        return ff.CheckResult("power_sum", not bad, {"field": f"F_{p}^{N}", "failures": bad})

    checks: list[tuple[str, Callable[[], Any]]] = [
        ("factors p=2", lambda: factors(2, 24)),
        ("factors p=3", lambda: factors(3, 26)),
        ("wtvec (14,2,4)", lambda: ff.verify_wtvec(14, 2, 4, seed=seed)),
        ("wtvec (8,3,2)", lambda: ff.verify_wtvec(8, 3, 2, seed=seed)),
        ("respin (8,3,2)", lambda: ff.respin_no_growth(8, 3, 2, seed=seed)),
    ]
    for q in (2, 3, 4, 5, 7, 9):
        for lam in range(1, q):
            checks.append((f"exact sequence q={q} lambda={lam}",
                           lambda lam=lam, q=q: ff.verify_exact_sequence(lam, q)))
    for args in ((1, 2, 2), (1, 2, 4), (2, 4, 2), (1, 3, 2)):
        checks.append((f"extend {args}", lambda args=args: ff.verify_extend(*args)))
    for p, N in ((2, 12), (3, 6)):
        checks.append((f"power sums F_{p}^{N}", lambda p=p, N=N: power_sums(p, N)))
        checks.append((f"sus F_{p}^{N}", lambda p=p, N=N: sus(p, N)))
    for args in ((1, 2, 1, 2, 2), (1, 3, 1, 2, 2)):
        checks.append((f"chain {args}", lambda args=args: chain(args)))
    return checks


def cmd_oracle(args: argparse.Namespace) -> int:
    from . import fforacle as ff
    from .sl2lab import factor_set, strict_chain_certificate

    if args.oracle_cmd == "factors":
        brute = ff.brute_factors(args.m, args.p, args.k)
        formula = factor_set(args.m, args.p).S
        ok = brute == formula
        if args.json:
            _emit({"m": args.m, "p": args.p, "brute": sorted(brute, reverse=True),
                   "formula": sorted(formula, reverse=True), "ok": ok})
        else:
            print(f"spin oracle S({args.m}) at p={args.p}: {sorted(brute, reverse=True)}"
                  f"  [{'PASS' if ok else 'FAIL'}] matches admissible sequences")
        return EXIT_OK if ok else EXIT_FAIL
    if args.oracle_cmd == "chain":
        cert = strict_chain_certificate(args.lam, args.q, args.a, args.t, args.tprime)
        res = ff.verify_chain(args.lam, args.q, args.a, args.t, args.tprime, target_index=cert.target_index)
        ok = res.ok and cert.valid
        if args.json:
            _emit({"ok": ok, "spin": res.detail, "certificate": cert.to_dict()})
        else:
            d = res.detail
            print(f"[{'PASS' if ok else 'FAIL'}] chain in H^0({d['mu_s']}): dims {d['dim_small']} < {d['dim_big']}, "
                  f"index {cert.target_index} in big: {d['in_big']}, in small: {d['in_small']}")
        return EXIT_OK if ok else EXIT_FAIL
    checks = _oracle_checks(args.seed)
    if not args.all:
        wanted = [c.lower() for c in (args.check or [])]
        if not wanted:
            raise UsageError("oracle verify needs --all or at least one --check NAME")
        checks = [(n, f) for n, f in checks if any(w in n.lower() for w in wanted)]
    results = []
    for name, fn in checks:
        res = fn()
        results.append({"check": name, "ok": bool(res.ok), "detail": res.to_dict()})
        if not args.json:
            print(f"[{'PASS' if res.ok else 'FAIL'}] {name}")
    all_ok = all(r["ok"] for r in results)
    if args.json:
        _emit({"seed": args.seed, "ok": all_ok, "results": results})
    return EXIT_OK if all_ok else EXIT_FAIL


# -- verify-all -----------------------------------------------------------------

def cmd_verify_all(args: argparse.Namespace) -> int:
    from .acceptance import run_all

    results = run_all(quick=args.quick, seed=args.seed, jobs=args.jobs, only=args.criterion)
    ok = all(r.passed for r in results)
    if args.json:
        rows = []
        for r in results:
            row = r.to_dict()
            if not args.timings:
                row.pop("elapsed")
            rows.append(row)
        _emit({"quick": args.quick, "seed": args.seed, "ok": ok, "criteria": rows})
    else:
        for r in results:
            print(r.line(timing=args.timings))
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")

    ap = argparse.ArgumentParser(prog="indmod", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"indmod {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="composition factors of M(theta)")
    p.add_argument("--type", required=True, help="preset (A1..A4, B2, B3, C3, D4, G2) or Cartan matrix JSON")
    p.add_argument("--theta", help="pairings <theta, alpha_i^vee>, e.g. 0,-3")
    p.add_argument("--itheta", help="I(theta) given directly, e.g. 1,3 (cross characteristic only)")
    p.add_argument("--char", choices=["cross", "natural"], default="cross")
    p.add_argument("--q", type=int, help="evaluate dimensions at q^a")
    p.add_argument("--a", type=int, default=1)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("weyl", help="Weyl group inspection")
    wsub = p.add_subparsers(dest="weyl_cmd", required=True)
    for name in ("info", "hasse", "stabilizer"):
        q = wsub.add_parser(name, parents=[common])
        q.add_argument("--type", required=True)
        if name == "hasse":
            q.add_argument("--dot", action="store_true", help="Graphviz output")
        if name == "stabilizer":
            q.add_argument("--theta", required=True)
        q.set_defaults(func=cmd_weyl)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomials and transition matrices")
    ksub = p.add_subparsers(dest="kl_cmd", required=True)
    q = ksub.add_parser("poly", parents=[common])
    q.add_argument("--type", required=True)
    q.add_argument("--y", help="word, e.g. s2 or 2")
    q.add_argument("--w", help="word, e.g. s2s1s3s2 or 2132")
    q.set_defaults(func=cmd_kl)
    q = ksub.add_parser("transition", parents=[common])
    q.add_argument("--type", required=True)
    q.add_argument("--J", default="", help="parabolic subset, e.g. 1,2")
    q.set_defaults(func=cmd_kl)

    p = sub.add_parser("sl2", help="p-adic combinatorics for SL2")
    ssub = p.add_subparsers(dest="sl2_cmd", required=True)
    q = ssub.add_parser("factors", parents=[common])
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--no-zero", action="store_true", help="forbid 0 as the last value of a sequence")
    q.set_defaults(func=cmd_sl2)
    q = ssub.add_parser("lattice", parents=[common])
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--dot", action="store_true")
    q.add_argument("--order", choices=["closure", "support"], default="closure")
    q.set_defaults(func=cmd_sl2)
    q = ssub.add_parser("chain", parents=[common])
    q.add_argument("--p", type=int, required=True, help="q (a prime power)")
    q.add_argument("--lambda", dest="lam", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--tprime", type=int, required=True)
    q.add_argument("--e", default="", help="(lambda-1)-admissible sequence, e.g. 1,3")
    q.set_defaults(func=cmd_sl2)

    p = sub.add_parser("oracle", help="finite-field brute-force checks")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    q = osub.add_parser("factors", parents=[common])
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--k", type=int, help="work over F_{p^k} (default: least k with p^k > m)")
    q.set_defaults(func=cmd_oracle)
    q = osub.add_parser("chain", parents=[common])
    q.add_argument("--lambda", dest="lam", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--tprime", type=int, required=True)
    q.set_defaults(func=cmd_oracle)
    q = osub.add_parser("verify", parents=[common])
    q.add_argument("--all", action="store_true")
    q.add_argument("--check", action="append", help="substring of a check name (repeatable)")
    q.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance battery")
    p.add_argument("--quick", action="store_true", help="smaller sweeps")
    p.add_argument("--criterion", type=int, action="append", choices=range(1, 10),
                   help="run only this criterion (repeatable)")
    p.add_argument("--timings", action="store_true", help="include elapsed times (not byte-stable)")
    p.set_defaults(func=cmd_verify_all)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapError as exc:
        print(f"indmod: cap exceeded: {exc} (raise it with INDMOD_CAPS)", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError, KeyError) as exc:
        print(f"indmod: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
