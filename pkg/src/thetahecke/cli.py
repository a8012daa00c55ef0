"""Command-line frontend.

Exit codes: 0 when the command succeeds and every check passes, 1 when a
verification suite reports a failure, 2 on usage errors.
"""

import argparse
import json
import re
import sys

from . import hecke as hk
from .bimodule import ThetaElem, act_left, act_right, filt_degree
from .hecke import HeckeElem
from .ring import LaurentPoly
from .weyl import (
    OrbitIndex,
    WeylElem,
    identity,
    longest,
    orbit_factorize,
    rotation,
    simple,
    weyl_bar,
    weyl_from_pair,
    weyl_sigma,
)


class UsageError(Exception):
    pass


def parse_cycles(text, k):
    """'(12)(34)' or '(1 2)' or '()' -> one-line permutation of 1..k."""
    perm = list(range(1, k + 1))
    for body in re.findall(r"\(([^)]*)\)", text):
        parts = re.split(r"[\s,]+", body.strip()) if re.search(r"[\s,]", body.strip()) else list(body)
        cyc = [int(p) for p in parts if p]
        if any(not 1 <= c <= k for c in cyc) or len(set(cyc)) != len(cyc):
            raise UsageError(f"bad cycle {body!r} for k={k}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - 1] = b
    return tuple(perm)


def parse_pair(text):
    """'[lam];(cycles)' -> t^lam tau."""
    try:
        lam_text, cyc_text = text.split(";")
        lam = json.loads(lam_text)
    except ValueError as exc:
        raise UsageError(f"cannot parse pair {text!r}") from exc
    return weyl_from_pair(tuple(lam), parse_cycles(cyc_text, len(lam)))


def parse_named(text, k):
    """e, s<i>, pi, pi^-1, pi^<e>, w0, or a window such as [0,3]."""
    text = text.strip()
    if text.startswith("["):
        return WeylElem(json.loads(text))
    if k is None:
        raise UsageError("--k is required for named elements")
    if text == "e":
        return identity(k)
    if text == "w0":
        return longest(k)
    if re.fullmatch(r"s\d+", text):
        i = int(text[1:])
        if i >= k:
            raise UsageError(f"s{i} does not exist for k={k}")
        return simple(k, i)
    found = re.fullmatch(r"pi(\^(-?\d+))?", text)
    if found:
        return rotation(k, int(found.group(2) or 1))
    raise UsageError(f"unknown element {text!r}")


class _Collect(argparse.Action):
    """Keep --w and --pair operands in command-line order."""

    def __call__(self, parser, ns, value, option_string=None):
        items = list(getattr(ns, "elems", None) or [])
        items.append((self.dest, value))
        ns.elems = items


def _elements(args):
    out = []
    for kind, text in args.elems or []:
        w = parse_pair(text) if kind == "pair" else parse_named(text, args.k)
        if args.k is not None and w.k != args.k:
            raise UsageError(f"element has rank {w.k}, expected {args.k}")
        out.append(w)
    return out


def _need(items, count, what):
    if len(items) != count:
        raise UsageError(f"expected {count} {what}, got {len(items)}")
    return items


BASES = {"T": hk.T, "E": hk.standard, "Estar": hk.costandard, "C": hk.kl_simple}


def _hecke_operands(args):
    out = [HeckeElem.from_json(json.loads(h)) for h in args.h or []]
    out += [BASES[args.basis](w) for w in _elements(args)]
    return out


def _weyl_json(w):
    lam, tau = w.to_pair()
    return {**w.to_json(), "lambda": list(lam), "tau": list(tau), "length": w.length()}


def _theta_operand(args):
    if args.x:
        return ThetaElem.from_json(json.loads(args.x))
    if args.orbit and args.m:
        return ThetaElem.basis(args.m, OrbitIndex.from_json(json.loads(args.orbit)))
    raise UsageError("give --x, or --orbit with --m")


# --- commands ------------------------------------------------------------

def cmd_weyl(args):
    elems = _elements(args)
    if args.op == "mul":
        if not elems:
            raise UsageError("mul needs at least one element")
        prod = elems[0]
        for w in elems[1:]:
            if w.k != prod.k:
                raise UsageError("rank mismatch")
            prod = prod * w
        return _weyl_json(prod)
    (w,) = _need(elems, 1, "element")
    if args.op == "len":
        return w.length()
    if args.op == "bar":
        return _weyl_json(weyl_bar(w))
    return _weyl_json(weyl_sigma(w))


def cmd_hecke(args):
    ops = _hecke_operands(args)
    if args.op == "mul":
        if not ops:
            raise UsageError("mul needs at least one operand")
        prod = ops[0]
        for h in ops[1:]:
            prod = hk.he_mul(prod, h)
        return prod.to_json()
    (h,) = _need(ops, 1, "operand")
    if args.op == "inv":
        if len(h.terms) != 1:
            raise UsageError("inv takes a single term c T_w with c a unit")
        ((w, c),) = h.terms.items()
        if not c.is_monomial() or abs(c.coeff(c.min_degree())) != 1:
            raise UsageError("the coefficient is not a unit")
        unit = LaurentPoly({-c.min_degree(): c.coeff(c.min_degree())})
        return hk.t_inverse(w).scale(unit).to_json()
    if args.op == "bernstein":
        return [{"lambda": list(lam), "tau": list(tau), "c": c.to_json()}
                for lam, tau, c in hk.bernstein_decompose(h)]
    if args.n is None:
        raise UsageError("parabolic needs --n")
    parts = hk.parabolic_decompose(h, args.n)
    return [{"rep": list(rep), "levi": part.to_json()} for rep, part in sorted(parts.items())]


def cmd_theta(args):
    if args.op == "factorize":
        if not args.orbit:
            raise UsageError("factorize needs --orbit")
        w, mu = orbit_factorize(OrbitIndex.from_json(json.loads(args.orbit)))
        return {"w": _weyl_json(w), "mu": mu.to_json()}
    x = _theta_operand(args)
    if args.op == "filt":
        return {str(d): part.to_json() for d, part in filt_degree(x).items()}
    (h,) = _need(_hecke_operands(args), 1, "Hecke operand")
    if args.op == "act-left":
        return act_left(h, x).to_json()
    return act_right(h, x).to_json()


def cmd_oracle(args):
    from .oracle import convolution, groups, jacquet, orbits
    if args.op == "orbits":
        census = orbits.enumerate_orbits(args.n, args.m, args.N, args.r, args.q)
        return {"ok": census.ok(), "matched": len(census.matched()),
                "expected": len(orbits.expected_orbit_table(args.n, args.m, args.N, args.r)),
                **census.to_json()}
    if args.op == "coset-count":
        (w,) = _need(_elements(args), 1, "element")
        return groups.coset_count(w, w.k, args.d, args.q)
    if args.op == "convolve":
        (w,) = _need(_elements(args), 1, "element")
        if not (args.orbit and args.m):
            raise UsageError("convolve needs --orbit and --m")
        idx = OrbitIndex.from_json(json.loads(args.orbit))
        f = convolution.OrbitFunction.indicator(idx, args.m, args.q)
        out = convolution.convolve(args.side, w, f)
        return [{"orbit": k.to_json(), "value": v} for k, v in sorted(out.values.items())]
    if args.lam is None:
        raise UsageError("jacquet needs --lam")
    return jacquet.verify_jacquet(2, 1, json.loads(args.lam), args.q).to_json()


def cmd_verify(args):
    from .verify import run_suite
    kw = {}
    if args.suite == "theta-rank" and (args.n or args.m):
        if not (args.n and args.m):
            raise UsageError("give both --n and --m")
        kw["shapes"] = [(args.n, args.m)]
    results = run_suite(args.suite, small=args.small, seed=args.seed, **kw)
    ok = all(r.ok for r in results)
    report = {"suite": args.suite, "ok": ok, "checks": [r.to_json() for r in results]}
    if args.suite == "theta-rank":
        report["rank"] = [r.measured_exponent for r in results]
    return report, 0 if ok else 1


# --- parser and output ---------------------------------------------------

SUITES = ["algebra", "weyl-length", "appendix-b", "shifts", "sigma", "theta-rank",
          "orbit-census", "jacquet", "bimodule", "ic", "all"]


def _add_elements(p):
    p.add_argument("--k", type=int)
    p.add_argument("--w", action=_Collect, help="e, s<i>, pi, pi^-1, w0, or a window [..]")
    p.add_argument("--pair", action=_Collect, help='"[lam];(cycles)", e.g. "[-1,1];(12)"')


def _add_hecke(p):
    _add_elements(p)
    p.add_argument("--basis", choices=sorted(BASES), default="T",
                   help="how --w/--pair operands become Hecke elements")
    p.add_argument("--h", action="append", help="HeckeElem JSON")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--seed", type=int, default=0)
    parser = argparse.ArgumentParser(prog="thetahecke", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weyl", parents=[common])
    p.add_argument("op", choices=["mul", "len", "bar", "sigma"])
    _add_elements(p)

    p = sub.add_parser("hecke", parents=[common])
    p.add_argument("op", choices=["mul", "inv", "bernstein", "parabolic"])
    _add_hecke(p)
    p.add_argument("--n", type=int)

    p = sub.add_parser("theta", parents=[common])
    p.add_argument("op", choices=["act-left", "act-right", "factorize", "filt"])
    _add_hecke(p)
    p.add_argument("--x", help="ThetaElem JSON")
    p.add_argument("--orbit", help="OrbitIndex JSON")
    p.add_argument("--m", type=int)

    p = sub.add_parser("oracle", parents=[common])
    p.add_argument("op", choices=["orbits", "convolve", "coset-count", "jacquet"])
    _add_elements(p)
    for flag in ("--n", "--m"):
        p.add_argument(flag, type=int)
    p.add_argument("--N", type=int, default=0)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--side", choices=["G", "H"], default="G")
    p.add_argument("--orbit", help="OrbitIndex JSON")
    p.add_argument("--lam", help="cocharacter of GL_2 as JSON, e.g. [1,0]")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--small", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    return parser


COMMANDS = {"weyl": cmd_weyl, "hecke": cmd_hecke, "theta": cmd_theta,
            "oracle": cmd_oracle, "verify": cmd_verify}


def _table(value):
    if isinstance(value, dict) and "checks" in value:
        lines = [f"{'ok  ' if c['status'] == 'ok' else 'FAIL'}  {c['name']}" for c in value["checks"]]
        lines.append(f"{value['suite']}: {'ok' if value['ok'] else 'FAIL'}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(json.dumps(v, sort_keys=True) for v in value)
    if isinstance(value, dict):
        return "\n".join(f"{k}\t{json.dumps(v, sort_keys=True)}" for k, v in value.items())
    return str(value)


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "elems", None) is None:
        args.elems = []
    try:
        value = COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(value, tuple):
        value, code = value
    if args.format == "table":
        print(_table(value), file=out)
    else:
        print(json.dumps(value, sort_keys=True), file=out)
    return code


def main():
    sys.exit(run())
