"""Census and dimension checks over a grid of truncation windows."""

from ..weyl import OrbitIndex, two_rho, w0_index
from .convolution import CheckResult
from .orbits import DEFAULT_BUDGET, enumerate_orbits, expected_orbit_table, index_dimension, orbit_dimension_fit

SHAPES = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)]


def windows(max_depth):
    """(N, r) with N >= 0, r >= 1 and N + r <= max_depth."""
    return [(N, d - N) for d in range(1, max_depth + 1) for N in range(0, d)]


def in_budget(n, m, N, r, q, budget=DEFAULT_BUDGET):
    return q ** (n * m * (N + r)) <= budget


def census_checks(qs=(2, 3), shapes=SHAPES, max_depth=3, budget=DEFAULT_BUDGET):
    out = []
    for n, m in shapes:
        for N, r in windows(max_depth):
            for q in qs:
                if not in_budget(n, m, N, r, q, budget):
                    continue
                c = enumerate_orbits(n, m, N, r, q, budget=budget)
                want = len(expected_orbit_table(n, m, N, r))
                got = len(c.matched())
                ok = c.ok() and got == want
                detail = {"leftover": len(c.leftover())}
                if c.problems:
                    detail["problems"] = c.problems[:5]
                out.append(CheckResult(f"census n={n} m={m} N={N} r={r} q={q}", ok, got, want, detail))
    return out


def _sizes_by_q(n, m, N, r, qs, budget):
    return {q: enumerate_orbits(n, m, N, r, q, budget=budget).sizes() for q in qs}


def _w0_formula(n, m, r):
    return (r - 1) * m * n + n * (n + 1) // 2


def _shift_formula(lam1, n, m, r):
    return n * m * (r - 1) + m * sum(lam1) + (n * n + n) // 2 + two_rho(lam1)


def _shift_lambda(idx):
    """lam1 with idx = (-w0 lam1, w0) and lam1 dominant, or None."""
    if idx.bij != w0_index(idx.n).bij:
        return None
    lam1 = tuple(-x for x in reversed(idx.lam))
    if any(lam1[i] < lam1[i + 1] for i in range(len(lam1) - 1)):
        return None
    return lam1


def dimension_checks(qs=(2, 3, 5), shapes=SHAPES, max_depth=3, budget=DEFAULT_BUDGET):
    """Point-count degrees against tangent ranks and closed forms.

    Windows where fewer than three primes fit the budget are skipped for
    the fit; the closed forms are still compared with the tangent rank
    there.
    """
    out = []
    for n, m in shapes:
        for N, r in windows(max_depth):
            usable = [q for q in qs if in_budget(n, m, N, r, q, budget)]
            tangent = {e.index: index_dimension(e.index, m, N, r, qs[0])
                       for e in expected_orbit_table(n, m, N, r)}
            tag = f"n={n} m={m} N={N} r={r}"
            if len(usable) >= 3:
                sizes = _sizes_by_q(n, m, N, r, usable, budget)
                bad = []
                for idx, dim in tangent.items():
                    fit = orbit_dimension_fit({q: sizes[q][idx] for q in usable})
                    if fit != dim:
                        bad.append({"orbit": idx.to_json(), "fit": fit, "tangent": dim})
                out.append(CheckResult(f"dimension-fit {tag}", not bad, None, None,
                                       {"mismatches": bad} if bad else {}))
            w0 = w0_index(n)
            if w0 in tangent:
                got, want = tangent[w0], _w0_formula(n, m, r)
                out.append(CheckResult(f"dimension-w0 {tag}", got == want, got, want))
            for idx, dim in sorted(tangent.items()):
                lam1 = _shift_lambda(idx)
                if lam1 is None or idx == w0:
                    continue
                want = _shift_formula(lam1, n, m, r)
                out.append(CheckResult(f"dimension-shift {tag} lam1={lam1}", dim == want, dim, want))
    return out
