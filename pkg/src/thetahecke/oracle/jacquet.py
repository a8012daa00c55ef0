"""Function-level check that the Jacquet restriction commutes with Hecke
convolution, for G = GL_2 acting on M = O^2 with the Borel P.

The Levi L is the diagonal torus, V = F e_1 is the P-stable line, and the
unipotent radical acts trivially on it.  Functions on V(F) that are
invariant under I_L only depend on the valuation of v = t^a e_1, so they
are evaluated on a range of a together with v = 0.

Two enumerations of I t^lam I / I are used: the Bruhat cell
parametrization (exact inverses, for the left side) and the P(F)-side
decomposition x = p i of every cell element (for gRes, the fibre count
over the Levi projection of p).
"""

from collections import Counter
from fractions import Fraction

from ..weyl import translation, two_rho
from .convolution import CheckResult
from .fq import check_prime
from .groups import cell_reps, coset_count, det_valuation, window_bounds
from .laurent import LaurentMatrix

A_RANGE = range(-3, 4)


def _val(entry):
    return min(entry) if entry else None


def levi_projection(x):
    """For x in GL_2(F), the diagonal valuations of p with x in p I and p
    upper triangular, or None when the coset x I lies outside P(F) I / I."""
    a21 = _val(x.entry(1, 0))
    a22 = _val(x.entry(1, 1))
    if a22 is None or (a21 is not None and a21 <= a22):
        return None
    total = det_valuation(x)
    return (total - a22, a22)


def _vector(q, a):
    if a is None:
        return LaurentMatrix.zeros(q, 2, 1)
    return LaurentMatrix.from_entries(q, 2, 1, {(0, 0): {a: 1}})


def _integral(vec):
    return vec.is_zero() or vec.min_exp() >= 0


def points():
    return [None] + list(A_RANGE)


def lhs(lam, q):
    """J_P^* H_G(1_{I t^lam I}, 1_{M(O)}) on V: #{x : x^-1 v in O^2}."""
    reps = cell_reps(translation(lam), q)
    return {a: sum(_integral(x_inv @ _vector(q, a)) for _, x_inv in reps) for a in points()}


def g_res(lam, q):
    """Levi cocharacter -> number of cells of I t^lam I / I over it; raises
    if some cell misses P(F) I / I."""
    out = Counter()
    for x, _ in cell_reps(translation(lam), q):
        proj = levi_projection(x)
        if proj is None:
            raise ValueError("cell outside the P-component of the flag variety")
        out[proj] += 1
    return dict(out)


def levi_convolve(res, a):
    """H_L(res, 1_{V(O)}) at t^a e_1 (a = None for v = 0): L acts on V
    through its first coordinate."""
    if a is None:
        return sum(res.values())
    return sum(c for mu, c in res.items() if a - mu[0] >= 0)


def _single_ratio(fa, fb, q):
    """e with fa = q^e fb on every point, or None."""
    exps = set()
    for k in fa:
        if (fa[k] == 0) != (fb[k] == 0):
            return None
        if fa[k]:
            r = Fraction(fa[k], fb[k])
            e = 0
            while r.numerator % q == 0 and r > 1:
                r /= q
                e += 1
            if r != 1:
                return None
            exps.add(e)
    return exps.pop() if len(exps) == 1 else (0 if not exps else None)


def _log_q(x, q):
    e = 0
    while x > 1 and x % q == 0:
        x //= q
        e += 1
    if x != 1:
        raise ValueError("count is not a power of q")
    return e


def verify_jacquet(n, j, lam, q, r=1):
    """Compare both sides for G = GL_n (n = 2), block j = 1, m = 1."""
    check_prime(q)
    if (n, j) != (2, 1):
        raise ValueError("only the GL_2 Borel instance is implemented")
    lam = tuple(lam)
    if len(lam) != 2 or lam[0] < lam[1]:
        raise ValueError("lam must be a dominant cocharacter of GL_2")
    w = translation(lam)
    s1, s2 = window_bounds(w)
    count = coset_count(w, 2, s1 + s2 + 1, q)
    left = lhs(lam, q)
    res = g_res(lam, q)
    plain = {a: levi_convolve(res, a) for a in points()}
    normalized = {a: levi_convolve({lam: 1}, a) for a in points()}
    measured = _single_ratio(left, normalized, q)
    d = _log_q(sum(res.values()), q)
    # L acts on det V_0 through the first coordinate and on det M_0
    # through the determinant; dimensions of both convolution spaces come
    # from point counts, each cell x contributing q^(r dim V_0 - val det x)
    nu_pair = lam[0]
    dim_v0 = 1
    vals = {det_valuation(x) for x, _ in cell_reps(w, q)}
    if len(vals) != 1:
        raise ValueError("determinant valuation is not constant on the cell")
    mu_pair = vals.pop()
    a_side = _log_q(len(cell_reps(w, q)) * q ** (r * dim_v0), q) - mu_pair
    b_side = _log_q(len(res) * q ** (r * dim_v0), q) - nu_pair
    predicted = Fraction(a_side - b_side + d - (nu_pair - mu_pair), 2)
    predicted = int(predicted) if predicted.denominator == 1 else None
    checks = {
        "cell_count": count == q ** w.length() == len(cell_reps(w, q)),
        "gres_single_support": list(res) == [lam],
        "gres_exponent": d == two_rho(lam),
        "plain_identity": left == plain,
        "ratio": measured is not None and measured == predicted,
    }
    detail = {"lhs": {str(k): v for k, v in left.items()},
              "rhs": {str(k): v for k, v in normalized.items()},
              "gres": {str(k): v for k, v in res.items()},
              "pairing_nu_minus_mu": nu_pair - mu_pair, "rho_shift": d,
              "checks": checks}
    return CheckResult(f"jacquet n={n} j={j} lam={lam} q={q}", all(checks.values()),
                       measured, predicted, detail)
