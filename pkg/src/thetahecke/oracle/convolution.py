"""Function-level Hecke operators on I_H x I_G-invariant functions on Pi(F).

Invariant functions are stored by their values on orbits.  A Hecke
operator T_w on the G side sends f to v -> sum f(x^-1 v) over x in
IwI/I; on the H side the group acts by h . v = v h^T, so the sum runs over
f(v (z^-1)^T).  Values are computed exactly at the monomial
representative of each candidate orbit.

Normalization.  The symbolic class [nu] corresponds to
q^(-delta(nu)/2) 1_{O_nu} with delta(nu) = dim O_nu - n m r the
renormalized orbit dimension.  E_w corresponds to q^(-e(w)/2) T_w with
e(w) = l(w) - k deg(w), where deg is the pi_1-degree and k the rank of
the other group (m for G, n for H): an element of degree d moves the
reference lattice M = U^* (x) L by k d dimensions.  A symbolic identity
E_w [mu] = sum c_nu [nu] therefore predicts the integer count
    (T_w 1_mu)(v_nu) = c_nu(sqrt q) * q^((e(w) + delta(mu) - delta(nu))/2).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from ..ring import laurent_specialize, vpow
from ..weyl import OrbitIndex
from .fq import check_prime
from .groups import cell_reps, window_bounds
from .orbits import LeftoverLabel, label_of_matrix, renormalized_dim, representative


class OrbitFunction:
    """An invariant integer-valued function, given on full-rank orbits."""

    def __init__(self, n, m, q, values=None):
        self.n, self.m, self.q = n, m, check_prime(q)
        self.values = {k: v for k, v in (values or {}).items() if v}

    @classmethod
    def indicator(cls, idx, m, q):
        return cls(idx.n, m, q, {idx: 1})

    def support(self):
        return set(self.values)

    def label_window(self):
        if not self.values:
            return 1
        return max(1, max(max(k.lam) for k in self.values) + 1)

    def __call__(self, mat):
        label = label_of_matrix(mat, self.n, self.m, self.label_window())
        if isinstance(label, LeftoverLabel):
            return 0
        return self.values.get(label, 0)

    def scale(self, c):
        return OrbitFunction(self.n, self.m, self.q, {k: c * v for k, v in self.values.items()})

    def __add__(self, other):
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = vals.get(k, 0) + v
        return OrbitFunction(self.n, self.m, self.q, vals)

    def __eq__(self, other):
        return isinstance(other, OrbitFunction) and self.values == other.values

    def __repr__(self):
        return f"OrbitFunction({self.values})"


def candidate_orbits(n, m, lo, hi):
    out = []
    for subset in combinations(range(1, m + 1), n):
        for images in permutations(range(1, n + 1)):
            for lam in product(range(lo, hi + 1), repeat=n):
                out.append(OrbitIndex(lam, zip(subset, images)))
    return out


@lru_cache(maxsize=None)
def _reps(w, q):
    return tuple(cell_reps(w, q))


def convolve(side, w, f, candidates=None):
    """The function T_w * f for the Hecke algebra of the given side.

    Values are computed on candidate orbits (by default a box of weights
    around the support of f, wide enough for the window of w).  Support on
    the boundary of the default box raises, since it would mean the box
    was too small.
    """
    if side not in ("G", "H"):
        raise ValueError("side must be 'G' or 'H'")
    n, m, q = f.n, f.m, f.q
    if w.k != (n if side == "G" else m):
        raise ValueError("Weyl element rank does not match the side")
    boxed = candidates is None
    if boxed:
        if not f.values:
            return OrbitFunction(n, m, q)
        s1, s2 = window_bounds(w)
        lo = min(min(k.lam) for k in f.values) - s1 - s2 - 1
        hi = max(max(k.lam) for k in f.values) + s1 + s2 + 1
        candidates = candidate_orbits(n, m, lo, hi)
    reps = _reps(w, q)
    out = {}
    for nu in candidates:
        v = representative(nu, m, q)
        total = 0
        for _, x_inv in reps:
            u = x_inv @ v if side == "G" else v @ x_inv.transpose()
            total += f(u)
        if total:
            out[nu] = total
    if boxed:
        for nu in out:
            if min(nu.lam) == lo or max(nu.lam) == hi:
                raise ValueError("insufficient slack: support reaches the candidate box")
    return OrbitFunction(n, m, q, out)


def _ratio_exponent(a, b, q):
    r = Fraction(a, b)
    if r <= 0:
        return None
    e = 0
    while r.numerator % q == 0 and r != 1:
        r /= q
        e += 1
    while r.denominator % q == 0 and r != 1:
        r *= q
        e -= 1
    return e if r == 1 else None


def compare(fa, fb):
    """Decide whether fa = q^a fb for one integer a."""
    q = fa.q
    sa, sb = fa.support(), fb.support()
    per_orbit = {}
    for k in sorted(sa & sb):
        per_orbit[k] = _ratio_exponent(fa.values[k], fb.values[k], q)
    report = {"equal_support": sa == sb, "per_orbit_constants": per_orbit,
              "symmetric_difference": sorted(sa ^ sb)}
    exps = set(per_orbit.values())
    if sa == sb and len(exps) == 1 and None not in exps:
        report["ratio"] = exps.pop() if per_orbit else 0
    else:
        report["ratio"] = "FAIL"
    return report


@lru_cache(maxsize=None)
def delta(idx, m, q):
    return renormalized_dim(idx, m, q)


def operator_exponent(side, w, n, m):
    """e(w) = l(w) - k deg(w) with k = m on the G side and n on the H side."""
    k = m if side == "G" else n
    return w.length() - k * w.pi1_degree()


def predicted_count(coeff, length, mu, nu, m, q):
    """c(sqrt q) q^((e + delta(mu) - delta(nu))/2) as an exact pair
    (rational part, sqrt(q) part); length is the operator exponent e."""
    shift = length + delta(mu, m, q) - delta(nu, m, q)
    return laurent_specialize(coeff * vpow(shift), q)


@dataclass
class CheckResult:
    name: str
    ok: bool
    measured_exponent: object = None
    predicted: object = None
    detail: dict = field(default_factory=dict)

    def to_json(self):
        out = {"name": self.name, "status": "ok" if self.ok else "fail",
               "measured_exponent": self.measured_exponent, "predicted": self.predicted}
        if self.detail:
            out["detail"] = self.detail
        return out


def measured_exponent(count, length, mu, nu, m, q):
    """The a with count = q^((a + l + delta(mu) - delta(nu))/2), if any."""
    if count <= 0:
        return None
    e = 0
    c = count
    while c % q == 0:
        c //= q
        e += 1
    if c != 1:
        return None
    return 2 * e - length - delta(mu, m, q) + delta(nu, m, q)


def check_symbolic(name, side, w, mu, m, q, symbolic):
    """Compare the oracle's T_w 1_mu with a symbolic E_w [mu] expansion."""
    f = OrbitFunction.indicator(mu, m, q)
    got = convolve(side, w, f)
    length = operator_exponent(side, w, mu.n, m)
    ok = True
    exps = {}
    bad = []
    for nu in set(got.values) | set(symbolic.terms):
        coeff = symbolic.coeff(nu)
        pred = predicted_count(coeff, length, mu, nu, m, q)
        count = got.values.get(nu, 0)
        if pred != (count, 0):
            ok = False
            bad.append({"orbit": nu.to_json(), "count": count,
                        "predicted": [str(pred.even), str(pred.odd)]})
        if coeff.is_monomial():
            exps[nu] = (measured_exponent(count, length, mu, nu, m, q), coeff.min_degree())
    single = len(exps) == 1 and len(symbolic.terms) == 1
    meas, predicted = (next(iter(exps.values())) if single else (None, None))
    detail = {"mismatches": bad} if bad else {}
    return CheckResult(name, ok, meas, predicted, detail)


def _quad(x, q):
    from ..ring import QuadValue
    return QuadValue(x, 0, q)


def convolve_element(side, h, f):
    """Normalized action of a Hecke element h = sum b_w T_w on an invariant
    function: returns orbit -> QuadValue of sum b_w(sqrt q) q^(k deg(w)/2)
    (T_w f)(v_nu), the function-level image of the symbolic T_w."""
    n, m, q = f.n, f.m, f.q
    k = m if side == "G" else n
    out = {}
    for w, b in h.terms.items():
        factor = laurent_specialize(b * vpow(k * w.pi1_degree()), q)
        for nu, val in convolve(side, w, f).values.items():
            term = factor * _quad(val, q)
            out[nu] = out[nu] + term if nu in out else term
    return out


def check_element(name, side, h, mu, m, q, symbolic):
    """Compare the oracle image of [mu] under a Hecke element h with a
    symbolic expansion h [mu] = sum c_nu [nu]; both sides are evaluated in
    Q(sqrt q) after multiplying by q^(delta(mu)/2)."""
    f = OrbitFunction.indicator(mu, m, q)
    got = convolve_element(side, h, f)
    bad = []
    zero = _quad(0, q)
    for nu in set(got) | set(symbolic.terms):
        lhs = got.get(nu, zero)
        rhs = laurent_specialize(symbolic.coeff(nu) * vpow(delta(mu, m, q) - delta(nu, m, q)), q)
        if lhs != rhs:
            bad.append({"orbit": nu.to_json(), "oracle": [str(lhs.even), str(lhs.odd)],
                        "symbolic": [str(rhs.even), str(rhs.odd)]})
    meas = pred = None
    if len(symbolic.terms) == 1:
        (nu, c), = symbolic.terms.items()
        pred = c.min_degree() if c.is_monomial() else None
        val = got.get(nu)
        if val is not None and pred is not None:
            meas = _exponent_of(val, q, delta(mu, m, q) - delta(nu, m, q))
    detail = {"mismatches": bad} if bad else {}
    return CheckResult(name, not bad, meas, pred, detail)


def _exponent_of(val, q, offset):
    """The a with val = q^((a + offset)/2), or None."""
    for a in range(-60, 61):
        if laurent_specialize(vpow(a + offset), q) == val:
            return a
    return None
