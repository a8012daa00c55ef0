"""The bimodule spanned by the orbit classes [I^{nu!}].

Basis elements are OrbitIndex values (lam, s).  The left action of the
GL_n Hecke algebra is free: every index factors uniquely as w . mu with mu
decreasing of weight zero, and h acts on [w . mu] through h * E_w.

The right action of the GL_m Hecke algebra goes through the induced
module S_0 (x)_{H_M} H_H.  Its coordinates are indexed by minimal coset
representatives rep of S_n x S_{m-n} in S_m, with respect to 1 (x) E_rep,
and the value at rep is an element of H_n acting on the decreasing index
attached to rep.  The Levi algebra H_M = H_n (x) H_{m-n} acts on S_0 = H_n
through sigma_tilde on the first factor and through the trivial character
T_w -> q^l(w) on the second.
"""

from math import comb

from .hecke import (
    HeckeElem,
    bernstein_element,
    he_mul,
    parabolic_terms,
    standard,
)
from .ring import ONE, ZERO, LaurentPoly, vpow
from .weyl import (
    OrbitIndex,
    coset_rep_index,
    finite,
    longest_perm,
    minimal_coset_reps,
    orbit_factorize,
    perm_act,
    perm_compose,
    perm_inversions,
    simple,
    two_rho,
    action_on_orbit,
    weyl_from_pair,
)


class ThetaElem:
    """A finite Z[v, 1/v]-combination of orbit classes for the pair (n, m)."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n, m, terms=None):
        if not 1 <= n <= m:
            raise ValueError("need 1 <= n <= m")
        self.n = n
        self.m = m
        clean = {}
        if terms:
            for idx, c in (terms.items() if isinstance(terms, dict) else terms):
                if idx.n != n:
                    raise ValueError("index rank does not match n")
                idx.check(m)
                c = LaurentPoly.coerce(c)
                c = clean[idx] + c if idx in clean else c
                if c.is_zero():
                    clean.pop(idx, None)
                else:
                    clean[idx] = c
        self.terms = clean

    @classmethod
    def basis(cls, m, idx, coeff=ONE):
        return cls(idx.n, m, {idx: coeff})

    def is_zero(self):
        return not self.terms

    def coeff(self, idx):
        return self.terms.get(idx, ZERO)

    def __eq__(self, other):
        if not isinstance(other, ThetaElem):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms

    def __add__(self, other):
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("shape mismatch")
        acc = dict(self.terms)
        for idx, c in other.terms.items():
            acc[idx] = acc[idx] + c if idx in acc else c
        return ThetaElem(self.n, self.m, acc)

    def __neg__(self):
        return ThetaElem(self.n, self.m, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        return ThetaElem(self.n, self.m, {i: a * c for i, a in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"ThetaElem(n={self.n}, m={self.m}, 0)"
        body = " + ".join(f"({c}){idx!r}" for idx, c in sorted(self.terms.items()))
        return f"ThetaElem(n={self.n}, m={self.m}, {body})"

    def to_json(self):
        return {"n": self.n, "m": self.m,
                "terms": [{"orbit": idx.to_json(), "c": c.to_json()}
                          for idx, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data):
        terms = {OrbitIndex.from_json(t["orbit"]): LaurentPoly.from_json(t["c"])
                 for t in data["terms"]}
        return cls(data["n"], data["m"], terms)


def _standard_coefficients(h):
    """Coefficients of h in the basis E_u = v^-l(u) T_u."""
    return {u: c.shift(u.length()) for u, c in h.terms.items()}


def act_left(h, x):
    if h.k != x.n:
        raise ValueError("rank mismatch")
    acc = {}
    for nu, c in x.terms.items():
        w, mu = orbit_factorize(nu)
        for u, a in _standard_coefficients(he_mul(h, standard(w))).items():
            idx = action_on_orbit(u, mu)
            acc[idx] = acc[idx] + a * c if idx in acc else a * c
    return ThetaElem(x.n, x.m, acc)


def rep_for_subset(subset, n, m):
    """The minimal coset rep whose attached decreasing index lives on subset."""
    subset = set(subset)
    rep = [0] * m
    small = [p for p in range(1, m + 1) if p in subset]
    big = [p for p in range(1, m + 1) if p not in subset]
    for val, pos in enumerate(small, start=1):
        rep[pos - 1] = val
    for val, pos in enumerate(big, start=n + 1):
        rep[pos - 1] = val
    return tuple(rep)


class InducedElem:
    """Coordinates rep -> g in H_n of an element sum g (x) E_rep."""

    __slots__ = ("n", "m", "coords")

    def __init__(self, n, m, coords=None):
        self.n = n
        self.m = m
        reps = set(minimal_coset_reps(n, m))
        clean = {}
        for rep, g in (coords or {}).items():
            rep = tuple(rep)
            if rep not in reps:
                raise ValueError(f"{rep} is not a minimal coset representative")
            if g.k != n:
                raise ValueError("coordinate rank must be n")
            if not g.is_zero():
                clean[rep] = clean[rep] + g if rep in clean else g
        self.coords = {r: g for r, g in clean.items() if not g.is_zero()}

    def rank(self):
        return comb(self.m, self.n)

    def __eq__(self, other):
        return (isinstance(other, InducedElem) and (self.n, self.m) == (other.n, other.m)
                and self.coords == other.coords)

    def __repr__(self):
        return f"InducedElem(n={self.n}, m={self.m}, {self.coords})"


def to_induced(x):
    coords = {}
    for nu, c in x.terms.items():
        w, mu = orbit_factorize(nu)
        rep = rep_for_subset(mu.subset, x.n, x.m)
        term = standard(w).scale(c)
        coords[rep] = coords[rep] + term if rep in coords else term
    return InducedElem(x.n, x.m, coords)


def from_induced(y):
    out = ThetaElem(y.n, y.m)
    for rep, g in y.coords.items():
        mu = coset_rep_index(rep, y.n)
        out = out + act_left(g, ThetaElem.basis(y.m, mu))
    return out


def chi_m2(h):
    """The trivial character T_w -> q^l(w) of the Hecke algebra of the
    second Levi block (any rank)."""
    total = ZERO
    for w, c in h.terms.items():
        total = total + c.shift(2 * w.length())
    return total


def chi_m2_bernstein(lam2, tau2):
    """chi(Theta_lam2 E_tau2) = v^(<lam2, 2 rho> + l(tau2))."""
    return vpow(two_rho(lam2) + perm_inversions(tau2))


def sigma_tilde_levi_term(lam1, tau1):
    """sigma_tilde(Theta_lam1 E_tau1) in H_n."""
    n = len(tau1)
    w0 = longest_perm(n)
    new_lam = tuple(-x for x in perm_act(w0, lam1))
    new_tau = perm_compose(perm_compose(w0, tau1), w0)
    return bernstein_element(new_lam, new_tau)


def split_levi_term(lam, inner, n):
    lam1, lam2 = tuple(lam[:n]), tuple(lam[n:])
    tau1 = tuple(inner[:n])
    tau2 = tuple(t - n for t in inner[n:])
    if sorted(tau1) != list(range(1, n + 1)):
        raise ValueError("finite part does not lie in S_n x S_{m-n}")
    return lam1, tau1, lam2, tau2


def act_right_m(terms, g, n):
    """Right action on S_0 = H_n of the Levi element sum coeff Theta_lam E_inner."""
    out = HeckeElem(n)
    for lam, inner, c in terms:
        lam1, tau1, lam2, tau2 = split_levi_term(lam, inner, n)
        scalar = c * chi_m2_bernstein(lam2, tau2)
        out = out + he_mul(g, sigma_tilde_levi_term(lam1, tau1)).scale(scalar)
    return out


def act_right_M(h_m, g, n):
    """Right action of a Levi element h_m (a rank-m HeckeElem in H_M)."""
    parts = parabolic_terms(h_m, n)
    ident = tuple(range(1, h_m.k + 1))
    if set(parts) - {ident}:
        raise ValueError("element does not lie in the Levi subalgebra")
    return act_right_m(parts.get(ident, []), g, n)


def act_right_induced(h, y):
    n, m = y.n, y.m
    if h.k != m:
        raise ValueError("rank mismatch")
    coords = {}
    for rep, g in y.coords.items():
        moved = he_mul(standard(finite(rep)), h)
        for new_rep, terms in parabolic_terms(moved, n).items():
            # parabolic_terms is written against E_rep, which is what the
            # induced coordinates use
            part = act_right_m(terms, g, n)
            coords[new_rep] = coords[new_rep] + part if new_rep in coords else part
    return InducedElem(n, m, coords)


def act_right(h, x):
    return from_induced(act_right_induced(h, to_induced(x)))


def _replace_bij(mu, mapping, lam_shift=None):
    """New index with domain points moved by mapping and weights shifted."""
    bij = [(mapping.get(i, i), s) for i, s in mu.bij]
    lam = list(mu.lam)
    for j, d in (lam_shift or {}).items():
        lam[j - 1] += d
    return OrbitIndex(lam, bij)


def act_right_appB(gen, mu, m):
    """Direct generator formulas for the right action of the simple IC
    class kl_simple(gen) on a decreasing index of weight zero.

    gen is ("finite", i) for the transposition (i i+1) or ("affine",) for
    s_0 of the rank-m group; mu must be decreasing with lam = 0.
    """
    if any(mu.lam) or not mu.is_decreasing():
        raise ValueError("the generator table needs a decreasing index of weight zero")
    n = mu.n
    subset = set(mu.subset)
    vm1, vp1 = vpow(-1), vpow(1)
    if gen[0] == "finite":
        i = gen[1]
        if not 1 <= i < m:
            raise ValueError("finite generator index out of range")
        a, b = i in subset, (i + 1) in subset
        if not a and not b:
            return ThetaElem.basis(m, mu, vp1 + vm1)
        moved = _replace_bij(mu, {i: i + 1, i + 1: i})
        if not a and b:
            return ThetaElem(n, m, {moved: ONE, mu: vp1})
        return ThetaElem(n, m, {moved: ONE, mu: vm1})
    if gen[0] == "affine":
        if m < 2:
            raise ValueError("rank 1 has no affine reflection")
        a, b = 1 in subset, m in subset
        if not a and not b:
            return ThetaElem.basis(m, mu, vp1 + vm1)
        shift = {}
        if b:
            shift[mu.s(m)] = -1
        if a:
            shift[mu.s(1)] = 1
        moved = _replace_bij(mu, {1: m, m: 1}, shift)
        if a and not b:
            return ThetaElem(n, m, {moved: ONE, mu: vp1})
        return ThetaElem(n, m, {moved: ONE, mu: vm1})
    raise ValueError(f"unknown generator {gen!r}")


def generator_elem(gen, m):
    if gen[0] == "finite":
        return simple(m, gen[1])
    return simple(m, 0)


def filt_degree(x):
    out = {}
    for idx, c in x.terms.items():
        out.setdefault(idx.degree(), {})[idx] = c
    return {d: ThetaElem(x.n, x.m, t) for d, t in sorted(out.items())}


def decreasing_indices(n, m):
    from itertools import combinations
    from .weyl import decreasing_index
    return [decreasing_index(sub) for sub in combinations(range(1, m + 1), n)]
