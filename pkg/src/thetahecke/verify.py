"""Named verification suites.

Every suite returns a list of CheckResult records.  The symbolic suites
are exact identities; the oracle suites compare against finite-field
enumeration.  `small` trims the oracle ranges so that the whole battery
runs in a few minutes.
"""

import random
import time
from itertools import product

from .bimodule import (
    InducedElem,
    ThetaElem,
    act_left,
    act_right,
    act_right_appB,
    decreasing_indices,
    filt_degree,
    from_induced,
    to_induced,
)
from .hecke import (
    HeckeElem,
    T,
    bernstein_decompose,
    bernstein_recompose,
    costandard,
    he_mul,
    kl_simple,
    parabolic_decompose,
    parabolic_recompose,
    sigma_alg,
    sigma_tilde_alg,
    sigma_tilde_bernstein,
    standard,
    star_sharp,
    wakimoto,
    wakimoto_canonical,
)
from .oracle.convolution import CheckResult
from .ring import ONE, ZERO, LaurentPoly, laurent_specialize, vpow
from .weyl import (
    OrbitIndex,
    action_on_orbit,
    elements_up_to_length,
    identity,
    length_by_residue_formula,
    longest,
    orbit_factorize,
    orbit_indices,
    rotation,
    simple,
    translation,
    weyl_bar,
    weyl_from_pair,
    w0_index,
)

THETA_SHAPES = [(1, 2), (1, 3), (2, 2), (2, 3)]


def _check(name, ok, measured=None, predicted=None, **detail):
    return CheckResult(name, bool(ok), measured, predicted, detail)


# --- random objects ------------------------------------------------------

def random_weyl(rng, k, max_len=3):
    pool = _pool(k, max_len)
    return rotation(k, rng.randint(-1, 1)) * rng.choice(pool)


_POOLS = {}


def _pool(k, max_len):
    key = (k, max_len)
    if key not in _POOLS:
        if k == 1:
            _POOLS[key] = [translation((a,)) for a in range(-2, 3)]
        else:
            _POOLS[key] = sorted(elements_up_to_length(k, max_len))
    return _POOLS[key]


def random_laurent(rng, terms=2, span=2):
    return LaurentPoly({rng.randint(-span, span): rng.choice([-2, -1, 1, 2]) for _ in range(terms)})


def random_hecke(rng, k, terms=2, max_len=3):
    return HeckeElem(k, {random_weyl(rng, k, max_len): random_laurent(rng, 1) for _ in range(terms)})


def random_index(rng, n, m, spread=1):
    subset = sorted(rng.sample(range(1, m + 1), n))
    images = rng.sample(range(1, n + 1), n)
    lam = [rng.randint(-spread, spread) for _ in range(n)]
    return OrbitIndex(lam, zip(subset, images))


def random_theta(rng, n, m, terms=2):
    return ThetaElem(n, m, {random_index(rng, n, m): random_laurent(rng, 1) for _ in range(terms)})


# --- criterion 1 ---------------------------------------------------------

def _bfs_lengths(k, max_len):
    """Word length over s_0..s_{k-1} within each rotation coset."""
    out = {}
    base = elements_up_to_length(k, max_len)
    for e in (-1, 0, 1):
        rot = rotation(k, e)
        for w, d in base.items():
            out[w * rot] = d
    return out


def suite_weyl_length(small=False, seed=0):
    out = []
    for k in (2, 3):
        lengths = _bfs_lengths(k, 5)
        bad = [w.to_json() for w, d in lengths.items()
               if w.length() != d or length_by_residue_formula(w) != d]
        out.append(_check(f"length = BFS word length, k={k}, l<=5 ({len(lengths)} elements)",
                          not bad, mismatches=bad[:5]))
    from .oracle.groups import cell_reps, coset_reps, lattice_key, window_bounds
    qs = (2,) if small else (2, 3)
    for k in (2, 3):
        elems = [w for w, d in _bfs_lengths(k, 3).items() if d <= 3]
        for q in qs:
            bad = []
            for w in elems:
                s1, s2 = window_bounds(w)
                reps = coset_reps(w, k, s1 + s2 + 1, q)
                if len(reps) != q ** w.length():
                    bad.append(w.to_json())
                    continue
                keys = sorted(lattice_key(x.truncate(s1 + 1), s1, s2) for x, _ in cell_reps(w, q))
                if keys != sorted(lattice_key(x, s1, s2) for x in reps):
                    bad.append(w.to_json())
            out.append(_check(f"|IwI/I| = q^l(w), k={k}, q={q}, l<=3 ({len(elems)} elements)",
                              not bad, mismatches=bad[:5]))
    return out


# --- criterion 2 ---------------------------------------------------------

def _quadratic_braid(k):
    bad = []
    q = vpow(2)
    for i in range(k if k > 1 else 0):
        s = simple(k, i)
        lhs = he_mul(T(s), T(s))
        rhs = HeckeElem(k, {s: q - ONE, identity(k): q})
        if lhs != rhs:
            bad.append(("quadratic", i))
        c = kl_simple(s)
        if he_mul(c, c) != c.scale(vpow(1) + vpow(-1)):
            bad.append(("kl_square", i))
        for j in range(i + 1, k):
            t = simple(k, j)
            adjacent = (j - i) % k in (1, k - 1) and k > 2
            if adjacent:
                a = he_mul(he_mul(T(s), T(t)), T(s))
                b = he_mul(he_mul(T(t), T(s)), T(t))
            else:
                a = he_mul(T(s), T(t))
                b = he_mul(T(t), T(s))
            if k == 2:
                continue
            if a != b:
                bad.append(("braid", i, j))
    if k > 1:
        pi = rotation(k, 1)
        for i in range(k):
            lhs = he_mul(he_mul(T(pi), T(simple(k, i))), T(rotation(k, -1)))
            if lhs != T(simple(k, (i + 1) % k)) and lhs != T(simple(k, (i - 1) % k)):
                bad.append(("rotation", i))
    return bad


def suite_algebra(small=False, seed=0):
    rng = random.Random(seed)
    out = []
    a, b = vpow(1) + vpow(-1), vpow(1) - vpow(-1)
    out.append(_check("(v + 1/v)(v - 1/v) = v^2 - v^-2", a * b == vpow(2) - vpow(-2)))
    bad = []
    for _ in range(300 if small else 1000):
        x, y, z = (random_laurent(rng, 3) for _ in range(3))
        if (x * y) * z != x * (y * z) or x * (y + z) != x * y + x * z:
            bad.append(1)
        q0 = rng.choice([2, 3, 5])
        if laurent_specialize(x * y, q0) != laurent_specialize(x, q0) * laurent_specialize(y, q0):
            bad.append(2)
    out.append(_check("ring axioms and specialization homomorphism", not bad))
    for k in (1, 2, 3, 4):
        bad = _quadratic_braid(k)
        out.append(_check(f"quadratic and braid relations, k={k}", not bad, failures=bad))
    for k in (2, 3):
        bad = []
        for w in _pool(k, 3) + [rotation(k, 1) * simple(k, 0)]:
            if he_mul(standard(w), costandard(w.inverse())) != T(identity(k)):
                bad.append(w.to_json())
        out.append(_check(f"E_w * E*_(w^-1) = 1, k={k}, l<=3", not bad, failures=bad[:5]))
    n_random = 150 if small else 500
    bad = []
    for _ in range(n_random):
        k = rng.choice([2, 3])
        u, w = random_weyl(rng, k, 2), random_weyl(rng, k, 2)
        if (u * w).length() == u.length() + w.length():
            if he_mul(standard(u), standard(w)) != standard(u * w):
                bad.append((u.to_json(), w.to_json()))
        x, y, z = (random_hecke(rng, k, 2, 2) for _ in range(3))
        if he_mul(he_mul(x, y), z) != he_mul(x, he_mul(y, z)):
            bad.append("assoc")
        if star_sharp(he_mul(x, y)) != he_mul(star_sharp(y), star_sharp(x)):
            bad.append("star_sharp")
        if sigma_tilde_alg(he_mul(x, y)) != he_mul(sigma_tilde_alg(x), sigma_tilde_alg(y)):
            bad.append("sigma_tilde")
    out.append(_check(f"length-additive products, associativity, anti/automorphisms ({n_random} random)",
                      not bad, failures=bad[:5]))
    bad = []
    rng_w = range(-1, 2) if small else range(-2, 3)
    for k in (2, 3):
        vecs = list(product(rng_w, repeat=k))
        for lam in vecs:
            if wakimoto(lam) != wakimoto_canonical(lam):
                bad.append(("split", lam))
        for lam, mu in rng.sample([(a, b) for a in vecs for b in vecs], 60):
            tot = tuple(x + y for x, y in zip(lam, mu))
            if he_mul(wakimoto(lam), wakimoto(mu)) != wakimoto(tot):
                bad.append(("hom", lam, mu))
    out.append(_check("Wakimoto elements: homomorphism and split independence", not bad, failures=bad[:5]))
    bad = []
    for _ in range(n_random // 5):
        k = rng.choice([2, 3])
        h = random_hecke(rng, k, 2, 2)
        if bernstein_recompose(k, bernstein_decompose(h)) != h:
            bad.append("bernstein")
        if sigma_tilde_bernstein(h) != sigma_tilde_alg(h):
            bad.append("sigma_tilde routes")
        n = rng.randint(1, k)
        parts = parabolic_decompose(h, n)
        from math import comb
        if parabolic_recompose(k, parts) != h or len(parts) > comb(k, n):
            bad.append("parabolic")
    out.append(_check("Bernstein and parabolic round trips", not bad, failures=bad[:5]))
    return out


# --- criterion 3 ---------------------------------------------------------

def suite_theta_rank(small=False, seed=0, shapes=None):
    rng = random.Random(seed)
    out = []
    for n, m in shapes or THETA_SHAPES:
        gens = [to_induced(ThetaElem.basis(m, mu)) for mu in decreasing_indices(n, m)]
        units = all(len(y.coords) == 1 and next(iter(y.coords.values())) == T(identity(n))
                    for y in gens)
        keys = {next(iter(y.coords)) for y in gens}
        rank = len(keys)
        bad = []
        for _ in range(40 if small else 100):
            x = random_theta(rng, n, m, 3)
            if from_induced(to_induced(x)) != x:
                bad.append(x.to_json())
        ok = units and rank == InducedElem(n, m).rank() and not bad
        out.append(_check(f"theta rank n={n} m={m}", ok, rank, InducedElem(n, m).rank(),
                          round_trip_failures=len(bad)))
    return out


# --- criterion 4 ---------------------------------------------------------

def suite_bimodule(small=False, seed=0):
    rng = random.Random(seed)
    out = []
    bad = []
    trials = 80 if small else 200
    for _ in range(trials):
        n, m = rng.choice([(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)])
        h = random_hecke(rng, n, 1, 2)
        g = random_hecke(rng, m, 1, 2)
        x = random_theta(rng, n, m, 1)
        if act_left(h, act_right(g, x)) != act_right(g, act_left(h, x)):
            bad.append((n, m))
    out.append(_check(f"left and right actions commute ({trials} random triples)", not bad,
                      failures=bad[:5]))
    bad = []
    for n, m in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)]:
        gens = [translation((1,)), translation((-1,))] if n == 1 else \
            [simple(n, i) for i in range(n)] + [rotation(n, 1), rotation(n, -1), translation((1,) + (0,) * (n - 1))]
        for w in gens:
            for nu in orbit_indices(n, m, (-1, 0, 1)):
                res = act_left(standard(w), ThetaElem.basis(m, nu))
                if set(filt_degree(res)) != {nu.degree() + w.pi1_degree()}:
                    bad.append((w.to_json(), nu.to_json()))
    out.append(_check("filtration degree shifts by the pi_1-degree (generators)", not bad,
                      failures=bad[:5]))
    return out


# --- criterion 5 ---------------------------------------------------------

def suite_appendix_b(small=False, seed=0):
    out = []
    for n, m in THETA_SHAPES:
        gens = [("finite", i) for i in range(1, m)] + ([("affine",)] if m >= 2 else [])
        bad = []
        for mu in decreasing_indices(n, m):
            for gen in gens:
                s = simple(m, gen[1] if gen[0] == "finite" else 0)
                lhs = act_right(star_sharp(kl_simple(s)), ThetaElem.basis(m, mu))
                if lhs != act_right_appB(gen, mu, m):
                    bad.append({"gen": list(gen), "mu": mu.to_json()})
        out.append(_check(f"generator table n={n} m={m}", not bad, failures=bad))
    mu1 = OrbitIndex([0], [(1, 1)])
    mu2 = OrbitIndex([0], [(2, 1)])
    got = act_right(kl_simple(simple(2, 1)), ThetaElem.basis(2, mu1))
    want = ThetaElem(1, 2, {mu2: ONE, mu1: vpow(-1)})
    out.append(_check("n=1 m=2 tau_1 on (0,{1}) = (0,{2}) + v^-1 (0,{1})", got == want))
    return out


# --- criterion 6 ---------------------------------------------------------

def _index_of(u):
    lam, tau = u.to_pair()
    return OrbitIndex(lam, [(i, tau[i - 1]) for i in range(1, len(tau) + 1)])


def suite_sigma(small=False, seed=0):
    rng = random.Random(seed)
    out = []
    for n in (1, 2, 3):
        elems = list(_bfs_lengths(n, 4)) if n > 1 else [translation((a,)) for a in range(-4, 5)]
        base = ThetaElem.basis(n, w0_index(n))
        images = {}
        single = intertwine = lw0g = True
        w0 = longest(n)
        for w in elems:
            img = act_left(standard(w), base)
            if len(img.terms) != 1 or next(iter(img.terms.values())) != ONE:
                single = False
            images.setdefault(tuple(img.terms), []).append(w)
            if img != act_right(star_sharp(sigma_alg(standard(w))), base):
                intertwine = False
            if act_right(star_sharp(standard(w)), base) != ThetaElem.basis(n, _index_of(weyl_bar(w * w0))):
                lw0g = False
        injective = all(len(v) == 1 for v in images.values())
        out.append(_check(f"n=m={n}: E_w [w0] single-term, coefficient 1", single))
        out.append(_check(f"n=m={n}: w -> E_w [w0] injective ({len(elems)} elements)", injective))
        out.append(_check(f"n=m={n}: sigma intertwining", intertwine))
        out.append(_check(f"n=m={n}: H-side E_w [w0] = [bar(w w0)]", lw0g))
    bad = []
    for _ in range(100 if small else 200):
        k = rng.choice([2, 3])
        x, y = random_hecke(rng, k, 2, 2), random_hecke(rng, k, 2, 2)
        if sigma_alg(he_mul(x, y)) != he_mul(sigma_alg(y), sigma_alg(x)):
            bad.append(k)
    out.append(_check("sigma is anti-multiplicative", not bad))
    return out


# --- criterion 7 ---------------------------------------------------------

def suite_shifts(small=False, seed=0):
    from .oracle.statements import run_statements, shift_identity_checks
    qs = (2,) if small else (2, 3)
    out = shift_identity_checks()
    for q in qs:
        out.extend(run_statements(q))
    return out


def suite_orbit_census(small=False, seed=0):
    from .oracle.census import census_checks, dimension_checks
    depth = 2 if small else 3
    return census_checks(max_depth=depth) + dimension_checks(max_depth=depth)


# --- criterion 8 ---------------------------------------------------------

def suite_ic(small=False, seed=0):
    from .oracle.ic import verify_ic_cases
    out = []
    for n, m in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]:
        for q in (2, 3):
            if small and n * m > 6 and q == 3:
                continue
            out.extend(verify_ic_cases(n, m, q))
    return out


# --- criterion 9 ---------------------------------------------------------

def suite_jacquet(small=False, seed=0):
    from .oracle.jacquet import verify_jacquet
    lams = [(0, 0), (1, 0), (1, 1)] + ([] if small else [(2, 0), (2, 1)])
    return [verify_jacquet(2, 1, lam, q) for lam in lams for q in (2, 3)]


SUITES = {
    "weyl-length": suite_weyl_length,
    "algebra": suite_algebra,
    "theta-rank": suite_theta_rank,
    "bimodule": suite_bimodule,
    "appendix-b": suite_appendix_b,
    "sigma": suite_sigma,
    "shifts": suite_shifts,
    "orbit-census": suite_orbit_census,
    "ic": suite_ic,
    "jacquet": suite_jacquet,
}

CRITERIA = {
    1: ["weyl-length"],
    2: ["algebra"],
    3: ["theta-rank"],
    4: ["bimodule"],
    5: ["appendix-b"],
    6: ["sigma"],
    7: ["orbit-census", "shifts"],
    8: ["ic"],
    9: ["jacquet"],
}


def run_suite(name, small=False, seed=0, **kw):
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key, small, seed))
        return out
    if name not in SUITES:
        raise KeyError(name)
    start = time.perf_counter()
    res = SUITES[name](small=small, seed=seed, **kw)
    for r in res:
        r.detail.setdefault("suite", name)
    if res:
        res[-1].detail["suite_seconds"] = round(time.perf_counter() - start, 2)
    return res
