"""Iwahori subgroups of GL_k(F_q((t))) and their double cosets.

The Iwahori subgroup is the preimage of the upper triangular Borel under
reduction mod t.  A Weyl element t^lam tau is lifted to diag(t^lam) P_tau
with P_tau e_j = e_tau(j), so e_i t^a goes to e_w(i) t^(...) in the index
picture i - k a -> w(i) - k a.
"""

from itertools import product

from ..weyl import rotation, simple, weyl_reduced_word
from .fq import check_prime, primitive_root, rref
from .laurent import LaurentMatrix


class IwahoriGen:
    """A finite generating set of the Iwahori subgroup acting through the
    truncation O/t^d.

    Generators are tuples
      ("torus", i, g)     diag with g (a primitive root) at position i
      ("elem", i, j, a)   1 + t^a E_ij, a >= 0 if i < j and a >= 1 if i > j
      ("unit", i, a)      diag with 1 + t^a at position i, a >= 1
    with 0-based positions.
    """

    def __init__(self, k, d, q):
        self.k = k
        self.d = d
        self.q = check_prime(q)
        g = primitive_root(q)
        gens = []
        if g != 1:
            gens += [("torus", i, g) for i in range(k)]
        for i in range(k):
            for j in range(k):
                if i != j:
                    start = 0 if i < j else 1
                    gens += [("elem", i, j, a) for a in range(start, d)]
        gens += [("unit", i, a) for i in range(k) for a in range(1, d)]
        self.gens = gens

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def matrix(self, gen):
        k, q = self.k, self.q
        entries = {(i, i): {0: 1} for i in range(k)}
        if gen[0] == "torus":
            entries[(gen[1], gen[1])] = {0: gen[2]}
        elif gen[0] == "elem":
            _, i, j, a = gen
            entries[(i, j)] = {a: 1}
        else:
            _, i, a = gen
            entries[(i, i)] = {0: 1, a: 1}
        return LaurentMatrix.from_entries(q, k, k, entries)

    def matrices(self):
        return [self.matrix(g) for g in self.gens]


def apply_rows(arr, gen, q):
    """Left multiplication by a generator on arrays (..., k, cols, depth)
    of truncated coefficients (slot p holds exponent p + offset)."""
    out = arr.copy()
    depth = arr.shape[-1]
    if gen[0] == "torus":
        out[..., gen[1], :, :] *= gen[2]
    elif gen[0] == "elem":
        _, i, j, a = gen
        if a < depth:
            out[..., i, :, a:] += arr[..., j, :, :depth - a]
    else:
        _, i, a = gen
        if a < depth:
            out[..., i, :, a:] += arr[..., i, :, :depth - a]
    return out % q


def apply_columns(arr, gen, q):
    """The action v -> v h^T of a generator h on the column side."""
    out = arr.copy()
    depth = arr.shape[-1]
    if gen[0] == "torus":
        out[..., :, gen[1], :] *= gen[2]
    elif gen[0] == "elem":
        # h = 1 + t^a E_kl, so v h^T adds t^a (column l) to column k
        _, kk, ll, a = gen
        if a < depth:
            out[..., :, kk, a:] += arr[..., :, ll, :depth - a]
    else:
        _, j, a = gen
        if a < depth:
            out[..., :, j, a:] += arr[..., :, j, :depth - a]
    return out % q


def weyl_matrix(w, q):
    lam, tau = w.to_pair()
    k = len(tau)
    entries = {(tau[j] - 1, j): {lam[tau[j] - 1]: 1} for j in range(k)}
    return LaurentMatrix.from_entries(q, k, k, entries)


def root_subgroup(k, i, a, q):
    """The root subgroup element attached to the simple affine reflection
    s_i: 1 + a E_{i,i+1} for i >= 1 and 1 + a t E_{k,1} for i = 0."""
    entries = {(p, p): {0: 1} for p in range(k)}
    if a % q:
        if i == 0:
            entries[(k - 1, 0)] = {1: a}
        else:
            entries[(i - 1, i)] = {0: a}
    return LaurentMatrix.from_entries(q, k, k, entries)


def window_bounds(w):
    """(s1, s2) with t^s1 O^k inside x O^k inside t^-s2 O^k for x in IwI."""
    lam, _ = w.to_pair()
    return max(0, max(lam)), max(0, -min(lam))


def lattice_key(x, s1, s2):
    """Canonical form of the coset x I: the reduced echelon forms of the
    lattices x Lambda_c, c = 1..k, inside t^-s2 O^k / t^(s1+1) O^k."""
    k = x.shape[0]
    q = x.q
    span = s1 + s2 + 1
    key = []
    # columns of x shifted by t^a, read in the window of exponents [-s2, s1]
    shifted = {}
    for i in range(k):
        col = LaurentMatrix(q, x.low, x.data[:, i:i + 1, :])
        for a in range(0, span + 1):
            arr = col.shift(a).window_array(-s2, s1 + 1)
            shifted[(i, a)] = arr[:, 0, :].reshape(-1)
    for c in range(1, k + 1):
        rows = [shifted[(i, a)] for i in range(k)
                for a in range(0 if i < c else 1, span + 1)]
        key.append(rref(rows, q).tobytes())
    return tuple(key)


def coset_reps(w, k, d, q):
    """Representatives of IwI/I found by closing {w I} under left
    multiplication by Iwahori generators at depth d."""
    check_prime(q)
    if w.k != k:
        raise ValueError("rank mismatch")
    s1, s2 = window_bounds(w)
    if d < s1 + s2 + 1:
        raise ValueError(f"depth too small: need d >= {s1 + s2 + 1}")
    gens = IwahoriGen(k, d, q).matrices()
    start = weyl_matrix(w, q)
    seen = {lattice_key(start, s1, s2): start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = (g @ x).truncate(s1 + 1)
                key = lattice_key(y, s1, s2)
                if key not in seen:
                    seen[key] = y
                    nxt.append(y)
        frontier = nxt
    return [seen[key] for key in sorted(seen)]


def cell_reps(w, q):
    """Pairs (x, x^-1) running over IwI/I, from the Bruhat cell
    parametrization x = U_i1(a_1) s_i1 ... U_il(a_l) s_il pi^e."""
    k = w.k
    word, e = weyl_reduced_word(w)
    lifts = {i: weyl_matrix(simple(k, i), q) for i in set(word)}
    rot = weyl_matrix(rotation(k, e), q)
    rot_inv = weyl_matrix(rotation(k, -e), q)
    out = []
    for coeffs in product(range(q), repeat=len(word)):
        x = LaurentMatrix.identity(q, k)
        x_inv = LaurentMatrix.identity(q, k)
        for i, a in zip(word, coeffs):
            x = x @ root_subgroup(k, i, a, q) @ lifts[i]
            x_inv = lifts[i] @ root_subgroup(k, i, -a, q) @ x_inv
        out.append((x @ rot, rot_inv @ x_inv))
    return out


def coset_count(w, k, d, q):
    return len(coset_reps(w, k, d, q))


def det_valuation(x):
    """Valuation of det x for a square Laurent matrix, by direct
    expansion (the matrices here are at most 3 x 3)."""
    k = x.shape[0]
    if k == 1:
        return x.min_exp()
    from itertools import permutations
    total = LaurentMatrix.zeros(x.q, 1, 1)
    for perm in permutations(range(k)):
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    sign = -sign
        term = LaurentMatrix.from_entries(x.q, 1, 1, {(0, 0): {0: sign}})
        for i in range(k):
            entry = x.entry(perm[i], i)
            term = term @ LaurentMatrix.from_entries(x.q, 1, 1, {(0, 0): entry})
        total = total + term
    if total.is_zero():
        raise ValueError("singular matrix")
    return total.min_exp()

