"""I_H x I_G-orbits on the truncated module Pi_{N,r} = Hom(U^*, t^-N L / t^r L).

A point is an n x m matrix v whose column j is v(u_j^*).  GL_n acts by
left multiplication and GL_m by v -> v h^T.  Orbits carry a discrete
invariant read off the "index matrix" of v: rows are indexed by the basis
vectors e_i t^a of L(F) via x = i - n a, columns by u_j^* t^b via
y = -j - m b.  Both Iwahori subgroups act by triangular operations in
these indices (rows absorb larger rows, columns absorb smaller columns),
so the positions of the pivots of a column echelon form are invariant.
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import log

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..weyl import OrbitIndex
from .fq import check_prime, inv_mod, rank_mod
from .groups import IwahoriGen, apply_columns, apply_rows
from .laurent import LaurentMatrix

DEFAULT_BUDGET = 2 ** 24


class TruncRingElem:
    """sum c_i t^i mod t^d with c_i in F_q."""

    __slots__ = ("q", "d", "coeffs")

    def __init__(self, q, coeffs):
        self.q = q
        self.coeffs = tuple(int(c) % q for c in coeffs)
        self.d = len(self.coeffs)

    def __add__(self, other):
        return TruncRingElem(self.q, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        out = [0] * self.d
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.d - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncRingElem(self.q, out)

    def is_unit(self):
        return self.d > 0 and self.coeffs[0] != 0

    def __eq__(self, other):
        return isinstance(other, TruncRingElem) and (self.q, self.coeffs) == (other.q, other.coeffs)

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __repr__(self):
        return f"TruncRingElem(q={self.q}, {list(self.coeffs)})"


class PiPoint:
    """A point of Pi_{N,r}: data[i, j, p] is the coefficient of t^(p - N)
    in the i-th coordinate of v(u_{j+1}^*)."""

    __slots__ = ("n", "m", "N", "r", "q", "data")

    def __init__(self, n, m, N, r, q, data):
        data = np.asarray(data, dtype=np.int64) % q
        if data.shape != (n, m, N + r):
            raise ValueError("point shape does not match (n, m, N + r)")
        self.n, self.m, self.N, self.r, self.q = n, m, N, r, q
        self.data = data

    @classmethod
    def from_laurent(cls, mat, N, r):
        n, m = mat.shape
        return cls(n, m, N, r, mat.q, mat.window_array(-N, r))

    def to_laurent(self):
        return LaurentMatrix(self.q, -self.N, self.data)

    def entry(self, i, j):
        return TruncRingElem(self.q, self.data[i, j])

    def code(self):
        return int(encode(self.data.reshape(1, -1), self.q)[0])

    def to_json(self):
        return {"N": self.N, "r": self.r, "q": self.q, "matrix": self.data.tolist()}

    def __eq__(self, other):
        return (isinstance(other, PiPoint) and (self.n, self.m, self.N, self.r, self.q)
                == (other.n, other.m, other.N, other.r, other.q)
                and np.array_equal(self.data, other.data))


def encode(digits, q):
    weights = q ** np.arange(digits.shape[1], dtype=np.int64)
    return digits.astype(np.int64) @ weights


def decode(codes, q, shape):
    size = int(np.prod(shape))
    out = np.empty((len(codes), size), dtype=np.int64)
    rest = np.asarray(codes, dtype=np.int64).copy()
    for pos in range(size):
        out[:, pos] = rest % q
        rest //= q
    return out.reshape((len(codes),) + tuple(shape))


# --- the pivot invariant -------------------------------------------------

@dataclass(frozen=True)
class LeftoverLabel:
    """Orbits that do not carry n independent pivots in the window."""
    pivots: tuple

    def to_json(self):
        return "unmatched"


def rook_pivots(arr, n, m, N, r, q):
    """Pivot row x of every column (j, b) after column echelon reduction,
    keyed by (j, b) with 1-based j; None for columns reducing to zero."""
    depth = N + r
    x_lo = n * (1 - r) + 1
    nrows = n * depth
    pivots = {}
    owners = {}
    for b in range(depth - 1, -1, -1):
        for j in range(m, 0, -1):
            vec = np.zeros(nrows, dtype=np.int64)
            for i in range(1, n + 1):
                for a in range(-N + b, r):
                    c = arr[i - 1, j - 1, a - b + N]
                    if c:
                        vec[i - n * a - x_lo] = c
            while True:
                nz = np.nonzero(vec)[0]
                if nz.size == 0:
                    pivots[(j, b)] = None
                    break
                top = int(nz[-1])
                if top in owners:
                    other = owners[top]
                    factor = vec[top] * inv_mod(other[top], q)
                    vec = (vec - factor * other) % q
                else:
                    owners[top] = vec
                    pivots[(j, b)] = top + x_lo
                    break
    return pivots


def orbit_label(arr, n, m, N, r, q):
    """The OrbitIndex of a point given as a coefficient array, or a
    LeftoverLabel."""
    piv = rook_pivots(arr, n, m, N, r, q)
    base = {j: piv[(j, 0)] for j in range(1, m + 1) if piv[(j, 0)] is not None}
    residues = {((x - 1) % n) + 1 for x in base.values()}
    if len(base) == n and len(residues) == n:
        lam = [0] * n
        bij = []
        for j, x in base.items():
            s = ((x - 1) % n) + 1
            lam[s - 1] = (s - x) // n
            bij.append((j, s))
        return OrbitIndex(lam, bij)
    return LeftoverLabel(tuple(sorted((k, v) for k, v in piv.items() if v is not None)))


def label_of_matrix(mat, n, m, r):
    """Label of an exact point of Pi(F), using the smallest window that
    contains it."""
    N = 0 if mat.is_zero() else max(0, -mat.min_exp())
    arr = mat.window_array(-N, r)
    return orbit_label(arr, n, m, N, r, mat.q)


def representative(idx, m, q):
    """The monomial representative: column i in I is t^lam_s(i) e_s(i)."""
    entries = {(s - 1, i - 1): {idx.lam[s - 1]: 1} for i, s in idx.bij}
    return LaurentMatrix.from_entries(q, idx.n, m, entries)


@dataclass
class ExpectedOrbit:
    index: OrbitIndex
    rep: list

    def point(self, N, r, q):
        return PiPoint.from_laurent(representative(self.index, len(self.rep[0]), q), N, r)


def expected_orbit_table(n, m, N, r):
    """All indices with -N <= lam_i <= r - 1 together with their monomial
    representatives (rep[i][j] is the exponent a with entry t^a, or None)."""
    if N + r <= 0:
        raise ValueError("need N + r > 0")
    if not 1 <= n <= m:
        raise ValueError("need 1 <= n <= m")
    out = []
    for subset in combinations(range(1, m + 1), n):
        for images in permutations(range(1, n + 1)):
            for lam in product(range(-N, r), repeat=n):
                idx = OrbitIndex(lam, zip(subset, images))
                rep = [[None] * m for _ in range(n)]
                for i, s in idx.bij:
                    rep[s - 1][i - 1] = lam[s - 1]
                out.append(ExpectedOrbit(idx, rep))
    return out


# --- enumeration ---------------------------------------------------------

@dataclass
class OrbitRecord:
    key: int
    size: int
    label: object
    index: OrbitIndex = None

    def to_json(self, n, m, N, r, q):
        rep = decode([self.key], q, (n, m, N + r))[0]
        return {"index": self.index.to_json() if self.index is not None else "unmatched",
                "size": self.size, "rep": rep.tolist()}


@dataclass
class OrbitCensus:
    n: int
    m: int
    N: int
    r: int
    q: int
    orbits: list
    problems: list = field(default_factory=list)

    def matched(self):
        return [o for o in self.orbits if o.index is not None]

    def leftover(self):
        return [o for o in self.orbits if o.index is None]

    def sizes(self):
        return {o.index: o.size for o in self.matched()}

    def ok(self):
        return not self.problems

    def to_json(self):
        return {"orbits": [o.to_json(self.n, self.m, self.N, self.r, self.q) for o in self.orbits]}


def _generator_actions(n, m, depth, q):
    acts = [(apply_rows, g) for g in IwahoriGen(n, depth, q)]
    acts += [(apply_columns, g) for g in IwahoriGen(m, depth, q)]
    return acts


def enumerate_orbits(n, m, N, r, q, budget=DEFAULT_BUDGET, samples=8, chunk=1 << 18):
    """Partition Pi_{N,r}(F_q) into orbits by closing under generators.

    Orbits are keyed by their smallest point code, so the result does not
    depend on generator order.  Each orbit is labelled by the pivot
    invariant of its key point and the invariant is re-evaluated on a few
    more points of the orbit as a consistency check.
    """
    check_prime(q)
    depth = N + r
    dim = n * m * depth
    total = q ** dim
    if total > budget:
        raise ValueError(f"budget exceeded: {total} points > {budget}")
    shape = (n, m, depth)
    acts = _generator_actions(n, m, depth, q)
    src, dst = [], []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        pts = decode(codes, q, shape)
        for fn, g in acts:
            img = encode(fn(pts, g, q).reshape(len(codes), -1), q)
            moved = img != codes
            src.append(codes[moved])
            dst.append(img[moved])
    src = np.concatenate(src) if src else np.zeros(0, dtype=np.int64)
    dst = np.concatenate(dst) if dst else np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(total, total))
    _, comp = connected_components(graph, directed=True, connection="weak")
    order = np.argsort(comp, kind="stable")
    bounds = np.flatnonzero(np.diff(comp[order])) + 1
    groups = np.split(order, bounds)
    records = []
    problems = []
    for members in groups:
        key = int(members.min())
        arr = decode([key], q, shape)[0]
        label = orbit_label(arr, n, m, N, r, q)
        step = max(1, len(members) // samples)
        for code in members[::step][:samples]:
            other = orbit_label(decode([int(code)], q, shape)[0], n, m, N, r, q)
            if other != label:
                problems.append(f"invariant not constant on orbit of {key}")
                break
        records.append(OrbitRecord(key, len(members), label))
    records.sort(key=lambda o: o.key)
    seen = {}
    for rec in records:
        if rec.label in seen:
            problems.append(f"invariant {rec.label} shared by two orbits")
        seen[rec.label] = rec
    comp_of = {}
    for exp in expected_orbit_table(n, m, N, r):
        code = exp.point(N, r, q).code()
        rec = next((o for o in records if o.key == code), None)
        if rec is None:
            cid = comp[code]
            rec = next(o for o in records if comp[o.key] == cid)
        if rec.index is not None:
            problems.append(f"two expected indices share the orbit of {rec.key}")
        if rec.label != exp.index:
            problems.append(f"representative of {exp.index} has invariant {rec.label}")
        rec.index = exp.index
        comp_of[exp.index] = rec
    for rec in records:
        if rec.index is None and isinstance(rec.label, OrbitIndex):
            problems.append(f"unmatched orbit {rec.key} carries index {rec.label}")
    return OrbitCensus(n, m, N, r, q, records, problems)


# --- dimensions ----------------------------------------------------------

def tangent_dimension(arr, n, m, N, r, q):
    """Rank of the infinitesimal action of both Iwahori Lie algebras at a
    point, i.e. the dimension of its orbit."""
    depth = N + r
    images = []
    for k, side in ((n, "row"), (m, "col")):
        for i in range(k):
            for i2 in range(k):
                for c in range(0 if i <= i2 else 1, depth):
                    img = np.zeros_like(arr)
                    if side == "row":
                        img[i, :, c:] = arr[i2, :, :depth - c]
                    else:
                        img[:, i, c:] = arr[:, i2, :depth - c]
                    images.append(img.reshape(-1))
    return rank_mod(images, q) if images else 0


def index_dimension(idx, m, N, r, q):
    arr = PiPoint.from_laurent(representative(idx, m, q), N, r).data
    return tangent_dimension(arr, idx.n, m, N, r, q)


def minimal_window(idx):
    return max(0, -min(idx.lam)), max(1, max(idx.lam) + 1)


def renormalized_dim(idx, m, q, window=None):
    """delta(nu) = dim O_nu - n m r, which does not depend on the window
    (N, r) as long as the window contains the orbit."""
    N, r = window or minimal_window(idx)
    return index_dimension(idx, m, N, r, q) - idx.n * m * r


def orbit_dimension_fit(counts):
    """Degree of the point count of an orbit family sampled at several q.

    counts maps q to the number of points.  Orbit point counts here have the
    form q^(d-b) (q-1)^b; the exponents (d, b) are recovered exactly and
    checked on every sample.  Raises when no such form fits.
    """
    if not counts:
        raise ValueError("no samples")
    qs = sorted(counts)
    if any(counts[q] <= 0 for q in qs):
        raise ValueError("non-polynomial fit: empty orbit")
    ref = max(qs)
    c = counts[ref]
    bound = int(log(c, 2)) + 2 if c > 1 else 1
    for d in range(0, bound + 1):
        for b in range(0, d + 1):
            if all(q ** (d - b) * (q - 1) ** b == counts[q] for q in qs):
                if len(qs) < 2 and b > 0 and ref == 2:
                    continue
                return d
    raise ValueError(f"non-polynomial fit for counts {counts}")


def lagrange_degree(counts):
    """Degree of the Lagrange interpolant through the samples (only
    meaningful when it is below the number of samples)."""
    from fractions import Fraction
    qs = sorted(counts)
    coeffs = [Fraction(0)] * len(qs)
    for i, qi in enumerate(qs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, qj in enumerate(qs):
            if j != i:
                basis = [Fraction(0)] + basis
                for p in range(len(basis) - 1):
                    basis[p] -= qj * basis[p + 1]
                denom *= qi - qj
        for p in range(len(basis)):
            coeffs[p] += counts[qi] * basis[p] / denom
    deg = max((p for p, a in enumerate(coeffs) if a), default=0)
    return deg

