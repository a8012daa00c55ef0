"""Extended affine Weyl groups of GL_k as periodic permutations of Z.

An element w is stored by its window [w(1), ..., w(k)] and extended by
w(i + k) = w(i) + k.  The pair view t^lam * tau is fixed by

    window[i] = tau(i) - k * lam[tau(i)]

(1-based), which makes the affine simple reflection s_0 (window
[0, 2, ..., k-1, k+1]) equal to t^(-1, 0, ..., 0, 1) times the
transposition (1 k), and the group product agree with the semidirect law
t^lam tau * t^mu sigma = t^(lam + tau.mu) tau sigma.

Finite permutations are tuples of images (tau(1), ..., tau(k)), 1-based.
"""

from functools import lru_cache
from itertools import combinations


def perm_identity(k):
    return tuple(range(1, k + 1))


def perm_compose(a, b):
    """The composite a o b (apply b first)."""
    return tuple(a[b[i] - 1] for i in range(len(b)))


def perm_inverse(a):
    inv = [0] * len(a)
    for i, ai in enumerate(a, start=1):
        inv[ai - 1] = i
    return tuple(inv)


def perm_act(tau, lam):
    """Permute coordinates: (tau.lam)[tau(i)] = lam[i]."""
    out = [0] * len(lam)
    for i, ti in enumerate(tau):
        out[ti - 1] = lam[i]
    return tuple(out)


def perm_inversions(tau):
    k = len(tau)
    return sum(1 for i in range(k) for j in range(i + 1, k) if tau[i] > tau[j])


def is_permutation(tau, k=None):
    k = len(tau) if k is None else k
    return len(tau) == k and sorted(tau) == list(range(1, k + 1))


def longest_perm(k):
    return tuple(range(k, 0, -1))


class WeylElem:
    """A k-periodic bijection of Z, i.e. an element of the extended affine
    Weyl group of GL_k."""

    __slots__ = ("k", "window", "_hash")

    def __init__(self, window):
        window = tuple(int(x) for x in window)
        k = len(window)
        if k == 0:
            raise ValueError("rank must be positive")
        if sorted(x % k for x in window) != list(range(k)):
            raise ValueError(f"window {window} does not define a bijection")
        self.k = k
        self.window = window
        self._hash = hash(window)

    @classmethod
    def _trusted(cls, window):
        """Build from a window already known to be valid."""
        obj = object.__new__(cls)
        obj.k = len(window)
        obj.window = window
        obj._hash = hash(window)
        return obj

    def __call__(self, x):
        r = (x - 1) % self.k + 1
        return self.window[r - 1] + (x - r)

    def __eq__(self, other):
        return isinstance(other, WeylElem) and self.window == other.window

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.length(), self.window) < (other.length(), other.window)

    def __repr__(self):
        return f"WeylElem({list(self.window)})"

    def __mul__(self, other):
        if not isinstance(other, WeylElem):
            return NotImplemented
        if other.k != self.k:
            raise ValueError("rank mismatch")
        k = self.k
        win = self.window
        out = []
        for x in other.window:
            r = (x - 1) % k
            out.append(win[r] + x - 1 - r)
        return WeylElem._trusted(tuple(out))

    def inverse(self):
        return _inverse(self)

    def length(self):
        return _length(self)

    def pi1_degree(self):
        """Component in pi_1(GL_k) = Z; equals the sum of the translation
        part."""
        return sum(i - w for i, w in enumerate(self.window, start=1)) // self.k

    def to_pair(self):
        k = self.k
        tau = tuple((w - 1) % k + 1 for w in self.window)
        lam = [0] * k
        for w, t in zip(self.window, tau):
            lam[t - 1] = (t - w) // k
        return tuple(lam), tau

    def is_finite(self):
        return all(1 <= w <= self.k for w in self.window)

    def reduced_word(self):
        return _reduced_word(self)

    def to_json(self):
        return {"k": self.k, "window": list(self.window)}

    @classmethod
    def from_json(cls, data):
        elem = cls(data["window"])
        if elem.k != data["k"]:
            raise ValueError("window length does not match k")
        return elem


def weyl_from_pair(lam, tau):
    k = len(tau)
    if len(lam) != k or not is_permutation(tau):
        raise ValueError("need a permutation tau and a vector lam of the same length")
    return WeylElem(tau[i] - k * lam[tau[i] - 1] for i in range(k))


def identity(k):
    return WeylElem(range(1, k + 1))


def translation(lam):
    return weyl_from_pair(tuple(lam), perm_identity(len(lam)))


def finite(tau):
    return weyl_from_pair((0,) * len(tau), tuple(tau))


def longest(k):
    return finite(longest_perm(k))


def simple(k, i):
    """Simple reflection s_i, 0 <= i < k; s_0 is the affine one."""
    if k < 2:
        raise ValueError("rank 1 has no simple reflections")
    if not 0 <= i < k:
        raise ValueError(f"simple reflection index {i} out of range for rank {k}")
    window = list(range(1, k + 1))
    if i == 0:
        window[0] = 0
        window[-1] = k + 1
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return WeylElem(window)


def rotation(k, e=1):
    """The length-zero element pi**e, with pi(x) = x - 1 of pi_1-degree 1."""
    return WeylElem(i - e for i in range(1, k + 1))


def left_simple_mul(i, w):
    """s_i * w, computed on the values of the window."""
    k = w.k
    out = []
    for x in w.window:
        r = x % k
        if i == 0:
            if r == 1 % k:
                x -= 1
            elif r == 0:
                x += 1
        elif r == i:
            x += 1
        elif r == (i + 1) % k:
            x -= 1
        out.append(x)
    return WeylElem._trusted(tuple(out))


def right_simple_mul(w, i):
    """w * s_i, computed by moving window positions."""
    win = list(w.window)
    k = w.k
    if i == 0:
        first, last = win[0], win[-1]
        win[0] = last - k
        win[-1] = first + k
    else:
        win[i - 1], win[i] = win[i], win[i - 1]
    return WeylElem._trusted(tuple(win))


def weyl_mul(u, w):
    return u * w


def weyl_inv(w):
    return w.inverse()


@lru_cache(maxsize=None)
def _inverse(w):
    k = w.k
    inv = [0] * k
    for i, wi in enumerate(w.window, start=1):
        r = (wi - 1) % k + 1
        inv[r - 1] = i - (wi - r)
    return WeylElem(inv)


@lru_cache(maxsize=None)
def _length(w):
    # Count pairs (i, r + k c) with i < r + k c and w(i) > w(r) + k c,
    # one residue pair (i, r) at a time.
    k = w.k
    win = w.window
    total = 0
    for i in range(1, k + 1):
        wi = win[i - 1]
        for r in range(1, k + 1):
            lo = (i - r) // k + 1
            hi = -((w.window[r - 1] - wi) // k) - 1
            if hi >= lo:
                total += hi - lo + 1
    return total


def weyl_length(w):
    return w.length()


def length_by_residue_formula(w):
    """Independent length formula sum_{i<j} |floor((w(j) - w(i)) / k)|."""
    k = w.k
    win = w.window
    return sum(abs((win[j] - win[i]) // k) for i in range(k) for j in range(i + 1, k))


def left_descents(w):
    """Indices i with l(s_i w) < l(w)."""
    k = w.k
    if k < 2:
        return []
    inv = w.inverse()
    out = []
    for i in range(k):
        if inv(i) > inv(i + 1):
            out.append(i)
    return out


@lru_cache(maxsize=None)
def _reduced_word(w):
    word = []
    cur = w
    while True:
        desc = left_descents(cur)
        if not desc:
            break
        i = desc[0]
        word.append(i)
        cur = simple(w.k, i) * cur
    e = cur.pi1_degree()
    if cur != rotation(w.k, e):
        raise ArithmeticError("descent loop ended away from a rotation")
    return tuple(word), e


def weyl_reduced_word(w):
    """Return (word, e) with w = s_word[0] ... s_word[-1] * pi**e."""
    word, e = w.reduced_word()
    return list(word), e


def word_to_elem(k, word, e=0):
    out = rotation(k, e)
    for i in reversed(word):
        out = simple(k, i) * out
    return out


def weyl_bar(w):
    """t^lam tau -> t^(tau^-1 . lam) tau^-1."""
    lam, tau = w.to_pair()
    tinv = perm_inverse(tau)
    return weyl_from_pair(perm_act(tinv, lam), tinv)


def weyl_sigma_tilde(w):
    """w -> w_0 * bar(w)^-1 * w_0."""
    w0 = longest(w.k)
    return w0 * weyl_bar(w).inverse() * w0


def weyl_sigma(w):
    """The anti-automorphism w -> w_0 * bar(w) * w_0."""
    w0 = longest(w.k)
    return w0 * weyl_bar(w) * w0


def weyl_pairings(lam):
    lam = tuple(lam)
    k = len(lam)
    two_rho = sum(lam[i] - lam[j] for i in range(k) for j in range(i + 1, k))
    return {"two_rho": two_rho, "omega": sum(lam), "per_coordinate": list(lam)}


def two_rho(lam):
    k = len(lam)
    return sum(lam[i] - lam[j] for i in range(k) for j in range(i + 1, k))


def is_dominant(lam):
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


class OrbitIndex:
    """A cocharacter lam in Z^n together with a bijection s from an
    n-element subset of {1..m} onto {1..n}."""

    __slots__ = ("lam", "bij", "_hash")

    def __init__(self, lam, bij):
        lam = tuple(int(x) for x in lam)
        if isinstance(bij, dict):
            bij = bij.items()
        bij = tuple(sorted((int(i), int(s)) for i, s in bij))
        n = len(lam)
        if len(bij) != n:
            raise ValueError("bijection domain must have n elements")
        if sorted(s for _, s in bij) != list(range(1, n + 1)):
            raise ValueError("bijection must map onto {1..n}")
        if len({i for i, _ in bij}) != n or any(i < 1 for i, _ in bij):
            raise ValueError("bijection domain must be distinct positive integers")
        self.lam = lam
        self.bij = bij
        self._hash = hash((lam, bij))

    @property
    def n(self):
        return len(self.lam)

    @property
    def subset(self):
        return tuple(i for i, _ in self.bij)

    def s(self, i):
        return dict(self.bij)[i]

    def s_inverse(self, j):
        for i, sj in self.bij:
            if sj == j:
                return i
        raise KeyError(j)

    def is_decreasing(self):
        vals = [s for _, s in self.bij]
        return all(a > b for a, b in zip(vals, vals[1:]))

    def degree(self):
        return sum(self.lam)

    def check(self, m):
        if max(self.subset) > m:
            raise ValueError(f"subset {self.subset} not inside 1..{m}")
        return self

    def __eq__(self, other):
        return isinstance(other, OrbitIndex) and self.lam == other.lam and self.bij == other.bij

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.lam, self.bij) < (other.lam, other.bij)

    def __repr__(self):
        sub = ",".join(f"{i}->{s}" for i, s in self.bij)
        return f"OrbitIndex({list(self.lam)}; {sub})"

    def to_json(self):
        return {"lambda": list(self.lam), "subset": list(self.subset),
                "bij": [[i, s] for i, s in self.bij]}

    @classmethod
    def from_json(cls, data):
        idx = cls(data["lambda"], [tuple(p) for p in data["bij"]])
        if "subset" in data and list(data["subset"]) != list(idx.subset):
            raise ValueError("subset does not match bijection domain")
        return idx


def decreasing_index(subset, lam=None):
    """The index with strictly decreasing bijection on the given subset."""
    subset = sorted(subset)
    n = len(subset)
    lam = (0,) * n if lam is None else tuple(lam)
    return OrbitIndex(lam, [(i, n - j) for j, i in enumerate(subset)])


def w0_index(n):
    """The index with I = {1..n} and s = w_0."""
    return decreasing_index(range(1, n + 1))


def action_on_orbit(w, x):
    """(t^lam1 tau1) . (lam, s) = (lam1 + tau1.lam, tau1 o s)."""
    if w.k != x.n:
        raise ValueError("rank mismatch")
    lam1, tau1 = w.to_pair()
    moved = perm_act(tau1, x.lam)
    lam = tuple(a + b for a, b in zip(lam1, moved))
    return OrbitIndex(lam, [(i, tau1[s - 1]) for i, s in x.bij])


def orbit_factorize(x):
    """Return (w, mu) with mu decreasing of zero weight and w . mu = x."""
    n = x.n
    mu = decreasing_index(x.subset)
    tau = [0] * n
    for i, s_mu in mu.bij:
        tau[s_mu - 1] = x.s(i)
    return weyl_from_pair(x.lam, tuple(tau)), mu


def orbit_indices(n, m, lam_values):
    """All indices with lam drawn from lam_values**n (used for sweeps)."""
    from itertools import permutations, product
    out = []
    for subset in combinations(range(1, m + 1), n):
        for images in permutations(range(1, n + 1)):
            for lam in product(lam_values, repeat=n):
                out.append(OrbitIndex(lam, zip(subset, images)))
    return out


def minimal_coset_reps(n, m):
    """Minimal length representatives of the right cosets W_M w in S_m,
    where W_M = S_n x S_{m-n}.

    A representative p sends the positions holding the values 1..n (and
    those holding n+1..m) to them in increasing order, i.e. p^-1 is
    increasing on both value blocks.
    """
    if not 1 <= n <= m:
        raise ValueError("need 1 <= n <= m")
    reps = []
    for small in combinations(range(1, m + 1), n):
        big = [p for p in range(1, m + 1) if p not in small]
        image = [0] * m
        for val, pos in enumerate(small, start=1):
            image[pos - 1] = val
        for val, pos in enumerate(big, start=n + 1):
            image[pos - 1] = val
        reps.append(tuple(image))
    reps.sort(key=lambda p: (perm_inversions(p), p))
    return reps


def levi_factor(tau, n):
    """Split a permutation of {1..m} as tau = inner o rep with inner in
    S_n x S_{m-n} and rep a minimal coset representative."""
    m = len(tau)
    small = [p for p in range(1, m + 1) if tau[p - 1] <= n]
    big = [p for p in range(1, m + 1) if tau[p - 1] > n]
    rep = [0] * m
    for val, pos in enumerate(small, start=1):
        rep[pos - 1] = val
    for val, pos in enumerate(big, start=n + 1):
        rep[pos - 1] = val
    rep = tuple(rep)
    inner = perm_compose(tau, perm_inverse(rep))
    return inner, rep


def coset_rep_index(rep, n):
    """The decreasing orbit index attached to a minimal coset rep:
    I = rep^-1({1..n}) with bijection w_0 o rep."""
    subset = [p for p in range(1, len(rep) + 1) if rep[p - 1] <= n]
    bij = [(p, n + 1 - rep[p - 1]) for p in subset]
    return OrbitIndex((0,) * n, bij)


def elements_up_to_length(k, max_len):
    """Breadth-first enumeration of the length <= max_len elements of the
    degree-zero component, keyed by word length."""
    if k < 2:
        return {identity(k): 0}
    gens = [simple(k, i) for i in range(k)]
    seen = {identity(k): 0}
    frontier = [identity(k)]
    for step in range(1, max_len + 1):
        nxt = []
        for w in frontier:
            for g in gens:
                u = g * w
                if u not in seen:
                    seen[u] = step
                    nxt.append(u)
        frontier = nxt
    return seen
