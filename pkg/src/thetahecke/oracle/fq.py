"""Linear algebra over the prime field F_q with numpy integer arrays."""

import numpy as np


def check_prime(q):
    if q < 2 or any(q % p == 0 for p in range(2, int(q ** 0.5) + 1)):
        raise ValueError(f"q = {q} is not a prime")
    return q


def inv_mod(a, q):
    return pow(int(a) % q, q - 2, q)


def primitive_root(q):
    if q == 2:
        return 1
    factors = [p for p in range(2, q) if (q - 1) % p == 0
               and all(p % d for d in range(2, int(p ** 0.5) + 1))]
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in factors):
            return g
    raise ValueError("no primitive root")


def rref(rows, q):
    """Reduced row echelon form mod q; returns the nonzero rows."""
    a = np.array(rows, dtype=np.int64) % q
    if a.ndim != 2 or a.size == 0:
        return a.reshape(0, a.shape[-1] if a.ndim == 2 else 0)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = (a[r] * inv_mod(a[r, c], q)) % q
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % q
        r += 1
    return a[:r]


def rank_mod(rows, q):
    return int(rref(rows, q).shape[0])
