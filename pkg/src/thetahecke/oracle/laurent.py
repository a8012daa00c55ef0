"""Matrices whose entries are Laurent polynomials in t over F_q.

Coefficients live in an integer array of shape (rows, cols, span); slice p
holds the coefficient of t^(low + p).  Products are exact, so group
elements and their inverses can be carried around without truncation.
"""

import numpy as np


class LaurentMatrix:
    __slots__ = ("q", "low", "data")

    def __init__(self, q, low, data):
        data = np.asarray(data, dtype=np.int64) % q
        self.q = q
        self.low = int(low)
        self.data = data
        self._trim()

    def _trim(self):
        d = self.data
        if d.shape[2] == 0:
            return
        nz = np.nonzero(d.reshape(-1, d.shape[2]).any(axis=0))[0]
        if nz.size == 0:
            self.data = d[:, :, :0]
            self.low = 0
            return
        lo, hi = nz[0], nz[-1] + 1
        if lo or hi < d.shape[2]:
            self.data = d[:, :, lo:hi]
            self.low += int(lo)

    @classmethod
    def zeros(cls, q, rows, cols):
        return cls(q, 0, np.zeros((rows, cols, 0), dtype=np.int64))

    @classmethod
    def from_entries(cls, q, rows, cols, entries):
        """entries maps (i, j) (0-based) to a dict exponent -> coefficient."""
        exps = [e for poly in entries.values() for e in poly]
        if not exps:
            return cls.zeros(q, rows, cols)
        low, high = min(exps), max(exps)
        data = np.zeros((rows, cols, high - low + 1), dtype=np.int64)
        for (i, j), poly in entries.items():
            for e, c in poly.items():
                data[i, j, e - low] += c
        return cls(q, low, data)

    @classmethod
    def identity(cls, q, k):
        return cls.from_entries(q, k, k, {(i, i): {0: 1} for i in range(k)})

    @property
    def shape(self):
        return self.data.shape[:2]

    def is_zero(self):
        return self.data.shape[2] == 0

    def min_exp(self):
        return None if self.is_zero() else self.low

    def max_exp(self):
        return None if self.is_zero() else self.low + self.data.shape[2] - 1

    def coeff(self, i, j, e):
        p = e - self.low
        if self.is_zero() or not 0 <= p < self.data.shape[2]:
            return 0
        return int(self.data[i, j, p])

    def entry(self, i, j):
        return {self.low + p: int(c) for p, c in enumerate(self.data[i, j]) if c}

    def __matmul__(self, other):
        if self.q != other.q or self.shape[1] != other.shape[0]:
            raise ValueError("incompatible matrices")
        rows, cols = self.shape[0], other.shape[1]
        if self.is_zero() or other.is_zero():
            return LaurentMatrix.zeros(self.q, rows, cols)
        la, lb = self.data.shape[2], other.data.shape[2]
        out = np.zeros((rows, cols, la + lb - 1), dtype=np.int64)
        for p in range(la):
            a = self.data[:, :, p]
            if not a.any():
                continue
            for s in range(lb):
                out[:, :, p + s] += a @ other.data[:, :, s]
            out %= self.q
        return LaurentMatrix(self.q, self.low + other.low, out)

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.max_exp(), other.max_exp())
        out = np.zeros(self.shape + (high - low + 1,), dtype=np.int64)
        out[:, :, self.low - low:self.low - low + self.data.shape[2]] += self.data
        out[:, :, other.low - low:other.low - low + other.data.shape[2]] += other.data
        return LaurentMatrix(self.q, low, out)

    def transpose(self):
        return LaurentMatrix(self.q, self.low, self.data.transpose(1, 0, 2))

    def shift(self, e):
        """Multiply by t^e."""
        return LaurentMatrix(self.q, self.low + e, self.data)

    def truncate(self, r):
        """Drop every term of exponent >= r."""
        if self.is_zero() or self.max_exp() < r:
            return self
        keep = max(0, r - self.low)
        return LaurentMatrix(self.q, self.low, self.data[:, :, :keep])

    def window_array(self, low, high):
        """Coefficients of exponents low..high-1 as an array; raises when
        a nonzero term lies below low."""
        out = np.zeros(self.shape + (high - low,), dtype=np.int64)
        if self.is_zero():
            return out
        if self.low < low:
            raise ValueError("matrix has terms below the requested window")
        for p in range(self.data.shape[2]):
            e = self.low + p
            if e >= high:
                break
            out[:, :, e - low] = self.data[:, :, p]
        return out

    def __eq__(self, other):
        return (isinstance(other, LaurentMatrix) and self.q == other.q
                and self.shape == other.shape and self.low == other.low
                and np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.q, self.low, self.data.tobytes(), self.shape))

    def __repr__(self):
        rows = []
        for i in range(self.shape[0]):
            cells = []
            for j in range(self.shape[1]):
                poly = self.entry(i, j)
                cells.append(" + ".join(f"{c}t^{e}" for e, c in sorted(poly.items())) or "0")
            rows.append("[" + ", ".join(cells) + "]")
        return f"LaurentMatrix(q={self.q}, [{'; '.join(rows)}])"
