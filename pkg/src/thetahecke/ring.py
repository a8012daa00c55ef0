"""Exact Laurent polynomials in one variable v over the integers.

The variable v is a square root of q, so q = v**2.  Values are immutable
and hashable, which lets them serve as coefficients in dictionaries keyed
by group elements.
"""

from fractions import Fraction


class LaurentPoly:
    """Element of Z[v, 1/v] stored as a sorted tuple of (exponent, coeff)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            acc = {}
            for e, c in terms:
                acc[e] = acc.get(e, 0) + c
            terms = acc
        cleaned = tuple(sorted((int(e), int(c)) for e, c in terms.items() if c != 0))
        self._terms = cleaned
        self._hash = None

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def min_degree(self):
        return self._terms[0][0] if self._terms else None

    def max_degree(self):
        return self._terms[-1][0] if self._terms else None

    def coeff(self, exp):
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            f, d = other._terms[0]
            return LaurentPoly({e + f: c * d for e, c in self._terms})
        acc = {}
        for e, c in self._terms:
            for f, d in other._terms:
                acc[e + f] = acc.get(e + f, 0) + c * d
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise ValueError("only unit monomials have negative powers")
            e, c = self._terms[0]
            return LaurentPoly({e * k: c ** abs(k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k):
        """Multiply by v**k."""
        return LaurentPoly({e + k: c for e, c in self._terms})

    def bar(self):
        """The ring involution v -> 1/v."""
        return LaurentPoly({-e: c for e, c in self._terms})

    def to_json(self):
        return {"terms": [[e, c] for e, c in self._terms]}

    @classmethod
    def from_json(cls, data):
        exps = [e for e, _ in data["terms"]]
        if exps != sorted(set(exps)):
            raise ValueError("exponents must be strictly increasing")
        return cls({e: c for e, c in data["terms"]})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                mono = str(abs(c))
            else:
                base = "v" if e == 1 else f"v^{e}"
                mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})
Q = LaurentPoly({2: 1})


def vpow(k):
    return LaurentPoly({k: 1})


def laurent_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


class QuadValue:
    """Element even + odd*s of Q[s]/(s^2 - q0), where s stands for sqrt(q0).

    This is the target of specialization v -> sqrt(q0).  Exact rationals
    are used for both parts because negative powers of v appear.
    """

    __slots__ = ("even", "odd", "q0")

    def __init__(self, even, odd, q0):
        self.even = Fraction(even)
        self.odd = Fraction(odd)
        self.q0 = q0

    def pair(self):
        return (self.even, self.odd)

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self.pair() == tuple(Fraction(x) for x in other)
        if not isinstance(other, QuadValue):
            return NotImplemented
        return self.q0 == other.q0 and self.pair() == other.pair()

    def __hash__(self):
        return hash((self.even, self.odd, self.q0))

    def __add__(self, other):
        return QuadValue(self.even + other.even, self.odd + other.odd, self.q0)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadValue(self.even * other, self.odd * other, self.q0)
        e = self.even * other.even + self.odd * other.odd * self.q0
        o = self.even * other.odd + self.odd * other.even
        return QuadValue(e, o, self.q0)

    __rmul__ = __mul__

    def __repr__(self):
        return f"QuadValue({self.even}, {self.odd}; q0={self.q0})"


def laurent_specialize(a, q0):
    """Evaluate a at v = sqrt(q0), returning a QuadValue.

    v**e becomes q0**(e//2) times s**(e % 2); floor division keeps the
    odd part attached to a single factor s.
    """
    if q0 < 2:
        raise ValueError("q0 must be at least 2")
    even = Fraction(0)
    odd = Fraction(0)
    for e, c in a.items():
        scale = Fraction(q0) ** (e // 2)
        if e % 2 == 0:
            even += c * scale
        else:
            odd += c * scale
    return QuadValue(even, odd, q0)
