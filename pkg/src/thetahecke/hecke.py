"""The affine Iwahori-Hecke algebra of GL_k over Z[v, 1/v], q = v**2.

Elements are finite combinations of the basis T_w, w in the extended
affine Weyl group.  Multiplication walks a reduced word of the left factor
and applies the quadratic relation T_s**2 = (q - 1) T_s + q one simple
reflection at a time; rotations act by T_pi T_w = T_{pi w}.

Normalizations used throughout:
    standard(w)   E_w  = v^-l(w) T_w
    costandard(w)      = v^l(w) (T_{w^-1})^-1
    kl_simple(s)       = v^-1 (T_s + T_e)
"""

from functools import lru_cache
from itertools import permutations

from .ring import ONE, Q, ZERO, LaurentPoly, vpow
from .weyl import (
    WeylElem,
    finite,
    identity,
    left_simple_mul,
    right_simple_mul,
    is_dominant,
    levi_factor,
    longest_perm,
    perm_act,
    perm_compose,
    perm_inversions,
    rotation,
    simple,
    translation,
    weyl_sigma_tilde,
)

Q_MINUS_ONE = Q - ONE
Q_INV = vpow(-2)
Q_INV_MINUS_ONE = Q_INV - ONE


class HeckeElem:
    """A finite Z[v, 1/v]-combination of T_w for w of a fixed rank k."""

    __slots__ = ("k", "terms")

    def __init__(self, k, terms=None):
        self.k = k
        clean = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                if w.k != k:
                    raise ValueError("rank mismatch")
                c = LaurentPoly.coerce(c)
                if w in clean:
                    c = clean[w] + c
                if c.is_zero():
                    clean.pop(w, None)
                else:
                    clean[w] = c
        self.terms = clean

    @classmethod
    def basis(cls, w, coeff=ONE):
        return cls(w.k, {w: coeff})

    @classmethod
    def one(cls, k):
        return cls(k, {identity(k): ONE})

    def is_zero(self):
        return not self.terms

    def coeff(self, w):
        return self.terms.get(w, ZERO)

    def support(self):
        return sorted(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __add__(self, other):
        if other.k != self.k:
            raise ValueError("rank mismatch")
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc[w] + c if w in acc else c
        return HeckeElem(self.k, acc)

    def __neg__(self):
        return HeckeElem(self.k, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        if c.is_zero():
            return HeckeElem(self.k)
        return HeckeElem(self.k, {w: a * c for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return he_mul(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return f"HeckeElem(k={self.k}, 0)"
        body = " + ".join(f"({c})T{list(w.window)}" for w, c in sorted(self.terms.items()))
        return f"HeckeElem(k={self.k}, {body})"

    def to_json(self):
        return {"k": self.k, "terms": [{"w": list(w.window), "c": c.to_json()}
                                       for w, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data):
        terms = {}
        for t in data["terms"]:
            terms[WeylElem(t["w"])] = LaurentPoly.from_json(t["c"])
        return cls(data["k"], terms)


def _accumulate(acc, w, c):
    if w in acc:
        c = acc[w] + c
        if c.is_zero():
            del acc[w]
            return
    acc[w] = c


def _add_into(target, poly, shift=0, sign=1):
    for e, c in poly.items():
        e += shift
        c = target.get(e, 0) + sign * c
        if c:
            target[e] = c
        else:
            target.pop(e, None)


def _step(cur, move, grows):
    """Multiply the element cur (w -> {exp: coeff}) by one T_s, where
    move(w) is the product with s and grows(w) tells whether it is longer."""
    out = {}
    for w, poly in cur.items():
        sw = move(w)
        if grows(w, sw):
            _add_into(out.setdefault(sw, {}), poly)
        else:
            # T_s T_w = (q - 1) T_w + q T_{sw} when sw is shorter
            slot = out.setdefault(w, {})
            _add_into(slot, poly, 2)
            _add_into(slot, poly, 0, -1)
            _add_into(out.setdefault(sw, {}), poly, 2)
    return {w: p for w, p in out.items() if p}


def _longer(w, sw):
    return sw.length() > w.length()


@lru_cache(maxsize=500000)
def _basis_product(x, y):
    """T_x T_y as a tuple of (w, coeff) pairs.

    The shorter factor is expanded into simple reflections, acting from
    the left when x is shorter and from the right otherwise.
    """
    k = x.k
    if x.length() <= y.length():
        word, e = x.reduced_word()
        cur = {rotation(k, e) * y: {0: 1}}
        for i in reversed(word):
            cur = _step(cur, lambda w, i=i: left_simple_mul(i, w), _longer)
    else:
        word, e = y.reduced_word()
        cur = {x: {0: 1}}
        for i in word:
            cur = _step(cur, lambda w, i=i: right_simple_mul(w, i), _longer)
        rot = rotation(k, e)
        cur = {w * rot: p for w, p in cur.items()}
    return tuple((w, LaurentPoly(p)) for w, p in cur.items())


def he_mul(a, b):
    if a.k != b.k:
        raise ValueError("rank mismatch")
    acc = {}
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            cxy = cx * cy
            for w, c in _basis_product(x, y):
                _accumulate(acc, w, c * cxy)
    return HeckeElem(a.k, acc)


def T(w):
    return HeckeElem.basis(w)


def t_simple_inverse(k, i):
    return HeckeElem(k, {simple(k, i): Q_INV, identity(k): Q_INV_MINUS_ONE})


@lru_cache(maxsize=None)
def t_inverse(w):
    """The inverse of T_w in the algebra."""
    word, e = w.reduced_word()
    out = T(rotation(w.k, -e))
    for i in reversed(word):
        out = he_mul(out, t_simple_inverse(w.k, i))
    return out


def standard(w):
    return HeckeElem.basis(w, vpow(-w.length()))


@lru_cache(maxsize=None)
def costandard(w):
    return t_inverse(w.inverse()).scale(vpow(w.length()))


def kl_simple(s):
    if s.length() != 1:
        raise ValueError("kl_simple needs a simple reflection")
    c = vpow(-1)
    return HeckeElem(s.k, {s: c, identity(s.k): c})


def canonical_dominant_split(lam):
    """Return (plus, minus), both dominant, with lam = plus - minus."""
    k = len(lam)
    c = max([0] + [lam[i + 1] - lam[i] for i in range(k - 1)])
    minus = tuple(c * (k - 1 - i) for i in range(k))
    plus = tuple(a + b for a, b in zip(lam, minus))
    return plus, minus


def wakimoto_from_split(plus, minus):
    if not (is_dominant(plus) and is_dominant(minus)):
        raise ValueError("both parts of the split must be dominant")
    return he_mul(standard(translation(plus)),
                  costandard(translation(tuple(-x for x in minus))))


def minimal_dominant_split(lam):
    """Split lam = plus - minus with minus the smallest dominant vector
    making plus dominant: minus collects the negative steps lam_j - lam_{j+1}
    as multiples of the fundamental coweights (1, .., 1, 0, .., 0)."""
    k = len(lam)
    minus = [0] * k
    for j in range(k - 1):
        drop = lam[j] - lam[j + 1]
        if drop < 0:
            for i in range(j + 1):
                minus[i] -= drop
    minus = tuple(minus)
    plus = tuple(a + b for a, b in zip(lam, minus))
    return plus, minus


def wakimoto(lam):
    """Theta_lam.  Evaluated on the minimal dominant split, which gives the
    same element as the canonical split (see wakimoto_canonical) because
    Theta is a homomorphism; the minimal split keeps the factors short."""
    return _wakimoto(tuple(lam))


@lru_cache(maxsize=None)
def _wakimoto(lam):
    return wakimoto_from_split(*minimal_dominant_split(lam))


def wakimoto_canonical(lam):
    """Theta_lam through the canonical split (c * delta)."""
    return wakimoto_from_split(*canonical_dominant_split(tuple(lam)))


def finite_standard(tau):
    return standard(finite(tau))


@lru_cache(maxsize=None)
def bernstein_element(lam, tau):
    """Theta_lam * E_tau."""
    return he_mul(wakimoto(tuple(lam)), finite_standard(tuple(tau)))


def _divide_by_unit(c, unit):
    (e, u), = unit.items()
    if abs(u) != 1:
        raise ArithmeticError("leading coefficient is not a unit")
    return LaurentPoly({f - e: a * u for f, a in c.items()})


def bernstein_decompose(h):
    """Coefficients of h in the basis Theta_lam E_tau.

    Returns a sorted list of (lam, tau, coeff).  The basis is unitriangular
    up to unit monomials with respect to length, so the term of largest
    length is removed at each step.
    """
    rest = dict(h.terms)
    found = {}
    guard = 0
    while rest:
        guard += 1
        if guard > 100000:
            raise ArithmeticError("Bernstein elimination did not terminate")
        x = max(rest, key=lambda w: (w.length(), w.window))
        lam, tau = x.to_pair()
        basis = bernstein_element(lam, tau)
        lead = basis.coeff(x)
        if not lead.is_monomial():
            raise ArithmeticError(f"non-monomial leading coefficient at {x}")
        c = _divide_by_unit(rest[x], lead)
        for w, b in basis.terms.items():
            _accumulate(rest, w, -(c * b))
        if x in rest:
            raise ArithmeticError("leading term survived elimination")
        key = (lam, tau)
        found[key] = found[key] + c if key in found else c
    return sorted((lam, tau, c) for (lam, tau), c in found.items() if not c.is_zero())


def bernstein_recompose(k, terms):
    out = HeckeElem(k)
    for lam, tau, c in terms:
        out = out + bernstein_element(tuple(lam), tuple(tau)).scale(c)
    return out


def parabolic_terms(h, n):
    """Group the Bernstein expansion of h by minimal coset representative.

    Returns rep -> list of (lam, inner, coeff) with
    h = sum coeff * Theta_lam E_inner E_rep, inner in S_n x S_{m-n}.
    """
    out = {}
    for lam, tau, c in bernstein_decompose(h):
        inner, rep = levi_factor(tau, n)
        out.setdefault(rep, []).append((lam, inner, c))
    return out


def parabolic_decompose(h, n):
    """Return rep -> m_rep in the Levi subalgebra with h = sum m_rep T_rep."""
    out = {}
    for rep, terms in parabolic_terms(h, n).items():
        factor = vpow(-perm_inversions(rep))
        part = bernstein_recompose(h.k, terms).scale(factor)
        if not part.is_zero():
            out[rep] = part
    return out


def parabolic_recompose(k, parts):
    out = HeckeElem(k)
    for rep, part in parts.items():
        out = out + he_mul(part, T(finite(rep)))
    return out


def star_sharp(h):
    return HeckeElem(h.k, {w.inverse(): c for w, c in h.terms.items()})


def sigma_tilde_alg(h):
    """The automorphism T_w -> T_{sigma_tilde(w)}."""
    return HeckeElem(h.k, {weyl_sigma_tilde(w): c for w, c in h.terms.items()})


def sigma_tilde_bernstein(h):
    """The same automorphism computed on the Bernstein basis:
    Theta_lam E_tau -> Theta_{-w0 lam} E_{w0 tau w0}."""
    k = h.k
    w0 = longest_perm(k)
    out = HeckeElem(k)
    for lam, tau, c in bernstein_decompose(h):
        new_lam = tuple(-x for x in perm_act(w0, lam))
        new_tau = perm_compose(perm_compose(w0, tau), w0)
        out = out + bernstein_element(new_lam, new_tau).scale(c)
    return out


def sigma_alg(h):
    """The anti-automorphism sigma = sigma_tilde o star_sharp."""
    return sigma_tilde_alg(star_sharp(h))


def pi1_split(h):
    out = {}
    for w, c in h.terms.items():
        out.setdefault(w.pi1_degree(), {})[w] = c
    return {d: HeckeElem(h.k, t) for d, t in sorted(out.items())}


def finite_perms(k):
    return [tuple(p) for p in permutations(range(1, k + 1))]
