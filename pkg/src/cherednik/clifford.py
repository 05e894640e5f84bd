"""Clifford algebras C(V), the spin module on the exterior algebra of h,
Chevalley lifts of skew forms, and the pin-cover elements tau_w.

Elements are sparse maps from square-free ordered generator monomials to
scalars.  The defining relation is v v' + v' v = -2 <v, v'> for the symmetric
form given by the algebra's Gram matrix.  The standard polarized algebra on
V = h + h* uses the interleaved generator order x1 < y1 < ... < xn < yn with
<x_i, y_j> = delta_ij and both halves isotropic; a general symmetric Gram
matrix is supported for orthogonal-space presets.
"""

from fractions import Fraction
from functools import lru_cache

from . import linalg
from .scalars import CyclotomicScalar, scalar_str


class WordRequired(ValueError):
    """Raised when a pin element is requested for something that is not a
    catalogued group element."""


def _acc(d, key, val):
    s = d.get(key, 0) + val
    if s:
        d[key] = s
    else:
        d.pop(key, None)


class CliffordAlgebra:
    def __init__(self, gram, labels=None):
        self.ngens = len(gram)
        self.gram = gram
        if labels is None:
            labels = [f"e{i}" for i in range(self.ngens)]
        self.labels = labels
        self._gram_inv = None

    def gram_inverse(self):
        if self._gram_inv is None:
            self._gram_inv = linalg.inverse(self.gram)
        return self._gram_inv

    # -- constructors

    def element(self, terms):
        clean = {}
        for mono, c in terms.items():
            if not c:
                continue
            assert all(mono[i] < mono[i + 1] for i in range(len(mono) - 1)), \
                "monomials must be strictly increasing"
            clean[tuple(mono)] = c
        return CliffordElement(self, clean)

    def zero(self):
        return CliffordElement(self, {})

    def one(self):
        return CliffordElement(self, {(): Fraction(1)})

    def scalar(self, c):
        return CliffordElement(self, {(): c} if c else {})

    def gen(self, i):
        return CliffordElement(self, {(i,): Fraction(1)})

    def vector(self, coords, offset=0, step=1):
        """sum_i coords[i] * gen(offset + step*i)."""
        terms = {}
        for i, c in enumerate(coords):
            if c:
                terms[(offset + step * i,)] = c
        return CliffordElement(self, terms)

    # -- core rewriting

    def _insert(self, mono, g, coeff, out):
        """Accumulate mono * gen(g) into out (canonical monomials)."""
        m = list(mono)
        i = len(m)
        sign = coeff
        gram = self.gram
        while i > 0 and m[i - 1] > g:
            cross = gram[m[i - 1]][g]
            if cross:
                _acc(out, tuple(m[:i - 1] + m[i:]), -2 * cross * sign)
            sign = -sign
            i -= 1
        if i > 0 and m[i - 1] == g:
            diag = gram[g][g]
            if diag:
                _acc(out, tuple(m[:i - 1] + m[i:]), -diag * sign)
        else:
            _acc(out, tuple(m[:i] + [g] + m[i:]), sign)

    def _times_gen_sequence(self, terms, gens_seq):
        cur = dict(terms)
        for g in gens_seq:
            nxt = {}
            for mono, coeff in cur.items():
                self._insert(mono, g, coeff, nxt)
            cur = nxt
        return cur

    def _mul_terms(self, aterms, bterms):
        out = {}
        for mb, cb in bterms.items():
            partial = self._times_gen_sequence(
                {ma: ca * cb for ma, ca in aterms.items()}, mb)
            for mono, coeff in partial.items():
                _acc(out, mono, coeff)
        return out


class CliffordElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        assert self.algebra is other.algebra or \
            self.algebra.gram == other.algebra.gram
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return CliffordElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CliffordElement(self.algebra,
                               {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return CliffordElement(
                self.algebra,
                self.algebra._mul_terms(self.terms, other.terms))
        out = {}
        if other:
            for m, c in self.terms.items():
                v = c * other
                if v:
                    out[m] = v
        return CliffordElement(self.algebra, out)

    def __rmul__(self, other):
        # scalars commute with nothing lost; elements use __mul__
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def parity_split(self):
        even = {m: c for m, c in self.terms.items() if len(m) % 2 == 0}
        odd = {m: c for m, c in self.terms.items() if len(m) % 2 == 1}
        return (CliffordElement(self.algebra, even),
                CliffordElement(self.algebra, odd))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[mono]
            word = " ".join(self.algebra.labels[g] for g in mono) or "1"
            parts.append(f"({scalar_str(c)}) {word}")
        return " + ".join(parts)

    __repr__ = __str__


# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def polarized_algebra(n: int) -> CliffordAlgebra:
    """C(h + h*) on 2n generators x1,y1,...,xn,yn with <x_i,y_j> = delta."""
    gram = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    labels = []
    for i in range(n):
        gram[2 * i][2 * i + 1] = Fraction(1)
        gram[2 * i + 1][2 * i] = Fraction(1)
        labels += [f"x{i + 1}", f"y{i + 1}"]
    return CliffordAlgebra(gram, labels)


def clifford_multiply(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a * b


def eps_automorphism(a: CliffordElement) -> CliffordElement:
    return CliffordElement(a.algebra,
                           {m: (c if len(m) % 2 == 0 else -c)
                            for m, c in a.terms.items()})


def transpose_element(a: CliffordElement) -> CliffordElement:
    """Anti-involution with v^t = -v on generators."""
    alg = a.algebra
    out = {}
    for mono, c in a.terms.items():
        sign = -c if len(mono) % 2 else c
        partial = alg._times_gen_sequence({(): sign}, tuple(reversed(mono)))
        for m, coeff in partial.items():
            _acc(out, m, coeff)
    return CliffordElement(alg, out)


def involutions(a: CliffordElement):
    """(eps(a), a^t)."""
    return eps_automorphism(a), transpose_element(a)


def chevalley_lift(form, alg: CliffordAlgebra) -> CliffordElement:
    """kappa = sum_{i,j} a(v_i, v^j) v^i v_j for a skew matrix on the
    generator basis; dual bases are taken against the algebra's Gram form."""
    n = alg.ngens
    ginv = alg.gram_inverse()
    k = linalg.mat_mul(ginv, linalg.mat_mul(form, ginv))
    out = alg.zero()
    for p in range(n):
        for q in range(n):
            if k[p][q]:
                out = out + alg.scalar(k[p][q]) * alg.gen(p) * alg.gen(q)
    return out


# --------------------------------------------------------------------------
# spin module S = wedge algebra of h


@lru_cache(maxsize=None)
def spin_basis(n: int):
    """Subsets of {0..n-1} ordered by (wedge degree, lexicographic)."""
    basis = []
    for mask in range(2 ** n):
        basis.append(tuple(i for i in range(n) if mask & (1 << i)))
    basis.sort(key=lambda t: (len(t), t))
    return basis


@lru_cache(maxsize=None)
def _spin_generator_matrices(n: int):
    basis = spin_basis(n)
    index = {b: k for k, b in enumerate(basis)}
    dim = len(basis)
    mats = []
    for g in range(2 * n):
        i = g // 2
        m = [[Fraction(0)] * dim for _ in range(dim)]
        for col, I in enumerate(basis):
            if g % 2 == 0:
                # x_i: contraction, 1-based position sign, factor 2
                if i in I:
                    p = I.index(i) + 1
                    target = tuple(j for j in I if j != i)
                    m[index[target]][col] = Fraction(2 * (-1) ** p)
            else:
                # y_i: wedge from the left
                if i not in I:
                    smaller = sum(1 for j in I if j < i)
                    target = tuple(sorted(I + (i,)))
                    m[index[target]][col] = Fraction((-1) ** smaller)
        mats.append(m)
    return mats


def spin_action(a: CliffordElement, alg: CliffordAlgebra):
    """2^n x 2^n matrix of a on the spin module; alg must be polarized."""
    n = alg.ngens // 2
    assert alg.gram == polarized_algebra(n).gram, "spin module needs h + h*"
    mats = _spin_generator_matrices(n)
    dim = 2 ** n
    out = [[0] * dim for _ in range(dim)]
    for mono, c in a.terms.items():
        m = None
        for g in mono:
            m = mats[g] if m is None else linalg.mat_mul(m, mats[g])
        if m is None:
            for i in range(dim):
                out[i][i] = out[i][i] + c
        else:
            for i in range(dim):
                for j in range(dim):
                    if m[i][j]:
                        out[i][j] = out[i][j] + c * m[i][j]
    return out


# --------------------------------------------------------------------------
# pin cover


def tau_reflection(r, alg: CliffordAlgebra) -> CliffordElement:
    """tau_s = (1 - lambda_s)/(2 <alpha^v, alpha>) alpha^v alpha + 1."""
    pairing = 0
    for a, b in zip(r.alpha_check, r.alpha):
        pairing = pairing + a * b
    scale = (1 - r.lam) / (2 * pairing)
    av = alg.vector(r.alpha_check, offset=1, step=2)
    al = alg.vector(r.alpha, offset=0, step=2)
    return alg.scalar(scale) * av * al + alg.one()


def pin_tau(w_index, group, alg: CliffordAlgebra = None) -> CliffordElement:
    """tau_w along the group's BFS reflection word for w."""
    if alg is None:
        alg = polarized_algebra(group.n)
    if not isinstance(w_index, int) or not 0 <= w_index < group.order:
        raise WordRequired(f"no reflection word for {w_index!r}")
    out = alg.one()
    for gi in group.words[w_index]:
        r = group.reflection_at(group.generator_indices[gi])
        out = out * tau_reflection(r, alg)
    return out


def pin_tau_inverse(w_index, group, alg: CliffordAlgebra = None) -> CliffordElement:
    """Inverse of tau_w, inverting each reflection factor along the
    reversed word.

    With A = alpha^v alpha one has A^2 = -2<alpha^v, alpha> A, so
    (1 + mu A)^(-1) = 1 - (mu/lambda) A exactly.
    """
    if alg is None:
        alg = polarized_algebra(group.n)
    if not isinstance(w_index, int) or not 0 <= w_index < group.order:
        raise WordRequired(f"no reflection word for {w_index!r}")
    out = alg.one()
    for gi in reversed(group.words[w_index]):
        r = group.reflection_at(group.generator_indices[gi])
        pairing = 0
        for a, b in zip(r.alpha_check, r.alpha):
            pairing = pairing + a * b
        mu = (1 - r.lam) / (2 * pairing)
        if isinstance(r.lam, CyclotomicScalar):
            scale = mu * r.lam.inverse()
        else:
            scale = mu * Fraction(1, r.lam)
        av = alg.vector(r.alpha_check, offset=1, step=2)
        al = alg.vector(r.alpha, offset=0, step=2)
        out = out * (alg.one() - alg.scalar(scale) * av * al)
    return out


# --------------------------------------------------------------------------
# serialization


def element_to_data(a: CliffordElement):
    items = []
    for mono in sorted(a.terms, key=lambda m: (len(m), m)):
        items.append({"monomial": [a.algebra.labels[g] for g in mono],
                      "coeff": scalar_str(a.terms[mono])})
    return items
