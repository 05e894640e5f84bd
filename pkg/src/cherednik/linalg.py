"""Dense exact linear algebra over Fraction / cyclotomic entries.

Matrices are lists of rows; vectors are lists.  Entries only need +, -, *, /,
equality and truthiness-as-nonzero, so Fraction and CyclotomicScalar mix
freely (integer zeros and ones are fine too).  Everything is exact; there is
no pivoting for numerical stability because there is no rounding.
"""

from fractions import Fraction

from .scalars import CyclotomicScalar, rational_part_sign


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def columns(m):
    return transpose(m)


def mat_mul(a, b):
    rb = len(b)
    cb = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cb
        for k in range(rb):
            v = row[k]
            if v:
                bk = b[k]
                for j in range(cb):
                    if bk[j]:
                        acc[j] = acc[j] + v * bk[j]
        out.append(acc)
    return out


def mat_vec(m, v):
    out = []
    for row in m:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, m):
    return [[c * x for x in row] for row in m]


def kron(a, b):
    if not a or not b:
        return []
    rb, cb = len(b), len(b[0])
    out = []
    for ra in a:
        for i in range(rb):
            row = []
            for v in ra:
                if v:
                    row.extend(v * b[i][j] for j in range(cb))
                else:
                    row.extend([0] * cb)
            out.append(row)
    return out


def rref(m):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    # ints are promoted so that pivot division never hits int/int -> float
    a = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m):
    return len(rref(m)[1])


def nullspace(m):
    """Basis of the right kernel, one vector per free column."""
    if not m:
        return []
    a, pivots = rref(m)
    cols = len(m[0])
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = [0] * cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            if a[i][f]:
                v[pc] = -a[i][f]
        basis.append(v)
    return basis


def solve(m, b):
    """One exact solution of m x = b, or None if inconsistent.

    Free variables are set to zero.  Works for overdetermined systems.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    aug = [list(m[i]) + [b[i]] for i in range(rows)]
    a, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [0] * cols
    for i, pc in enumerate(pivots):
        x[pc] = a[i][cols]
    return x


def inverse(m):
    n = len(m)
    aug = [list(m[i]) + identity(n)[i] for i in range(n)]
    a, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in a]


# --- subspace utilities -----------------------------------------------------

def column_space_basis(vectors):
    """Echelonized basis of the span of the given vectors."""
    if not vectors:
        return []
    a, pivots = rref([list(v) for v in vectors])
    return [a[i] for i in range(len(pivots))]


def coords_in_span(basis, v):
    """Coefficients writing v in the given basis, or None if outside."""
    if not basis:
        return None if any(x for x in v) else []
    m = transpose([list(bv) for bv in basis])
    return solve(m, list(v))


def in_span(basis, v):
    return coords_in_span(basis, v) is not None


def subspace_intersection(abasis, bbasis):
    """Basis of span(abasis) intersect span(bbasis)."""
    if not abasis or not bbasis:
        return []
    dim = len(abasis[0])
    m = [[0] * (len(abasis) + len(bbasis)) for _ in range(dim)]
    for j, v in enumerate(abasis):
        for i in range(dim):
            m[i][j] = v[i]
    for j, v in enumerate(bbasis):
        for i in range(dim):
            m[i][len(abasis) + j] = -v[i]
    out = []
    for ker in nullspace(m):
        vec = [0] * dim
        for j, v in enumerate(abasis):
            if ker[j]:
                for i in range(dim):
                    vec[i] = vec[i] + ker[j] * v[i]
        out.append(vec)
    return column_space_basis(out)


# --- positivity -------------------------------------------------------------

def _as_fraction(x):
    if isinstance(x, CyclotomicScalar):
        return x.rational_value()
    return Fraction(x)


def psd_report(g):
    """Decide positive semidefiniteness of a symmetric rational matrix.

    Symmetric congruence elimination without square roots.  Returns a dict:
      psd: bool
      pivots: the nonzero pivots encountered, in elimination order
      witness: a vector v with v^T g v < 0, or None
      step: index (into pivot order) where the failure surfaced, or None
    Raises NotRational on irrational entries; positivity is only decided
    over Q.
    """
    n = len(g)
    a = [[_as_fraction(x) for x in row] for row in g]
    # cumulative transform: current a equals E g E^T
    E = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    remaining = list(range(n))
    pivots = []
    while remaining:
        piv = None
        for i in remaining:
            if a[i][i]:
                piv = i
                break
        if piv is None:
            # all remaining diagonals vanish; any off-diagonal entry between
            # remaining indices makes the form indefinite
            for i in remaining:
                for j in remaining:
                    if i < j and a[i][j]:
                        s = a[i][j]
                        v = [E[j][k] - E[i][k] / s for k in range(n)]
                        return {"psd": False, "pivots": pivots,
                                "witness": v, "step": len(pivots)}
            break
        d = a[piv][piv]
        if d < 0:
            return {"psd": False, "pivots": pivots,
                    "witness": list(E[piv]), "step": len(pivots)}
        pivots.append(d)
        remaining.remove(piv)
        for j in remaining:
            if a[j][piv]:
                f = a[j][piv] / d
                for k in range(n):
                    a[j][k] -= f * a[piv][k]
                    E[j][k] -= f * E[piv][k]
                for k in range(n):
                    a[k][j] -= f * a[k][piv]
    return {"psd": True, "pivots": pivots, "witness": None, "step": None}
