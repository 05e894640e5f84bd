"""Catalogue of small complex reflection groups.

Entries: A1, A2, B2, B3, I2_m (m = 3..6), Zm (m = 2..6) and G(m,1,2)
(m = 2..4).  Groups are enumerated by breadth-first closure from generator
matrices acting on h; reflection data (alpha, coroot, lambda), conjugacy
classes, characters and fundamental invariants are computed and verified at
build time.  Character tables come from irreducible matrices shipped with
each entry, validated against orthogonality, not from a general algorithm.

Conventions: group elements are matrices on h; the action on h* is the
inverse transpose; pairing of h and h* coordinates is the dot product.
<alpha_check, alpha> is normalized to 2 for the real families and 1 for the
cyclic and G(m,1,2) entries.
"""

import math
from fractions import Fraction
from functools import lru_cache

from . import linalg, poly
from .scalars import CyclotomicScalar, conjugate, zeta


class UnknownGroup(KeyError):
    pass


class NotARepresentation(ValueError):
    pass


def _c(x):
    """Normalize an entry to something with exact arithmetic."""
    if isinstance(x, CyclotomicScalar):
        return x
    return Fraction(x)


def _entry_key(x, n):
    if not isinstance(x, CyclotomicScalar):
        x = CyclotomicScalar.from_rational(Fraction(x))
    return x.at_conductor(n).key()


def _mat_key(m, n):
    return tuple(tuple(_entry_key(x, n) for x in row) for row in m)


def trace(m):
    t = 0
    for i in range(len(m)):
        t = t + m[i][i]
    return t


class Reflection:
    """A pseudo-reflection with its root data.

    alpha lives in h* and alpha_check in h (coordinate lists); lam is the
    nontrivial eigenvalue on the alpha_check line; sqrt_lambda is a fixed
    square root of lam (a conductor-doubling choice recorded once so tests
    can verify nothing downstream depends on it).
    """

    __slots__ = ("element_index", "alpha", "alpha_check", "lam",
                 "sqrt_lambda", "class_name")

    def __init__(self, element_index, alpha, alpha_check, lam, sqrt_lambda):
        self.element_index = element_index
        self.alpha = alpha
        self.alpha_check = alpha_check
        self.lam = lam
        self.sqrt_lambda = sqrt_lambda
        self.class_name = None


class WRepresentation:
    """A matrix representation: matrices[i] is the image of element i."""

    def __init__(self, dimension, matrices):
        self.dimension = dimension
        self.matrices = matrices

    def character(self, group):
        return [trace(self.matrices[k[0]]) for k in group.conjugacy_classes]


class ReflectionGroup:
    def __init__(self, **kw):
        self.__dict__.update(kw)

    # -- products and inverses (by matrix-key lookup)

    def mult(self, i, j):
        key = (i, j)
        got = self._mult_cache.get(key)
        if got is None:
            prod = linalg.mat_mul(self.elements[i], self.elements[j])
            got = self._index[_mat_key(prod, self._conductor)]
            self._mult_cache[key] = got
        return got

    def inverse_index(self, i):
        got = self._inv_cache.get(i)
        if got is None:
            inv = linalg.inverse(self.elements[i])
            got = self._index[_mat_key(inv, self._conductor)]
            self._inv_cache[i] = got
        return got

    def element_index(self, matrix):
        return self._index[_mat_key(matrix, self._conductor)]

    def h_star_matrix(self, i):
        got = self._hstar_cache.get(i)
        if got is None:
            got = linalg.transpose(linalg.inverse(self.elements[i]))
            self._hstar_cache[i] = got
        return got

    @property
    def order(self):
        return len(self.elements)

    def class_of(self, i):
        return self._class_of[i]

    def class_name_of_element(self, i):
        return self.class_names[self._class_of[i]]

    def reflection_class_names(self):
        seen = []
        for r in self.reflections:
            if r.class_name not in seen:
                seen.append(r.class_name)
        return seen

    def reflection_at(self, element_index):
        return self._refl_by_element.get(element_index)

    def eps_value(self, i):
        """det_h of element i."""
        return self._det[i]

    def tensor_with_eps(self, label):
        return self._eps_tensor[label]

    def irrep(self, label):
        try:
            return self.irreps[label]
        except KeyError:
            raise UnknownGroup(f"unknown irrep label {label!r} "
                               f"for {self.catalogue_id}") from None

    def dim_of(self, label):
        return self.irrep_dims[self.irrep_labels.index(label)]


# --------------------------------------------------------------------------
# catalogue data


def _mat(rows):
    return [[_c(x) for x in row] for row in rows]


def _a2_std():
    return [_mat([[-1, 1], [0, 1]]), _mat([[1, 0], [1, -1]])]


def _catalogue():
    cat = {}

    cat["A1"] = dict(
        rank=1, family="real",
        generators=[_mat([[-1]])],
        irreps=[("triv", [_mat([[1]])]),
                ("sgn", [_mat([[-1]])])],
        invariant_degrees=[2],
        namer="single",
    )

    cat["A2"] = dict(
        rank=2, family="real",
        generators=_a2_std(),
        irreps=[("triv", [_mat([[1]]), _mat([[1]])]),
                ("sgn", [_mat([[-1]]), _mat([[-1]])]),
                ("std", _a2_std())],
        invariant_degrees=[2, 3],
        namer="single",
    )

    b2_long = _mat([[0, 1], [1, 0]])
    b2_short = _mat([[1, 0], [0, -1]])
    cat["B2"] = dict(
        rank=2, family="real",
        generators=[b2_long, b2_short],
        irreps=[("2x0", [_mat([[1]]), _mat([[1]])]),
                ("11x0", [_mat([[-1]]), _mat([[1]])]),
                ("0x2", [_mat([[1]]), _mat([[-1]])]),
                ("0x11", [_mat([[-1]]), _mat([[-1]])]),
                ("1x1", [b2_long, b2_short])],
        invariant_degrees=[2, 4],
        namer="b_type",
    )

    m1 = _mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    m2 = _mat([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    mt = _mat([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])
    a2s1, a2s2 = _a2_std()
    i2 = linalg.identity(2)
    neg = linalg.mat_scale(Fraction(-1), i2)
    nm1 = linalg.mat_scale(Fraction(-1), m1)
    nm2 = linalg.mat_scale(Fraction(-1), m2)
    nmt = linalg.mat_scale(Fraction(-1), mt)
    cat["B3"] = dict(
        rank=3, family="real",
        generators=[m1, m2, mt],
        irreps=[("3x0", [_mat([[1]]), _mat([[1]]), _mat([[1]])]),
                ("111x0", [_mat([[-1]]), _mat([[-1]]), _mat([[1]])]),
                ("0x3", [_mat([[1]]), _mat([[1]]), _mat([[-1]])]),
                ("0x111", [_mat([[-1]]), _mat([[-1]]), _mat([[-1]])]),
                ("21x0", [a2s1, a2s2, i2]),
                ("0x21", [a2s1, a2s2, neg]),
                ("2x1", [m1, m2, mt]),
                ("11x1", [nm1, nm2, mt]),
                ("1x2", [m1, m2, nmt]),
                ("1x11", [nm1, nm2, nmt])],
        invariant_degrees=[2, 4, 6],
        namer="b_type",
    )

    # dihedral I2(m): generators with c1*c2 = 4cos^2(pi/m)
    i2_consts = {3: (_c(1), _c(1)), 4: (_c(1), _c(2)),
                 5: (1 + zeta(5) + zeta(5) ** 4, 1 + zeta(5) + zeta(5) ** 4),
                 6: (_c(1), _c(3))}
    for m, (c1, c2) in i2_consts.items():
        s1 = [[_c(-1), c1], [_c(0), _c(1)]]
        s2 = [[_c(1), _c(0)], [c2, _c(-1)]]
        swap = _mat([[0, 1], [1, 0]])
        irreps = [("triv", [_mat([[1]]), _mat([[1]])]),
                  ("sgn", [_mat([[-1]]), _mat([[-1]])])]
        if m % 2 == 0:
            irreps += [("sgn1", [_mat([[-1]]), _mat([[1]])]),
                       ("sgn2", [_mat([[1]]), _mat([[-1]])])]
        for j in range(1, (m - 1) // 2 + 1):
            zj = zeta(m, j)
            rho_s2 = [[_c(0), zeta(m, -j)], [zj, _c(0)]]
            irreps.append((f"rho{j}", [swap, rho_s2]))
        cat[f"I2_{m}"] = dict(
            rank=2, family="real",
            generators=[s1, s2],
            irreps=irreps,
            invariant_degrees=[2, m],
            namer="i2_even" if m % 2 == 0 else "single",
        )

    for m in range(2, 7):
        z = zeta(m)
        cat[f"Z{m}"] = dict(
            rank=1, family="cyclic",
            generators=[[[z]]],
            irreps=[(f"chi{j}", [[[zeta(m, j)]]]) for j in range(m)],
            invariant_degrees=[m],
            namer="cyclic",
        )

    for m in range(2, 5):
        z = zeta(m)
        swap = _mat([[0, 1], [1, 0]])
        delta = [[z, _c(0)], [_c(0), _c(1)]]
        irreps = []
        for j in range(m):
            irreps.append((f"chi{j}p", [_mat([[1]]), [[zeta(m, j)]]]))
            irreps.append((f"chi{j}m", [_mat([[-1]]), [[zeta(m, j)]]]))
        for j in range(m):
            for k in range(j + 1, m):
                dj = [[zeta(m, j), _c(0)], [_c(0), zeta(m, k)]]
                irreps.append((f"rho{j}{k}", [swap, dj]))
        cat[f"G{m}_1_2"] = dict(
            rank=2, family="gm12",
            generators=[swap, delta],
            irreps=irreps,
            invariant_degrees=[m, 2 * m],
            namer="gm12",
        )

    return cat


CATALOGUE_IDS = sorted(_catalogue().keys())


# --------------------------------------------------------------------------
# build


def _enumerate(generators, conductor):
    """BFS closure; returns (elements, words, index, identity first)."""
    n = len(generators[0])
    ident = linalg.identity(n)
    elements = [ident]
    words = [()]
    index = {_mat_key(ident, conductor): 0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for gi, g in enumerate(generators):
                prod = linalg.mat_mul(elements[i], g)
                key = _mat_key(prod, conductor)
                if key not in index:
                    index[key] = len(elements)
                    elements.append(prod)
                    words.append(words[i] + (gi,))
                    nxt.append(index[key])
        frontier = nxt
        if len(elements) > 2000:
            raise ValueError("group too large for the catalogue")
    return elements, words, index


def _conjugacy_classes(group_mult, inverse_index, order, gens):
    seen = [False] * order
    classes = []
    for i in range(order):
        if seen[i]:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            j = frontier.pop()
            for g in gens:
                k = group_mult(g, group_mult(j, inverse_index(g)))
                if k not in orbit:
                    orbit.add(k)
                    frontier.append(k)
        orbit = sorted(orbit)
        for j in orbit:
            seen[j] = True
        classes.append(orbit)
    classes.sort(key=lambda cl: cl[0])
    return classes


def _find_reflection_data(mat, family):
    """(alpha, alpha_check, lambda) for a pseudo-reflection matrix, or None."""
    n = len(mat)
    diff = [[mat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    if linalg.rank(diff) != 1:
        return None
    # alpha_check spans the image of (s - 1); alpha spans the image of (s^T - 1)
    cols = linalg.columns(diff)
    alpha_check = next(c for c in cols if any(x for x in c))
    rows = [list(r) for r in diff]
    alpha = next(r for r in rows if any(x for x in r))
    # (s - 1) alpha_check = (lambda - 1) alpha_check
    img = linalg.mat_vec(diff, alpha_check)
    pivot = next(i for i, x in enumerate(alpha_check) if x)
    lam = img[pivot] / alpha_check[pivot] + 1
    if lam == 1:
        return None
    pairing = sum(a * b for a, b in zip(alpha_check, alpha))
    target = 2 if family == "real" else 1
    alpha = [x * target / pairing for x in alpha]
    return alpha, alpha_check, lam


def _root_of_unity_data(lam):
    """(order r, exponent t) with lam = zeta_r^t, t coprime to r."""
    r = 1
    acc = lam
    while acc != 1:
        acc = acc * lam
        r += 1
        if r > 100:
            raise ValueError("not a root of unity")
    for t in range(1, r + 1):
        if zeta(r, t) == lam:
            return r, t
    raise ValueError("not a root of unity")


def _name_reflection_classes(namer, group):
    names = {}
    for r in group.reflections:
        ci = group.class_of(r.element_index)
        if ci in names:
            continue
        if namer == "single":
            names[ci] = "s"
        elif namer == "b_type":
            mat = group.elements[r.element_index]
            n = len(mat)
            diag = all(not mat[i][j] for i in range(n) for j in range(n) if i != j)
            names[ci] = "short" if diag else "long"
        elif namer == "i2_even":
            refl_classes = sorted({group.class_of(rr.element_index)
                                   for rr in group.reflections})
            for pos, cl in enumerate(refl_classes):
                names[cl] = f"s{pos + 1}"
        elif namer == "cyclic":
            # gamma^k sits at BFS depth k
            names[ci] = f"g{len(group.words[r.element_index])}"
        elif namer == "gm12":
            mat = group.elements[r.element_index]
            if mat[0][1] or mat[1][0]:
                names[ci] = "s"
            else:
                rr, t = _root_of_unity_data(r.lam)
                # exponent of zeta_m: lam = zeta_m^k
                m = group._zm
                k = t * (m // rr) % m
                names[ci] = f"d{k}"
        else:
            raise AssertionError(namer)
    return names


def _invariant_generators(group):
    n = group.n
    gens_hstar = [group.h_star_matrix(i) for i in group.generator_indices]
    chosen = []
    for d in group.invariant_degrees:
        monos = poly.monomials(n, d)
        dim = len(monos)
        stacked = []
        for B in gens_hstar:
            act = poly.action_matrix_on_degree(B, n, d)
            for i in range(dim):
                row = list(act[i])
                row[i] = row[i] - 1
                stacked.append(row)
        inv_vecs = linalg.nullspace(stacked)
        # span of products of previously chosen generators in this degree
        prods = []

        def extend(idx, left, acc):
            if idx == len(chosen):
                if left == 0:
                    prods.append(poly.to_vector(acc, monos))
                return
            f, df = chosen[idx]
            k = 0
            cur = acc
            while k * df <= left:
                extend(idx + 1, left - k * df, cur)
                cur = poly.p_mul(cur, f)
                k += 1

        extend(0, d, {tuple([0] * n): Fraction(1)})
        basis = linalg.column_space_basis([v for v in prods if any(x for x in v)])
        pick = None
        for v in inv_vecs:
            if not linalg.in_span(basis, v):
                pick = v
                break
        if pick is None:
            raise AssertionError(f"no new invariant of degree {d}")
        chosen.append((poly.from_vector(pick, monos), d))
    # algebraic independence via the Jacobian criterion
    jac = [[poly.partial(f, j) for j in range(n)] for f, _ in chosen]
    if poly.det_poly(jac) == {}:
        raise AssertionError("invariant generators are dependent")
    return [f for f, _ in chosen]


def _verify_character_table(group):
    order = group.order
    table = group.character_table
    sizes = [len(cl) for cl in group.conjugacy_classes]
    k = len(table)
    assert k == len(group.conjugacy_classes), "square character table"
    assert sum(d * d for d in group.irrep_dims) == order
    for i in range(k):
        for j in range(k):
            s = 0
            for ci in range(k):
                s = s + sizes[ci] * table[i][ci] * conjugate(table[j][ci])
            want = order if i == j else 0
            assert s == want, f"row orthogonality {i},{j}"
    for ci in range(k):
        for cj in range(k):
            s = 0
            for i in range(k):
                s = s + table[i][ci] * conjugate(table[i][cj])
            want = Fraction(order, sizes[ci]) if ci == cj else 0
            assert s == want, f"column orthogonality {ci},{cj}"


def _verify_reflection(group, r):
    mat = group.elements[r.element_index]
    lhs = linalg.mat_vec(mat, r.alpha_check)
    assert lhs == [r.lam * x for x in r.alpha_check], "s(coroot) = lambda coroot"
    B = group.h_star_matrix(r.element_index)
    lam_inv = 1 / r.lam
    assert linalg.mat_vec(B, r.alpha) == [lam_inv * x for x in r.alpha], \
        "s(alpha) = lambda^-1 alpha"
    assert r.sqrt_lambda * r.sqrt_lambda == r.lam
    pairing = sum(a * b for a, b in zip(r.alpha_check, r.alpha))
    assert pairing == (2 if group.family == "real" else 1)


@lru_cache(maxsize=None)
def build_group(catalogue_id: str) -> ReflectionGroup:
    cat = _catalogue()
    if catalogue_id not in cat:
        raise UnknownGroup(f"unknown group {catalogue_id!r}; "
                           f"known: {', '.join(CATALOGUE_IDS)}")
    data = cat[catalogue_id]
    gens = data["generators"]
    conductor = 1
    for g in gens:
        for row in g:
            for x in row:
                if isinstance(x, CyclotomicScalar):
                    conductor = math.lcm(conductor, x.conductor)
    elements, words, index = _enumerate(gens, conductor)

    group = ReflectionGroup(
        catalogue_id=catalogue_id,
        n=data["rank"],
        family=data["family"],
        elements=elements,
        words=words,
        invariant_degrees=list(data["invariant_degrees"]),
        _index=index,
        _conductor=conductor,
        _mult_cache={},
        _inv_cache={},
        _hstar_cache={},
    )
    group.generator_indices = [index[_mat_key(g, conductor)] for g in gens]
    if catalogue_id.startswith("G") and data["family"] == "gm12":
        group._zm = int(catalogue_id[1:].split("_")[0])

    classes = _conjugacy_classes(group.mult, group.inverse_index,
                                 group.order, group.generator_indices)
    group.conjugacy_classes = classes
    class_of = {}
    for ci, cl in enumerate(classes):
        for i in cl:
            class_of[i] = ci
    group._class_of = class_of

    # reflections
    reflections = []
    for i, mat in enumerate(elements):
        if i == 0:
            continue
        found = _find_reflection_data(mat, data["family"])
        if found is None:
            continue
        alpha, alpha_check, lam = found
        r, t = _root_of_unity_data(lam)
        reflections.append(Reflection(i, alpha, alpha_check, lam, zeta(2 * r, t)))
    group.reflections = reflections
    group._refl_by_element = {r.element_index: r for r in reflections}
    for gi in group.generator_indices:
        assert gi in group._refl_by_element, "generators must be reflections"

    # class names
    names = _name_reflection_classes(data["namer"], group)
    group.class_names = [names.get(ci, f"cl{ci}") for ci in range(len(classes))]
    group.class_names[class_of[0]] = "e"
    for r in reflections:
        r.class_name = group.class_names[class_of[r.element_index]]

    # irreps from shipped generator images, expanded along BFS words
    irrep_labels = []
    irrep_dims = []
    irreps = {}
    for label, gen_images in data["irreps"]:
        dim = len(gen_images[0])
        mats = [None] * group.order
        mats[0] = linalg.identity(dim)
        for i in range(group.order):
            m = linalg.identity(dim)
            for gi in words[i]:
                m = linalg.mat_mul(m, gen_images[gi])
            mats[i] = m
        rep = WRepresentation(dim, mats)
        irrep_labels.append(label)
        irrep_dims.append(dim)
        irreps[label] = rep
    group.irrep_labels = irrep_labels
    group.irrep_dims = irrep_dims
    group.irreps = irreps

    for label in irrep_labels:
        if not check_representation(irreps[label], group):
            raise AssertionError(f"shipped irrep {label} is not a representation")

    group.character_table = [irreps[label].character(group)
                             for label in irrep_labels]
    _verify_character_table(group)

    # epsilon = det_h
    group._det = [poly.det(m) for m in elements]
    eps_char = [group._det[cl[0]] for cl in classes]
    group.eps_label = None
    for label, row in zip(irrep_labels, group.character_table):
        if row == eps_char:
            group.eps_label = label
            break
    assert group.eps_label is not None, "det_h missing from irreps"

    # sigma tensor eps lookup
    eps_tensor = {}
    for label, row in zip(irrep_labels, group.character_table):
        prod = [a * b for a, b in zip(row, eps_char)]
        for label2, row2 in zip(irrep_labels, group.character_table):
            if row2 == prod:
                eps_tensor[label] = label2
                break
        else:
            raise AssertionError(f"{label} tensor eps not in table")
    group._eps_tensor = eps_tensor

    for r in reflections:
        _verify_reflection(group, r)

    degrees_product = 1
    for d in group.invariant_degrees:
        degrees_product *= d
    assert degrees_product == group.order, "product of degrees equals |W|"
    group.invariant_generators = _invariant_generators(group)
    for f, d in zip(group.invariant_generators, group.invariant_degrees):
        assert poly.total_degree(f) == d
        for gi in group.generator_indices:
            B = group.h_star_matrix(gi)
            assert poly.substitute_linear(f, B) == f, "invariant generator fixed"

    return group


# --------------------------------------------------------------------------
# representation operations


def check_representation(rep, group) -> bool:
    """Homomorphism check: identity plus closure against all generators.

    rho(g) rho(s) = rho(g s) for every g and generator s implies the full
    homomorphism property by induction on word length.
    """
    mats = rep.matrices
    if mats[0] != linalg.identity(rep.dimension):
        return False
    for i in range(group.order):
        for gi in group.generator_indices:
            if linalg.mat_mul(mats[i], mats[gi]) != mats[group.mult(i, gi)]:
                return False
    return True


def decompose(rep, group, check=True):
    """Multiplicities of each irreducible; {label: positive int}."""
    if check and not check_representation(rep, group):
        raise NotARepresentation("homomorphism check failed")
    sizes = [len(cl) for cl in group.conjugacy_classes]
    chi = rep.character(group)
    out = {}
    total = 0
    for label, row in zip(group.irrep_labels, group.character_table):
        s = 0
        for ci, size in enumerate(sizes):
            s = s + size * chi[ci] * conjugate(row[ci])
        mult = s / group.order
        if isinstance(mult, CyclotomicScalar):
            if not mult.is_rational():
                raise NotARepresentation(f"multiplicity of {label} not rational")
            mult = mult.rational_value()
        mult = Fraction(mult)
        if mult.denominator != 1 or mult < 0:
            raise NotARepresentation(f"multiplicity of {label} is {mult}")
        if mult:
            out[label] = int(mult)
            total += int(mult) * group.dim_of(label)
    if total != rep.dimension:
        raise NotARepresentation("dimension mismatch in decomposition")
    return out


def isotypic_projector(rep, irrep_label, group, check=True):
    """Projector onto the irrep_label-isotypic component of rep."""
    if check and not check_representation(rep, group):
        raise NotARepresentation("homomorphism check failed")
    row = group.character_table[group.irrep_labels.index(irrep_label)]
    dim_sigma = group.dim_of(irrep_label)
    scale = Fraction(dim_sigma, group.order)
    out = linalg.zeros(rep.dimension, rep.dimension)
    for i in range(group.order):
        coeff = scale * conjugate(row[group.class_of(i)])
        if not coeff:
            continue
        m = rep.matrices[i]
        for r in range(rep.dimension):
            row_out = out[r]
            row_m = m[r]
            for c in range(rep.dimension):
                if row_m[c]:
                    row_out[c] = row_out[c] + coeff * row_m[c]
    return out


def diagonal_action(reps):
    """Tensor product of representations of the same group."""
    if not reps:
        raise ValueError("need at least one representation")
    order = len(reps[0].matrices)
    dim = 1
    for r in reps:
        dim *= r.dimension
    mats = []
    for i in range(order):
        m = [[1]]
        for r in reps:
            m = linalg.kron(m, r.matrices[i])
        mats.append(m)
    return WRepresentation(dim, mats)


# --------------------------------------------------------------------------
# standard representations


def h_representation(group):
    return WRepresentation(group.n, group.elements)


def h_star_representation(group):
    return WRepresentation(group.n, [group.h_star_matrix(i)
                                     for i in range(group.order)])


def wedge_h_representation(group, l):
    return WRepresentation(len(poly.wedge_basis_labels(group.n, l)),
                           [poly.wedge_matrix(m, l) for m in group.elements])


def regular_representation(group):
    mats = []
    for i in range(group.order):
        m = linalg.zeros(group.order, group.order)
        for j in range(group.order):
            m[group.mult(i, j)][j] = 1
        mats.append(m)
    return WRepresentation(group.order, mats)


# --------------------------------------------------------------------------
# export


def export_data(group):
    """Plain-data snapshot of the group for JSON emission."""
    from .scalars import scalar_str

    def mat_strs(m):
        return [[scalar_str(x) for x in row] for row in m]

    return {
        "catalogue_id": group.catalogue_id,
        "order": group.order,
        "rank": group.n,
        "elements": [mat_strs(m) for m in group.elements],
        "words": [list(w) for w in group.words],
        "conjugacy_classes": [
            {"name": group.class_names[ci], "elements": cl, "size": len(cl)}
            for ci, cl in enumerate(group.conjugacy_classes)],
        "irreps": [{"label": lab, "dim": dim}
                   for lab, dim in zip(group.irrep_labels, group.irrep_dims)],
        "character_table": [[scalar_str(x) for x in row]
                            for row in group.character_table],
        "reflections": [
            {"element_index": r.element_index,
             "class": r.class_name,
             "alpha": [scalar_str(x) for x in r.alpha],
             "alpha_check": [scalar_str(x) for x in r.alpha_check],
             "lambda": scalar_str(r.lam)}
            for r in group.reflections],
        "invariant_degrees": group.invariant_degrees,
        "epsilon_label": group.eps_label,
    }
