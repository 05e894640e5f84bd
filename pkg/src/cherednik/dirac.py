"""Dirac element machinery for graded Hecke algebras.

The Dirac element D = sum_i v_i (x) v^i lives in H (x) C(V); its square
decomposes into a Casimir part from H and a group-algebra Casimir.  This
module computes the e_w coefficients, the element D itself, the symbolic
square identity, Casimir scalars, the derivation d and the bounded-degree
zeta projection.
"""

from fractions import Fraction

from . import linalg
from .clifford import (
    CliffordAlgebra,
    chevalley_lift,
    element_to_data,
    pin_tau,
    pin_tau_inverse,
    polarized_algebra,
)
from .pbw import AlgebraElement, _c_map, _inv_scalar
from .scalars import scalar_str


class DegenerateWitness(ArithmeticError):
    """No usable witness vector x with x - w(x) != 0 was found."""


class UnknownIrrep(KeyError):
    pass


class NotInKernel(ValueError):
    """The element does not lie in ker d."""


class SolverOverflow(RuntimeError):
    """The bounded-degree linear system exceeds the configured size cap."""


def compute_e_w(family, w):
    """The scalar e_w attached to w in W(a) \\ {1}.

    Determined by the identity, for every x in V,

        sum_i (a_w(x, v_i) w(v^i) + a_w(x, v^i) v_i) = e_w (x - w(x)).

    The solve avoids the square-root normalization of the Clifford lift;
    every basis witness is checked and must give the same scalar.
    """
    aw = family.forms.get(w)
    if aw is None:
        return Fraction(0)
    nv = family.nv
    ginv = family.gram_inverse()
    vm = family.v_matrix(w)
    vg = linalg.mat_mul(vm, ginv)
    ag = linalg.mat_mul(aw, ginv)
    found = None
    for j in range(nv):
        dvec = [(1 if r == j else 0) - vm[r][j] for r in range(nv)]
        if all(x == 0 for x in dvec):
            continue
        lhs = linalg.mat_vec(vg, aw[j])
        lhs = [lhs[i] + ag[j][i] for i in range(nv)]
        piv = next(r for r in range(nv) if dvec[r] != 0)
        if isinstance(dvec[piv], int):
            e = lhs[piv] * Fraction(1, dvec[piv])
        elif isinstance(dvec[piv], Fraction):
            e = lhs[piv] / dvec[piv]
        else:
            e = lhs[piv] * dvec[piv].inverse()
        for r in range(nv):
            if lhs[r] != e * dvec[r]:
                raise ValueError("no scalar solves the e_w identity for "
                                 "w=%d; the family is not PBW" % w)
        if found is not None and found != e:
            raise ValueError("witness-dependent e_w for w=%d" % w)
        found = e
    if found is None:
        raise DegenerateWitness("every basis vector is fixed by w=%d" % w)
    return found


# --------------------------------------------------------------------------
# H (x) C(V)


def clifford_algebra_of(family) -> CliffordAlgebra:
    if family.space == "polarized":
        return polarized_algebra(family.group.n)
    return CliffordAlgebra(family.vgram,
                           [f"v{i + 1}" for i in range(family.nv)])


class TensorElement:
    """An element of H (x) C(V) in bi-normal form.

    terms maps (PBW key, Clifford monomial) to a scalar; both factors are
    kept canonical, so equality is term-map equality.  Multiplication is
    componentwise (the tensor product is not super here; the parity twist
    enters only through the eps automorphism and the derivation d).
    """

    __slots__ = ("family", "algebra", "terms")
    __hash__ = None

    def __init__(self, family, algebra, terms):
        self.family = family
        self.algebra = algebra
        self.terms = {k: c for k, c in terms.items() if c}

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.family is not other.family:
            raise ValueError("tensor elements from different families")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorElement(self.family, self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.family, self.algebra,
                             {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return TensorElement(self.family, self.algebra,
                                 {k: c * other for k, c in self.terms.items()})
        self._check(other)
        fam, alg = self.family, self.algebra
        out = {}
        for (hk1, cm1), c1 in self.terms.items():
            for (hk2, cm2), c2 in other.terms.items():
                hprod = fam.element({hk1: 1}) * fam.element({hk2: 1})
                cprod = alg._mul_terms({cm1: Fraction(1)}, {cm2: Fraction(1)})
                cc = c1 * c2
                for hk, hc in hprod.terms.items():
                    for cm, cf in cprod.items():
                        key = (hk, cm)
                        s = out.get(key, 0) + cc * hc * cf
                        if s:
                            out[key] = s
                        else:
                            out.pop(key, None)
        return TensorElement(fam, alg, out)

    def __rmul__(self, c):
        return TensorElement(self.family, self.algebra,
                             {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        return (self - other).terms == {}

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def degree(self):
        """Filtration degree: V-degree on the H side plus Clifford degree."""
        if not self.terms:
            return -1
        return max(sum(hk[0]) + sum(hk[2]) + len(cm)
                   for (hk, cm) in self.terms)

    def clifford_parities(self):
        return {len(cm) % 2 for (_, cm) in self.terms}

    def eps(self):
        """The automorphism that negates odd Clifford parts and fixes H."""
        return TensorElement(self.family, self.algebra,
                             {k: (-c if len(k[1]) % 2 else c)
                              for k, c in self.terms.items()})

    def to_data(self):
        labels = self.algebra.labels
        items = []
        for (hk, cm) in sorted(self.terms,
                               key=lambda k: (k[0][1], k[0][0], k[0][2],
                                              len(k[1]), k[1])):
            items.append({"x": list(hk[0]), "w": hk[1], "y": list(hk[2]),
                          "clifford": [labels[g] for g in cm],
                          "coeff": scalar_str(self.terms[(hk, cm)])})
        return items

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for item in self.to_data():
            h = AlgebraElement(self.family,
                               {(tuple(item["x"]), item["w"],
                                 tuple(item["y"])): 1})
            cpart = "*".join(item["clifford"]) or "1"
            bits.append(f"({item['coeff']})*[{h}](x){cpart}")
        return " + ".join(bits)


def tensor(family, helem, celem, algebra=None):
    """Outer product of an H element and a Clifford element."""
    alg = algebra if algebra is not None else clifford_algebra_of(family)
    out = {}
    for hk, hc in helem.terms.items():
        for cm, cc in celem.terms.items():
            s = out.get((hk, cm), 0) + hc * cc
            if s:
                out[(hk, cm)] = s
    return TensorElement(family, alg, out)


def dirac_element(family, basis=None, algebra=None):
    """D = sum_i v_i (x) v^i, duals against the family's V form.

    basis, when given, lists basis vectors of V as columns in generator
    slot coordinates; the result does not depend on the choice.
    """
    alg = algebra if algebra is not None else clifford_algebra_of(family)
    nv = family.nv
    if basis is None:
        gram = family.vgram
        vecs = [family.v_gen(i) for i in range(nv)]
        cols = None
    else:
        pt = linalg.transpose(basis)
        gram = linalg.mat_mul(pt, linalg.mat_mul(family.vgram, basis))
        vecs = [family.vector_element([basis[r][i] for r in range(nv)])
                for i in range(nv)]
        cols = basis
    ginv = linalg.inverse(gram)
    out = None
    for i in range(nv):
        if cols is None:
            dual = alg.vector(ginv[i])
        else:
            coords = [sum(cols[r][j] * ginv[i][j] for j in range(nv))
                      for r in range(nv)]
            dual = alg.vector(coords)
        term = tensor(family, vecs[i], dual, alg)
        out = term if out is None else out + term
    return out


def dirac_split(family, algebra=None):
    """(D_x, D_y) with D = D_x + D_y for polarized families."""
    if family.space != "polarized":
        raise ValueError("the x/y split needs a polarized family")
    alg = algebra if algebra is not None else clifford_algebra_of(family)
    n = family.group.n
    dx = dy = None
    for i in range(n):
        tx = tensor(family, family.x_gen(i), alg.gen(2 * i + 1), alg)
        ty = tensor(family, family.y_gen(i), alg.gen(2 * i), alg)
        dx = tx if dx is None else dx + tx
        dy = ty if dy is None else dy + ty
    return dx, dy


def delta_element(family, w, algebra=None):
    """Delta(w) = w (x) tau_w (polarized families)."""
    if family.space != "polarized":
        raise ValueError("pin elements are built on the polarized space")
    alg = algebra if algebra is not None else clifford_algebra_of(family)
    return tensor(family, family.group_element(w),
                  pin_tau(w, family.group, alg), alg)


def delta_element_inverse(family, w, algebra=None):
    if family.space != "polarized":
        raise ValueError("pin elements are built on the polarized space")
    alg = algebra if algebra is not None else clifford_algebra_of(family)
    return tensor(family,
                  family.group_element(family.group.inverse_index(w)),
                  pin_tau_inverse(w, family.group, alg), alg)


def omega_tilde(family, algebra=None):
    """Omega_H (x) 1 - 1 (x) kappa_1/2; commutes with D."""
    from .pbw import casimir_omega
    alg = algebra if algebra is not None else clifford_algebra_of(family)
    out = tensor(family, casimir_omega(family), alg.one(), alg)
    a1 = family.forms.get(0)
    if a1 is not None:
        k1 = chevalley_lift(a1, alg)
        out = out - tensor(family, family.one(),
                           Fraction(1, 2) * k1, alg)
    return out


def derivation_d(a, family=None):
    """d(a) = D a - eps(a) D."""
    fam = a.family if family is None else family
    d = dirac_element(fam, algebra=a.algebra)
    return d * a - a.eps() * d


def verify_dirac_square(family):
    """Check D^2 = -Omega_H (x) 1 + 1 (x) kappa_1/2 + sum_w w (x)
    (kappa_w/2 - e_w) by full symbolic expansion of both sides.

    Returns a JSON-ready report echoing the summands.
    """
    from .pbw import casimir_omega
    alg = clifford_algebra_of(family)
    d = dirac_element(family, algebra=alg)
    d2 = d * d
    omega = casimir_omega(family)
    rhs = tensor(family, (-1) * omega, alg.one(), alg)
    a1 = family.forms.get(0)
    kappa1 = chevalley_lift(a1, alg) if a1 is not None else alg.zero()
    if a1 is not None:
        rhs = rhs + tensor(family, family.one(),
                           Fraction(1, 2) * kappa1, alg)
    omega_w = []
    for w in family.support():
        if w == 0:
            continue
        kw = chevalley_lift(family.forms[w], alg)
        ew = compute_e_w(family, w)
        cw = Fraction(1, 2) * kw - alg.scalar(ew)
        rhs = rhs + tensor(family, family.group_element(w), cw, alg)
        omega_w.append({"w": w,
                        "class": family.group.class_name_of_element(w),
                        "clifford": element_to_data(cw)})
    params = family.params or {}
    cmap = params.get("c", params.get("k"))
    report = {
        "group": family.group.catalogue_id,
        "preset": family.preset_tag,
        "t": scalar_str(params["t"]) if "t" in params else None,
        "c": ({name: scalar_str(v) for name, v in sorted(cmap.items())}
              if cmap is not None else None),
        "equality": d2 == rhs,
        "omega_H": omega.to_data(),
        "omega_W": omega_w,
        "kappa1": element_to_data(kappa1),
    }
    return report


# --------------------------------------------------------------------------
# class functions and Casimir scalars


class GroupAlgebraClassFunction:
    """A central group-algebra element sum_w f(class of w) . w."""

    __hash__ = None

    def __init__(self, group, coefficients):
        self.group = group
        self.coefficients = {name: c for name, c in coefficients.items()
                             if c}
        known = set(group.class_names)
        for name in self.coefficients:
            if name not in known:
                raise KeyError(f"unknown conjugacy class {name!r}")

    @classmethod
    def from_element_map(cls, group, emap):
        """Validate class-constancy of a per-element coefficient map."""
        coeffs = {}
        for w, c in emap.items():
            name = group.class_name_of_element(w)
            if name in coeffs:
                if coeffs[name] != c:
                    raise ValueError(
                        f"coefficients not constant on class {name!r}")
            else:
                coeffs[name] = c
        for name, c in coeffs.items():
            if not c:
                continue
            ci = group.class_names.index(name)
            for w in group.conjugacy_classes[ci]:
                if emap.get(w, 0) != c:
                    raise ValueError(
                        f"coefficients not constant on class {name!r}")
        return cls(group, coeffs)

    def coefficient(self, w):
        return self.coefficients.get(self.group.class_name_of_element(w), 0)

    def _binop(self, other, f):
        names = set(self.coefficients) | set(other.coefficients)
        return GroupAlgebraClassFunction(
            self.group,
            {n: f(self.coefficients.get(n, 0), other.coefficients.get(n, 0))
             for n in names})

    def __add__(self, other):
        self._same(other)
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        self._same(other)
        return self._binop(other, lambda a, b: a - b)

    def _same(self, other):
        if self.group is not other.group:
            raise ValueError("class functions over different groups")

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraClassFunction):
            return GroupAlgebraClassFunction(
                self.group,
                {n: c * other for n, c in self.coefficients.items()})
        self._same(other)
        g = self.group
        emap = {}
        for w in range(g.order):
            cw = self.coefficient(w)
            if not cw:
                continue
            winv = g.inverse_index(w)
            for u in range(g.order):
                cu = other.coefficient(g.mult(winv, u))
                if cu:
                    s = emap.get(u, 0) + cw * cu
                    if s:
                        emap[u] = s
                    else:
                        emap.pop(u, None)
        return GroupAlgebraClassFunction.from_element_map(g, emap)

    def __rmul__(self, c):
        return GroupAlgebraClassFunction(
            self.group, {n: c * v for n, v in self.coefficients.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraClassFunction):
            return NotImplemented
        self._same(other)
        names = set(self.coefficients) | set(other.coefficients)
        return all(self.coefficients.get(n, 0) == other.coefficients.get(n, 0)
                   for n in names)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def act_on(self, sigma):
        """The scalar by which this central element acts in irrep sigma."""
        g = self.group
        try:
            chi = g.character_table[g.irrep_labels.index(sigma)]
        except ValueError:
            raise UnknownIrrep(sigma) from None
        dim = chi[0]
        total = 0
        for ci, cl in enumerate(g.conjugacy_classes):
            c = self.coefficients.get(g.class_names[ci], 0)
            if c:
                total = total + c * chi[ci] * len(cl)
        return total * Fraction(1, dim)

    def to_data(self):
        return {name: scalar_str(c)
                for name, c in sorted(self.coefficients.items())}

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"({scalar_str(c)})*[{n}]"
                          for n, c in sorted(self.coefficients.items()))


def group_algebra_casimir(family):
    """Omega_{W,c} = sum over reflections of 2 c_s/(1 - lambda_s) . s for
    Cherednik presets, as a class function; lambda_s is the nontrivial
    eigenvalue of s on the reflection line in h.  This is the image of the
    lifted Casimir under the kernel decomposition."""
    if family.preset_tag != "cherednik":
        raise ValueError("the closed-form group Casimir needs the "
                         "rational Cherednik preset")
    g = family.group
    c_map = family.params["c"]
    emap = {}
    for r in g.reflections:
        coeff = 2 * c_map[r.class_name] * _inv_scalar(1 - r.lam)
        emap[r.element_index] = coeff
    return GroupAlgebraClassFunction.from_element_map(g, emap)


def casimir_scalar(sigma, c, group):
    """N_c(sigma): the scalar of the group-algebra Casimir on irrep sigma,
    (1/dim) sum over reflections of 2 c_s/(1 - lambda_s) chi_sigma(s)."""
    try:
        chi = group.character_table[group.irrep_labels.index(sigma)]
    except ValueError:
        raise UnknownIrrep(sigma) from None
    c_map = _c_map(group, c)
    dim = chi[0]
    total = 0
    for r in group.reflections:
        coeff = 2 * c_map[r.class_name] * _inv_scalar(1 - r.lam)
        total = total + coeff * chi[group.class_of(r.element_index)]
    return total * Fraction(1, dim)


# --------------------------------------------------------------------------
# bounded-degree kernel decomposition


def _coords(elems, index=None):
    """Exact coordinate matrix of tensor elements; columns are elements."""
    if index is None:
        index = {}
        for e in elems:
            for k in e.terms:
                if k not in index:
                    index[k] = len(index)
    rows = len(index)
    mat = [[Fraction(0)] * len(elems) for _ in range(rows)]
    for j, e in enumerate(elems):
        for k, c in e.terms.items():
            mat[index[k]][j] = c
    return mat, index


def _diagonal_average(elem, deltas, deltas_inv):
    out = None
    for dw, dwi in zip(deltas, deltas_inv):
        term = dw * elem * dwi
        out = term if out is None else out + term
    return out


def decompose_kernel_element(z, family, degree_cap=4, column_limit=8000,
                             candidate_filter=None):
    """Split z in ker d as Delta(s) + d(b) at bounded filtration degree.

    z must be diagonally W-invariant, of even Clifford parity and degree
    at most degree_cap; for t != 0 Cherednik presets it must also commute
    with the lifted Casimir (membership in the subalgebra the kernel
    theorem is stated on).  b is searched over the diagonally invariant
    odd subspace of degree <= degree_cap + 1; candidate_filter, when
    given, restricts the raw search keys (hkey, clifford mono) before
    averaging, which can only shrink the solution space.  Returns (s, b)
    with s a class function; raises NotInKernel when d(z) != 0.
    """
    alg = z.algebra
    g = family.group
    if z.degree() > degree_cap:
        raise ValueError("element degree exceeds degree_cap")
    if z.clifford_parities() - {0}:
        raise ValueError("kernel decomposition needs even Clifford parity")
    deltas = [delta_element(family, w, alg) for w in range(g.order)]
    deltas_inv = [delta_element_inverse(family, w, alg)
                  for w in range(g.order)]
    for gi in g.generator_indices:
        if deltas[gi] * z != z * deltas[gi]:
            raise ValueError("element is not diagonally W-invariant")
    t = (family.params or {}).get("t")
    if family.preset_tag == "cherednik" and t:
        omt = omega_tilde(family, alg)
        if omt * z != z * omt:
            raise ValueError("element does not commute with the lifted "
                             "Casimir")
    if derivation_d(z, family):
        raise NotInKernel("d(z) != 0")

    n = g.n
    cliff_monos = [m for m in _subsets(2 * n) if len(m) % 2 == 1]
    hkeys = []
    cap = degree_cap + 1
    for xa in _exponents(n, cap):
        for yb in _exponents(n, cap - sum(xa)):
            for w in range(g.order):
                hkeys.append((tuple(xa), w, tuple(yb)))
    raw = [(hk, cm) for hk in hkeys for cm in cliff_monos
           if sum(hk[0]) + sum(hk[2]) + len(cm) <= cap]
    if candidate_filter is not None:
        raw = [key for key in raw if candidate_filter(key)]
    if len(raw) > column_limit:
        raise SolverOverflow(f"{len(raw)} candidate terms exceed the "
                             f"configured limit {column_limit}")

    seen = {}
    invariant_b = []
    for key in raw:
        e = TensorElement(family, alg, {key: Fraction(1)})
        p = _diagonal_average(e, deltas, deltas_inv)
        if not p:
            continue
        mark = min(p.terms)
        # cheap prefilter: projections sharing the minimal term are
        # usually equal up to scale; full independence is settled below
        if mark in seen and seen[mark] == p:
            continue
        seen[mark] = p
        invariant_b.append(p)
    d_cols = [derivation_d(b, family) for b in invariant_b]
    keep = [i for i, col in enumerate(d_cols) if col]
    invariant_b = [invariant_b[i] for i in keep]
    d_cols = [d_cols[i] for i in keep]

    cols = deltas + d_cols
    mat, index = _coords(cols + [z])
    rank_delta = linalg.rank(_coords(deltas)[0])
    rank_d = linalg.rank(_coords(d_cols)[0]) if d_cols else 0
    ncols = len(cols)
    reduced, pivots = linalg.rref(mat)
    if any(p == ncols for p in pivots):
        raise ValueError("no decomposition at this degree cap; raise "
                         "degree_cap")
    rank_both = sum(1 for p in pivots if p < ncols)
    if rank_both != rank_delta + rank_d:
        raise ValueError("group-algebra block meets the derivation image; "
                         "the decomposition would not be unique")
    # free coordinates stay zero, so each pivot reads off directly
    sol = [0] * ncols
    for row, p in zip(reduced, pivots):
        sol[p] = row[ncols]
    emap = {w: sol[w] for w in range(g.order) if sol[w]}
    s = GroupAlgebraClassFunction.from_element_map(g, emap)
    b = None
    for j, bc in enumerate(invariant_b):
        c = sol[g.order + j]
        if c:
            term = c * bc
            b = term if b is None else b + term
    if b is None:
        b = TensorElement(family, alg, {})
    return s, b


def zeta(z, family, degree_cap=4, column_limit=8000):
    """The class-function component of the kernel decomposition."""
    s, _ = decompose_kernel_element(z, family, degree_cap, column_limit)
    return s


def _subsets(m):
    out = []
    for mask in range(2 ** m):
        out.append(tuple(i for i in range(m) if mask & (1 << i)))
    out.sort(key=lambda t: (len(t), t))
    return out


def _exponents(n, cap):
    if n == 0:
        yield ()
        return
    for first in range(cap + 1):
        for rest in _exponents(n - 1, cap - first):
            yield (first,) + rest
