"""Graded modules over the rational Cherednik presets and their Dirac
cohomology.

Standard modules live on S(h*) (x) V_sigma with the polynomial grading
and are built lazily, so the declared window K only bounds what gets
reported.  Baby Verma modules (t = 0) live on the coinvariant algebra
(x) V_sigma and are honestly finite dimensional.  The Dirac operator
acts on cells (polynomial degree k, exterior degree l) of module (x)
wedge(h); every matrix is exact.
"""

import math
from fractions import Fraction

from . import linalg, poly
from .clifford import pin_tau, polarized_algebra, spin_action, spin_basis
from .dirac import UnknownIrrep, casimir_scalar
from .groups import UnknownGroup
from .pbw import casimir_omega, cherednik_family
from .scalars import CyclotomicScalar, NotRational


class WindowExceedsCap(ValueError):
    """The zero-scalar window of the Dirac square needs a larger K."""

    def __init__(self, minimal):
        super().__init__(f"kernel window needs K >= {minimal}")
        self.minimal = minimal


class UnsupportedField(ValueError):
    """Contravariant forms need rational module data."""


def _zero_exp(n):
    return (0,) * n


_MONO_INDEX = {}


def _mono_index(n, k):
    got = _MONO_INDEX.get((n, k))
    if got is None:
        got = {m: i for i, m in enumerate(poly.monomials(n, k))}
        _MONO_INDEX[(n, k)] = got
    return got


def _as_fraction(x):
    if isinstance(x, CyclotomicScalar):
        try:
            return x.rational_value()
        except NotRational:
            raise UnsupportedField("irrational scalar in rational context")
    return Fraction(x)


def _as_int(x):
    if isinstance(x, CyclotomicScalar):
        x = x.rational_value()
    f = Fraction(x)
    if f.denominator != 1:
        raise AssertionError(f"expected an integer, got {f}")
    return int(f)


def _rational_or_none(x):
    if isinstance(x, CyclotomicScalar):
        if not x.is_rational():
            return None
        return x.rational_value()
    return Fraction(x)


def h_weight(sigma, c, group):
    """The Casimir weight entering the grading operator: Omega_H acts on
    the degree-k piece of a standard module by t(2k + n) - h_weight, and
    on a baby Verma module by -h_weight.  Equal to N_c(sigma) for real
    reflection groups."""
    return -casimir_scalar(group.tensor_with_eps(sigma), c, group)


def d_squared_scalar(group, sigma, mu, k, l, c, t=1):
    """Scalar of the Dirac square on the mu-isotypic of the (k, l) cell,
    mu taken in the natural diagonal W-action on S^k (x) V_sigma (x)
    wedge^l(h)."""
    n = group.n
    base = h_weight(sigma, c, group) + casimir_scalar(mu, c, group)
    return base - 2 * t * (k + n - l)


# --------------------------------------------------------------------------
# graded modules


class GradedModule:
    """A graded module over a Cherednik preset with exact action tables.

    kind "standard": the full polynomial module over the t=1 preset.
    kind "baby": the baby Verma module over the t=0 preset, carried on a
    monomial section of the coinvariant algebra.
    kind "simple": x and y act by zero on V_sigma; only built when the
    commutators [y_i, x_j] visibly kill sigma.
    """

    def __init__(self, kind, family, sigma, K):
        self.kind = kind
        self.family = family
        self.group = family.group
        self.n = family.group.n
        self.sigma = sigma
        try:
            self.rep = family.group.irrep(sigma)
        except UnknownGroup:
            raise UnknownIrrep(sigma) from None
        self.dim_sigma = self.rep.dimension
        self.K = K
        self._sel = {}
        self._red = {}
        self._blocks = {}
        if kind == "baby":
            self._coinvariant_sections()
        elif kind == "simple":
            self._sel[0] = [0]

    # -- graded pieces

    def selected(self, k):
        """Positions of the kept degree-k monomials."""
        if k < 0:
            return []
        if self.kind == "standard":
            got = self._sel.get(k)
            if got is None:
                got = list(range(len(poly.monomials(self.n, k))))
                self._sel[k] = got
            return got
        return self._sel.get(k, [])

    def piece_dim(self, k):
        return len(self.selected(k)) * self.dim_sigma

    def degrees(self):
        if self.kind == "standard":
            return list(range(self.K + 1))
        return sorted(k for k, s in self._sel.items() if s)

    def total_dim(self):
        return sum(self.piece_dim(k) for k in self.degrees())

    def basis_labels(self, k):
        monos = poly.monomials(self.n, k)
        out = []
        for p in self.selected(k):
            for j in range(self.dim_sigma):
                out.append((monos[p], j))
        return out

    def _coinvariant_sections(self):
        g = self.group
        degrees = g.invariant_degrees
        gens = list(zip(g.invariant_generators, degrees))
        top = sum(d - 1 for d in degrees)
        total = 0
        for k in range(top + 1):
            monos = poly.monomials(self.n, k)
            rows = []
            for f, d in gens:
                if d > k:
                    continue
                for m in poly.monomials(self.n, k - d):
                    prod = poly.p_mul({m: Fraction(1)}, f)
                    rows.append(poly.to_vector(prod, monos))
            if rows:
                red, pivots = linalg.rref(rows)
                red = red[:len(pivots)]
            else:
                red, pivots = [], []
            self._red[k] = (red, list(pivots))
            taken = set(pivots)
            self._sel[k] = [i for i in range(len(monos)) if i not in taken]
            total += len(self._sel[k])
        if total != g.order:
            raise AssertionError("coinvariant dimension mismatch")

    def _reduce(self, k, vec):
        """Normal form of a degree-k coefficient vector on the kept
        monomials."""
        sel = self.selected(k)
        if not sel:
            return []
        if self.kind == "baby":
            red, pivots = self._red[k]
            vec = list(vec)
            for row, p in zip(red, pivots):
                cv = vec[p]
                if cv:
                    for j, rv in enumerate(row):
                        if rv:
                            vec[j] = vec[j] - cv * rv
        return [vec[i] for i in sel]

    # -- actions

    def action_blocks(self, helem, k):
        """Matrices of a PBW element on the degree-k piece, as a map
        {target degree: matrix}.  The element is straightened; y-tails
        act by zero on the inducing line."""
        n = self.n
        sel = self.selected(k)
        if not sel:
            return {}
        monos = poly.monomials(n, k)
        dim = self.dim_sigma
        cols = len(sel) * dim
        out = {}
        for p, mpos in enumerate(sel):
            key = (monos[mpos], 0, _zero_exp(n))
            prod = helem * self.family.element({key: Fraction(1)})
            for (a, w, b), coeff in prod.terms.items():
                if any(b):
                    continue
                k2 = sum(a)
                tsel = self.selected(k2)
                if not tsel:
                    continue
                vec = [0] * len(_mono_index(n, k2))
                vec[_mono_index(n, k2)[a]] = coeff
                coords = self._reduce(k2, vec)
                smat = self.rep.matrices[w]
                mat = out.get(k2)
                if mat is None:
                    mat = linalg.zeros(len(tsel) * dim, cols)
                    out[k2] = mat
                for rp, cv in enumerate(coords):
                    if not cv:
                        continue
                    for i in range(dim):
                        for j in range(dim):
                            sv = smat[i][j]
                            if sv:
                                mat[rp * dim + i][p * dim + j] = (
                                    mat[rp * dim + i][p * dim + j] + cv * sv)
        return out

    def _gen_block(self, cache_key, helem, k, expect):
        got = self._blocks.get((cache_key, k))
        if got is None:
            blocks = self.action_blocks(helem, k)
            bad = [k2 for k2 in blocks if k2 != expect]
            if bad:
                raise AssertionError(f"degree drift {bad} for {cache_key}")
            got = blocks.get(expect)
            if got is None and self.piece_dim(expect) and self.piece_dim(k):
                got = linalg.zeros(self.piece_dim(expect), self.piece_dim(k))
            self._blocks[(cache_key, k)] = got
        return got

    def x_block(self, i, k):
        """x_i: degree k -> k + 1, or None when either piece is empty."""
        if not self.selected(k) or not self.selected(k + 1):
            return None
        return self._gen_block(("x", i), self.family.x_gen(i), k, k + 1)

    def y_block(self, i, k):
        if k == 0 or not self.selected(k) or not self.selected(k - 1):
            return None
        return self._gen_block(("y", i), self.family.y_gen(i), k, k - 1)

    def w_block(self, w, k):
        if not self.selected(k):
            return None
        return self._gen_block(("w", w), self.family.group_element(w), k, k)


def standard_module(group, sigma, c, K=4):
    fam = cherednik_family(group, 1, c, check=False)
    return GradedModule("standard", fam, sigma, K)


def baby_verma(group, sigma, c):
    fam = cherednik_family(group, 0, c, check=False)
    return GradedModule("baby", fam, sigma, 0)


def one_dimensional_quotient(group, sigma, c):
    """The simple quotient with x = y = 0, available exactly when every
    commutator [y_i, x_j] acts by zero on the one-dimensional sigma."""
    fam = cherednik_family(group, 0, c, check=False)
    try:
        rep = group.irrep(sigma)
    except UnknownGroup:
        raise UnknownIrrep(sigma) from None
    if rep.dimension != 1:
        raise ValueError("the visible quotient needs dim(sigma) = 1")
    n = group.n
    for i in range(n):
        for j in range(n):
            comm = (fam.y_gen(i) * fam.x_gen(j)
                    - fam.x_gen(j) * fam.y_gen(i))
            total = 0
            for (a, w, b), coeff in comm.terms.items():
                if any(a) or any(b):
                    raise AssertionError("commutator outside the group part")
                total = total + coeff * rep.matrices[w][0][0]
            if total != 0:
                raise ValueError(
                    f"[y_{i + 1}, x_{j + 1}] does not kill {sigma}")
    return GradedModule("simple", fam, sigma, 0)


# --------------------------------------------------------------------------
# the Dirac operator on module (x) spin cells


class DiracOperatorMatrix:
    """Cell blocks of the Dirac operator.

    A cell is a pair (k, l); the operator splits into an up part
    (k, l) -> (k + 1, l + 1) built from the x-action and wedge products
    and a down part (k, l) -> (k - 1, l - 1) built from the y-action and
    contractions.  Cell bases are module basis (x) exterior basis, in
    module-major order.
    """

    def __init__(self, module):
        self.module = module
        self.n = module.n
        self._alg = polarized_algebra(self.n)
        self._spin = [spin_action(self._alg.gen(g), self._alg)
                      for g in range(2 * self.n)]
        self._offsets = {}
        off = 0
        for l in range(self.n + 1):
            self._offsets[l] = off
            off += math.comb(self.n, l)
        self._blocks = {}
        self._tau = {}

    def wedge_dim(self, l):
        if l < 0 or l > self.n:
            return 0
        return math.comb(self.n, l)

    def cell_dim(self, k, l):
        return self.module.piece_dim(k) * self.wedge_dim(l)

    def cells(self, kmax=None):
        if kmax is None:
            kmax = self.module.K if self.module.kind == "standard" else None
        out = []
        for k in self.module.degrees():
            if kmax is not None and k > kmax:
                continue
            for l in range(self.n + 1):
                out.append((k, l))
        return out

    def _spin_slice(self, g, lrow, lcol):
        mat = self._spin[g]
        ro, co = self._offsets[lrow], self._offsets[lcol]
        return [[mat[ro + a][co + b] for b in range(self.wedge_dim(lcol))]
                for a in range(self.wedge_dim(lrow))]

    def block(self, k, l):
        got = self._blocks.get((k, l))
        if got is None:
            got = {"up": self._assemble(k, l, 1),
                   "down": self._assemble(k, l, -1)}
            self._blocks[(k, l)] = got
        return got

    def _assemble(self, k, l, direction):
        m = self.module
        k2, l2 = k + direction, l + direction
        if l2 < 0 or l2 > self.n or k2 < 0:
            return None
        rows = m.piece_dim(k2) * self.wedge_dim(l2)
        cols = m.piece_dim(k) * self.wedge_dim(l)
        if rows == 0 or cols == 0:
            return None
        out = linalg.zeros(rows, cols)
        for i in range(self.n):
            if direction > 0:
                mb = m.x_block(i, k)
                sg = 2 * i + 1
            else:
                mb = m.y_block(i, k)
                sg = 2 * i
            if mb is None:
                continue
            out = linalg.mat_add(out, linalg.kron(mb, self._spin_slice(sg, l2, l)))
        return out

    def apply(self, comp):
        """Apply the operator to {(k, l): coefficient vector}; exact."""
        out = {}
        for (k, l), vec in comp.items():
            blk = self.block(k, l)
            for direction, mat in ((1, blk["up"]), (-1, blk["down"])):
                if mat is None:
                    continue
                img = linalg.mat_vec(mat, vec)
                if not any(img):
                    continue
                tgt = (k + direction, l + direction)
                have = out.get(tgt)
                if have is None:
                    out[tgt] = img
                else:
                    out[tgt] = [u + v for u, v in zip(have, img)]
        return {cell: v for cell, v in out.items() if any(v)}

    def d_squared_on_cell(self, k, l):
        dim = self.cell_dim(k, l)
        total = linalg.zeros(dim, dim)
        blk = self.block(k, l)
        if blk["up"] is not None:
            back = self.block(k + 1, l + 1)["down"]
            total = linalg.mat_add(total, linalg.mat_mul(back, blk["up"]))
        if blk["down"] is not None:
            back = self.block(k - 1, l - 1)["up"]
            total = linalg.mat_add(total, linalg.mat_mul(back, blk["down"]))
        return total

    def w_cell(self, w, k, l):
        """Diagonal action of a group element on the (k, l) cell, spin
        side through the pin lift."""
        tau = self._tau.get(w)
        if tau is None:
            tau = spin_action(
                pin_tau(w, self.module.group, self._alg), self._alg)
            self._tau[w] = tau
        off = self._offsets[l]
        cnt = self.wedge_dim(l)
        ss = [[tau[off + a][off + b] for b in range(cnt)] for a in range(cnt)]
        return linalg.kron(self.module.w_block(w, k), ss)


def dirac_operator(module):
    return DiracOperatorMatrix(module)


# --------------------------------------------------------------------------
# characters and isotypic projections


def _class_reps(group):
    return [cls[0] for cls in group.conjugacy_classes]


_SYM_CHAR = {}


def _sym_char(group, k):
    """Character of S^k(h*) per conjugacy class."""
    key = (group.catalogue_id, k)
    got = _SYM_CHAR.get(key)
    if got is None:
        got = []
        for rep in _class_reps(group):
            mat = poly.action_matrix_on_degree(
                group.h_star_matrix(rep), group.n, k)
            got.append(sum(mat[i][i] for i in range(len(mat))))
        _SYM_CHAR[key] = got
    return got


_WEDGE_CHAR = {}


def _wedge_char(group, l):
    key = (group.catalogue_id, l)
    got = _WEDGE_CHAR.get(key)
    if got is None:
        got = []
        for rep in _class_reps(group):
            mat = poly.wedge_matrix(group.elements[rep], l)
            got.append(sum(mat[i][i] for i in range(len(mat))))
        _WEDGE_CHAR[key] = got
    return got


def cell_multiplicity(group, sigma, k, l, mu):
    """Multiplicity of mu in S^k(h*) (x) V_sigma (x) wedge^l(h) under the
    natural diagonal action, by characters."""
    labels = group.irrep_labels
    if mu not in labels:
        raise UnknownIrrep(mu)
    chi_sigma = group.irrep(sigma).character(group)
    chi_mu = group.character_table[labels.index(mu)]
    sym = _sym_char(group, k)
    wedge = _wedge_char(group, l)
    total = 0
    # sum over elements, not classes: inverse classes stay honest
    for ci, cls in enumerate(group.conjugacy_classes):
        for w in cls:
            ci_inv = group.class_of(group.inverse_index(w))
            total = (total + sym[ci] * chi_sigma[ci] * wedge[ci]
                     * chi_mu[ci_inv])
    mult = total * Fraction(1, group.order)
    m = _as_int(mult)
    if m < 0:
        raise AssertionError("negative multiplicity")
    return m


def _cell_projector(dirac, mu, k, l):
    """Matrix of the projection onto the mu-isotypic of the (k, l) cell."""
    g = dirac.module.group
    labels = g.irrep_labels
    chi_mu = g.character_table[labels.index(mu)]
    dim_mu = g.irrep_dims[labels.index(mu)]
    size = dirac.cell_dim(k, l)
    total = linalg.zeros(size, size)
    for w in range(g.order):
        ci_inv = g.class_of(g.inverse_index(w))
        wmat = dirac.w_cell(w, k, l)
        coeff = chi_mu[ci_inv]
        if coeff == 0:
            continue
        total = linalg.mat_add(total, linalg.mat_scale(coeff, wmat))
    return linalg.mat_scale(Fraction(dim_mu, g.order), total)


# --------------------------------------------------------------------------
# Dirac cohomology


def _zero_scalar_cells(module):
    """For a standard module: {mu: sorted cells} where the Dirac square
    scalar vanishes and the mu-isotypic is nonzero."""
    g = module.group
    n = module.n
    c = module.family.params["c"]
    base = h_weight(module.sigma, c, g)
    out = {}
    for mu in g.irrep_labels:
        gap = _rational_or_none(base + casimir_scalar(mu, c, g))
        if gap is None:
            continue
        for l in range(n + 1):
            k2 = gap / 2 - (n - l)
            if k2.denominator != 1 or k2 < 0:
                continue
            k = int(k2)
            if cell_multiplicity(g, module.sigma, k, l, mu) > 0:
                out.setdefault(mu, []).append((k, l))
    return out


def _embed(cellset, offsets, comp, total):
    vec = [0] * total
    for cell, local in comp.items():
        if cell not in offsets:
            if any(local):
                raise AssertionError(f"component escapes the window at {cell}")
            continue
        off = offsets[cell]
        for i, v in enumerate(local):
            vec[off + i] = v
    return vec


def dirac_cohomology(module):
    """Exact Dirac cohomology report for a graded module.

    Standard modules are cut down to the zero-scalar window of the Dirac
    square first (everything else cannot meet the kernel); baby Verma
    and simple modules are handled on the full finite space.
    """
    dirac = DiracOperatorMatrix(module)
    g = module.group
    if module.kind == "standard":
        by_mu = _zero_scalar_cells(module)
        needed = max((k for cells in by_mu.values() for k, _ in cells),
                     default=0)
        if needed > module.K:
            raise WindowExceedsCap(needed)
        cellset = sorted({cell for cells in by_mu.values() for cell in cells})
        mus_by_cell = {}
        for mu, cells in by_mu.items():
            for cell in cells:
                mus_by_cell.setdefault(cell, []).append(mu)
        zbasis = []
        for cell in cellset:
            proj = None
            for mu in mus_by_cell[cell]:
                p = _cell_projector(dirac, mu, *cell)
                proj = p if proj is None else linalg.mat_add(proj, p)
            for col in linalg.column_space_basis(linalg.columns(proj)):
                zbasis.append((cell, col))
        candidates = sorted(by_mu)
    else:
        cellset = [cell for cell in dirac.cells() if dirac.cell_dim(*cell)]
        zbasis = []
        for cell in cellset:
            dim = dirac.cell_dim(*cell)
            for i in range(dim):
                e = [0] * dim
                e[i] = 1
                zbasis.append((cell, e))
        candidates = list(g.irrep_labels)

    offsets = {}
    total = 0
    for cell in cellset:
        offsets[cell] = total
        total += dirac.cell_dim(*cell)

    amb = []
    images = []
    for cell, local in zbasis:
        amb.append(_embed(cellset, offsets, {cell: local}, total))
        img = dirac.apply({cell: local})
        images.append(_embed(cellset, offsets, img, total))

    # kernel and image of D restricted to the invariant span
    coef_kernel = linalg.nullspace(_columns_matrix(images, total))
    ker = []
    for coefs in coef_kernel:
        vec = [0] * total
        for j, cf in enumerate(coefs):
            if cf:
                for i, v in enumerate(amb[j]):
                    if v:
                        vec[i] = vec[i] + cf * v
        ker.append(vec)
    ker = linalg.column_space_basis(ker)
    image = linalg.column_space_basis([v for v in images if any(v)])
    overlap = linalg.subspace_intersection(ker, image)

    projs = {}

    def project(mu, vecs):
        if not vecs:
            return []
        pm = projs.get(mu)
        if pm is None:
            pm = {cell: _cell_projector(dirac, mu, *cell) for cell in cellset}
            projs[mu] = pm
        out = []
        for v in vecs:
            img = [0] * total
            for cell in cellset:
                off = offsets[cell]
                dim = dirac.cell_dim(*cell)
                local = v[off:off + dim]
                if any(local):
                    loc = linalg.mat_vec(pm[cell], local)
                    for i, x in enumerate(loc):
                        img[off + i] = x
            out.append(img)
        return [v for v in out if any(v)]

    labels = g.irrep_labels
    entries = []
    for mu in candidates:
        dim_mu = g.irrep_dims[labels.index(mu)]
        in_ker = project(mu, ker)
        if not in_ker:
            continue
        rk = linalg.rank(linalg.transpose(in_ker))
        rk_overlap = 0
        in_overlap = project(mu, overlap)
        if in_overlap:
            rk_overlap = linalg.rank(linalg.transpose(in_overlap))
        if (rk - rk_overlap) % dim_mu:
            raise AssertionError("isotypic rank not divisible by dim")
        mult = (rk - rk_overlap) // dim_mu
        if mult <= 0:
            continue
        lived = set()
        for v in linalg.column_space_basis(in_ker):
            for cell in cellset:
                off = offsets[cell]
                if any(v[off:off + dirac.cell_dim(*cell)]):
                    lived.add(cell)
        entries.append({"irrep": mu, "multiplicity": mult,
                        "cells": sorted(lived)})
    entries.sort(key=lambda e: labels.index(e["irrep"]))
    return {
        "group": g.catalogue_id,
        "kind": module.kind,
        "sigma": module.sigma,
        "H_D": entries,
        "kernel_dim": len(ker),
        "image_dim": len(image),
        "overlap_dim": len(overlap),
        "window": [list(cell) for cell in cellset],
    }


def _columns_matrix(columns, rows):
    if not columns:
        return [[0] * 0 for _ in range(rows)]
    return [[col[i] for col in columns] for i in range(rows)]


# --------------------------------------------------------------------------
# contravariant forms and unitarity


def contravariant_form(module):
    """Gram matrices {degree: matrix} of the contravariant form on a
    standard module, seeded by the group-averaged inner product on
    V_sigma and propagated by the star pairing (x_i against y_i)."""
    if module.kind != "standard":
        raise ValueError("contravariant forms live on standard modules")
    g = module.group
    n, dim = module.n, module.dim_sigma
    for w in range(g.order):
        for row in module.rep.matrices[w]:
            for x in row:
                _as_fraction(x)
    for value in module.family.params["c"].values():
        _as_fraction(value)
    avg = linalg.zeros(dim, dim)
    for w in range(g.order):
        smat = [[_as_fraction(x) for x in row] for row in module.rep.matrices[w]]
        avg = linalg.mat_add(avg, linalg.mat_mul(linalg.transpose(smat), smat))
    grams = {0: linalg.mat_scale(Fraction(1, g.order), avg)}
    for k in range(1, module.K + 1):
        monos = poly.monomials(n, k)
        prev = grams[k - 1]
        lowered = {}
        size = module.piece_dim(k)
        gk = linalg.zeros(size, size)
        below = _mono_index(n, k - 1)
        for rp, m in enumerate(monos):
            i = next(ix for ix, e in enumerate(m) if e)
            mi = lowered.get(i)
            if mi is None:
                yb = module.y_block(i, k)
                mi = linalg.mat_mul(prev, [[_as_fraction(x) for x in row]
                                           for row in yb])
                lowered[i] = mi
            m_low = tuple(e - 1 if ix == i else e for ix, e in enumerate(m))
            base = below[m_low] * dim
            for u in range(dim):
                gk[rp * dim + u] = list(mi[base + u])
        if gk != linalg.transpose(gk):
            raise AssertionError("contravariant Gram is not symmetric")
        grams[k] = gk
    return grams


def unitarity_report(group, sigma, c, K):
    """Side-by-side unitarity evidence: exact Gram verdicts of the
    contravariant form by degree, and the Dirac inequality scan for the
    standard module and its simple-quotient variant."""
    module = standard_module(group, sigma, c, K)
    grams = contravariant_form(module)
    verdicts = []
    all_psd = True
    for k in sorted(grams):
        rep = linalg.psd_report(grams[k])
        entry = {"degree": k, "psd": rep["psd"],
                 "pivots": [str(p) for p in rep["pivots"]]}
        if not rep["psd"]:
            entry["witness"] = [str(x) for x in rep["witness"]]
            all_psd = False
        verdicts.append(entry)

    n = group.n
    nvals = {}
    for mu in group.irrep_labels:
        nvals[mu] = _as_fraction(casimir_scalar(mu, c, group))
    gap0 = nvals[sigma]
    violations = []
    for k in range(K + 1):
        for l in range(n + 1):
            for mu in group.irrep_labels:
                gap = gap0 - nvals[mu]
                if gap <= 2 * (k + l):
                    continue
                if cell_multiplicity(group, sigma, k, l, mu) > 0:
                    violations.append({
                        "module": "standard", "mu": mu, "k": k, "l": l,
                        "gap": str(gap), "bound": 2 * (k + l)})
    for l in range(n + 1):
        for mu in group.irrep_labels:
            gap = gap0 - nvals[mu]
            if gap <= 2 * l:
                continue
            if cell_multiplicity(group, sigma, 0, l, mu) > 0:
                violations.append({
                    "module": "simple", "mu": mu, "l": l,
                    "gap": str(gap), "bound": 2 * l})
    consistent = (not all_psd) or not any(
        v["module"] == "standard" for v in violations)
    return {
        "group": group.catalogue_id,
        "sigma": sigma,
        "K": K,
        "gram_verdicts": verdicts,
        "all_psd": all_psd,
        "violations": violations,
        "consistent": consistent,
    }
