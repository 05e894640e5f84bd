"""Drinfeld graded Hecke algebras: form families, PBW normal form, straightening.

An algebra here is determined by a reflection group W acting on V and a
family of skew-symmetric forms a_w on V, one per group element, through the
relations

    w.v.w^(-1) = w(v),        [u, v] = sum_w a_w(u, v) w.

Elements are kept in the normal form x^a . w . y^b.  For the polarized
presets V = h + h* with the x block spanning h* and the y block spanning h.
The orthogonal preset (graded affine Hecke) runs on V0 = h with a
W-invariant symmetric form; there the whole V-part lives in the x block and
the y block stays identically zero.
"""

import math
from fractions import Fraction

from . import linalg
from .poly import p_mul
from .scalars import CyclotomicScalar, scalar_str


class PBWViolation(ValueError):
    """A form family failed the PBW conditions."""

    def __init__(self, verdict):
        self.verdict = verdict
        what = "; ".join(f["detail"] for f in verdict["failures"][:3])
        super().__init__("family is not PBW: " + what)


def _unit(n, j):
    e = [0] * n
    e[j] = 1
    return tuple(e)


def _bump(acc, key, val):
    cur = acc.get(key)
    acc[key] = val if cur is None else cur + val


def _zero_matrix(m):
    return all(x == 0 for row in m for x in row)


def _pairing_gram(n):
    # <x_i, y_i> = 1 in the interleaved order x1,y1,...,xn,yn
    g = linalg.zeros(2 * n, 2 * n)
    for i in range(n):
        g[2 * i][2 * i + 1] = Fraction(1)
        g[2 * i + 1][2 * i] = Fraction(1)
    return g


class FormFamily:
    """A reflection group together with its family of commutator forms.

    forms maps element index -> nv x nv matrix of a_w on the V generator
    basis (absent means zero).  Construction runs the PBW checker unless
    check=False; every downstream identity assumes the family passed.
    """

    def __init__(self, group, forms, preset_tag="custom", space="polarized",
                 vgram=None, params=None, check=True):
        self.group = group
        self.space = space
        if space == "polarized":
            self.nv = 2 * group.n
            self.vgram = _pairing_gram(group.n) if vgram is None else vgram
        elif space == "orthogonal":
            self.nv = group.n
            if vgram is None:
                raise ValueError("orthogonal family needs an invariant form")
            self.vgram = vgram
        else:
            raise ValueError("space must be 'polarized' or 'orthogonal'")
        self.forms = {w: m for w, m in forms.items() if not _zero_matrix(m)}
        self.preset_tag = preset_tag
        self.params = dict(params or {})
        self._gram_inv = None
        # straightening caches; dict item writes are atomic, a concurrent
        # reader at worst recomputes an entry
        self._past = {}
        self._wx = {}
        self._wy = {}
        self._ins = {}
        if check:
            verdict = pbw_check(self)
            if not verdict["passed"]:
                raise PBWViolation(verdict)

    # -- basic data

    def support(self):
        return sorted(self.forms)

    def gram_inverse(self):
        if self._gram_inv is None:
            self._gram_inv = linalg.inverse(self.vgram)
        return self._gram_inv

    def v_matrix(self, w):
        """Matrix of w on the V generator basis."""
        if self.space == "orthogonal":
            return self.group.elements[w]
        n = self.group.n
        h = self.group.elements[w]
        hs = self.group.h_star_matrix(w)
        m = linalg.zeros(2 * n, 2 * n)
        for i in range(n):
            for j in range(n):
                m[2 * i][2 * j] = hs[i][j]
                m[2 * i + 1][2 * j + 1] = h[i][j]
        return m

    # -- element constructors

    def element(self, terms):
        return AlgebraElement(self, terms)

    def zero(self):
        return AlgebraElement(self, {})

    def scalar(self, c):
        nz = (0,) * self.group.n
        return AlgebraElement(self, {(nz, 0, nz): c})

    def one(self):
        return self.scalar(1)

    def group_element(self, w):
        nz = (0,) * self.group.n
        return AlgebraElement(self, {(nz, w, nz): 1})

    def x_gen(self, i):
        nz = (0,) * self.group.n
        return AlgebraElement(self, {(_unit(self.group.n, i), 0, nz): 1})

    def y_gen(self, i):
        if self.space == "orthogonal":
            raise ValueError("orthogonal family has no y block")
        nz = (0,) * self.group.n
        return AlgebraElement(self, {(nz, 0, _unit(self.group.n, i)): 1})

    def v_gen(self, i):
        """Generator number i of V in the engine's slot order."""
        if self.space == "orthogonal":
            return self.x_gen(i)
        return self.x_gen(i // 2) if i % 2 == 0 else self.y_gen(i // 2)

    def vector_element(self, coords):
        out = {}
        for i, c in enumerate(coords):
            if c == 0:
                continue
            for k, v in self.v_gen(i).terms.items():
                _bump(out, k, c * v)
        return AlgebraElement(self, out)

    # -- straightening

    def _w_on_x(self, w, a):
        """Expansion of w(x^a) as {exponent: coeff}."""
        key = (w, a)
        got = self._wx.get(key)
        if got is None:
            m = self.group.h_star_matrix(w)
            got = self._mono_subst(m, a)
            self._wx[key] = got
        return got

    def _w_on_y(self, w, b):
        """Expansion of (w^(-1)(y))^b, so that y^b . w = w . (that)."""
        key = (w, b)
        got = self._wy.get(key)
        if got is None:
            m = self.group.elements[self.group.inverse_index(w)]
            got = self._mono_subst(m, b)
            self._wy[key] = got
        return got

    @staticmethod
    def _mono_subst(m, expo):
        n = len(expo)
        out = {(0,) * n: 1}
        for k in range(n):
            lin = {_unit(n, i): m[i][k] for i in range(n) if m[i][k] != 0}
            for _ in range(expo[k]):
                out = p_mul(out, lin)
        return out

    def _y_past_x(self, b, j):
        """Normal form of y^b . x_j as a tuple of (coeff, a, w, b')."""
        key = (b, j)
        got = self._past.get(key)
        if got is not None:
            return got
        n = self.group.n
        nz = (0,) * n
        if not any(b):
            res = ((1, _unit(n, j), 0, nz),)
        else:
            i = max(k for k in range(n) if b[k])
            b1 = list(b)
            b1[i] -= 1
            b1 = tuple(b1)
            acc = {}
            # y^b x_j = (y^b1 x_j) y_i + sum_w a_w(y_i, x_j) y^b1 w
            for c, a2, w2, b2 in self._y_past_x(b1, j):
                up = list(b2)
                up[i] += 1
                _bump(acc, (a2, w2, tuple(up)), c)
            for w, mat in self.forms.items():
                val = mat[2 * i + 1][2 * j]
                if val == 0:
                    continue
                for b2, d in self._w_on_y(w, b1).items():
                    _bump(acc, (nz, w, b2), val * d)
            res = tuple((c, k[0], k[1], k[2]) for k, c in acc.items() if c != 0)
        self._past[key] = res
        return res

    def _insert_v(self, a, k):
        """Orthogonal space: normal form of x^a . v_k as ((coeff, a', w'), ...)."""
        key = (a, k)
        got = self._ins.get(key)
        if got is not None:
            return got
        n = self.nv
        live = [t for t in range(n) if a[t]]
        if not live or live[-1] <= k:
            up = list(a)
            up[k] += 1
            res = ((1, tuple(up), 0),)
        else:
            l = live[-1]
            b = list(a)
            b[l] -= 1
            b = tuple(b)
            acc = {}
            # x^a v_k = (x^b v_k) v_l + a_w(v_l, v_k) x^b w
            for c, a1, w1 in self._insert_v(b, k):
                if w1 == 0:
                    for c2, a2, w2 in self._insert_v(a1, l):
                        _bump(acc, (a2, w2), c * c2)
                else:
                    m = self.group.elements[w1]
                    for t in range(n):
                        vv = m[t][l]
                        if vv == 0:
                            continue
                        for c2, a2, w2 in self._insert_v(a1, t):
                            _bump(acc, (a2, self.group.mult(w2, w1)), c * vv * c2)
            for w, mat in self.forms.items():
                val = mat[l][k]
                if val != 0:
                    _bump(acc, (b, w), val)
            res = tuple((c, k2[0], k2[1]) for k2, c in acc.items() if c != 0)
        self._ins[key] = res
        return res

    # -- term-by-generator products

    def _times_x(self, terms, j):
        out = {}
        for (a, w, b), c in terms.items():
            for c1, a1, w1, b1 in self._y_past_x(b, j):
                if w == 0:
                    key = (tuple(p + q for p, q in zip(a, a1)), w1, b1)
                    _bump(out, key, c * c1)
                else:
                    for a2, d in self._w_on_x(w, a1).items():
                        key = (tuple(p + q for p, q in zip(a, a2)),
                               self.group.mult(w, w1), b1)
                        _bump(out, key, c * c1 * d)
        return out

    def _times_v(self, terms, j):
        out = {}
        nz = (0,) * self.nv
        for (a, w, _b), c in terms.items():
            if w == 0:
                for c1, a1, w1 in self._insert_v(a, j):
                    _bump(out, (a1, w1, nz), c * c1)
            else:
                m = self.group.elements[w]
                for t in range(self.nv):
                    vv = m[t][j]
                    if vv == 0:
                        continue
                    for c1, a1, w1 in self._insert_v(a, t):
                        _bump(out, (a1, self.group.mult(w1, w), nz), c * vv * c1)
        return out

    def _times_w(self, terms, w2):
        out = {}
        for (a, w, b), c in terms.items():
            if not any(b):
                _bump(out, (a, self.group.mult(w, w2), b), c)
            else:
                for b2, d in self._w_on_y(w2, b).items():
                    _bump(out, (a, self.group.mult(w, w2), b2), c * d)
        return out

    def _mul_terms(self, uterms, vterms):
        res = {}
        polarized = self.space == "polarized"
        for (a2, w2, b2), c2 in vterms.items():
            cur = uterms
            gen = self._times_x if polarized else self._times_v
            for j, e in enumerate(a2):
                for _ in range(e):
                    cur = gen(cur, j)
            if w2 != 0:
                cur = self._times_w(cur, w2)
            if any(b2):
                nxt = {}
                for (a, w, b), c in cur.items():
                    nxt[(a, w, tuple(p + q for p, q in zip(b, b2)))] = c
                cur = nxt
            for k, v in cur.items():
                _bump(res, k, v * c2)
        return res


class AlgebraElement:
    """A finite sum of PBW monomials x^a.w.y^b with exact coefficients."""

    __slots__ = ("family", "terms")
    __hash__ = None

    def __init__(self, family, terms):
        self.family = family
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _bump(out, k, v)
        return AlgebraElement(self.family, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.family, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.family,
                                  self.family._mul_terms(self.terms, other.terms))
        return AlgebraElement(self.family,
                              {k: v * other for k, v in self.terms.items()})

    def __rmul__(self, other):
        return AlgebraElement(self.family,
                              {k: other * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def degree(self):
        """Filtration degree; -1 for the zero element."""
        if not self.terms:
            return -1
        return max(sum(a) + sum(b) for a, _w, b in self.terms)

    def commutator(self, other):
        return self * other - other * self

    def to_data(self):
        """Canonical term list sorted by (x exponents, w, y exponents)."""
        out = []
        for a, w, b in sorted(self.terms):
            out.append({"x": list(a), "w": w, "y": list(b),
                        "coeff": scalar_str(self.terms[(a, w, b)])})
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for a, w, b in sorted(self.terms):
            factors = []
            for i, e in enumerate(a):
                if e:
                    factors.append("x%d" % (i + 1) + ("^%d" % e if e > 1 else ""))
            if w != 0:
                factors.append("g%d" % w)
            for i, e in enumerate(b):
                if e:
                    factors.append("y%d" % (i + 1) + ("^%d" % e if e > 1 else ""))
            c = self.terms[(a, w, b)]
            cs = scalar_str(c)
            if not factors:
                bits.append(cs)
            elif cs == "1/1":
                bits.append("*".join(factors))
            else:
                bits.append("(%s)*%s" % (cs, "*".join(factors)))
        return " + ".join(bits)

    __repr__ = __str__


# -- presets


def _c_map(group, c):
    names = group.reflection_class_names()
    if isinstance(c, dict):
        missing = [nm for nm in names if nm not in c]
        if missing:
            raise ValueError("no parameter for class(es) %s" % ", ".join(missing))
        extra = [nm for nm in c if nm not in names]
        if extra:
            raise ValueError("unknown reflection class(es) %s" % ", ".join(extra))
        return dict(c)
    return {nm: c for nm in names}


def _pair(alpha, alpha_check):
    return sum(a * b for a, b in zip(alpha, alpha_check))


def _inv_scalar(x):
    if isinstance(x, int):
        return Fraction(1, x)
    if isinstance(x, Fraction):
        return 1 / x
    return x.inverse()


def cherednik_forms(group, t, c_map, c_override=None):
    """The rational Cherednik commutator forms on V = h + h*.

    a_1(y, x) = t<y, x> and for each reflection s
    a_s(y, x) = -c_s <y, alpha_s><alpha_s^vee, x> / <alpha_s^vee, alpha_s>.
    c_override optionally replaces c per element index (used by seeded
    corrupted families; it breaks class-invariance on purpose).
    """
    n = group.n
    forms = {}
    if t != 0:
        a1 = linalg.zeros(2 * n, 2 * n)
        for i in range(n):
            a1[2 * i + 1][2 * i] = Fraction(t) if isinstance(t, int) else t
            a1[2 * i][2 * i + 1] = -a1[2 * i + 1][2 * i]
        forms[0] = a1
    for r in group.reflections:
        cs = c_map[r.class_name]
        if c_override and r.element_index in c_override:
            cs = c_override[r.element_index]
        if cs == 0:
            continue
        pinv = _inv_scalar(_pair(r.alpha, r.alpha_check))
        mat = linalg.zeros(2 * n, 2 * n)
        for i in range(n):
            for j in range(n):
                val = -cs * r.alpha[i] * r.alpha_check[j] * pinv
                if val != 0:
                    mat[2 * i + 1][2 * j] = val
                    mat[2 * j][2 * i + 1] = -val
        forms[r.element_index] = mat
    return forms


def cherednik_family(group, t, c, check=True):
    """The rational Cherednik algebra H_{t,c} as a form family."""
    c_map = _c_map(group, c)
    forms = cherednik_forms(group, t, c_map)
    return FormFamily(group, forms, preset_tag="cherednik",
                      params={"t": t, "c": c_map}, check=check)


def invariant_form(group):
    """A W-invariant symmetric form on h, pinned so the first listed
    reflection's root vector has squared length 2."""
    n = group.n
    b0 = linalg.zeros(n, n)
    for m in group.elements:
        b0 = linalg.mat_add(b0, linalg.mat_mul(linalg.transpose(m), m))
    alpha = group.reflections[0].alpha
    binv = linalg.inverse(b0)
    norm = sum(alpha[i] * sum(binv[i][j] * alpha[j] for j in range(n))
               for i in range(n))
    return linalg.mat_scale(norm * Fraction(1, 2), b0)


def _real_value(x):
    # float image of a real scalar, used only to pick signs
    if isinstance(x, CyclotomicScalar):
        return sum(float(c) * math.cos(2.0 * math.pi * e / x.conductor)
                   for e, c in x.coeffs.items())
    return float(x)


def positive_system(group):
    """One root covector per reflection, with consistent lengths.

    The stored per-reflection covectors carry arbitrary scales, so the
    roots are regenerated as W-orbits of one representative per class;
    orbit members then share their representative's length exactly.  The
    positive half is cut out by a generic evaluation vector.  Returns
    (covector, reflection element index) pairs sorted by reflection.
    """
    n = group.n
    orbit = []
    for name in group.reflection_class_names():
        rep = next(r for r in group.reflections if r.class_name == name)
        for h in range(group.order):
            minv = group.elements[group.inverse_index(h)]
            img = tuple(sum(rep.alpha[i] * minv[i][j] for i in range(n))
                        for j in range(n))
            if not any(img == seen for seen in orbit):
                orbit.append(img)
    for q in (Fraction(3, 7), Fraction(5, 11), Fraction(17, 89)):
        v0 = [q ** i for i in range(n)]
        vals = [sum(a[i] * v0[i] for i in range(n)) for a in orbit]
        if all(v != 0 * v for v in vals):
            break
    else:
        raise ValueError("no generic vector found for the root orbit")
    out = []
    for a, v in zip(orbit, vals):
        if _real_value(v) < 0:
            continue
        match = None
        for r in group.reflections:
            piv = next(i for i in range(n) if r.alpha[i] != 0 * r.alpha[i])
            u = a[piv] * _inv_scalar(r.alpha[piv])
            if all(a[i] == u * r.alpha[i] for i in range(n)):
                match = r.element_index
                break
        if match is None:
            raise ValueError("orbit covector off every reflection line")
        out.append((a, match))
    if 2 * len(out) != len(orbit) or len(out) != len(group.reflections):
        raise ValueError("positive system has the wrong size")
    return sorted(out, key=lambda p: p[1])


def gaha_forms(group, k_map, roots=None):
    """Graded-affine-Hecke forms on V0 = h.

    a_w(u, v) = -sum over ordered pairs of distinct positive roots with
    s_al s_be = w of k_al k_be (al(u)be(v) - al(v)be(u)).  The default
    positive system comes from positive_system; roots may instead give
    the system explicitly as (covector, k, reflection index) triples.
    """
    n = group.n
    if roots is None:
        roots = [(a, k_map[group.reflection_at(i).class_name], i)
                 for a, i in positive_system(group)]
    forms = {}
    for al1, k1, i1 in roots:
        for al2, k2, i2 in roots:
            if i1 == i2 or k1 == 0 or k2 == 0:
                continue
            w = group.mult(i1, i2)
            mat = forms.setdefault(w, linalg.zeros(n, n))
            coef = -k1 * k2
            for i in range(n):
                for j in range(n):
                    mat[i][j] += coef * (al1[i] * al2[j] - al1[j] * al2[i])
    return {w: m for w, m in forms.items() if not _zero_matrix(m)}


def gaha_family(group, k, roots=None, check=True):
    """Lusztig's graded affine Hecke algebra as an orthogonal-space family."""
    if any(r.lam != -1 for r in group.reflections):
        raise ValueError("graded affine Hecke preset needs a real "
                         "reflection group")
    k_map = _c_map(group, k)
    forms = gaha_forms(group, k_map, roots)
    return FormFamily(group, forms, preset_tag="graded-affine-hecke",
                      space="orthogonal", vgram=invariant_form(group),
                      params={"k": k_map}, check=check)


def custom_family(group, forms, space="polarized", vgram=None, check=True):
    if space == "orthogonal" and vgram is None:
        vgram = invariant_form(group)
    return FormFamily(group, forms, preset_tag="custom", space=space,
                      vgram=vgram, check=check)


def corrupted_family(group, kind=None):
    """Seeded families that fail the PBW checker in a controlled way.

    kind: "nonskew" (malformed matrix, reported as condition 0), "class"
    (breaks conjugation-invariance, condition 1), "radical" (kernel of a_s
    differs from V^s, condition 2), "rotation" (orthogonal family supported
    on an involution, conditions 1 and 3).  The default picks "class" when
    some reflection class has at least two members, else "nonskew".
    """
    if kind is None:
        multi = [nm for nm in group.reflection_class_names()
                 if sum(1 for r in group.reflections if r.class_name == nm) > 1]
        kind = "class" if multi else "nonskew"
    n = group.n
    if kind == "nonskew":
        forms = cherednik_forms(group, 1, _c_map(group, 1))
        bad = forms[group.reflections[0].element_index]
        bad[0][0] = Fraction(1)
        return FormFamily(group, forms, preset_tag="corrupted", check=False)
    if kind == "class":
        cm = _c_map(group, 1)
        first = None
        for r in group.reflections:
            others = [q for q in group.reflections
                      if q.class_name == r.class_name
                      and q.element_index != r.element_index]
            if others:
                first = r.element_index
                break
        if first is None:
            raise ValueError("every reflection class is a singleton")
        forms = cherednik_forms(group, 1, cm, c_override={first: Fraction(2)})
        return FormFamily(group, forms, preset_tag="corrupted", check=False)
    if kind == "radical":
        # the natural symplectic pairing is W-invariant but nondegenerate,
        # so its kernel is 0 instead of V^s
        cls = group.reflections[0].class_name
        j = linalg.zeros(2 * n, 2 * n)
        for i in range(n):
            j[2 * i][2 * i + 1] = Fraction(1)
            j[2 * i + 1][2 * i] = Fraction(-1)
        forms = {r.element_index: [row[:] for row in j]
                 for r in group.reflections if r.class_name == cls}
        return FormFamily(group, forms, preset_tag="corrupted", check=False)
    if kind == "rotation":
        # orthogonal-space family supported on a central involution; every
        # reflection then violates the determinant condition
        target = None
        for i in range(1, group.order):
            m = group.elements[i]
            if group.mult(i, i) == 0 and group.reflection_at(i) is None:
                target = i
                break
        if target is None:
            raise ValueError("no non-reflection involution in this group")
        j = linalg.zeros(n, n)
        j[0][1] = Fraction(1)
        j[1][0] = Fraction(-1)
        return FormFamily(group, {target: j}, preset_tag="corrupted",
                          space="orthogonal", vgram=invariant_form(group),
                          check=False)
    raise ValueError("unknown corruption kind %r" % kind)


# -- the PBW checker


def pbw_check(family):
    """Check the three PBW conditions; failure is a verdict, not an error.

    Returns {"passed": bool, "failures": [entry, ...]} where each entry has
    a condition number, the witness element w, and the data that broke.
    Condition 0 flags malformed (non-skew) input that the real conditions
    assume.
    """
    group = family.group
    nv = family.nv
    failures = []

    for w, mat in sorted(family.forms.items()):
        if len(mat) != nv or any(len(row) != nv for row in mat):
            failures.append({"condition": 0, "w": w, "h": None,
                             "detail": "a_w has the wrong shape"})
            continue
        bad = None
        for i in range(nv):
            for j in range(nv):
                if mat[i][j] != -mat[j][i]:
                    bad = (i, j)
                    break
            if bad:
                break
        if bad:
            failures.append({"condition": 0, "w": w, "h": None, "pair": bad,
                             "detail": "a_w is not skew-symmetric at basis "
                                       "pair %s" % (bad,)})
    if failures:
        return {"passed": False, "failures": failures}

    zero = linalg.zeros(nv, nv)

    # (1) a_{h^-1 w h}(u, v) = a_w(h(u), h(v)) on basis pairs; checking the
    # generators is enough since conjugation by a product factors through them
    for w in family.support():
        aw = family.forms[w]
        for h in group.generator_indices:
            hm = family.v_matrix(h)
            rhs = linalg.mat_mul(linalg.transpose(hm), linalg.mat_mul(aw, hm))
            wc = group.mult(group.mult(group.inverse_index(h), w), h)
            lhs = family.forms.get(wc, zero)
            pair = None
            for i in range(nv):
                for j in range(nv):
                    if lhs[i][j] != rhs[i][j]:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair:
                failures.append({"condition": 1, "w": w, "h": h, "pair": pair,
                                 "detail": "a_{h^-1wh} != a_w(h., h.) for "
                                           "w=%d, h=%d at basis pair %s"
                                           % (w, h, pair)})
                break  # one witness per w is enough

    # (2) ker a_w = V^w and dim V^w = dim V - 2, for w in W(a) \ {1}
    for w in family.support():
        if w == 0:
            continue
        vm = family.v_matrix(w)
        fixed = linalg.nullspace(linalg.mat_sub(vm, linalg.identity(nv)))
        if len(fixed) != nv - 2:
            failures.append({"condition": 2, "w": w, "h": None,
                             "detail": "dim V^w = %d, want %d for w=%d"
                                       % (len(fixed), nv - 2, w)})
            continue
        kern = linalg.nullspace(family.forms[w])
        witness = None
        for v in kern:
            if not linalg.in_span(fixed, v):
                witness = v
                break
        if witness is None:
            for v in fixed:
                if not linalg.in_span(kern, v):
                    witness = v
                    break
        if len(kern) != len(fixed) or witness is not None:
            detail = ("ker a_w has dim %d but V^w has dim %d for w=%d"
                      % (len(kern), len(fixed), w))
            failures.append({"condition": 2, "w": w, "h": None,
                             "vector": witness, "detail": detail})

    # (3) det(h | (V^w)-perp) = 1 for h centralizing w
    for w in family.support():
        if w == 0:
            continue
        vm = family.v_matrix(w)
        moved = linalg.column_space_basis(
            linalg.columns(linalg.mat_sub(vm, linalg.identity(nv))))
        if len(moved) != 2:
            continue  # already reported under condition 2
        for h in range(group.order):
            if group.mult(h, w) != group.mult(w, h):
                continue
            hm = family.v_matrix(h)
            cols = []
            for bvec in moved:
                img = linalg.mat_vec(hm, bvec)
                co = linalg.coords_in_span(moved, img)
                if co is None:
                    cols = None
                    break
                cols.append(co)
            if cols is None:
                failures.append({"condition": 3, "w": w, "h": h,
                                 "detail": "h=%d does not preserve the moved "
                                           "plane of w=%d" % (h, w)})
                continue
            det = cols[0][0] * cols[1][1] - cols[0][1] * cols[1][0]
            if det != 1:
                failures.append({"condition": 3, "w": w, "h": h, "det": det,
                                 "detail": "det of h=%d on the moved plane of "
                                           "w=%d is %s, not 1"
                                           % (h, w, scalar_str(det))})
    return {"passed": not failures, "failures": failures}


# -- Casimir elements


def casimir_h(family, basis=None):
    """The element sum_i v_i v^i for a dual pair of bases of V.

    basis, if given, is a list of nv coordinate vectors; the duals are
    computed against the family's symmetric form.  The result does not
    depend on the choice.
    """
    nv = family.nv
    if basis is None:
        p = linalg.identity(nv)
    else:
        p = [[basis[i][r] for i in range(nv)] for r in range(nv)]
    ptg = linalg.mat_mul(linalg.transpose(p), family.vgram)
    u = linalg.inverse(ptg)
    total = family.zero()
    for i in range(nv):
        vi = family.vector_element([p[r][i] for r in range(nv)])
        di = family.vector_element([u[r][i] for r in range(nv)])
        total = total + vi * di
    return total


def casimir_omega(family):
    """Omega_H = h - sum_{w in W(a), w != 1} e_w w in PBW normal form."""
    from .dirac import compute_e_w
    om = casimir_h(family)
    for w in family.support():
        if w == 0:
            continue
        e = compute_e_w(family, w)
        if e != 0:
            om = om - e * family.group_element(w)
    return om


def j_map(family, coords):
    """j(x) = sum_i a_1(x, v_i) v^i as an algebra element; [x, Omega] = 2 j(x)."""
    a1 = family.forms.get(0)
    if a1 is None:
        return family.zero()
    nv = family.nv
    vals = [sum(coords[p] * a1[p][i] for p in range(nv)) for i in range(nv)]
    ginv = family.gram_inverse()
    out = [sum(vals[i] * ginv[r][i] for i in range(nv)) for r in range(nv)]
    return family.vector_element(out)
