import random
from fractions import Fraction

import pytest

from cherednik import linalg
from cherednik.dirac import UnknownIrrep, casimir_scalar
from cherednik.groups import build_group
from cherednik.modules import (
    DiracOperatorMatrix,
    UnsupportedField,
    WindowExceedsCap,
    baby_verma,
    cell_multiplicity,
    contravariant_form,
    d_squared_scalar,
    dirac_cohomology,
    dirac_operator,
    h_weight,
    one_dimensional_quotient,
    standard_module,
    unitarity_report,
    _cell_projector,
)
from cherednik.pbw import casimir_omega


def compose_blocks(module, outer, inner):
    out = {}
    for k2, m2 in inner.items():
        for k3, m1 in module.action_blocks(outer, k2).items():
            prod = linalg.mat_mul(m1, m2)
            if k3 in out:
                out[k3] = linalg.mat_add(out[k3], prod)
            else:
                out[k3] = prod
    return {k: m for k, m in out.items() if any(any(row) for row in m)}


def nonzero_blocks(blocks):
    return {k: m for k, m in blocks.items() if any(any(row) for row in m)}


# --------------------------------------------------------------------------
# graded pieces


def test_standard_piece_dims():
    g = build_group("A1")
    m = standard_module(g, "triv", Fraction(1, 2), K=3)
    assert [m.piece_dim(k) for k in range(4)] == [1, 1, 1, 1]
    g2 = build_group("B2")
    m2 = standard_module(g2, "1x1", 1, K=1)
    assert m2.piece_dim(1) == 4
    assert m2.basis_labels(1) == [((0, 1), 0), ((0, 1), 1),
                                  ((1, 0), 0), ((1, 0), 1)]


def test_unknown_irrep_label():
    g = build_group("A1")
    with pytest.raises(UnknownIrrep):
        standard_module(g, "nope", 1, K=1)


def test_y_kills_degree_zero():
    g = build_group("B2")
    m = standard_module(g, "2x0", 1, K=2)
    assert m.y_block(0, 0) is None
    assert m.y_block(1, 0) is None


def test_action_is_homomorphism():
    g = build_group("A2")
    m = standard_module(g, "std", Fraction(1, 3), K=3)
    fam = m.family
    gens = ([fam.x_gen(i) for i in range(2)]
            + [fam.y_gen(i) for i in range(2)]
            + [fam.group_element(w) for w in (1, 3)])
    rng = random.Random(11)
    for _ in range(6):
        a, b = rng.choice(gens), rng.choice(gens)
        k = rng.randrange(2)
        direct = nonzero_blocks(m.action_blocks(a * b, k))
        chained = compose_blocks(m, a, m.action_blocks(b, k))
        assert direct == chained


def test_w_blocks_are_homomorphism():
    g = build_group("B2")
    m = standard_module(g, "1x1", 1, K=1)
    for u in range(g.order):
        for v in range(g.order):
            lhs = linalg.mat_mul(m.w_block(u, 1), m.w_block(v, 1))
            assert lhs == m.w_block(g.mult(u, v), 1)


def test_omega_eigenvalues_rank_one():
    # degree k eigenvalue 2k + 1 - c on the trivial lowest weight
    g = build_group("A1")
    c = Fraction(1, 3)
    m = standard_module(g, "triv", c, K=2)
    om = casimir_omega(m.family)
    values = []
    for k in range(3):
        blocks = m.action_blocks(om, k)
        assert list(blocks) == [k]
        values.append(blocks[k][0][0])
    assert values == [1 - c, 3 - c, 5 - c]


def test_omega_matches_weight_formula_cyclotomic():
    g = build_group("Z3")
    c = Fraction(1, 2)
    for sigma in g.irrep_labels:
        m = standard_module(g, sigma, c, K=2)
        om = casimir_omega(m.family)
        hw = h_weight(sigma, c, g)
        for k in range(3):
            mat = m.action_blocks(om, k)[k]
            expect = (2 * k + 1) - hw
            assert mat == [[expect]]


def test_h_weight_equals_casimir_on_real_groups():
    for gid in ("A1", "A2", "B2"):
        g = build_group(gid)
        for sigma in g.irrep_labels:
            assert h_weight(sigma, Fraction(2, 7), g) == \
                casimir_scalar(sigma, Fraction(2, 7), g)


def test_coinvariant_dims():
    expected = {
        "A1": [1, 1],
        "A2": [1, 2, 2, 1],
        "B2": [1, 2, 2, 2, 1],
        "Z4": [1, 1, 1, 1],
    }
    for gid, dims in expected.items():
        g = build_group(gid)
        m = baby_verma(g, g.irrep_labels[0], 1)
        got = [m.piece_dim(k) // m.dim_sigma for k in m.degrees()]
        assert got == dims
        assert sum(got) == g.order


def test_baby_invariant_generator_acts_by_zero():
    g = build_group("B2")
    m = baby_verma(g, "2x0", 1)
    fam = m.family
    zero = (0, 0)
    for f in g.invariant_generators:
        elem = fam.element({(mono, 0, zero): c for mono, c in f.items()})
        for k in m.degrees():
            assert nonzero_blocks(m.action_blocks(elem, k)) == {}


def test_simple_quotient_existence():
    g = build_group("B2")
    one_dimensional_quotient(g, "11x0", 1)
    one_dimensional_quotient(g, "0x2", 1)
    for sigma in ("2x0", "0x11", "1x1"):
        with pytest.raises(ValueError):
            one_dimensional_quotient(g, sigma, 1)


def test_simple_quotient_kills_generators():
    g = build_group("B2")
    m = one_dimensional_quotient(g, "11x0", 1)
    fam = m.family
    for i in range(2):
        assert nonzero_blocks(m.action_blocks(fam.x_gen(i), 0)) == {}
        assert nonzero_blocks(m.action_blocks(fam.y_gen(i), 0)) == {}


# --------------------------------------------------------------------------
# the Dirac operator on cells


def test_dirac_block_shapes():
    g = build_group("B2")
    m = standard_module(g, "2x0", 1, K=2)
    d = dirac_operator(m)
    blk = d.block(0, 0)
    assert blk["down"] is None
    assert len(blk["up"]) == m.piece_dim(1) * 2
    assert len(blk["up"][0]) == m.piece_dim(0) * 1
    assert d.block(1, 2)["up"] is None
    assert d.cell_dim(1, 1) == m.piece_dim(1) * 2


def test_dirac_equivariance():
    g = build_group("B2")
    m = standard_module(g, "1x1", 1, K=2)
    d = DiracOperatorMatrix(m)
    for k in range(2):
        for l in range(3):
            blk = d.block(k, l)
            for w in range(g.order):
                rho = d.w_cell(w, k, l)
                if blk["up"] is not None:
                    rho2 = d.w_cell(w, k + 1, l + 1)
                    assert linalg.mat_mul(blk["up"], rho) == \
                        linalg.mat_mul(rho2, blk["up"])
                if blk["down"] is not None and k >= 1 and l >= 1:
                    rho2 = d.w_cell(w, k - 1, l - 1)
                    assert linalg.mat_mul(blk["down"], rho) == \
                        linalg.mat_mul(rho2, blk["down"])


def test_w_cell_homomorphism():
    g = build_group("B2")
    m = standard_module(g, "2x0", 1, K=1)
    d = DiracOperatorMatrix(m)
    for u in range(g.order):
        for v in range(g.order):
            lhs = linalg.mat_mul(d.w_cell(u, 0, 1), d.w_cell(v, 0, 1))
            assert lhs == d.w_cell(g.mult(u, v), 0, 1)


def test_top_wedge_is_killed():
    g = build_group("A2")
    m = standard_module(g, "std", Fraction(1, 3), K=1)
    d = DiracOperatorMatrix(m)
    dim = d.cell_dim(0, 2)
    for i in range(dim):
        vec = [0] * dim
        vec[i] = 1
        assert d.apply({(0, 2): vec}) == {}


def test_d_squared_cell_scalars_b2():
    g = build_group("B2")
    for sigma in ("2x0", "1x1"):
        m = standard_module(g, sigma, 1, K=3)
        d = DiracOperatorMatrix(m)
        for k in range(2):
            for l in range(3):
                d2 = d.d_squared_on_cell(k, l)
                for mu in g.irrep_labels:
                    if cell_multiplicity(g, sigma, k, l, mu) == 0:
                        continue
                    proj = _cell_projector(d, mu, k, l)
                    sc = d_squared_scalar(g, sigma, mu, k, l, 1)
                    assert linalg.mat_mul(d2, proj) == \
                        linalg.mat_scale(sc, proj)


def test_d_squared_cell_scalars_cyclotomic():
    g = build_group("Z3")
    sigma = "chi1"
    m = standard_module(g, sigma, Fraction(1, 2), K=2)
    d = DiracOperatorMatrix(m)
    for k in range(2):
        for l in range(2):
            d2 = d.d_squared_on_cell(k, l)
            for mu in g.irrep_labels:
                if cell_multiplicity(g, sigma, k, l, mu) == 0:
                    continue
                proj = _cell_projector(d, mu, k, l)
                sc = d_squared_scalar(g, sigma, mu, k, l, Fraction(1, 2))
                assert linalg.mat_mul(d2, proj) == linalg.mat_scale(sc, proj)


def test_d_squared_scalar_values():
    g = build_group("B2")
    assert d_squared_scalar(g, "2x0", "1x1", 0, 1, 1) == 2
    assert d_squared_scalar(g, "2x0", "0x11", 0, 2, 1) == 0


def test_cell_multiplicity_values():
    g = build_group("A1")
    for k in range(3):
        for l in range(2):
            want = 1 if (k + l) % 2 else 0
            assert cell_multiplicity(g, "triv", k, l, "sgn") == want
    g2 = build_group("B2")
    assert cell_multiplicity(g2, "2x0", 0, 1, "1x1") == 1
    with pytest.raises(UnknownIrrep):
        cell_multiplicity(g2, "2x0", 0, 0, "nope")


def test_cell_projectors_resolve_identity():
    g = build_group("B2")
    m = standard_module(g, "2x0", 1, K=1)
    d = DiracOperatorMatrix(m)
    total = None
    for mu in g.irrep_labels:
        p = _cell_projector(d, mu, 0, 1)
        assert linalg.mat_mul(p, p) == p
        total = p if total is None else linalg.mat_add(total, p)
    assert total == linalg.identity(d.cell_dim(0, 1))


# --------------------------------------------------------------------------
# Dirac cohomology


def test_cohomology_standard_rank_one():
    g = build_group("A1")
    rep = dirac_cohomology(standard_module(g, "triv", Fraction(1, 3), K=2))
    assert rep["H_D"] == [{"irrep": "sgn", "multiplicity": 1,
                           "cells": [(0, 1)]}]
    assert rep["kernel_dim"] == 1
    assert rep["overlap_dim"] == 0


def test_cohomology_eps_dual_multiplicity_one():
    for gid, sigma in (("A1", "sgn"), ("A2", "triv"), ("B2", "1x1")):
        g = build_group(gid)
        eps_dual = g.tensor_with_eps(sigma)
        for c in (Fraction(1, 3), Fraction(2, 5), Fraction(7, 11)):
            rep = dirac_cohomology(standard_module(g, sigma, c, K=2))
            assert rep["H_D"] == [{
                "irrep": eps_dual, "multiplicity": 1,
                "cells": [(0, g.n)]}]


def test_window_exceeds_cap():
    g = build_group("A1")
    with pytest.raises(WindowExceedsCap) as err:
        dirac_cohomology(standard_module(g, "triv", 3, K=2))
    assert err.value.minimal == 3
    rep = dirac_cohomology(standard_module(g, "triv", 3, K=3))
    assert [0, 1] in rep["window"]
    got = {e["irrep"]: e["multiplicity"] for e in rep["H_D"]}
    assert got.get("sgn") == 1


def test_cohomology_baby_rank_one():
    g = build_group("A1")
    rep = dirac_cohomology(baby_verma(g, "triv", 1))
    assert rep["H_D"] == [{"irrep": "sgn", "multiplicity": 2,
                           "cells": [(0, 1), (1, 0)]}]
    assert rep["kernel_dim"] == 2
    assert rep["image_dim"] == 2
    assert rep["overlap_dim"] == 0


def test_cohomology_baby_eps_content_b2():
    g = build_group("B2")
    for sigma in g.irrep_labels:
        rep = dirac_cohomology(baby_verma(g, sigma, 1))
        got = {e["irrep"]: e["multiplicity"] for e in rep["H_D"]}
        assert got == {g.tensor_with_eps(sigma): 4}


def test_baby_casimir_compatibility():
    # the type mu whose eps-twist appears in the kernel shares the
    # central character of the module
    for gid in ("A1", "A2", "B2", "Z3"):
        g = build_group(gid)
        eps_inv = {g.tensor_with_eps(lab): lab for lab in g.irrep_labels}
        for c in (1, Fraction(1, 2)):
            for sigma in g.irrep_labels:
                rep = dirac_cohomology(baby_verma(g, sigma, c))
                assert rep["H_D"]
                for entry in rep["H_D"]:
                    mu = eps_inv[entry["irrep"]]
                    assert casimir_scalar(mu, c, g) == \
                        casimir_scalar(sigma, c, g)


def test_cohomology_simple_quotient_b2():
    g = build_group("B2")
    rep = dirac_cohomology(one_dimensional_quotient(g, "11x0", 1))
    assert rep["H_D"] == [
        {"irrep": "11x0", "multiplicity": 1, "cells": [(0, 0)]},
        {"irrep": "0x2", "multiplicity": 1, "cells": [(0, 2)]},
        {"irrep": "1x1", "multiplicity": 1, "cells": [(0, 1)]},
    ]


# --------------------------------------------------------------------------
# contravariant forms


def test_contravariant_seed_is_identity_for_orthogonal_reps():
    g = build_group("A1")
    m = standard_module(g, "triv", Fraction(1, 2), K=0)
    assert contravariant_form(m)[0] == [[1]]
    g2 = build_group("B2")
    m2 = standard_module(g2, "1x1", 1, K=0)
    assert contravariant_form(m2)[0] == linalg.identity(2)


def test_contravariant_rank_one_product_formula():
    # G_k = prod over j <= k of (j - c for odd j, j for even j)
    g = build_group("A1")
    for c in (Fraction(1, 3), Fraction(5, 2)):
        m = standard_module(g, "triv", c, K=4)
        grams = contravariant_form(m)
        value = Fraction(1)
        for k in range(1, 5):
            value *= (k - c) if k % 2 else k
            assert grams[k] == [[value]]


def test_contravariant_degree_one_pivot():
    g = build_group("A1")
    for c in (Fraction(1, 4), Fraction(2)):
        m = standard_module(g, "triv", c, K=1)
        grams = contravariant_form(m)
        assert grams[1] == [[1 - c]]
        rep = linalg.psd_report(grams[1])
        assert rep["psd"] == (c <= 1)


def test_contravariant_variable_choice_is_consistent():
    g = build_group("B2")
    m = standard_module(g, "1x1", Fraction(1, 3), K=2)
    grams = contravariant_form(m)
    from cherednik import poly
    dim = m.dim_sigma
    for k in (1, 2):
        monos = poly.monomials(2, k)
        below = {mm: i for i, mm in enumerate(poly.monomials(2, k - 1))}
        for i in range(2):
            yb = m.y_block(i, k)
            prod = linalg.mat_mul(grams[k - 1], yb)
            for rp, mono in enumerate(monos):
                if not mono[i]:
                    continue
                low = tuple(e - 1 if ix == i else e
                            for ix, e in enumerate(mono))
                for u in range(dim):
                    row = prod[below[low] * dim + u]
                    assert grams[k][rp * dim + u] == row


def test_contravariant_is_w_invariant():
    g = build_group("B2")
    m = standard_module(g, "1x1", Fraction(1, 3), K=2)
    grams = contravariant_form(m)
    for k in range(3):
        for w in range(g.order):
            rho = m.w_block(w, k)
            back = linalg.mat_mul(linalg.transpose(rho),
                                  linalg.mat_mul(grams[k], rho))
            assert back == grams[k]


def test_contravariant_positive_at_c_zero():
    for gid, sigma in (("A1", "triv"), ("B2", "2x0")):
        g = build_group(gid)
        m = standard_module(g, sigma, 0, K=3)
        for k, gram in contravariant_form(m).items():
            assert linalg.psd_report(gram)["psd"]


def test_contravariant_needs_rational_entries():
    g = build_group("I2_5")
    m = standard_module(g, "rho1", 1, K=2)
    with pytest.raises(UnsupportedField):
        contravariant_form(m)


# --------------------------------------------------------------------------
# unitarity reports


def test_unitarity_report_inside_range():
    g = build_group("A1")
    rep = unitarity_report(g, "triv", Fraction(1, 4), K=6)
    assert rep["all_psd"]
    assert rep["violations"] == []
    assert rep["consistent"]


def test_unitarity_report_outside_range():
    g = build_group("A1")
    rep = unitarity_report(g, "triv", 2, K=3)
    assert not rep["all_psd"]
    first = rep["gram_verdicts"][1]
    assert first["degree"] == 1 and not first["psd"]
    assert "witness" in first
    std = [v for v in rep["violations"] if v["module"] == "standard"]
    simple = [v for v in rep["violations"] if v["module"] == "simple"]
    assert {"module": "standard", "mu": "sgn", "k": 0, "l": 1,
            "gap": "4", "bound": 2} in std
    assert simple and simple[0]["mu"] == "sgn"
    assert rep["consistent"]


def test_unitarity_sweep_is_consistent():
    g = build_group("A1")
    for numer in range(1, 9):
        c = Fraction(numer, 4)
        rep = unitarity_report(g, "triv", c, K=5)
        assert rep["consistent"]
        if c <= 1:
            assert rep["all_psd"]
        else:
            assert not rep["all_psd"]
