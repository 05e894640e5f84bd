"""t = 0 applications: central characters of baby Verma modules, the
Dirac partition of the irreducible W-types, and bounded-degree
factorization of invariants through the derivation image.

The partition is a certificate object: merges are proven by computed
Dirac-cohomology witnesses, separations only by Casimir disagreement,
and equal-Casimir pairs without a witness chain stay marked undecided.
"""

from fractions import Fraction

from . import linalg, poly
from .dirac import (casimir_scalar, clifford_algebra_of,
                    decompose_kernel_element, derivation_d, tensor)
from .modules import (baby_verma, dirac_cohomology, h_weight,
                      one_dimensional_quotient)
from .pbw import _c_map, casimir_omega, cherednik_family
from .scalars import scalar_str


def omega_central_character(sigma, c, group):
    """Scalar of the grading Casimir on the whole baby Verma module,
    verified degree by degree as an exact matrix identity."""
    module = baby_verma(group, sigma, c)
    om = casimir_omega(module.family)
    expected = -h_weight(sigma, c, group)
    for k in module.degrees():
        blocks = module.action_blocks(om, k)
        stray = [k2 for k2 in blocks if k2 != k]
        if stray:
            raise AssertionError("grading Casimir moved a degree piece")
        mat = blocks.get(k)
        dim = module.piece_dim(k)
        for i in range(dim):
            for j in range(dim):
                got = mat[i][j] if mat is not None else 0
                want = expected if i == j else 0
                if got != want:
                    raise AssertionError(
                        f"central character fails at degree {k}")
    return expected


class DiracPartition:
    """Blocks of irreducible W-types with their merge certificates."""

    def __init__(self, group, c_map, blocks, evidence, undecided_pairs):
        self.group = group
        self.c = c_map
        self.blocks = blocks
        self.evidence = evidence
        self.undecided_pairs = undecided_pairs

    def block_of(self, label):
        for block in self.blocks:
            if label in block:
                return block
        raise KeyError(label)

    def to_data(self):
        return {
            "group": self.group,
            "c": {name: scalar_str(v) for name, v in sorted(self.c.items())},
            "blocks": [list(b) for b in self.blocks],
            "evidence": list(self.evidence),
            "undecided_pairs": list(self.undecided_pairs),
        }


def dirac_partition(group, c):
    """Partition of the irreducible W-types generated by the witnessed
    merges sigma ~ mu when mu (x) eps occurs in the Dirac cohomology of
    the baby Verma module of sigma, or of its visible one-dimensional
    quotient when that quotient exists."""
    c_map = _c_map(group, c)
    labels = group.irrep_labels
    # tensoring with eps permutes the labels; merging needs the inverse
    # twist, which only differs from the forward one for complex groups
    eps_inverse = {group.tensor_with_eps(lab): lab for lab in labels}
    parent = {lab: lab for lab in labels}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            # keep the smaller catalogue index as the root
            if labels.index(rb) < labels.index(ra):
                ra, rb = rb, ra
            parent[rb] = ra

    evidence = []

    def harvest(sigma, module, tag):
        rep = dirac_cohomology(module)
        for entry in rep["H_D"]:
            mu = eps_inverse[entry["irrep"]]
            evidence.append({
                "sigma": sigma, "mu": mu, "module": tag,
                "multiplicity": entry["multiplicity"]})
            union(sigma, mu)

    for sigma in labels:
        harvest(sigma, baby_verma(group, sigma, c), "baby-verma")
    for sigma in labels:
        if group.dim_of(sigma) != 1:
            continue
        try:
            quotient = one_dimensional_quotient(group, sigma, c)
        except ValueError:
            continue
        harvest(sigma, quotient, "simple-quotient")

    by_root = {}
    for lab in labels:
        by_root.setdefault(find(lab), []).append(lab)
    blocks = sorted(by_root.values(), key=lambda b: labels.index(b[0]))
    for block in blocks:
        block.sort(key=labels.index)

    nvals = {lab: casimir_scalar(lab, c, group) for lab in labels}
    for block in blocks:
        base = nvals[block[0]]
        for lab in block[1:]:
            if nvals[lab] != base:
                raise AssertionError("a witness merged across Casimir "
                                     "level sets")

    undecided = []
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if nvals[a] == nvals[b] and find(a) != find(b):
                undecided.append({"pair": [a, b],
                                  "status": "undecided-separate"})
    return DiracPartition(group.catalogue_id, c_map, blocks, evidence,
                          undecided)


# --------------------------------------------------------------------------
# comparison table against hard-coded family data


LUSZTIG_FAMILIES = {
    "A1": [["triv"], ["sgn"]],
    "A2": [["triv"], ["std"], ["sgn"]],
    "B2": [["2x0"], ["11x0", "1x1", "0x2"], ["0x11"]],
}


def gordon_martino_table(partition):
    """Side-by-side table of computed blocks against hard-coded family
    data; informational only."""
    fams = LUSZTIG_FAMILIES.get(partition.group)
    if fams is None:
        raise ValueError("family data is hard-coded only for A1, A2, B2")
    blocks = [set(b) for b in partition.blocks]
    rows = []
    for fam in fams:
        hits = [sorted(b) for b in blocks if b & set(fam)]
        rows.append({"family": list(fam), "blocks": hits,
                     "match": hits == [sorted(fam)]})
    return {
        "group": partition.group,
        "note": "informational",
        "rows": rows,
        "agree": all(r["match"] for r in rows),
    }


# --------------------------------------------------------------------------
# factorization of invariants through the derivation image


def _invariant_space(group, matrices, d):
    """Basis of the degree-d invariant polynomials for the action given
    per group element by the degree-1 matrices."""
    n = group.n
    monos = poly.monomials(n, d)
    rows = []
    for w in group.generator_indices:
        act = poly.action_matrix_on_degree(matrices[w], n, d)
        for i in range(len(monos)):
            row = list(act[i])
            row[i] = row[i] - 1
            rows.append(row)
    return [poly.from_vector(v, monos) for v in linalg.nullspace(rows)]


def _fundamental_invariants(group, matrices):
    """One invariant per fundamental degree, excluding products of the
    earlier ones, for the side selected by the matrices."""
    out = []
    for d in sorted(group.invariant_degrees):
        space = _invariant_space(group, matrices, d)
        monos = poly.monomials(group.n, d)
        products = []
        for i, (f, df) in enumerate(out):
            for j in range(i, len(out)):
                g, dg = out[j]
                if df + dg == d:
                    products.append(poly.to_vector(poly.p_mul(f, g), monos))
        chosen = None
        for f in space:
            vec = poly.to_vector(f, monos)
            if not products or not linalg.in_span(
                    linalg.column_space_basis(products), vec):
                chosen = f
                break
        if chosen is None:
            raise AssertionError(f"no fundamental invariant at degree {d}")
        out.append((chosen, d))
    return out


def verify_cm_factorization(group, c, degree_cap, extra_invariants=None):
    """For each fundamental invariant f of degree <= degree_cap, on both
    the polynomial and the dual side, solve f (x) 1 = d(b) exactly at
    t = 0 and report the witness.  Optional extra invariants (polynomial
    dicts on the dual side) are checked the same way; constants are not
    in the augmentation ideal and are rejected."""
    fam = cherednik_family(group, 0, c, check=False)
    alg = clifford_algebra_of(fam)
    n = group.n
    zero = (0,) * n

    jobs = []
    # polynomial side: invariants of S(h*) in the x generators
    hstar = [group.h_star_matrix(w) for w in range(group.order)]
    hside = [group.elements[w] for w in range(group.order)]
    for f, d in _fundamental_invariants(group, hstar):
        if d <= degree_cap:
            jobs.append(("h_star", f, d))
    for f, d in _fundamental_invariants(group, hside):
        if d <= degree_cap:
            jobs.append(("h", f, d))
    for f in extra_invariants or []:
        d = poly.total_degree(f)
        if d == 0 or zero in f:
            raise ValueError("a constant is not in the augmentation ideal")
        jobs.append(("h_star", f, d))

    results = []
    for side, f, d in jobs:
        terms = {}
        for mono, coeff in f.items():
            if side == "h_star":
                terms[(mono, 0, zero)] = coeff
            else:
                terms[(zero, 0, mono)] = coeff
        z = tensor(fam, fam.element(terms), alg.one(), alg)
        # the witness is expected on the same polynomial side; fall back
        # to the unrestricted search if that guess fails
        if side == "h_star":
            same_side = lambda key: not any(key[0][2])
        else:
            same_side = lambda key: not any(key[0][0])
        s = b = None
        for cap, filt in ((d, same_side), (d + 1, same_side), (d + 1, None)):
            try:
                s, b = decompose_kernel_element(
                    z, fam, degree_cap=cap, candidate_filter=filt)
                break
            except ValueError as err:
                if "no decomposition" not in str(err):
                    raise
        if b is None:
            raise ValueError(f"no witness for the degree-{d} invariant "
                             f"within degree {d + 1}")
        if s.coefficients:
            raise AssertionError("invariant left a group-algebra residue")
        if derivation_d(b) != z:
            raise AssertionError("witness does not reproduce the invariant")
        results.append({
            "side": side,
            "degree": d,
            "monomials": len(f),
            "witness_terms": len(b.terms),
            "verified": True,
        })
    return {
        "group": group.catalogue_id,
        "c": {name: scalar_str(v) for name, v in
              sorted(fam.params["c"].items())},
        "degree_cap": degree_cap,
        "invariants": results,
    }
