"""
Contravariant forms and unitarity windows
=========================================

M(sigma) carries a W-invariant contravariant form.  Its Gram matrices
are exact rational, so positivity is a pivot computation, and the Dirac
inequality gives an independent necessary condition.
"""
from fractions import Fraction

from cherednik import build_group, standard_module, unitarity_report
from cherednik.linalg import psd_report
from cherednik.modules import contravariant_form

g = build_group("A1")

# the degree-1 Gram entry is 1 - c: positivity flips exactly at c = 1
for c in (Fraction(1, 4), Fraction(3, 4), Fraction(1), Fraction(3, 2)):
    grams = contravariant_form(standard_module(g, "triv", c, K=4))
    verdicts = [psd_report(grams[k])["psd"] for k in sorted(grams)]
    print(f"c = {c}: degree-1 entry {grams[1][0][0]}, psd by degree "
          f"{verdicts}")

rep = unitarity_report(g, "triv", Fraction(2), K=3)
print("c = 2 all psd:", rep["all_psd"])
for v in rep["violations"]:
    print("  dirac violation:", v)
print("form failure and Dirac bound agree:", rep["consistent"])

# B2, a two-dimensional type: the same machinery, bigger Grams
b2 = build_group("B2")
for c in (Fraction(1, 3), Fraction(3, 2)):
    rep = unitarity_report(b2, "1x1", c, K=4)
    bad = [v["degree"] for v in rep["gram_verdicts"] if not v["psd"]]
    print(f"B2 1x1 at c = {c}: non-psd degrees {bad or 'none'}, "
          f"consistent {rep['consistent']}")
