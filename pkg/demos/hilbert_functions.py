"""Hilbert functions of the three ideal families, closed form vs oracle.

The library keeps two fully independent routes to every Hilbert value: a
closed-form binomial expression, and a brute-force rank computation over a
random 31-bit prime field.  This script sweeps a few families and prints
both columns side by side.
"""

from permres import (
    IdealSpec,
    det_ideal_hilbert,
    hilbert_oracle,
    perm2_ideal_hilbert,
    perm2_quotient_hilbert,
    prime_fields,
    sqfree_ideal_hilbert,
)

field = prime_fields(seed=0, count=1)[0]
print(f"working over F_p with p = {field.modulus}\n")

# --- 2x2 sub-permanents of an n x n matrix --------------------------------
# In degree 2 the ideal is spanned by its C(n,2)^2 generators; beyond that
# the closed form subtracts a combinatorial Hilbert function built from the
# face counts of a simplicial complex.
for n in (3, 4):
    spec = IdealSpec("subpermanents", n, 2)
    print(f"2x2 sub-permanents, n={n}:")
    print(f"  {'t':>2} {'formula':>9} {'oracle':>9}")
    for t in range(2, 7):
        formula = perm2_ideal_hilbert(n, t)
        oracle = hilbert_oracle(spec, t, field)
        flag = "" if formula == oracle else "  <-- MISMATCH"
        print(f"  {t:>2} {formula:>9} {oracle:>9}{flag}")
    print()

# The quotient stabilizes to its Hilbert polynomial once t > n.
n = 4
print(f"quotient Hilbert function for n={n} (polynomial from t={n + 1} on):")
print(" ", [perm2_quotient_hilbert(n, t) for t in range(0, 9)])
print()

# --- square-free monomials -------------------------------------------------
# Monomials of degree d with at least kappa distinct indices.  The formula
# is a two-binomial sum; the oracle literally counts monomials.
spec = IdealSpec("squarefree", 5, 3)
print("degree-3 square-free monomials in 5 variables:")
for d in range(3, 8):
    formula = sqfree_ideal_hilbert(5, 3, d)
    oracle = hilbert_oracle(spec, d, field)
    print(f"  d={d}: formula {formula}, oracle {oracle}")
print()

# --- minors -----------------------------------------------------------------
# No standalone closed form here; instead the resolution enumeration gives
# the Hilbert function through the alternating-sum identity, and the rank
# oracle confirms it.
spec = IdealSpec("minors", 3, 2)
print("2x2 minors of a 3x3 matrix (resolution vs rank):")
for t in range(2, 7):
    via_resolution = det_ideal_hilbert(3, 2, t)
    via_rank = hilbert_oracle(spec, t, field)
    print(f"  t={t}: resolution {via_resolution}, rank {via_rank}")
