"""Explicit syzygy vectors and the transpose-Koszul differential.

Linear syzygies can be written down in closed form: tensor Laplace
expansions that keep one factor unexpanded.  Multiplying the factors back
together recovers the minor or permanent; a repeated row makes the
determinant expansion a syzygy on the nose.  The differential check is
exact integer arithmetic.
"""

from permres import (
    IdealSpec,
    det_hw_syzygy,
    koszul_transpose,
    monomial_syzygy,
    tensor_laplace,
)
from permres.ideals import (
    DETERMINANT,
    PERMANENT,
    SubmatrixSelector,
    submatrix_polynomial,
)

n = 3

# A 2x2 selector expanded along its first row: two terms, and the
# multiplication map returns the 2x2 minor.
sel = SubmatrixSelector((1, 2), (1, 2))
expansion = tensor_laplace(n, sel, "row", 1, DETERMINANT)
print("tensor Laplace expansion of the (1,2)x(1,2) minor:", expansion)
print("multiplies back to the minor:",
      koszul_transpose(expansion) == submatrix_polynomial(
          n, (1, 2), (1, 2), DETERMINANT))

# Repeat a row and the same expansion becomes a linear syzygy: the
# determinant of a matrix with a repeated row is zero.
repeated = SubmatrixSelector((1, 1, 2), (1, 2, 3))
syzygy = tensor_laplace(n, repeated, "row", 1, DETERMINANT)
print("\nrepeated-row expansion has",
      len(syzygy.terms), "terms; image under the differential:",
      koszul_transpose(syzygy).terms, "(zero = syzygy)")

# For permanents all Laplace expansions of one submatrix multiply to the
# same permanent, so differences of two expansions are the linear syzygies.
sel = SubmatrixSelector((1, 2, 3), (1, 2, 3))
rows_exp = [tensor_laplace(n, sel, "row", i, PERMANENT) for i in (1, 2, 3)]
diff = rows_exp[0] - rows_exp[1]
print("\npermanental double-expansion difference is a syzygy:",
      koszul_transpose(diff).is_zero())

# Deeper in the resolution the highest-weight vectors are signed double
# sums of minors against wedges of first-row/first-column variables.
hw = det_hw_syzygy(4, 1, 1, 1)
print(f"\nhighest-weight vector at (r,p,q)=(1,1,1): {len(hw.terms)} terms, "
      f"degree {hw.degree}, exterior rank {hw.rank}")
print("killed by the differential:", koszul_transpose(hw).is_zero())

# The square-free ideal has an even simpler spanning family.
s = monomial_syzygy(base=(0,), tail=(1, 2, 3))
print(f"\nsquare-free syzygy vector: {len(s.terms)} terms, rank {s.rank}")
print("killed by the differential:", koszul_transpose(s).is_zero())

# Sanity: these are honest elements of the graded pieces the Betti oracle
# measures -- the 4 linear syzygies of the nine 2x2 sub-permanents.
from permres import betti_oracle, prime_fields

field = prime_fields(0, 1)[0]
print("\nlinear syzygies of the 2x2 sub-permanents (n=3):",
      betti_oracle(IdealSpec("subpermanents", 3, 2), 1, 3, field))
