"""Closed-form dimension formulas, each paired with an independent oracle
check in the test suite.

Conventions: Betti-table steps are 0-based with step 0 the minimal
generators, and `j` counts resolution terms 1-based (j = step + 1), so the
linear strand of an ideal generated in degree kappa sits in degrees
kappa + j - 1.
"""

from dataclasses import dataclass
from math import comb

from .partitions import hook_partition, schur_dim


@dataclass(frozen=True)
class FormulaResult:
    """A closed-form value tagged with the formula that produced it."""

    formula_id: str
    inputs: tuple
    value: int


def _comb0(a, b):
    """Binomial that is 0 outside the usual range instead of raising."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def perm_linear_strand_dim(n, kappa, j):
    """Dimension of the degree kappa+j-1 generators of the j-th term of the
    linear strand for the kappa x kappa sub-permanent ideal:
    C(n, kappa+j-1)^2 * C(2(kappa+j-2), j-1).  Vanishes once kappa+j-1 > n."""
    if not (1 <= kappa <= n) or j < 1:
        raise ValueError("need 1 <= kappa <= n and j >= 1")
    m = kappa + j - 1
    if m > n:
        return 0
    return comb(n, m) ** 2 * comb(2 * (m - 1), j - 1)


def perm2_f_vector(n):
    """Face counts (f_0..f_n) of the simplicial complex attached to the
    radical of the 2x2 sub-permanent ideal: vertices n^2, edges
    C(n^2,2) - C(n,2)^2, triangles 2C(n,2)^2 + 2nC(n,3), then thin simplices
    2nC(n,i+1)."""
    if n < 2:
        raise ValueError("need n >= 2")
    f = [
        n * n,
        comb(n * n, 2) - comb(n, 2) ** 2,
        2 * comb(n, 2) ** 2 + 2 * n * comb(n, 3),
    ]
    for i in range(3, n + 1):
        f.append(2 * n * comb(n, i + 1))
    return f


def perm2_hilbert_polynomial(n, t):
    """Hilbert polynomial of the quotient by the 2x2 sub-permanent ideal,
    evaluated at t >= 1: sum_i f_i * C(t-1, i)."""
    if t < 1:
        raise ValueError("need t >= 1")
    return sum(fi * comb(t - 1, i) for i, fi in enumerate(perm2_f_vector(n)))


def perm2_quotient_hilbert(n, t):
    """Hilbert function of the quotient by the 2x2 sub-permanent ideal.

    Low degrees are the full polynomial ring; for 3 <= t <= n the quotient
    exceeds its Hilbert polynomial by C(n,t)^2 (the finite-length part
    supported on the radical), and for t > n the polynomial is exact.
    """
    if t < 0:
        raise ValueError("need t >= 0")
    if t == 0:
        return 1
    if t == 1:
        return n * n
    if t == 2:
        return comb(n * n + 1, 2) - comb(n, 2) ** 2
    hp = perm2_hilbert_polynomial(n, t)
    if t <= n:
        return comb(n, t) ** 2 + hp
    return hp


def perm2_ideal_hilbert(n, t):
    """Hilbert function of the 2x2 sub-permanent ideal; 0 below degree 2,
    C(n,2)^2 in degree 2, and the binomial complement of the quotient
    beyond."""
    if n < 2:
        raise ValueError("need n >= 2")
    if t < 2:
        return 0
    if t == 2:
        return comb(n, 2) ** 2
    return comb(n * n + t - 1, t) - perm2_quotient_hilbert(n, t)


def sqfree_ideal_hilbert(n, kappa, d, corrected=True):
    """Hilbert function of the ideal of degree-kappa square-free monomials:
    the number of degree-d monomials in n variables involving at least kappa
    distinct variables, sum_{s>=kappa} C(n,s) C(d-1,s-1).

    With corrected=False, evaluates an alternative binomial form (binomials
    C(n, kappa-j) instead of C(n, kappa+j)) kept only to document that it
    disagrees with the enumeration oracle, e.g. at (n,kappa,d)=(3,2,3).
    """
    if d < 0:
        raise ValueError("need d >= 0")
    if not corrected:
        t = d - kappa
        return sum(
            _comb0(n, kappa - j) * _comb0(kappa + t - 1, kappa + j - 1)
            for j in range(0, n - kappa + 1)
        )
    return sum(
        comb(n, s) * comb(d - 1, s - 1) for s in range(kappa, min(d, n) + 1)
    )


def sqfree_quotient_hilbert(n, kappa, d, corrected=True):
    """Hilbert function of the quotient by the square-free ideal: monomials
    with at most kappa-1 distinct variables, sum_{j<=kappa-2} C(n,j+1) C(d-1,j)
    for d >= 1.

    With corrected=False, evaluates an alternative form whose summation stops
    at n-kappa-2; it is kept only to document that it disagrees with the
    enumeration oracle, e.g. at (n,kappa,d)=(3,2,1).
    """
    if d < 0:
        raise ValueError("need d >= 0")
    if d == 0:
        return 1
    if not corrected:
        if d < n - kappa - 1:
            return comb(n + d - 1, n - 1)
        return sum(
            comb(n, j + 1) * comb(d - 1, j) for j in range(0, n - kappa - 1)
        )
    return sum(comb(n, j + 1) * comb(d - 1, j) for j in range(0, kappa - 1))


def sqfree_betti(n, kappa, i):
    """Graded Betti number of the square-free ideal at step i (degree
    kappa+i): C(n, kappa+i) * C(kappa-1+i, i); the resolution is linear, so
    every other degree vanishes."""
    if i < 0:
        raise ValueError("need i >= 0")
    if kappa + i > n:
        return 0
    return comb(n, kappa + i) * comb(kappa - 1 + i, i)


def det_linear_strand_dim(n, r, j):
    """Dimension of the j-th linear-strand term for the ideal of
    (r+1)-minors: sum over a+b=j-1 of
    dim S_(a+1,1^(r+b)) C^n * dim S_(b+1,1^(r+a)) C^n."""
    if r < 1 or j < 1:
        raise ValueError("need r >= 1 and j >= 1")
    total = 0
    for a in range(j):
        b = j - 1 - a
        total += schur_dim(hook_partition(a + 1, r + b), n) * schur_dim(
            hook_partition(b + 1, r + a), n
        )
    return total


_REGISTRY = {
    "perm_linear_strand_dim": perm_linear_strand_dim,
    "perm2_f_vector": perm2_f_vector,
    "perm2_hilbert_polynomial": perm2_hilbert_polynomial,
    "perm2_quotient_hilbert": perm2_quotient_hilbert,
    "perm2_ideal_hilbert": perm2_ideal_hilbert,
    "sqfree_ideal_hilbert": sqfree_ideal_hilbert,
    "sqfree_quotient_hilbert": sqfree_quotient_hilbert,
    "sqfree_betti": sqfree_betti,
    "det_linear_strand_dim": det_linear_strand_dim,
}


def evaluate(formula_id, *args, **kwargs):
    """Evaluate a registered formula into a FormulaResult."""
    fn = _REGISTRY[formula_id]
    value = fn(*args, **kwargs)
    return FormulaResult(formula_id, args + tuple(sorted(kwargs.items())),
                         value)
