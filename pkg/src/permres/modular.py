"""Exact linear algebra over random word-sized prime fields.

Rank over F_p lower-bounds rank over Q and equals it unless p divides one of
finitely many minors; agreement over two independently chosen 31-bit primes
is the acceptance gate (silent error probability below 2^-30 per entry).
All eliminations are deterministic for a fixed prime.
"""

import logging
import random
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)

# Deterministic Miller-Rabin witnesses for every modulus below 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

PRIME_LOW = 1 << 30
PRIME_HIGH = 1 << 31

# Above this many cells the dense numpy path is not attempted.
_DENSE_CELL_LIMIT = 4_000_000


def is_prime(m):
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """A prime field with 31-bit modulus, sized so that products of two
    reduced elements fit in int64 arithmetic."""

    modulus: int

    def __post_init__(self):
        p = self.modulus
        if not (PRIME_LOW < p < PRIME_HIGH):
            raise ValueError(f"modulus {p} not in (2^30, 2^31)")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")

    def inv(self, a):
        return pow(a % self.modulus, self.modulus - 2, self.modulus)


def random_prime_field(rng):
    """Draw a uniform random 31-bit prime field from an rng or integer seed."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    while True:
        candidate = rng.randrange(PRIME_LOW + 1, PRIME_HIGH) | 1
        if is_prime(candidate):
            return PrimeField(candidate)


def prime_fields(seed, count=2):
    """`count` distinct prime fields derived deterministically from a seed."""
    rng = random.Random(f"permres-primes-{seed}")
    fields = []
    seen = set()
    while len(fields) < count:
        f = random_prime_field(rng)
        if f.modulus not in seen:
            seen.add(f.modulus)
            fields.append(f)
    return fields


def rank_of_rows(rows, p, ncols=None):
    """Rank over F_p of a matrix given as sparse rows ({col: coeff}).

    Small matrices go through a vectorized dense elimination; larger ones
    through sparse elimination with Markowitz-style pivoting.
    """
    rows = [r for r in rows if r]
    if not rows:
        return 0
    if ncols is None:
        ncols = max(max(r) for r in rows) + 1
    if len(rows) * ncols <= _DENSE_CELL_LIMIT:
        return _rank_dense(rows, ncols, p)
    return _rank_sparse(rows, p)


def _rank_dense(rows, ncols, p):
    a = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, v in row.items():
            a[i, c] = v % p
    rank = 0
    nrows = len(rows)
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = a[rank] * inv % p
        below = rank + 1 + np.nonzero(a[rank + 1:, col])[0]
        if below.size:
            a[below] = (a[below] - a[below, col][:, None] * a[rank]) % p
        rank += 1
    return rank


def _rank_sparse(rows, p):
    """Markowitz-style sparse elimination: pivot in the shortest active row,
    at the column with the fewest other occupants."""
    active = {i: {c: v % p for c, v in row.items() if v % p} for i, row in
              enumerate(rows)}
    active = {i: r for i, r in active.items() if r}
    col_rows = {}
    for i, row in active.items():
        for c in row:
            col_rows.setdefault(c, set()).add(i)
    rank = 0
    while active:
        i = min(active, key=lambda k: (len(active[k]), k))
        row = active.pop(i)
        c = min(row, key=lambda cc: (len(col_rows[cc]), cc))
        inv = pow(row[c], p - 2, p)
        row = {cc: vv * inv % p for cc, vv in row.items()}
        for cc in row:
            col_rows[cc].discard(i)
        rank += 1
        for j in list(col_rows[c]):
            other = active[j]
            f = other[c]
            for cc, vv in row.items():
                new = (other.get(cc, 0) - f * vv) % p
                if new:
                    if cc not in other:
                        col_rows[cc].add(j)
                    other[cc] = new
                elif cc in other:
                    del other[cc]
                    col_rows[cc].discard(j)
            if not other:
                del active[j]
    return rank


def rref_of_rows(rows, p):
    """Fully reduced row echelon form.

    Returns {pivot_col: row_dict} where each row has coefficient 1 at its
    pivot and support only on non-pivot columns otherwise.  Pivot columns are
    the leading columns under the natural column order, so the non-pivot set
    is deterministic for a fixed row order and prime.
    """
    pivots = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            if c in pivots:
                f = r.pop(c)
                for cc, vv in pivots[c].items():
                    if cc == c:
                        continue
                    new = (r.get(cc, 0) - f * vv) % p
                    if new:
                        r[cc] = new
                    elif cc in r:
                        del r[cc]
            else:
                inv = pow(r[c], p - 2, p)
                pivots[c] = {cc: vv * inv % p for cc, vv in r.items()}
                break
    # back-substitution: clear pivot columns from earlier pivot rows
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for c2 in sorted(cc for cc in row if cc != c and cc in pivots):
            f = row.pop(c2)
            for cc, vv in pivots[c2].items():
                if cc == c2:
                    continue
                new = (row.get(cc, 0) - f * vv) % p
                if new:
                    row[cc] = new
                elif cc in row:
                    del row[cc]
        row[c] = 1
    return pivots


def agree_over_primes(compute, seed=0):
    """Run `compute(field)` over two primes; on disagreement a third prime
    breaks the tie (the event is logged).  Returns (value, moduli used)."""
    f1, f2, f3 = prime_fields(seed, 3)
    v1 = compute(f1)
    v2 = compute(f2)
    if v1 == v2:
        return v1, [f1.modulus, f2.modulus]
    v3 = compute(f3)
    log.warning(
        "prime disagreement: %s (p=%d) vs %s (p=%d); tie-break %s (p=%d)",
        v1, f1.modulus, v2, f2.modulus, v3, f3.modulus,
    )
    if v3 == v1 or v3 == v2:
        return v3, [f1.modulus, f2.modulus, f3.modulus]
    raise RuntimeError(
        f"three primes disagree: {v1}, {v2}, {v3} - arithmetic bug"
    )
