"""Column matroids of F_p matrices and the union-matroid rank formula.

The union rank is evaluated directly as
    min over L subset of K of |K \\ L| + r1(L) + r2(L),
which is affordable at desk scale (|K| <= 10 everywhere we use it) and
keeps the implementation obviously equal to the formula it claims.
"""

from __future__ import annotations

import itertools

from .algebra import check_prime, rank_mod_p
from .errors import UsageError


class ColumnMatroid:
    """Matroid on column indices {0..n-1} of an F_p matrix.

    The rank of a subset S is the rank of the column submatrix on S.
    """

    __slots__ = ("p", "rows", "n", "_cache")

    def __init__(self, rows, p):
        check_prime(p)
        rows = tuple(tuple(int(x) % p for x in r) for r in rows)
        if not rows:
            raise UsageError("matrix needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise UsageError("ragged matrix")
        self.p = p
        self.rows = rows
        self.n = n
        self._cache = {}

    @classmethod
    def from_subspace(cls, u):
        """Matroid M_U from a canonical basis-rows matrix of U."""
        if u.dim == 0:
            raise UsageError("zero subspace has an empty matrix")
        return cls(u.basis, u.p)

    @property
    def ground(self):
        return frozenset(range(self.n))

    def rank(self, subset):
        key = frozenset(subset)
        if any(j < 0 or j >= self.n for j in key):
            raise UsageError("column index out of range")
        if key not in self._cache:
            cols = sorted(key)
            submat = [[row[j] for j in cols] for row in self.rows]
            self._cache[key] = rank_mod_p(submat, len(cols), self.p) if cols else 0
        return self._cache[key]

    def full_rank(self):
        return self.rank(self.ground)

    def is_independent(self, subset):
        return self.rank(subset) == len(set(subset))

    def bases(self):
        """All maximal independent subsets (each of size full_rank)."""
        r = self.full_rank()
        return {
            frozenset(c)
            for c in itertools.combinations(range(self.n), r)
            if self.rank(c) == r
        }

    def _check_ground(self, other):
        if self.n != other.n or self.p != other.p:
            raise UsageError("matroids have different ground sets")


def union_rank(m1, m2, subset):
    """Rank of K in the union matroid of m1 and m2.

    Equals the maximum size of I1 ∪ I2 with Ii independent in mi and
    contained in K.
    """
    m1._check_ground(m2)
    k = sorted(set(subset))
    if any(j < 0 or j >= m1.n for j in k):
        raise UsageError("column index out of range")
    best = None
    for size in range(len(k) + 1):
        for sub in itertools.combinations(k, size):
            val = (len(k) - size) + m1.rank(sub) + m2.rank(sub)
            if best is None or val < best:
                best = val
    return best


def have_disjoint_bases(m1, m2):
    m1._check_ground(m2)
    return union_rank(m1, m2, m1.ground) == m1.full_rank() + m2.full_rank()
