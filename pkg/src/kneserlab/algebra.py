"""Linear algebra over small prime fields.

Subspaces of F_p^d are kept in reduced row echelon form, which makes the
RREF basis matrix a canonical name for the subspace: two Subspace values
are equal iff their basis tuples are equal, so they hash in O(1) and sort
deterministically. Everything downstream (graphs, reports, golden files)
keys off this canonical form.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import DegenerateFormError, UsageError

SUPPORTED_PRIMES = (2, 3, 5, 7)


def check_prime(p):
    if p not in SUPPORTED_PRIMES:
        raise UsageError("modulus must be one of %s, got %r" % (SUPPORTED_PRIMES, p))
    return p


def inverse_mod(a, p):
    """Multiplicative inverse of a nonzero residue mod prime p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod %d" % p)
    return pow(a, p - 2, p)


def rref(rows, d, p):
    """Reduced row echelon form of the span of `rows` in F_p^d.

    Returns a tuple of row tuples with strictly increasing pivot columns,
    pivot entries 1, pivot columns zero elsewhere, and no zero rows.
    Idempotent and span-preserving.
    """
    check_prime(p)
    mat = [list(int(x) % p for x in row) for row in rows]
    for row in mat:
        if len(row) != d:
            raise UsageError("row length %d does not match ambient %d" % (len(row), d))
    r = 0
    for col in range(d):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = inverse_mod(mat[r][col], p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r])


def rank_mod_p(rows, d, p):
    return len(rref(rows, d, p))


class Subspace:
    """A subspace of F_p^d, identified by its canonical RREF basis."""

    __slots__ = ("ambient", "p", "basis")

    def __init__(self, ambient, p, basis):
        # `basis` must already be canonical; use Subspace.span otherwise.
        self.ambient = ambient
        self.p = p
        self.basis = basis

    @classmethod
    def span(cls, vectors, ambient, p):
        return cls(ambient, check_prime(p), rref(vectors, ambient, p))

    @classmethod
    def zero(cls, ambient, p):
        return cls(ambient, check_prime(p), ())

    @classmethod
    def coordinate(cls, cols, ambient, p):
        """Span of the standard basis vectors e_c for c in cols (0-based)."""
        rows = []
        for c in sorted(cols):
            v = [0] * ambient
            v[c] = 1
            rows.append(v)
        return cls(ambient, check_prime(p), tuple(tuple(r) for r in rows))

    @property
    def dim(self):
        return len(self.basis)

    @property
    def key(self):
        """Canonical sort key: dimension, then the flattened basis."""
        return (len(self.basis),) + tuple(x for row in self.basis for x in row)

    def matrix(self):
        return np.array(self.basis, dtype=np.int64).reshape(len(self.basis), self.ambient)

    def contains_vector(self, v):
        if all(x % self.p == 0 for x in v):
            return True
        return rank_mod_p(list(self.basis) + [v], self.ambient, self.p) == self.dim

    def contains(self, other):
        self._check_compatible(other)
        stacked = list(self.basis) + list(other.basis)
        return rank_mod_p(stacked, self.ambient, self.p) == self.dim

    def _check_compatible(self, other):
        if self.ambient != other.ambient or self.p != other.p:
            raise UsageError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.p == other.p
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.p, self.basis))

    def __lt__(self, other):
        return self.key < other.key

    def __and__(self, other):
        return intersect(self, other)

    def __add__(self, other):
        return sum_spaces(self, other)

    def __repr__(self):
        return "Subspace(d=%d, p=%d, basis=%r)" % (self.ambient, self.p, self.basis)


def intersect(u, w):
    """U ∩ W by the Zassenhaus block trick."""
    u._check_compatible(w)
    d, p = u.ambient, u.p
    block = [list(row) + list(row) for row in u.basis]
    block += [list(row) + [0] * d for row in w.basis]
    reduced = rref(block, 2 * d, p)
    inter = [row[d:] for row in reduced if not any(row[:d])]
    return Subspace.span(inter, d, p) if inter else Subspace.zero(d, p)


def sum_spaces(u, w):
    u._check_compatible(w)
    return Subspace.span(list(u.basis) + list(w.basis), u.ambient, u.p)


class Form:
    """A bilinear or quadratic form on F_p^d.

    For a quadratic form the `gram` matrix is the upper-triangular
    coefficient matrix of Q; its polar form is b(x,y) = Q(x+y)-Q(x)-Q(y),
    with Gram matrix G + G^T, which is the right notion in every
    characteristic including 2.
    """

    __slots__ = ("kind", "dim", "p", "gram", "_polar")

    KINDS = ("symmetric", "alternating", "quadratic")

    def __init__(self, kind, gram, p):
        if kind not in self.KINDS:
            raise UsageError("unknown form kind %r" % kind)
        check_prime(p)
        g = tuple(tuple(int(x) % p for x in row) for row in gram)
        d = len(g)
        if any(len(row) != d for row in g):
            raise UsageError("gram matrix must be square")
        if kind == "symmetric":
            if any(g[i][j] != g[j][i] for i in range(d) for j in range(d)):
                raise UsageError("symmetric form needs a symmetric gram matrix")
        elif kind == "alternating":
            if any(g[i][i] != 0 for i in range(d)):
                raise UsageError("alternating form needs zero diagonal")
            if any((g[i][j] + g[j][i]) % p != 0 for i in range(d) for j in range(d)):
                raise UsageError("alternating form needs gram = -gram^T")
        else:
            if any(g[i][j] != 0 for i in range(d) for j in range(i)):
                raise UsageError("quadratic form needs an upper-triangular gram matrix")
        self.kind = kind
        self.dim = d
        self.p = p
        self.gram = g
        self._polar = None

    def polar_gram(self):
        """Gram matrix of the associated bilinear form."""
        if self._polar is None:
            d, p = self.dim, self.p
            if self.kind == "quadratic":
                g = tuple(
                    tuple((self.gram[i][j] + self.gram[j][i]) % p for j in range(d))
                    for i in range(d)
                )
            else:
                g = self.gram
            self._polar = g
        return self._polar

    def eval_q(self, v):
        """Q(v) for quadratic forms, b(v,v) otherwise."""
        p = self.p
        if self.kind == "quadratic":
            total = 0
            for i in range(self.dim):
                if v[i]:
                    for j in range(i, self.dim):
                        total += self.gram[i][j] * v[i] * v[j]
            return total % p
        return self.eval_b(v, v)

    def eval_b(self, u, v):
        g = self.polar_gram()
        p = self.p
        total = 0
        for i in range(self.dim):
            if u[i]:
                row = g[i]
                total += u[i] * sum(row[j] * v[j] for j in range(self.dim) if v[j])
        return total % p

    def polar_rank(self):
        return rank_mod_p([list(r) for r in self.polar_gram()], self.dim, self.p)

    def radical_dim(self):
        return self.dim - self.polar_rank()


def perp(u, form):
    """The perp of U under the (polar form of the) given form."""
    if u.ambient != form.dim or u.p != form.p:
        raise UsageError("subspace and form live in different spaces")
    rad = form.radical_dim()
    if rad:
        raise DegenerateFormError(rad)
    d, p = u.ambient, u.p
    if u.dim == 0:
        return Subspace.span([[1 if i == j else 0 for j in range(d)] for i in range(d)], d, p)
    g = np.array(form.polar_gram(), dtype=np.int64)
    m = (u.matrix() @ g) % p
    return nullspace(m, p)


def nullspace(m, p):
    """Canonical basis of {x : m x^T = 0} for an integer matrix mod p."""
    rows, d = m.shape
    reduced = rref([list(r) for r in m], d, p)
    pivots = []
    for row in reduced:
        for j, x in enumerate(row):
            if x:
                pivots.append(j)
                break
    free = [j for j in range(d) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * d
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-reduced[i][f]) % p
        basis.append(v)
    if not basis:
        return Subspace.zero(d, p)
    return Subspace.span(basis, d, p)


def is_totally_singular(u, form):
    """True iff the form vanishes identically on U."""
    if u.ambient != form.dim or u.p != form.p:
        raise UsageError("subspace and form live in different spaces")
    rows = u.basis
    if form.kind == "quadratic":
        if any(form.eval_q(r) != 0 for r in rows):
            return False
    for i in range(len(rows)):
        lo = i if form.kind == "symmetric" else i + 1
        for j in range(lo, len(rows)):
            if form.eval_b(rows[i], rows[j]) != 0:
                return False
    return True


def gaussian_binomial(d, k, p):
    """Number of k-subspaces of F_p^d."""
    if k < 0 or k > d:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (d - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def enumerate_subspaces(d, k, p):
    """All k-subspaces of F_p^d, in lexicographic RREF order (row-major)."""
    check_prime(p)
    if k < 0 or k > d:
        raise UsageError("need 0 <= k <= d")
    if k == 0:
        yield Subspace.zero(d, p)
        return
    out = []
    for pivots in itertools.combinations(range(d), k):
        free_slots = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, d)
            if j not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_slots)):
            mat = [[0] * d for _ in range(k)]
            for i in range(k):
                mat[i][pivots[i]] = 1
            for (i, j), v in zip(free_slots, values):
                mat[i][j] = v
            out.append(tuple(tuple(row) for row in mat))
    out.sort()
    for basis in out:
        yield Subspace(d, p, basis)


def singular_points(form):
    """All singular/isotropic projective points, as canonical 1-subspaces."""
    d, p = form.dim, form.p
    pts = []
    for lead in range(d):
        tail = d - lead - 1
        for rest in itertools.product(range(p), repeat=tail):
            v = (0,) * lead + (1,) + rest
            if form.eval_q(v) == 0:
                pts.append(Subspace(d, p, (v,)))
    pts.sort()
    return pts


def enumerate_singular_subspaces(form, k, via_filter=False):
    """All totally singular/isotropic k-subspaces, in canonical order.

    Built by extending (k-1)-spaces with singular points of their perp;
    `via_filter=True` instead filters enumerate_subspaces, as a slow
    independent cross-check of the same set.
    """
    d, p = form.dim, form.p
    if k < 0:
        raise UsageError("need k >= 0")
    if via_filter:
        return [u for u in enumerate_subspaces(d, k, p) if is_totally_singular(u, form)]
    if k == 0:
        return [Subspace.zero(d, p)]
    level = singular_points(form)
    if k == 1:
        return level
    points = level
    pt_vecs = np.array([pt.basis[0] for pt in points], dtype=np.int64)
    g = np.array(form.polar_gram(), dtype=np.int64)
    for _ in range(k - 1):
        nxt = set()
        for sub in level:
            pairing = (sub.matrix() @ g @ pt_vecs.T) % p
            ok = np.flatnonzero(~pairing.any(axis=0))
            for idx in ok:
                pt = points[idx]
                if sub.contains_vector(pt.basis[0]):
                    continue
                nxt.add(Subspace.span(list(sub.basis) + [pt.basis[0]], d, p))
        level = sorted(nxt)
    return level


def inverse_table(p):
    tab = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        tab[a] = inverse_mod(a, p)
    return tab


def batched_rank(mats, p):
    """Ranks of a batch of small matrices mod p.

    `mats` has shape (N, r, c); returns an int array of length N. Used in
    the adjacency inner loops, where pure-Python elimination would be the
    bottleneck.
    """
    a = np.mod(np.asarray(mats, dtype=np.int64), p).copy()
    n, r, c = a.shape
    inv = inverse_table(p)
    row = np.zeros(n, dtype=np.int64)
    rows_idx = np.arange(r)
    for col in range(c):
        colvals = a[:, :, col]
        mask = (rows_idx[None, :] >= row[:, None]) & (colvals != 0)
        has = mask.any(axis=1)
        idx = np.flatnonzero(has)
        if idx.size == 0:
            continue
        piv = mask[idx].argmax(axis=1)
        sub = a[idx]
        k = np.arange(idx.size)
        ri = row[idx]
        tmp = sub[k, ri].copy()
        sub[k, ri] = sub[k, piv]
        sub[k, piv] = tmp
        prow = sub[k, ri]
        prow = (prow * inv[prow[:, col]][:, None]) % p
        sub[k, ri] = prow
        factors = sub[:, :, col].copy()
        factors[k, ri] = 0
        sub = (sub - factors[:, :, None] * prow[:, None, :]) % p
        a[idx] = sub
        row[idx] += 1
        if (row == min(r, c)).all():
            break
    return row
