"""Concrete Kneser graphs of classical buildings over F_p.

Vertices are canonical geometric objects (RREF subspaces, or nested
flags of them), adjacency is stored as one bit-vector row per vertex,
and the apartment subgraph is the set of coordinate-frame objects.

Standard forms, fixed once per family:
  D_n: Q(x) = x_1 x_1' + ... + x_n x_n'  on F_p^{2n},
       coordinates ordered 1, 1', 2, 2', ..., n, n'.
  B_n: Q(x) = x_1 x_2 + x_3 x_4 + ... - x_{2n+1}^2  on F_p^{2n+1}
       (odd p only; in characteristic 2 the polar form is degenerate
       and polar questions route through the C_n model).
  C_n: f(x,y) = x_1 y_2 - x_2 y_1 + ...  on F_p^{2n}.
In all three cases hyperbolic-pair label i sits at column 2i-2 and its
partner i' at column 2i-1 (0-based).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .algebra import (
    Subspace,
    batched_rank,
    check_prime,
    enumerate_singular_subspaces,
    enumerate_subspaces,
    Form,
    intersect,
    nullspace,
)
from .errors import UsageError

FAMILIES = ("A", "B", "C", "D", "G")


@dataclass(frozen=True)
class BuildingSpec:
    family: str
    rank: int
    p: int
    types: tuple
    selector: str = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UsageError("family must be one of %s" % (FAMILIES,))
        check_prime(self.p)
        types = tuple(sorted(set(self.types)))
        object.__setattr__(self, "types", types)
        if not types:
            raise UsageError("type set must be nonempty")
        if any(j < 1 or j > self.rank for j in types):
            raise UsageError("type set must be a subset of the diagram nodes")
        if self.family in ("B", "G") and self.p % 2 == 0:
            raise UsageError("family %s model requires odd characteristic" % self.family)
        if self.selector not in (None, "plus", "minus"):
            raise UsageError("selector must be 'plus' or 'minus'")

    def to_dict(self):
        d = {
            "family": self.family,
            "rank": self.rank,
            "p": self.p,
            "types": list(self.types),
        }
        if self.selector:
            d["selector"] = self.selector
        return d


class PolarModel:
    """Fixed standard form plus hyperbolic-pair frame bookkeeping."""

    def __init__(self, family, n, p):
        check_prime(p)
        if family not in ("B", "C", "D"):
            raise UsageError("polar family must be B, C or D")
        if n < 2:
            raise UsageError("polar rank must be at least 2")
        self.family = family
        self.n = n
        self.p = p
        if family == "B":
            if p % 2 == 0:
                raise UsageError("B model requires odd characteristic")
            d = 2 * n + 1
            gram = [[0] * d for _ in range(d)]
            for i in range(n):
                gram[2 * i][2 * i + 1] = 1
            gram[d - 1][d - 1] = p - 1
            self.form = Form("quadratic", gram, p)
        elif family == "C":
            d = 2 * n
            gram = [[0] * d for _ in range(d)]
            for i in range(n):
                gram[2 * i][2 * i + 1] = 1
                gram[2 * i + 1][2 * i] = p - 1
            self.form = Form("alternating", gram, p)
        else:
            d = 2 * n
            gram = [[0] * d for _ in range(d)]
            for i in range(n):
                gram[2 * i][2 * i + 1] = 1
            self.form = Form("quadratic", gram, p)
        self.dim = d

    def col(self, label):
        """Column of frame label l (positive) or its partner -l (primed)."""
        if label == 0 or abs(label) > self.n:
            raise UsageError("frame label out of range")
        return 2 * (label - 1) if label > 0 else 2 * (-label - 1) + 1

    def frame_subspace(self, labels):
        return Subspace.coordinate([self.col(l) for l in labels], self.dim, self.p)

    def frame_label_sets(self, k):
        """All totally singular frame label sets of size k."""
        out = []
        for support in itertools.combinations(range(1, self.n + 1), k):
            for signs in itertools.product((1, -1), repeat=k):
                out.append(tuple(s * a for a, s in zip(support, signs)))
        return out

    def reference_maximal(self):
        return self.frame_subspace(tuple(range(1, self.n + 1)))

    def in_plus_family(self, sub):
        """D-family membership: dim(A ∩ A0) congruent to n mod 2."""
        return intersect(sub, self.reference_maximal()).dim % 2 == self.n % 2


@lru_cache(maxsize=None)
def polar_model(family, n, p):
    return PolarModel(family, n, p)


def _pack_bool(arr):
    data = np.packbits(np.asarray(arr, dtype=bool), bitorder="little")
    return int.from_bytes(data.tobytes(), "little")


class KneserGraph:
    """Vertex list + bit-vector adjacency + marked apartment subset."""

    def __init__(self, spec, vertices, adjacency, sigma):
        self.spec = spec
        self.vertices = vertices
        self.adjacency = adjacency
        self.sigma = sorted(sigma)

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def full_mask(self):
        return (1 << len(self.vertices)) - 1

    def is_adjacent(self, i, j):
        return i != j and bool(self.adjacency[i] >> j & 1)

    def degree(self, i):
        return bin(self.adjacency[i]).count("1")

    def num_edges(self):
        return sum(self.degree(i) for i in range(self.num_vertices)) // 2

    def edges(self):
        for i, row in enumerate(self.adjacency):
            bits = row >> (i + 1) << (i + 1)
            while bits:
                j = (bits & -bits).bit_length() - 1
                yield (i, j)
                bits &= bits - 1

    def sigma_mask(self):
        m = 0
        for i in self.sigma:
            m |= 1 << i
        return m

    def check_symmetric_irreflexive(self):
        for i, row in enumerate(self.adjacency):
            if row >> i & 1:
                return False
        for i, j in self.edges():
            if not self.adjacency[j] >> i & 1:
                return False
        return True


def _vertex_key(flag):
    return tuple(s.key for s in flag)


def _sorted_vertices(flags):
    return sorted(flags, key=_vertex_key)


def _sigma_indices(vertices, frame_flags):
    index = {flag: i for i, flag in enumerate(vertices)}
    out = []
    for flag in frame_flags:
        if flag not in index:
            raise RuntimeError("frame object is not a vertex: %r" % (flag,))
        out.append(index[flag])
    return sorted(out)


def _bases_array(subspaces, k, d):
    arr = np.zeros((len(subspaces), k, d), dtype=np.int64)
    for i, s in enumerate(subspaces):
        arr[i] = s.matrix()
    return arr


def adjacency_disjoint(subspaces, d, p):
    """x ~ y iff x ∩ y = 0, via full rank of the stacked bases."""
    k = subspaces[0].dim
    bases = _bases_array(subspaces, k, d)
    nverts = len(subspaces)
    rows = []
    target = 2 * k
    for x in range(nverts):
        stacked = np.concatenate(
            [np.broadcast_to(bases[x], (nverts, k, d)), bases], axis=1
        )
        adj = batched_rank(stacked, p) == target
        adj[x] = False
        rows.append(_pack_bool(adj))
    return rows


def adjacency_polar(subspaces, gram, p):
    """x ~ y iff perp(x) ∩ y = 0, via rank of B_x G B_y^T."""
    k = subspaces[0].dim
    d = len(gram)
    bases = _bases_array(subspaces, k, d)
    g = np.array(gram, dtype=np.int64)
    paired = (bases.reshape(-1, d) @ g % p).reshape(len(subspaces), k, d)
    rows = []
    for x in range(len(subspaces)):
        mats = np.einsum("ad,vbd->vab", paired[x], bases) % p
        adj = batched_rank(mats, p) == k
        adj[x] = False
        rows.append(_pack_bool(adj))
    return rows


def adjacency_general_position(flags, dims, d, p):
    """Flag adjacency: dim(F_a ∩ G_b) = max(0, a+b-d) for all a, b in J."""
    nverts = len(flags)
    parts = {}
    for pos, a in enumerate(dims):
        parts[a] = _bases_array([f[pos] for f in flags], a, d)
    rows = []
    for x in range(nverts):
        ok = np.ones(nverts, dtype=bool)
        for a in dims:
            for b in dims:
                stacked = np.concatenate(
                    [np.broadcast_to(parts[a][x], (nverts, a, d)), parts[b]], axis=1
                )
                ok &= batched_rank(stacked, p) == min(a + b, d)
        ok[x] = False
        rows.append(_pack_bool(ok))
    return rows


def flags_adjacent(fx, fy, d, p):
    """General-position test for a single pair of same-type flags."""
    from .algebra import rank_mod_p

    for ux in fx:
        for wy in fy:
            stacked = list(ux.basis) + list(wy.basis)
            if rank_mod_p(stacked, d, p) != min(ux.dim + wy.dim, d):
                return False
    return True


def is_self_opposite_type_set(n, types):
    return {n + 1 - j for j in types} == set(types)


@lru_cache(maxsize=None)
def build_projective_kneser(n, i, p):
    """Kneser graph of i-subspaces of F_p^{n+1}, adjacent when disjoint.

    For i > (n+1)/2 the graph is built on the duals (annihilators) of the
    (n+1-i)-subspaces, since disjointness is not the opposition relation
    there; the result is relabeled back to i-subspaces.
    """
    d = n + 1
    if i < 1 or i > n:
        raise UsageError("need 1 <= i <= n")
    spec = BuildingSpec("A", n, p, (i,))
    if 2 * i > d:
        inner = build_projective_kneser(n, d - i, p)
        dual = [
            (nullspace(flag[0].matrix(), p),) for flag in inner.vertices
        ]
        order = sorted(range(len(dual)), key=lambda t: _vertex_key(dual[t]))
        pos = {t: r for r, t in enumerate(order)}
        vertices = [dual[t] for t in order]
        adjacency = [0] * len(vertices)
        for a, b in inner.edges():
            adjacency[pos[a]] |= 1 << pos[b]
            adjacency[pos[b]] |= 1 << pos[a]
        sigma = sorted(pos[t] for t in inner.sigma)
        return KneserGraph(spec, vertices, adjacency, sigma)
    vertices = _sorted_vertices([(u,) for u in enumerate_subspaces(d, i, p)])
    adjacency = adjacency_disjoint([f[0] for f in vertices], d, p)
    frames = [
        (Subspace.coordinate(cols, d, p),)
        for cols in itertools.combinations(range(d), i)
    ]
    sigma = _sigma_indices(vertices, frames)
    return KneserGraph(spec, vertices, adjacency, sigma)


def _nested_flags(levels):
    """All chains u_1 < u_2 < ... with u_j drawn from levels[j]."""
    flags = [(u,) for u in levels[0]]
    for lvl in levels[1:]:
        flags = [f + (w,) for f in flags for w in lvl if w.contains(f[-1])]
    return flags


@lru_cache(maxsize=None)
def build_flag_kneser_A(n, types, p, allow_non_self_opposite=False):
    """Kneser graph on type-J flags of PG(n, p), J self-opposite.

    Adjacency is general position: dim(F_a ∩ G_b) = max(0, a+b-(n+1))
    for all a, b in J. For J = {1, n} this is exactly "P not in I and
    Q not in H". Non-self-opposite J is rejected unless explicitly
    allowed (used for the type-varying transfer checks).
    """
    d = n + 1
    types = tuple(sorted(set(types)))
    spec = BuildingSpec("A", n, p, types)
    if not allow_non_self_opposite and not is_self_opposite_type_set(n, types):
        raise UsageError(
            "type set %s is not self-opposite; Kneser adjacency within one "
            "type is undefined" % (types,)
        )
    levels = [list(enumerate_subspaces(d, a, p)) for a in types]
    vertices = _sorted_vertices(_nested_flags(levels))
    adjacency = adjacency_general_position(vertices, types, d, p)
    frames = []
    for chain in itertools.product(
        *[itertools.combinations(range(d), a) for a in types]
    ):
        if all(set(chain[t]) < set(chain[t + 1]) for t in range(len(chain) - 1)):
            frames.append(tuple(Subspace.coordinate(c, d, p) for c in chain))
    sigma = _sigma_indices(vertices, frames)
    return KneserGraph(spec, vertices, adjacency, sigma)


@lru_cache(maxsize=None)
def build_polar_kneser(family, n, k, p, selector="plus"):
    """Kneser graph on totally singular k-subspaces of a polar space.

    Adjacency is x ~ y iff perp(x) ∩ y = 0. For family D with k = n the
    vertex set is one oriflamme family, selected by the parity of the
    intersection dimension with the reference space <e_1, ..., e_n>.
    For family D with k = n-1 the objects carry type {n-1, n}.
    """
    model = polar_model(family, n, p)
    if k < 1 or k > n:
        raise UsageError("need 1 <= k <= Witt index %d" % n)
    if family == "D" and k == n - 1:
        types = (n - 1, n)
        spec = BuildingSpec(family, n, p, types)
    elif family == "D" and k == n:
        spec = BuildingSpec(family, n, p, (n if selector == "plus" else n - 1,), selector)
    else:
        spec = BuildingSpec(family, n, p, (k,))
    subs = enumerate_singular_subspaces(model.form, k)
    label_sets = model.frame_label_sets(k)
    if family == "D" and k == n:
        want_plus = selector == "plus"
        subs = [s for s in subs if model.in_plus_family(s) == want_plus]
        label_sets = [
            ls for ls in label_sets
            if (sum(1 for l in ls if l < 0) % 2 == 0) == (want_plus)
        ]
    vertices = _sorted_vertices([(s,) for s in subs])
    adjacency = adjacency_polar([f[0] for f in vertices], model.form.polar_gram(), p)
    frames = [(model.frame_subspace(ls),) for ls in label_sets]
    sigma = _sigma_indices(vertices, frames)
    return KneserGraph(spec, vertices, adjacency, sigma)


def build_d4_planes(p):
    """Totally singular planes of the hyperbolic D_4 space, type {3,4}."""
    return build_polar_kneser("D", 4, 3, p)


def g2_points(p):
    """Points of the G_2 hexagon, realized as the B_3 point graph."""
    if p % 2 == 0:
        raise UsageError("the B_3 model of G_2 points requires odd characteristic")
    base = build_polar_kneser("B", 3, 1, p)
    spec = BuildingSpec("G", 2, p, (1,))
    return KneserGraph(spec, base.vertices, base.adjacency, base.sigma)


def expected_sigma_size(spec):
    """Apartment size formulas, used as construction invariants."""
    n = spec.rank
    fam = spec.family
    types = spec.types
    if fam == "A":
        if len(types) == 1:
            import math

            return math.comb(n + 1, types[0])
        if types == (1, n):
            return n * (n + 1)
        return None
    if fam == "G":
        return 6
    k = types[0]
    if fam == "D" and len(types) == 2:
        import math

        return math.comb(n, n - 1) * 2 ** (n - 1)
    if fam == "D" and k in (n, n - 1) and spec.selector:
        return 2 ** (n - 1)
    import math

    return math.comb(n, k) * 2 ** k


def build_graph(spec, selector="plus"):
    """Dispatch a BuildingSpec to the right builder."""
    fam = spec.family
    if fam == "A":
        if len(spec.types) == 1:
            return build_projective_kneser(spec.rank, spec.types[0], spec.p)
        return build_flag_kneser_A(spec.rank, spec.types, spec.p)
    if fam == "G":
        return g2_points(spec.p)
    if len(spec.types) == 2:
        if fam != "D" or set(spec.types) != {spec.rank - 1, spec.rank}:
            raise UsageError("flag types are only supported for D_{n,{n-1,n}}")
        return build_polar_kneser("D", spec.rank, spec.rank - 1, spec.p)
    k = spec.types[0]
    sel = spec.selector or selector
    if fam == "D" and k == spec.rank - 1:
        # Oriflamme type n-1 is the minus family of maximal totally
        # singular subspaces; (n-1)-dimensional ones carry type {n-1, n}.
        return build_polar_kneser("D", spec.rank, spec.rank, spec.p, "minus")
    if fam == "D" and k == spec.rank:
        sel = "plus" if spec.selector is None else spec.selector
    return build_polar_kneser(fam, spec.rank, k, spec.p, sel)


def apartment_graph(family, n, types, p, selector="plus"):
    """Frame-objects-only graph, for coset cross-validation.

    Same geometric adjacency rules as the full builders, evaluated only on
    the coordinate-frame objects, so large buildings never need to be
    enumerated to check their apartments.
    """
    types = tuple(sorted(set(types)))
    if family == "A":
        d = n + 1
        frames = []
        for chain in itertools.product(
            *[itertools.combinations(range(d), a) for a in types]
        ):
            if all(set(chain[t]) < set(chain[t + 1]) for t in range(len(chain) - 1)):
                frames.append(tuple(Subspace.coordinate(c, d, p) for c in chain))
        vertices = _sorted_vertices(frames)
        if len(types) == 1 and 2 * types[0] <= d:
            adjacency = adjacency_disjoint([f[0] for f in vertices], d, p)
        else:
            adjacency = adjacency_general_position(vertices, types, d, p)
        spec = BuildingSpec("A", n, p, types)
        return KneserGraph(spec, vertices, adjacency, list(range(len(vertices))))
    if family == "G":
        family, n, types = "B", 3, (1,)
    model = polar_model(family, n, p)
    if len(types) == 2:
        if family != "D" or set(types) != {n - 1, n}:
            raise UsageError("unsupported polar flag type set %s" % (types,))
        k = n - 1
        label_sets = model.frame_label_sets(k)
    else:
        k = types[0]
        if family == "D" and k >= n - 1:
            # Oriflamme types n-1 and n are the two families of maximal
            # totally singular subspaces, split by primed-label parity.
            want = 0 if k == n else 1
            label_sets = [
                ls
                for ls in model.frame_label_sets(n)
                if sum(1 for l in ls if l < 0) % 2 == want
            ]
        else:
            label_sets = model.frame_label_sets(k)
    frames = [(model.frame_subspace(ls),) for ls in label_sets]
    vertices = _sorted_vertices(frames)
    adjacency = adjacency_polar([f[0] for f in vertices], model.form.polar_gram(), p)
    spec = BuildingSpec(family, n, p, types)
    return KneserGraph(spec, vertices, adjacency, list(range(len(vertices))))
