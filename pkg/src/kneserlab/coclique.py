"""Coclique machinery: apartment cocliques, extension sets, UCEP.

The UCEP verdict for a graph pair (Gamma, Sigma) is decided per maximal
coclique C of Sigma by a direct adjacency scan of the extension set D
(all vertices nonadjacent to every member of C): the property holds iff
no D contains an edge. The span criterion through the Pluecker embedding
is sufficient but not necessary, so it lives in a separate instrument
(span_check) and never decides the verdict.

All vertex sets here are bit masks over the graph's vertex indices, and
witnesses are chosen lexicographically least so parallel runs produce
bytewise identical reports.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .algebra import rank_mod_p
from .errors import FixtureIntegrityError, SearchBudgetExceeded, UsageError
from .exterior import all_keys, plucker

MAX_SIGMA = 64


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def _mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bron_kerbosch_pivot(adj, candidates):
    """Maximal cliques of the graph given by bitmask rows, via pivoting."""

    def expand(r, p, x):
        if not p and not x:
            yield r
            return
        pivot_pool = p | x
        best_u, best_cover = -1, -1
        for u in _bits(pivot_pool):
            cover = bin(p & adj[u]).count("1")
            if cover > best_cover:
                best_u, best_cover = u, cover
        for v in _bits(p & ~adj[best_u]):
            bit = 1 << v
            yield from expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    yield from expand(0, candidates, 0)


def sigma_coclique_graph(graph):
    """Complement adjacency of Sigma, on local positions 0..|Sigma|-1."""
    sigma = graph.sigma
    npos = len(sigma)
    local = []
    for a, va in enumerate(sigma):
        row = 0
        for b, vb in enumerate(sigma):
            if a != b and not graph.is_adjacent(va, vb):
                row |= 1 << b
        local.append(row)
    return sigma, local, (1 << npos) - 1


def maximal_cocliques_sigma(graph):
    """All maximal cocliques of the apartment subgraph, as sorted tuples
    of graph vertex indices, enumerated in a deterministic order."""
    sigma, comp, full = sigma_coclique_graph(graph)
    if len(sigma) > MAX_SIGMA:
        raise UsageError(
            "apartment has %d > %d vertices; use sampling mode" % (len(sigma), MAX_SIGMA)
        )
    out = []
    for clique in bron_kerbosch_pivot(comp, full):
        out.append(tuple(sigma[i] for i in _bits(clique)))
    out.sort()
    return out


def is_coclique(graph, members):
    members = list(members)
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if graph.is_adjacent(members[a], members[b]):
                return False
    return True


def extension_set(graph, members):
    """Bit mask of all vertices nonadjacent to every member of C."""
    members = sorted(set(members))
    if not is_coclique(graph, members):
        raise UsageError("extension_set requires a coclique")
    mask = graph.full_mask
    for c in members:
        mask &= ~graph.adjacency[c]
    return mask


def _first_violation(graph, d_mask):
    """Least (x, y) with x < y adjacent inside the mask, or None."""
    for v in _bits(d_mask):
        hits = graph.adjacency[v] & d_mask
        hits >>= v + 1
        if hits:
            return (v, (v + 1) + ((hits & -hits).bit_length() - 1))
    return None


def sample_maximal_cocliques(graph, k, seed):
    """k pseudo-random maximal cocliques of Sigma (greedy, seeded)."""
    rng = random.Random(seed)
    out = []
    sigma = list(graph.sigma)
    for _ in range(k):
        order = sigma[:]
        rng.shuffle(order)
        chosen = []
        for v in order:
            if all(not graph.is_adjacent(v, c) for c in chosen):
                chosen.append(v)
        out.append(tuple(sorted(chosen)))
    return out


@dataclass
class UcepReport:
    spec: dict
    verdict: str
    cocliques_checked: int
    mode: str
    witness: dict = None
    seed: int = None
    elapsed_ms: float = 0.0
    schema: int = 1

    def to_dict(self):
        d = {
            "schema": self.schema,
            "spec": self.spec,
            "verdict": self.verdict,
            "cocliques_checked": self.cocliques_checked,
            "mode": self.mode,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        if self.seed is not None:
            d["seed"] = self.seed
        return d


def _scan_cocliques(graph, cocliques):
    """Returns (checked, least violation) over the given cocliques."""
    best = None
    for coc in cocliques:
        mask = graph.full_mask
        for c in coc:
            mask &= ~graph.adjacency[c]
        pair = _first_violation(graph, mask)
        if pair is not None:
            cand = (coc, pair[0], pair[1])
            if best is None or cand < best:
                best = cand
    return len(cocliques), best


def check_ucep(graph, mode="all", samples=None, seed=None, jobs=1):
    """Decide the unique coclique extension property for (Gamma, Sigma)."""
    start = time.perf_counter()
    if mode == "all":
        cocliques = maximal_cocliques_sigma(graph)
    elif mode == "sample":
        if samples is None:
            raise UsageError("sampling mode needs a sample count")
        if seed is None:
            seed = 0
        cocliques = sample_maximal_cocliques(graph, samples, seed)
    else:
        raise UsageError("mode must be 'all' or 'sample'")
    if jobs and jobs > 1 and len(cocliques) >= 4 * jobs:
        checked, best = _scan_parallel(graph, cocliques, jobs)
    else:
        checked, best = _scan_cocliques(graph, cocliques)
    elapsed = (time.perf_counter() - start) * 1000.0
    spec_dict = graph.spec.to_dict() if hasattr(graph.spec, "to_dict") else dict(graph.spec)
    if best is None:
        return UcepReport(spec_dict, "holds", checked, mode, None, seed, elapsed)
    coc, x, y = best
    witness = {
        "coclique": [_vertex_payload(graph, v) for v in coc],
        "coclique_indices": list(coc),
        "x": _vertex_payload(graph, x),
        "y": _vertex_payload(graph, y),
        "x_index": x,
        "y_index": y,
    }
    return UcepReport(spec_dict, "fails", checked, mode, witness, seed, elapsed)


_PARALLEL_GRAPH = None


def _scan_chunk(args):
    lo, hi, cocliques = args
    return _scan_cocliques(_PARALLEL_GRAPH, cocliques[lo:hi])


def _scan_parallel(graph, cocliques, jobs):
    import multiprocessing as mp

    global _PARALLEL_GRAPH
    _PARALLEL_GRAPH = graph
    try:
        ctx = mp.get_context("fork")
        chunk = (len(cocliques) + jobs - 1) // jobs
        tasks = [
            (lo, min(lo + chunk, len(cocliques)), cocliques)
            for lo in range(0, len(cocliques), chunk)
        ]
        with ctx.Pool(jobs) as pool:
            results = pool.map(_scan_chunk, tasks)
    finally:
        _PARALLEL_GRAPH = None
    checked = sum(c for c, _ in results)
    violations = [b for _, b in results if b is not None]
    return checked, (min(violations) if violations else None)


def _vertex_payload(graph, v):
    return [[list(row) for row in part.basis] for part in graph.vertices[v]]


def max_coclique(graph, budget=None):
    """Exact maximum coclique size and one witness, by branch and bound.

    Maximum clique search on the complement with a greedy-coloring bound;
    vertices are explored in canonical order so the witness is
    reproducible. Raises SearchBudgetExceeded with bounds if the node
    budget runs out.
    """
    n = graph.num_vertices
    full = graph.full_mask
    comp = [(~graph.adjacency[v] & full) & ~(1 << v) for v in range(n)]
    best_size = 0
    best_set = 0
    nodes = 0

    def expand(r_size, r_mask, p):
        nonlocal best_size, best_set, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded(best_size, n)
        if not p:
            if r_size > best_size:
                best_size, best_set = r_size, r_mask
            return
        order = []
        bounds = []
        uncolored = p
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~comp[v] & ~(1 << v)
                uncolored &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        for idx in range(len(order) - 1, -1, -1):
            if r_size + bounds[idx] <= best_size:
                return
            v = order[idx]
            bit = 1 << v
            expand(r_size + 1, r_mask | bit, p & comp[v])
            p &= ~bit

    expand(0, 0, full)
    return best_size, tuple(_bits(best_set))


def enumerate_maximal_cocliques_full(graph, max_cliques=None):
    """All maximal cocliques of the whole graph (not just Sigma).

    Used for the second-largest-size question; optionally capped, raising
    SearchBudgetExceeded when the cap is hit.
    """
    full = graph.full_mask
    comp = [(~graph.adjacency[v] & full) & ~(1 << v) for v in range(graph.num_vertices)]
    out = []
    for clique in bron_kerbosch_pivot(comp, full):
        out.append(clique)
        if max_cliques is not None and len(out) > max_cliques:
            raise SearchBudgetExceeded(0, graph.num_vertices)
    return out


SPAN_SUPPORTED = ("A-single", "D-lines")


def _span_kind(graph):
    spec = graph.spec
    if spec.family == "A" and len(spec.types) == 1:
        return "A-single"
    if spec.family == "D" and spec.types == (2,):
        return "D-lines"
    return None


def span_check(graph, members):
    """Instrumented span criterion: psi(x) in <psi(C)> for all x in D.

    Only meaningful for graphs whose vertices are single subspaces with a
    Pluecker embedding (type-A single-type graphs and D_{n,2}).
    """
    if _span_kind(graph) is None:
        raise UsageError(
            "span_check supports single-type A graphs and D_{n,2} only"
        )
    members = sorted(set(members))
    d_mask = extension_set(graph, members)
    p = graph.spec.p
    sample = graph.vertices[0][0]
    d, m = sample.ambient, sample.dim
    keys = all_keys(d, m)
    key_pos = {k: i for i, k in enumerate(keys)}

    def coeff_vector(v):
        mv = plucker(graph.vertices[v][0])
        vec = [0] * len(keys)
        for k, c in mv.terms.items():
            vec[key_pos[k]] = c
        return vec

    gen_rows = [coeff_vector(c) for c in members]
    base_rank = rank_mod_p(gen_rows, len(keys), p)
    for x in _bits(d_mask):
        if rank_mod_p(gen_rows + [coeff_vector(x)], len(keys), p) != base_rank:
            return False
    return True
