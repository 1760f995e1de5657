"""Coset-level vs geometric apartment cross-validation.

The abstract Kneser graph on parabolic cosets of the Weyl group must be
isomorphic to the subgraph the geometric model induces on its coordinate
frame, under the canonical labeling that sends a coset representative w
to the frame object spanned by the images of the first basis directions.
This is checked by the explicit bijection, never by isomorphism search,
and is the anti-drift guard for the adopted general-position adjacency.
"""

from __future__ import annotations

from .buildings import apartment_graph, polar_model
from .algebra import Subspace
from .coxeter import coset_kneser, weyl_group
from .errors import UsageError

WEYL_FAMILY = {"A": "A", "B": "B", "C": "B", "D": "D"}


def frame_object_for_coset(family, n, types, p, w):
    """Frame object named by the coset representative w."""
    if family == "A":
        d = n + 1
        return tuple(
            Subspace.coordinate([w[t] - 1 for t in range(a)], d, p) for a in types
        )
    model = polar_model(family, n, p)
    types = tuple(sorted(types))
    if len(types) == 2:
        if family != "D" or set(types) != {n - 1, n}:
            raise UsageError("unsupported polar type set %s" % (types,))
        labels = w[: n - 1]
    elif types[0] == n - 1 and family == "D":
        labels = w[: n - 1] + (-w[n - 1],)
    else:
        labels = w[: types[0]]
    return (model.frame_subspace(labels),)


def cross_validate(family, n, types, p):
    """Compare coset and geometric apartment graphs; returns a report.

    The report's "ok" field is False iff the vertex bijection breaks or
    some pair differs in adjacency, in which case "mismatch" holds the
    first offending pair.
    """
    if family not in WEYL_FAMILY:
        raise UsageError("cross-validation supports families A, B, C, D")
    types = tuple(sorted(set(types)))
    group = weyl_group(WEYL_FAMILY[family], n)
    quotient = coset_kneser(group, types)
    geo_family = family
    geometric = apartment_graph(geo_family, n, types, p)
    if quotient.num_vertices != geometric.num_vertices:
        return {
            "ok": False,
            "mismatch": {
                "kind": "vertex_count",
                "coset": quotient.num_vertices,
                "geometric": geometric.num_vertices,
            },
        }
    index_of = {flag: i for i, flag in enumerate(geometric.vertices)}
    mapping = []
    for w in quotient.representatives:
        flag = frame_object_for_coset(family, n, types, p, w)
        if flag not in index_of:
            return {
                "ok": False,
                "mismatch": {"kind": "unmapped_coset", "representative": list(w)},
            }
        mapping.append(index_of[flag])
    if len(set(mapping)) != len(mapping):
        return {"ok": False, "mismatch": {"kind": "labeling_not_injective"}}
    nverts = quotient.num_vertices
    for a in range(nverts):
        for b in range(a + 1, nverts):
            left = quotient.is_adjacent(a, b)
            right = geometric.is_adjacent(mapping[a], mapping[b])
            if left != right:
                return {
                    "ok": False,
                    "mismatch": {
                        "kind": "adjacency",
                        "cosets": [a, b],
                        "coset_adjacent": left,
                        "geometric_adjacent": right,
                    },
                }
    return {
        "ok": True,
        "family": family,
        "rank": n,
        "types": list(types),
        "p": p,
        "vertices": nverts,
        "edges": geometric.num_edges(),
    }
