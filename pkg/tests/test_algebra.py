"""Tests for prime-field linear algebra: rref, subspaces, forms, perp,
and (singular) subspace enumeration."""

import itertools
import random

import pytest

from kneserlab.algebra import (
    SUPPORTED_PRIMES,
    Form,
    Subspace,
    batched_rank,
    enumerate_singular_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    intersect,
    inverse_mod,
    is_totally_singular,
    nullspace,
    perp,
    rank_mod_p,
    rref,
    singular_points,
    sum_spaces,
)
from kneserlab.buildings import polar_model
from kneserlab.errors import DegenerateFormError, UsageError


def random_subspace(rng, d, k, p):
    rows = [[rng.randrange(p) for _ in range(d)] for _ in range(k)]
    return Subspace.span(rows, d, p)


def test_field_axioms_exhaustive():
    for p in SUPPORTED_PRIMES:
        for a in range(p):
            for b in range(p):
                assert (a + b) % p == (b + a) % p
                assert (a * b) % p == (b * a) % p
                for c in range(p):
                    assert ((a + b) + c) % p == (a + (b + c)) % p
                    assert ((a * b) * c) % p == (a * (b * c)) % p
                    assert (a * (b + c)) % p == (a * b + a * c) % p
            if a:
                assert (a * inverse_mod(a, p)) % p == 1


def test_rref_trivial_identity():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rref(eye, 3, 2) == tuple(tuple(r) for r in eye)


def test_rref_pivot_normalization():
    assert rref([[1, 1, 0], [0, 1, 0]], 3, 2) == ((1, 0, 0), (0, 1, 0))


def test_rref_f3_two_rows():
    # {2e1+e3, e1+e3} spans the same plane as {e1, e3} over F_3.
    got = rref([[2, 0, 1], [1, 0, 1]], 3, 3)
    assert got == ((1, 0, 0), (0, 0, 1))
    # Proportional rows collapse: e1+2e3 = 2(2e1+e3) over F_3.
    assert rref([[2, 0, 1], [1, 0, 2]], 3, 3) == ((1, 0, 2),)


def test_rref_idempotent_and_span_canonical():
    rng = random.Random(20240601)
    for _ in range(1000):
        p = rng.choice(SUPPORTED_PRIMES)
        d = rng.randrange(2, 7)
        k = rng.randrange(1, d + 1)
        rows = [[rng.randrange(p) for _ in range(d)] for _ in range(k)]
        base = rref(rows, d, p)
        assert rref(base, d, p) == base
        shuffled = [row[:] for row in rows]
        rng.shuffle(shuffled)
        scales = [rng.randrange(1, p) for _ in shuffled]
        shuffled = [
            [(x * s) % p for x in row] for row, s in zip(shuffled, scales)
        ]
        assert rref(shuffled, d, p) == base


def test_subspace_identity_is_bytewise():
    u = Subspace.span([[1, 1, 0], [0, 1, 0]], 3, 2)
    w = Subspace.span([[1, 0, 0], [1, 1, 0]], 3, 2)
    assert u == w
    assert u.basis == w.basis
    assert hash(u) == hash(w)


def test_intersect_examples():
    u = Subspace.coordinate([0, 1], 4, 2)
    w = Subspace.coordinate([1, 2], 4, 2)
    assert intersect(u, w) == Subspace.coordinate([1], 4, 2)
    assert intersect(u, u) == u
    u = Subspace.span([[1, 1, 0, 0], [0, 0, 1, 0]], 4, 3)
    w = Subspace.span([[1, 0, 0, 0], [0, 1, 0, 0]], 4, 3)
    assert intersect(u, w) == Subspace.span([[1, 1, 0, 0]], 4, 3)


def test_sum_examples():
    e1 = Subspace.coordinate([0], 3, 2)
    e2 = Subspace.coordinate([1], 3, 2)
    assert sum_spaces(e1, e2) == Subspace.coordinate([0, 1], 3, 2)
    assert sum_spaces(e1, Subspace.zero(3, 2)) == e1
    u = Subspace.span([[1, 1, 0]], 3, 2)
    w = Subspace.span([[0, 1, 1]], 3, 2)
    total = sum_spaces(u, w)
    assert total.dim == 2
    assert total.contains_vector([1, 0, 1])


def test_modular_law_of_dimensions():
    rng = random.Random(20240602)
    for _ in range(1000):
        p = rng.choice((2, 3))
        d = rng.randrange(2, 7)
        u = random_subspace(rng, d, rng.randrange(0, d + 1), p)
        w = random_subspace(rng, d, rng.randrange(0, d + 1), p)
        assert (
            intersect(u, w).dim + sum_spaces(u, w).dim == u.dim + w.dim
        )


def test_perp_hyperbolic_point():
    # perp of <e_1> under the hyperbolic form misses only direction 1'.
    model = polar_model("D", 4, 2)
    e1 = Subspace.coordinate([0], 8, 2)
    pp = perp(e1, model.form)
    assert pp.dim == 7
    assert pp.contains(e1)
    assert not pp.contains_vector([0, 1, 0, 0, 0, 0, 0, 0])


def test_perp_full_space_is_zero():
    model = polar_model("C", 3, 3)
    full = Subspace.coordinate(range(6), 6, 3)
    assert perp(full, model.form) == Subspace.zero(6, 3)


def test_perp_symplectic_line():
    # Symplectic pairs (0,1),(2,3),(4,5): perp of <e1,e3> contains both
    # spanning vectors plus the last hyperbolic pair.
    model = polar_model("C", 3, 3)
    u = Subspace.coordinate([0, 2], 6, 3)
    assert perp(u, model.form) == Subspace.coordinate([0, 2, 4, 5], 6, 3)


def test_perp_degenerate_form_rejected():
    gram = [[0, 0], [0, 0]]
    form = Form("symmetric", gram, 3)
    u = Subspace.coordinate([0], 2, 3)
    with pytest.raises(DegenerateFormError) as exc:
        perp(u, form)
    assert exc.value.radical_dim == 2


def test_perp_involution_and_dimension():
    rng = random.Random(20240603)
    model2 = polar_model("D", 4, 2)
    model3 = polar_model("C", 3, 3)
    for _ in range(1000):
        model = rng.choice((model2, model3))
        d, p = model.dim, model.p
        u = random_subspace(rng, d, rng.randrange(0, d + 1), p)
        pp = perp(u, model.form)
        assert u.dim + pp.dim == d
        assert perp(pp, model.form) == u


def test_is_totally_singular_paper_lines():
    model = polar_model("D", 4, 2)
    assert is_totally_singular(Subspace.coordinate([0, 4], 8, 2), model.form)
    assert not is_totally_singular(
        Subspace.coordinate([0, 1], 8, 2), model.form
    )


def test_is_totally_singular_b3_vector():
    model = polar_model("B", 3, 3)
    v = Subspace.span([[0, 0, 1, 1, 0, 0, 1]], 7, 3)
    assert is_totally_singular(v, model.form)
    w = Subspace.span([[0, 0, 0, 0, 0, 0, 1]], 7, 3)
    assert not is_totally_singular(w, model.form)


def test_enumerate_subspaces_counts():
    assert len(list(enumerate_subspaces(3, 1, 2))) == 7
    assert len(list(enumerate_subspaces(4, 2, 2))) == 35
    assert len(list(enumerate_subspaces(5, 0, 3))) == 1


def test_enumerate_subspaces_matches_gaussian_binomial():
    for d, k, p in [(4, 1, 3), (4, 2, 3), (5, 2, 2), (5, 3, 2), (4, 2, 5)]:
        subs = list(enumerate_subspaces(d, k, p))
        assert len(subs) == gaussian_binomial(d, k, p)
        assert len(set(subs)) == len(subs)
        assert subs == sorted(subs)


def test_gaussian_binomial_symmetry():
    for d in range(1, 7):
        for k in range(d + 1):
            for p in (2, 3):
                assert gaussian_binomial(d, k, p) == gaussian_binomial(
                    d, d - k, p
                )


def test_singular_point_counts():
    assert len(enumerate_singular_subspaces(polar_model("D", 4, 2).form, 1)) == 135
    assert len(enumerate_singular_subspaces(polar_model("C", 3, 2).form, 1)) == 63
    assert len(enumerate_singular_subspaces(polar_model("B", 3, 3).form, 1)) == 364


def test_enumerate_singular_agrees_with_filter():
    cases = [
        ("C", 2, 2, (1, 2)),
        ("C", 2, 3, (1, 2)),
        ("D", 2, 2, (1, 2)),
        ("D", 3, 2, (1, 2, 3)),
        ("D", 3, 3, (1, 2)),
        ("B", 2, 3, (1, 2)),
        ("B", 3, 3, (1,)),
        ("C", 3, 2, (1, 2, 3)),
        ("D", 4, 2, (1, 2)),
    ]
    for family, n, p, ks in cases:
        form = polar_model(family, n, p).form
        for k in ks:
            fast = enumerate_singular_subspaces(form, k)
            slow = enumerate_singular_subspaces(form, k, via_filter=True)
            assert fast == slow, (family, n, p, k)


def test_enumerate_singular_beyond_witt_index_empty():
    form = polar_model("C", 2, 2).form
    assert enumerate_singular_subspaces(form, 3) == []


def test_singular_points_are_projective_points():
    form = polar_model("C", 3, 3).form
    pts = singular_points(form)
    assert len(pts) == len(set(pts))
    assert all(pt.dim == 1 for pt in pts)
    # Alternating form: every point is isotropic.
    assert len(pts) == gaussian_binomial(6, 1, 3)


def test_nullspace_annihilator():
    u = Subspace.span([[1, 0, 1, 0], [0, 1, 1, 0]], 4, 2)
    ns = nullspace(u.matrix(), 2)
    assert ns.dim == 2
    for row in ns.basis:
        for brow in u.basis:
            assert sum(a * b for a, b in zip(row, brow)) % 2 == 0


def test_batched_rank_matches_scalar_rank():
    rng = random.Random(20240604)
    for p in (2, 3, 5):
        mats = [
            [[rng.randrange(p) for _ in range(5)] for _ in range(4)]
            for _ in range(200)
        ]
        got = batched_rank(mats, p)
        want = [rank_mod_p(m, 5, p) for m in mats]
        assert list(got) == want


def test_unsupported_modulus_rejected():
    with pytest.raises(UsageError):
        Subspace.span([[1, 0]], 2, 4)
    with pytest.raises(UsageError):
        rref([[1, 0]], 2, 11)


def test_ragged_rows_rejected():
    with pytest.raises(UsageError):
        rref([[1, 0], [1]], 2, 2)
