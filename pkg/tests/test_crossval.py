"""Tests for the coset-vs-geometry apartment cross-validation."""

import pytest

from kneserlab.crossval import cross_validate, frame_object_for_coset
from kneserlab.errors import UsageError


GRID = [
    ("A", 2, (1,)),
    ("A", 2, (2,)),
    ("A", 2, (1, 2)),
    ("A", 3, (1,)),
    ("A", 3, (2,)),
    ("A", 3, (3,)),
    ("A", 3, (1, 3)),
    ("A", 4, (1,)),
    ("A", 4, (2,)),
    ("A", 4, (3,)),
    ("A", 4, (4,)),
    ("A", 4, (1, 4)),
    ("A", 4, (2, 3)),
    ("C", 2, (1,)),
    ("C", 2, (2,)),
    ("C", 3, (1,)),
    ("C", 3, (2,)),
    ("C", 3, (3,)),
    ("C", 4, (1,)),
    ("C", 4, (2,)),
    ("C", 4, (3,)),
    ("C", 4, (4,)),
    ("D", 4, (1,)),
    ("D", 4, (2,)),
    ("D", 4, (3,)),
    ("D", 4, (4,)),
    ("D", 4, (3, 4)),
]


@pytest.mark.parametrize("family,n,types", GRID)
@pytest.mark.parametrize("p", [2, 3])
def test_cross_validation_grid(family, n, types, p):
    report = cross_validate(family, n, types, p)
    assert report["ok"], report["mismatch"]
    assert report["vertices"] > 0


@pytest.mark.parametrize("types", [(1,), (2,), (3,)])
@pytest.mark.parametrize("p", [3, 5])
def test_cross_validation_b3_odd_characteristic(types, p):
    report = cross_validate("B", 3, types, p)
    assert report["ok"], report["mismatch"]


def test_frame_object_labeling_is_injective():
    from kneserlab.coxeter import coset_kneser, weyl_group

    q = coset_kneser(weyl_group("D", 4), (3,))
    flags = {
        frame_object_for_coset("D", 4, (3,), 2, w) for w in q.representatives
    }
    assert len(flags) == q.num_vertices


def test_unknown_family_rejected():
    with pytest.raises(UsageError):
        cross_validate("G", 2, (1,), 3)
