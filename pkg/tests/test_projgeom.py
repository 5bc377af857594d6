import random

import pytest

from sgpencil.cyclofield import CycloElement
from sgpencil.projgeom import (
    LINE_AT_INFINITY, ProjLine, ProjPoint, Transform, apply, collinear, det3, incident, join, meet,
    normalization_transform,
)

from conftest import rand_element

I = CycloElement.zeta(4)


def rand_point(rng, order=12):
    while True:
        coords = [rand_element(rng, order, span=3, denom=3, density=0.4) for _ in range(3)]
        if any(not c.is_zero() for c in coords):
            return ProjPoint(*coords)


def rand_transform(rng, order=12):
    while True:
        m = [[rand_element(rng, order, span=3, denom=2, density=0.3) for _ in range(3)] for _ in range(3)]
        if not det3(m).is_zero():
            return Transform(m)


def test_projective_equality_and_canonical_form():
    p = ProjPoint(2, 4, 2)
    assert p == ProjPoint(1, 2, 1)
    assert p == ProjPoint(-I, -2 * I, -I)
    assert hash(p) == hash(ProjPoint(1, 2, 1))
    assert p.coords[2] == 1


def test_zero_point_rejected():
    with pytest.raises(ValueError):
        ProjPoint(0, 0, 0)


def test_incidence_examples():
    x_plus_y = ProjLine(1, 1, 0)
    assert incident(ProjPoint(1, 0, 0), LINE_AT_INFINITY)
    assert incident(ProjPoint(0, 0, 1), x_plus_y)
    assert incident(ProjPoint(1, -1, 0), x_plus_y)
    assert not incident(ProjPoint(1, 1, 1), x_plus_y)


def test_join_meet_examples():
    assert join(ProjPoint(0, 0, 1), ProjPoint(1, 0, 0)) == ProjLine(0, 1, 0)
    assert join(ProjPoint.affine(0, 0), ProjPoint(1, -1, 0)) == ProjLine(1, 1, 0)
    assert meet(ProjLine(1, 0, 0), ProjLine(0, 1, 0)) == ProjPoint(0, 0, 1)


def test_join_of_equal_points_raises():
    with pytest.raises(ValueError):
        join(ProjPoint(1, 2, 3), ProjPoint(2, 4, 6))


def test_collinear_examples():
    assert collinear(ProjPoint.affine(0, 0), ProjPoint.affine(1, 0), ProjPoint.affine(5, 0))
    assert not collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1))


def test_transform_examples():
    swap = Transform([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert apply(Transform.identity(), ProjPoint(3, I, 1)) == ProjPoint(3, I, 1)
    assert apply(swap, ProjPoint(0, 0, 1)) == ProjPoint(1, 0, 0)
    s = Transform.scaling(1 + I)
    assert s.apply(ProjPoint(5, -1, 0)) == ProjPoint(5, -1, 0)


def test_singular_transform_rejected():
    with pytest.raises(ValueError):
        Transform([[1, 0, 0], [1, 0, 0], [0, 0, 1]])


@pytest.mark.parametrize("p,l,expected", [
    (ProjPoint(0, 0, 1), ProjLine(1, 0, 0), [[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
    (ProjPoint(1, 0, 0), LINE_AT_INFINITY, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    (ProjPoint(0, 1, 0), LINE_AT_INFINITY, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
])
def test_normalization_examples(p, l, expected):
    t = normalization_transform(p, l)
    assert t == Transform(expected)
    assert t.apply(p) == ProjPoint(1, 0, 0)
    assert t.apply_line(l) == LINE_AT_INFINITY


def test_join_meet_duality():
    rng = random.Random(1)
    for _ in range(100):
        p, q = rand_point(rng), rand_point(rng)
        if p == q:
            continue
        line = join(p, q)
        assert incident(p, line) and incident(q, line)
        other = rand_point(rng)
        if other == p:
            continue
        l2 = join(p, other)
        if l2 != line:
            assert meet(line, l2) == p


def test_collinearity_invariant_under_transforms():
    rng = random.Random(2)
    for _ in range(60):
        t = rand_transform(rng)
        p, q = rand_point(rng), rand_point(rng)
        if p == q:
            continue
        r = rand_point(rng) if rng.random() < 0.5 else ProjPoint(*[a + 2 * b for a, b in zip(p, q)])
        assert collinear(p, q, r) == collinear(t.apply(p), t.apply(q), t.apply(r))


def test_transform_preserves_incidence():
    rng = random.Random(3)
    for _ in range(40):
        t = rand_transform(rng)
        p, q = rand_point(rng), rand_point(rng)
        if p == q:
            continue
        line = join(p, q)
        assert incident(t.apply(p), t.apply_line(line))
        assert t.inverse().apply(t.apply(p)) == p


def test_normalization_postconditions_random():
    rng = random.Random(4)
    for _ in range(100):
        p = rand_point(rng)
        q = rand_point(rng)
        if p == q:
            continue
        line = join(p, q)
        t = normalization_transform(p, line)
        assert t.apply(p) == ProjPoint(1, 0, 0)
        assert t.apply_line(line) == LINE_AT_INFINITY


def test_normalization_requires_incidence():
    with pytest.raises(ValueError):
        normalization_transform(ProjPoint(0, 0, 1), LINE_AT_INFINITY)
