import random
from math import comb

import pytest

from sgpencil.configlib import Configuration, fermat_config, hesse_config, random_pencil_config
from sgpencil.incidence import (
    find_concurrency_points, is_collinear, is_sylvester_gallai, ordinary_lines, pencil_structure,
    spanned_lines, theorem_bound_report,
)
from sgpencil.projgeom import ProjPoint, collinear

from test_projgeom import rand_transform

APEX = ProjPoint(0, 0, 1)
TRIANGLE = Configuration(4, (ProjPoint.affine(0, 0), ProjPoint.affine(1, 0), ProjPoint.affine(0, 1)))
GENERAL4 = Configuration(4, TRIANGLE.points + (ProjPoint.affine(3, 5),))


def brute_force_ordinary(c):
    # independent oracle: count collinear partners of every pair
    pts = c.points
    n = len(pts)
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            if not any(collinear(pts[i], pts[j], pts[k]) for k in range(n) if k not in (i, j)):
                out.add((i, j))
    return out


def test_hesse_lines():
    lines = spanned_lines(hesse_config())
    assert len(lines) == 12
    assert all(s.multiplicity == 3 for s in lines)
    assert ordinary_lines(hesse_config()) == []
    assert is_sylvester_gallai(hesse_config())


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_fermat_line_count(n):
    c = fermat_config(n)
    lines = spanned_lines(c)
    assert len(lines) == n * n + 3
    assert not ordinary_lines(c)


def test_fermat_five_is_sg():
    assert is_sylvester_gallai(fermat_config(5))


def test_small_examples():
    assert [s.multiplicity for s in spanned_lines(TRIANGLE)] == [2, 2, 2]
    assert len(ordinary_lines(GENERAL4)) == 6
    assert len(ordinary_lines(fermat_config(2))) == 3
    assert not is_sylvester_gallai(fermat_config(1))
    assert is_collinear(fermat_config(1))


def test_too_small_inputs():
    with pytest.raises(ValueError):
        spanned_lines(Configuration(4, (ProjPoint(1, 0, 0),)))
    with pytest.raises(ValueError):
        is_sylvester_gallai(Configuration(4, TRIANGLE.points[:2]))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_fermat_pencil(n):
    ps = pencil_structure(fermat_config(n), APEX)
    assert ps.m == n + 2
    assert sorted(ps.counts) == [1] * n + [n, n]
    assert not ps.apex_in_set
    r = theorem_bound_report(fermat_config(n), APEX)
    assert (r.m, r.max_line_count, r.bound, r.exceeds, r.sg) == (n + 2, n, n, False, True)
    assert r.consistent


def test_hesse_pencil_at_every_point():
    h = hesse_config()
    for p in h:
        ps = pencil_structure(h, p)
        assert ps.apex_in_set
        assert ps.m == 4 and ps.counts == (2, 2, 2, 2)


def test_triangle_pencil_at_vertex():
    ps = pencil_structure(TRIANGLE, TRIANGLE.points[0])
    assert ps.m == 2 and ps.counts == (1, 1)


def test_find_concurrency_points():
    found = dict(find_concurrency_points(fermat_config(3), 5))
    for p in (ProjPoint(0, 0, 1), ProjPoint(0, 1, 0), ProjPoint(1, 0, 0)):
        assert found[p] == 5
    hesse = find_concurrency_points(hesse_config(), 4)
    assert sorted(map(repr, (p for p, _ in hesse))) == sorted(map(repr, hesse_config().points))
    diag = find_concurrency_points(GENERAL4, 2)
    assert len(diag) == 3 and all(m == 2 for _, m in diag)


def test_bound_report_on_exceeding_config():
    c = random_pencil_config(3, (2, 1, 1), seed=0)
    r = theorem_bound_report(c, c.apex)
    assert r.exceeds and not r.sg and r.consistent


def test_pair_count_identity():
    rng = random.Random(5)
    configs = [fermat_config(n) for n in range(2, 6)]
    for s in range(20):
        m = rng.randint(2, 5)
        configs.append(random_pencil_config(m, [rng.randint(1, 3) for _ in range(m)],
                                            include_apex=bool(s % 2), seed=s))
    for c in configs:
        total = sum(comb(s.multiplicity, 2) for s in spanned_lines(c))
        assert total == comb(len(c), 2)


def test_ordinary_lines_match_brute_force():
    for s in range(15):
        c = random_pencil_config(3, (3, 2, 1), include_apex=bool(s % 2), seed=s)
        assert {s.members for s in ordinary_lines(c)} == brute_force_ordinary(c)
    assert {s.members for s in ordinary_lines(fermat_config(2))} == brute_force_ordinary(fermat_config(2))


def test_ordinary_count_invariant_under_transforms():
    rng = random.Random(6)
    c = random_pencil_config(3, (3, 2, 1), seed=3)
    base = len(ordinary_lines(c))
    for _ in range(50):
        t = rand_transform(rng, order=4)
        image = Configuration(4, tuple(t.apply(p) for p in c))
        assert len(ordinary_lines(image)) == base


def test_sg_configs_are_always_consistent():
    for c in (fermat_config(3), fermat_config(4)):
        for p, _ in find_concurrency_points(c, 8):
            assert theorem_bound_report(c, p).consistent
