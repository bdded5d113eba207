import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from gradedvol.polytope import convex_hull, det, simplex_volume


def test_det_matches_numpy():
    rng = random.Random(3)
    for n in range(1, 6):
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert det(m) == round(np.linalg.det(np.array(m, dtype=float)))


def test_simplex_volume():
    assert simplex_volume([(0, 0), (2, 0), (0, 3)]) == 3
    assert simplex_volume([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == Fraction(1, 6)


def test_triangle_with_interior_points():
    verts, vol = convex_hull([(0, 0), (2, 0), (0, 2), (Fraction(1, 2), Fraction(1, 2)), (1, 1)])
    assert vol == 2
    assert sorted(verts) == [(0, 0), (0, 2), (2, 0)]


@pytest.mark.parametrize("d", [3, 4])
def test_unit_cube(d):
    verts, vol = convex_hull(list(itertools.product([0, 1], repeat=d)) + [(Fraction(1, 2),) * d])
    assert vol == 1
    assert len(verts) == 2**d


def test_lower_dimensional_sets_have_zero_volume():
    assert convex_hull([(0, 0, 0), (1, 1, 0), (2, 2, 0), (0, 1, 0)])[1] == 0
    assert convex_hull([(1,)])[1] == 0
    assert convex_hull([(0,), (Fraction(5, 2),)])[1] == Fraction(5, 2)


@pytest.mark.parametrize("seed", range(8))
def test_random_hulls_match_scipy(seed):
    rng = random.Random(seed)
    d = 2 + seed % 2
    pts = [tuple(Fraction(rng.randint(0, 40), rng.randint(1, 6)) for _ in range(d)) for _ in range(30)]
    _, vol = convex_hull(pts)
    ref = ConvexHull(np.array([[float(x) for x in p] for p in pts])).volume
    assert abs(float(vol) - ref) < 1e-9 * max(1.0, ref)
