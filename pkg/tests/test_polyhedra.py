import random
from fractions import Fraction as F

import pytest

from tropsplit.cones import Cone
from tropsplit.exact import mat, vec
from tropsplit.polyhedra import Polyhedron


def unit_square():
    return Polyhedron.from_hrep(
        2, ineqs=[((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)]
    )


def test_square_basics():
    sq = unit_square()
    assert not sq.is_empty()
    assert sq.dim() == 2
    assert set(sq.vertices) == {vec((a, b)) for a in (0, 1) for b in (0, 1)}
    assert sq.relative_interior_point() == vec((F(1, 2), F(1, 2)))


def test_empty_polyhedron():
    p = Polyhedron.from_hrep(1, ineqs=[((1,), 0), ((-1,), -1)])
    assert p.is_empty() and p.dim() == -1
    with pytest.raises(ValueError):
        p.relative_interior_point()


def test_unbounded_quadrant():
    q = Polyhedron.from_hrep(2, ineqs=[((-1, 0), 0), ((0, -1), 0)])
    assert q.dim() == 2
    assert set(q.recession_rays) == {vec((1, 0)), vec((0, 1))}
    assert q.contains((5, 7)) and not q.contains((-1, 0))


def test_face_recognition():
    sq = unit_square()
    edge = Polyhedron.from_vrep(2, vertices=[(1, 0), (1, 1)])
    corner = Polyhedron.from_vrep(2, vertices=[(1, 1)])
    diag = Polyhedron.from_vrep(2, vertices=[(0, 0), (1, 1)])
    assert edge.is_face_of(sq)
    assert corner.is_face_of(sq) and corner.is_face_of(edge)
    assert not diag.is_face_of(sq)
    assert sq.is_face_of(sq)


def test_vrep_hrep_roundtrip_random():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(1, 3)
        verts = [[rng.randint(-3, 3) for _ in range(n)]
                 for _ in range(rng.randint(1, 4))]
        rays = [[rng.randint(-2, 2) for _ in range(n)]
                for _ in range(rng.randint(0, 2))]
        p = Polyhedron.from_vrep(n, vertices=verts, rays=rays)
        ineqs, eqs = p.hrep()
        back = Polyhedron.from_hrep(n, ineqs=ineqs, eqs=eqs)
        assert back.same_set(p)


def test_direction_space_of_segment():
    seg = Polyhedron.from_vrep(2, vertices=[(0, 0), (2, 4)])
    assert seg.direction_space() == [vec((1, 2))]


def test_relative_interior_avoids_proper_faces():
    p = Polyhedron.from_vrep(2, vertices=[(0, 0), (2, 0), (0, 2)])
    x = p.relative_interior_point()
    ineqs, _ = p.hrep()
    for a, b in ineqs:
        assert sum(ai * xi for ai, xi in zip(a, x)) < b


def test_image_dim_equality_for_injective_maps():
    c = Cone.from_rays([(1, 0), (1, 1)])
    M = mat([(1, 1), (0, 1)])  # invertible
    assert c.linear_image(M).dim() == c.dim()
