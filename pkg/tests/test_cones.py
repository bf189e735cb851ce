import random
from fractions import Fraction as F

import pytest

from tropsplit.cones import (
    Cone,
    is_increasing,
    is_increasing_inductive,
    normal_cone_at_first_axis,
    tail_of_sequence_in,
)
from tropsplit.exact import mat, vec

# -- conversions ---------------------------------------------------------------


def test_orthant_h_to_v():
    c = Cone.from_hrep([(1, 0), (0, 1)])
    assert set(c.rays) == {vec((1, 0)), vec((0, 1))}
    assert c.lineality == ()


def test_halfplane_h_to_v():
    c = Cone.from_hrep([(1, 0)])
    assert c.rays == (vec((1, 0)),)
    assert c.lineality == (vec((0, 1)),)


def test_line_slice_gives_single_ray():
    # {x - 2y = 0, x >= 0}: solving the one-dimensional system by hand
    # gives the ray through (2, 1)
    c = Cone.from_hrep([(1, 0)], eqs=[(1, -2)])
    assert c.rays == (vec((2, 1)),)
    assert c.lineality == ()


def test_roundtrip_examples():
    for rays, lin in [
        ([(1, 0), (0, 1)], []),
        ([(2, 1)], []),
        ([(1, 0)], [(0, 1)]),
        ([(1, 0, 0), (1, 1, 0), (1, 1, 1)], []),
        ([], [(1, 2, 3)]),
    ]:
        c = Cone.from_rays(rays, lin, ambient_dim=len((rays + lin)[0]))
        c2 = Cone.from_hrep(c.ineqs, c.eqs, ambient_dim=c.ambient_dim)
        assert c2.same_set(c)


# -- dim / contains / relative interior -----------------------------------------


def test_dim_examples():
    assert Cone.zero(2).dim() == 0
    assert Cone.from_rays([(2, 1)]).dim() == 1
    assert Cone.full(3).dim() == 3


def test_contains_examples():
    orthant = Cone.from_hrep([(1, 0), (0, 1)])
    assert orthant.contains((1, 2))
    ray = Cone.from_rays([(2, 1)])
    assert not ray.contains((1, 1))
    assert ray.contains((1, F(1, 2)))


def test_relative_interior_examples():
    orthant = Cone.from_hrep([(1, 0), (0, 1)])
    assert orthant.relative_interior_point() == vec((1, 1))
    ray = Cone.from_rays([(2, 1)])
    assert ray.relative_interior_point() == vec((2, 1))
    half = Cone.from_hrep([(1, 0)])
    p = half.relative_interior_point()
    assert p == vec((1, 0))
    # strictness oracle: the point satisfies every facet strictly
    for a in half.minimal().ineqs:
        assert sum(x * y for x, y in zip(a, p)) > 0
    with pytest.raises(ValueError):
        Cone.zero(2).relative_interior_point()


def test_relative_interior_of_hidden_line():
    c = Cone.from_rays([(1, 1), (-1, -1)])
    p = c.relative_interior_point()
    assert c.contains(p) and p != vec((0, 0))


# -- images and preimages ---------------------------------------------------------


def test_image_identity():
    orthant = Cone.from_hrep([(1, 0), (0, 1)])
    img = orthant.linear_image(mat([(1, 0), (0, 1)]))
    assert img.same_set(orthant)


def test_image_under_quotient_by_diagonal():
    # (2,1) = (3/2)(1,1) + (1/2)(1,-1): the image of the ray through (2,1)
    # in the quotient by span(1,1) is the positive ray, the image of (1,-1)
    from tropsplit.exact import quotient_projection

    P = quotient_projection((1, 1))
    img = Cone.from_rays([(2, 1)]).linear_image(P)
    ref = Cone.from_rays([vec((1, -1))]).linear_image(P)
    assert img.dim() == 1 and img.lineality == ()
    assert img.same_set(ref)


def test_preimage_of_zero_under_projection():
    proj = mat([(1, 0)])
    pre = Cone.zero(1).preimage(proj)
    assert pre.same_set(Cone.from_rays([], [(0, 1)], ambient_dim=2))


def test_image_dim_bound():
    rng = random.Random(99)
    for _ in range(30):
        n = rng.randint(1, 3)
        m = rng.randint(1, 3)
        rays = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(1, 4))]
        M = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(m)]
        c = Cone.from_rays(rays, ambient_dim=n)
        img = c.linear_image(mat(M), codim=m)
        assert img.dim() <= c.dim()


# -- increasing cones -------------------------------------------------------------


def test_increasing_orthant():
    for n in (1, 2, 3):
        rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
        assert is_increasing(Cone.from_hrep(rows))


def test_increasing_diagonal_fails():
    c = Cone.from_hrep([(1, 0), (0, 1)], eqs=[(1, -1)])
    assert not is_increasing(c)


def test_increasing_staircase():
    # {x1 >= x2 >= 0}: slice x2 = 0 is the x1-ray (hand oracle: dim 1)
    c = Cone.from_hrep([(1, -1), (0, 1)])
    assert is_increasing(c)


def test_increasing_rejects_non_orthant():
    with pytest.raises(ValueError):
        is_increasing(Cone.from_rays([(1, -1)]))


def _random_orthant_cone(rng, n):
    """Random cone inside the nonnegative orthant, with structured zero
    patterns so that non-increasing slices occur frequently."""
    k = rng.randint(1, n + 1)
    rays = []
    for _ in range(k):
        r = [0] * n
        support = rng.sample(range(n), rng.randint(1, n))
        for i in support:
            r[i] = rng.randint(0, 4)
        if all(x == 0 for x in r):
            r[rng.randrange(n)] = 1
        rays.append(r)
    return Cone.from_rays(rays, ambient_dim=n)


def test_increasing_equivalences_random():
    """Slice definition == inductive characterization == sequence-tail
    test, on >= 50 random exact cones in dimensions <= 4."""
    rng = random.Random(424242)
    checked = 0
    seen_true = seen_false = 0
    while checked < 60:
        n = rng.randint(1, 4)
        c = _random_orthant_cone(rng, n)
        by_slices = is_increasing(c)
        by_induction = is_increasing_inductive(c)
        scales = [F(rng.randint(1, 5)) for _ in range(n)]
        by_tail = tail_of_sequence_in(c.minimal(), scales)
        assert by_slices == by_induction == by_tail
        checked += 1
        seen_true += by_slices
        seen_false += not by_slices
    assert seen_true >= 5 and seen_false >= 5


def test_increasing_generic_blocks_full_dim():
    """A cone containing increasing combinations of per-block directions is
    top-dimensional exactly when the directions are effectively generic
    (each avoids the proper block slices of the cone's span)."""
    from tropsplit.exact import is_generic_wrt, kernel_basis, rank

    rng = random.Random(1001)
    for trial in range(60):
        dims = [rng.randint(1, 2) for _ in range(rng.randint(1, 2))]
        k = len(dims)
        n = sum(dims)
        etas = []
        for d in dims:
            if d == 1:
                etas.append([rng.choice([1, 2, 3])])
            else:
                etas.append([rng.randint(0, 4), rng.randint(1, 4)])
        # increasing-sequence samples: coefficient tuples (nu^{k-1}, ..., 1)
        gens = []
        for nu in range(1, k + 2):
            coeffs = [F(nu) ** (k - i - 1) for i in range(k)]
            g = []
            for cfac, eta in zip(coeffs, etas):
                g.extend(cfac * F(x) for x in eta)
            gens.append(g)
        if trial % 3 == 0:
            # extra spanning rays produce genuinely generic instances
            for j in range(n):
                gens.append([1 if i == j else 0 for i in range(n)])
        c = Cone.from_rays(gens, ambient_dim=n)
        # per-block effective genericity relative to the span of C
        span = list(c.rays) + list(c.lineality)
        complement = kernel_basis(mat(span), n)
        generic = True
        offset = 0
        for eta, d in zip(etas, dims):
            rows = [row[offset : offset + d] for row in complement]
            rows = [r for r in rows if any(x != 0 for x in r)]
            if rows:
                slice_basis = kernel_basis(mat(rows), d)
                if rank(mat(slice_basis)) < d:
                    generic = generic and is_generic_wrt(
                        [F(x) for x in eta], [slice_basis]
                    ).generic
            offset += d
        if generic:
            assert c.dim() == n
        if c.dim() < n:
            assert not generic


def test_roundtrip_random():
    """Double-description round-trips preserve the point set on >= 50
    random cones in dimensions <= 4."""
    rng = random.Random(2718)
    for trial in range(60):
        n = rng.randint(1, 4)
        if trial % 2 == 0:
            rays = [[rng.randint(-4, 4) for _ in range(n)]
                    for _ in range(rng.randint(0, n + 2))]
            lin = [[rng.randint(-2, 2) for _ in range(n)]
                   for _ in range(rng.randint(0, 1))]
            c = Cone.from_rays(rays, lin, ambient_dim=n)
            back = Cone.from_hrep(c.ineqs, c.eqs, ambient_dim=n)
        else:
            ineqs = [[rng.randint(-3, 3) for _ in range(n)]
                     for _ in range(rng.randint(0, n + 2))]
            eqs = [[rng.randint(-2, 2) for _ in range(n)]
                   for _ in range(rng.randint(0, 1))]
            c = Cone.from_hrep(ineqs, eqs, ambient_dim=n)
            back = Cone.from_rays(c.rays, c.lineality, ambient_dim=n)
        assert back.same_set(c)


def test_minimal_hrep_has_no_implicit_equalities():
    c = Cone.from_rays([(1, 0)], ambient_dim=2)  # a single ray in the plane
    m = c.minimal()
    assert len(m.eqs) == 1 and len(m.ineqs) == 1


def test_normal_cone_helper():
    c = Cone.from_hrep([(1, -1), (0, 1)])  # x1 >= x2 >= 0
    n = normal_cone_at_first_axis(c)
    assert n.ambient_dim == 1 and n.dim() == 1
