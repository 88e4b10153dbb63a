from fractions import Fraction as F

import pytest

import oracles
import support
from fanotoric import (
    DomainError,
    Fan,
    InputError,
    canonical_polytope,
    is_fano,
    point_fan,
    product,
    projective_space,
    validate_fan,
)


def cp1():
    return projective_space(1)


def cp2():
    return projective_space(2)


def test_cp1_fan_valid():
    diag = validate_fan(cp1())
    assert diag.smooth and diag.complete and diag.effective


def test_single_cone_not_complete():
    fan = Fan(dim=2, rays=((1, 0), (0, 1)), max_cones=((0, 1),))
    diag = validate_fan(fan)
    assert diag.smooth
    assert not diag.complete
    assert diag.facet_defects == 2


def test_nonprimitive_ray_rejected():
    with pytest.raises(InputError):
        Fan(dim=2, rays=((2, 0), (0, 1)), max_cones=((0, 1),))


def test_zero_ray_rejected():
    with pytest.raises(InputError):
        Fan(dim=1, rays=((0,),), max_cones=((0,),))


def test_duplicate_cone_rejected():
    with pytest.raises(InputError):
        Fan(dim=1, rays=((1,), (-1,)), max_cones=((0,), (0,)))


def test_bad_cone_index_rejected():
    with pytest.raises(InputError):
        Fan(dim=1, rays=((1,), (-1,)), max_cones=((0,), (2,)))


def test_wrong_cone_size_rejected():
    with pytest.raises(InputError):
        Fan(dim=2, rays=((1, 0), (0, 1), (-1, -1)), max_cones=((0, 1, 2),))


def test_non_unimodular_cone_reported():
    fan = Fan(dim=2, rays=((1, 1), (1, -1)), max_cones=((0, 1),))
    diag = validate_fan(fan)
    assert not diag.smooth
    assert diag.non_unimodular_cones == (0,)
    assert not diag.effective


def test_is_fano_classics():
    assert is_fano(cp2())
    assert is_fano(product(cp1(), cp1()))
    assert is_fano(support.del_pezzo_blowup_fan())
    assert not is_fano(support.hirzebruch_surface_fan(2))
    assert not is_fano(support.hirzebruch_surface_fan(3))


def test_is_fano_requires_smooth_complete():
    half = Fan(dim=2, rays=((1, 0), (0, 1)), max_cones=((0, 1),))
    with pytest.raises(DomainError):
        is_fano(half)


def test_canonical_polytope_cp1():
    poly = canonical_polytope(cp1())
    assert poly.vertices == ((F(-1),), (F(1),))


def test_canonical_polytope_cp2():
    poly = canonical_polytope(cp2())
    assert poly.vertices == (
        (F(-1), F(-1)),
        (F(2), F(-1)),
        (F(-1), F(2)),
    )


def test_canonical_polytope_cp1xcp1():
    poly = canonical_polytope(product(cp1(), cp1()))
    assert set(poly.vertices) == {
        (F(1), F(1)),
        (F(1), F(-1)),
        (F(-1), F(1)),
        (F(-1), F(-1)),
    }


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_projective_space_polytope_formula(m):
    # Vertices: Q_o = (-1, ..., -1) and Q_r = Q_o + (m+1) e_r.
    poly = canonical_polytope(projective_space(m))
    q_o = tuple(F(-1) for _ in range(m))
    assert poly.vertices[0] == q_o
    for r in range(1, m + 1):
        expected = tuple(
            F(-1) + (F(m + 1) if j == r - 1 else 0) for j in range(m)
        )
        assert poly.vertices[r] == expected


def test_projective_space_rejects_dim_zero():
    with pytest.raises(InputError):
        projective_space(0)


def test_product_with_point_is_identity():
    f = cp2()
    left = product(point_fan(), f)
    right = product(f, point_fan())
    assert left.rays == f.rays and left.max_cones == f.max_cones
    assert right.rays == f.rays and right.max_cones == f.max_cones
    assert canonical_polytope(point_fan()).vertices == ((),)


def test_product_polytope_is_cartesian_product():
    f1, f2 = cp1(), cp2()
    poly = canonical_polytope(product(f1, f2))
    p1 = canonical_polytope(f1)
    p2 = canonical_polytope(f2)
    expected = {v1 + v2 for v1 in p1.vertices for v2 in p2.vertices}
    assert set(poly.vertices) == expected
    assert len(poly.vertices) == 6


def test_vertex_count_equals_cone_count():
    for fan in (cp1(), cp2(), projective_space(3), product(cp1(), cp2())):
        poly = canonical_polytope(fan)
        assert len(poly.vertices) == len(fan.max_cones)
        assert poly.cones == fan.max_cones


FANO_LIBRARY = [
    projective_space(1),
    projective_space(2),
    projective_space(3),
    product(projective_space(1), projective_space(1)),
    product(projective_space(1), projective_space(2)),
    support.del_pezzo_blowup_fan(),
]


@pytest.mark.parametrize("fan", FANO_LIBRARY)
def test_duality_with_halfspace_enumeration(fan):
    assert is_fano(fan)
    poly = canonical_polytope(fan)
    assert len(set(poly.vertices)) == len(poly.vertices)
    assert set(poly.vertices) == oracles.halfspace_vertices(fan.rays, fan.dim)


@pytest.mark.parametrize("fan", FANO_LIBRARY)
def test_origin_strictly_interior_for_fano(fan):
    # The hull is the halfspace region, and 0 satisfies every constraint
    # strictly.
    for ray in fan.rays:
        assert sum(F(0) * c for c in ray) > -1


def test_f2_methods_disagree():
    # The degree-2 Hirzebruch fan is smooth and complete but not Fano: the
    # fixed-point method produces a repeated vertex (4 tagged points, two
    # equal), while halfspace enumeration has only 3 extreme points.
    fan = support.hirzebruch_surface_fan(2)
    assert not is_fano(fan)
    poly = canonical_polytope(fan)
    assert len(poly.vertices) == 4
    assert len(set(poly.vertices)) == 3
    assert set(poly.vertices) == oracles.halfspace_vertices(fan.rays, fan.dim)


def test_f3_vertex_strictly_violates_halfspace():
    fan = support.hirzebruch_surface_fan(3)
    poly = canonical_polytope(fan)
    violated = False
    for v in poly.vertices:
        for ray in fan.rays:
            if sum(x * c for x, c in zip(v, ray)) < -1:
                violated = True
    assert violated
    assert set(poly.vertices) != oracles.halfspace_vertices(fan.rays, fan.dim)


def test_point_fan_valid_and_complete():
    diag = validate_fan(point_fan())
    assert diag.smooth and diag.complete and diag.effective
    assert is_fano(point_fan())
