import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bargmann_chain.circuit import (
    Circuit,
    polygon_circuit,
    solid_angle_circumdisk,
    solid_angle_cone,
    solid_angle_polygon,
)


@settings(max_examples=60, deadline=None)
@given(M=st.integers(3, 400), r=st.floats(1e-7, 0.85))
def test_polygon_invariants(M, r):
    c = polygon_circuit(M, r)
    v = c.vertices
    assert len(c) == M
    assert np.max(np.abs(np.linalg.norm(v, axis=1) - 1)) <= 1e-12
    mid = v[-1] + v[0]
    assert mid[0] > 0 and abs(mid[1]) <= 1e-3 * r * r and abs(mid[2]) <= 1e-3 * r * r
    assert v[0, 2] > v[-1, 2]


def test_four_gon_vertex_zero_by_hand():
    v0 = polygon_circuit(4, 0.1).vertices[0]
    expect = np.array([1.0, 0.0, 0.1 * np.sin(np.pi / 4)])
    assert np.allclose(v0, expect / np.linalg.norm(expect), atol=1e-15)


def test_default_circuit_builds():
    c = polygon_circuit(100, 1e-5)
    assert c.n_vertices == 100 and c.radius == 1e-5


@pytest.mark.parametrize("M,r", [(2, 0.1), (0, 0.1), (10, 0.0), (10, -1e-3), (10, 0.95)])
def test_polygon_rejects_bad_input(M, r):
    with pytest.raises(ValueError):
        polygon_circuit(M, r)


def test_raw_circuit_validation():
    with pytest.raises(ValueError):
        Circuit(np.eye(3)[:2])
    with pytest.raises(ValueError):
        Circuit(2 * np.eye(3))


def test_cone_values():
    assert np.isclose(solid_angle_cone(1.0), 2 * np.pi)
    assert np.isclose(solid_angle_cone(0.5), 2 * np.pi * (1 - np.cos(np.arcsin(0.5))))
    assert np.isclose(solid_angle_cone(0.5), 0.8418, atol=1e-4)
    r = 1e-4
    assert np.isclose(solid_angle_cone(r), np.pi * r * r, rtol=1e-7)
    with pytest.raises(ValueError):
        solid_angle_cone(0.0)


def test_octant():
    assert np.isclose(solid_angle_polygon(np.eye(3)), np.pi / 2)
    assert np.isclose(solid_angle_polygon(np.eye(3)[::-1]), -np.pi / 2)


def test_flat_triangle():
    r = 1e-4
    assert np.isclose(solid_angle_polygon(polygon_circuit(3, r)), 3 * np.sqrt(3) / 4 * r * r, rtol=1e-6)


def test_antipodal_edge_rejected():
    with pytest.raises(ValueError):
        solid_angle_polygon(np.array([[1, 0, 0], [-1, 0, 0], [0, 0, 1.0]]))


def test_cyclic_and_orientation_symmetry():
    c = polygon_circuit(37, 0.3)
    om = solid_angle_polygon(c)
    assert om > 0
    for k in (1, 5, 36):
        assert np.isclose(solid_angle_polygon(c.roll(k)), om, rtol=1e-13)
    assert np.isclose(solid_angle_polygon(c.reverse()), -om, rtol=1e-13)
    assert np.isclose(solid_angle_polygon(polygon_circuit(37, 0.3, reverse=True)), -om, rtol=1e-13)


@pytest.mark.parametrize("r", [0.01, 0.5])
def test_polygon_area_increases_to_circumdisk(r):
    Ms = [20, 50, 100, 200, 500]
    areas = [solid_angle_polygon(polygon_circuit(M, r)) for M in Ms]
    assert np.all(np.diff(areas) > 0)
    limit = solid_angle_circumdisk(r)
    assert areas[-1] < limit
    errs = limit - np.array(areas)
    assert np.all(np.diff(errs) < 0)
    # spherical excess and quadrature agree in the dense-vertex limit
    assert np.isclose(solid_angle_polygon(polygon_circuit(20000, r)), limit, rtol=1e-7)


def test_small_radius_matches_cone_to_leading_order():
    r = 1e-3
    om = solid_angle_polygon(polygon_circuit(2000, r))
    assert np.isclose(om, solid_angle_cone(r), rtol=1e-5)


def test_json_round_trip_exact():
    c = polygon_circuit(7, 0.123456789)
    back = Circuit.from_json(c.to_json())
    assert np.array_equal(back.vertices, c.vertices)
    assert back.radius == c.radius
    d = json.loads(c.to_json())
    assert d["n_vertices"] == 7 and len(d["vertices"]) == 7
