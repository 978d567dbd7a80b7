import pytest

from liekoszul.errors import ValidationError
from liekoszul.meshquiver import build_mesh_quiver, degree_profile, hom_dimensions, table_rows

from oracles import mesh_dimension_oracle


def test_shape():
    q = build_mesh_quiver(2)
    assert q.vertices == ((0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0))
    assert set(q.arrows) == {((0, 0), (0, 1)), ((0, 1), (0, 2)), ((0, 1), (1, 0)),
                             ((1, 0), (1, 1)), ((0, 2), (1, 1)), ((1, 1), (2, 0))}
    assert q.tau((1, 1)) == (0, 1) and q.tau((0, 2)) is None
    assert q.mesh((1, 1)) == [((0, 2), 1), ((1, 0), -1)]
    assert q.mesh((1, 0)) == [((0, 1), 1)]
    assert q.provisional() == []


@pytest.mark.parametrize("depth", range(5))
def test_matches_path_algebra_oracle(depth):
    q = build_mesh_quiver(depth)
    assert hom_dimensions(q) == mesh_dimension_oracle(q.vertices, depth)


def test_truncation_stable():
    small = hom_dimensions(build_mesh_quiver(4))
    big = hom_dimensions(build_mesh_quiver(6))
    assert all(big[k] == v for k, v in small.items())


def test_degrees_and_rows():
    q = build_mesh_quiver(3)
    assert q.path_degree((0, 0), (0, 2)) == 2
    assert q.path_degree((0, 1), (1, 0)) == 1
    assert q.path_degree((1, 0), (0, 1)) is None
    table = hom_dimensions(q)
    rows = table_rows(q, table)
    assert rows[0] == {"source": [0, 0], "target": [0, 0], "degree": 0, "dim": 1}
    for r in rows:
        if r["dim"]:
            assert r["degree"] is not None
    prof = degree_profile((r["degree"], r["dim"]) for r in rows)
    assert prof[(0, 1)] == len(q.vertices)


def test_json_and_ascii():
    q = build_mesh_quiver(1)
    doc = q.to_dict()
    assert doc["translation"] == [[[1, 0], [0, 0]]]
    assert "(1,0)" in q.ascii()


def test_bad_depth():
    with pytest.raises(ValidationError):
        build_mesh_quiver(-1)
