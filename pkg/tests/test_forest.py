import pytest

from toptree.errors import SelfLoop, UnknownEdge, UnknownVertex
from toptree.forest import Forest, check_int64


def test_vertex_ids_are_dense():
    f = Forest()
    assert f.new_vertex() == 0
    assert f.new_vertex() == 1
    for _ in range(98):
        f.new_vertex()
    assert f.num_vertices == 100
    assert f.num_edges == 0


def test_endpoints_are_sorted_and_retired():
    f = Forest()
    for _ in range(4):
        f.new_vertex()
    e = f.add_edge(3, 1, 5)
    assert f.endpoints(e) == (1, 3)
    f.remove_edge(e)
    with pytest.raises(UnknownEdge):
        f.endpoints(e)
    with pytest.raises(UnknownEdge):
        f.endpoints(999)


def test_edge_ids_are_never_reused():
    f = Forest()
    for _ in range(3):
        f.new_vertex()
    a = f.add_edge(0, 1, 1)
    f.remove_edge(a)
    b = f.add_edge(0, 1, 1)
    assert b != a


def test_degree():
    f = Forest()
    for _ in range(5):
        f.new_vertex()
    assert f.degree(4) == 0
    for leaf in (1, 2, 3):
        f.add_edge(0, leaf, 1)
    assert f.degree(0) == 3
    assert f.degree(1) == 1


def test_bad_arguments():
    f = Forest()
    f.new_vertex()
    with pytest.raises(UnknownVertex):
        f.degree(7)
    with pytest.raises(SelfLoop):
        f.add_edge(0, 0, 1)


def test_component_and_labels():
    f = Forest()
    for _ in range(6):
        f.new_vertex()
    f.add_edge(0, 1, 1)
    f.add_edge(1, 2, 1)
    f.add_edge(4, 5, 1)
    assert sorted(f.component(2)) == [0, 1, 2]
    assert f.component_labels() == [0, 0, 0, 3, 4, 4]


def test_check_int64():
    check_int64(2**63 - 1)
    with pytest.raises(OverflowError):
        check_int64(2**63)
