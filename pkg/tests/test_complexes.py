import random

import pytest

from orbinov.complexes import (barycentric_subdivision, build_complex,
                               euler_characteristic, integer_homology,
                               sort_with_parity)
from orbinov.errors import DocumentError, ValidationError

from oracles import betti_oracle

RP2_TRIANGLES = [(1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
                 (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6)]


def rp2():
    return build_complex([tuple("w%d" % v for v in t) for t in RP2_TRIANGLES])


def test_build_and_boundary():
    X = build_complex([("a", "b", "c")])
    assert X.vertices == ["a", "b", "c"]
    assert X.cells[1] == [("a", "b"), ("a", "c"), ("b", "c")]
    assert X.boundary_matrix(2) == [[1], [-1], [1]]
    assert X.boundary_matrix(1) == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    # out-of-range degrees give shaped zero matrices
    assert X.boundary_matrix(0) == []
    assert X.boundary_matrix(3) == [[]]


def test_input_validation():
    with pytest.raises(DocumentError):
        build_complex([])
    with pytest.raises(DocumentError):
        build_complex([("a", "a")])
    with pytest.raises(DocumentError):
        build_complex([("a", "x")], vertices=["a", "b"])
    with pytest.raises(DocumentError):
        build_complex([("a",)], vertices=["a", "a"])


def test_normalize():
    X = build_complex([("a", "b", "c")])
    assert X.normalize(("c", "a")) == (("a", "c"), -1)
    assert X.normalize(("a", "a"))[1] == 0
    with pytest.raises(DocumentError):
        X.normalize(("a", "nope"))
    Y = build_complex([("a", "b"), ("c", "d")])
    with pytest.raises(ValidationError):
        Y.normalize(("a", "c"))


def test_sort_with_parity():
    key = {"a": 0, "b": 1, "c": 2, "d": 3}
    assert sort_with_parity(("d", "c", "b", "a"), key) == (("a", "b", "c", "d"), 1)
    assert sort_with_parity(("b", "a", "c"), key) == (("a", "b", "c"), -1)
    assert sort_with_parity(("b", "b"), key)[1] is None


def test_circle_homology():
    X = build_complex([("a", "b"), ("b", "c"), ("a", "c")])
    H = integer_homology(X)
    assert H.betti == [1, 1]
    assert H.torsion == [[], []]


def test_sphere_homology():
    faces = [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")]
    H = integer_homology(build_complex(faces))
    assert H.betti == [1, 0, 1]
    assert H.torsion == [[], [], []]
    assert euler_characteristic(build_complex(faces)) == 2


def test_projective_plane_homology():
    X = rp2()
    assert euler_characteristic(X) == 1
    H = integer_homology(X)
    assert H.betti == [1, 0, 0]
    assert H.torsion == [[], [2], []]


def test_two_components():
    X = build_complex([("a", "b"), ("c", "d")])
    assert integer_homology(X).betti == [2, 0]


def test_isolated_vertex():
    X = build_complex([("a", "b")], vertices=["a", "b", "z"])
    assert integer_homology(X).betti == [2, 0]


def test_betti_against_rref_oracle():
    rng = random.Random(99)
    labels = list("abcdef")
    for _ in range(40):
        tris = set()
        for _ in range(rng.randint(1, 8)):
            tris.add(tuple(sorted(rng.sample(labels, 3))))
        simplices = sorted(tris)
        X = build_complex(simplices)
        assert integer_homology(X).betti == betti_oracle(simplices)


def test_subdivision_counts_and_homology():
    tri = build_complex([("a", "b", "c")])
    sd = barycentric_subdivision(tri)
    assert [len(layer) for layer in sd.complex.cells] == [7, 12, 6]
    assert euler_characteristic(sd.complex) == 1

    X = rp2()
    sd1 = barycentric_subdivision(X)
    assert euler_characteristic(sd1.complex) == 1
    H = integer_homology(sd1.complex)
    assert H.betti == [1, 0, 0]
    assert H.torsion == [[], [2], []]


def test_subdivision_respects_isolated_and_mixed_dims():
    X = build_complex([("a", "b"), ("c",)], vertices=["a", "b", "c"])
    sd = barycentric_subdivision(X)
    assert integer_homology(sd.complex).betti == [2, 0]
    # barycenter dictionary round-trips
    for cell, label in sd.barycenter_of.items():
        assert sd.cell_of[label] == cell
