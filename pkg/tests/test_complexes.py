import pytest

from monograd.complexes import (SimplicialComplex, stanley_reisner_complex,
                                stanley_reisner_ideal)
from monograd.errors import DomainError
from monograd.exact_rank import bareiss_rank, sparse_rank
from monograd.monomials import MonomialIdeal


def I(n, *strs):
    return MonomialIdeal.from_strings(n, list(strs))


def test_exact_rank_small():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[1, 2], [3, 4]]) == 2
    assert bareiss_rank([]) == 0
    # sparse columns: column dict maps row -> value
    cols = [{0: 1, 1: -1}, {1: 1, 2: -1}, {0: 1, 2: -1}]
    assert sparse_rank(cols) == 2


def test_exact_rank_needs_exact_arithmetic():
    # Hilbert-like matrix scaled to integers: rank must be full
    n = 6
    rows = [[1 * 720 // (i + j + 1) for j in range(n)] for i in range(n)]
    assert bareiss_rank(rows) == n


def test_face_enumeration():
    hollow = SimplicialComplex(3, [{1, 2, 3}])
    faces = hollow.faces_by_cardinality()
    assert len(faces[0]) == 1          # the empty face
    assert len(faces[1]) == 3
    assert len(faces[2]) == 3
    assert 3 not in faces or not faces[3]
    assert hollow.is_face({1, 2}) and not hollow.is_face({1, 2, 3})


def test_homology_of_circle_and_sphere():
    # hollow triangle is a circle: only reduced H_1 is nonzero
    hollow = SimplicialComplex(3, [{1, 2, 3}])
    assert hollow.homology_profile() == {1: 1}
    # hollow tetrahedron is a 2-sphere
    sphere = SimplicialComplex(4, [{1, 2, 3, 4}])
    assert sphere.homology_profile() == {2: 1}


def test_homology_of_disconnected_points():
    two_points = SimplicialComplex(2, [{1, 2}])
    assert two_points.homology_profile() == {0: 1}


def test_homology_degenerate_complexes():
    # full simplex is contractible
    full = SimplicialComplex(3)
    assert full.homology_profile() == {}
    # the empty complex {{}} has reduced homology only in dimension -1
    empty = SimplicialComplex(3, [{1}, {2}, {3}])
    assert empty.homology_profile() == {-1: 1}
    # the void complex has none at all
    void = SimplicialComplex.void_complex(3)
    assert void.homology_profile() == {}


def test_restriction():
    hollow = SimplicialComplex(4, [{1, 2, 3}])
    r = hollow.restrict({1, 2, 3})
    assert r.n == 3 and r.homology_profile() == {1: 1}
    # restricting to a cone point kills homology
    r2 = hollow.restrict({1, 2, 4})
    assert r2.homology_profile() == {}


def test_top_nonzero_homology():
    sphere = SimplicialComplex(4, [{1, 2, 3, 4}])
    assert sphere.top_nonzero_homology() == 2
    full = SimplicialComplex(2)
    assert full.top_nonzero_homology() is None


def test_stanley_reisner_round_trip():
    J = I(4, "x1*x2", "x3*x4")
    delta = stanley_reisner_complex(J)
    assert delta.minimal_nonfaces == frozenset({frozenset({1, 2}),
                                                frozenset({3, 4})})
    assert stanley_reisner_ideal(delta) == J


def test_stanley_reisner_rejects_non_squarefree():
    with pytest.raises(DomainError, match="offender"):
        stanley_reisner_complex(I(2, "x1^2"))


def test_stanley_reisner_unit_is_void():
    delta = stanley_reisner_complex(MonomialIdeal.unit(3))
    assert delta.void
