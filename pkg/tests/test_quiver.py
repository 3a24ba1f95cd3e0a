"""Quiver validation, Euler form, Cartan entries, and height functions.

Core claims:
    - load_quiver classifies ADE trees and rejects cycles / multi-edges / non-ADE
    - the Coxeter number table matches the order of the Coxeter transformation
    - euler_form is Z-bilinear, cartan_entry symmetric
    - height functions obey the arrow rule on every arrow, any orientation
"""

import pytest

from cyclotome import (
    NotADEError,
    NotATreeError,
    NotSimplyLacedError,
    all_orientations,
    cartan_entry,
    euler_form,
    height_function,
    load_quiver,
    make_dynkin_quiver,
    orient,
    unit_vector,
)
from cyclotome.derived import matrix_order
from cyclotome.quiver import euler_matrix
from cyclotome.derived import mat_mul, mat_neg, mat_transpose, unipotent_inverse


ALL_TYPES = ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6", "E7", "E8"]


# == 1. loading and classification =============================================

class TestLoadQuiver:
    def test_linear_a3_matches_fixture(self):
        q = load_quiver("vertices: 3\narrow: 3 2\narrow: 2 1\n")
        assert q.dynkin_type == "A3"
        assert q.coxeter_number == 4  # a primitive 8-th root of unity world

    def test_single_vertex_is_a1(self):
        q = load_quiver("vertices: 1\n")
        assert q.dynkin_type == "A1"
        assert q.coxeter_number == 2

    def test_cycle_rejected(self):
        with pytest.raises(NotATreeError):
            make_dynkin_quiver(3, [(1, 2), (2, 3), (3, 1)])

    def test_disconnected_rejected(self):
        # 3 distinct edges on 4 vertices with vertex 4 isolated
        with pytest.raises(NotATreeError):
            make_dynkin_quiver(4, [(1, 2), (2, 3), (3, 1)])

    def test_parallel_edge_rejected(self):
        with pytest.raises(NotSimplyLacedError):
            make_dynkin_quiver(2, [(1, 2), (2, 1)])

    def test_star_with_four_arms_rejected(self):
        with pytest.raises(NotADEError):
            make_dynkin_quiver(5, [(2, 1), (3, 1), (4, 1), (5, 1)])

    def test_two_branch_vertices_rejected(self):
        # arms (2,2,2) from a single center is not ADE either
        with pytest.raises(NotADEError):
            make_dynkin_quiver(7, [(2, 1), (3, 2), (4, 1), (5, 4), (6, 1), (7, 6)])

    @pytest.mark.parametrize("t,h", [("A1", 2), ("A4", 5), ("D4", 6), ("D5", 8),
                                     ("E6", 12), ("E7", 18), ("E8", 30)])
    def test_types_and_coxeter_table(self, t, h):
        q = orient(t, "linear")
        assert q.dynkin_type == t
        assert q.coxeter_number == h


# == 2. the Coxeter number re-derived ==========================================

@pytest.mark.parametrize("t", ALL_TYPES)
def test_coxeter_number_is_order_of_coxeter_matrix(t):
    q = orient(t, "linear")
    e = euler_matrix(q)
    cox = mat_neg(mat_mul(unipotent_inverse(e), mat_transpose(e)))
    assert matrix_order(cox) == q.coxeter_number


def test_coxeter_order_is_orientation_independent():
    for q in all_orientations("A3"):
        e = euler_matrix(q)
        cox = mat_neg(mat_mul(unipotent_inverse(e), mat_transpose(e)))
        assert matrix_order(cox) == 4


# == 3. forms ====================================================================

class TestEulerForm:
    def test_single_arrow_contributes_minus_one(self):
        q = make_dynkin_quiver(2, [(2, 1)])
        assert euler_form(q, unit_vector(q, 2), unit_vector(q, 1)) == -1
        assert euler_form(q, unit_vector(q, 1), unit_vector(q, 2)) == 0

    def test_diagonal_is_one(self):
        q = orient("D4", "alternating")
        for i in q.vertices:
            assert euler_form(q, unit_vector(q, i), unit_vector(q, i)) == 1

    def test_projective_against_simple(self):
        # <dim P_3, dim S_2> = <(1,1,1),(0,1,0)> = 0 in linear A3
        q = orient("A3", "linear")
        assert euler_form(q, (1, 1, 1), (0, 1, 0)) == 0

    def test_bilinear(self):
        q = orient("A4", "alternating")
        x, y, z = (1, 2, 0, 1), (0, 1, 1, 0), (2, 0, 1, 3)
        lhs = euler_form(q, tuple(a + b for a, b in zip(x, y)), z)
        assert lhs == euler_form(q, x, z) + euler_form(q, y, z)
        rhs = euler_form(q, z, tuple(3 * a for a in x))
        assert rhs == 3 * euler_form(q, z, x)

    def test_cartan_entries(self):
        q = orient("A3", "linear")
        assert cartan_entry(q, 1, 1) == 2
        assert cartan_entry(q, 1, 2) == -1
        assert cartan_entry(q, 1, 3) == 0

    def test_cartan_symmetric_all_orientations(self):
        for q in all_orientations("D4"):
            for i in q.vertices:
                for j in q.vertices:
                    assert cartan_entry(q, i, j) == cartan_entry(q, j, i)


# == 4. heights ===================================================================

class TestHeightFunction:
    def test_linear_a3_heights(self):
        q = orient("A3", "linear")
        assert height_function(q) == {1: 0, 2: 1, 3: 2}

    def test_a1(self):
        assert height_function(orient("A1", "linear")) == {1: 0}

    def test_a2(self):
        assert height_function(orient("A2", "linear")) == {1: 0, 2: 1}

    @pytest.mark.parametrize("t", ["A4", "D4", "E6"])
    def test_arrow_rule_every_orientation(self, t):
        for q in all_orientations(t):
            xi = height_function(q)
            for s, tgt in q.arrows:
                assert xi[s] == xi[tgt] + 1
            assert xi[1] == 0
