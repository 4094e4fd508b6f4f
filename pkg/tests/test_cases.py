import pytest
from hypothesis import given
from hypothesis import strategies as st

from trisym.cases import (
    InvolutionMarking,
    case_dims,
    enumerate_cases,
    find_cases,
    inner_decomposition_dims,
    make_case,
)
from trisym.errors import InvalidMarking, TrisymError
from trisym.rootsys import build_root_system

DIM_ROWS = {
    "E6-II": (16, 16, 24),
    "E6-III": (14, 28, 12),
    "E7-I": (32, 32, 32),
    "E7-II": (24, 30, 40),
    "E7-III": (35, 35, 35),
    "E8-I": (48, 64, 64),
    "E8-II": (64, 64, 64),
    "F4-II": (20, 8, 8),
}


class TestEnumeration:
    def test_rank_1_only_the_group_case(self):
        cases = enumerate_cases(1)
        assert [c.type_label for c in cases] == ["A-I"]

    def test_rank_4_includes_expected_rows(self):
        cases = enumerate_cases(4)
        keys = {(c.type_label, c.params) for c in cases}
        assert ("D-I", (("l", 4), ("i", 1), ("j", 2))) in keys
        assert ("F4-I", ()) in keys and ("F4-II", ()) in keys
        assert ("A-II", (("l", 3),)) in keys

    def test_rank_8_exceptional_rows(self):
        cases = enumerate_cases(8)
        exceptional = sorted(c.type_label for c in cases if c.family in ("E", "F"))
        assert exceptional == [
            "E6-I", "E6-II", "E6-III", "E7-I", "E7-II", "E7-III",
            "E8-I", "E8-II", "F4-I", "F4-II",
        ]

    def test_each_case_exactly_once(self):
        cases = enumerate_cases(9)
        keys = [(c.type_label, c.params) for c in cases]
        assert len(keys) == len(set(keys))

    def test_max_rank_validation(self):
        with pytest.raises(ValueError):
            enumerate_cases(0)


class TestInnerDecomposition:
    def test_rank2_flag_manifold(self):
        rs = build_root_system("A", 2)
        assert inner_decomposition_dims(rs, InvolutionMarking.inner({1}, {2})) == (2, 2, 2, 2)

    def test_f4_triality_case(self):
        rs = build_root_system("F", 4)
        assert inner_decomposition_dims(rs, InvolutionMarking.inner({4}, {3})) == (28, 8, 8, 8)

    def test_e7_first_case(self):
        rs = build_root_system("E", 7)
        assert inner_decomposition_dims(rs, InvolutionMarking.inner({6}, {2})) == (37, 32, 32, 32)

    def test_invalid_marks_rejected(self):
        rs = build_root_system("A", 2)
        with pytest.raises(InvalidMarking):
            inner_decomposition_dims(rs, InvolutionMarking.inner({1}, {7}))
        with pytest.raises(InvalidMarking):
            inner_decomposition_dims(rs, InvolutionMarking.inner({1}, set()))
        with pytest.raises(InvalidMarking):
            inner_decomposition_dims(
                rs, InvolutionMarking(frozenset({1}), frozenset({2}), outer="flip")
            )

    def test_swapping_marks_permutes_blocks(self):
        rs = build_root_system("E", 8)
        a = inner_decomposition_dims(rs, InvolutionMarking.inner({7}, {1}))
        b = inner_decomposition_dims(rs, InvolutionMarking.inner({1}, {7}))
        assert a[0] == b[0]
        assert sorted(a[1:]) == sorted(b[1:])
        # the convention swaps the theta-fixed and tau-fixed blocks
        assert (a[1], a[2]) == (b[2], b[1])


class TestCaseDims:
    def test_a_ii_l5(self):
        assert case_dims(make_case("A-II", l=5)) == (9, 8, 12, 6)

    def test_e6_iii(self):
        assert case_dims(make_case("E6-III")) == (24, 14, 28, 12)

    def test_f4_ii(self):
        assert case_dims(make_case("F4-II")) == (16, 20, 8, 8)

    @pytest.mark.parametrize("label,want", sorted(DIM_ROWS.items()))
    def test_reference_rows(self, label, want):
        dim_h, d1, d2, d3 = case_dims(make_case(label))
        assert (d1, d2, d3) == want

    def test_a_ii_closed_forms(self):
        for l in range(3, 22, 2):
            _, d1, d2, d3 = case_dims(make_case("A-II", l=l))
            assert (d1, d2, d3) == (
                (l - 1) * (l + 3) // 4,
                (l + 1) * (l + 3) // 4,
                (l - 1) * (l + 1) // 4,
            )

    def test_dimension_sum_across_catalog(self):
        from trisym.cases import ambient_dim

        for case in enumerate_cases(12):
            dim_h, d1, d2, d3 = case_dims(case)
            assert dim_h + d1 + d2 + d3 == ambient_dim(case)

    @given(st.integers(2, 14), st.data())
    def test_a_iii_dims_match_unitary_model(self, l, data):
        i = data.draw(st.integers(1, max(1, (l + 1) // 3)))
        j = data.draw(st.integers(2 * i, (l + i + 1) // 2))
        case = make_case("A-III", l=l, i=i, j=j)
        n1, n2, n3 = i, j - i, l + 1 - j
        _, d1, d2, d3 = case_dims(case)
        assert sorted((d1, d2, d3)) == sorted((2 * n1 * n2, 2 * n2 * n3, 2 * n1 * n3))

    def test_c_i_matches_symplectic_model(self):
        _, d1, d2, d3 = case_dims(make_case("C-I", l=3, i=1, j=2))
        assert (d1, d2, d3) == (4, 4, 4)
        _, d1, d2, d3 = case_dims(make_case("C-I", l=4, i=1, j=2))
        assert sorted((d1, d2, d3)) == [4, 8, 8]


class TestSelectors:
    def test_tag_and_label_equivalent(self):
        assert make_case("InP17") == make_case("E7-II")
        assert make_case("inp17") == make_case("e7-ii")

    def test_k_alias_for_a_ii(self):
        assert make_case("A-II", k=3) == make_case("A-II", l=5)

    def test_bad_selector(self):
        with pytest.raises(TrisymError):
            make_case("Z9-I")

    def test_missing_params(self):
        with pytest.raises(TrisymError):
            make_case("A-III", l=5)

    def test_out_of_range_params(self):
        with pytest.raises(TrisymError):
            make_case("A-III", l=5, i=3, j=4)
        with pytest.raises(TrisymError):
            make_case("A-II", l=4)

    def test_find_cases_filters(self):
        found = find_cases("A-III", max_rank=6, i=1)
        assert found and all(c.param("i") == 1 for c in found)

    def test_flags(self):
        assert make_case("D-IV", l=5).isomorphic_summands
        assert make_case("B-II", l=4, i=4).isomorphic_summands
        assert not make_case("B-II", l=4, i=3).isomorphic_summands
