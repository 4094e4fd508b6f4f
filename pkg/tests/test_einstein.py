from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trisym.cases import make_case
from trisym.coeffs import coefficients_for_case
from trisym.einstein import (
    BRANCH_PAIR_LINEAR,
    BRANCH_PAIR_SUM,
    BRANCH_STANDARD,
    EinsteinSolution,
    RootCoordinate,
    refine_solution,
    ricci_coefficients,
    solve_case,
    solve_einstein,
    verify_solution,
)
from trisym.errors import NotApplicable, TrisymError
from trisym.surd import QuadraticSurd

rational_a = st.fractions(min_value=F(1, 10), max_value=F(9, 20), max_denominator=24)


class TestRicci:
    def test_equal_everything(self):
        a = F(1, 5)
        for t in (F(1), F(3, 7)):
            rs = ricci_coefficients((a, a, a), (t, t, t))
            assert rs == ((1 - a) / (2 * t),) * 3

    def test_known_einstein_metric(self):
        r1, r2, r3 = ricci_coefficients((F(1, 4), F(1, 4), F(1, 6)), (F(5, 3), F(1), F(4, 3)))
        assert r1 == r2 == r3

    def test_standard_metric_not_einstein_for_unequal_a(self):
        r1, r2, r3 = ricci_coefficients((F(1, 4), F(1, 6), F(1, 3)), (F(1), F(1), F(1)))
        assert r1 != r2
        assert (r1, r2, r3) == (F(3, 8), F(5, 12), F(1, 3))

    def test_positivity_required(self):
        with pytest.raises(ValueError):
            ricci_coefficients((F(1, 4),) * 3, (F(1), F(-1), F(1)))


class TestAllEqualBranch:
    def test_generic_value_has_four(self):
        sols = solve_einstein((F(2, 9),) * 3)
        got = {tuple(s.x) for s in sols}
        assert got == {
            (F(1), F(1), F(1)),
            (F(1), F(4, 5), F(4, 5)),
            (F(1), F(5, 4), F(1)),
            (F(1), F(1), F(5, 4)),
        }
        assert sum(1 for s in sols if s.branch == BRANCH_STANDARD) == 1

    @pytest.mark.parametrize("a", [F(1, 4), F(1, 2)])
    def test_special_values_standard_only(self, a):
        sols = solve_einstein((a, a, a))
        assert len(sols) == 1 and sols[0].x == (F(1), F(1), F(1))

    def test_einstein_constant_positive(self):
        for s in solve_einstein((F(1, 6),) * 3):
            assert s.einstein_constant_sign == "positive"


class TestEqualPairBranch:
    def test_sum_branch_rational_roots(self):
        sols = solve_einstein((F(1, 4), F(1, 4), F(1, 6)))
        assert {tuple(s.x) for s in sols} == {
            (F(1), F(3, 5), F(4, 5)),
            (F(1), F(5, 3), F(4, 3)),
        }
        assert {s.branch for s in sols} == {BRANCH_PAIR_SUM}

    def test_surd_roots(self):
        sols = solve_einstein((F(4, 15), F(1, 5), F(1, 5)))
        assert len(sols) == 2
        for s in sols:
            q = s.x[1]
            assert isinstance(q, QuadraticSurd) and q.d == 29
            assert s.x[2] == q
            assert 7 * q * q - 15 * q + 7 == 0
            assert s.branch == BRANCH_PAIR_LINEAR

    def test_sum_branch_surds(self):
        sols = solve_einstein((F(1, 9), F(5, 18), F(5, 18)))
        assert len(sols) == 2
        for s in sols:
            x2, x3 = s.x[1], s.x[2]
            assert x2 + x3 == F(9, 5)
            assert 196 * x2 * x2 - 499 * x2 * x3 + 196 * x3 * x3 == 0

    def test_odd_coefficient_one_half(self):
        # the quadratic on the equal-coordinate branch degenerates to linear
        sols = solve_einstein((F(1, 3), F(1, 3), F(1, 2)))
        linear = [s for s in sols if s.branch == BRANCH_PAIR_LINEAR]
        assert len(linear) == 1
        assert linear[0].x == (F(1), F(1), F(6, 5))

    def test_pair_coefficient_one_half(self):
        # no sum-branch solutions; the linear branch discriminant is negative
        assert solve_einstein((F(1, 2), F(1, 2), F(1, 3))) == []


class TestGenericBranch:
    def test_counts(self):
        assert len(solve_einstein((F(5, 18), F(2, 9), F(1, 6)))) == 2
        assert len(solve_einstein((F(1, 4), F(1, 8), F(7, 24)))) == 2

    def test_decimals(self):
        sols = solve_einstein((F(5, 18), F(2, 9), F(1, 6)))
        refined = sorted(
            (refine_solution(s, F(1, 10**8)).approx() for s in sols), key=lambda t: t[1]
        )
        assert abs(refined[0][1] - F("0.6139")) < F(5, 10**4)
        assert abs(refined[0][2] - F("0.7302")) < F(5, 10**4)
        assert abs(refined[1][1] - F("1.7489")) < F(5, 10**4)
        assert abs(refined[1][2] - F("1.5535")) < F(5, 10**4)

    def test_interval_coordinates_positive(self):
        for s in solve_einstein((F(1, 4), F(1, 8), F(7, 24))):
            for c in s.x[1:]:
                assert isinstance(c, RootCoordinate)
                assert c.interval.lo > 0

    def test_refinement_monotone(self):
        s = solve_einstein((F(1, 4), F(1, 8), F(7, 24)))[0]
        r = refine_solution(s, F(1, 10**10))
        for old, new in zip(s.x[1:], r.x[1:]):
            assert old.interval.lo <= new.interval.lo < new.interval.hi <= old.interval.hi
            assert new.interval.width <= F(1, 10**10)

    def test_a_validation(self):
        with pytest.raises(TrisymError):
            solve_einstein((F(0), F(1, 4), F(1, 3)))
        with pytest.raises(TrisymError):
            solve_einstein((F(3, 4), F(1, 4), F(1, 3)))


class TestSolveCase:
    def test_a_ii_k2(self):
        assert len(solve_case(make_case("A-II", l=3)).solutions) == 2

    def test_e7_iii(self):
        result = solve_case(make_case("E7-III"))
        assert len(result.solutions) == 4
        a = F(5, 18)
        assert {tuple(s.x) for s in result.solutions} == {
            (F(1), F(1), F(1)),
            (F(1), F(5, 4), F(5, 4)),
            (F(1), F(4, 5), F(1)),
            (F(1), F(1), F(4, 5)),
        }

    def test_e8_ii_patterns(self):
        result = solve_case(make_case("E8-II"))
        assert {tuple(s.x) for s in result.solutions} == {
            (F(1), F(1), F(1)),
            (F(1), F(8, 7), F(8, 7)),
            (F(1), F(7, 8), F(1)),
            (F(1), F(1), F(7, 8)),
        }

    def test_flagged_cases_not_applicable(self):
        with pytest.raises(NotApplicable):
            solve_case(make_case("D-IV", l=5))
        with pytest.raises(NotApplicable):
            solve_case(make_case("B-II", l=3, i=3))

    def test_group_case_single_round_metric(self):
        result = solve_case(make_case("A-I"))
        assert len(result.solutions) == 1
        assert result.solutions[0].x == (F(1), F(1), F(1))


class TestVerify:
    def test_exact_true(self):
        sols = solve_einstein((F(2, 9),) * 3)
        target = [s for s in sols if s.x == (F(1), F(4, 5), F(4, 5))][0]
        assert verify_solution((F(2, 9),) * 3, target)

    def test_perturbed_false(self):
        bad = EinsteinSolution(
            x=(F(1), F(4, 5) + F(1, 100), F(4, 5)),
            branch=BRANCH_PAIR_LINEAR,
            einstein_constant_sign="positive",
            residual_bound=F(0),
        )
        assert not verify_solution((F(2, 9),) * 3, bad)

    def test_interval_solutions_verify(self):
        a = (F(1, 4), F(1, 8), F(7, 24))
        for s in solve_einstein(a):
            assert verify_solution(a, s, F(1, 10**8))

    def test_every_solution_verifies_tightly(self):
        for label in ("E6-II", "E7-II", "E8-I", "F4-II", "E7-I"):
            result = solve_case(make_case(label))
            for s in result.solutions:
                assert verify_solution(result.a, s, F(1, 10**20))


class TestProperties:
    @given(rational_a, rational_a, rational_a)
    def test_standard_iff_all_equal(self, a1, a2, a3):
        sols = solve_einstein((a1, a2, a3))
        has_standard = any(s.x == (F(1), F(1), F(1)) for s in sols)
        assert has_standard == (a1 == a2 == a3)

    @given(rational_a, rational_a)
    def test_pair_positivity_claim(self, ap, ak):
        # every real root of the equal-coordinate quadratic is positive
        sols = solve_einstein((ap, ap, ak))
        for s in sols:
            for c in s.x:
                if isinstance(c, QuadraticSurd):
                    assert c.sign() == 1
                elif isinstance(c, F):
                    assert c > 0

    @pytest.mark.parametrize("label", ["E6-II", "E6-III", "E7-II", "E8-I", "F4-II", "E7-I"])
    def test_permutation_equivariance(self, label):
        width = F(1, 10**12)

        def approx_set(sols):
            return [tuple(float(v) for v in refine_solution(s, width).approx()) for s in sols]

        a = coefficients_for_case(make_case(label)).a
        reference = sorted(approx_set(solve_einstein(a)))
        for perm in permutations(range(3)):
            pa = tuple(a[p] for p in perm)
            sols = solve_einstein(pa)
            assert len(sols) == len(reference)
            # un-normalize, permute back, re-normalize, compare numerically
            back = []
            for vals in approx_set(sols):
                unperm = [0.0] * 3
                for pos, orig in enumerate(perm):
                    unperm[orig] = vals[pos]
                back.append(tuple(v / unperm[0] for v in unperm))
            for b, r in zip(sorted(back), reference):
                assert all(abs(x - y) < 1e-6 for x, y in zip(b, r))

    def test_deterministic_ordering(self):
        a = (F(1, 4), F(1, 8), F(7, 24))
        first = [tuple(s.x) for s in solve_einstein(a)]
        second = [tuple(s.x) for s in solve_einstein(a)]
        assert first == second


class TestClassicalFamilies:
    """Counts known from the classical literature for the matrix models."""

    @pytest.mark.parametrize("l,i,j", [(5, 1, 3), (8, 2, 5), (7, 1, 4), (9, 1, 3), (6, 2, 4)])
    def test_unitary_flags_have_four_metrics(self, l, i, j):
        # these coefficient triples satisfy a1 + a2 + a3 = 1/2, which is
        # exactly the locus where the back-substitution pivot degenerates;
        # the solver must recover the rational pivot solutions
        result = solve_case(make_case("A-III", l=l, i=i, j=j))
        assert sum(result.a) == F(1, 2)
        assert len(result.solutions) == 4
        for s in result.solutions:
            assert verify_solution(result.a, s, F(1, 10**12))

    @pytest.mark.parametrize("l,i,j", [(3, 1, 2), (4, 1, 2), (5, 1, 3), (7, 2, 4), (9, 3, 6)])
    def test_symplectic_family_has_four_metrics(self, l, i, j):
        result = solve_case(make_case("C-I", l=l, i=i, j=j))
        assert len(result.solutions) == 4

    @pytest.mark.parametrize(
        "label,params",
        [
            ("B-I", dict(l=4, i=3, j=2)),
            ("B-I", dict(l=6, i=4, j=2)),
            ("D-I", dict(l=6, i=2, j=4)),
            ("D-III", dict(l=5, i=1, j=2)),
            ("B-II", dict(l=5, i=3)),
        ],
    )
    def test_orthogonal_family_has_one_to_four_metrics(self, label, params):
        result = solve_case(make_case(label, **params))
        assert 1 <= len(result.solutions) <= 4
        for s in result.solutions:
            assert verify_solution(result.a, s, F(1, 10**12))
