from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beliefmerge import DistanceKind, random_instance
from beliefmerge.errors import ResourceLimitError
from beliefmerge.lp import (
    LinConstraint,
    LinSystem,
    feasible,
    integer_witness,
    minimality_system,
)

from oracles import grid_feasible


def _leq(coeffs, rhs):
    return LinConstraint(coeffs, "<=", rhs)


class TestFeasible:
    def test_mutual_double_requirement_is_infeasible(self):
        # both weights at least twice the other: 2w1+2w2 <= 3w1 and <= 3w2
        system = LinSystem(
            2,
            [
                _leq([-1, 2], 0),   # 2w2 <= w1
                _leq([2, -1], 0),   # 2w1 <= w2
                _leq([-1, 0], -1),  # w1 >= 1
                _leq([0, -1], -1),  # w2 >= 1
            ],
        )
        assert feasible(system) is None

    def test_single_lower_bound_witness(self):
        system = LinSystem(1, [_leq([-1], -1)])
        assert feasible(system) == (Fraction(1),)

    def test_witness_satisfies_all_constraints(self):
        system = LinSystem(
            2,
            [
                _leq([2, -1], 0),   # 3w1 <= w1 + w2
                _leq([-1, 0], -1),
                _leq([0, -1], -1),
            ],
        )
        point = feasible(system)
        assert point is not None
        assert all(c.holds_at(point) for c in system.constraints)
        assert point[1] >= 2 * point[0]

    def test_strict_inequalities(self):
        open_interval = LinSystem(
            1, [LinConstraint([1], "<", 1), LinConstraint([-1], "<", 0)]
        )
        point = feasible(open_interval)
        assert point is not None and 0 < point[0] < 1

        contradiction = LinSystem(
            1, [LinConstraint([1], "<", 1), _leq([-1], -1)]
        )
        assert feasible(contradiction) is None

    def test_equality_constraints(self):
        system = LinSystem(
            2, [LinConstraint([1, 0], "=", 3), _leq([0, 1], 5), _leq([0, -1], -5)]
        )
        assert feasible(system) == (Fraction(3), Fraction(5))

    def test_unconstrained_variable_defaults_to_zero(self):
        system = LinSystem(2, [_leq([1, 0], 4), _leq([-1, 0], -4)])
        assert feasible(system) == (Fraction(4), Fraction(0))

    def test_degenerate_blank_system(self):
        assert feasible(LinSystem(3, [])) == (Fraction(0),) * 3

    def test_resource_guard(self):
        # dense rows with balanced signs: every variable pairs 8 uppers
        # with 8 lowers, so any elimination order exceeds a cap of 40
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53]
        constraints = []
        for r in range(16):
            coeffs = [
                (1 if (r >> v) & 1 else -1) * Fraction(1, primes[r] + v)
                for v in range(4)
            ]
            constraints.append(_leq(coeffs, 1))
        with pytest.raises(ResourceLimitError):
            feasible(LinSystem(4, constraints), max_rows=40)

    @settings(max_examples=150, deadline=None)
    @given(st.data())
    def test_soundness_on_random_systems(self, data):
        dim = data.draw(st.integers(min_value=1, max_value=3))
        rows = data.draw(
            st.lists(
                st.tuples(
                    st.lists(
                        st.integers(min_value=-4, max_value=4),
                        min_size=dim,
                        max_size=dim,
                    ),
                    st.sampled_from(["<=", "<", "="]),
                    st.integers(min_value=-6, max_value=6),
                ),
                max_size=6,
            )
        )
        system = LinSystem(dim, [LinConstraint(c, r, b) for c, r, b in rows])
        point = feasible(system)
        if point is not None:
            assert all(c.holds_at(point) for c in system.constraints)


class TestMinimalitySystem:
    def test_center_point_feasible_with_witness(self):
        system = minimality_system([1, 1], [(3, 0), (0, 3)])
        point = feasible(system)
        assert point is not None
        assert all(c.holds_at(point) for c in system.constraints)

    def test_paper_weights_satisfy_first_two_minimality(self):
        # the published example weights for the three-point instance
        system = minimality_system([3, 0], [(1, 1), (0, 3)])
        w = (Fraction(2), Fraction(4))
        assert all(c.holds_at(w) for c in system.constraints)

    def test_undominated_middle_point_excluded(self):
        system = minimality_system([2, 2], [(3, 0), (0, 3)])
        assert feasible(system) is None

    def test_empty_comparison_set_always_feasible(self):
        system = minimality_system([4, 7, 1], [])
        assert feasible(system) == (Fraction(1),) * 3

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            minimality_system([1, 1], [(1, 2, 3)])

    @pytest.mark.parametrize("seed", range(12))
    def test_agrees_with_grid_oracle(self, seed):
        # m=2 keeps the integer grid bound sound: feasibility regions are
        # cones with small rational extreme rays
        inst = random_instance(4, 2, seed=seed)
        vectors = inst.vectors(DistanceKind.hamming())
        total = max(sum(v) for v in vectors)
        bound = 1 + total * 2
        for d in set(vectors):
            others = [e for e in set(vectors) if e != d]
            system = minimality_system(d, others)
            exact = feasible(system)
            grid = grid_feasible(system, bound)
            assert (exact is None) == (grid is None)


class TestIntegerWitness:
    def test_clears_denominators(self):
        assert integer_witness([Fraction(1, 2), Fraction(3, 2)]) == (1, 3)

    def test_identity_on_integers(self):
        assert integer_witness([Fraction(2), Fraction(4)]) == (2, 4)

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            integer_witness([Fraction(1), Fraction(0)])

    def test_integerized_witness_still_solves_homogeneous_system(self):
        system = minimality_system([1, 1], [(3, 0), (0, 3)])
        point = feasible(system)
        scaled = integer_witness(point)
        # scaling a solution keeps the homogeneous rows; the w >= 1 rows
        # survive because clearing denominators never shrinks entries
        assert all(
            c.holds_at([Fraction(x) for x in scaled]) for c in system.constraints
        )
