import pytest

from beliefmerge import (
    DistanceKind,
    Model,
    Universe,
    evaluate,
    formula_distance,
    model_distance,
    models_of,
    parse_formula,
    profile_distance_vector,
    random_instance,
    realize,
    subsat,
)
from beliefmerge.errors import (
    DistanceTableError,
    UniverseMismatchError,
    UnsatisfiableFormulaError,
)
from beliefmerge.formulae import TRUE
from beliefmerge.weights import dominates

from oracles import brute_formula_distance, brute_vector

DD = DistanceKind.drastic()
DH = DistanceKind.hamming()
# the rough distance from the fairness counterexample: {0:0, 1:1, 2..4:2, >=5:5}
DS = DistanceKind.from_table([[0, 0], [1, 1], [2, 2], [3, 2], [4, 2], [5, 5]], default=5)

ABC = Universe(["a", "b", "c"])


class TestModelDistance:
    def test_hamming_differs_on_two(self):
        i = Model(ABC, 0b101)  # {a, !b, c}
        j = Model(ABC, 0b000)  # {!a, !b, !c}
        assert model_distance(DH, i, j) == 2

    def test_drastic_identity(self):
        i = Model(ABC, 0b010)
        assert model_distance(DD, i, i) == 0

    def test_drastic_any_difference_is_one(self):
        assert model_distance(DD, Model(ABC, 0), Model(ABC, 7)) == 1

    def test_rough_table_maps_three_bit_difference_to_two(self):
        u = Universe(["v1", "v2", "v3", "v4", "v5"])
        i = Model(u, 0b11100)
        j = Model(u, 0b00000)
        assert model_distance(DS, i, j) == 2

    def test_universe_mismatch(self):
        with pytest.raises(UniverseMismatchError):
            model_distance(DH, Model(ABC, 0), Model(Universe(["a", "b"]), 0))

    @pytest.mark.parametrize("kind", [DD, DH, DS])
    def test_identity_zero_and_positivity(self, kind):
        models = models_of(TRUE, ABC)
        for i in models:
            assert model_distance(kind, i, i) == 0
            for j in models:
                if i != j:
                    assert model_distance(kind, i, j) > 0

    @pytest.mark.parametrize("kind", [DD, DH])
    def test_triangle_inequality_exhaustive(self, kind):
        u = Universe(["p", "q", "r", "s"])
        models = models_of(TRUE, u)
        for i in models:
            for j in models:
                dij = model_distance(kind, i, j)
                for k in models:
                    assert model_distance(kind, i, k) + model_distance(kind, k, j) >= dij

    def test_rough_table_breaks_triangle(self):
        # 5 differing bits cost 5 directly but 2+1 through a midpoint
        u = Universe(["v1", "v2", "v3", "v4", "v5"])
        i, j, k = Model(u, 0b11111), Model(u, 0b00000), Model(u, 0b00001)
        assert model_distance(DS, i, j) > model_distance(DS, i, k) + model_distance(DS, k, j)


class TestDistanceTables:
    def test_drastic_equals_binary_table(self):
        binary = DistanceKind.from_table([[0, 0], [1, 1]], default=1)
        models = models_of(TRUE, ABC)
        for i in models:
            for j in models:
                assert model_distance(DD, i, j) == model_distance(binary, i, j)

    def test_table_must_send_zero_to_zero(self):
        with pytest.raises(DistanceTableError):
            DistanceKind.from_table([[0, 1], [1, 1]])
        with pytest.raises(DistanceTableError):
            DistanceKind.from_table([[1, 1]])

    def test_table_values_positive(self):
        with pytest.raises(DistanceTableError):
            DistanceKind.from_table([[0, 0], [1, 0]])

    def test_table_keys_increasing(self):
        with pytest.raises(DistanceTableError):
            DistanceKind.from_table([[0, 0], [2, 1], [1, 1]])

    def test_uncovered_count_is_an_error(self):
        partial = DistanceKind.from_table([[0, 0], [1, 1]])
        with pytest.raises(DistanceTableError):
            partial.mapped(2)


class TestFormulaDistance:
    def test_zero_iff_satisfying(self):
        f = parse_formula("a | b", ABC)
        for m in models_of(TRUE, ABC):
            d = formula_distance(DH, m, f)
            assert (d == 0) == evaluate(f, m)

    def test_conjunction_counts_false_variables(self):
        u = Universe(["x1", "x2", "x3"])
        f = parse_formula("x1 & x2 & x3", u)
        i = Model(u, 0b100)  # two of the three are false
        assert formula_distance(DH, i, f) == 2

    def test_negative_conjunction_from_derived_oracle(self):
        u = Universe(["a", "b"])
        f = parse_formula("!a & !b", u)
        i = Model(u, 0b11)
        assert brute_formula_distance(DH, i, f) == 2
        assert formula_distance(DH, i, f) == 2

    def test_unsatisfiable_formula_is_an_error(self):
        f = parse_formula("a & !a", ABC)
        with pytest.raises(UnsatisfiableFormulaError):
            formula_distance(DH, Model(ABC, 0), f)

    @pytest.mark.parametrize("kind", [DD, DH, DS])
    @pytest.mark.parametrize("seed", range(8))
    def test_agrees_with_brute_force(self, kind, seed):
        inst = random_instance(4, 3, seed=seed)
        for m in inst.mu_models():
            for f in inst.profile:
                assert formula_distance(kind, m, f) == brute_formula_distance(kind, m, f)


class TestProfileDistanceVector:
    def test_intro_scenario_vectors(self):
        inst = realize([[3, 0], [1, 1], [0, 3]])
        got = sorted(
            profile_distance_vector(DH, m, inst.profile) for m in inst.mu_models()
        )
        assert got == [(0, 3), (1, 1), (3, 0)]

    def test_all_satisfied_gives_zero_vector(self):
        profile = [parse_formula("a | b", ABC), parse_formula("c | !c", ABC)]
        i = Model(ABC, 0b110)
        assert profile_distance_vector(DH, i, profile) == (0, 0)

    def test_single_vector_realization_recomputed(self):
        inst = realize([[2, 2]], n=3)
        (model,) = inst.mu_models()
        assert brute_vector(DH, model, inst.profile) == (2, 2)
        assert profile_distance_vector(DH, model, inst.profile) == (2, 2)

    def test_instance_vectors_match_per_model_computation(self):
        inst = random_instance(4, 3, seed=17)
        for kind in (DD, DH, DS):
            vectors = inst.vectors(kind)
            for idx, m in enumerate(inst.mu_models()):
                assert vectors[idx] == brute_vector(kind, m, inst.profile)


class TestSubsat:
    def test_all_satisfied(self):
        profile = [parse_formula("a | !a", ABC), parse_formula("true", ABC)]
        assert subsat(Model(ABC, 0), profile) == frozenset({0, 1})

    def test_contradictory_pair(self):
        u = Universe(["x"])
        profile = [parse_formula("x", u), parse_formula("!x", u)]
        assert subsat(Model(u, 1), profile) == frozenset({0})

    @pytest.mark.parametrize("seed", range(10))
    def test_drastic_dominance_equals_subsat_containment(self, seed):
        # containment of satisfied sets is exactly drastic vector dominance
        inst = random_instance(4, 4, seed=seed)
        models = inst.mu_models()
        vectors = inst.vectors(DD)
        for a, i in enumerate(models):
            for b, j in enumerate(models):
                lhs = dominates(vectors[a], vectors[b])
                rhs = subsat(j, inst.profile) <= subsat(i, inst.profile)
                assert lhs == rhs
