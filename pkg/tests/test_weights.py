from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beliefmerge import (
    AllPositiveWeights,
    DistanceKind,
    EqualWeights,
    ExpertWeights,
    ExplicitWeights,
    dominates,
    expand_scheme,
    strictly_dominates,
    weighted_distance,
)
from beliefmerge.weights import (
    as_weight_vector,
    default_expert_weight,
    parse_scheme,
    scheme_to_text,
)


class TestWeightedDistance:
    def test_intro_weighted_row(self):
        assert weighted_distance([2, 1], [3, 0]) == 6

    def test_equal_weights_sum(self):
        assert weighted_distance([1, 1], [1, 1]) == 2

    def test_zero_vector(self):
        assert weighted_distance([Fraction(7, 3), 5], [0, 0]) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            weighted_distance([1, 2], [1, 2, 3])

    @settings(max_examples=100, deadline=None)
    @given(
        st.lists(st.fractions(min_value=Fraction(1, 100), max_value=100), min_size=1, max_size=5),
        st.data(),
    )
    def test_linearity(self, w, data):
        m = len(w)
        ints = st.lists(st.integers(min_value=0, max_value=50), min_size=m, max_size=m)
        d1 = data.draw(ints)
        d2 = data.draw(ints)
        total = [a + b for a, b in zip(d1, d2)]
        assert weighted_distance(w, total) == weighted_distance(w, d1) + weighted_distance(w, d2)


class TestDominance:
    def test_componentwise(self):
        assert dominates([0, 1], [1, 1])

    def test_incomparable_pair(self):
        assert not dominates([3, 0], [2, 2])
        assert not dominates([2, 2], [3, 0])

    def test_reflexive(self):
        assert dominates([2, 2], [2, 2])

    def test_strict_examples(self):
        assert strictly_dominates([0, 1], [0, 2])
        assert not strictly_dominates([1, 1], [1, 1])
        assert not strictly_dominates([1, 0], [0, 1])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            dominates([1], [1, 2])

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_strict_dominance_forces_strictly_smaller_products(self, data):
        m = data.draw(st.integers(min_value=1, max_value=4))
        ints = st.lists(st.integers(min_value=0, max_value=9), min_size=m, max_size=m)
        d1 = data.draw(ints)
        d2 = data.draw(ints)
        w = data.draw(
            st.lists(
                st.fractions(min_value=Fraction(1, 20), max_value=20),
                min_size=m,
                max_size=m,
            )
        )
        if strictly_dominates(d1, d2):
            assert weighted_distance(w, d1) < weighted_distance(w, d2)

    def test_scaling_preserves_argmin(self):
        vectors = [(3, 0), (1, 1), (0, 3), (2, 2)]
        w = as_weight_vector([2, 3])
        for c in (Fraction(1, 7), 2, Fraction(13, 5)):
            scaled = [wi * c for wi in w]
            before = min(range(4), key=lambda i: weighted_distance(w, vectors[i]))
            after = min(range(4), key=lambda i: weighted_distance(scaled, vectors[i]))
            assert before == after


class TestSchemes:
    def test_expert_three_for_two_sources(self):
        got = expand_scheme(ExpertWeights(3), 2)
        assert got == [as_weight_vector([3, 1]), as_weight_vector([1, 3])]

    def test_equal_is_all_ones(self):
        assert expand_scheme(EqualWeights(), 4) == [as_weight_vector([1, 1, 1, 1])]

    def test_explicit_passes_through(self):
        scheme = ExplicitWeights([[5, 2], [2, 5]])
        assert expand_scheme(scheme, 2) == list(scheme.vectors)

    def test_all_positive_is_symbolic(self):
        assert expand_scheme(AllPositiveWeights(), 3) is None

    def test_expert_without_value_needs_resolution(self):
        with pytest.raises(ValueError):
            expand_scheme(ExpertWeights(), 2)

    def test_expert_minimum(self):
        with pytest.raises(ValueError):
            ExpertWeights(1)

    def test_explicit_validation(self):
        with pytest.raises(ValueError):
            ExplicitWeights([])
        with pytest.raises(ValueError):
            ExplicitWeights([[1, 2], [1]])
        with pytest.raises(ValueError):
            ExplicitWeights([[1, 0]])

    def test_default_expert_weight(self):
        assert default_expert_weight(DistanceKind.drastic(), n=5, m=3) == 4
        assert default_expert_weight(DistanceKind.hamming(), n=5, m=3) == 16

    def test_default_expert_weight_for_table(self):
        ds = DistanceKind.from_table(
            [[0, 0], [1, 1], [2, 2], [3, 2], [4, 2], [5, 5]], default=5
        )
        assert default_expert_weight(ds, n=5, m=2) == 11


class TestSchemeSyntax:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("equal", EqualWeights()),
            ("all", AllPositiveWeights()),
            ("expert", ExpertWeights()),
            ("expert:4", ExpertWeights(4)),
            ("list:2,1;1,2", ExplicitWeights([[2, 1], [1, 2]])),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_scheme(text) == expected

    def test_round_trip(self):
        for text in ("equal", "all", "expert", "expert:4", "list:2,1;1,2"):
            assert scheme_to_text(parse_scheme(text)) == text

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_scheme("fancy")
