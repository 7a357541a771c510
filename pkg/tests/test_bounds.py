import pytest

from unit_dimension.bounds import (
    DimensionInterval,
    UpperBoundSource,
    combine_bounds,
    dimension_interval,
    exact_upper_bound,
    simplex_upper_bound,
)
from unit_dimension.errors import InconsistentBoundsError
from unit_dimension.families import (
    complete_graph,
    cycle_graph,
    mobius_ladder,
    mycielski_cycle,
    path_graph,
)
from unit_dimension.graph_core import Graph
from unit_dimension.optimizer import SearchConfig
from unit_dimension.vecneg import LowerBound, LowerBoundReason
from unit_dimension.verification import verify_embedding


class TestCombineBounds:
    def test_prefers_exact_on_ties(self, k4):
        lower = LowerBound(2, LowerBoundReason.HAS_CYCLE, None)
        interval = combine_bounds(k4, lower, exact_dimension=3, search_dimension=3)
        assert interval.upper == 3
        assert interval.upper_source is UpperBoundSource.EXACT

    def test_falls_back_to_simplex(self):
        g = mobius_ladder(4)
        lower = LowerBound(3, LowerBoundReason.VECNEG_OBSTRUCTION, None)
        interval = combine_bounds(g, lower)
        assert (interval.upper, interval.upper_source) == (7, UpperBoundSource.SIMPLEX)

    def test_witness_below_lower_bound(self, mc10):
        lower = LowerBound(3, LowerBoundReason.VECNEG_OBSTRUCTION, None)
        with pytest.raises(InconsistentBoundsError):
            combine_bounds(mc10, lower, search_dimension=2)

    def test_simplex_bound(self):
        assert simplex_upper_bound(path_graph(1)) == 1
        assert simplex_upper_bound(path_graph(2)) == 1
        assert simplex_upper_bound(cycle_graph(5)) == 4


class TestDimensionInterval:
    def test_text(self):
        assert str(DimensionInterval(2, 2, LowerBoundReason.HAS_CYCLE, UpperBoundSource.EXACT)) == "dim = 2"
        assert (
            str(DimensionInterval(2, 3, LowerBoundReason.HAS_CYCLE, UpperBoundSource.EXACT))
            == "2 ≤ dim ≤ 3"
        )

    def test_mycielski_c10_is_exactly_two(self, mc10):
        interval, lower, witness = dimension_interval(mc10)
        assert (interval.lower, interval.upper) == (2, 2)
        assert interval.upper_source is UpperBoundSource.EXACT
        assert witness.dimension == 2

    @pytest.mark.parametrize("n", [5, 7, 12])
    def test_other_mycielski_cycles_are_exactly_three(self, n):
        interval, lower, _ = dimension_interval(mycielski_cycle(n))
        assert (interval.lower, interval.upper) == (3, 3)

    def test_unknown_graph_uses_search(self):
        # a triangle with a pendant edge is no named family
        g = Graph.from_labelled_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
        interval, _, witness = dimension_interval(g, SearchConfig(dimension=1, restarts=10))
        assert (interval.lower, interval.upper) == (2, 2)
        assert interval.upper_source is UpperBoundSource.SEARCH
        assert witness.dimension == 2

    def test_without_search(self):
        g = Graph.from_labelled_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
        interval, _, witness = dimension_interval(g)
        assert (interval.lower, interval.upper) == (2, 3)
        assert interval.upper_source is UpperBoundSource.SIMPLEX
        assert witness.dimension == 3
        assert verify_embedding(g, witness).ok

    def test_mobius_ladder_interval(self):
        interval, lower, _ = dimension_interval(mobius_ladder(3))
        assert interval.lower == 3
        assert interval.upper == 5
        assert lower.certificate is not None


class TestExactUpperBound:
    def test_recognised_family(self):
        dimension, emb = exact_upper_bound(complete_graph(5))
        assert dimension == 4
        assert emb.dimension == 4

    def test_unrecognised(self):
        assert exact_upper_bound(Graph.from_labelled_edges([("x", "y")])) is None

    def test_family_without_closed_form(self):
        assert exact_upper_bound(mobius_ladder(5)) is None
