import numpy as np
import pytest

from unit_dimension.constructions import embed_mycielski_c10
from unit_dimension.errors import InvalidDirectedEdgeError, InvalidParameterError
from unit_dimension.families import (
    complete_graph,
    cycle_graph,
    mobius_ladder,
    mycielski_cycle,
    path_graph,
    random_graph,
)
from unit_dimension.graph_core import Graph, Walk
from unit_dimension.validation import (
    validate_obstruction,
    vecneg_edges_by_definition,
    vecneg_oracle_mismatches,
)
from unit_dimension.vecneg import (
    DirectedEdge,
    LowerBoundReason,
    Obstruction,
    ObstructionKind,
    build_vecneg,
    find_obstruction,
    lower_bound_dim,
    max_negation_defect,
    mobius_ladder_certificate,
    vecneg_adjacent,
)


class TestVecNegAdjacent:
    def test_reversal(self, square):
        assert vecneg_adjacent(square, DirectedEdge(0, 1), DirectedEdge(1, 0))

    def test_closed_four_walk(self, square):
        # 0-1-2-3-0 makes 0->1 and 2->3 opposite sides of a rhombus
        assert vecneg_adjacent(square, DirectedEdge(0, 1), DirectedEdge(2, 3))
        assert not vecneg_adjacent(square, DirectedEdge(0, 1), DirectedEdge(3, 2))

    def test_shared_vertex_is_not_adjacent(self, triangle):
        assert not vecneg_adjacent(triangle, DirectedEdge(0, 1), DirectedEdge(1, 2))

    def test_pentagon_has_no_rhombus(self):
        assert vecneg_adjacent(cycle_graph(5), DirectedEdge(0, 1), DirectedEdge(2, 3)) is False

    def test_non_edge_is_rejected(self, square):
        with pytest.raises(InvalidDirectedEdgeError):
            vecneg_adjacent(square, DirectedEdge(0, 2), DirectedEdge(1, 0))


class TestBuildVecNeg:
    def test_single_edge(self):
        vn = build_vecneg(path_graph(2))
        assert vn.vertices == (DirectedEdge(0, 1), DirectedEdge(1, 0))
        assert vn.edge_pairs() == [(DirectedEdge(0, 1), DirectedEdge(1, 0))]

    def test_square(self, square):
        vn = build_vecneg(square)
        assert len(vn.vertices) == 8
        # 4 reversals + 4 opposite-side pairs
        assert vn.num_edges == 8

    def test_pentagon_has_only_reversals(self):
        vn = build_vecneg(cycle_graph(5))
        assert len(vn.vertices) == 10
        assert vn.num_edges == 5
        assert all(e2 == e1.reversed() for e1, e2 in vn.edge_pairs())

    def test_matches_pairwise_definition_on_random_graphs(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            n = int(rng.integers(1, 13))
            g = random_graph(n, 0.4, rng)
            vn = build_vecneg(g)
            assert not vecneg_oracle_mismatches(g, vn)

    def test_oracle_agrees_on_named_graphs(self, k4, mc10):
        for g in [k4, mc10, mobius_ladder(4)]:
            built = {frozenset(pair) for pair in build_vecneg(g).edge_pairs()}
            assert built == vecneg_edges_by_definition(g)


class TestFindObstruction:
    @pytest.mark.parametrize("n", [n for n in range(3, 31) if n != 10])
    def test_mycielski_cycles_need_three_dimensions(self, n):
        g = mycielski_cycle(n)
        lower = lower_bound_dim(g)
        assert lower.bound == 3
        assert lower.reason is LowerBoundReason.VECNEG_OBSTRUCTION
        assert validate_obstruction(g, lower.certificate)

    def test_mycielski_c10_has_no_obstruction(self, mc10):
        assert find_obstruction(mc10) is None
        lower = lower_bound_dim(mc10)
        assert lower.bound == 2
        assert lower.reason is LowerBoundReason.HAS_CYCLE
        assert isinstance(lower.certificate, Walk)
        assert lower.certificate.is_walk_in(mc10)

    @pytest.mark.parametrize("n", [*range(3, 13), 50])
    def test_cycles_have_no_obstruction(self, n):
        assert find_obstruction(cycle_graph(n)) is None
        lower = lower_bound_dim(cycle_graph(n))
        assert lower.bound == 2
        assert lower.reason is LowerBoundReason.HAS_CYCLE

    def test_trees_get_the_trivial_bound(self):
        lower = lower_bound_dim(path_graph(5))
        assert lower == (1, LowerBoundReason.TRIVIAL, None)

    def test_empty_graph(self):
        with pytest.raises(InvalidParameterError):
            lower_bound_dim(Graph((), ()))

    @pytest.mark.parametrize("k", range(3, 16))
    def test_mobius_ladders_have_odd_closed_walks(self, k):
        g = mobius_ladder(k)
        found = find_obstruction(g)
        assert found.kind is ObstructionKind.ODD_CLOSED_WALK
        assert validate_obstruction(g, found)

    def test_apex_certificate_shape(self):
        # pick any graph whose certificate is an even apex walk and check its endpoints
        for n in [3, 5, 7, 9]:
            g = mycielski_cycle(n)
            cert = find_obstruction(g)
            if cert.kind is ObstructionKind.EVEN_APEX_WALK:
                assert cert.length % 2 == 0
                assert cert.walk[0] == (cert.apex, cert.a)
                assert cert.walk[-1] == (cert.apex, cert.b)
                assert cert.a < cert.b


class TestMobiusCertificate:
    @pytest.mark.parametrize("k", range(3, 16))
    def test_explicit_walk(self, k):
        cert = mobius_ladder_certificate(k)
        assert cert.length == 2 * k - 1
        assert validate_obstruction(mobius_ladder(k), cert)

    def test_k_too_small(self):
        with pytest.raises(InvalidParameterError):
            mobius_ladder_certificate(2)


class TestValidateObstruction:
    def test_rejects_broken_step(self, square):
        cert = Obstruction(
            ObstructionKind.ODD_CLOSED_WALK,
            (DirectedEdge(0, 1), DirectedEdge(1, 2), DirectedEdge(0, 1)),
        )
        assert not validate_obstruction(square, cert)

    def test_rejects_even_closed_walk(self, square):
        e, f = DirectedEdge(0, 1), DirectedEdge(1, 0)
        cert = Obstruction(ObstructionKind.ODD_CLOSED_WALK, (e, f, e))
        assert not validate_obstruction(square, cert)

    def test_rejects_apex_walk_with_wrong_ends(self, square):
        e, f = DirectedEdge(0, 1), DirectedEdge(1, 0)
        cert = Obstruction(ObstructionKind.EVEN_APEX_WALK, (e, f, e), apex=0, a=1, b=3)
        assert not validate_obstruction(square, cert)

    def test_non_edge_raises(self, square):
        cert = Obstruction(ObstructionKind.ODD_CLOSED_WALK, (DirectedEdge(0, 2),))
        with pytest.raises(InvalidDirectedEdgeError):
            validate_obstruction(square, cert)


class TestNegationDefect:
    def test_planar_mycielski_c10(self):
        g, emb = embed_mycielski_c10()
        vn = build_vecneg(g)
        assert max_negation_defect(vn, emb.aligned_to(g)) <= 1e-9

    def test_non_rhombus_drawing_has_defect(self, square):
        points = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 1.0], [0.0, 1.0]])
        assert max_negation_defect(build_vecneg(square), points) > 0.5

    def test_complete_graph_k3_has_only_reversals(self):
        vn = build_vecneg(complete_graph(3))
        assert vn.num_edges == 3
