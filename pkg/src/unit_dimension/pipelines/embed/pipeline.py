"""Embed pipeline: closed-form embeddings, their verification and the three-layer sweep."""

from kedro.pipeline import Node, Pipeline

from .nodes import (
    check_planar_negation,
    compute_exact_embeddings,
    plot_ring_parameters,
    sweep_ring_parameters,
    verify_exact_embeddings,
)


def create_pipeline(**kwargs) -> Pipeline:
    return Pipeline(
        [
            Node(
                func=compute_exact_embeddings,
                inputs="graph_corpus",
                outputs="exact_embeddings",
                name="compute_exact_embeddings_node",
            ),
            Node(
                func=verify_exact_embeddings,
                inputs=["graph_corpus", "exact_embeddings", "params:exact_tolerances"],
                outputs="verification_report",
                name="verify_exact_embeddings_node",
            ),
            Node(
                func=sweep_ring_parameters,
                inputs=["params:ring_sweep", "params:exact_tolerances"],
                outputs="ring_parameter_table",
                name="sweep_ring_parameters_node",
            ),
            Node(
                func=plot_ring_parameters,
                inputs="ring_parameter_table",
                outputs="ring_parameter_plot",
                name="plot_ring_parameters_node",
            ),
            Node(
                func=check_planar_negation,
                inputs="params:negation_tol",
                outputs="planar_negation_check",
                name="check_planar_negation_node",
            ),
        ]
    )
