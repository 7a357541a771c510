"""Report pipeline: joins lower and upper bounds and draws the embeddings."""

from kedro.pipeline import Node, Pipeline

from .nodes import check_corpus_consistency, compute_dimension_intervals, render_figures


def create_pipeline(**kwargs) -> Pipeline:
    return Pipeline(
        [
            Node(
                func=check_corpus_consistency,
                inputs=["lower_bounds", "verification_report", "search_results"],
                outputs="consistency_report",
                name="check_corpus_consistency_node",
            ),
            Node(
                func=compute_dimension_intervals,
                inputs=["graph_corpus", "lower_bounds", "verification_report", "search_results"],
                outputs="dimension_intervals",
                name="compute_dimension_intervals_node",
            ),
            Node(
                func=render_figures,
                inputs=["graph_corpus", "exact_embeddings", "search_embeddings", "params:figures"],
                outputs="figures",
                name="render_figures_node",
            ),
        ]
    )
