"""Search pipeline: numerical least-squares witnesses for listed graphs."""

from kedro.pipeline import Node, Pipeline

from .nodes import search_listed_graphs


def create_pipeline(**kwargs) -> Pipeline:
    return Pipeline(
        [
            Node(
                func=search_listed_graphs,
                inputs=["graph_corpus", "params:search"],
                outputs=["search_results", "search_embeddings"],
                name="search_listed_graphs_node",
            ),
        ]
    )
