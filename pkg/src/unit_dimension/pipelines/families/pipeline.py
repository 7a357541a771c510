"""Families pipeline: one node turning ``params:corpus`` into the stored graph corpus."""

from kedro.pipeline import Node, Pipeline

from .nodes import build_graph_corpus


def create_pipeline(**kwargs) -> Pipeline:
    return Pipeline(
        [
            Node(
                func=build_graph_corpus,
                inputs="params:corpus",
                outputs="graph_corpus",
                name="build_graph_corpus_node",
            ),
        ]
    )
