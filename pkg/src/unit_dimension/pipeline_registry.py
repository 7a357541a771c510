"""Project pipelines."""

from kedro.framework.project import find_pipelines
from kedro.pipeline import Pipeline


def register_pipelines() -> dict[str, Pipeline]:
    """Register the project's pipelines.

    Besides one entry per package under ``pipelines/``, ``bounds`` builds the
    corpus and its certified lower bounds without any numerical work.

    Returns:
        A mapping from pipeline names to ``Pipeline`` objects.
    """
    pipelines = find_pipelines(raise_errors=True)
    pipelines["bounds"] = pipelines["families"] + pipelines["obstruction"]
    pipelines["__default__"] = sum(
        pipeline for name, pipeline in pipelines.items() if name != "bounds"
    )
    return pipelines
