"""Obstruction pipeline: lower bounds with certificates, and the audits behind them."""

from kedro.pipeline import Node, Pipeline

from .nodes import (
    audit_mobius_certificates,
    audit_vecneg_oracle,
    compute_lower_bounds,
    validate_certificates,
)


def create_pipeline(**kwargs) -> Pipeline:
    return Pipeline(
        [
            Node(
                func=compute_lower_bounds,
                inputs="graph_corpus",
                outputs=["lower_bounds", "certificates"],
                name="compute_lower_bounds_node",
            ),
            Node(
                func=validate_certificates,
                inputs=["graph_corpus", "certificates"],
                outputs="certificate_validation",
                name="validate_certificates_node",
            ),
            Node(
                func=audit_vecneg_oracle,
                inputs="params:vecneg_oracle",
                outputs="vecneg_oracle_audit",
                name="audit_vecneg_oracle_node",
            ),
            Node(
                func=audit_mobius_certificates,
                inputs="params:mobius_audit",
                outputs="mobius_audit",
                name="audit_mobius_certificates_node",
            ),
        ]
    )
