"""
Families pipeline: builds the corpus of named graphs every other pipeline reads.
"""

import logging
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from unit_dimension.families import FamilyKind, FamilySpec, build_family
from unit_dimension.io_utils import graph_to_dict

logger = logging.getLogger(__name__)


class CorpusRange(BaseModel):
    """All members of one family with ``start <= size <= stop``."""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    start: int = Field(ge=1)
    stop: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_order(self) -> "CorpusRange":
        if self.stop < self.start:
            raise ValueError(f"empty range {self.start}..{self.stop} for {self.kind.value}")
        return self

    def specs(self) -> list[FamilySpec]:
        return [FamilySpec(kind=self.kind, size=n) for n in range(self.start, self.stop + 1)]


def build_graph_corpus(corpus_params: dict[str, Any]) -> dict[str, dict[str, Any]]:
    """Generate every family member listed in the parameters.

    Args:
        corpus_params: ``{"families": [{"kind": ..., "start": ..., "stop": ...}, ...]}``

    Returns:
        Mapping from graph name (e.g. ``mycielski_cycle_10``) to its family,
        size, labels and labelled edges
    """
    ranges = [CorpusRange(**entry) for entry in corpus_params["families"]]
    corpus: dict[str, dict[str, Any]] = {}
    for spec in (spec for r in ranges for spec in r.specs()):
        if spec.name in corpus:
            logger.warning(f"{spec.name} is listed twice in the corpus parameters")
            continue
        g = build_family(spec)
        corpus[spec.name] = graph_to_dict(g, family=spec.kind.value, size=spec.size)

    logger.info(f"Built a corpus of {len(corpus)} graphs from {len(ranges)} family ranges")
    return corpus
