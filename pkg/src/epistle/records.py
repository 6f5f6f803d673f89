"""Dataset records and their JSON-Lines serialization.

One record per line, UTF-8, LF endings, keys always in the same order, so
identical configurations produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .dsl import print_formula
from .generator import ProblemInstance
from .verbalize import render_premise

__all__ = ["DatasetRecord", "record_from_instance", "write_jsonl", "read_jsonl"]

_FIELD_ORDER = (
    "premise",
    "hypothesis",
    "label",
    "setup",
    "n_agents",
    "n_announcements",
    "hypothesis_order",
    "premise_formulas",
    "hypothesis_formula",
    "names",
    "seed",
    "index",
)


@dataclass(frozen=True)
class DatasetRecord:
    premise: str
    hypothesis: str
    label: str  # "True" or "False", matching the prompt continuations
    setup: str
    n_agents: int
    n_announcements: int
    hypothesis_order: int
    premise_formulas: tuple[str, ...]
    hypothesis_formula: str
    names: tuple[str, ...]
    seed: int
    index: int

    def to_json(self) -> str:
        payload = {name: getattr(self, name) for name in _FIELD_ORDER}
        payload["premise_formulas"] = list(self.premise_formulas)
        payload["names"] = list(self.names)
        return json.dumps(payload, ensure_ascii=False)


def record_from_instance(instance: ProblemInstance) -> DatasetRecord:
    return DatasetRecord(
        premise=render_premise(instance),
        hypothesis=instance.hypothesis.text,
        label="True" if instance.label else "False",
        setup=instance.setup.value,
        n_agents=instance.n_agents,
        n_announcements=len(instance.announcements),
        hypothesis_order=instance.hypothesis.order,
        premise_formulas=tuple(
            print_formula(f) for f in instance.announcement_formulas()
        ),
        hypothesis_formula=print_formula(instance.hypothesis.formula),
        names=instance.names,
        seed=instance.seed,
        index=instance.draw_index,
    )


def write_jsonl(records: Iterable[DatasetRecord], path: str) -> int:
    """Write records one per line; returns the number written."""
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(record.to_json())
            fh.write("\n")
            count += 1
    return count


def read_jsonl(path: str) -> list[dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
