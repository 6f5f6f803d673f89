"""Uniform entry points over the two checking backends.

A checker takes an observability matrix, the announcement formulas in order,
and a hypothesis; it returns the boolean label or raises
``ContradictoryPremise``.
"""

from __future__ import annotations

from typing import Callable

from .bdd import DdStore
from .errors import BackendMismatch
from .formula import Formula
from .kripke import ObservabilityMatrix, build_initial_model, is_contradictory, label
from .symbolic import KnowledgeStructure, is_contradictory_symbolic, label_symbolic

__all__ = [
    "Checker",
    "explicit_label",
    "symbolic_label",
    "both_label",
    "get_checker",
    "contradictory",
]

Checker = Callable[[ObservabilityMatrix, list[Formula], Formula], bool]


def explicit_label(obs: ObservabilityMatrix, anns: list[Formula], hyp: Formula) -> bool:
    model = build_initial_model(obs.n, obs)
    return label(model, anns, hyp)


def symbolic_label(obs: ObservabilityMatrix, anns: list[Formula], hyp: Formula) -> bool:
    ks = KnowledgeStructure.from_observability(DdStore(), obs)
    return label_symbolic(ks, anns, hyp)


def both_label(obs: ObservabilityMatrix, anns: list[Formula], hyp: Formula) -> bool:
    """Label with both backends; raise ``BackendMismatch`` if they disagree."""
    explicit = explicit_label(obs, anns, hyp)
    symbolic = symbolic_label(obs, anns, hyp)
    if explicit != symbolic:
        raise BackendMismatch(
            f"explicit={explicit} symbolic={symbolic} for the same problem"
        )
    return explicit


_CHECKERS: dict[str, Checker] = {
    "explicit": explicit_label,
    "symbolic": symbolic_label,
    "both": both_label,
}


def get_checker(name: str) -> Checker:
    try:
        return _CHECKERS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}") from None


def contradictory(obs: ObservabilityMatrix, anns: list[Formula], backend: str) -> bool:
    """Contradiction test under the named backend ("both" requires agreement)."""
    results = []
    if backend in ("explicit", "both"):
        model = build_initial_model(obs.n, obs)
        results.append(is_contradictory(model, anns))
    if backend in ("symbolic", "both"):
        ks = KnowledgeStructure.from_observability(DdStore(), obs)
        results.append(is_contradictory_symbolic(ks, anns))
    if not results:
        raise ValueError(f"unknown backend {backend!r}")
    if len(results) == 2 and results[0] != results[1]:
        raise BackendMismatch("backends disagree on contradiction detection")
    return results[0]
