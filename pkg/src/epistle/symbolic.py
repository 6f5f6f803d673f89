"""Symbolic twin of the explicit checker.

A knowledge structure is a vocabulary of propositions, a state law (a
decision diagram whose satisfying assignments are the live worlds), and one
observed-variable set per agent.  Agent ``a`` knows ``f`` at a state exactly
when ``f`` holds at every state of the law agreeing with it on ``a``'s
observed variables, which the translation expresses as universal
quantification over the hidden variables.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .bdd import DdNode, DdStore
from .errors import ContradictoryPremise
from .formula import (
    And,
    Announced,
    Atom,
    Formula,
    Implies,
    Knows,
    KnowsWhether,
    Not,
    Or,
)
from .kripke import ObservabilityMatrix

__all__ = [
    "KnowledgeStructure",
    "translate",
    "announce_symbolic",
    "is_contradictory_symbolic",
    "label_symbolic",
]


@dataclass(frozen=True)
class KnowledgeStructure:
    """Vocabulary ``0..n_props-1``, state law, per-agent observed variables."""

    store: DdStore
    n_props: int
    state_law: DdNode
    obs_vars: tuple[frozenset[int], ...]

    def __post_init__(self):
        for i, observed in enumerate(self.obs_vars):
            if any(v < 0 or v >= self.n_props for v in observed):
                raise ValueError(f"agent {i} observes variables outside the vocabulary")

    @classmethod
    def from_observability(
        cls, store: DdStore, obs: ObservabilityMatrix
    ) -> "KnowledgeStructure":
        """Initial structure: unconstrained law, observations from the matrix."""
        observed = tuple(obs.observed(i) for i in range(obs.n))
        return cls(store, obs.n, store.true, observed)

    def live_count(self) -> int:
        return self.store.count_sat(self.state_law, self.n_props)


def translate(ks: KnowledgeStructure, f: Formula) -> DdNode:
    """Diagram whose satisfying law-states are exactly the worlds where ``f``
    holds."""
    store = ks.store
    if isinstance(f, Atom):
        if f.prop >= ks.n_props:
            raise ValueError(f"proposition p{f.prop} outside vocabulary of {ks.n_props}")
        return store.var(f.prop)
    if isinstance(f, Not):
        return store.not_(translate(ks, f.child))
    if isinstance(f, And):
        return store.all_of(translate(ks, c) for c in f.children)
    if isinstance(f, Or):
        return store.any_of(translate(ks, c) for c in f.children)
    if isinstance(f, Implies):
        return store.implies(translate(ks, f.left), translate(ks, f.right))
    if isinstance(f, Knows):
        hidden = [v for v in range(ks.n_props) if v not in ks.obs_vars[f.agent]]
        body = store.implies(ks.state_law, translate(ks, f.child))
        return store.forall(hidden, body)
    if isinstance(f, KnowsWhether):
        return store.or_(
            translate(ks, Knows(f.agent, f.child)),
            translate(ks, Knows(f.agent, Not(f.child))),
        )
    if isinstance(f, Announced):
        made = translate(ks, f.announcement)
        after = replace(ks, state_law=store.and_(ks.state_law, made))
        return store.implies(made, translate(after, f.continuation))
    raise TypeError(f"not a formula: {f!r}")


def announce_symbolic(ks: KnowledgeStructure, psi: Formula) -> KnowledgeStructure:
    """Conjoin the announced formula onto the state law."""
    made = translate(ks, psi)
    return replace(ks, state_law=ks.store.and_(ks.state_law, made))


def is_contradictory_symbolic(ks0: KnowledgeStructure, anns: list[Formula]) -> bool:
    """True iff the law collapses to false at some announcement step."""
    ks = ks0
    for a in anns:
        ks = announce_symbolic(ks, a)
        if ks.state_law is ks.store.false:
            return True
    return False


def label_symbolic(ks0: KnowledgeStructure, anns: list[Formula], hyp: Formula) -> bool:
    """True iff the final law entails the hypothesis.

    Raises ``ContradictoryPremise`` when an announcement falsifies the law.
    """
    ks = ks0
    for i, a in enumerate(anns):
        ks = announce_symbolic(ks, a)
        if ks.state_law is ks.store.false:
            raise ContradictoryPremise(f"announcement {i + 1} falsifies the state law")
    entailed = ks.store.implies(ks.state_law, translate(ks, hyp))
    return entailed is ks.store.true
