"""Explicit-state S5 model checking.

Worlds are integers: bit ``j`` of a world gives the truth of proposition
``j``.  Agent ``i`` cannot distinguish two live worlds that agree on every
proposition it observes, which makes each agent's relation an equivalence
relation by construction.  A public announcement keeps exactly the worlds
where the announced formula holds.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ContradictoryPremise, DeadWorld, SizeLimit
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

__all__ = [
    "MAX_EXPLICIT_AGENTS",
    "ObservabilityMatrix",
    "KripkeModel",
    "build_initial_model",
    "evaluate",
    "announce",
    "worlds_where",
    "is_contradictory",
    "label",
]

# Explicit enumeration over 2^n worlds; larger problems belong to the
# symbolic backend.
MAX_EXPLICIT_AGENTS = 20


@dataclass(frozen=True)
class ObservabilityMatrix:
    """Square boolean matrix: entry (i, j) means agent i initially knows
    whether proposition j is true."""

    rows: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("observability matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def agent_mask(self, agent: int) -> int:
        """Bitmask of the propositions agent ``agent`` observes."""
        mask = 0
        for j, bit in enumerate(self.rows[agent]):
            if bit:
                mask |= 1 << j
        return mask

    def observed(self, agent: int) -> frozenset[int]:
        return frozenset(j for j, bit in enumerate(self.rows[agent]) if bit)

    @classmethod
    def from_rows(cls, rows) -> "ObservabilityMatrix":
        return cls(tuple(tuple(bool(b) for b in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "ObservabilityMatrix":
        return cls.from_rows([[i == j for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int) -> "ObservabilityMatrix":
        return cls.from_rows([[True] * n for _ in range(n)])

    @classmethod
    def ones_minus_identity(cls, n: int) -> "ObservabilityMatrix":
        return cls.from_rows([[i != j for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class KripkeModel:
    """Immutable set of live worlds plus the observability structure."""

    n_agents: int
    live: frozenset[int]
    obs: ObservabilityMatrix


def build_initial_model(n: int, obs: ObservabilityMatrix) -> KripkeModel:
    """Full model over all ``2^n`` valuations."""
    if not 1 <= n <= MAX_EXPLICIT_AGENTS:
        raise SizeLimit(
            f"explicit backend handles 1..{MAX_EXPLICIT_AGENTS} agents, got {n}"
        )
    if obs.n != n:
        raise ValueError(f"observability matrix is {obs.n}x{obs.n}, expected {n}x{n}")
    return KripkeModel(n, frozenset(range(1 << n)), obs)


def evaluate(m: KripkeModel, w: int, f: Formula) -> bool:
    """Truth of ``f`` at world ``w``; ``w`` must still be live."""
    if w not in m.live:
        raise DeadWorld(f"world {w:0{m.n_agents}b} is not in the model")
    return _eval(m, w, f)


def _eval(m: KripkeModel, w: int, f: Formula) -> bool:
    if isinstance(f, Atom):
        return bool((w >> f.prop) & 1)
    if isinstance(f, Not):
        return not _eval(m, w, f.child)
    if isinstance(f, And):
        return all(_eval(m, w, c) for c in f.children)
    if isinstance(f, Or):
        return any(_eval(m, w, c) for c in f.children)
    if isinstance(f, Implies):
        return (not _eval(m, w, f.left)) or _eval(m, w, f.right)
    if isinstance(f, Knows):
        mask = m.obs.agent_mask(f.agent)
        ref = w & mask
        return all(_eval(m, v, f.child) for v in m.live if v & mask == ref)
    if isinstance(f, KnowsWhether):
        return _eval(m, w, Knows(f.agent, f.child)) or _eval(
            m, w, Knows(f.agent, Not(f.child))
        )
    if isinstance(f, Announced):
        if not _eval(m, w, f.announcement):
            return True
        return _eval(announce(m, f.announcement), w, f.continuation)
    raise TypeError(f"not a formula: {f!r}")


def announce(m: KripkeModel, psi: Formula) -> KripkeModel:
    """Restrict the model to the worlds where ``psi`` holds; may be empty."""
    survivors = frozenset(w for w in m.live if _eval(m, w, psi))
    return replace(m, live=survivors)


def worlds_where(m: KripkeModel, f: Formula) -> frozenset[int]:
    """Live worlds satisfying ``f``."""
    return frozenset(w for w in m.live if _eval(m, w, f))


def is_contradictory(m0: KripkeModel, anns: list[Formula]) -> bool:
    """True iff announcing ``anns`` in order empties the model at some step."""
    m = m0
    for a in anns:
        m = announce(m, a)
        if not m.live:
            return True
    return False


def label(m0: KripkeModel, anns: list[Formula], hyp: Formula) -> bool:
    """True iff ``hyp`` holds at every world surviving the announcements.

    Raises ``ContradictoryPremise`` when some announcement empties the model.
    """
    m = m0
    for i, a in enumerate(anns):
        m = announce(m, a)
        if not m.live:
            raise ContradictoryPremise(f"announcement {i + 1} eliminates every world")
    return all(_eval(m, w, hyp) for w in m.live)
