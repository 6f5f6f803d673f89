"""Epistemic formula trees.

A formula is an immutable tree built from atoms (one boolean proposition per
agent), the usual boolean connectives, per-agent knowledge operators, and a
public-announcement operator.  ``And``/``Or`` are n-ary so that quantified
subjects ("everyone is thirsty") desugar to flat conjunctions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

__all__ = [
    "Atom",
    "Not",
    "And",
    "Or",
    "Implies",
    "Knows",
    "KnowsWhether",
    "Announced",
    "Formula",
    "Quantifier",
    "Subject",
    "conj",
    "disj",
    "negated",
    "expand_whether",
    "atoms_of",
    "modal_depth",
    "desugar_subject",
    "reduce_announcements",
]


@dataclass(frozen=True)
class Atom:
    """Proposition ``p<prop>`` -- the predicate about agent ``prop``."""

    prop: int


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    children: tuple["Formula", ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("And requires at least one child")


@dataclass(frozen=True)
class Or:
    children: tuple["Formula", ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("Or requires at least one child")


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Knows:
    """Agent ``agent`` knows that ``child`` holds."""

    agent: int
    child: "Formula"


@dataclass(frozen=True)
class KnowsWhether:
    """Agent ``agent`` knows whether ``child`` holds.

    Semantically equal to ``Knows(a, f) | Knows(a, ~f)``; kept as its own node
    because the surface language distinguishes the two verb forms.
    """

    agent: int
    child: "Formula"


@dataclass(frozen=True)
class Announced:
    """``continuation`` evaluated after ``announcement`` is publicly made."""

    announcement: "Formula"
    continuation: "Formula"


Formula = Union[Atom, Not, And, Or, Implies, Knows, KnowsWhether, Announced]


class Quantifier(Enum):
    """Non-individual subjects allowed in statements."""

    EVERYONE = "everyone"
    NOT_EVERYONE = "not everyone"
    NOBODY = "nobody"
    SOMEONE = "someone"


#: A statement subject: either a single agent index or a quantifier.
Subject = Union[int, Quantifier]


def conj(children: Iterable[Formula]) -> Formula:
    """N-ary conjunction; a single conjunct is returned unwrapped."""
    items = tuple(children)
    if len(items) == 1:
        return items[0]
    return And(items)


def disj(children: Iterable[Formula]) -> Formula:
    """N-ary disjunction; a single disjunct is returned unwrapped."""
    items = tuple(children)
    if len(items) == 1:
        return items[0]
    return Or(items)


def negated(f: Formula) -> Formula:
    """Negate ``f``, collapsing a double negation."""
    if isinstance(f, Not):
        return f.child
    return Not(f)


def expand_whether(agent: int, f: Formula) -> Formula:
    """Definitional expansion of "knows whether"."""
    return Or((Knows(agent, f), Knows(agent, Not(f))))


def atoms_of(f: Formula) -> frozenset[int]:
    """The set of proposition indices occurring in ``f``."""
    out: set[int] = set()
    _collect_atoms(f, out)
    return frozenset(out)


def _collect_atoms(f: Formula, out: set[int]) -> None:
    if isinstance(f, Atom):
        out.add(f.prop)
    elif isinstance(f, Not):
        _collect_atoms(f.child, out)
    elif isinstance(f, (And, Or)):
        for c in f.children:
            _collect_atoms(c, out)
    elif isinstance(f, Implies):
        _collect_atoms(f.left, out)
        _collect_atoms(f.right, out)
    elif isinstance(f, (Knows, KnowsWhether)):
        _collect_atoms(f.child, out)
    elif isinstance(f, Announced):
        _collect_atoms(f.announcement, out)
        _collect_atoms(f.continuation, out)
    else:
        raise TypeError(f"not a formula: {f!r}")


def modal_depth(f: Formula) -> int:
    """Maximum nesting of knowledge operators in ``f``."""
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Not):
        return modal_depth(f.child)
    if isinstance(f, (And, Or)):
        return max(modal_depth(c) for c in f.children)
    if isinstance(f, Implies):
        return max(modal_depth(f.left), modal_depth(f.right))
    if isinstance(f, (Knows, KnowsWhether)):
        return 1 + modal_depth(f.child)
    if isinstance(f, Announced):
        return max(modal_depth(f.announcement), modal_depth(f.continuation))
    raise TypeError(f"not a formula: {f!r}")


def desugar_subject(subject: Subject, negate_predicate: bool, n: int) -> Formula:
    """Rewrite a quantified subject to a plain boolean formula over ``n`` atoms.

    With the per-agent literal ``l_i`` (``p_i``, or ``~p_i`` when
    ``negate_predicate``):

    * a single agent ``a`` maps to ``l_a``,
    * ``EVERYONE`` to the conjunction of the ``l_i``,
    * ``NOBODY`` to the conjunction of the negated literals,
    * ``NOT_EVERYONE`` to the negated conjunction,
    * ``SOMEONE`` to the disjunction of the ``l_i``.

    Double negations introduced by ``NOBODY`` over a negated predicate are
    collapsed.
    """
    if n < 1:
        raise ValueError("need at least one agent")
    lits = [Not(Atom(i)) if negate_predicate else Atom(i) for i in range(n)]
    if isinstance(subject, Quantifier):
        if subject is Quantifier.EVERYONE:
            return conj(lits)
        if subject is Quantifier.NOBODY:
            return conj(negated(l) for l in lits)
        if subject is Quantifier.NOT_EVERYONE:
            return negated(conj(lits))
        if subject is Quantifier.SOMEONE:
            return disj(lits)
        raise ValueError(f"unknown quantifier: {subject!r}")
    if not 0 <= subject < n:
        raise ValueError(f"agent index {subject} out of range for n={n}")
    return lits[subject]


def reduce_announcements(f: Formula) -> Formula:
    """Eliminate every announcement operator via the standard equivalences.

    The result contains no ``Announced`` node and is true at exactly the same
    worlds of every model.  Used as an independent oracle for the semantic
    backends, so it deliberately shares no code with them.
    """
    if isinstance(f, Atom):
        return f
    if isinstance(f, Knows):
        return Knows(f.agent, reduce_announcements(f.child))
    if isinstance(f, KnowsWhether):
        return KnowsWhether(f.agent, reduce_announcements(f.child))
    if isinstance(f, Not):
        return Not(reduce_announcements(f.child))
    if isinstance(f, And):
        return And(tuple(reduce_announcements(c) for c in f.children))
    if isinstance(f, Or):
        return Or(tuple(reduce_announcements(c) for c in f.children))
    if isinstance(f, Implies):
        return Implies(reduce_announcements(f.left), reduce_announcements(f.right))
    if isinstance(f, Announced):
        psi = reduce_announcements(f.announcement)
        cont = reduce_announcements(f.continuation)
        return _push_announcement(psi, cont)
    raise TypeError(f"not a formula: {f!r}")


def _push_announcement(psi: Formula, f: Formula) -> Formula:
    """Rewrite ``[!psi] f`` for an announcement-free ``f``."""
    if isinstance(f, Atom):
        return Implies(psi, f)
    if isinstance(f, Not):
        return Implies(psi, Not(_push_announcement(psi, f.child)))
    if isinstance(f, And):
        return And(tuple(_push_announcement(psi, c) for c in f.children))
    if isinstance(f, Or):
        return Or(tuple(_push_announcement(psi, c) for c in f.children))
    if isinstance(f, Implies):
        return Implies(_push_announcement(psi, f.left), _push_announcement(psi, f.right))
    if isinstance(f, Knows):
        return Implies(psi, Knows(f.agent, _push_announcement(psi, f.child)))
    if isinstance(f, KnowsWhether):
        # No direct equivalence for "knows whether"; expand it first.
        return _push_announcement(psi, expand_whether(f.agent, f.child))
    raise TypeError(f"unexpected node under announcement: {f!r}")
