"""English surface forms for problems: statements, beliefs, premises, prompts.

Every template cell is total: any (setup, subject kind, polarity) combination
renders to exactly one clause, so generated text can be parsed back to the
originating formulas.
"""

from __future__ import annotations

from typing import Sequence

from .formula import Quantifier, Subject
from .setups import SetupKind
from .statements import ExpressionSpec

__all__ = [
    "number_word",
    "render_statement",
    "render_belief",
    "render_premise",
    "render_hypothesis",
    "render_prompt",
]

_NUMBER_WORDS = (
    "zero", "one", "two", "three", "four", "five",
    "six", "seven", "eight", "nine", "ten",
)


def number_word(n: int) -> str:
    """Cardinal words up to ten, digits beyond."""
    if 0 <= n <= 10:
        return _NUMBER_WORDS[n]
    return str(n)


def _subject_text(subject: Subject, names: Sequence[str]) -> str:
    if isinstance(subject, Quantifier):
        return subject.value  # "everyone", "not everyone", "nobody", "someone"
    return names[subject]


def render_statement(
    setup: SetupKind, subject: Subject, negated: bool, names: Sequence[str]
) -> str:
    """Clause for one predicate statement, e.g. "Herbert's forehead is muddy"."""
    who = _subject_text(subject, names)
    if setup in (SetupKind.FOREHEAD_MUD, SetupKind.FOREHEAD_MUD_MIRROR):
        return f"{who}'s forehead is {'not ' if negated else ''}muddy"
    if setup is SetupKind.THIRST:
        return f"{who} is {'not ' if negated else ''}thirsty"
    if setup is SetupKind.EXPLICIT:
        verb = "did not pick" if negated else "picked"
        return f"{who} {verb} a red card"
    raise ValueError(f"unknown setup {setup!r}")


def render_belief(
    setup: SetupKind,
    spec: ExpressionSpec,
    names: Sequence[str],
    position: str,
    has_announcements: bool = True,
) -> str:
    """Clause for a belief expression.

    ``position`` is ``"announcement"`` or ``"hypothesis"``.  Announcements use
    plain "knows / does not know"; hypotheses use "can know / cannot know",
    with "now" inserted in the outermost layer when at least one announcement
    precedes.  Nested layers compose right to left.
    """
    if position not in ("announcement", "hypothesis"):
        raise ValueError(f"unknown position {position!r}")
    if not spec.layers:
        raise ValueError("belief rendering needs at least one layer")
    clause = render_statement(
        setup, spec.statement.subject, spec.statement.negated, names
    )
    for depth, layer in enumerate(reversed(spec.layers)):
        outermost = depth == len(spec.layers) - 1
        who = names[layer.knower]
        mode = "whether" if layer.whether else "that"
        if position == "announcement":
            verb = "does not know" if layer.negated else "knows"
        elif layer.negated:
            verb = "cannot know"
        elif outermost and has_announcements:
            verb = "can now know"
        else:
            verb = "can know"
        clause = f"{who} {verb} {mode} {clause}"
    return clause


def _statement_or_belief(
    setup: SetupKind,
    spec: ExpressionSpec,
    names: Sequence[str],
    position: str,
    has_announcements: bool,
) -> str:
    if spec.layers:
        return render_belief(setup, spec, names, position, has_announcements)
    return render_statement(setup, spec.statement.subject, spec.statement.negated, names)


def announcement_clause(
    setup: SetupKind, spec: ExpressionSpec, names: Sequence[str]
) -> str:
    """The clause following "It is publicly announced that"."""
    return _statement_or_belief(setup, spec, names, "announcement", True)


def render_hypothesis(
    setup: SetupKind,
    spec: ExpressionSpec,
    names: Sequence[str],
    has_announcements: bool = True,
) -> str:
    """Full hypothesis sentence, capitalized and terminated."""
    clause = _statement_or_belief(setup, spec, names, "hypothesis", has_announcements)
    return clause[0].upper() + clause[1:] + "."


def observation_sentences(
    setup: SetupKind, names: Sequence[str], obs_rows: Sequence[Sequence[bool]]
) -> list[str]:
    """Setup-specific scene description, before any announcement."""
    if setup is SetupKind.FOREHEAD_MUD_MIRROR:
        return ["There is a mirror in the room."]
    if setup is SetupKind.EXPLICIT:
        sentences = ["Each person draws a card, face unrevealed (red or black)."]
        for i, row in enumerate(obs_rows):
            for j, seen in enumerate(row):
                if seen:
                    sentences.append(f"{names[j]}'s card is revealed to {names[i]}.")
        return sentences
    return []


def render_premise(instance) -> str:
    """Premise text for a complete problem instance."""
    n = instance.n_agents
    sentences = [
        f"There are {number_word(n)} persons.",
        "Everyone is visible to others.",
    ]
    sentences.extend(
        observation_sentences(instance.setup, instance.names, instance.obs.rows)
    )
    for _, clause in instance.announcements:
        sentences.append(f"It is publicly announced that {clause}.")
    return " ".join(sentences)


def render_prompt(premise: str, hypothesis: str) -> str:
    """Single-line prompt with the two answer continuations "True"/"False"."""
    return f"{premise} Question: {hypothesis} True or False ?"
