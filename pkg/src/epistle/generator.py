"""Problem sampling, contradiction filtering, labeling, and label balancing.

Determinism contract: every candidate draw runs on its own substream keyed by
(master seed, setup bucket, draw index), so the emitted dataset is a pure
function of the configuration.  Within one draw the sampling order is fixed:
setup, agent count, names, observability, extra-announcement count, the extra
announcements in order, then the hypothesis.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .backends import Checker, explicit_label
from .errors import GenerationStall
from .formula import Formula, Quantifier
from .kripke import (
    ObservabilityMatrix,
    build_initial_model,
    is_contradictory,
)
from .names import DEFAULT_NAME_POOL, NamePool
from .rng import SplitMix64, split_seed, substream
from .setups import ALL_SETUPS, SetupKind, fixed_observability, setup_ordinal
from .statements import BeliefLayer, ExpressionSpec, StatementSpec
from .verbalize import announcement_clause, render_hypothesis

__all__ = [
    "GenConfig",
    "Hypothesis",
    "ProblemInstance",
    "Rejected",
    "sample_observability",
    "sample_statement",
    "sample_announcement",
    "sample_hypothesis",
    "make_problem",
    "iter_problems",
    "generate_balanced",
]


@dataclass(frozen=True)
class GenConfig:
    """Sampling parameters.

    ``p_negate_announcement_knowledge`` governs negating the knowledge
    operator inside announcements; ``p_negate_other`` governs every other
    polarity coin (predicate polarity and hypothesis modality).  The number
    of announcements beyond the fixed existential one is uniform on
    ``0..n_agents``.
    """

    seed: int = 0
    n_agents_choices: tuple[int, ...] = (2, 3)
    max_order: int = 2
    p_negate_announcement_knowledge: float = 0.8
    p_negate_other: float = 0.5
    per_setup_count: int = 400
    setups: tuple[SetupKind, ...] = ALL_SETUPS
    max_draws_per_bucket: int = 1_000_000

    def __post_init__(self):
        if self.per_setup_count <= 0 or self.per_setup_count % 2:
            raise ValueError("per_setup_count must be positive and even")
        for p in (self.p_negate_announcement_knowledge, self.p_negate_other):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"probability {p} outside [0, 1]")
        if self.max_order < 1:
            raise ValueError("max_order must be at least 1")
        if not self.n_agents_choices:
            raise ValueError("n_agents_choices must be nonempty")
        if any(n < 2 for n in self.n_agents_choices):
            raise ValueError("problems need at least two agents")
        if not self.setups:
            raise ValueError("setups must be nonempty")
        # normalize so flag order cannot change the stream
        object.__setattr__(
            self, "n_agents_choices", tuple(sorted(set(self.n_agents_choices)))
        )
        object.__setattr__(
            self, "setups", tuple(s for s in ALL_SETUPS if s in set(self.setups))
        )


@dataclass(frozen=True)
class Hypothesis:
    formula: Formula
    text: str
    order: int


@dataclass(frozen=True)
class ProblemInstance:
    """A labeled problem, with formulas and surface text locked together."""

    setup: SetupKind
    n_agents: int
    names: tuple[str, ...]
    obs: ObservabilityMatrix
    announcements: tuple[tuple[Formula, str], ...]
    hypothesis: Hypothesis
    label: bool
    seed: int
    draw_index: int

    def announcement_formulas(self) -> tuple[Formula, ...]:
        return tuple(f for f, _ in self.announcements)

    def dedup_key(self):
        return (
            self.setup,
            self.n_agents,
            self.announcement_formulas(),
            self.hypothesis.formula,
        )


@dataclass(frozen=True)
class Rejected:
    """A discarded draw; kept as a value so callers can count reasons."""

    reason: str
    draw_index: int


def sample_observability(kind: SetupKind, n: int, rng: SplitMix64) -> ObservabilityMatrix:
    """Matrix for the setup; only the explicit-card setup is random.

    Each explicit entry is independently true with probability ``1/n``, so
    the expected number of true entries is ``n``.
    """
    if kind is SetupKind.EXPLICIT:
        p = 1.0 / n
        return ObservabilityMatrix.from_rows(
            [[rng.chance(p) for _ in range(n)] for _ in range(n)]
        )
    return fixed_observability(kind, n)


_QUANTIFIERS = (Quantifier.EVERYONE, Quantifier.NOT_EVERYONE, Quantifier.NOBODY)


def sample_statement(
    rng: SplitMix64, n: int, negation_prob: float
) -> tuple[Formula, StatementSpec]:
    """Subject uniform over the ``n`` agents plus the three quantifiers;
    predicate negated with ``negation_prob``."""
    idx = rng.below(n + len(_QUANTIFIERS))
    subject = idx if idx < n else _QUANTIFIERS[idx - n]
    spec = StatementSpec(subject, rng.chance(negation_prob))
    expr = ExpressionSpec((), spec)
    return expr.to_formula(n), spec


def sample_announcement(
    rng: SplitMix64, n: int, cfg: GenConfig
) -> tuple[Formula, ExpressionSpec]:
    """Fair coin between a bare statement and a first-order belief about one."""
    if rng.chance(0.5):
        _, statement = sample_statement(rng, n, cfg.p_negate_other)
        spec = ExpressionSpec((), statement)
    else:
        knower = rng.below(n)
        whether = rng.chance(0.5)
        negate_knowledge = rng.chance(cfg.p_negate_announcement_knowledge)
        _, statement = sample_statement(rng, n, cfg.p_negate_other)
        spec = ExpressionSpec((BeliefLayer(knower, whether, negate_knowledge),), statement)
    return spec.to_formula(n), spec


def sample_hypothesis(
    rng: SplitMix64, n: int, max_order: int, negation_prob: float
) -> tuple[Formula, ExpressionSpec]:
    """Belief order uniform on ``1..max_order``; layers drawn outermost first."""
    order = 1 + rng.below(max_order)
    layers = tuple(
        BeliefLayer(rng.below(n), rng.chance(0.5), rng.chance(negation_prob))
        for _ in range(order)
    )
    _, statement = sample_statement(rng, n, negation_prob)
    spec = ExpressionSpec(layers, statement)
    return spec.to_formula(n), spec


_EXISTENTIAL = ExpressionSpec((), StatementSpec(Quantifier.SOMEONE, False))


def make_problem(
    rng: SplitMix64,
    cfg: GenConfig,
    draw_index: int = 0,
    name_pool: NamePool = DEFAULT_NAME_POOL,
    checker: Checker = explicit_label,
):
    """One candidate draw: a ``ProblemInstance``, or ``Rejected`` when the
    announcements contradict each other."""
    setup = rng.choice(cfg.setups)
    n = rng.choice(cfg.n_agents_choices)
    names = name_pool.sample(rng, n)
    obs = sample_observability(setup, n, rng)

    specs = [_EXISTENTIAL]
    ann_formulas = [_EXISTENTIAL.to_formula(n)]
    n_extra = rng.below(n + 1)
    for _ in range(n_extra):
        formula, spec = sample_announcement(rng, n, cfg)
        specs.append(spec)
        ann_formulas.append(formula)
    hyp_formula, hyp_spec = sample_hypothesis(rng, n, cfg.max_order, cfg.p_negate_other)

    model = build_initial_model(n, obs)
    if is_contradictory(model, ann_formulas):
        return Rejected("contradictory", draw_index)
    verdict = checker(obs, ann_formulas, hyp_formula)

    announcements = tuple(
        (formula, announcement_clause(setup, spec, names))
        for formula, spec in zip(ann_formulas, specs)
    )
    hypothesis = Hypothesis(
        hyp_formula,
        render_hypothesis(setup, hyp_spec, names, has_announcements=True),
        hyp_spec.order,
    )
    return ProblemInstance(
        setup=setup,
        n_agents=n,
        names=names,
        obs=obs,
        announcements=announcements,
        hypothesis=hypothesis,
        label=verdict,
        seed=cfg.seed,
        draw_index=draw_index,
    )


def iter_problems(
    cfg: GenConfig,
    count: int,
    name_pool: NamePool = DEFAULT_NAME_POOL,
    checker: Checker = explicit_label,
):
    """Yield ``count`` accepted instances from the unbucketed draw stream."""
    produced = 0
    draw = 0
    while produced < count:
        if draw >= cfg.max_draws_per_bucket:
            raise GenerationStall(f"no instance after {draw} draws")
        rng = substream(cfg.seed, draw)
        result = make_problem(rng, cfg, draw, name_pool, checker)
        draw += 1
        if isinstance(result, Rejected):
            continue
        produced += 1
        yield result


def _fill_setup(
    cfg: GenConfig, setup: SetupKind, name_pool: NamePool, checker: Checker
) -> list[ProblemInstance]:
    """Generate one setup's bucket: exactly half True, half False labels.

    Draws keep the earliest instances of each label (undersampling the
    majority label) and skip duplicates of
    (setup, n, announcement formulas, hypothesis formula).
    """
    half = cfg.per_setup_count // 2
    bucket_cfg = replace(cfg, setups=(setup,))
    bucket_seed = split_seed(cfg.seed, setup_ordinal(setup))
    kept: dict[bool, list[ProblemInstance]] = {True: [], False: []}
    seen: set = set()
    draw = 0
    while len(kept[True]) < half or len(kept[False]) < half:
        if draw >= cfg.max_draws_per_bucket:
            raise GenerationStall(
                f"setup {setup.value}: {len(kept[True])} True / {len(kept[False])} "
                f"False after {draw} draws (need {half} of each)"
            )
        rng = substream(bucket_seed, draw)
        result = make_problem(rng, bucket_cfg, draw, name_pool, checker)
        draw += 1
        if isinstance(result, Rejected):
            continue
        key = result.dedup_key()
        if key in seen:
            continue
        seen.add(key)
        side = kept[result.label]
        if len(side) < half:
            side.append(result)
    merged = kept[True] + kept[False]
    merged.sort(key=lambda inst: inst.draw_index)
    return merged


def generate_balanced(
    cfg: GenConfig,
    name_pool: NamePool = DEFAULT_NAME_POOL,
    checker: Checker = explicit_label,
) -> list[ProblemInstance]:
    """The full dataset: ``per_setup_count`` instances per configured setup,
    each setup exactly label-balanced, in draw order within each setup."""
    out: list[ProblemInstance] = []
    for setup in cfg.setups:
        out.extend(_fill_setup(cfg, setup, name_pool, checker))
    return out
