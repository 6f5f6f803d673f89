import pytest

from epistle.dsl import parse_formula
from epistle.errors import ContradictoryPremise, DeadWorld, SizeLimit
from epistle.formula import (
    And,
    Announced,
    Atom,
    Implies,
    Knows,
    KnowsWhether,
    Not,
    Or,
    reduce_announcements,
)
from epistle.kripke import (
    ObservabilityMatrix,
    announce,
    build_initial_model,
    evaluate,
    is_contradictory,
    label,
    worlds_where,
)
from epistle.rng import SplitMix64

from support import oracle_eval, oracle_label, random_boolean_formula, random_formula

# worlds are ints with bit j = proposition j, so (p0=1, p1=0) is 0b01


def forehead(n):
    return build_initial_model(n, ObservabilityMatrix.ones_minus_identity(n))


def mirror(n):
    return build_initial_model(n, ObservabilityMatrix.ones(n))


def thirst(n):
    return build_initial_model(n, ObservabilityMatrix.identity(n))


def classes(m, agent):
    mask = m.obs.agent_mask(agent)
    buckets = {}
    for w in m.live:
        buckets.setdefault(w & mask, set()).add(w)
    return {frozenset(v) for v in buckets.values()}


class TestBuildInitialModel:
    def test_thirst_classes_agree_on_own_bit(self):
        m = thirst(2)
        assert classes(m, 0) == {frozenset({0b00, 0b10}), frozenset({0b01, 0b11})}
        assert classes(m, 1) == {frozenset({0b00, 0b01}), frozenset({0b10, 0b11})}

    def test_mirror_classes_are_singletons(self):
        m = mirror(2)
        for agent in range(2):
            assert classes(m, agent) == {frozenset({w}) for w in range(4)}

    def test_forehead_classes_pair_on_own_bit(self):
        m = forehead(2)
        assert classes(m, 0) == {frozenset({0b00, 0b01}), frozenset({0b10, 0b11})}

    def test_all_live_initially(self):
        assert forehead(3).live == frozenset(range(8))

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            build_initial_model(21, ObservabilityMatrix.ones(21))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            build_initial_model(3, ObservabilityMatrix.ones(2))


class TestEvaluate:
    def test_mirror_agent_knows_own_status(self):
        m = mirror(2)
        assert evaluate(m, 0b01, KnowsWhether(0, Atom(0))) is True

    def test_forehead_cannot_see_own(self):
        m = forehead(2)
        assert evaluate(m, 0b11, Knows(0, Atom(0))) is False

    def test_informative_announcement_enables_inference(self):
        # agent 0 is muddy, agent 1 is not; after "someone is muddy" agent 0
        # sees a clean forehead and infers its own state
        m = forehead(2)
        f = Announced(Or((Atom(0), Atom(1))), Knows(0, Atom(0)))
        assert evaluate(m, 0b01, f) is True

    def test_vacuous_when_announcement_false(self):
        m = forehead(2)
        f = Announced(Atom(0), Atom(1))
        assert evaluate(m, 0b10, f) is True

    def test_dead_world(self):
        m = announce(forehead(2), Atom(0))
        with pytest.raises(DeadWorld):
            evaluate(m, 0b10, Atom(0))

    def test_agrees_with_independent_evaluator(self):
        rng = SplitMix64(0x5EED)
        for n in (2, 3):
            for make in (forehead, mirror, thirst):
                m = make(n)
                rows = m.obs.rows
                for _ in range(120):
                    f = random_formula(rng, n, depth=3)
                    for w in m.live:
                        assert evaluate(m, w, f) == oracle_eval(
                            list(m.live), rows, w, f
                        )


class TestAnnounce:
    def test_tautology_keeps_model(self):
        m = forehead(2)
        assert announce(m, Or((Atom(0), Not(Atom(0))))).live == m.live

    def test_existential_drops_all_clean_world(self):
        m = forehead(2)
        after = announce(m, Or((Atom(0), Atom(1))))
        assert after.live == frozenset({0b01, 0b10, 0b11})

    def test_mutual_ignorance_leaves_all_muddy(self):
        m = announce(forehead(2), Or((Atom(0), Atom(1))))
        ignorance = And(
            (Not(KnowsWhether(0, Atom(0))), Not(KnowsWhether(1, Atom(1))))
        )
        assert announce(m, ignorance).live == frozenset({0b11})

    def test_monotone(self):
        rng = SplitMix64(0xCAFE)
        for _ in range(100):
            m = forehead(3)
            f = random_formula(rng, 3, depth=3)
            after = announce(m, f)
            assert after.live <= m.live

    def test_boolean_announcements_idempotent(self):
        rng = SplitMix64(0xB00)
        for _ in range(100):
            m = thirst(3)
            f = random_boolean_formula(rng, 3, 3)
            once = announce(m, f)
            assert announce(once, f).live == once.live

    def test_epistemic_announcements_need_not_be_idempotent(self):
        # the muddy-children mechanism: repeating "nobody knows" keeps
        # shrinking the model
        m = announce(forehead(3), Or((Atom(0), Atom(1), Atom(2))))
        ignorance = And(
            tuple(Not(KnowsWhether(i, Atom(i))) for i in range(3))
        )
        once = announce(m, ignorance)
        twice = announce(once, ignorance)
        assert twice.live < once.live


class TestIsContradictory:
    def test_direct_contradiction(self):
        m = forehead(2)
        assert is_contradictory(m, [Atom(0), Not(Atom(0))]) is True

    def test_empty_sequence(self):
        assert is_contradictory(forehead(2), []) is False

    def test_unsatisfiable_second_announcement(self):
        m = forehead(2)
        anns = [
            Or((Atom(0), Atom(1))),
            And((Knows(0, Atom(0)), Knows(0, Not(Atom(0))))),
        ]
        assert is_contradictory(m, anns) is True


class TestLabel:
    def test_muddy_children_before_and_after(self):
        m = forehead(2)
        existential = parse_formula("p0 | p1", 2)
        ignorance = parse_formula("~Kw[0]p0 & ~Kw[1]p1", 2)
        hyp = parse_formula("Kw[0]p0 & Kw[1]p1", 2)
        assert label(m, [existential], hyp) is False
        assert label(m, [existential, ignorance], hyp) is True

    def test_mirror_repeated_announcement_instance(self):
        # two agents in front of a mirror; "someone muddy", then "not everyone
        # muddy" twice; with full observability each agent always knows whether
        # everyone is muddy (frozen from the 4-world enumeration)
        m = mirror(2)
        anns = [
            parse_formula("p0 | p1", 2),
            parse_formula("~(p0 & p1)", 2),
            parse_formula("~(p0 & p1)", 2),
        ]
        hyp = parse_formula("Kw[0] (p0 & p1)", 2)
        assert label(m, anns, hyp) is True

    def test_contradictory_premise_raises(self):
        with pytest.raises(ContradictoryPremise):
            label(forehead(2), [Atom(0), Not(Atom(0))], Atom(0))

    def test_agrees_with_prefixed_announcement_formula(self):
        rng = SplitMix64(0x1AB)
        for _ in range(150):
            n = 2 + rng.below(2)
            m = build_initial_model(n, ObservabilityMatrix.ones_minus_identity(n))
            anns = [
                random_formula(rng, n, depth=2, announce_budget=0)
                for _ in range(rng.below(4))
            ]
            hyp = random_formula(rng, n, depth=2, announce_budget=0)
            chain = hyp
            for a in reversed(anns):
                chain = Announced(a, chain)
            chain_valid = all(evaluate(m, w, chain) for w in m.live)
            try:
                assert label(m, anns, hyp) == chain_valid
            except ContradictoryPremise:
                assert chain_valid is True  # vacuously

    def test_agrees_with_reduction_oracle(self):
        rng = SplitMix64(0x0AC1)
        for _ in range(150):
            n = 2 + rng.below(2)
            m = build_initial_model(n, ObservabilityMatrix.ones_minus_identity(n))
            anns = [
                random_formula(rng, n, depth=2, announce_budget=0)
                for _ in range(rng.below(4))
            ]
            hyp = random_formula(rng, n, depth=2, announce_budget=0)
            chain = hyp
            for a in reversed(anns):
                chain = Announced(a, chain)
            reduced = reduce_announcements(chain)
            reduced_valid = all(evaluate(m, w, reduced) for w in m.live)
            try:
                assert label(m, anns, hyp) == reduced_valid
            except ContradictoryPremise:
                assert reduced_valid is True

    def test_agrees_with_independent_label_oracle(self):
        rng = SplitMix64(0x77)
        for _ in range(100):
            n = 2 + rng.below(2)
            obs = ObservabilityMatrix.ones_minus_identity(n)
            m = build_initial_model(n, obs)
            anns = [random_formula(rng, n, depth=2) for _ in range(rng.below(3))]
            hyp = random_formula(rng, n, depth=2)
            expected = oracle_label(n, obs.rows, anns, hyp)
            if expected is None:
                with pytest.raises(ContradictoryPremise):
                    label(m, anns, hyp)
            else:
                assert label(m, anns, hyp) == expected


class TestS5Axioms:
    def _random_models(self, rng, count):
        out = []
        while len(out) < count:
            n = 2 + rng.below(2)
            rows = [[rng.chance(0.5) for _ in range(n)] for _ in range(n)]
            m = build_initial_model(n, ObservabilityMatrix.from_rows(rows))
            # optionally restrict by a boolean announcement to vary live sets
            if rng.chance(0.5):
                m = announce(m, random_boolean_formula(rng, n, 2))
                if not m.live:
                    continue
            out.append(m)
        return out

    def test_axioms_valid(self):
        rng = SplitMix64(0x55)
        for m in self._random_models(rng, 120):
            n = m.n_agents
            phi = random_formula(rng, n, depth=2, announce_budget=0)
            psi = random_formula(rng, n, depth=2, announce_budget=0)
            a = rng.below(n)
            distribution = Implies(
                Knows(a, Implies(phi, psi)), Implies(Knows(a, phi), Knows(a, psi))
            )
            truth = Implies(Knows(a, phi), phi)
            positive_introspection = Implies(Knows(a, phi), Knows(a, Knows(a, phi)))
            negative_introspection = Implies(
                Not(Knows(a, phi)), Knows(a, Not(Knows(a, phi)))
            )
            for axiom in (
                distribution,
                truth,
                positive_introspection,
                negative_introspection,
            ):
                assert worlds_where(m, axiom) == m.live
