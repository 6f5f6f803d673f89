import hypothesis.strategies as st

from epistle.formula import (
    And,
    Announced,
    Atom,
    Implies,
    Knows,
    KnowsWhether,
    Not,
    Or,
)

N_AGENTS = 3


def formula_strategy(n_agents: int = N_AGENTS, allow_announced: bool = True):
    """Hypothesis strategy for formula trees over ``n_agents`` propositions."""
    atoms = st.builds(Atom, st.integers(0, n_agents - 1))

    def extend(children):
        branches = [
            st.builds(Not, children),
            st.builds(
                lambda items: And(tuple(items)),
                st.lists(children, min_size=2, max_size=3),
            ),
            st.builds(
                lambda items: Or(tuple(items)),
                st.lists(children, min_size=2, max_size=3),
            ),
            st.builds(Implies, children, children),
            st.builds(Knows, st.integers(0, n_agents - 1), children),
            st.builds(KnowsWhether, st.integers(0, n_agents - 1), children),
        ]
        if allow_announced:
            branches.append(st.builds(Announced, children, children))
        return st.one_of(branches)

    return st.recursive(atoms, extend, max_leaves=12)
