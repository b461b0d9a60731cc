import random

import pytest

from helpers import all_words, brute_prefix_member, fixture_spec, spec_from_words
from nchilbert.automata import DfaIdealState, regex_to_min_dfa
from nchilbert.hilbert import initial_state
from nchilbert.ideal_states import FgRightIdealState, TwoSidedContext
from nchilbert.orbit import (
    Orbit,
    OrbitBudgetExceeded,
    orbit_data,
    orbit_to_dfa,
    verify_minimality,
)
from nchilbert.regex import close_right, matches_factor, matches_prefix, parse_regex, union
from nchilbert.words import Alphabet

ARTIN_ADJACENCY = [
    [1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [0, 1, 1, 0, 1, 0],
    [0, 0, 1, 0, 1, 1],
    [0, 0, 0, 0, 3, 0],
    [0, 0, 2, 0, 0, 1],
]


def artin_orbit():
    return orbit_data(initial_state(fixture_spec("artin_example"), "dfa"))


def test_artin_orbit():
    o = artin_orbit()
    assert o.size == 6
    assert o.adjacency == ARTIN_ADJACENCY
    assert o.constants == [1, 1, 1, 1, 0, 1]
    assert o.unit_index == 4
    assert verify_minimality(o)


def test_artin_state_order():
    # BFS order I, I_x, I_y, I_xz, <1>, I_xzz: check each state is the colon by its word
    spec = fixture_spec("artin_example")
    lang = union(*spec.generators)
    o = artin_orbit()
    words = [(), (0,), (1,), (0, 2), (1, 2), (0, 2, 2)]
    for state, u in zip(o.states, words):
        for v in all_words(3, 5):
            assert state.is_member(v) == matches_factor(lang, u + v)


def test_artin_orbit_dfa_language():
    spec = fixture_spec("artin_example")
    lang = union(*spec.generators)
    d = orbit_to_dfa(artin_orbit())
    for w in all_words(3, 7):
        assert d.accepts(w) == matches_factor(lang, w)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unit_and_zero(n):
    unit = orbit_data(FgRightIdealState.from_words(n, [()]))
    assert (unit.size, unit.adjacency, unit.constants) == (1, [[n]], [0])
    zero = orbit_data(FgRightIdealState.from_words(n, []))
    assert (zero.size, zero.adjacency, zero.constants) == (1, [[n]], [1])
    assert zero.unit_index is None
    assert not orbit_to_dfa(zero).accepting
    d = orbit_to_dfa(unit)
    assert all(d.accepts(w) for w in all_words(n, 3))


def test_non_noetherian_right_ideal():
    ab = Alphabet(("x", "y"))
    e = parse_regex("y* x", ab)
    o = orbit_data(DfaIdealState(regex_to_min_dfa(close_right(e, 2), 2)))
    assert o.size == 2
    assert o.states[1].is_unit
    # Nerode classes of the right-ideal language, by brute force
    signatures = {
        tuple(matches_prefix(e, u + v) for v in all_words(2, 3)) for u in all_words(2, 3)
    }
    assert len(signatures) == 2


def test_budget():
    with pytest.raises(OrbitBudgetExceeded):
        orbit_data(initial_state(fixture_spec("artin_example"), "dfa"), max_states=5)
    assert orbit_data(initial_state(fixture_spec("artin_example"), "dfa"), max_states=6).size == 6


def test_fake_orbit_not_minimal():
    # two copies of the zero ideal state glued as separate orbit states
    zero = FgRightIdealState.from_words(2, [])
    fake = Orbit((zero, zero), 2, ((1, 1), (0, 0)), None)
    assert not verify_minimality(fake)


def test_random_orbits_invariants():
    rng = random.Random(11)
    for k in range(60):
        n = rng.choice((2, 3))
        gens = [tuple(rng.randrange(n) for _ in range(rng.randint(1, 4))) for _ in range(rng.randint(1, 3))]
        start = FgRightIdealState.from_words(n, gens) if k % 2 else TwoSidedContext(n, gens).initial_state()
        o = orbit_data(start)
        again = orbit_data(start)
        assert o.transitions == again.transitions
        assert [s.canonical_key for s in o.states] == [s.canonical_key for s in again.states]
        assert all(sum(row) == n for row in o.adjacency)
        assert o.unit_index is not None
        assert verify_minimality(o)
        if k % 2:
            d = orbit_to_dfa(o)
            for w in all_words(n, 5):
                assert d.accepts(w) == brute_prefix_member(gens, w)


def test_backends_give_same_orbit():
    spec = spec_from_words(3, "two-sided", [(1, 2), (0, 2, 0), (2, 2, 1)])
    ts = orbit_data(initial_state(spec, "ts"))
    dfa = orbit_data(initial_state(spec, "dfa"))
    assert ts.transitions == dfa.transitions
