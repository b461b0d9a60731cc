"""Colon-ideal orbits.

The orbit of a right ideal I is the set of all colon ideals (I : w). It is
explored breadth first: states are taken from a FIFO queue and the letters
are applied in alphabet order, so the numbering of the orbit is fully
determined by the input ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .automata import Dfa, minimize
from .ideal_states import IdealState

DEFAULT_MAX_STATES = 100_000


class OrbitBudgetExceeded(RuntimeError):
    """The orbit grew past ``max_states``: the ideal is not regular or the budget is too small."""

    def __init__(self, max_states: int):
        super().__init__(
            f"orbit exceeded {max_states} states; the ideal may not be regular "
            "(raise --max-states if it is)"
        )
        self.max_states = max_states


@dataclass(frozen=True)
class Orbit:
    states: tuple
    n_letters: int
    transitions: tuple  # transitions[k][i] = index of (states[k] : x_i)
    unit_index: Optional[int]

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def adjacency(self) -> list:
        r = self.size
        out = [[0] * r for _ in range(r)]
        for k, row in enumerate(self.transitions):
            for target in row:
                out[k][target] += 1
        return out

    @property
    def constants(self) -> list:
        return [0 if k == self.unit_index else 1 for k in range(self.size)]

    def flat_table(self) -> list:
        return [t for row in self.transitions for t in row]


def orbit_data(initial: IdealState, max_states: int = DEFAULT_MAX_STATES) -> Orbit:
    n = initial.n
    states = [initial]
    # canonical key -> indices of states with that key (full equality confirms)
    index: dict = {initial.canonical_key: [0]}
    transitions = []
    unit_index = None
    head = 0
    while head < len(states):
        state = states[head]
        if state.is_unit:
            unit_index = head
        row = []
        for i in range(n):
            target = state.colon_by_letter(i)
            key = target.canonical_key
            found = None
            for j in index.get(key, ()):
                if states[j] == target:
                    found = j
                    break
            if found is None:
                if len(states) >= max_states:
                    raise OrbitBudgetExceeded(max_states)
                found = len(states)
                states.append(target)
                index.setdefault(key, []).append(found)
            row.append(found)
        transitions.append(tuple(row))
        head += 1
    return Orbit(tuple(states), n, tuple(transitions), unit_index)


def orbit_to_dfa(o: Orbit) -> Dfa:
    accepting = frozenset() if o.unit_index is None else frozenset((o.unit_index,))
    return Dfa(o.size, o.n_letters, o.transitions, 0, accepting)


def verify_minimality(o: Orbit) -> bool:
    return minimize(orbit_to_dfa(o)).n_states == o.size
