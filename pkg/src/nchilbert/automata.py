"""Finite automata for regular monomial ideals.

The pipeline is regex -> Thompson NFA -> subset construction -> Hopcroft
minimization. A minimal DFA of a right-ideal language is then usable as an
orbit backend through :class:`DfaIdealState`: its states are exactly the
colon ideals ``(I : w)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels
from .ideal_states import IdealState
from .regex import Concat, EmptyWord, Letter, RegexExpr, Star, Union
from .words import Alphabet


@dataclass(frozen=True)
class Nfa:
    n_states: int
    n_letters: int
    transitions: tuple  # (source, letter or None for epsilon, target)
    initial: int
    accepting: frozenset

    def __post_init__(self):
        for s, a, t in self.transitions:
            if not (0 <= s < self.n_states and 0 <= t < self.n_states):
                raise ValueError(f"transition endpoint out of range: {(s, a, t)}")
            if a is not None and not (0 <= a < self.n_letters):
                raise ValueError(f"transition letter out of range: {(s, a, t)}")
        if not 0 <= self.initial < self.n_states:
            raise ValueError("initial state out of range")
        if any(not 0 <= s < self.n_states for s in self.accepting):
            raise ValueError("accepting state out of range")

    def accepts(self, w: Iterable[int]) -> bool:
        eps, step = self._adjacency()
        current = _closure({self.initial}, eps)
        for a in w:
            current = _closure({t for s in current for t in step[s].get(a, ())}, eps)
            if not current:
                return False
        return bool(current & self.accepting)

    def _adjacency(self):
        eps = [[] for _ in range(self.n_states)]
        step = [{} for _ in range(self.n_states)]
        for s, a, t in self.transitions:
            if a is None:
                eps[s].append(t)
            else:
                step[s].setdefault(a, []).append(t)
        return eps, step


def _closure(states, eps) -> frozenset:
    seen = set(states)
    stack = list(states)
    while stack:
        s = stack.pop()
        for t in eps[s]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def to_nfa(e: RegexExpr, n_letters: int) -> Nfa:
    """Thompson construction."""
    transitions = []
    count = 0

    def new_state():
        nonlocal count
        count += 1
        return count - 1

    def build(node):
        # returns (start, end) of a fragment with a single accepting end
        if isinstance(node, EmptyWord):
            s, t = new_state(), new_state()
            transitions.append((s, None, t))
            return s, t
        if isinstance(node, Letter):
            s, t = new_state(), new_state()
            transitions.append((s, node.index, t))
            return s, t
        if isinstance(node, Concat):
            start, end = build(node.parts[0])
            for part in node.parts[1:]:
                s, t = build(part)
                transitions.append((end, None, s))
                end = t
            return start, end
        if isinstance(node, Union):
            s, t = new_state(), new_state()
            for part in node.parts:
                ps, pt = build(part)
                transitions.append((s, None, ps))
                transitions.append((pt, None, t))
            return s, t
        if isinstance(node, Star):
            s, t = new_state(), new_state()
            cs, ct = build(node.child)
            transitions.extend([(s, None, cs), (ct, None, t), (ct, None, cs), (s, None, t)])
            return s, t
        raise TypeError(f"not a regex node: {node!r}")

    start, end = build(e)
    return Nfa(count, n_letters, tuple(transitions), start, frozenset((end,)))


@dataclass(frozen=True)
class Dfa:
    n_states: int
    n_letters: int
    table: tuple  # table[s][a] = target
    initial: int
    accepting: frozenset

    def __post_init__(self):
        if len(self.table) != self.n_states:
            raise ValueError("transition table must have one row per state")
        for row in self.table:
            if len(row) != self.n_letters:
                raise ValueError("transition table must be total")
            if any(not 0 <= t < self.n_states for t in row):
                raise ValueError("transition target out of range")
        if not 0 <= self.initial < self.n_states:
            raise ValueError("initial state out of range")
        if any(not 0 <= s < self.n_states for s in self.accepting):
            raise ValueError("accepting state out of range")

    def run(self, w: Iterable[int], state: Optional[int] = None) -> int:
        s = self.initial if state is None else state
        for a in w:
            s = self.table[s][a]
        return s

    def accepts(self, w: Iterable[int]) -> bool:
        return self.run(w) in self.accepting

    def flat_table(self) -> list:
        return [t for row in self.table for t in row]

    def reachable(self) -> list:
        """States reachable from the initial one, in breadth-first order."""
        order = [self.initial]
        seen = {self.initial}
        for s in order:
            for t in self.table[s]:
                if t not in seen:
                    seen.add(t)
                    order.append(t)
        return order


def determinize(nfa: Nfa, absorbing_accept: bool = False) -> Dfa:
    """Subset construction.

    NFA states that cannot reach an accepting state are dropped first, so
    every rejecting future collapses into the empty subset.

    With ``absorbing_accept`` the caller asserts that the language is closed
    under right multiplication; all accepting subsets are then merged into
    one absorbing state, which keeps closures like X* (g1|...|gk) X* small.
    """
    eps, step = nfa._adjacency()
    back = [[] for _ in range(nfa.n_states)]
    for s, _, t in nfa.transitions:
        back[t].append(s)
    live = set(nfa.accepting)
    stack = list(live)
    while stack:
        t = stack.pop()
        for s in back[t]:
            if s not in live:
                live.add(s)
                stack.append(s)

    def close(states):
        return _closure(states, eps) & live

    accept_all = frozenset(nfa.accepting)

    def canon(subset):
        if absorbing_accept and subset & nfa.accepting:
            return accept_all
        return subset

    start = canon(close({nfa.initial})) if nfa.initial in live else frozenset()
    index = {start: 0}
    subsets = [start]
    table = []
    for subset in subsets:
        row = []
        if absorbing_accept and subset is accept_all:
            table.append((index[subset],) * nfa.n_letters)
            continue
        for a in range(nfa.n_letters):
            target = canon(close({t for s in subset for t in step[s].get(a, ())}))
            if target not in index:
                index[target] = len(subsets)
                subsets.append(target)
            row.append(index[target])
        table.append(tuple(row))
    accepting = frozenset(i for i, sub in enumerate(subsets) if sub & nfa.accepting)
    return Dfa(len(subsets), nfa.n_letters, tuple(table), 0, accepting)


def minimize(d: Dfa) -> Dfa:
    """Minimal DFA of the same language, states numbered in breadth-first order."""
    order = d.reachable()
    position = {s: i for i, s in enumerate(order)}
    k = d.n_letters
    flat = [position[t] for s in order for t in d.table[s]]
    accepting = [s in d.accepting for s in order]
    blocks = kernels.hopcroft_classes(len(order), k, flat, accepting)

    # renumber blocks by first visit from the initial state
    number = {blocks[0]: 0}
    reps = [0]
    table = []
    for rep in reps:
        row = []
        for a in range(k):
            b = blocks[flat[rep * k + a]]
            if b not in number:
                number[b] = len(reps)
                reps.append(flat[rep * k + a])
            row.append(number[b])
        table.append(tuple(row))
    acc = frozenset(number[blocks[i]] for i in range(len(order)) if accepting[i])
    return Dfa(len(reps), k, tuple(table), 0, acc)


def regex_to_min_dfa(e: RegexExpr, n_letters: int, absorbing_accept: bool = False) -> Dfa:
    return minimize(determinize(to_nfa(e, n_letters), absorbing_accept))


def empty_language_dfa(n_letters: int) -> Dfa:
    return Dfa(1, n_letters, ((0,) * n_letters,), 0, frozenset())


def validate_right_ideal_language(d: Dfa) -> bool:
    """True iff the language is closed under right multiplication (v in L => vW in L)."""
    for s in d.reachable():
        if s in d.accepting and any(t not in d.accepting for t in d.table[s]):
            return False
    return True


def validate_two_sided_ideal_language(d: Dfa) -> bool:
    """True iff the language is closed under multiplication on both sides.

    Right closure is the accepting-absorbing check. Left closure means
    L is contained in a^-1 L for every letter a, checked as language
    inclusion on the product automaton started at (q0, delta(q0, a)).
    """
    if not validate_right_ideal_language(d):
        return False
    seen = set()
    stack = []
    for t in d.table[d.initial]:
        if (d.initial, t) not in seen:
            seen.add((d.initial, t))
            stack.append((d.initial, t))
    while stack:
        p, q = stack.pop()
        if p in d.accepting and q not in d.accepting:
            return False
        for a in range(d.n_letters):
            pair = (d.table[p][a], d.table[q][a])
            if pair not in seen:
                seen.add(pair)
                stack.append(pair)
    return True


def to_dot(d: Dfa, alphabet: Alphabet, name: str = "orbit") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for s in range(d.n_states):
        shape = "doublecircle" if s in d.accepting else "circle"
        attrs = f'label="{s}", shape={shape}'
        if s == d.initial:
            attrs += ', style=bold, xlabel="start"'
        lines.append(f"  q{s} [{attrs}];")
    for s in range(d.n_states):
        for a in range(d.n_letters):
            lines.append(f'  q{s} -> q{d.table[s][a]} [label="{alphabet.letters[a]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


class DfaIdealState(IdealState):
    """A right ideal seen as a state of the minimal DFA of the ideal's monomial language."""

    __slots__ = ("dfa", "state")

    def __init__(self, dfa: Dfa, state: Optional[int] = None):
        self.dfa = dfa
        self.state = dfa.initial if state is None else state

    @classmethod
    def from_dfa(cls, d: Dfa) -> "DfaIdealState":
        d = minimize(d)
        if not validate_right_ideal_language(d):
            raise ValueError("language is not closed under right multiplication")
        return cls(d)

    @property
    def n(self) -> int:
        return self.dfa.n_letters

    @property
    def is_unit(self) -> bool:
        return self.state in self.dfa.accepting

    @property
    def canonical_key(self):
        return self.state

    def colon_by_letter(self, i: int) -> "DfaIdealState":
        return DfaIdealState(self.dfa, self.dfa.table[self.state][i])

    def is_member(self, w: tuple) -> bool:
        return self.dfa.run(w, self.state) in self.dfa.accepting

    def __eq__(self, other):
        if not isinstance(other, DfaIdealState):
            return NotImplemented
        return self.dfa is other.dfa and self.state == other.state

    def __hash__(self):
        return hash((id(self.dfa), self.state))

    def __repr__(self):
        return f"DfaIdealState(state={self.state})"

    def describe(self, alphabet: Alphabet) -> str:
        if self.is_unit:
            return "<1>"
        return f"dfa state {self.state}"
