"""Monomial right ideals as orbit states.

Every backend exposes the same small protocol: ``colon_by_letter(i)``
returns the colon ideal ``(I : x_i)``, ``is_unit`` tells whether the state
is the whole algebra, ``is_member(w)`` decides membership of a word, and
``canonical_key`` is a hashable value that is equal exactly when two
states of the same backend (and same shared context) are the same ideal.

Two backends live here:

* :class:`FgRightIdealState` - a finitely generated right ideal given by
  its minimal (prefix-free) right basis.
* :class:`TwoSidedAugmentedState` - a right ideal of the form
  ``<R> + I`` where ``I`` is a finitely generated two-sided ideal shared by
  the whole orbit and ``R`` is a finite right part.

The DFA backend for infinitely generated regular ideals lives in
:mod:`nchilbert.automata`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import Alphabet, is_factor_t, is_prefix_t, word_key

UNIT_BASIS = ((),)


class IdealState:
    """Protocol shared by all orbit-state backends."""

    n: int

    def colon_by_letter(self, i: int) -> "IdealState":
        raise NotImplementedError

    @property
    def is_unit(self) -> bool:
        raise NotImplementedError

    def is_member(self, w: tuple) -> bool:
        raise NotImplementedError

    @property
    def canonical_key(self):
        raise NotImplementedError

    def describe(self, alphabet: Alphabet) -> str:
        raise NotImplementedError


def canonicalize_right_basis(words: Iterable[tuple]) -> tuple:
    """Minimal right basis: drop duplicates and words having another basis word as prefix.

    Returns the basis as a tuple sorted by degree then lexicographically.
    """
    ordered = sorted(set(tuple(w) for w in words), key=word_key)
    if ordered and ordered[0] == ():
        return UNIT_BASIS
    kept: list[tuple] = []
    kept_set: set[tuple] = set()
    for w in ordered:
        # any kept prefix is strictly shorter, so it was already seen
        if any(w[:k] in kept_set for k in range(1, len(w))):
            continue
        kept.append(w)
        kept_set.add(w)
    return tuple(kept)


def _render_basis(basis: tuple, alphabet: Alphabet) -> str:
    return "<" + ", ".join(alphabet.render(w) for w in basis) + ">"


@dataclass(frozen=True)
class FgRightIdealState(IdealState):
    n: int
    basis: tuple = ()

    @classmethod
    def from_words(cls, n: int, words: Iterable[tuple]) -> "FgRightIdealState":
        return cls(n, canonicalize_right_basis(words))

    @property
    def is_unit(self) -> bool:
        return self.basis == UNIT_BASIS

    @property
    def canonical_key(self):
        return self.basis

    def colon_by_letter(self, i: int) -> "FgRightIdealState":
        if self.is_unit:
            return self
        out = []
        for w in self.basis:
            if w[0] == i:
                if len(w) == 1:
                    return FgRightIdealState(self.n, UNIT_BASIS)
                out.append(w[1:])
        return FgRightIdealState(self.n, canonicalize_right_basis(out))

    def is_member(self, w: tuple) -> bool:
        return any(is_prefix_t(b, w) for b in self.basis)

    def describe(self, alphabet: Alphabet) -> str:
        return _render_basis(self.basis, alphabet)


def factor_minimal(words: Iterable[tuple]) -> tuple:
    """Two-sided minimal basis: drop words having another basis word as a factor."""
    ordered = sorted(set(tuple(w) for w in words), key=word_key)
    if ordered and ordered[0] == ():
        return UNIT_BASIS
    kept: list[tuple] = []
    for w in ordered:
        if not any(is_factor_t(g, w) for g in kept):
            kept.append(w)
    return tuple(kept)


class TwoSidedContext:
    """The two-sided generator set shared by every state of one orbit."""

    def __init__(self, n: int, generators: Iterable[tuple]):
        self.n = n
        self.generators = factor_minimal(generators)
        self.is_unit_ideal = self.generators == UNIT_BASIS
        # generators grouped by first letter, as (g, g[1:]) pairs
        self._by_first: list[list[tuple]] = [[] for _ in range(n)]
        if not self.is_unit_ideal:
            for g in self.generators:
                self._by_first[g[0]].append(g[1:])

    def tails(self, i: int) -> list[tuple]:
        return self._by_first[i]

    def contains(self, w: tuple) -> bool:
        return any(is_factor_t(g, w) for g in self.generators)

    def initial_state(self) -> "TwoSidedAugmentedState":
        if self.is_unit_ideal:
            return TwoSidedAugmentedState(self, UNIT_BASIS)
        return TwoSidedAugmentedState(self, ())

    def reduce(self, words: Iterable[tuple]) -> tuple:
        basis = canonicalize_right_basis(words)
        if basis == UNIT_BASIS:
            return basis
        return tuple(r for r in basis if not self.contains(r))

    def __repr__(self) -> str:
        return f"TwoSidedContext(n={self.n}, generators={self.generators!r})"


@dataclass(frozen=True, eq=False)
class TwoSidedAugmentedState(IdealState):
    """The right ideal <right> + I, with I the two-sided ideal of ``context``."""

    context: TwoSidedContext
    right: tuple = ()

    @property
    def n(self) -> int:
        return self.context.n

    @property
    def is_unit(self) -> bool:
        return self.right == UNIT_BASIS

    @property
    def canonical_key(self):
        return self.right

    def __eq__(self, other):
        if not isinstance(other, TwoSidedAugmentedState):
            return NotImplemented
        return self.context is other.context and self.right == other.right

    def __hash__(self):
        return hash((id(self.context), self.right))

    def colon_by_letter(self, i: int) -> "TwoSidedAugmentedState":
        if self.is_unit:
            return self
        unit = TwoSidedAugmentedState(self.context, UNIT_BASIS)
        out = []
        for r in self.right:
            if r[0] == i:
                if len(r) == 1:
                    return unit
                out.append(r[1:])
        for tail in self.context.tails(i):
            if not tail:
                return unit
            out.append(tail)
        return TwoSidedAugmentedState(self.context, self.context.reduce(out))

    def is_member(self, w: tuple) -> bool:
        if self.is_unit:
            return True
        return any(is_prefix_t(r, w) for r in self.right) or self.context.contains(w)

    def describe(self, alphabet: Alphabet) -> str:
        if self.is_unit:
            return "<1>"
        return _render_basis(self.right, alphabet) + " + I"


def colon_by_word(state: IdealState, w: Iterable[int]) -> IdealState:
    """(I : w), applying the letter colons left to right."""
    for i in w:
        state = state.colon_by_letter(i)
    return state


def is_member(state: IdealState, w: Iterable[int]) -> bool:
    return state.is_member(tuple(w))
