"""Alphabets and words (monomials of the free associative algebra).

Words are stored as tuples of letter indices. The :class:`Word` wrapper
carries its alphabet for user-facing code; the ideal-state backends work
directly on raw index tuples for speed, through the ``*_t`` helpers below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

Letters = tuple  # tuple[int, ...]


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    letters: tuple

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("alphabet must contain at least one letter")
        for name in letters:
            if not isinstance(name, str) or not name:
                raise ValueError(f"invalid letter name {name!r}")
        if len(set(letters)) != len(letters):
            raise ValueError("letter names must be distinct")

    @property
    def n(self) -> int:
        return len(self.letters)

    def index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise KeyError(f"unknown letter {name!r}") from None

    def word(self, text: str | Sequence[str] = "") -> "Word":
        """Build a word from whitespace-separated letter names ("" or "1" is the empty word)."""
        tokens = text.split() if isinstance(text, str) else list(text)
        if tokens == ["1"]:
            tokens = []
        return Word(self, tuple(self.index(tok) for tok in tokens))

    def words_of_degree(self, d: int) -> Iterator[tuple]:
        """All index tuples of length d, in lexicographic order."""
        if d == 0:
            yield ()
            return
        for w in self.words_of_degree(d - 1):
            for i in range(self.n):
                yield w + (i,)

    def render(self, letters: Iterable[int]) -> str:
        letters = tuple(letters)
        if not letters:
            return "1"
        return " ".join(self.letters[i] for i in letters)


@dataclass(frozen=True)
class Word:
    alphabet: Alphabet
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        n = self.alphabet.n
        for i in letters:
            if not (isinstance(i, int) and 0 <= i < n):
                raise ValueError(f"letter index {i!r} out of range for alphabet of size {n}")

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.alphabet.render(self.letters)

    def sort_key(self):
        return word_key(self.letters)


def word_key(letters: tuple):
    """Graded ordering: degree first, then lexicographic by index."""
    return (len(letters), letters)


def _same(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch("words belong to different alphabets")


def concat(u: Word, v: Word) -> Word:
    _same(u, v)
    return Word(u.alphabet, u.letters + v.letters)


def is_prefix(u: Word, w: Word) -> bool:
    _same(u, w)
    return is_prefix_t(u.letters, w.letters)


def is_factor(u: Word, w: Word) -> bool:
    _same(u, w)
    return is_factor_t(u.letters, w.letters)


def overlaps_ending_in_prefix(g: Word, letter: int) -> Optional[Word]:
    """Return v with g = letter·v, or None when g does not start with letter."""
    if not g.letters:
        raise ValueError("g must be a nonempty word")
    v = strip_letter_t(g.letters, letter)
    return None if v is None else Word(g.alphabet, v)


# raw tuple helpers


def is_prefix_t(u: tuple, w: tuple) -> bool:
    return len(u) <= len(w) and w[: len(u)] == u


def is_factor_t(u: tuple, w: tuple) -> bool:
    k = len(u)
    if k == 0:
        return True
    for start in range(len(w) - k + 1):
        if w[start : start + k] == u:
            return True
    return False


def strip_letter_t(g: tuple, letter: int) -> Optional[tuple]:
    if g and g[0] == letter:
        return g[1:]
    return None
