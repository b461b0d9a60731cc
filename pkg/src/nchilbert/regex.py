"""Regular expressions over an alphabet of named letters.

Grammar::

    expr   := term { "|" term }
    term   := factor { factor }
    factor := atom [ "*" ]
    atom   := LETTER | "1" | "(" expr ")"

Letters are identifier tokens separated by whitespace or punctuation, so
multi-character letter names are fine. ``1`` is the empty word.

Besides the parser this module holds a direct backtracking-free matcher
that works on the syntax tree. It shares nothing with the automaton
pipeline and serves as its oracle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .words import Alphabet


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class RegexExpr:
    __slots__ = ()


@dataclass(frozen=True)
class EmptyWord(RegexExpr):
    pass


@dataclass(frozen=True)
class Letter(RegexExpr):
    index: int


@dataclass(frozen=True)
class Concat(RegexExpr):
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError("Concat needs at least one part")


@dataclass(frozen=True)
class Union(RegexExpr):
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError("Union needs at least one part")


@dataclass(frozen=True)
class Star(RegexExpr):
    child: RegexExpr


def concat(*parts: RegexExpr) -> RegexExpr:
    flat = []
    for p in parts:
        if isinstance(p, Concat):
            flat.extend(p.parts)
        elif not isinstance(p, EmptyWord):
            flat.append(p)
    if not flat:
        return EmptyWord()
    if len(flat) == 1:
        return flat[0]
    return Concat(tuple(flat))


def union(*parts: RegexExpr) -> RegexExpr:
    flat = []
    for p in parts:
        for q in p.parts if isinstance(p, Union) else (p,):
            if q not in flat:
                flat.append(q)
    if len(flat) == 1:
        return flat[0]
    return Union(tuple(flat))


def word_regex(letters) -> RegexExpr:
    return concat(*(Letter(i) for i in letters))


def any_letter(n: int) -> RegexExpr:
    return union(*(Letter(i) for i in range(n)))


def close_right(e: RegexExpr, n: int) -> RegexExpr:
    """e X*: the right ideal generated by the language of e."""
    return concat(e, Star(any_letter(n)))


def close_two_sided(e: RegexExpr, n: int) -> RegexExpr:
    """X* e X*: the two-sided ideal generated by the language of e."""
    everything = Star(any_letter(n))
    if isinstance(e, EmptyWord):
        return everything
    return concat(everything, e, everything)


_TOKEN = re.compile(r"\s*(?:([()|*])|([^\s()|*]+))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        start = m.start(1) if m.group(1) else m.start(2)
        tokens.append((m.group(1) or m.group(2), start, m.group(1) is not None))
        pos = m.end()
    return tokens


def parse_regex(text: str, alphabet: Alphabet) -> RegexExpr:
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def where():
        tok = peek()
        return tok[1] if tok else len(text)

    def expr():
        nonlocal pos
        terms = [term()]
        while (tok := peek()) and tok[2] and tok[0] == "|":
            pos += 1
            terms.append(term())
        return union(*terms) if len(terms) > 1 else terms[0]

    def term():
        factors = []
        while (tok := peek()) and not (tok[2] and tok[0] in "|)"):
            factors.append(factor())
        if not factors:
            raise RegexSyntaxError("expected a letter, '1' or '('", where())
        return concat(*factors)

    def factor():
        nonlocal pos
        node = atom()
        while (tok := peek()) and tok[2] and tok[0] == "*":
            pos += 1
            if not isinstance(node, Star):
                node = Star(node)
        return node

    def atom():
        nonlocal pos
        tok = peek()
        if tok is None:
            raise RegexSyntaxError("unexpected end of expression", len(text))
        value, start, punct = tok
        if punct:
            if value != "(":
                raise RegexSyntaxError(f"unexpected {value!r}", start)
            pos += 1
            inner = expr()
            closing = peek()
            if closing is None or closing[0] != ")" or not closing[2]:
                raise RegexSyntaxError("expected ')'", where())
            pos += 1
            return inner
        pos += 1
        if value == "1":
            return EmptyWord()
        if value not in alphabet.letters:
            raise RegexSyntaxError(f"unknown letter {value!r}", start)
        return Letter(alphabet.index(value))

    result = expr()
    if pos != len(tokens):
        raise RegexSyntaxError(f"unexpected {tokens[pos][0]!r}", tokens[pos][1])
    return result


def as_word(e: RegexExpr) -> Optional[tuple]:
    """The single word denoted by e, or None if e is not a plain word."""
    if isinstance(e, EmptyWord):
        return ()
    if isinstance(e, Letter):
        return (e.index,)
    if isinstance(e, Concat):
        out = []
        for p in e.parts:
            w = as_word(p)
            if w is None:
                return None
            out.extend(w)
        return tuple(out)
    return None


def max_letter(e: RegexExpr) -> int:
    if isinstance(e, Letter):
        return e.index
    if isinstance(e, (Concat, Union)):
        return max(max_letter(p) for p in e.parts)
    if isinstance(e, Star):
        return max_letter(e.child)
    return -1


def to_text(e: RegexExpr, alphabet: Alphabet) -> str:
    def go(node, prec):
        # prec: 0 union context, 1 concat context, 2 star operand
        if isinstance(node, EmptyWord):
            return "1"
        if isinstance(node, Letter):
            return alphabet.letters[node.index]
        if isinstance(node, Star):
            return go(node.child, 2) + "*"
        if isinstance(node, Concat):
            s = " ".join(go(p, 1) for p in node.parts)
            return f"( {s} )" if prec >= 2 else s
        s = " | ".join(go(p, 0) for p in node.parts)
        return f"( {s} )" if prec >= 1 else s

    return go(e, 0)


# direct matcher


def _ends(e: RegexExpr, w: tuple, start: int) -> frozenset:
    if isinstance(e, EmptyWord):
        return frozenset((start,))
    if isinstance(e, Letter):
        if start < len(w) and w[start] == e.index:
            return frozenset((start + 1,))
        return frozenset()
    if isinstance(e, Union):
        out = set()
        for p in e.parts:
            out |= _ends(p, w, start)
        return frozenset(out)
    if isinstance(e, Concat):
        current = {start}
        for p in e.parts:
            nxt = set()
            for s in current:
                nxt |= _ends(p, w, s)
            if not nxt:
                return frozenset()
            current = nxt
        return frozenset(current)
    if isinstance(e, Star):
        seen = {start}
        frontier = [start]
        while frontier:
            s = frontier.pop()
            for t in _ends(e.child, w, s):
                if t not in seen:
                    seen.add(t)
                    frontier.append(t)
        return frozenset(seen)
    raise TypeError(f"not a regex node: {e!r}")


def matches(e: RegexExpr, w: tuple) -> bool:
    """Whether the whole word w belongs to the language of e."""
    return len(w) in _ends(e, tuple(w), 0)


def matches_factor(e: RegexExpr, w: tuple) -> bool:
    """Whether some factor of w belongs to the language of e."""
    w = tuple(w)
    return any(_ends(e, w, a) for a in range(len(w) + 1))


def matches_prefix(e: RegexExpr, w: tuple) -> bool:
    """Whether some prefix of w belongs to the language of e."""
    return bool(_ends(e, tuple(w), 0))
