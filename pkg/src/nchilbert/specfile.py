"""Line-oriented input files describing an ideal or a module.

Example::

    alphabet = x y z
    object = ideal
    side = two-sided
    gen = y z
    gen = x z z z* x z

Module files set ``object = module`` and ``rank = r``, and give
generators as ``gen[i] = <regex>`` with 1-based component index i. An
optional ``side[i]`` overrides the shared side for one component.
"""

from __future__ import annotations

import re
from typing import Union as TypingUnion

from .hilbert import SIDES, IdealSpec, ModuleSpec, SpecError
from .regex import RegexSyntaxError, parse_regex
from .words import Alphabet

_LINE = re.compile(r"^([A-Za-z_]+)(?:\[(\d+)\])?\s*=\s*(.*)$")


class SpecFileError(SpecError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def parse_spec(text: str) -> TypingUnion[IdealSpec, ModuleSpec]:
    alphabet = None
    kind = None
    side = None
    rank = None
    plain: list = []
    indexed: dict = {}
    sides: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise SpecFileError(f"expected 'key = value', got {line!r}", lineno)
        key, idx, value = m.group(1), m.group(2), m.group(3).strip()
        if key == "alphabet" and idx is None:
            if alphabet is not None:
                raise SpecFileError("alphabet declared twice", lineno)
            try:
                alphabet = Alphabet(tuple(value.split()))
            except ValueError as exc:
                raise SpecFileError(str(exc), lineno) from None
        elif key == "object" and idx is None:
            if value not in ("ideal", "module"):
                raise SpecFileError("object must be 'ideal' or 'module'", lineno)
            kind = value
        elif key == "side":
            if value not in SIDES:
                raise SpecFileError(f"side must be one of {', '.join(SIDES)}", lineno)
            if idx is None:
                side = value
            else:
                sides[int(idx)] = value
        elif key == "rank" and idx is None:
            if not value.isdigit() or int(value) < 1:
                raise SpecFileError("rank must be a positive integer", lineno)
            rank = int(value)
        elif key == "gen":
            if alphabet is None:
                raise SpecFileError("alphabet must be declared before generators", lineno)
            try:
                expr = parse_regex(value, alphabet)
            except RegexSyntaxError as exc:
                raise SpecFileError(str(exc), lineno) from None
            if idx is None:
                plain.append(expr)
            else:
                indexed.setdefault(int(idx), []).append(expr)
        else:
            raise SpecFileError(f"unknown key {key!r}", lineno)

    if alphabet is None:
        raise SpecFileError("missing 'alphabet' line")
    kind = kind or ("module" if rank is not None or indexed else "ideal")
    if kind == "ideal":
        if indexed or rank is not None or sides:
            raise SpecFileError("indexed generators and rank belong to module files")
        return IdealSpec(alphabet, side or "right", tuple(plain))

    if plain:
        raise SpecFileError("module files use gen[i] = ..., not plain gen lines")
    if rank is None:
        raise SpecFileError("module files need a 'rank' line")
    for i in list(indexed) + list(sides):
        if not 1 <= i <= rank:
            raise SpecFileError(f"component index {i} outside 1..{rank}")
    comps = [
        IdealSpec(alphabet, sides.get(i, side or "right"), tuple(indexed.get(i, ())))
        for i in range(1, rank + 1)
    ]
    return ModuleSpec(alphabet, tuple(comps))


def load_spec(path) -> TypingUnion[IdealSpec, ModuleSpec]:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())
