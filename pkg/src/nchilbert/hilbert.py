"""Hilbert series of monomial cyclic modules F/I and of finite direct sums of them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import kernels
from .automata import (
    DfaIdealState,
    empty_language_dfa,
    regex_to_min_dfa,
    validate_right_ideal_language,
)
from .growth import GrowthClass, classify_growth
from .ideal_states import FgRightIdealState, IdealState, TwoSidedContext
from .orbit import DEFAULT_MAX_STATES, Orbit, orbit_data
from .ratfun import (
    RationalFunction,
    affine_of,
    assemble_first_component,
    det_i_minus_tA,
)
from .regex import (
    RegexExpr,
    as_word,
    close_right,
    close_two_sided,
    matches,
    matches_factor,
    matches_prefix,
    union,
)
from .words import Alphabet, is_factor_t, is_prefix_t

SIDES = ("right", "two-sided", "language")
BACKENDS = ("auto", "fg", "ts", "dfa")
ORACLE_MAX_DEGREE = 12


class SpecError(ValueError):
    """An ideal or module description that cannot be processed."""


@dataclass(frozen=True)
class IdealSpec:
    alphabet: Alphabet
    side: str
    generators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.side not in SIDES:
            raise SpecError(f"side must be one of {', '.join(SIDES)}, not {self.side!r}")

    @property
    def n(self) -> int:
        return self.alphabet.n

    def words(self) -> Optional[list]:
        """The generators as plain words, or None if some generator is a proper regex."""
        out = []
        for g in self.generators:
            w = as_word(g)
            if w is None:
                return None
            out.append(w)
        return out


@dataclass(frozen=True)
class ModuleSpec:
    alphabet: Alphabet
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise SpecError("a module needs rank at least 1")
        for c in self.components:
            if c.alphabet != self.alphabet:
                raise SpecError("module components must share one alphabet")

    @property
    def rank(self) -> int:
        return len(self.components)


@dataclass
class SeriesResult:
    series: RationalFunction
    affine: RationalFunction
    orbit_sizes: list
    growth: GrowthClass
    orbits: list = field(default_factory=list, repr=False)
    backends: list = field(default_factory=list)

    @property
    def orbit_size(self) -> int:
        return sum(self.orbit_sizes)


def choose_backend(spec: IdealSpec, backend: str = "auto") -> str:
    if backend not in BACKENDS:
        raise SpecError(f"backend must be one of {', '.join(BACKENDS)}")
    words = spec.words()
    if backend == "auto":
        if words is not None and spec.side == "right":
            return "fg"
        if words is not None and spec.side == "two-sided":
            return "ts"
        return "dfa"
    if backend == "fg" and (spec.side != "right" or words is None):
        raise SpecError("the fg backend needs side = right and single-word generators")
    if backend == "ts" and (spec.side != "two-sided" or words is None):
        raise SpecError("the ts backend needs side = two-sided and single-word generators")
    return backend


def language_regex(spec: IdealSpec) -> Optional[RegexExpr]:
    """Regex of the ideal's monomial language (None for the zero ideal)."""
    if not spec.generators:
        return None
    gens = union(*spec.generators)
    if spec.side == "right":
        return close_right(gens, spec.n)
    if spec.side == "two-sided":
        return close_two_sided(gens, spec.n)
    return gens


def initial_state(spec: IdealSpec, backend: str = "auto") -> IdealState:
    backend = choose_backend(spec, backend)
    if backend == "fg":
        return FgRightIdealState.from_words(spec.n, spec.words())
    if backend == "ts":
        return TwoSidedContext(spec.n, spec.words()).initial_state()
    e = language_regex(spec)
    if e is None:
        d = empty_language_dfa(spec.n)
    else:
        # closures are right-closed by construction, raw languages are not
        d = regex_to_min_dfa(e, spec.n, absorbing_accept=spec.side != "language")
    if not validate_right_ideal_language(d):
        raise SpecError("the language is not closed under right multiplication, so it is not a right ideal")
    return DfaIdealState(d)


def orbit_series(o: Orbit) -> RationalFunction:
    """HS(F/I) from the orbit of I: first component of (Id - tA) H = C."""
    r = o.size
    g = det_i_minus_tA(o.adjacency).coeffs
    blocked = -1 if o.unit_index is None else o.unit_index
    h = kernels.count_walks(r, o.n_letters, o.flat_table(), 0, blocked, r - 1)
    return assemble_first_component(g, h, r)


def series_of_cyclic(
    spec: IdealSpec, max_states: int = DEFAULT_MAX_STATES, backend: str = "auto"
) -> SeriesResult:
    chosen = choose_backend(spec, backend)
    o = orbit_data(initial_state(spec, chosen), max_states)
    hs = orbit_series(o)
    return SeriesResult(hs, affine_of(hs), [o.size], classify_growth(o), [o], [chosen])


def _combine_growth(classes: Sequence[GrowthClass]) -> GrowthClass:
    exps = [g for g in classes if not g.is_polynomial]
    if exps:
        return max(exps, key=lambda g: g.rate)
    return max(classes, key=lambda g: g.k)


def series_of_module(
    spec: ModuleSpec, max_states: int = DEFAULT_MAX_STATES, backend: str = "auto"
) -> SeriesResult:
    parts = [series_of_cyclic(c, max_states, backend) for c in spec.components]
    total = RationalFunction()
    for p in parts:
        total = total + p.series
    return SeriesResult(
        total,
        affine_of(total),
        [p.orbit_sizes[0] for p in parts],
        _combine_growth([p.growth for p in parts]),
        [p.orbits[0] for p in parts],
        [p.backends[0] for p in parts],
    )


def fgform_closed_form(degrees: Sequence[int], n: int) -> RationalFunction:
    """(1 - sum_k t^d_k) / (1 - n t) for a finite prefix-free right basis with degrees d_k."""
    num = [0] * (max(degrees, default=0) + 1)
    num[0] = 1
    for d in degrees:
        num[d] -= 1
    return RationalFunction(tuple(num), (1, -n))


def _member_predicate(spec: IdealSpec):
    if spec.side == "language":
        if not spec.generators:
            return lambda w: False
        lang = union(*spec.generators)
        return lambda w: matches(lang, w)
    checks = []
    for g in spec.generators:
        w = as_word(g)
        if spec.side == "right":
            if w is not None:
                checks.append(lambda u, w=w: is_prefix_t(w, u))
            else:
                checks.append(lambda u, g=g: matches_prefix(g, u))
        else:
            if w is not None:
                checks.append(lambda u, w=w: is_factor_t(w, u))
            else:
                checks.append(lambda u, g=g: matches_factor(g, u))
    return lambda u: any(c(u) for c in checks)


def oracle_hilbert_function(spec: IdealSpec, degree: int) -> list:
    """Brute-force HF(0..degree): count the words of each degree outside the ideal.

    Membership is decided from the generators directly (prefix, factor or
    regex match), never through orbits or automata.
    """
    if degree > ORACLE_MAX_DEGREE:
        raise ValueError(f"oracle degree is capped at {ORACLE_MAX_DEGREE}")
    member = _member_predicate(spec)
    n = spec.n
    counts = [0] * (degree + 1)
    if spec.side == "language":
        level = [()]
        for d in range(degree + 1):
            counts[d] = sum(1 for w in level if not member(w))
            level = [w + (i,) for w in level for i in range(n)]
        return counts
    # ideals are closed under right multiplication: only normal words can have normal extensions
    level = [()] if not member(()) else []
    for d in range(degree + 1):
        counts[d] = len(level)
        if d < degree:
            level = [v for w in level for i in range(n) if not member(v := w + (i,))]
    return counts
