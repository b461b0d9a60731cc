"""Growth of the Hilbert function read off the orbit's transition graph.

Normal words of degree d are the walks of length d from the initial state
that avoid the unit state. If no state lies on two distinct cycles, the
number of such walks grows like d^(k-1), where k is the largest number of
cycles met along one path. Otherwise it grows exponentially, at the
spectral radius of the transition matrix restricted to non-unit states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .orbit import Orbit
from .ratfun import _strongly_connected

RATE_TOLERANCE = 1e-9
MAX_ITERATIONS = 1_000_000


@dataclass(frozen=True)
class GrowthClass:
    kind: str  # "polynomial" or "exponential"
    k: Optional[int] = None
    rate: Optional[float] = None
    tolerance: Optional[float] = None

    @property
    def is_polynomial(self) -> bool:
        return self.kind == "polynomial"

    def __str__(self) -> str:
        if self.is_polynomial:
            if self.k == 0:
                return "polynomial k=0 (finite dimension)"
            return f"polynomial k={self.k} (HF(d) ~ d^{self.k - 1})"
        return f"exponential rate ≈ {self.rate:.6f}"

    def to_json(self) -> dict:
        if self.is_polynomial:
            return {"kind": "polynomial", "k": self.k}
        return {"kind": "exponential", "rate": self.rate, "tolerance": self.tolerance}


def _restricted_graph(o: Orbit):
    """Non-unit states reachable from the initial one, with edge multiplicities."""
    if o.unit_index == 0:
        return [], []
    seen = {0}
    keep = [0]
    for s in keep:
        for t in o.transitions[s]:
            if t != o.unit_index and t not in seen:
                seen.add(t)
                keep.append(t)
    pos = {s: i for i, s in enumerate(keep)}
    edges = []
    for s in keep:
        counts: dict = {}
        for t in o.transitions[s]:
            if t in pos:
                counts[pos[t]] = counts.get(pos[t], 0) + 1
        edges.append(counts)
    return keep, edges


def spectral_radius(edges: list, tol: float = RATE_TOLERANCE, max_iter: int = MAX_ITERATIONS) -> float:
    """Perron root of a nonnegative matrix given as rows of {column: weight}.

    Each irreducible block is handled separately. Power iteration runs on
    A + I (primitive on an irreducible block), and stops when the
    Collatz-Wielandt lower and upper bounds are within ``tol``.
    """
    m = len(edges)
    succ = [list(row) for row in edges]
    best = 0.0
    for comp in _strongly_connected(m, succ):
        inside = set(comp)
        local = {s: i for i, s in enumerate(comp)}
        rows = [[(local[t], w) for t, w in edges[s].items() if t in inside] for s in comp]
        if not any(rows):
            continue
        if len(comp) == 1:
            best = max(best, float(rows[0][0][1]))
            continue
        x = [1.0] * len(comp)
        lo = hi = 0.0
        for _ in range(max_iter):
            y = [x[i] + sum(w * x[j] for j, w in rows[i]) for i in range(len(comp))]
            ratios = [y[i] / x[i] for i in range(len(comp))]
            lo, hi = min(ratios), max(ratios)
            scale = max(y)
            x = [v / scale for v in y]
            if hi - lo < tol:
                break
        best = max(best, (lo + hi) / 2 - 1.0)
    return best


def classify_growth(o: Orbit) -> GrowthClass:
    keep, edges = _restricted_graph(o)
    m = len(keep)
    if m == 0:
        return GrowthClass("polynomial", k=0)
    comps = _strongly_connected(m, [list(row) for row in edges])
    comp_of = [0] * m
    for c, comp in enumerate(comps):
        for s in comp:
            comp_of[s] = c
    cycles = [0] * len(comps)
    for c, comp in enumerate(comps):
        inside = set(comp)
        internal = sum(w for s in comp for t, w in edges[s].items() if t in inside)
        if internal > len(comp):
            rate = spectral_radius(edges)
            return GrowthClass("exponential", rate=rate, tolerance=RATE_TOLERANCE)
        cycles[c] = 1 if internal == len(comp) else 0

    # longest path in the condensation, weighted by cycles; Tarjan returns
    # components in reverse topological order, so successors come first
    best = [0] * len(comps)
    for c, comp in enumerate(comps):
        succ_best = 0
        for s in comp:
            for t in edges[s]:
                d = comp_of[t]
                if d != c:
                    succ_best = max(succ_best, best[d])
        best[c] = cycles[c] + succ_best
    return GrowthClass("polynomial", k=best[comp_of[0]])
