"""Command-line interface.

    nchilbert series FILE          Hilbert series, affine series, orbit size, growth
    nchilbert expand FILE -d N     HF(d) and HF_a(d) for d = 0..N
    nchilbert orbit FILE           orbit states, adjacency matrix, constant vector
    nchilbert dfa FILE --dot PATH  the orbit automaton in Graphviz format
    nchilbert check FILE -d N      compare the series with brute-force word counts
    nchilbert solve ORBIT.json     series from a saved orbit report

Exit codes: 0 success, 1 input error, 2 orbit budget exceeded, 3 check mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .automata import to_dot
from .hilbert import (
    BACKENDS,
    IdealSpec,
    SeriesResult,
    SpecError,
    oracle_hilbert_function,
    series_of_cyclic,
    series_of_module,
)
from .orbit import DEFAULT_MAX_STATES, Orbit, OrbitBudgetExceeded, orbit_to_dfa
from .ratfun import RationalFunction, affine_of, expand, render, solve_first_component
from .specfile import load_spec

EXIT_USER = 1
EXIT_BUDGET = 2
EXIT_MISMATCH = 3


def _compute(spec, args) -> SeriesResult:
    if isinstance(spec, IdealSpec):
        return series_of_cyclic(spec, args.max_states, args.backend)
    return series_of_module(spec, args.max_states, args.backend)


def _components(spec):
    return [spec] if isinstance(spec, IdealSpec) else list(spec.components)


def orbit_report(o: Orbit, alphabet) -> dict:
    return {
        "alphabet": list(alphabet.letters),
        "size": o.size,
        "states": [s.describe(alphabet) for s in o.states],
        "transitions": [list(row) for row in o.transitions],
        "adjacency": o.adjacency,
        "constants": o.constants,
        "unit_index": o.unit_index,
    }


def series_from_report(data: dict) -> RationalFunction:
    """Offline solve of a saved orbit report (single orbit or module)."""
    if "components" in data:
        total = RationalFunction()
        for comp in data["components"]:
            total = total + series_from_report(comp)
        return total
    return solve_first_component(data["adjacency"], data["constants"])


def cmd_series(args, out) -> int:
    spec = load_spec(args.file)
    res = _compute(spec, args)
    if args.format == "json":
        payload = {
            "series": res.series.to_json(),
            "affine": res.affine.to_json(),
            "orbit_sizes": res.orbit_sizes,
            "growth": res.growth.to_json(),
            "backends": res.backends,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    out.write(f"HS = {render(res.series)}\n")
    out.write(f"HS_a = {render(res.affine)}\n")
    if len(res.orbit_sizes) == 1:
        out.write(f"orbit = {res.orbit_sizes[0]}\n")
    else:
        sizes = ", ".join(str(s) for s in res.orbit_sizes)
        out.write(f"orbit = {res.orbit_size} (components: {sizes})\n")
    out.write(f"growth = {res.growth}\n")
    return 0


def cmd_expand(args, out) -> int:
    spec = load_spec(args.file)
    res = _compute(spec, args)
    hf = expand(res.series, args.degree)
    hfa = expand(res.affine, args.degree)
    if args.format == "json":
        out.write(json.dumps({"HF": hf, "HF_a": hfa}) + "\n")
        return 0
    out.write("d\tHF\tHF_a\n")
    for d in range(args.degree + 1):
        out.write(f"{d}\t{hf[d]}\t{hfa[d]}\n")
    return 0


def cmd_orbit(args, out) -> int:
    spec = load_spec(args.file)
    res = _compute(spec, args)
    reports = [orbit_report(o, spec.alphabet) for o in res.orbits]
    if args.format == "json":
        payload = reports[0] if isinstance(spec, IdealSpec) else {"components": reports}
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    for i, rep in enumerate(reports, 1):
        if len(reports) > 1:
            out.write(f"component {i}\n")
        out.write(f"orbit size = {rep['size']}\n")
        out.write("states:\n")
        for k, desc in enumerate(rep["states"]):
            out.write(f"  {k}: {desc}\n")
        out.write("adjacency:\n")
        for row in rep["adjacency"]:
            out.write("  " + " ".join(str(a) for a in row) + "\n")
        out.write("constants = (" + ", ".join(str(c) for c in rep["constants"]) + ")\n")
        out.write(f"unit index = {rep['unit_index']}\n")
    return 0


def cmd_dfa(args, out) -> int:
    spec = load_spec(args.file)
    res = _compute(spec, args)
    if not 1 <= args.component <= len(res.orbits):
        raise SpecError(f"component must be between 1 and {len(res.orbits)}")
    dot = to_dot(orbit_to_dfa(res.orbits[args.component - 1]), spec.alphabet)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
        out.write(f"wrote {args.dot}\n")
    else:
        out.write(dot)
    return 0


def cmd_check(args, out) -> int:
    spec = load_spec(args.file)
    res = _compute(spec, args)
    expected = [0] * (args.degree + 1)
    for comp in _components(spec):
        for d, c in enumerate(oracle_hilbert_function(comp, args.degree)):
            expected[d] += c
    got = expand(res.series, args.degree)
    bad = [d for d in range(args.degree + 1) if got[d] != expected[d]]
    total = args.degree + 1
    if not bad:
        out.write(f"OK: {total}/{total} degrees match\n")
        return 0
    out.write(f"MISMATCH: {total - len(bad)}/{total} degrees match\n")
    for d in bad:
        out.write(f"  degree {d}: series {got[d]}, brute force {expected[d]}\n")
    return EXIT_MISMATCH


def cmd_solve(args, out) -> int:
    with open(args.file, encoding="utf-8") as fh:
        data = json.load(fh)
    hs = series_from_report(data)
    out.write(f"HS = {render(hs)}\n")
    out.write(f"HS_a = {render(affine_of(hs))}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nchilbert",
        description="Hilbert series of monomial right modules over free associative algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="ideal or module description")
    common.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    common.add_argument("--backend", choices=BACKENDS, default="auto")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("series", parents=[common], help="rational Hilbert series")
    p.set_defaults(func=cmd_series)
    p = sub.add_parser("expand", parents=[common], help="Hilbert function table")
    p.add_argument("-d", "--degree", type=int, default=10)
    p.set_defaults(func=cmd_expand)
    p = sub.add_parser("orbit", parents=[common], help="orbit report")
    p.set_defaults(func=cmd_orbit)
    p = sub.add_parser("dfa", parents=[common], help="orbit automaton as DOT")
    p.add_argument("--dot", metavar="PATH", help="write the DOT graph here instead of stdout")
    p.add_argument("--component", type=int, default=1, help="module component (1-based)")
    p.set_defaults(func=cmd_dfa)
    p = sub.add_parser("check", parents=[common], help="compare against brute-force counts")
    p.add_argument("-d", "--degree", type=int, default=8)
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("solve", help="series from a saved orbit JSON report")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "degree", 0) < 0:
        print("error: degree must be nonnegative", file=sys.stderr)
        return EXIT_USER
    if getattr(args, "max_states", 1) < 1:
        print("error: --max-states must be positive", file=sys.stderr)
        return EXIT_USER
    try:
        return args.func(args, out)
    except OrbitBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SpecError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER


if __name__ == "__main__":
    sys.exit(main())
