"""Compare the compiled kernels with their pure-Python twins.

    python3 benchmarks/bench_kernels.py [--states N] [--letters K] [--repeat R]

Both implementations run on the same random automata; results are checked
for agreement before timings are reported.
"""

import argparse
import random
import timeit

from nchilbert import _kernels_py

try:
    from nchilbert import _kernels as compiled
except ImportError:
    compiled = None


def random_automaton(rng, n, k):
    table = [rng.randrange(n) for _ in range(n * k)]
    accepting = [rng.random() < 0.3 for _ in range(n)]
    return table, accepting


def chain_automaton(n, k):
    # a long chain that Hopcroft must split one state at a time
    table = [min(s + 1, n - 1) if a == 0 else s for s in range(n) for a in range(k)]
    accepting = [s == n - 1 for s in range(n)]
    return table, accepting


def same_partition(a, b):
    relabel = {}
    return all(relabel.setdefault(x, y) == y for x, y in zip(a, b)) and len(set(a)) == len(set(b))


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--states", type=int, default=20000)
    parser.add_argument("--letters", type=int, default=3)
    parser.add_argument("--degree", type=int, default=30)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()
    if compiled is None:
        raise SystemExit("compiled extension not built; run: pip install -e . --no-build-isolation")

    rng = random.Random(args.seed)
    n, k = args.states, args.letters
    cases = [
        ("hopcroft random", random_automaton(rng, n, k)),
        ("hopcroft chain", chain_automaton(min(n, 5000), k)),
    ]
    print(f"{'kernel':<22}{'states':>8}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for label, (table, accepting) in cases:
        m = len(accepting)
        py = _kernels_py.hopcroft_classes(m, k, table, accepting)
        cy = compiled.hopcroft_classes(m, k, table, accepting)
        assert same_partition(py, cy), label
        tp = best_of(lambda: _kernels_py.hopcroft_classes(m, k, table, accepting), args.repeat)
        tc = best_of(lambda: compiled.hopcroft_classes(m, k, table, accepting), args.repeat)
        print(f"{label:<22}{m:>8}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")

    table, _ = random_automaton(rng, n, k)
    blocked = n - 1
    py = _kernels_py.count_walks(n, k, table, 0, blocked, args.degree)
    cy = compiled.count_walks(n, k, table, 0, blocked, args.degree)
    assert cy is None or py == cy
    if cy is None:
        print("count_walks: int64 overflow, lower --degree to compare")
        return
    tp = best_of(lambda: _kernels_py.count_walks(n, k, table, 0, blocked, args.degree), args.repeat)
    tc = best_of(lambda: compiled.count_walks(n, k, table, 0, blocked, args.degree), args.repeat)
    print(f"{'count_walks d=' + str(args.degree):<22}{n:>8}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
