"""Compare the compiled and pure-Python chordless-path kernels.

    python benchmarks/bench_chordless.py [--repeat 3]

Each instance is searched exhaustively by every available backend; the script
checks that all backends return the same path and expansion count.
"""

from __future__ import annotations

import argparse
import time

from patternal import _kernels
from patternal.graphs import build_graph, longest_chordless_path

INSTANCES = [
    ("debruijn", 4, 2),
    ("debruijn", 3, 3),
    ("debruijn", 5, 2),
    ("pattern", 5, 2),
    ("pattern", 4, 3),
    ("debruijn", 6, 2),
]


def best_time(g, backend, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = longest_chordless_path(g, backend=backend)
        times.append(time.perf_counter() - start)
    return min(times), result


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="skip the slowest instance")
    args = parser.parse_args(argv)

    backends = _kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {_kernels.BACKEND})")
    header = f"{'graph':<16}{'V':>6}{'C':>5}{'expansions':>12}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    instances = INSTANCES[:-1] if args.quick else INSTANCES
    for kind, n, m in instances:
        g = build_graph(kind, n, m)
        timings, results = {}, {}
        for b in backends:
            timings[b], results[b] = best_time(g, b, args.repeat)
        first = results[backends[0]]
        for b in backends[1:]:
            assert (results[b].path, results[b].expansions) == (first.path, first.expansions), b
        row = f"{kind + f' ({n},{m})':<16}{len(g):>6}{first.length:>5}{first.expansions:>12}"
        row += "".join(f"{timings[b]:>11.4f}s" for b in backends)
        if "cython" in timings and "python" in timings:
            row += f"{timings['python'] / timings['cython']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
