#!/usr/bin/env python3
"""Time both scan strategies on a synthetic ASCII corpus.

Builds a words-plus-sequences document of the requested size, tokenizes it
with the Direct and Anchored strategies, and prints a small table.  The
numbers here back the performance trend claims in the README.
"""

import argparse
import random
import string
import time

from seqtok import ScanStrategy, scan_special, tokenize, SPECIAL_KINDS

SPECIALS = [
    "192.168.0.1", "10.20.30.40", "qalhajja@kfu.edu.sa", "ops@example.org",
    "http://www.kfu.edu.sa", "https://example.com/a/b?c=d", "www.example.co.uk",
    "16/07/1982", "31-12-99", "1.2.3.4.5", "256.1.1.1", "http://",
]


def build_corpus(target_bytes: int, seed: int) -> str:
    rng = random.Random(seed)
    parts = []
    size = 0
    while size < target_bytes:
        r = rng.random()
        if r < 0.02:
            chunk = rng.choice(SPECIALS)
        elif r < 0.05:
            chunk = str(rng.randint(0, 99999))
        else:
            chunk = "".join(
                rng.choice(string.ascii_lowercase)
                for _ in range(rng.randint(3, 14))
            )
        parts.append(chunk)
        parts.append("\n" if rng.random() < 0.05 else " ")
        size += len(chunk) + 1
    return "".join(parts)


def time_call(fn, *args, runs: int):
    best = float("inf")
    result = None
    for _ in range(runs):
        started = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - started)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size-mib", type=float, default=10.0)
    parser.add_argument("--seed", type=int, default=99)
    parser.add_argument("--runs", type=int, default=2,
                        help="timed repetitions; best run is reported")
    args = parser.parse_args()

    text = build_corpus(int(args.size_mib * 1024 * 1024), args.seed)
    print(f"corpus: {len(text) / 1024 / 1024:.1f} MiB")

    rows = []
    for strategy in ScanStrategy:
        scan_s, matches = time_call(
            scan_special, text, SPECIAL_KINDS, strategy, runs=args.runs
        )
        tok_s, tokens = time_call(
            tokenize, text, None, strategy, runs=args.runs
        )
        rows.append((strategy.value, scan_s, tok_s, len(matches), len(tokens)))

    print(f"{'strategy':<10} {'scan_s':>8} {'tokenize_s':>11} "
          f"{'matches':>9} {'tokens':>9}")
    for name, scan_s, tok_s, matches, tokens in rows:
        print(f"{name:<10} {scan_s:>8.2f} {tok_s:>11.2f} "
              f"{matches:>9} {tokens:>9}")

    direct = next(r for r in rows if r[0] == "direct")
    anchored = next(r for r in rows if r[0] == "anchored")
    print(f"anchored/direct tokenize ratio: {anchored[2] / direct[2]:.2f}x")


if __name__ == "__main__":
    main()
