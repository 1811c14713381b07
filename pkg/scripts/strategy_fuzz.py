#!/usr/bin/env python3
"""Fuzz the Direct/Anchored equivalence beyond what the test suite runs.

Generates random documents forever (or --rounds of them), scans each with
both strategies and stops at the first divergence, printing a minimal-ish
reproduction by trimming chunks off both ends while the divergence persists.
"""

import argparse
import random
import sys

from seqtok import ScanStrategy, scan_special, SPECIAL_KINDS

ATOMS = [
    "192.168.0.1", "qalhajja@kfu.edu.sa", "http://www.kfu.edu.sa",
    "16/07/1982", "256.1.1.1", "1.2.3.4.5", "http://", "www.", "16.07.82",
    "a@b.co", "x_y%z+1@sub.domain.co", "2001/3/4/2021", "v1.2.3",
    "HTTP://CAPS.EXAMPLE.COM/PATH", "3.14", "..", "@", "//", "-", "007",
]
SEPS = [" ", "", "\n", ".", ",", " (", ") ", "\t"]


def random_doc(rng: random.Random) -> str:
    out = []
    for _ in range(rng.randint(1, 12)):
        out.append(rng.choice(ATOMS) if rng.random() < 0.5
                   else "".join(rng.choice("abz019") for _ in range(rng.randint(1, 6))))
        out.append(rng.choice(SEPS))
    return "".join(out)


def diverges(text: str) -> bool:
    direct = scan_special(text, SPECIAL_KINDS, ScanStrategy.DIRECT)
    anchored = scan_special(text, SPECIAL_KINDS, ScanStrategy.ANCHORED)
    return direct != anchored


def shrink(text: str) -> str:
    changed = True
    while changed:
        changed = False
        for cut in (text[1:], text[:-1]):
            if cut and diverges(cut):
                text = cut
                changed = True
                break
    return text


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rounds", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=None)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    for round_no in range(1, args.rounds + 1):
        text = random_doc(rng)
        if diverges(text):
            small = shrink(text)
            print(f"divergence after {round_no} rounds: {small!r}")
            print("direct  :", scan_special(small, SPECIAL_KINDS, ScanStrategy.DIRECT))
            print("anchored:", scan_special(small, SPECIAL_KINDS, ScanStrategy.ANCHORED))
            return 1
        if round_no % 10_000 == 0:
            print(f"{round_no} rounds, no divergence", file=sys.stderr)
    print(f"no divergence in {args.rounds} rounds")
    return 0


if __name__ == "__main__":
    sys.exit(main())
