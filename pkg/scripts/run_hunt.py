#!/usr/bin/env python3
"""Desk-scale kernel hunt: search random virtual braid words for one acting
trivially on the lattice.

Example:
    python scripts/run_hunt.py --seed 20260810 --out hunt_vb3.json
    python scripts/run_hunt.py --n 4 --count 2000000 --length 1:40 \\
        --seed 7 --workers 4 --out hunt_vb4.json
"""

import argparse
import sys

from vbraid.hunt import HuntConfig, hunt


def parse_length(text):
    if ":" in text:
        low, high = text.split(":", 1)
        return (int(low), int(high))
    return int(text)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3, help="strand count")
    parser.add_argument("--count", type=int, default=1000000)
    parser.add_argument("--length", default="1:30", help="word length N or LO:HI")
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--battery", type=int, default=100)
    parser.add_argument("--bound", type=int, default=100)
    parser.add_argument("--workers", type=int, default=2)
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    config = HuntConfig(
        strands=args.n,
        word_length=parse_length(args.length),
        word_count=args.count,
        seed=args.seed,
        battery_size=args.battery,
        coefficient_bound=args.bound,
    )
    report = hunt(config, workers=args.workers)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(report.to_json())
        handle.write("\n")

    print(f"words tested     : {report.words_tested}")
    print(f"base fixers      : {len(report.base_fixers)} distinct")
    print(f"identity words   : {len(report.identity_words)}")
    print(f"kernel candidates: {len(report.kernel_candidates)}")
    print(f"runtime          : {report.runtime_seconds:.1f}s")
    if report.kernel_candidates:
        print("POTENTIAL KERNEL ELEMENTS FOUND, inspect these words:")
        for word in report.kernel_candidates:
            print(f"  {word}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
