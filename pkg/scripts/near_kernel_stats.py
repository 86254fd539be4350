#!/usr/bin/env python3
"""Moved-fraction statistics for the two known striking near-kernel words on
three strands, plus the two-strand word that the Burau representation cannot
separate from the identity.

Both near-kernel words fix the base vector (0,1,0,1,0,1) exactly yet move
only a fraction of a percent of random probe vectors.

Example:
    python scripts/near_kernel_stats.py --seed 11 --samples 100000
"""

import argparse
import json
import sys
from random import Random

from vbraid.action import act_word, apply_letters, base_vector, Coordinates
from vbraid.hunt import moved_fraction
from vbraid.words import parse_word

NEAR_KERNEL_WORDS = {
    "beta": "s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1",
    "second": "S2 s1 r2 s2 s1 S2 r2 s1 r2 s2 r1 S2 r1 S1 S2 r2 S1 s2",
}

BURAU_KERNEL_WORD = "s1^2 r1 S1 r1 S1 r1 s1^2 r1 S1 r1 S1 r1"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=100000)
    parser.add_argument("--bound", type=int, default=100)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--json", help="optional output path")
    args = parser.parse_args(argv)

    results = {}
    base = base_vector(3).entries
    for name, text in NEAR_KERNEL_WORDS.items():
        word = parse_word(text, 3)
        fixes = apply_letters(base, word.letters) == list(base)
        fraction = moved_fraction(word, args.samples, args.bound, Random(args.seed))
        results[name] = {
            "word": text,
            "fixes_base_vector": fixes,
            "moved_fraction": float(fraction),
            "samples": args.samples,
        }
        print(
            f"{name:7s} fixes base: {fixes}  moved fraction: {float(fraction):.5f}"
            f"  ({fraction.numerator}/{fraction.denominator})"
        )

    burau = parse_word(BURAU_KERNEL_WORD, 2)
    image = act_word(Coordinates(2, (0, 1, 0, 1)), burau)
    results["burau_kernel_word"] = {
        "word": BURAU_KERNEL_WORD,
        "image_of_0,1,0,1": image.to_csv(),
        "separated_from_identity": image.entries != (0, 1, 0, 1),
    }
    print(f"two-strand Burau kernel word sends 0,1,0,1 to {image.to_csv()}")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(results, handle, indent=2)
            handle.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
