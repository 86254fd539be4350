"""Word-problem deciders built on the coordinate action.

Equality of classical braid words is decided completely by comparing images
of the base vector (0, 1, ..., 0, 1); the action separates distinct braids.
On two strands the full virtual braid group is likewise separated by the
vector (0, 2, 0, 1).  For three or more strands faithfulness of the action
is an open question, so the general decider is sound but incomplete: it
reports Distinct only with a concrete witness and otherwise answers Equal
solely for letter-identical reduced words, else Unknown.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from random import Random

from .action import Coordinates, act_word, apply_letters, base_vector
from .words import BraidWord, format_word, free_reduce, permutation

# The probe distribution for randomized batteries: entries uniform on
# integers in [-BATTERY_BOUND, BATTERY_BOUND].
BATTERY_BOUND = 100

VB2_START = (0, 2, 0, 1)


class Equality(enum.Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Outcome of an equality test.

    Distinct verdicts always carry a reproducible witness: either a probe
    vector with the two differing images, or the two differing strand
    permutations (probe is None in that case).
    """

    status: Equality
    witness: str | None = None
    probe: tuple[int, ...] | None = None
    images: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.status is Equality.EQUAL


def _distinct_on(probe: Coordinates, w1: BraidWord, w2: BraidWord) -> Verdict | None:
    left = act_word(probe, w1).entries
    right = act_word(probe, w2).entries
    if left == right:
        return None
    return Verdict(
        Equality.DISTINCT,
        witness=f"vector {probe.to_csv()} is moved differently",
        probe=probe.entries,
        images=(left, right),
    )


def are_equal_bn(w1: BraidWord, w2: BraidWord) -> Verdict:
    """Decide equality in the braid group B_n; never Unknown.

    Both words must be classical (no virtual letters).  Equality holds
    exactly when the images of the base vector coincide.
    """
    if w1.strands != w2.strands:
        raise ValueError(f"strand counts differ: {w1.strands} vs {w2.strands}")
    for word in (w1, w2):
        if not word.is_classical():
            raise ValueError(
                f"word {format_word(word)!r} contains a virtual letter; "
                "B_n equality is defined for crossing letters only"
            )
    probe = base_vector(w1.strands)
    verdict = _distinct_on(probe, w1, w2)
    if verdict is not None:
        return verdict
    return Verdict(
        Equality.EQUAL,
        witness=f"equal image of the base vector {probe.to_csv()}, "
        "which separates distinct braids",
    )


def are_equal_vb2(w1: BraidWord, w2: BraidWord) -> Verdict:
    """Decide equality in the two-strand virtual braid group; never Unknown.

    The action on (0, 2, 0, 1) is faithful, so equal images mean equal
    group elements.
    """
    if w1.strands != 2 or w2.strands != 2:
        raise ValueError("the two-strand decider needs words on exactly 2 strands")
    probe = Coordinates(2, VB2_START)
    verdict = _distinct_on(probe, w1, w2)
    if verdict is not None:
        return verdict
    return Verdict(
        Equality.EQUAL,
        witness=f"equal image of {probe.to_csv()}, on which the two-strand "
        "action is faithful",
    )


def distinguish_vbn(
    w1: BraidWord, w2: BraidWord, battery: int = 1000, rng: Random | None = None
) -> Verdict:
    """Sound equality test for virtual braid words on any strand count.

    Returns Distinct when the strand permutations differ, when the base
    vector is moved differently, or when any of ``battery`` random probe
    vectors is.  Returns Equal only for letter-identical reduced words or
    on two strands, where the complete decider applies.  Otherwise Unknown:
    for three or more strands no faithful vector is known.
    """
    if w1.strands != w2.strands:
        raise ValueError(f"strand counts differ: {w1.strands} vs {w2.strands}")
    r1, r2 = free_reduce(w1), free_reduce(w2)
    if r1.letters == r2.letters:
        return Verdict(Equality.EQUAL, witness="identical words after free reduction")
    if w1.strands == 2:
        return are_equal_vb2(w1, w2)

    p1, p2 = permutation(w1), permutation(w2)
    if p1 != p2:
        return Verdict(
            Equality.DISTINCT,
            witness="strand permutations differ",
            images=(p1, p2),
        )
    verdict = _distinct_on(base_vector(w1.strands), w1, w2)
    if verdict is not None:
        return verdict

    if battery > 0 and rng is None:
        raise ValueError("a seeded Random is required for the probe battery")
    width = 2 * w1.strands
    for _ in range(battery):
        entries = [rng.randint(-BATTERY_BOUND, BATTERY_BOUND) for _ in range(width)]
        left = apply_letters(entries, w1.letters)
        right = apply_letters(entries, w2.letters)
        if left != right:
            return Verdict(
                Equality.DISTINCT,
                witness=f"vector {','.join(map(str, entries))} is moved differently",
                probe=tuple(entries),
                images=(tuple(left), tuple(right)),
            )
    return Verdict(
        Equality.UNKNOWN,
        witness=f"agree on the strand permutation, the base vector and "
        f"{battery} random probes; equality is undecided for "
        f"{w1.strands} strands",
    )
