"""Randomized search for virtual braid words acting trivially on the lattice.

For three or more strands it is unknown whether a nontrivial word can act
as the identity on all of Z^{2n}.  The hunt draws random freely reduced
words, keeps those fixing the distinguished base vector, and batters the
survivors with random probe vectors.  A freely reduced word can still be
the identity element of the group (relator conjugates like
sigma_1 rho_2 rho_1 sigma_2^-1 rho_1 rho_2 occur routinely at scale), and
such words of course pass every probe, so battery survivors are finally
screened with a bounded rewriting prover: survivors provably equal to the
identity are set aside and only the rest are flagged as kernel candidates,
i.e. potential nontrivial words acting trivially.  None is expected, but
base fixers themselves are interesting near-kernel elements and are
reported with the fraction of probes they move.

Reproducibility: word k of a run is generated from the derived seed
``seed * 2**64 + k`` and its battery probes from the same stream, so the
outcome is a pure function of the configuration no matter how the index
range is split across workers.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .action import apply_letters
from .words import (
    RHO,
    SIGMA,
    SIGMA_INV,
    BraidWord,
    Letter,
    format_word,
    free_reduce,
    parse_word,
    random_reduced_word,
)


@dataclass(frozen=True)
class HuntConfig:
    """Parameters of one hunt run.

    ``word_length`` is a fixed length or an inclusive (low, high) range
    sampled uniformly.  ``base`` overrides the start vector; by default the
    base vector (0, 1, ..., 0, 1) for the configured strand count is used.
    """

    strands: int
    word_length: int | tuple[int, int]
    word_count: int
    seed: int
    battery_size: int = 100
    coefficient_bound: int = 100
    base: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"strand count must be at least 2, got {self.strands}")
        low, high = self.length_range()
        if low < 1 or high < low:
            raise ValueError(f"bad word length range ({low}, {high})")
        if self.word_count < 0:
            raise ValueError("word count must be nonnegative")
        if self.battery_size < 1:
            raise ValueError("battery size must be positive")
        if self.coefficient_bound < 1:
            raise ValueError("coefficient bound must be positive")
        if self.base is not None:
            if not isinstance(self.base, tuple):
                object.__setattr__(self, "base", tuple(self.base))
            if len(self.base) != 2 * self.strands:
                raise ValueError(
                    f"base vector needs {2 * self.strands} entries, got {len(self.base)}"
                )

    def length_range(self) -> tuple[int, int]:
        if isinstance(self.word_length, int):
            return (self.word_length, self.word_length)
        low, high = self.word_length
        return (low, high)

    def start_entries(self) -> tuple[int, ...]:
        return self.base if self.base is not None else (0, 1) * self.strands

    def as_dict(self) -> dict:
        low, high = self.length_range()
        return {
            "strands": self.strands,
            "word_length": [low, high],
            "word_count": self.word_count,
            "seed": self.seed,
            "battery_size": self.battery_size,
            "coefficient_bound": self.coefficient_bound,
            "base": None if self.base is None else list(self.base),
        }


@dataclass(frozen=True)
class Fixer:
    """A word that fixes the base vector, with its measured battery fraction."""

    word: str
    moved_fraction: Fraction
    samples: int

    def as_dict(self) -> dict:
        return {
            "word": self.word,
            "moved_fraction": float(self.moved_fraction),
            "samples": self.samples,
        }


@dataclass(frozen=True)
class HuntReport:
    """Deterministic outcome of a hunt, plus wall-clock runtime.

    ``seed_partition`` documents how the seed space is split: per word
    index, never per worker, so the report content does not depend on the
    worker count.  Base fixers that also fixed the entire battery end up
    either in ``identity_words`` (proven equal to the identity element by
    relation rewriting) or in ``kernel_candidates``; any entry of the
    latter would be a potential nontrivial word acting trivially.
    """

    config: HuntConfig
    words_tested: int
    base_fixers: tuple[Fixer, ...]
    kernel_candidates: tuple[str, ...]
    identity_words: tuple[str, ...]
    runtime_seconds: float
    seed_partition: tuple[tuple[str, str], ...]

    def as_dict(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "words_tested": self.words_tested,
            "base_fixers": [fixer.as_dict() for fixer in self.base_fixers],
            "kernel_candidates": list(self.kernel_candidates),
            "identity_words": list(self.identity_words),
            "runtime_seconds": self.runtime_seconds,
            "seed_partition": {key: value for key, value in self.seed_partition},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def fixers_jsonl(self) -> str:
        return "\n".join(json.dumps(fixer.as_dict()) for fixer in self.base_fixers)


def _word_seed(seed: int, index: int) -> int:
    return seed * 2**64 + index


def _inverted(side: tuple[Letter, ...]) -> tuple[Letter, ...]:
    return tuple(letter.inverse() for letter in reversed(side))


def relation_rules(strands: int) -> dict[tuple[Letter, ...], tuple[tuple[Letter, ...], ...]]:
    """Length-preserving rewrite rules derived from the defining relators.

    Every rotation of every defining relator (and of its inverse) is split
    in half, giving rules u -> v with u = v in the group and |u| = |v|.
    Rewrites can therefore never grow a word, and together with free
    reduction they shrink relator conjugates to nothing.
    """
    relators: list[tuple[Letter, ...]] = []
    for i in range(1, strands - 1):
        si, sj = Letter(SIGMA, i), Letter(SIGMA, i + 1)
        ti, tj = Letter(SIGMA_INV, i), Letter(SIGMA_INV, i + 1)
        ri, rj = Letter(RHO, i), Letter(RHO, i + 1)
        relators.append((si, sj, si, tj, ti, tj))  # braid relation
        relators.append((ri, rj, ri, rj, ri, rj))  # virtual braid relation
        relators.append((ri, rj, si, rj, ri, tj))  # mixed relation
        relators.append((rj, ri, sj, ri, rj, ti))  # mixed relation, other form
    for i in range(1, strands):
        for j in range(i + 2, strands):
            for a in (Letter(SIGMA, i), Letter(SIGMA_INV, i), Letter(RHO, i)):
                for b in (Letter(SIGMA, j), Letter(SIGMA_INV, j), Letter(RHO, j)):
                    relators.append((a, b) + _inverted((a,)) + _inverted((b,)))
    rules: dict[tuple[Letter, ...], set[tuple[Letter, ...]]] = {}
    for relator in relators:
        for variant in (relator, _inverted(relator)):
            size = len(variant)
            for shift in range(size):
                rotated = variant[shift:] + variant[:shift]
                left = rotated[: size // 2]
                right = _inverted(rotated[size // 2 :])
                if left != right:
                    rules.setdefault(left, set()).add(right)
    return {key: tuple(sorted(value)) for key, value in rules.items()}


def provably_trivial(
    word: BraidWord,
    rules: dict[tuple[Letter, ...], tuple[tuple[Letter, ...], ...]] | None = None,
    max_nodes: int = 50000,
) -> bool:
    """True when a rewriting path to the empty word is found.

    Sound but incomplete: a True answer certifies that the word is the
    identity element; False only means no certificate was found within the
    node budget.  The search applies free reduction and the non-growing
    relation rules breadth first.
    """
    if rules is None:
        rules = relation_rules(word.strands)
    widths = sorted({len(key) for key in rules})
    start = free_reduce(word).letters
    if not start:
        return True
    seen = {start}
    queue: deque[tuple[Letter, ...]] = deque([start])
    while queue and len(seen) < max_nodes:
        current = queue.popleft()
        for width in widths:
            for position in range(len(current) - width + 1):
                block = current[position : position + width]
                for replacement in rules.get(block, ()):
                    rewritten = BraidWord(
                        word.strands,
                        current[:position] + replacement + current[position + width :],
                    )
                    candidate = free_reduce(rewritten).letters
                    if not candidate:
                        return True
                    if candidate not in seen:
                        seen.add(candidate)
                        queue.append(candidate)
    return False


def _seed_partition(config: HuntConfig) -> tuple[tuple[str, str], ...]:
    return (
        ("scheme", "per word index"),
        ("word_seed", "seed * 2**64 + index"),
        ("indices", f"0..{config.word_count}"),
    )


def moved_fraction(
    word: BraidWord, samples: int, coefficient_bound: int, rng: Random
) -> Fraction:
    """Fraction of random probe vectors the word moves.

    Probes have entries drawn independently and uniformly from the integers
    in [-coefficient_bound, coefficient_bound].
    """
    if samples < 1:
        raise ValueError("at least one sample is required")
    letters = word.letters
    width = 2 * word.strands
    bound = coefficient_bound
    moved = 0
    for _ in range(samples):
        entries = [rng.randint(-bound, bound) for _ in range(width)]
        if apply_letters(entries, letters) != entries:
            moved += 1
    return Fraction(moved, samples)


def screen_word(
    word: BraidWord,
    base: tuple[int, ...],
    battery_size: int,
    coefficient_bound: int,
    rng: Random,
) -> tuple[bool, Fraction | None]:
    """Two-stage filter for one word.

    Returns (fixes_base, battery_moved_fraction); the battery only runs for
    base fixers, so the fraction is None otherwise.
    """
    if apply_letters(base, word.letters) != list(base):
        return (False, None)
    return (True, moved_fraction(word, battery_size, coefficient_bound, rng))


def _scan_range(config: HuntConfig, start: int, stop: int) -> dict[str, tuple[int, Fraction]]:
    """Screen word indices [start, stop); return fixers keyed by word text.

    Each value is (first index where the word occurred, battery fraction
    measured from that index's random stream).
    """
    low, high = config.length_range()
    base = list(config.start_entries())
    strands = config.strands
    found: dict[str, tuple[int, Fraction]] = {}
    for index in range(start, stop):
        rng = Random(_word_seed(config.seed, index))
        length = rng.randint(low, high)
        word = random_reduced_word(strands, length, rng)
        if apply_letters(base, word.letters) != base:
            continue
        text = format_word(word)
        if text not in found:
            fraction = moved_fraction(
                word, config.battery_size, config.coefficient_bound, rng
            )
            found[text] = (index, fraction)
    return found


def hunt(config: HuntConfig, workers: int = 1) -> HuntReport:
    """Run the randomized kernel search.

    The word index range is split into contiguous chunks across workers;
    results are merged keeping, for each distinct fixer, the measurement
    from its earliest index, so the report is identical for any worker
    count.
    """
    if workers < 1:
        raise ValueError("worker count must be positive")
    started = time.perf_counter()
    count = config.word_count
    if workers == 1 or count < 2 * workers:
        partials = [_scan_range(config, 0, count)]
    else:
        chunk = (count + workers - 1) // workers
        ranges = [
            (config, lo, min(lo + chunk, count)) for lo in range(0, count, chunk)
        ]
        with multiprocessing.Pool(workers) as pool:
            partials = pool.starmap(_scan_range, ranges)

    merged: dict[str, tuple[int, Fraction]] = {}
    for partial in partials:
        for text, (index, fraction) in partial.items():
            if text not in merged or index < merged[text][0]:
                merged[text] = (index, fraction)
    ordered = sorted(merged.items(), key=lambda item: item[1][0])
    fixers = tuple(
        Fixer(text, fraction, config.battery_size) for text, (_, fraction) in ordered
    )

    candidates: list[str] = []
    identities: list[str] = []
    rules = None
    for fixer in fixers:
        if fixer.moved_fraction != 0:
            continue
        if rules is None:
            rules = relation_rules(config.strands)
        word = parse_word(fixer.word, config.strands)
        if provably_trivial(word, rules):
            identities.append(fixer.word)
        else:
            candidates.append(fixer.word)
    return HuntReport(
        config=config,
        words_tested=count,
        base_fixers=fixers,
        kernel_candidates=tuple(candidates),
        identity_words=tuple(identities),
        runtime_seconds=time.perf_counter() - started,
        seed_partition=_seed_partition(config),
    )
