"""Words in the generators of the braid group B_n and the virtual braid group VB_n.

A word over n strands is a finite sequence of letters drawn from
sigma_1, ..., sigma_{n-1} (positive crossings), their inverses, and
rho_1, ..., rho_{n-1} (virtual crossings, each an involution).

Text format: one token per letter, whitespace separated.  's3' is sigma_3,
'S3' is sigma_3^{-1}, 'r3' is rho_3.  A token may carry an integer exponent
after '^', e.g. 's1^-2'; rho tokens with even exponent vanish and with odd
exponent contribute a single rho.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from random import Random
from typing import NamedTuple

SIGMA = 1
SIGMA_INV = -1
RHO = 0

_KINDS = (SIGMA, SIGMA_INV, RHO)
_KIND_CHAR = {SIGMA: "s", SIGMA_INV: "S", RHO: "r"}
_CHAR_KIND = {"s": SIGMA, "S": SIGMA_INV, "r": RHO}

_TOKEN_RE = re.compile(r"([sSr])([0-9]+)(?:\^(-?[0-9]+))?\Z")
_BAD_EXPONENT_RE = re.compile(r"[sSr][0-9]+\^.*\Z")


class Letter(NamedTuple):
    """A single generator letter; kind is SIGMA, SIGMA_INV or RHO."""

    kind: int
    index: int

    def inverse(self) -> "Letter":
        # -0 == 0, so rho letters are their own inverses.
        return Letter(-self.kind, self.index)


def cancels(first: Letter, second: Letter) -> bool:
    """True when the two adjacent letters cancel freely."""
    return first.index == second.index and first.kind == -second.kind


class ParseError(ValueError):
    """Raised for malformed word text; carries the 1-based token position."""

    def __init__(self, position: int, token: str, problem: str):
        super().__init__(f"token {position} ({token!r}): {problem}")
        self.position = position
        self.token = token
        self.problem = problem


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators of VB_n (or of B_n, if no rho occurs)."""

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"strand count must be at least 2, got {self.strands}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.kind not in _KINDS:
                raise ValueError(f"unknown letter kind {letter.kind}")
            if not 1 <= letter.index < self.strands:
                raise ValueError(
                    f"letter index {letter.index} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words with different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self)

    def is_classical(self) -> bool:
        """True when the word contains no virtual letter."""
        return all(letter.kind != RHO for letter in self.letters)


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse word text into a BraidWord.

    With ``strands`` omitted the strand count is inferred as one more than
    the largest generator index (minimum 2).  Exponents expand in place:
    's1^3' gives three copies of sigma_1, negative exponents invert, and a
    rho exponent only matters mod 2.
    """
    if strands is not None and strands < 2:
        raise ValueError(f"strand count must be at least 2, got {strands}")
    letters: list[Letter] = []
    max_index = 0
    for position, token in enumerate(text.split(), start=1):
        match = _TOKEN_RE.match(token)
        if match is None:
            if _BAD_EXPONENT_RE.match(token):
                raise ParseError(position, token, "exponent is not an integer")
            raise ParseError(position, token, "malformed token")
        char, index_text, exponent_text = match.groups()
        index = int(index_text)
        if index == 0:
            raise ParseError(position, token, "generator index must be at least 1")
        if strands is not None and index >= strands:
            raise ParseError(
                position, token, f"index {index} out of range for {strands} strands"
            )
        max_index = max(max_index, index)
        kind = _CHAR_KIND[char]
        exponent = 1 if exponent_text is None else int(exponent_text)
        if kind == RHO:
            if exponent % 2 == 1:
                letters.append(Letter(RHO, index))
        else:
            repeated = kind if exponent > 0 else -kind
            letters.extend([Letter(repeated, index)] * abs(exponent))
    if strands is None:
        strands = max(2, max_index + 1)
    return BraidWord(strands, tuple(letters))


def format_word(word: BraidWord) -> str:
    """Canonical text: one token per letter, space separated, no exponents."""
    return " ".join(_KIND_CHAR[kind] + str(index) for kind, index in word.letters)


def free_reduce(word: BraidWord) -> BraidWord:
    """Delete adjacent sigma/sigma-inverse and rho/rho pairs until none remain.

    Only free cancellation is applied; no braid or mixed relations are used.
    """
    stack: list[Letter] = []
    for letter in word.letters:
        if stack and cancels(stack[-1], letter):
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(word.strands, tuple(stack))


def inverse(word: BraidWord) -> BraidWord:
    """The group inverse: reversed letters with crossings inverted."""
    return BraidWord(
        word.strands, tuple(letter.inverse() for letter in reversed(word.letters))
    )


def random_reduced_word(
    strands: int, length: int, rng: Random, *, virtual: bool = True
) -> BraidWord:
    """Draw a uniformly random freely reduced word of exactly ``length`` letters.

    Each letter is uniform over the generator letters that do not cancel
    against the previous one.  With ``virtual=False`` only crossing letters
    are used, i.e. the word lies in B_n.  Deterministic for a fixed rng state.
    """
    if strands < 2:
        raise ValueError(f"strand count must be at least 2, got {strands}")
    if length < 0:
        raise ValueError(f"length must be nonnegative, got {length}")
    per_index = 3 if virtual else 2
    total = per_index * (strands - 1)
    letters: list[Letter] = []
    banned = -1  # alphabet id that would cancel the previous letter
    for _ in range(length):
        if banned < 0:
            letter_id = rng.randrange(total)
        else:
            letter_id = rng.randrange(total - 1)
            if letter_id >= banned:
                letter_id += 1
        position, slot = divmod(letter_id, per_index)
        kind = _KINDS[slot]
        letters.append(Letter(kind, position + 1))
        # id of the cancelling partner: sigma and its inverse swap slots,
        # rho cancels itself.
        banned = per_index * position + (1 - slot if slot < 2 else slot)
    return BraidWord(strands, tuple(letters))


def permutation(word: BraidWord) -> tuple[int, ...]:
    """Image of the word in the symmetric group, in one-line notation.

    Every letter, crossing or virtual, maps to the transposition of the
    strand positions it touches.
    """
    images = list(range(1, word.strands + 1))
    for _, index in word.letters:
        upper = index + 1
        for k, value in enumerate(images):
            if value == index:
                images[k] = upper
            elif value == upper:
                images[k] = index
    return tuple(images)


def concat(*parts: BraidWord) -> BraidWord:
    """Concatenate words over the same strand count."""
    if not parts:
        raise ValueError("concat needs at least one word")
    result = parts[0]
    for part in parts[1:]:
        result = result * part
    return result
