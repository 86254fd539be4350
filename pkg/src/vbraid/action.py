"""Exact piecewise-linear action of braid and virtual braid words on Z^{2n}.

A configuration on n strands is a vector (a_1, b_1, ..., a_n, b_n) of
signed integers.  A generator with index i rewrites the quadruple
(a_i, b_i, a_{i+1}, b_{i+1}) and leaves all other entries alone.  Writing
x+ = max(x, 0) and x- = min(x, 0), the positive crossing acts by

    (a, b, c, d) -> (a + b+ + (d+ - e)+,  d - e+,  c + d- + (b- + e)-,  b + e+)

with e = a - b- - c + d+; the inverse crossing acts by

    (a, b, c, d) -> (a - b+ - (d+ + f)+,  d + f-,  c - d- - (b- - f)-,  b - f-)

with f = a + b- - c - d+; the virtual crossing swaps the two pairs,
(a, b, c, d) -> (c, d, a, b).  Words act on the right: the leftmost letter
is applied first.

All arithmetic is exact.  Entries are unbounded Python integers; iterated
crossings grow coordinates without bound and no fixed-width type is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import RHO, SIGMA, SIGMA_INV, BraidWord, Letter

Quad = tuple[int, int, int, int]


def pos_part(x: int) -> int:
    """max(x, 0)."""
    return x if x > 0 else 0


def neg_part(x: int) -> int:
    """min(x, 0); pos_part(x) + neg_part(x) == x."""
    return x if x < 0 else 0


def act_sigma(quad: Quad) -> Quad:
    """Image of a quadruple under the positive crossing."""
    a, b, c, d = quad
    bp = b if b > 0 else 0
    bm = b if b < 0 else 0
    dp = d if d > 0 else 0
    dm = d if d < 0 else 0
    e = a - bm - c + dp
    ep = e if e > 0 else 0
    u = dp - e
    w = bm + e
    return (
        a + bp + (u if u > 0 else 0),
        d - ep,
        c + dm + (w if w < 0 else 0),
        b + ep,
    )


def act_sigma_inv(quad: Quad) -> Quad:
    """Image of a quadruple under the inverse crossing."""
    a, b, c, d = quad
    bp = b if b > 0 else 0
    bm = b if b < 0 else 0
    dp = d if d > 0 else 0
    dm = d if d < 0 else 0
    f = a + bm - c - dp
    fm = f if f < 0 else 0
    u = dp + f
    w = bm - f
    return (
        a - bp - (u if u > 0 else 0),
        d + fm,
        c - dm - (w if w < 0 else 0),
        b - fm,
    )


def act_rho(quad: Quad) -> Quad:
    """Image of a quadruple under the virtual crossing: swap the two pairs."""
    a, b, c, d = quad
    return (c, d, a, b)


def act_quad(kind: int, quad: Quad) -> Quad:
    """Dispatch on the letter kind (SIGMA, SIGMA_INV or RHO)."""
    if kind == SIGMA:
        return act_sigma(quad)
    if kind == SIGMA_INV:
        return act_sigma_inv(quad)
    if kind == RHO:
        return act_rho(quad)
    raise ValueError(f"unknown letter kind {kind}")


@dataclass(frozen=True)
class Coordinates:
    """A point of Z^{2n}: entries (a_1, b_1, ..., a_n, b_n)."""

    strands: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"strand count must be at least 2, got {self.strands}")
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != 2 * self.strands:
            raise ValueError(
                f"expected {2 * self.strands} entries for {self.strands} strands, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_entries(cls, entries: Iterable[int]) -> "Coordinates":
        entries = tuple(entries)
        if len(entries) % 2 != 0:
            raise ValueError(f"entry count must be even, got {len(entries)}")
        return cls(len(entries) // 2, entries)

    @classmethod
    def from_csv(cls, text: str) -> "Coordinates":
        try:
            entries = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"not a comma-separated integer vector: {text!r}") from None
        return cls.from_entries(entries)

    def to_csv(self) -> str:
        return ",".join(str(x) for x in self.entries)


def base_vector(strands: int) -> Coordinates:
    """The distinguished start vector (0, 1, 0, 1, ..., 0, 1)."""
    return Coordinates(strands, (0, 1) * strands)


def even_sum(coords: Coordinates) -> int:
    """b_1 + ... + b_n; conserved by the action of every word."""
    return sum(coords.entries[1::2])


def apply_letters(entries: Sequence[int], letters: Iterable[Letter]) -> list[int]:
    """Low-level engine: act on a raw entry sequence, returning a new list.

    No validation is performed; callers guarantee letter indices fit the
    vector.  This is the hot path shared by the word action, the battery
    screens and the kernel hunt.
    """
    v = list(entries)
    for kind, i in letters:
        j = 2 * i - 2
        if kind == 0:
            v[j], v[j + 1], v[j + 2], v[j + 3] = v[j + 2], v[j + 3], v[j], v[j + 1]
            continue
        a = v[j]
        b = v[j + 1]
        c = v[j + 2]
        d = v[j + 3]
        bp = b if b > 0 else 0
        bm = b if b < 0 else 0
        dp = d if d > 0 else 0
        dm = d if d < 0 else 0
        if kind == 1:
            e = a - bm - c + dp
            ep = e if e > 0 else 0
            u = dp - e
            w = bm + e
            v[j] = a + bp + (u if u > 0 else 0)
            v[j + 1] = d - ep
            v[j + 2] = c + dm + (w if w < 0 else 0)
            v[j + 3] = b + ep
        else:
            f = a + bm - c - dp
            fm = f if f < 0 else 0
            u = dp + f
            w = bm - f
            v[j] = a - bp - (u if u > 0 else 0)
            v[j + 1] = d + fm
            v[j + 2] = c - dm - (w if w < 0 else 0)
            v[j + 3] = b - fm
    return v


def act_letter(coords: Coordinates, letter: Letter) -> Coordinates:
    """Act by a single generator letter."""
    if not 1 <= letter.index < coords.strands:
        raise ValueError(
            f"letter index {letter.index} out of range for {coords.strands} strands"
        )
    return Coordinates(coords.strands, tuple(apply_letters(coords.entries, (letter,))))


def act_word(coords: Coordinates, word: BraidWord) -> Coordinates:
    """Act by a word, leftmost letter first; the empty word is the identity."""
    if word.strands != coords.strands:
        raise ValueError(
            f"word on {word.strands} strands cannot act on a vector for "
            f"{coords.strands} strands"
        )
    return Coordinates(coords.strands, tuple(apply_letters(coords.entries, word.letters)))
