"""Machine-checked transition diagram certifying two-strand faithfulness.

The action of a freely reduced word on a start vector (0, x, 0, y), with x
and y distinct positive integers, never returns to the start.  The argument
is a finite diagram over nine sign-pattern regions of Z^4: every region
reachable from the start box is closed under the next non-cancelling
generator, each crossing step obeys a closed-form linear image map valid on
its source region and strictly increases the L1 norm, and each virtual step
permutes coordinates, preserving the norm.  A nonempty reduced word hence
ends at a vector of larger norm, or at the pair-swapped start, and both
differ from the start vector.

Sign symbols are '0', '+', '-', '+0' and '-0', denoting zero, positive,
negative, nonnegative and nonpositive entries; a pattern is a quadruple of
symbols and names the set of quadruples satisfying it coordinatewise.

This module encodes the nine boxes and the nineteen arrows (fourteen
crossing arrows plus five virtual ones), checks every arrow on randomized
region samples, checks the diagram's closure combinatorially, and traces
certified paths for concrete words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random
from typing import Callable

from .action import Quad, act_quad
from .words import RHO, SIGMA, SIGMA_INV, BraidWord, free_reduce

SYMBOLS = ("0", "+", "-", "+0", "-0")

_PREDICATES: dict[str, Callable[[int], bool]] = {
    "0": lambda x: x == 0,
    "+": lambda x: x > 0,
    "-": lambda x: x < 0,
    "+0": lambda x: x >= 0,
    "-0": lambda x: x <= 0,
}

GENERATOR_NAMES = {SIGMA: "sigma", SIGMA_INV: "sigma^-1", RHO: "rho"}

SignPattern = tuple[str, str, str, str]


def symbol_matches(symbol: str, x: int) -> bool:
    """Membership of an integer in the set named by a sign symbol."""
    try:
        return _PREDICATES[symbol](x)
    except KeyError:
        raise ValueError(f"unknown sign symbol {symbol!r}") from None


def pattern_matches(pattern: SignPattern, quad: Quad) -> bool:
    a, b, c, d = quad
    s1, s2, s3, s4 = pattern
    return (
        _PREDICATES[s1](a)
        and _PREDICATES[s2](b)
        and _PREDICATES[s3](c)
        and _PREDICATES[s4](d)
    )


@dataclass(frozen=True)
class Box:
    """A named sign-pattern region of Z^4."""

    name: str
    pattern: SignPattern

    def matches(self, quad: Quad) -> bool:
        return pattern_matches(self.pattern, quad)


BOXES: tuple[Box, ...] = (
    Box("B1", ("0", "+", "0", "+")),
    Box("B2", ("+", "0", "0", "+")),
    Box("B3", ("-", "0", "0", "+")),
    Box("B4", ("0", "+", "+", "0")),
    Box("B5", ("0", "+", "-", "0")),
    Box("B6", ("-", "-", "+0", "+")),
    Box("B7", ("+", "-", "-0", "+")),
    Box("B8", ("+0", "+", "-", "-")),
    Box("B9", ("-0", "+", "+", "-")),
)

BOX_BY_NAME = {box.name: box for box in BOXES}

START_BOX = "B1"


def classify(quad: Quad) -> list[Box]:
    """All boxes whose pattern the quadruple satisfies.

    The nine patterns are pairwise disjoint, so the result has at most one
    element; quadruples outside the diagram (for example any with all
    entries positive) match none.
    """
    return [box for box in BOXES if box.matches(quad)]


@dataclass(frozen=True)
class Arrow:
    """A transition of the diagram.

    ``closed_form`` is the explicit image map valid on the source region;
    on every quadruple matching the source pattern it agrees with the
    general action of the generator and lands in the target pattern.
    """

    case: int | None  # 1..14 for crossing arrows, None for virtual ones
    source: str
    generator: int  # SIGMA, SIGMA_INV or RHO
    target: str
    closed_form: Callable[[int, int, int, int], Quad] = field(compare=False)

    @property
    def label(self) -> str:
        return "rho" if self.case is None else str(self.case)

    def describe(self) -> str:
        return (
            f"{self.label}: {self.source} --{GENERATOR_NAMES[self.generator]}--> "
            f"{self.target}"
        )


def _rho_closed_form(a: int, b: int, c: int, d: int) -> Quad:
    return (c, d, a, b)


_ARROWS: tuple[Arrow, ...] = (
    Arrow(1, "B1", SIGMA_INV, "B3", lambda a, b, c, d: (-b, 0, 0, b + d)),
    Arrow(2, "B1", SIGMA, "B2", lambda a, b, c, d: (b, 0, 0, b + d)),
    Arrow(3, "B3", SIGMA_INV, "B6", lambda a, b, c, d: (a, a, 0, d - a)),
    Arrow(4, "B2", SIGMA, "B7", lambda a, b, c, d: (a, -a, 0, a + d)),
    Arrow(5, "B5", SIGMA_INV, "B3", lambda a, b, c, d: (c - b, 0, 0, b)),
    Arrow(6, "B4", SIGMA, "B2", lambda a, b, c, d: (b + c, 0, 0, b)),
    Arrow(7, "B5", SIGMA, "B7", lambda a, b, c, d: (b, c, c, b - c)),
    Arrow(8, "B4", SIGMA_INV, "B6", lambda a, b, c, d: (-b, -c, c, b + c)),
    Arrow(9, "B6", SIGMA_INV, "B6", lambda a, b, c, d: (a, a + b - c, c, c + d - a)),
    Arrow(10, "B8", SIGMA_INV, "B6", lambda a, b, c, d: (c - b, d, a - d, b)),
    Arrow(11, "B8", SIGMA, "B7", lambda a, b, c, d: (a + b, c + d - a, c + d, a + b - c)),
    Arrow(12, "B7", SIGMA, "B7", lambda a, b, c, d: (a, b + c - a, c, a + d - c)),
    Arrow(13, "B9", SIGMA, "B7", lambda a, b, c, d: (b + c, d, a + d, b)),
    Arrow(14, "B9", SIGMA_INV, "B6", lambda a, b, c, d: (a - b, a + d - c, c - d, b + c - a)),
    # Virtual arrows, one out of each box a reduced path can leave by rho.
    # The pair swap carries B2/B4, B3/B5, B6/B8 and B7/B9 onto each other
    # and fixes B1; boxes B4, B5, B8 and B9 are only ever entered by rho,
    # so no reduced path leaves them by rho again.
    Arrow(None, "B1", RHO, "B1", _rho_closed_form),
    Arrow(None, "B2", RHO, "B4", _rho_closed_form),
    Arrow(None, "B3", RHO, "B5", _rho_closed_form),
    Arrow(None, "B6", RHO, "B8", _rho_closed_form),
    Arrow(None, "B7", RHO, "B9", _rho_closed_form),
)

_ARROW_FROM: dict[tuple[str, int], Arrow] = {
    (arrow.source, arrow.generator): arrow for arrow in _ARROWS
}


def arrow_table() -> tuple[Arrow, ...]:
    """The full transition table: fourteen crossing arrows plus five virtual."""
    return _ARROWS


def l1_norm(quad: Quad) -> int:
    """|a| + |b| + |c| + |d|."""
    a, b, c, d = quad
    return abs(a) + abs(b) + abs(c) + abs(d)


def sample_matching(
    pattern: SignPattern, rng: Random, magnitude: int = 10**6
) -> Quad:
    """Draw a quadruple matching the pattern.

    Magnitudes favour the boundary where the piecewise formulas switch:
    value 1 with probability 1/4, otherwise uniform in [1, magnitude]; the
    half-line symbols '+0' and '-0' produce their boundary zero with
    probability 1/4.
    """

    def draw(symbol: str) -> int:
        if symbol == "0":
            return 0
        if symbol in ("+0", "-0") and rng.random() < 0.25:
            return 0
        size = 1 if rng.random() < 0.25 else rng.randint(1, magnitude)
        return size if symbol in ("+", "+0") else -size

    s1, s2, s3, s4 = pattern
    return (draw(s1), draw(s2), draw(s3), draw(s4))


@dataclass(frozen=True)
class ArrowCheck:
    """Result of sampling one arrow.

    Counts the samples violating each of: closed form agreeing with the
    general action, image landing in the target pattern, the norm law
    (strict increase for crossings, preservation for virtual steps) and
    conservation of b + d.
    """

    arrow: Arrow
    samples: int
    closed_form_mismatches: int = 0
    target_escapes: int = 0
    norm_violations: int = 0
    pair_sum_violations: int = 0
    counterexample: Quad | None = None

    @property
    def ok(self) -> bool:
        return (
            self.closed_form_mismatches
            == self.target_escapes
            == self.norm_violations
            == self.pair_sum_violations
            == 0
        )

    def as_dict(self) -> dict:
        return {
            "arrow": self.arrow.label,
            "source": self.arrow.source,
            "generator": GENERATOR_NAMES[self.arrow.generator],
            "target": self.arrow.target,
            "samples": self.samples,
            "pass": self.ok,
            "closed_form_mismatches": self.closed_form_mismatches,
            "target_escapes": self.target_escapes,
            "norm_violations": self.norm_violations,
            "pair_sum_violations": self.pair_sum_violations,
            "counterexample": None
            if self.counterexample is None
            else list(self.counterexample),
        }


def verify_arrow(arrow: Arrow, samples: int, rng: Random) -> ArrowCheck:
    """Check one arrow on randomized samples of its source region."""
    if samples < 1:
        raise ValueError("at least one sample is required")
    source = BOX_BY_NAME[arrow.source].pattern
    target = BOX_BY_NAME[arrow.target].pattern
    mismatches = escapes = norm_bad = sum_bad = 0
    counterexample: Quad | None = None
    for _ in range(samples):
        quad = sample_matching(source, rng)
        image = act_quad(arrow.generator, quad)
        bad = False
        if image != arrow.closed_form(*quad):
            mismatches += 1
            bad = True
        if not pattern_matches(target, image):
            escapes += 1
            bad = True
        if arrow.generator == RHO:
            if l1_norm(image) != l1_norm(quad):
                norm_bad += 1
                bad = True
        elif l1_norm(image) <= l1_norm(quad):
            norm_bad += 1
            bad = True
        if image[1] + image[3] != quad[1] + quad[3]:
            sum_bad += 1
            bad = True
        if bad and counterexample is None:
            counterexample = quad
    return ArrowCheck(
        arrow, samples, mismatches, escapes, norm_bad, sum_bad, counterexample
    )


@dataclass(frozen=True)
class ClosureCheck:
    """Combinatorial closure of the diagram under reduced-word successors.

    For every arrow into a box, each generator that does not freely cancel
    the incoming one must label an arrow out of that box; the start box
    needs all three generators.  ``missing`` lists violations.
    """

    missing: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.missing

    def as_dict(self) -> dict:
        return {"pass": self.ok, "missing": [list(pair) for pair in self.missing]}


def verify_closure() -> ClosureCheck:
    available = set(_ARROW_FROM)
    required: set[tuple[str, int]] = {(START_BOX, kind) for kind in (SIGMA, SIGMA_INV, RHO)}
    for arrow in _ARROWS:
        for kind in (SIGMA, SIGMA_INV, RHO):
            if kind == -arrow.generator:  # would cancel the incoming letter
                continue
            required.add((arrow.target, kind))
    missing = sorted(required - available)
    return ClosureCheck(
        tuple((box, GENERATOR_NAMES[kind]) for box, kind in missing)
    )


@dataclass(frozen=True)
class DiagramReport:
    """Aggregate of all arrow checks and the closure check."""

    arrow_checks: tuple[ArrowCheck, ...]
    closure: ClosureCheck

    @property
    def ok(self) -> bool:
        return self.closure.ok and all(check.ok for check in self.arrow_checks)

    def as_dict(self) -> dict:
        return {
            "pass": self.ok,
            "arrows": [check.as_dict() for check in self.arrow_checks],
            "closure": self.closure.as_dict(),
        }


def verify_diagram(samples: int, rng: Random) -> DiagramReport:
    """Check every arrow on ``samples`` region samples plus the closure."""
    checks = tuple(verify_arrow(arrow, samples, rng) for arrow in _ARROWS)
    return DiagramReport(checks, verify_closure())


@dataclass(frozen=True)
class Certificate:
    """Evidence that a two-strand word acts nontrivially on the start vector.

    ``boxes`` is the traced path (start box first), ``norms`` the L1 norm
    after each step (start norm first).  ``violation`` is None unless the
    trace ever left the diagram or broke a norm law, which would contradict
    the faithfulness theorem and must never happen.
    """

    word: BraidWord
    reduced: BraidWord
    start: Quad
    trivial: bool
    image: Quad
    boxes: tuple[str, ...]
    norms: tuple[int, ...]
    violation: str | None = None

    @property
    def nontrivial(self) -> bool:
        return not self.trivial and self.violation is None


def certify_nontrivial(word: BraidWord, start: Quad = (0, 2, 0, 1)) -> Certificate:
    """Freely reduce a two-strand word and certify whether it acts trivially.

    An empty reduction is reported as trivial.  Otherwise the word is
    applied to ``start``, which must have the form (0, x, 0, y) with x and
    y distinct positive integers, and the certificate records the box path
    through the diagram together with the norm sequence, checking each step
    against the arrow table.
    """
    if word.strands != 2:
        raise ValueError("certification applies to words on exactly 2 strands")
    a, b, c, d = start
    if a != 0 or c != 0 or b <= 0 or d <= 0 or b == d:
        raise ValueError(
            "start vector must be (0, x, 0, y) with distinct positive x and y"
        )
    reduced = free_reduce(word)
    if not reduced.letters:
        return Certificate(
            word, reduced, start, True, start, (START_BOX,), (l1_norm(start),)
        )

    current = start
    box = START_BOX
    boxes = [box]
    norms = [l1_norm(start)]
    violation: str | None = None
    for step, (kind, _) in enumerate(reduced.letters, start=1):
        arrow = _ARROW_FROM.get((box, kind))
        if arrow is None:
            violation = (
                f"step {step}: no {GENERATOR_NAMES[kind]} arrow out of {box}"
            )
            break
        image = act_quad(kind, current)
        if image != arrow.closed_form(*current):
            violation = f"step {step}: closed form of arrow {arrow.label} disagrees"
            break
        if not BOX_BY_NAME[arrow.target].matches(image):
            violation = (
                f"step {step}: image {image} left the target region {arrow.target}"
            )
            break
        norm = l1_norm(image)
        if kind == RHO:
            if norm != norms[-1]:
                violation = f"step {step}: virtual step changed the norm"
                break
        elif norm <= norms[-1]:
            violation = f"step {step}: crossing step did not increase the norm"
            break
        box = arrow.target
        boxes.append(box)
        norms.append(norm)
        current = image

    if violation is None and current == start:
        violation = "nonempty reduced word returned to the start vector"
    return Certificate(
        word, reduced, start, False, current, tuple(boxes), tuple(norms), violation
    )
