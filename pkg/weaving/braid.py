"""Braid words, the weaving-family generator, and closure data."""

from __future__ import annotations

import re
from dataclasses import dataclass


class BraidError(Exception):
    """Exception raised for invalid braid words or braid text."""

    def __init__(self, code: str, message: str, position: int | None = None) -> None:
        self.code = code
        self.message = message
        self.position = position
        super().__init__(message if position is None else f"{message} (at position {position})")


@dataclass(frozen=True, slots=True)
class BraidWord:
    """
    A word in the Artin generators on ``strands`` strands.

    Letter ``j > 0`` is sigma_j, ``j < 0`` is sigma_|j|^-1. The strand count
    is explicit so that the empty word and untouched top strands keep their
    meaning (unlinked components).
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise BraidError(code="INDEX_RANGE", message=f"strand count must be >= 1, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise BraidError(
                    code="INDEX_RANGE",
                    message=f"letter {letter} out of range for {self.strands} strands",
                )

    @property
    def crossings(self) -> int:
        return len(self.letters)

    @property
    def writhe(self) -> int:
        """Sum of letter signs; closed-braid strands are coherently oriented."""
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Image of each starting position after reading the word top to bottom."""
        occupant = list(range(self.strands))
        for letter in self.letters:
            i = abs(letter) - 1
            occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
        image = [0] * self.strands
        for position, strand in enumerate(occupant):
            image[strand] = position
        return tuple(image)

    def component_count(self) -> int:
        """Number of cycles of the induced strand permutation."""
        image = self.permutation()
        seen = [False] * self.strands
        cycles = 0
        for start in range(self.strands):
            if seen[start]:
                continue
            cycles += 1
            current = start
            while not seen[current]:
                seen[current] = True
                current = image[current]
        return cycles

    def conjugate(self, generator: int) -> BraidWord:
        """Markov conjugation: gamma * beta * gamma^-1 with gamma a single letter."""
        if generator == 0 or abs(generator) > self.strands - 1:
            raise BraidError(
                code="INDEX_RANGE",
                message=f"conjugating letter {generator} out of range for {self.strands} strands",
            )
        return BraidWord(self.strands, (generator, *self.letters, -generator))

    def stabilize(self, sign: int = 1) -> BraidWord:
        """Markov stabilization: append sigma_k^(+-1) on k + 1 strands."""
        if sign not in (1, -1):
            raise BraidError(code="DOMAIN_ERROR", message=f"stabilization sign must be +1 or -1, got {sign}")
        return BraidWord(self.strands + 1, (*self.letters, sign * self.strands))

    def crossing_change(self, index: int) -> BraidWord:
        """Flip the sign of the letter at ``index``."""
        if not 0 <= index < len(self.letters):
            raise BraidError(
                code="INDEX_RANGE",
                message=f"crossing index {index} out of range for a word of length {len(self.letters)}",
            )
        letters = list(self.letters)
        letters[index] = -letters[index]
        return BraidWord(self.strands, tuple(letters))

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-letter for letter in self.letters))

    def __str__(self) -> str:
        return format_braid(self)


def weaving_word(p: int, n: int) -> BraidWord:
    """
    The braid (sigma_1 sigma_2^-1 sigma_3 ... sigma_{p-1}^{(-1)^p})^n on p strands.

    Raises:
        BraidError: DOMAIN_ERROR for p < 2 or n < 1
    """
    if p < 2 or n < 1:
        raise BraidError(code="DOMAIN_ERROR", message=f"W(p,n) needs p >= 2 and n >= 1, got ({p},{n})")
    period = tuple(i if i % 2 == 1 else -i for i in range(1, p))
    return BraidWord(p, period * n)


_BRAID_RE = re.compile(r"\s*([+-]?\d+)")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"k; j1 j2 ... jm"``, e.g. ``"3; 1 -2 1 -2"``."""
    head, separator, tail = text.partition(";")
    if not separator:
        raise BraidError(code="PARSE_ERROR", message="expected 'strands; letters'", position=len(text))
    try:
        strands = int(head.strip())
    except ValueError:
        raise BraidError(
            code="PARSE_ERROR", message=f"invalid strand count {head.strip()!r}", position=0
        ) from None
    letters: list[int] = []
    offset = len(head) + 1
    pos = 0
    while pos < len(tail):
        if tail[pos:].strip() == "":
            break
        match = _BRAID_RE.match(tail, pos)
        if match is None:
            stripped = len(tail[pos:]) - len(tail[pos:].lstrip())
            raise BraidError(
                code="PARSE_ERROR",
                message=f"expected a signed integer letter near {tail[pos:].strip()[:10]!r}",
                position=offset + pos + stripped,
            )
        letter = int(match.group(1))
        end = match.end()
        if end < len(tail) and not tail[end].isspace():
            raise BraidError(
                code="PARSE_ERROR",
                message=f"unexpected character {tail[end]!r}",
                position=offset + end,
            )
        if letter == 0:
            raise BraidError(
                code="PARSE_ERROR", message="letter 0 is not a generator", position=offset + match.start(1)
            )
        letters.append(letter)
        pos = end
    return BraidWord(strands, tuple(letters))


def format_braid(word: BraidWord) -> str:
    letters = " ".join(str(letter) for letter in word.letters)
    return f"{word.strands}; {letters}".rstrip()
