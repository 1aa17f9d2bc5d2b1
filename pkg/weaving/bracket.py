"""Kauffman-bracket state sum for braid closures.

Every smoothing state is a bitmask over the crossings. Loops are counted by
union-find on the endpoint graph whose nodes are (level, position) for the
c + 1 levels between crossings; closure arcs join level c back to level 0.
The numba kernel turns a range of states into a histogram indexed by
(number of A-smoothings, loop count), and histograms from disjoint ranges
simply add, so the result does not depend on how the range is split.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import partial

import anyio
import anyio.to_thread
import numpy as np
import structlog
from numba import njit

from weaving.braid import BraidWord
from weaving.config import settings
from weaving.laurent import LaurentPoly

logger = structlog.get_logger()

JIT_OPTIONS = {"nogil": True, "cache": True}

# delta = -A^2 - A^-2, exponents in whole units of A
DELTA = LaurentPoly(((-2, -1), (2, -1)))


class StateBudgetError(Exception):
    """Exception raised when 2^c exceeds the configured state budget."""

    def __init__(self, code: str, message: str, states: int, budget: int) -> None:
        self.code = code
        self.message = message
        self.states = states
        self.budget = budget
        super().__init__(message)


class ParityError(Exception):
    """Exception raised when the normalized bracket has an odd A-exponent."""

    def __init__(self, code: str, message: str) -> None:
        self.code = code
        self.message = message
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class StateSumResult:
    """Bracket in A, writhe, and the normalized Jones polynomial in s = t^(1/2)."""

    bracket: LaurentPoly
    writhe: int
    jones: LaurentPoly


# ----------------------------------------------------------------------
# Kernel
# ----------------------------------------------------------------------


@njit(**JIT_OPTIONS)
def _find(parent: np.ndarray, node: int) -> int:
    while parent[node] != node:
        parent[node] = parent[parent[node]]
        node = parent[node]
    return node


@njit(**JIT_OPTIONS)
def _union(parent: np.ndarray, a: int, b: int) -> int:
    root_a = _find(parent, a)
    root_b = _find(parent, b)
    if root_a == root_b:
        return 0
    parent[root_a] = root_b
    return 1


@njit(**JIT_OPTIONS)
def _state_histogram(
    positions: np.ndarray, identity_on_a: np.ndarray, strands: int, start: int, stop: int
) -> np.ndarray:
    """
    Histogram of (A-smoothing count, loop count) over states in [start, stop).

    Args:
        positions: Zero-based left position of each crossing
        identity_on_a: 1 where the A-smoothing keeps the strands vertical
        strands: Strand count of the braid
        start: First state bitmask (inclusive)
        stop: Last state bitmask (exclusive)
    """
    crossings = positions.shape[0]
    nodes = (crossings + 1) * strands
    hist = np.zeros((crossings + 1, nodes + 1), dtype=np.int64)
    parent = np.empty(nodes, dtype=np.int64)
    for state in range(start, stop):
        for node in range(nodes):
            parent[node] = node
        merges = 0
        for p in range(strands):
            merges += _union(parent, crossings * strands + p, p)
        a_count = 0
        for j in range(crossings):
            low = j * strands
            high = low + strands
            i = positions[j]
            for p in range(strands):
                if p != i and p != i + 1:
                    merges += _union(parent, low + p, high + p)
            use_a = (state >> j) & 1
            a_count += use_a
            identity = identity_on_a[j] if use_a else 1 - identity_on_a[j]
            if identity:
                merges += _union(parent, low + i, high + i)
                merges += _union(parent, low + i + 1, high + i + 1)
            else:
                merges += _union(parent, low + i, low + i + 1)
                merges += _union(parent, high + i, high + i + 1)
        hist[a_count, nodes - merges] += 1
    return hist


def _kernel_inputs(word: BraidWord) -> tuple[np.ndarray, np.ndarray]:
    positions = np.array([abs(letter) - 1 for letter in word.letters], dtype=np.int64)
    identity_on_a = np.array([1 if letter > 0 else 0 for letter in word.letters], dtype=np.int64)
    return positions, identity_on_a


def _chunks(total: int, chunk_states: int) -> list[tuple[int, int]]:
    size = max(1, chunk_states)
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _check_budget(word: BraidWord, budget: int) -> int:
    states = 1 << word.crossings
    if states > budget:
        raise StateBudgetError(
            code="TOO_LARGE",
            message=f"{word.crossings} crossings need {states} states, budget is {budget}",
            states=states,
            budget=budget,
        )
    return states


# ----------------------------------------------------------------------
# Fan-out
# ----------------------------------------------------------------------


async def _histogram_async(
    word: BraidWord, states: int, workers: int, chunk_states: int
) -> np.ndarray:
    positions, identity_on_a = _kernel_inputs(word)
    ranges = _chunks(states, chunk_states)
    results: list[np.ndarray | None] = [None] * len(ranges)
    limiter = anyio.CapacityLimiter(workers)

    async def run_chunk(index: int, start: int, stop: int) -> None:
        kernel = partial(_state_histogram, positions, identity_on_a, word.strands, start, stop)
        results[index] = await anyio.to_thread.run_sync(kernel, limiter=limiter)

    async with anyio.create_task_group() as tg:
        for index, (start, stop) in enumerate(ranges):
            tg.start_soon(run_chunk, index, start, stop)

    total = np.zeros((word.crossings + 1, (word.crossings + 1) * word.strands + 1), dtype=np.int64)
    for hist in results:
        assert hist is not None
        total += hist
    return total


def _histogram(word: BraidWord, states: int, workers: int, chunk_states: int) -> np.ndarray:
    if workers <= 1 or states <= chunk_states:
        positions, identity_on_a = _kernel_inputs(word)
        return _state_histogram(positions, identity_on_a, word.strands, 0, states)
    return anyio.run(_histogram_async, word, states, workers, chunk_states)


def bracket_from_histogram(hist: np.ndarray, crossings: int) -> LaurentPoly:
    """Sum hist[a, loops] * A^(2a - c) * delta^(loops - 1)."""
    delta_powers: dict[int, LaurentPoly] = {}
    acc: dict[int, int] = {}
    for row, column in zip(*np.nonzero(hist), strict=True):
        count = int(hist[row, column])
        loops = int(column)
        if loops not in delta_powers:
            delta_powers[loops] = DELTA ** (loops - 1)
        shift = 2 * int(row) - crossings
        for exponent, coeff in delta_powers[loops].terms:
            acc[exponent + shift] = acc.get(exponent + shift, 0) + count * coeff
    return LaurentPoly.from_mapping(acc)


def normalize(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """
    (-A^3)^(-writhe) * <D> with A -> t^(-1/4).

    Raises:
        ParityError: If an A-exponent of the normalized bracket is odd
    """
    sign = -1 if writhe % 2 else 1
    acc: dict[int, int] = {}
    for exponent, coeff in bracket.terms:
        shifted = exponent - 3 * writhe
        if shifted % 2:
            raise ParityError(
                code="PARITY_ERROR",
                message=f"odd A-exponent {shifted} after normalizing by writhe {writhe}",
            )
        acc[-shifted // 2] = sign * coeff
    return LaurentPoly.from_mapping(acc)


# ----------------------------------------------------------------------
# Public API
# ----------------------------------------------------------------------


def state_sum(
    word: BraidWord, budget: int | None = None, threads: int | None = None
) -> StateSumResult:
    """
    Run the full state sum for the closure of ``word``.

    Args:
        word: Braid word to close
        budget: Max states to enumerate (defaults to settings)
        threads: Worker count (defaults to settings, then CPU count)

    Returns:
        Bracket, writhe and Jones polynomial

    Raises:
        StateBudgetError: If 2^c exceeds the budget
        ParityError: If normalization leaves an odd A-exponent
    """
    states = _check_budget(word, settings.state_budget if budget is None else budget)
    workers = threads or settings.resolved_threads()
    started = time.perf_counter()
    hist = _histogram(word, states, workers, settings.chunk_states)
    bracket = bracket_from_histogram(hist, word.crossings)
    logger.info(
        "State sum finished",
        strands=word.strands,
        crossings=word.crossings,
        states=states,
        workers=workers,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 2),
    )
    return StateSumResult(bracket=bracket, writhe=word.writhe, jones=normalize(bracket, word.writhe))


def kauffman_bracket(
    word: BraidWord, budget: int | None = None, threads: int | None = None
) -> LaurentPoly:
    """Bracket polynomial of the closure, exponents in whole units of A."""
    return state_sum(word, budget=budget, threads=threads).bracket


def jones_via_bracket(
    word: BraidWord, budget: int | None = None, threads: int | None = None
) -> LaurentPoly:
    """Jones polynomial of the closure in s = t^(1/2)."""
    return state_sum(word, budget=budget, threads=threads).jones
