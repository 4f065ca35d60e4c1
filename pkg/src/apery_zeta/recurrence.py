"""Exact iteration of four-term linear recurrences with polynomial coefficients.

A system is written in homogeneous form

    lead(n) x[n+1] + c0(n) x[n] + c1(n) x[n-1] + c2(n) x[n-2] = 0

and several solutions are advanced in lockstep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .polynomial import IntPolynomial


class RecurrenceError(ArithmeticError):
    """The leading coefficient vanished, so x[n+1] is not determined."""

    def __init__(self, n: int):
        super().__init__(f"leading coefficient vanishes at n={n}")
        self.n = n


class BitBudgetExceeded(RuntimeError):
    def __init__(self, n: int, bits: int, limit: int):
        super().__init__(f"value at n={n} needs {bits} bits, over the limit of {limit}")
        self.n, self.bits, self.limit = n, bits, limit


@dataclass(frozen=True)
class RecurrenceSystem:
    lead: IntPolynomial
    c0: IntPolynomial
    c1: IntPolynomial
    c2: IntPolynomial
    name: str = ""

    def coefficients(self, n: int) -> tuple[int, int, int, int]:
        return self.lead(n), self.c0(n), self.c1(n), self.c2(n)

    def residual(self, seq: Sequence, n: int):
        """Left-hand side at index n for a sequence indexed from 0.

        Works for any values supporting ``int * value`` and ``+``, so interval
        valued sequences give interval residuals.
        """
        lead, c0, c1, c2 = self.coefficients(n)
        return lead * seq[n + 1] + c0 * seq[n] + c1 * seq[n - 1] + c2 * seq[n - 2]


@dataclass(frozen=True)
class SolutionTriple:
    """Index n and, per solution, the window (x[n-2], x[n-1], x[n])."""

    n: int
    windows: tuple[tuple[Fraction, Fraction, Fraction], ...]

    @classmethod
    def from_initial(cls, *sequences: Sequence) -> SolutionTriple:
        """Seed from initial data x[0], x[1], x[2] of each solution."""
        windows = tuple(tuple(Fraction(v) for v in seq[:3]) for seq in sequences)
        if any(len(w) != 3 for w in windows):
            raise ValueError("each solution needs three initial values")
        return cls(2, windows)

    def current(self) -> tuple[Fraction, ...]:
        return tuple(w[2] for w in self.windows)


def step(system: RecurrenceSystem, state: SolutionTriple) -> SolutionTriple:
    n = state.n
    lead, c0, c1, c2 = system.coefficients(n)
    if lead == 0:
        raise RecurrenceError(n)
    windows = []
    for x2, x1, x0 in state.windows:
        nxt = -(c0 * x0 + c1 * x1 + c2 * x2) / Fraction(lead)
        windows.append((x1, x0, nxt))
    return SolutionTriple(n + 1, tuple(windows))


def step_back(system: RecurrenceSystem, state: SolutionTriple) -> SolutionTriple:
    """Undo :func:`step` by solving the recurrence at n-1 for x[n-3]."""
    n = state.n - 1
    lead, c0, c1, c2 = system.coefficients(n)
    if c2 == 0:
        raise RecurrenceError(n)
    windows = []
    for x1, x0, nxt in state.windows:
        x2 = -(lead * nxt + c0 * x0 + c1 * x1) / Fraction(c2)
        windows.append((x2, x1, x0))
    return SolutionTriple(n, tuple(windows))


def run(
    system: RecurrenceSystem,
    initial: SolutionTriple,
    n_max: int,
    max_bits: int | None = None,
) -> Iterator[SolutionTriple]:
    """Yield the initial state and every state up to index n_max."""
    if n_max < initial.n:
        raise ValueError(f"n_max={n_max} is below the initial index {initial.n}")
    state = initial
    yield state
    while state.n < n_max:
        state = step(system, state)
        if max_bits is not None:
            bits = max(
                max(v.numerator.bit_length(), v.denominator.bit_length()) for v in state.current()
            )
            if bits > max_bits:
                raise BitBudgetExceeded(state.n, bits, max_bits)
        yield state


def solve(
    system: RecurrenceSystem,
    initial: Sequence[Sequence],
    n_max: int,
    max_bits: int | None = None,
) -> list[list[Fraction]]:
    """Full sequences x[0..n_max] for each solution given by its first three terms."""
    seqs = [[Fraction(v) for v in init[:3]] for init in initial]
    if n_max < 2:
        return [s[: n_max + 1] for s in seqs]
    states = run(system, SolutionTriple.from_initial(*initial), n_max, max_bits)
    next(states)
    for state in states:
        for seq, value in zip(seqs, state.current()):
            seq.append(value)
    return seqs
