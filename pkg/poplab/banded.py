# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Counting banded permutations, finding linear recurrences, k-Fibonacci numbers.

A permutation is banded with slack (a, b) when every entry satisfies
-a < pi_i - i < b. Avoiding P_j and ~P_l together is the same as being banded
with (a, b) = (l - 1, j - 1).
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

HELD_OUT_TERMS = 2


class NoRecurrenceError(ArithmeticError):
    """Raised when no linear recurrence short enough to validate fits a sequence."""


@dataclass(frozen=True)
class BandedSpec:
    """Displacement window -a < pi_i - i < b.

    Args:
        a: Lower slack, at least 1.
        b: Upper slack, at least 1.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"banded slack must be positive, got ({self.a}, {self.b})")

    @classmethod
    def from_flat_pair(cls, j: int, l: int) -> BandedSpec:  # noqa: E741
        """The window equivalent to avoiding P_j and ~P_l."""
        return cls(l - 1, j - 1)

    @property
    def width(self) -> int:
        return self.a + self.b - 1

    @property
    def start_state(self) -> int:
        """Window mask before position 1; the a - 1 values up to 0 count as used."""
        return (1 << (self.a - 1)) - 1

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def _step(mask: int, k: int) -> int:
    """Place window slot k, then slide; -1 if the lowest value would be left unused."""
    placed = mask | (1 << k)
    if not placed & 1:
        return -1
    return placed >> 1


def banded_count(n: int, spec: BandedSpec) -> int:
    """Number of permutations of length n inside the window.

    The DP runs over positions. Its state is the set of used values among
    i - a + 1 .. i + b - 1 (bit k for value i - a + 1 + k); the lowest of these
    must be used before the window slides past it.

    Raises:
        ValueError: If ``n`` is negative.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    states: Dict[int, int] = {spec.start_state: 1}
    for i in range(1, n + 1):
        nxt: Dict[int, int] = {}
        for mask, ways in states.items():
            for k in range(spec.width):
                if i - spec.a + 1 + k > n:
                    break
                if mask >> k & 1:
                    continue
                state = _step(mask, k)
                if state >= 0:
                    nxt[state] = nxt.get(state, 0) + ways
        states = nxt
    return sum(states.values())


def banded_sequence(spec: BandedSpec, n_max: int) -> List[int]:
    return [banded_count(n, spec) for n in range(n_max + 1)]


@lru_cache(maxsize=None)
def window_states(spec: BandedSpec) -> Tuple[int, ...]:
    """Masks with exactly a - 1 of the lowest w - 1 bits set, ascending."""
    masks = (
        sum(1 << k for k in bits)
        for bits in combinations(range(spec.width - 1), spec.a - 1)
    )
    return tuple(sorted(masks))


def transfer_matrix(spec: BandedSpec) -> np.ndarray:
    """Position-independent transition counts between window states.

    Entry [r, c] counts the placements taking state r to state c when no value
    bound applies; the array has object dtype so powers stay exact.
    """
    states = window_states(spec)
    index = {mask: i for i, mask in enumerate(states)}
    matrix = np.zeros((len(states), len(states)), dtype=object)
    for mask in states:
        for k in range(spec.width):
            if mask >> k & 1:
                continue
            state = _step(mask, k)
            if state >= 0:
                matrix[index[mask], index[state]] += 1
    return matrix


def banded_count_matrix(n: int, spec: BandedSpec) -> int:
    """N(n, a, b) as the return count to the start state in n transfer steps."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    states = window_states(spec)
    start = states.index(spec.start_state)
    power = np.linalg.matrix_power(transfer_matrix(spec), n)
    return int(power[start, start])


def _format_term(coeff: Fraction, power: int) -> str:
    sign = "-" if coeff > 0 else "+"
    mag = abs(coeff)
    var = "x" if power == 1 else f"x^{power}"
    return f" {sign} {var}" if mag == 1 else f" {sign} {mag}{var}"


@dataclass(frozen=True)
class Recurrence:
    """a_n = c_1 a_(n-1) + ... + c_d a_(n-d).

    Args:
        coefficients: c_1 .. c_d as exact rationals.
    """

    coefficients: Tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def denominator(self) -> str:
        """The g.f. denominator 1 - c_1 x - ... - c_d x^d, zero terms dropped."""
        text = "1"
        for power, coeff in enumerate(self.coefficients, start=1):
            if coeff:
                text += _format_term(coeff, power)
        return text

    def predict(self, history: Sequence[Fraction]) -> Fraction:
        """Next term after ``history``, which must hold at least ``order`` terms."""
        if len(history) < self.order:
            raise ValueError(
                f"need {self.order} previous terms, got {len(history)}"
            )
        return sum(
            (c * history[-i] for i, c in enumerate(self.coefficients, start=1)),
            Fraction(0),
        )

    def fits(self, seq: Sequence) -> bool:
        terms = [Fraction(v) for v in seq]
        return all(
            self.predict(terms[:n]) == terms[n] for n in range(self.order, len(terms))
        )

    def extend(self, seq: Sequence, count: int) -> List[Fraction]:
        terms = [Fraction(v) for v in seq]
        for _ in range(count):
            terms.append(self.predict(terms))
        return terms

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [str(c) for c in self.coefficients],
            "denominator": self.denominator(),
        }


def _berlekamp_massey(seq: Sequence[Fraction]) -> Tuple[List[Fraction], int]:
    """Connection polynomial C (C[0] = 1) and its length L over the rationals."""
    conn = [Fraction(1)]
    prev = [Fraction(1)]
    length = 0
    shift = 1
    last = Fraction(1)
    for n, term in enumerate(seq):
        disc = term + sum(
            (conn[i] * seq[n - i] for i in range(1, length + 1) if i < len(conn)),
            Fraction(0),
        )
        if disc == 0:
            shift += 1
            continue
        saved = list(conn)
        factor = disc / last
        conn.extend([Fraction(0)] * (len(prev) + shift - len(conn)))
        for i, coeff in enumerate(prev):
            conn[i + shift] -= factor * coeff
        if 2 * length <= n:
            length = n + 1 - length
            prev = saved
            last = disc
            shift = 1
        else:
            shift += 1
    conn.extend([Fraction(0)] * (length + 1 - len(conn)))
    return conn[: length + 1], length


def find_recurrence(seq: Sequence[int]) -> Recurrence:
    """Minimal linear recurrence with constant rational coefficients.

    The recurrence is fitted on all but the last two terms and must predict
    those two as well.

    Args:
        seq: Integer (or rational) terms a_0, a_1, ...

    Returns:
        The minimal recurrence.

    Raises:
        NoRecurrenceError: If the fitted order exceeds len(seq) / 2 - 1 or the
            held-out terms disagree.
    """
    terms = [Fraction(v) for v in seq]
    train = terms[: len(terms) - HELD_OUT_TERMS]
    if len(train) < 2:
        raise NoRecurrenceError(
            f"need at least {HELD_OUT_TERMS + 2} terms, got {len(terms)}"
        )
    conn, length = _berlekamp_massey(train)
    if 2 * length > len(train):
        raise NoRecurrenceError(
            f"minimal recurrence order {length} is too large for {len(terms)} terms"
        )
    rec = Recurrence(tuple(-c for c in conn[1:]))
    if not rec.fits(terms):
        raise NoRecurrenceError(
            f"order-{length} recurrence fails on the {HELD_OUT_TERMS} held-out terms"
        )
    logger.debug("recurrence of order %d: %s", rec.order, rec.denominator())
    return rec


def kfib(k: int, n: int) -> int:
    """F_n^(k) with F_1 = 1 and F_r = 0 for r <= 0.

    Raises:
        ValueError: If ``k < 2``.
    """
    if k < 2:
        raise ValueError(f"k-Fibonacci numbers need k >= 2, got {k}")
    if n <= 0:
        return 0
    window = deque([0] * (k - 1) + [1], maxlen=k)
    running = 1
    for _ in range(n - 1):
        nxt = running
        running += nxt - window[0]
        window.append(nxt)
    return window[-1]
