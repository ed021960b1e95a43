# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Permutations in one-line notation and the six statistics.

A permutation of length n is stored as the tuple of its values pi_1 ... pi_n over
{1, ..., n}. The empty permutation is a regular value of length 0.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

MAX_N_ENV = "POPLAB_MAX_N"
DEFAULT_MAX_N = 12


class InvalidPermutationError(ValueError):
    """Raised when a sequence is not a permutation of {1, ..., n}."""


class EnumerationCapError(RuntimeError):
    """Raised when a request would enumerate beyond the configured length cap."""


def enumeration_cap(default: int = DEFAULT_MAX_N) -> int:
    """Return the enumeration cap, honouring the ``POPLAB_MAX_N`` override.

    Args:
        default: Cap used when the environment variable is not set.

    Returns:
        The largest permutation length enumeration may reach.

    Raises:
        ValueError: If the environment variable is not a nonnegative integer.
    """
    raw = os.environ.get(MAX_N_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{MAX_N_ENV} must be nonnegative, got {cap}")
    return cap


def check_cap(n: int, cap: int) -> None:
    """Raise ``EnumerationCapError`` if ``n`` exceeds ``cap``.

    Raises:
        EnumerationCapError: If ``n > cap``.
    """
    if n > cap:
        raise EnumerationCapError(
            f"n={n} exceeds the enumeration cap {cap}; set {MAX_N_ENV} or pass "
            "--max-n with --allow-large to raise it"
        )


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation.

    Args:
        values: The values pi_1 ... pi_n, a bijection onto {1, ..., n}.
    """

    values: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __str__(self) -> str:
        if not self.values:
            return "ε"
        if len(self.values) < 10:
            return "".join(str(v) for v in self.values)
        return " ".join(str(v) for v in self.values)

    @classmethod
    def from_string(cls, text: str) -> Permutation:
        """Parse ``"423165"``, ``"4 2 3 1 6 5"`` or ``"4,2,3,1,6,5"``.

        The empty string and ``"ε"`` give the empty permutation.

        Raises:
            InvalidPermutationError: If the text is not a permutation.
        """
        text = text.strip()
        if text in ("", "ε", "e"):
            return cls(())
        if any(sep in text for sep in (" ", ",")):
            parts = text.replace(",", " ").split()
        else:
            parts = list(text)
        try:
            values = [int(part) for part in parts]
        except ValueError:
            raise InvalidPermutationError(
                f"not a permutation: {text!r}"
            ) from None
        return make_permutation(values)


class StatVector(NamedTuple):
    """The six statistics, in the variable order p, q, u, v, s, t."""

    asc: int
    des: int
    lmax: int
    rmax: int
    lmin: int
    rmin: int


def make_permutation(values: Iterable[int]) -> Permutation:
    """Validate ``values`` and wrap them as a permutation.

    Args:
        values: Candidate one-line notation.

    Returns:
        The validated permutation.

    Raises:
        InvalidPermutationError: If ``values`` is not a bijection onto {1..n}.
    """
    vals = tuple(int(v) for v in values)
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise InvalidPermutationError(
            f"{list(vals)} is not a permutation of 1..{len(vals)}"
        )
    return Permutation(vals)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reverse(p: Permutation) -> Permutation:
    return Permutation(p.values[::-1])


def complement(p: Permutation) -> Permutation:
    n = len(p)
    return Permutation(tuple(n + 1 - v for v in p.values))


def direct_sum(p: Permutation, q: Permutation) -> Permutation:
    """Return p ⊕ q: q placed above and to the right of p."""
    m = len(p)
    return Permutation(p.values + tuple(v + m for v in q.values))


def skew_sum(p: Permutation, q: Permutation) -> Permutation:
    """Return p ⊖ q: p placed above and to the left of q."""
    n = len(q)
    return Permutation(tuple(v + n for v in p.values) + q.values)


def stats_of(values: Sequence[int]) -> StatVector:
    """Compute the six statistics of any sequence of distinct integers."""
    n = len(values)
    if n == 0:
        return StatVector(0, 0, 0, 0, 0, 0)
    asc = sum(1 for i in range(n - 1) if values[i] < values[i + 1])

    lmax = lmin = 0
    hi = lo = None
    for v in values:
        if hi is None or v > hi:
            hi = v
            lmax += 1
        if lo is None or v < lo:
            lo = v
            lmin += 1

    rmax = rmin = 0
    hi = lo = None
    for v in reversed(values):
        if hi is None or v > hi:
            hi = v
            rmax += 1
        if lo is None or v < lo:
            lo = v
            rmin += 1

    return StatVector(asc, n - 1 - asc, lmax, rmax, lmin, rmin)


def stats(p: Permutation) -> StatVector:
    """Return (asc, des, lmax, rmax, lmin, rmin) of ``p``."""
    return stats_of(p.values)


def standardize(word: Sequence[int]) -> Permutation:
    """Replace each entry of ``word`` by its rank.

    Args:
        word: Distinct integers.

    Returns:
        The unique permutation order-isomorphic to ``word``.

    Raises:
        InvalidPermutationError: If ``word`` has repeated entries.
    """
    if len(set(word)) != len(word):
        raise InvalidPermutationError(f"cannot standardize {list(word)}: repeats")
    ranks = {v: r for r, v in enumerate(sorted(word), start=1)}
    return Permutation(tuple(ranks[v] for v in word))


def _next_lexicographic(values: list) -> bool:
    """Advance ``values`` in place to its lexicographic successor.

    Returns:
        False when ``values`` was already the last arrangement.
    """
    i = len(values) - 2
    while i >= 0 and values[i] >= values[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(values) - 1
    while values[j] <= values[i]:
        j -= 1
    values[i], values[j] = values[j], values[i]
    values[i + 1 :] = reversed(values[i + 1 :])
    return True


def iter_sn(
    n: int, first: Optional[int] = None, max_n: Optional[int] = None
) -> Iterator[Permutation]:
    """Yield every permutation of length ``n`` in lexicographic order.

    Args:
        n: Permutation length.
        first: If given, only the block of permutations starting with this
            value is produced (still in lexicographic order). The blocks for
            first = 1..n partition S_n.
        max_n: Cap on ``n``; defaults to ``enumeration_cap()``.

    Yields:
        The permutations of length ``n``.

    Raises:
        EnumerationCapError: If ``n`` exceeds the cap.
        ValueError: If ``n`` is negative or ``first`` is out of range.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    check_cap(n, enumeration_cap() if max_n is None else max_n)
    if first is None:
        values = list(range(1, n + 1))
    else:
        if not 1 <= first <= n:
            raise ValueError(f"first entry {first} out of range 1..{n}")
        values = [first] + [v for v in range(1, n + 1) if v != first]
    logger.debug("enumerating S_%d (first=%s)", n, first)
    while True:
        yield Permutation(tuple(values))
        if not _next_lexicographic(values):
            return
        if first is not None and values[0] != first:
            return
