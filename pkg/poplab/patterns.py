# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Partially ordered patterns, flat-POP tests, separability and block structure.

A POP on k labels is a strict partial order ``below``: the pair (a, b) says the
entry matched to label a must be smaller than the entry matched to label b.
Labels are positions in the pattern, so an occurrence of a POP in pi is a choice
of positions i_1 < ... < i_k with pi[i_a] < pi[i_b] for every (a, b) in ``below``.
Incomparable labels are unconstrained.

Relations are stored transitively closed. Closure and cycle detection work on a
boolean numpy matrix ``leq[a, b]`` (a below b).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .perm_core import Permutation, standardize

logger = logging.getLogger(__name__)

Relation = FrozenSet[Tuple[int, int]]

SEPARABLE_BASIS = ("2413", "3142")


class InvalidPopError(ValueError):
    """Raised for label ranges or relations that do not form a strict order."""


class PopSyntaxError(ValueError):
    """Raised when a textual POP specification cannot be parsed."""


@dataclass(frozen=True)
class Pop:
    """A partially ordered pattern.

    Args:
        k: Number of labels; labels are 1..k.
        below: Transitively closed set of pairs (a, b), "a is below b".
    """

    k: int
    below: Relation = field(default_factory=frozenset)

    @cached_property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        """Zero-based label pairs, sorted, for the occurrence scan."""
        return tuple(sorted((a - 1, b - 1) for a, b in self.below))

    @cached_property
    def flat_kind(self) -> Optional[Tuple[str, int]]:
        """``("pj", k)`` or ``("ptilde", k)`` if this is a flat POP, else None.

        For k = 2 both shapes are the chain 21; it is reported as ``("pj", 2)``.
        """
        if self.k < 2:
            return None
        if self.below == frozenset((b, 1) for b in range(2, self.k + 1)):
            return ("pj", self.k)
        if self.below == frozenset((self.k, a) for a in range(1, self.k)):
            return ("ptilde", self.k)
        return None

    @cached_property
    def chain_pattern(self) -> Optional[Permutation]:
        """The classical pattern if the order is total, else None."""
        if len(self.below) != self.k * (self.k - 1) // 2:
            return None
        rank = [1] * self.k
        for _, b in self.below:
            rank[b - 1] += 1
        return Permutation(tuple(rank))

    def __str__(self) -> str:
        if self.flat_kind is not None:
            kind, size = self.flat_kind
            return f"Pj:{size}" if kind == "pj" else f"Pt:{size}"
        if self.chain_pattern is not None and self.k > 0:
            return f"classical:{self.chain_pattern}"
        rels = ";".join(f"{a}<{b}" for a, b in sorted(self.below))
        return f"pop k={self.k} below={rels}" if rels else f"pop k={self.k}"


def _closure(k: int, relations: Iterable[Tuple[int, int]]) -> np.ndarray:
    leq = np.zeros((k, k), dtype=bool)
    for a, b in relations:
        leq[a - 1, b - 1] = True
    for m in range(k):
        leq |= np.outer(leq[:, m], leq[m, :])
    return leq


def make_pop(k: int, relations: Iterable[Tuple[int, int]] = ()) -> Pop:
    """Build a POP from generating relations.

    Args:
        k: Number of labels.
        relations: Pairs (a, b) meaning label a is below label b.

    Returns:
        The POP with the transitive closure of ``relations``.

    Raises:
        InvalidPopError: For labels outside 1..k, self-relations or cycles.
    """
    if k < 0:
        raise InvalidPopError(f"POP size must be nonnegative, got {k}")
    rels = [(int(a), int(b)) for a, b in relations]
    for a, b in rels:
        if not (1 <= a <= k and 1 <= b <= k):
            raise InvalidPopError(f"relation {a}<{b} uses a label outside 1..{k}")
        if a == b:
            raise InvalidPopError(f"relation {a}<{b} is reflexive")
    leq = _closure(k, rels)
    if leq.diagonal().any():
        cycle = sorted(int(i) + 1 for i in np.flatnonzero(leq.diagonal()))
        raise InvalidPopError(f"relations form a cycle through labels {cycle}")
    below = frozenset(
        (int(a) + 1, int(b) + 1) for a, b in zip(*np.nonzero(leq))
    )
    return Pop(k, below)


def make_classical(pattern: Permutation) -> Pop:
    """Return the chain POP of a classical pattern."""
    vals = pattern.values
    below = frozenset(
        (a + 1, b + 1)
        for a in range(len(vals))
        for b in range(len(vals))
        if vals[a] < vals[b]
    )
    return Pop(len(vals), below)


def make_flat_pj(j: int) -> Pop:
    """P_j: label 1 above each of the mutually incomparable labels 2..j.

    Raises:
        InvalidPopError: If ``j < 2``.
    """
    if j < 2:
        raise InvalidPopError(f"P_j needs j >= 2, got {j}")
    return Pop(j, frozenset((b, 1) for b in range(2, j + 1)))


def make_flat_ptilde(l: int) -> Pop:  # noqa: E741
    """~P_l: label l below each of the mutually incomparable labels 1..l-1.

    Raises:
        InvalidPopError: If ``l < 2``.
    """
    if l < 2:
        raise InvalidPopError(f"~P_l needs l >= 2, got {l}")
    return Pop(l, frozenset((l, a) for a in range(1, l)))


def _iter_occurrences(pop: Pop, values: Sequence[int]):
    pairs = pop.pairs
    for idx in itertools.combinations(range(len(values)), pop.k):
        if all(values[idx[a]] < values[idx[b]] for a, b in pairs):
            yield idx


def count_occurrences(pop: Pop, p: Permutation) -> int:
    """Count the position sets of ``p`` that realize every relation of ``pop``."""
    return sum(1 for _ in _iter_occurrences(pop, p.values))


def occurs(pop: Pop, p: Permutation) -> bool:
    """Return True if ``pop`` occurs in ``p``; stops at the first occurrence."""
    if pop.k > len(p):
        return False
    return next(_iter_occurrences(pop, p.values), None) is not None


def avoids_all(p: Permutation, pops: Iterable[Pop]) -> bool:
    return not any(occurs(pop, p) for pop in pops)


def smaller_right_counts(values: Sequence[int]) -> List[int]:
    """For each position, the number of strictly smaller entries to its right."""
    n = len(values)
    return [
        sum(1 for j in range(i + 1, n) if values[j] < values[i]) for i in range(n)
    ]


def larger_left_counts(values: Sequence[int]) -> List[int]:
    """For each position, the number of strictly larger entries to its left."""
    return [
        sum(1 for j in range(i) if values[j] > values[i])
        for i in range(len(values))
    ]


def flat_profile(values: Sequence[int]) -> Tuple[int, int]:
    """Return (max smaller-to-the-right, max larger-to-the-left) over positions.

    ``values`` avoids P_j iff the first entry is below j - 1, and avoids ~P_l iff
    the second is below l - 1.
    """
    if not values:
        return (0, 0)
    return (max(smaller_right_counts(values)), max(larger_left_counts(values)))


def occurs_flat_pj(j: int, p: Permutation) -> bool:
    """True iff some entry of ``p`` has at least j - 1 smaller entries after it."""
    if j < 2:
        raise InvalidPopError(f"P_j needs j >= 2, got {j}")
    return any(c >= j - 1 for c in smaller_right_counts(p.values))


def occurs_flat_ptilde(l: int, p: Permutation) -> bool:  # noqa: E741
    """True iff some entry of ``p`` has at least l - 1 larger entries before it."""
    if l < 2:
        raise InvalidPopError(f"~P_l needs l >= 2, got {l}")
    return any(c >= l - 1 for c in larger_left_counts(p.values))


def count_classical(pattern: Permutation, p: Permutation) -> int:
    """Count order-isomorphic copies of ``pattern`` in ``p`` by standardization."""
    k = len(pattern)
    return sum(
        1
        for idx in itertools.combinations(range(len(p)), k)
        if standardize([p.values[i] for i in idx]) == pattern
    )


def _separable(values: Sequence[int]) -> bool:
    n = len(values)
    if n <= 2:
        return True
    lo, hi = min(values), max(values)
    run_max = run_min = values[0]
    for k in range(1, n):
        run_max = max(run_max, values[k - 1])
        run_min = min(run_min, values[k - 1])
        if run_max == lo + k - 1 or run_min == hi - k + 1:
            return _separable(values[:k]) and _separable(values[k:])
    return False


def is_separable(p: Permutation) -> bool:
    """Return True iff ``p`` splits recursively into direct and skew sums.

    Each level looks for the first prefix occupying the lowest (direct sum) or
    highest (skew sum) interval of values.
    """
    return _separable(p.values)


@lru_cache(maxsize=None)
def separable_basis() -> Tuple[Pop, ...]:
    return tuple(make_classical(Permutation.from_string(b)) for b in SEPARABLE_BASIS)


def is_separable_naive(p: Permutation) -> bool:
    """Reference test: avoidance of the classical patterns 2413 and 3142."""
    return avoids_all(p, separable_basis())


@dataclass(frozen=True)
class Block:
    """A block of consecutive values: a pattern shifted up by ``offset``."""

    pattern: Permutation
    offset: int = 0

    def __len__(self) -> int:
        return len(self.pattern)

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(v + self.offset for v in self.pattern)

    @property
    def interval(self) -> Optional[Tuple[int, int]]:
        if not self.pattern.values:
            return None
        return (self.offset + 1, self.offset + len(self.pattern))


@dataclass(frozen=True)
class Decomposition:
    """pi = L_1 ... L_m n R_m ... R_1 with R_1 < L_1 < R_2 < ... < R_m < L_m.

    Args:
        n: The largest entry.
        left_blocks: L_1 .. L_m.
        right_blocks: R_1 .. R_m.
    """

    n: int
    left_blocks: Tuple[Block, ...]
    right_blocks: Tuple[Block, ...]

    @property
    def m(self) -> int:
        return len(self.left_blocks)

    def reconstruct(self) -> Permutation:
        values: List[int] = []
        for block in self.left_blocks:
            values.extend(block.values)
        values.append(self.n)
        for block in reversed(self.right_blocks):
            values.extend(block.values)
        return Permutation(tuple(values))


def _make_block(run: Sequence[int], position: dict) -> Block:
    if not run:
        return Block(Permutation(()))
    ordered = sorted(run, key=position.__getitem__)
    return Block(standardize(ordered), min(run) - 1)


def stankova_decompose(p: Permutation) -> Decomposition:
    """Split a nonempty separable permutation around its maximum.

    The values below n are grouped into maximal runs lying on the same side of
    n; the runs alternate sides, starting with R_1 (empty when 1 lies left of
    n) and ending with L_m (empty when n - 1 lies right of n).

    Raises:
        ValueError: If ``p`` is empty or not separable.
    """
    if len(p) == 0:
        raise ValueError("the empty permutation has no block decomposition")
    if not is_separable(p):
        raise ValueError(f"{p} is not separable")
    n = len(p)
    position = {v: i for i, v in enumerate(p.values)}
    top = position[n]

    runs: List[Tuple[str, List[int]]] = []
    for v in range(1, n):
        side = "L" if position[v] < top else "R"
        if runs and runs[-1][0] == side:
            runs[-1][1].append(v)
        else:
            runs.append((side, [v]))
    if not runs or runs[0][0] == "L":
        runs.insert(0, ("R", []))
    if runs[-1][0] == "R":
        runs.append(("L", []))

    right = tuple(_make_block(run, position) for side, run in runs[0::2])
    left = tuple(_make_block(run, position) for side, run in runs[1::2])
    return Decomposition(n, left, right)


def _parse_relations(spec: str) -> List[Tuple[int, int]]:
    pairs: List[Tuple[int, int]] = []
    for chunk in spec.replace(",", ";").split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            labels = [int(x) for x in chunk.split("<")]
        except ValueError:
            raise PopSyntaxError(f"bad relation {chunk!r}") from None
        if len(labels) < 2:
            raise PopSyntaxError(f"relation {chunk!r} needs the form a<b")
        pairs.extend(zip(labels, labels[1:]))
    return pairs


def parse_pop(text: str) -> Pop:
    """Parse one POP: ``Pj:4``, ``Pt:5``, ``classical:2413`` or
    ``pop k=3 below=3<1;2<1`` (chains such as ``3<2<1`` are allowed).

    Raises:
        PopSyntaxError: If the text is malformed.
        InvalidPopError: If the parsed relations are not a strict order.
    """
    text = text.strip()
    head, _, arg = text.partition(":")
    head = head.strip().lower()
    if arg and head in ("pj", "pt", "classical"):
        if head == "classical":
            try:
                return make_classical(Permutation.from_string(arg))
            except ValueError as err:
                raise PopSyntaxError(str(err)) from None
        try:
            size = int(arg)
        except ValueError:
            raise PopSyntaxError(f"bad flat POP size in {text!r}") from None
        return make_flat_pj(size) if head == "pj" else make_flat_ptilde(size)

    tokens = text.split()
    if not tokens or tokens[0].lower() != "pop":
        raise PopSyntaxError(f"unrecognized POP {text!r}")
    k: Optional[int] = None
    relations: List[Tuple[int, int]] = []
    for token in tokens[1:]:
        if token.startswith("k="):
            try:
                k = int(token[2:])
            except ValueError:
                raise PopSyntaxError(f"bad size in {text!r}") from None
        elif token.startswith("below="):
            relations.extend(_parse_relations(token[len("below=") :]))
        else:
            relations.extend(_parse_relations(token))
    if k is None:
        raise PopSyntaxError(f"missing k= in {text!r}")
    return make_pop(k, relations)


def parse_pop_list(items: Iterable[str]) -> List[Pop]:
    """Parse CLI POP arguments; shorthand items may be comma separated."""
    pops: List[Pop] = []
    for item in items:
        if item.strip().lower().startswith("pop"):
            pops.append(parse_pop(item))
        else:
            pops.extend(parse_pop(part) for part in item.split(",") if part.strip())
    return pops
