# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Brute-force enumeration of avoider classes and their statistic distributions.

A query names a length, a list of POPs and whether only separable permutations
count. Flat POPs prune the search while a permutation is being built: when a
value v is placed, its smaller entries to the right are exactly the unused
values below v, and its larger entries to the left are exactly the used values
above v. Everything else is checked on complete permutations.

With ``jobs > 1`` the work is split by first entry and run in a process pool.
Partial results are merged by exact addition, so every ``jobs`` setting gives
the same answer.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .patterns import Pop, is_separable, occurs, occurs_flat_pj, occurs_flat_ptilde
from .perm_core import Permutation, check_cap, enumeration_cap, iter_sn, stats_of
from .poly import MultiPoly, XSeries

logger = logging.getLogger(__name__)

FLAT_COUNT_CAP = 12
DEFAULT_CAP = 10


@dataclass(frozen=True)
class AvoiderQuery:
    """The class of length-n permutations avoiding every POP in ``pops``.

    Args:
        n: Permutation length.
        pops: POPs to avoid; an empty list leaves S_n (or its separable part).
        separable_only: Keep only separable permutations.
    """

    n: int
    pops: Tuple[Pop, ...] = field(default_factory=tuple)
    separable_only: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        object.__setattr__(self, "pops", tuple(self.pops))

    def with_n(self, n: int) -> AvoiderQuery:
        return replace(self, n=n)

    @cached_property
    def flat_only(self) -> bool:
        return bool(self.pops) and all(p.flat_kind is not None for p in self.pops)

    @cached_property
    def generic_pops(self) -> Tuple[Pop, ...]:
        return tuple(p for p in self.pops if p.flat_kind is None)

    @cached_property
    def flat_bounds(self) -> Tuple[Optional[int], Optional[int]]:
        """Largest allowed (smaller-to-the-right, larger-to-the-left) counts.

        None means the query puts no bound on that side.
        """
        kinds = [p.flat_kind for p in self.pops if p.flat_kind is not None]
        js = [k for kind, k in kinds if kind == "pj"]
        ls = [k for kind, k in kinds if kind == "ptilde"]
        return (min(js) - 2 if js else None, min(ls) - 2 if ls else None)

    def default_cap(self, purpose: str = "count") -> int:
        if purpose == "count" and self.flat_only:
            return enumeration_cap(FLAT_COUNT_CAP)
        return enumeration_cap(DEFAULT_CAP)

    def __str__(self) -> str:
        pops = ",".join(str(p) for p in self.pops) or "-"
        sep = " separable" if self.separable_only else ""
        return f"n={self.n} pops={pops}{sep}"


def accepts(query: AvoiderQuery, p: Permutation) -> bool:
    """Membership test on a complete permutation, with flat POPs dispatched to
    the quadratic tests."""
    for pop in query.pops:
        kind = pop.flat_kind
        if kind is None:
            hit = occurs(pop, p)
        elif kind[0] == "pj":
            hit = occurs_flat_pj(kind[1], p)
        else:
            hit = occurs_flat_ptilde(kind[1], p)
        if hit:
            return False
    return not query.separable_only or is_separable(p)


def _leaf_ok(query: AvoiderQuery, p: Permutation) -> bool:
    if any(occurs(pop, p) for pop in query.generic_pops):
        return False
    return not query.separable_only or is_separable(p)


def _dfs(query: AvoiderQuery, first: Optional[int]) -> Iterator[Permutation]:
    n = query.n
    right_bound, left_bound = query.flat_bounds
    rb = n if right_bound is None else right_bound
    lb = n if left_bound is None else left_bound
    used = [False] * (n + 1)
    prefix: List[int] = []

    def extend() -> Iterator[Permutation]:
        depth = len(prefix)
        if depth == n:
            p = Permutation(tuple(prefix))
            if _leaf_ok(query, p):
                yield p
            return
        candidates: Iterable[int] = range(1, n + 1)
        if depth == 0 and first is not None:
            candidates = (first,)
        smaller_unused = 0
        larger_used = depth
        for v in range(1, n + 1):
            if used[v]:
                larger_used -= 1
            if v in candidates and not used[v]:
                if smaller_unused <= rb and larger_used <= lb:
                    used[v] = True
                    prefix.append(v)
                    yield from extend()
                    prefix.pop()
                    used[v] = False
            if not used[v]:
                smaller_unused += 1

    return extend()


def iter_avoiders(
    query: AvoiderQuery,
    first: Optional[int] = None,
    prune: bool = True,
    max_n: Optional[int] = None,
) -> Iterator[Permutation]:
    """Yield the members of the query's class in lexicographic order.

    Args:
        query: The class to enumerate.
        first: Restrict to permutations starting with this value.
        prune: Build permutations entry by entry and drop prefixes that break a
            flat-POP bound. ``prune=False`` filters all of S_n instead.
        max_n: Cap override; defaults to the query's cap.

    Raises:
        EnumerationCapError: If ``query.n`` exceeds the cap.
    """
    cap = query.default_cap("count") if max_n is None else max_n
    check_cap(query.n, cap)
    if first is not None and not 1 <= first <= query.n:
        raise ValueError(f"first entry {first} out of range 1..{query.n}")
    if not prune:
        return (p for p in iter_sn(query.n, first, max_n=cap) if accepts(query, p))
    return _dfs(query, first)


def avoider_set(
    query: AvoiderQuery, max_n: Optional[int] = None
) -> FrozenSet[Permutation]:
    return frozenset(iter_avoiders(query, max_n=max_n))


def _count_block(query: AvoiderQuery, first: Optional[int], cap: int) -> int:
    return sum(1 for _ in iter_avoiders(query, first=first, max_n=cap))


def _distribution_block(
    query: AvoiderQuery, first: Optional[int], cap: int
) -> Dict[Tuple[int, ...], int]:
    tally: Counter = Counter()
    for p in iter_avoiders(query, first=first, max_n=cap):
        tally[tuple(stats_of(p.values))] += 1
    logger.debug("%s first=%s: %d members", query, first, sum(tally.values()))
    return dict(tally)


def _fan_out(func, query: AvoiderQuery, cap: int, jobs: int) -> list:
    if jobs <= 1 or query.n <= 1:
        return [func(query, None, cap)]
    firsts = list(range(1, query.n + 1))
    with ProcessPoolExecutor(max_workers=min(jobs, query.n)) as pool:
        return list(pool.map(func, [query] * len(firsts), firsts, [cap] * len(firsts)))


def count_avoiders(
    query: AvoiderQuery, jobs: int = 1, max_n: Optional[int] = None
) -> int:
    """Exact size of the query's class.

    Args:
        query: The class to count.
        jobs: Worker processes; 1 runs in this process.
        max_n: Cap override.

    Returns:
        The number of members.

    Raises:
        EnumerationCapError: If ``query.n`` exceeds the cap.
    """
    cap = query.default_cap("count") if max_n is None else max_n
    check_cap(query.n, cap)
    return sum(_fan_out(_count_block, query, cap, jobs))


def distribution(
    query: AvoiderQuery, jobs: int = 1, max_n: Optional[int] = None
) -> MultiPoly:
    """Sum of p^asc q^des u^lmax v^rmax s^lmin t^rmin over the query's class.

    Raises:
        EnumerationCapError: If ``query.n`` exceeds the cap.
    """
    cap = query.default_cap("distribution") if max_n is None else max_n
    check_cap(query.n, cap)
    total = MultiPoly()
    for block in _fan_out(_distribution_block, query, cap, jobs):
        total = total + MultiPoly(block)
    return total


def series_bruteforce(
    pops: Sequence[Pop],
    separable_only: bool,
    n_max: int,
    jobs: int = 1,
    max_n: Optional[int] = None,
) -> XSeries:
    """The truncated series with x^n coefficient ``distribution`` at length n."""
    base = AvoiderQuery(0, tuple(pops), separable_only)
    cap = base.default_cap("distribution") if max_n is None else max_n
    check_cap(n_max, cap)
    coeffs = [
        distribution(base.with_n(n), jobs=jobs, max_n=cap) for n in range(n_max + 1)
    ]
    return XSeries(n_max, coeffs)


def count_sequence(
    pops: Sequence[Pop],
    separable_only: bool,
    n_max: int,
    jobs: int = 1,
    max_n: Optional[int] = None,
) -> List[int]:
    """Class sizes for n = 0..n_max."""
    base = AvoiderQuery(0, tuple(pops), separable_only)
    return [
        count_avoiders(base.with_n(n), jobs=jobs, max_n=max_n)
        for n in range(n_max + 1)
    ]
