# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Claims about the avoider classes and exact checks of each one.

A claim class compares two independent computations coefficient by coefficient
and records every comparison. Mismatches never raise; they make the report fail.
A mismatch against a printed value listed as a known erratum is recorded with
status ``erratum`` and does not fail the report.

Claims are configured as plain dicts (see ``configs``)::

    {"claim_class": ExplicitGFClaim, "claim_args": {"j": 3, "l": 4}, "n_max": 7}
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .banded import (
    BandedSpec,
    NoRecurrenceError,
    banded_count,
    banded_count_matrix,
    find_recurrence,
    kfib,
)
from .enumerator import AvoiderQuery, avoider_set, count_avoiders, distribution
from .gfseries import (
    EXPECTED_MONOMIALS,
    INV_COM_SWAP,
    fixture_gfs,
    identity_gf,
    load_theorem_gf,
    single_pop_series,
    solve_system,
    solved_counts,
    theorem_series,
    univariate,
)
from .patterns import flat_profile, make_flat_pj, make_flat_ptilde
from .perm_core import iter_sn
from .poly import MultiPoly, XPolynomial, XSeries

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
ERRATUM = "erratum"


@dataclass
class Comparison:
    """One exact comparison inside a claim report."""

    label: str
    expected: str
    actual: str
    status: str

    def to_json(self) -> Dict[str, str]:
        return {
            "label": self.label,
            "expected": self.expected,
            "actual": self.actual,
            "status": self.status,
        }


@dataclass
class ClaimReport:
    """Outcome of one claim.

    Args:
        name: Registry name of the claim.
        description: What the claim asserts.
        comparisons: Every comparison made, in order.
        elapsed: Wall-clock seconds spent.
    """

    name: str
    description: str
    comparisons: List[Comparison] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.comparisons}
        if FAIL in statuses or not self.comparisons:
            return FAIL
        if ERRATUM in statuses:
            return ERRATUM
        return PASS

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def failures(self) -> List[Comparison]:
        return [c for c in self.comparisons if c.status == FAIL]

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "status": self.status,
            "elapsed": round(self.elapsed, 3),
            "comparisons": [c.to_json() for c in self.comparisons],
        }


class Claim:
    """Base class: subclasses implement ``check`` using ``compare``.

    Args:
        name: Registry name used in reports.
        n_max: Largest length (or series order) the claim examines.
        jobs: Worker processes for brute-force enumeration.
    """

    description = ""

    def __init__(self, name: str = "", n_max: int = 7, jobs: int = 1):
        self.name = name or type(self).__name__
        self.n_max = n_max
        self.jobs = jobs
        self.report = ClaimReport(self.name, self.description)

    def compare(
        self, label: str, expected: Any, actual: Any, erratum: bool = False
    ) -> bool:
        """Record ``expected == actual``; a known erratum is not a failure."""
        ok = expected == actual
        status = PASS if ok else (ERRATUM if erratum else FAIL)
        self.report.comparisons.append(
            Comparison(label, str(expected), str(actual), status)
        )
        if status == ERRATUM:
            logger.warning(
                "%s: %s printed %s, computed %s (known erratum)",
                self.name, label, expected, actual,
            )
        elif status == FAIL:
            logger.info(
                "%s: %s expected %s, got %s", self.name, label, expected, actual
            )
        return ok

    def check(self) -> None:
        raise NotImplementedError

    def run(self) -> ClaimReport:
        logger.info("checking %s (n_max=%d)", self.name, self.n_max)
        start = time.perf_counter()
        self.check()
        self.report.elapsed = time.perf_counter() - start
        logger.info(
            "%s: %s in %.2fs", self.name, self.report.status, self.report.elapsed
        )
        return self.report


@lru_cache(maxsize=None)
def separable_distribution(
    j: int, l: int, n: int, jobs: int = 1  # noqa: E741
) -> MultiPoly:
    """Brute-force [x^n] F_{j,l}."""
    query = AvoiderQuery(n, (make_flat_pj(j), make_flat_ptilde(l)), separable_only=True)
    return distribution(query, jobs=jobs)


class ExplicitGFClaim(Claim):
    """The explicit g.f. expands to the brute-force joint distribution."""

    description = "explicit F_{j,l} coefficients equal separable avoider distributions"

    def __init__(self, j: int, l: int, **kwargs):  # noqa: E741
        super().__init__(**kwargs)
        self.j, self.l = j, l

    def check(self) -> None:
        series = theorem_series(self.j, self.l, self.n_max)
        for n in range(self.n_max + 1):
            self.compare(
                f"F_{self.j},{self.l} [x^{n}]",
                separable_distribution(self.j, self.l, n, self.jobs),
                series.coefficient(n),
            )


class SystemVsExplicitClaim(Claim):
    """The solved functional-equation system equals the explicit g.f."""

    description = "system solution equals the explicit F_{j,l} series"

    def __init__(self, j: int, l: int, **kwargs):  # noqa: E741
        super().__init__(**kwargs)
        self.j, self.l = j, l

    def check(self) -> None:
        explicit = theorem_series(self.j, self.l, self.n_max)
        solved = solve_system(self.j, self.l, self.n_max)
        for n in range(self.n_max + 1):
            self.compare(
                f"F_{self.j},{self.l} [x^{n}]",
                explicit.coefficient(n),
                solved.coefficient(n),
            )


def _printed_denominator(coeffs: Sequence[int]) -> str:
    text = "1"
    for power, c in enumerate(coeffs[1:], start=1):
        if not c:
            continue
        var = "x" if power == 1 else f"x^{power}"
        mag = "" if abs(c) == 1 else str(abs(c))
        text += f" {'-' if c < 0 else '+'} {mag}{var}"
    return text


class CorollaryClaim(Claim):
    """Univariate specialization against the printed rational function and terms.

    Args:
        j: P_j size.
        l: ~P_l size.
        denominator: Printed denominator coefficients, constant term first; the
            printed numerator is 1.
        printed_terms: Printed expansion coefficients from x^0 on.
        errata: Indices into ``printed_terms`` known to be misprinted.
        recurrence_terms: Number of solved-system terms fed to recurrence
            discovery.
    """

    description = "univariate F_{j,l} matches the printed g.f., recurrence and terms"

    def __init__(
        self,
        j: int,
        l: int,  # noqa: E741
        denominator: Sequence[int],
        printed_terms: Sequence[int],
        errata: Iterable[int] = (),
        recurrence_terms: int = 17,
        **kwargs,
    ):
        super().__init__(**kwargs)
        self.j, self.l = j, l
        self.denominator = list(denominator)
        self.printed_terms = list(printed_terms)
        self.errata = set(errata)
        self.recurrence_terms = recurrence_terms

    def check(self) -> None:
        gf = load_theorem_gf(self.j, self.l).at_ones()
        printed = XPolynomial(self.denominator)
        self.compare(
            f"F_{self.j},{self.l}(x) numerator * printed denominator",
            gf.denominator,
            gf.numerator * printed,
        )

        solved = solved_counts(self.j, self.l, self.recurrence_terms - 1)
        try:
            found = find_recurrence(solved).denominator()
        except NoRecurrenceError as err:
            found = f"no recurrence ({err})"
        self.compare(
            f"F_{self.j},{self.l}(x) recurrence",
            _printed_denominator(self.denominator),
            found,
        )

        series = univariate(theorem_series(self.j, self.l, len(self.printed_terms) - 1))
        for n, (printed_n, computed_n) in enumerate(zip(self.printed_terms, series)):
            self.compare(
                f"F_{self.j},{self.l}(x) [x^{n}]",
                printed_n,
                computed_n,
                erratum=n in self.errata,
            )


class FixtureAuditClaim(Claim):
    """Monomial counts of the fixture and exactness of each expansion."""

    description = "fixture monomial counts and series * denominator == numerator"

    def __init__(
        self,
        expected: Optional[Mapping[Tuple[int, int], Tuple[int, int]]] = None,
        **kwargs,
    ):
        super().__init__(**kwargs)
        self.expected = dict(expected or EXPECTED_MONOMIALS)

    def check(self) -> None:
        gfs = fixture_gfs()
        self.compare("fixture pairs", sorted(self.expected), sorted(gfs))
        for pair, counts in sorted(self.expected.items()):
            if pair not in gfs:
                continue
            gf = gfs[pair].normalized()
            label = f"F_{pair[0]},{pair[1]}"
            self.compare(f"{label} monomials", counts, gf.monomial_counts())
            series = gf.expand(self.n_max)
            product = series * XSeries(self.n_max, gf.denominator.coeffs)
            self.compare(
                f"{label} series * denominator",
                XSeries(self.n_max, gf.numerator.coeffs),
                product,
            )


class KFibCountsClaim(Claim):
    """|S_n(P_j, ~P_3)| is the (j-1)-Fibonacci number F_{n+1}."""

    description = "avoiders of P_j and ~P_3 are counted by k-Fibonacci numbers"

    def __init__(
        self, js: Sequence[int] = (3, 4, 5, 6), banded_n_max: int = 30, **kwargs
    ):
        super().__init__(**kwargs)
        self.js = tuple(js)
        self.banded_n_max = banded_n_max

    def check(self) -> None:
        for j in self.js:
            base = AvoiderQuery(0, (make_flat_pj(j), make_flat_ptilde(3)))
            for n in range(self.n_max + 1):
                self.compare(
                    f"j={j} n={n} brute force",
                    kfib(j - 1, n + 1),
                    count_avoiders(base.with_n(n), jobs=self.jobs),
                )
            spec = BandedSpec.from_flat_pair(j, 3)
            for n in range(self.banded_n_max + 1):
                self.compare(
                    f"j={j} n={n} banded", kfib(j - 1, n + 1), banded_count(n, spec)
                )


class BandedWindowClaim(Claim):
    """Avoiding P_j and ~P_l is the window -l + 2 <= pi_i - i <= j - 2."""

    description = "banded counts equal brute-force flat-POP avoider counts"

    def __init__(self, sizes: Sequence[int] = (2, 3, 4, 5, 6), **kwargs):
        super().__init__(**kwargs)
        self.sizes = tuple(sizes)

    def check(self) -> None:
        for n in range(self.n_max + 1):
            tally: Dict[Tuple[int, int], int] = {}
            for p in iter_sn(n):
                right, left = flat_profile(p.values)
                tally[right, left] = tally.get((right, left), 0) + 1
            for j in self.sizes:
                for l in self.sizes:  # noqa: E741
                    brute = sum(
                        c for (r, lf), c in tally.items() if r <= j - 2 and lf <= l - 2
                    )
                    spec = BandedSpec.from_flat_pair(j, l)
                    self.compare(f"n={n} j={j} l={l}", brute, banded_count(n, spec))
                    self.compare(
                        f"n={n} window {spec} transfer matrix",
                        banded_count(n, spec),
                        banded_count_matrix(n, spec),
                    )
                    self.compare(
                        f"n={n} window {spec} mirrored",
                        banded_count(n, spec),
                        banded_count(n, BandedSpec(spec.b, spec.a)),
                    )


class SeparableSuperfluousClaim(Claim):
    """With ~P_3 or P_3 among the POPs, every avoider is already separable."""

    description = "separable filter leaves the avoider set unchanged when j=3 or l=3"

    def __init__(self, pairs: Sequence[Tuple[int, int]] = (), **kwargs):
        super().__init__(**kwargs)
        self.pairs = [tuple(p) for p in pairs] or [
            (j, l)
            for j in range(3, 6)
            for l in range(3, 6)  # noqa: E741
            if 3 in (j, l)
        ]

    def check(self) -> None:
        for j, l in self.pairs:  # noqa: E741
            pops = (make_flat_pj(j), make_flat_ptilde(l))
            for n in range(self.n_max + 1):
                everything = avoider_set(AvoiderQuery(n, pops))
                separable = avoider_set(AvoiderQuery(n, pops, separable_only=True))
                self.compare(
                    f"j={j} l={l} n={n} ({len(everything)} avoiders)",
                    True,
                    everything == separable,
                )


class IdentityOnlyClaim(Claim):
    """With P_2 the only avoider is the increasing permutation."""

    description = "separable avoiders of P_2 and ~P_l have distribution p^(n-1)u^nvst^n"

    def __init__(self, ls: Sequence[int] = (2, 3, 4, 5), **kwargs):
        super().__init__(**kwargs)
        self.ls = tuple(ls)

    def check(self) -> None:
        series = identity_gf().expand(self.n_max)
        for l in self.ls:  # noqa: E741
            for n in range(1, self.n_max + 1):
                expected = MultiPoly.monomial((n - 1, 0, n, 1, 1, n))
                self.compare(
                    f"l={l} n={n}", expected, separable_distribution(2, l, n, self.jobs)
                )
        for n in range(1, self.n_max + 1):
            self.compare(
                f"1 + uvstx/(1 - putx) [x^{n}]",
                MultiPoly.monomial((n - 1, 0, n, 1, 1, n)),
                series.coefficient(n),
            )


class ReverseComplementClaim(Claim):
    """F_{j,l}(p,q,u,v,s,t) = F_{l,j}(p,q,t,s,v,u) on brute-force coefficients."""

    description = "exchanging u<->t and v<->s maps F_{l,j} to F_{j,l}"

    def __init__(self, sizes: Sequence[int] = (3, 4, 5), **kwargs):
        super().__init__(**kwargs)
        self.sizes = tuple(sizes)

    def check(self) -> None:
        for j in self.sizes:
            for l in self.sizes:  # noqa: E741
                if j >= l:
                    continue
                for n in range(self.n_max + 1):
                    self.compare(
                        f"j={j} l={l} n={n}",
                        separable_distribution(j, l, n, self.jobs),
                        separable_distribution(l, j, n, self.jobs).rename(INV_COM_SWAP),
                    )


class SinglePopSeriesClaim(Claim):
    """Brute-force G_k and ~G_k against printed truncations.

    Args:
        printed: Map k -> list of x-coefficients, each a list of
            (exponent vector, coefficient) pairs.
    """

    description = "single flat-POP separable series match their printed truncations"

    def __init__(
        self,
        printed: Mapping[int, Sequence[Sequence[Tuple[Sequence[int], int]]]],
        **kwargs,
    ):
        super().__init__(**kwargs)
        self.printed = {
            int(k): [MultiPoly({tuple(e): c for e, c in terms}) for terms in coeffs]
            for k, coeffs in printed.items()
        }

    def check(self) -> None:
        for k, coeffs in sorted(self.printed.items()):
            order = len(coeffs) - 1
            for kind in ("pj", "ptilde"):
                series = single_pop_series(kind, k, order, jobs=self.jobs)
                for n, printed_n in enumerate(coeffs):
                    self.compare(
                        f"{kind} k={k} [x^{n}]", printed_n, series.coefficient(n)
                    )


def verify_theorem(
    claim_config: Mapping[str, Any],
    name: str = "",
    n_max: Optional[int] = None,
    jobs: int = 1,
) -> ClaimReport:
    """Build the configured claim and run it.

    Args:
        claim_config: ``{"claim_class": ..., "claim_args": {...}, "n_max": ...}``.
        name: Name for the report.
        n_max: Overrides the configured ``n_max``.
        jobs: Worker processes for enumeration.

    Returns:
        The claim's report; mismatches are recorded, not raised.
    """
    claim_class = claim_config["claim_class"]
    args = dict(claim_config.get("claim_args", {}))
    limit = claim_config.get("n_max", 7) if n_max is None else n_max
    claim = claim_class(name=name, n_max=limit, jobs=jobs, **args)
    return claim.run()


def verify_all(
    claims: Mapping[str, Mapping[str, Any]],
    names: Optional[Iterable[str]] = None,
    n_max: Optional[int] = None,
    jobs: int = 1,
) -> List[ClaimReport]:
    """Run the named claims (all by default) in registry order."""
    selected = list(claims) if names is None else list(names)
    unknown = [n for n in selected if n not in claims]
    if unknown:
        raise ValueError(
            f"unknown claim(s) {', '.join(unknown)}; choose from {', '.join(claims)}"
        )
    return [verify_theorem(claims[n], name=n, n_max=n_max, jobs=jobs) for n in selected]
