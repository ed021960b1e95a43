# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Generating functions of separable permutations avoiding P_j and ~P_l.

Two independent sources of F_{j,l}:

* the explicit rational functions for 3 <= j <= l <= 5, read from the reviewed
  fixture file and mirrored to j > l by exchanging u with t and v with s;
* the functional-equation system, whose small coefficients come from brute
  force at lengths up to 3 and whose solution is a rational function
  ((1 + A(v))(1 - B(1)) + B(v) A(1)) / (1 - B(1)).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Tuple

from .enumerator import AvoiderQuery, distribution, series_bruteforce
from .patterns import make_flat_pj, make_flat_ptilde
from .poly import MultiPoly, RationalGF, XPolynomial, XSeries

logger = logging.getLogger(__name__)

FIXTURE_PATH = Path(__file__).parent / "fixtures" / "explicit_gfs.txt"

SUPPORTED_RANGE = range(3, 6)
DEFAULT_ORDER = 10

# Exchanging u with t and v with s turns F_{l,j} into F_{j,l}.
INV_COM_SWAP = {"u": "t", "t": "u", "v": "s", "s": "v"}

# (numerator, denominator) monomial counts of the explicit g.f.s.
EXPECTED_MONOMIALS = {
    (3, 3): (9, 3),
    (3, 4): (15, 4),
    (3, 5): (21, 5),
    (4, 4): (49, 7),
    (4, 5): (93, 10),
    (5, 5): (293, 17),
}

_SECTION_RE = re.compile(r"^\[F_(\d+)_(\d+) (numerator|denominator)\]$")
_TERM_RE = re.compile(
    r"^([+-]\d+) p\^(\d+) q\^(\d+) u\^(\d+) v\^(\d+) s\^(\d+) t\^(\d+) x\^(\d+)$"
)


class FixtureError(ValueError):
    """Raised for a malformed generating-function fixture."""


class UnsupportedPairError(ValueError):
    """Raised for a (j, l) pair outside the range with known g.f.s."""


def _check_pair(j: int, l: int) -> None:  # noqa: E741
    if j not in SUPPORTED_RANGE or l not in SUPPORTED_RANGE:
        raise UnsupportedPairError(
            f"(j, l) = ({j}, {l}) is not supported; both must lie in 3..5 "
            "(or one of them equal 2)"
        )


def _parse_sections(lines: Iterable[str]) -> Dict[Tuple[int, int, str], XPolynomial]:
    sections: Dict[Tuple[int, int, str], Dict[int, Dict[Tuple[int, ...], int]]] = {}
    current = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header = _SECTION_RE.match(line)
        if header:
            current = (int(header.group(1)), int(header.group(2)), header.group(3))
            if current in sections:
                raise FixtureError(f"line {lineno}: section {line} appears twice")
            sections[current] = {}
            continue
        term = _TERM_RE.match(line)
        if term is None:
            raise FixtureError(f"line {lineno}: cannot parse {line!r}")
        if current is None:
            raise FixtureError(f"line {lineno}: term outside any section")
        coeff = int(term.group(1))
        exps = tuple(int(g) for g in term.group(2, 3, 4, 5, 6, 7))
        power = int(term.group(8))
        bucket = sections[current].setdefault(power, {})
        if exps in bucket:
            raise FixtureError(
                f"line {lineno}: duplicate monomial {list(exps)} x^{power}"
            )
        bucket[exps] = coeff
    out = {}
    for key, by_power in sections.items():
        degree = max(by_power, default=-1)
        out[key] = XPolynomial(
            MultiPoly(by_power.get(k, {})) for k in range(degree + 1)
        )
    return out


def parse_fixture(text: str) -> Dict[Tuple[int, int], RationalGF]:
    """Parse fixture text into g.f.s, signs as written.

    Raises:
        FixtureError: For unparsable lines, duplicate monomials or sections,
            or a numerator without its denominator.
    """
    sections = _parse_sections(text.splitlines())
    pairs = {(j, l) for j, l, _ in sections}
    gfs = {}
    for j, l in sorted(pairs):
        try:
            num = sections[(j, l, "numerator")]
            den = sections[(j, l, "denominator")]
        except KeyError as err:
            raise FixtureError(f"F_{j}_{l} is missing its {err.args[0][2]}") from None
        if not den.coeffs:
            raise FixtureError(f"F_{j}_{l} has an empty denominator")
        gfs[(j, l)] = RationalGF(num, den)
    return gfs


@lru_cache(maxsize=None)
def fixture_gfs() -> Dict[Tuple[int, int], RationalGF]:
    """The six explicit g.f.s from the packaged fixture file, signs as written."""
    logger.debug("reading %s", FIXTURE_PATH)
    return parse_fixture(FIXTURE_PATH.read_text(encoding="utf-8"))


def identity_gf() -> RationalGF:
    """1 + uvstx / (1 - putx): only increasing permutations avoid P_2 or ~P_2."""
    uvst = MultiPoly.monomial((0, 0, 1, 1, 1, 1))
    put = MultiPoly.monomial((1, 0, 1, 0, 0, 1))
    numerator = XPolynomial([MultiPoly.constant(1), uvst - put])
    denominator = XPolynomial([MultiPoly.constant(1), -put])
    return RationalGF(numerator, denominator)


def load_theorem_gf(j: int, l: int) -> RationalGF:  # noqa: E741
    """The explicit F_{j,l} with denominator constant term +1.

    Raises:
        UnsupportedPairError: Unless j = 2, l = 2, or both lie in 3..5.
    """
    if min(j, l) == 2:
        return identity_gf()
    _check_pair(j, l)
    if j <= l:
        return fixture_gfs()[(j, l)].normalized()
    return fixture_gfs()[(l, j)].normalized().rename(INV_COM_SWAP)


def single_pop_series(kind: str, k: int, order: int, jobs: int = 1) -> XSeries:
    """G_k (``kind="pj"``) or ~G_k (``kind="ptilde"``) by brute force.

    These are the series of separable permutations avoiding the single POP.
    """
    if kind == "pj":
        pop = make_flat_pj(k)
    elif kind == "ptilde":
        pop = make_flat_ptilde(k)
    else:
        raise ValueError(f"kind must be 'pj' or 'ptilde', got {kind!r}")
    return series_bruteforce([pop], True, order, jobs=jobs)


@lru_cache(maxsize=None)
def _single_coeff(kind: str, k: int, n: int) -> MultiPoly:
    if k == 0:
        pops: Tuple = ()
    else:
        pops = (make_flat_pj(k) if kind == "pj" else make_flat_ptilde(k),)
    return distribution(AvoiderQuery(n, pops, separable_only=True))


def _g(k: int, n: int) -> MultiPoly:
    return _single_coeff("pj", k, n)


def _gt(k: int, n: int) -> MultiPoly:
    return _single_coeff("ptilde", k, n)


def _x_all(n: int) -> MultiPoly:
    return _single_coeff("all", 0, n)


@dataclass
class SmallCoefficients:
    """Coefficients feeding the functional-equation system for one (j, l).

    Keys follow the summation indices: ``U[i, a]`` is [x^a] G_{j-i},
    ``V[i, a]`` is [x^i] ~G_{l-a-1}, ``W[i]`` is [x^i] ~G_{l-1}, ``X[h]`` is the
    length-h separable distribution, and ``Z[i, h, m]`` / ``Y[i, h, m]`` are
    [x^m] G_{j-(i-h)} and [x^(i-h)] ~G_{l-m-h-1}.
    """

    j: int
    l: int  # noqa: E741
    U: Dict[Tuple[int, int], MultiPoly] = field(default_factory=dict)
    V: Dict[Tuple[int, int], MultiPoly] = field(default_factory=dict)
    W: Dict[int, MultiPoly] = field(default_factory=dict)
    X: Dict[int, MultiPoly] = field(default_factory=dict)
    Y: Dict[Tuple[int, int, int], MultiPoly] = field(default_factory=dict)
    Z: Dict[Tuple[int, int, int], MultiPoly] = field(default_factory=dict)


def small_coefficients(j: int, l: int) -> SmallCoefficients:  # noqa: E741
    """Brute-force every U, V, W, X, Y, Z the (j, l) system needs.

    Raises:
        UnsupportedPairError: Unless 3 <= j, l <= 5.
    """
    _check_pair(j, l)
    table = SmallCoefficients(j, l)
    for i in range(1, j - 1):
        for a in range(1, l - 2):
            table.U[i, a] = _g(j - i, a)
            table.V[i, a] = _gt(l - a - 1, i)
        table.W[i] = _gt(l - 1, i)
        for h in range(1, min(i - 1, l - 4) + 1):
            table.X[h] = _x_all(h)
            for m in range(1, l - h - 2):
                table.Z[i, h, m] = _g(j - (i - h), m)
                table.Y[i, h, m] = _gt(l - m - h - 1, i - h)
    return table


def _mono(p=0, q=0, u=0, v=0, s=0, t=0) -> MultiPoly:
    return MultiPoly.monomial((p, q, u, v, s, t))


def system_terms(j: int, l: int) -> Tuple[XPolynomial, XPolynomial]:  # noqa: E741
    """A(v) and B(v) with F = 1 + A(v) + B(v) (F(v=1) - 1).

    A gathers the terms that do not involve F itself; B multiplies F(v=1) - 1.

    Raises:
        UnsupportedPairError: Unless 3 <= j, l <= 5.
    """
    table = small_coefficients(j, l)
    a_terms = XPolynomial.monomial(_mono(u=1, v=1, s=1, t=1), 1)
    b_terms = XPolynomial.monomial(_mono(p=1, u=1, v=1, t=1), 1)
    for i in range(1, j - 1):
        for a in range(1, l - 2):
            u_coef, v_coef = table.U[i, a], table.V[i, a]
            power = 1 + a + i
            a_terms += XPolynomial.monomial(
                _mono(p=1, q=1, u=1, v=1)
                * u_coef.substitute_one("v", "t")
                * v_coef.substitute_one("u"),
                power,
            )
            b_terms += XPolynomial.monomial(
                _mono(p=2, q=1, u=1, v=1)
                * u_coef.substitute_one("v", "s", "t")
                * v_coef.substitute_one("u", "s"),
                power,
            )
        w_coef = table.W[i]
        a_terms += XPolynomial.monomial(
            _mono(q=1, u=1, v=1, s=1) * w_coef.substitute_one("u"), 1 + i
        )
        b_terms += XPolynomial.monomial(
            _mono(p=1, q=1, u=1, v=1) * w_coef.substitute_one("u", "s"), 1 + i
        )
        for h in range(1, min(i - 1, l - 4) + 1):
            x_coef = table.X[h].substitute_one("u", "s", "t")
            for m in range(1, l - h - 2):
                z_coef, y_coef = table.Z[i, h, m], table.Y[i, h, m]
                power = 1 + m + i
                a_terms += XPolynomial.monomial(
                    _mono(p=1, q=2, u=1, v=1)
                    * x_coef
                    * z_coef.substitute_one("v", "t")
                    * y_coef.substitute_one("u"),
                    power,
                )
                b_terms += XPolynomial.monomial(
                    _mono(p=2, q=2, u=1, v=1)
                    * x_coef
                    * z_coef.substitute_one("v", "s", "t")
                    * y_coef.substitute_one("u", "s"),
                    power,
                )
    return a_terms, b_terms


def solve_system_rational(j: int, l: int) -> RationalGF:  # noqa: E741
    """Solve the system for F_{j,l} as a rational function.

    Setting v = 1 gives F(1) = (1 + A(1) - B(1)) / (1 - B(1)); substituting
    back gives F = ((1 + A)(1 - B(1)) + B A(1)) / (1 - B(1)).

    Raises:
        UnsupportedPairError: Unless j = 2, l = 2, or both lie in 3..5.
    """
    if min(j, l) == 2:
        return identity_gf()
    a_terms, b_terms = system_terms(j, l)
    one = XPolynomial([1])
    a_at_one = a_terms.substitute_one("v")
    denominator = one - b_terms.substitute_one("v")
    numerator = (one + a_terms) * denominator + b_terms * a_at_one
    logger.debug(
        "system (%d,%d): %d/%d monomials", j, l,
        numerator.monomial_count(), denominator.monomial_count(),
    )
    return RationalGF(numerator, denominator)


def solve_system(j: int, l: int, order: int = DEFAULT_ORDER) -> XSeries:  # noqa: E741
    return solve_system_rational(j, l).expand(order)


def theorem_series(j: int, l: int, order: int = DEFAULT_ORDER) -> XSeries:  # noqa: E741
    return load_theorem_gf(j, l).expand(order)


def univariate(series: XSeries) -> List[int]:
    """Coefficients with every statistic variable set to 1."""
    return series.at_ones()


def univariate_gf(gf: RationalGF) -> Tuple[List[int], List[int]]:
    """(numerator, denominator) integer coefficient lists at all variables = 1."""
    at_ones = gf.at_ones()
    return (
        [c.constant_term for c in at_ones.numerator.coeffs],
        [c.constant_term for c in at_ones.denominator.coeffs],
    )


def solved_counts(j: int, l: int, n_max: int) -> List[int]:  # noqa: E741
    """Class sizes for n = 0..n_max from the solved system.

    The rational function is specialized at all variables = 1 before expansion.
    """
    return univariate(solve_system_rational(j, l).at_ones().expand(n_max))
