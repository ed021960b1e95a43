# Copyright 2025 poplab contributors
#
# Copyright may exist in Contributors' modifications
# and/or contributions to the work.
#
# Use of this source code is governed by the MIT
# license that can be found in the LICENSE file or at
# https://opensource.org/licenses/MIT.

"""Exact polynomial and power-series arithmetic in x over Z[p, q, u, v, s, t].

``MultiPoly`` is a sparse polynomial in the six statistic variables with Python
integer coefficients. ``XPolynomial`` and ``XSeries`` hold MultiPoly
coefficients of x^0, x^1, ...; a series carries its truncation order N and every
operation truncates at N. ``RationalGF`` is a quotient of two XPolynomials whose
denominator has a unit constant term, so it expands uniquely as a series.
"""

from __future__ import annotations

import logging
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

logger = logging.getLogger(__name__)

VARIABLES = ("p", "q", "u", "v", "s", "t")
NVARS = len(VARIABLES)

Exponents = Tuple[int, ...]
Scalar = int


class OrderMismatchError(ValueError):
    """Raised when two series with different truncation orders are combined."""


class NonInvertibleError(ArithmeticError):
    """Raised when a denominator's x^0 coefficient is not +1 or -1."""


def _var_index(var: str) -> int:
    try:
        return VARIABLES.index(var)
    except ValueError:
        raise ValueError(
            f"unknown variable {var!r}; expected one of {', '.join(VARIABLES)}"
        ) from None


def _format_monomial(exps: Exponents) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts)


class MultiPoly:
    """Sparse polynomial in (p, q, u, v, s, t) with integer coefficients.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term dictionaries are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Sequence[int], int]] = None):
        clean: Dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != NVARS or any(e < 0 for e in key):
                raise ValueError(f"bad exponent vector {exps!r}")
            total = clean.get(key, 0) + int(coeff)
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: Dict[Exponents, int]) -> MultiPoly:
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def constant(cls, c: int) -> MultiPoly:
        return cls._wrap({(0,) * NVARS: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> MultiPoly:
        return cls({tuple(exps): coeff})

    @classmethod
    def variable(cls, name: str) -> MultiPoly:
        exps = [0] * NVARS
        exps[_var_index(name)] = 1
        return cls._wrap({tuple(exps): 1})

    @classmethod
    def promote(cls, item: Union[MultiPoly, int]) -> MultiPoly:
        if isinstance(item, MultiPoly):
            return item
        if isinstance(item, int):
            return cls.constant(item)
        raise TypeError(f"cannot use {type(item).__name__} as a polynomial")

    # Inspection

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponents, int]]:
        return iter(self.terms())

    def terms(self) -> List[Tuple[Exponents, int]]:
        """Terms sorted by exponent vector."""
        return sorted(self._terms.items())

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    @property
    def constant_term(self) -> int:
        return self._terms.get((0,) * NVARS, 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def evaluate_ones(self) -> int:
        """Value at p = q = u = v = s = t = 1."""
        return sum(self._terms.values())

    # Arithmetic

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> MultiPoly:
        return MultiPoly._wrap({k: -c for k, c in self._terms.items()})

    def __add__(self, other: Union[MultiPoly, int]) -> MultiPoly:
        other = MultiPoly.promote(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            total = out.get(k, 0) + c
            if total:
                out[k] = total
            else:
                del out[k]
        return MultiPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other: Union[MultiPoly, int]) -> MultiPoly:
        return self + (-MultiPoly.promote(other))

    def __rsub__(self, other: int) -> MultiPoly:
        return MultiPoly.promote(other) - self

    def __mul__(self, other: Union[MultiPoly, int]) -> MultiPoly:
        if isinstance(other, int):
            if other == 0:
                return MultiPoly()
            return MultiPoly._wrap({k: c * other for k, c in self._terms.items()})
        other = MultiPoly.promote(other)
        out: Dict[Exponents, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    # Specialization

    def substitute_one(self, *names: str) -> MultiPoly:
        """Set each named variable to 1, merging the affected coefficients.

        Raises:
            ValueError: For a name outside p, q, u, v, s, t.
        """
        idx = [_var_index(name) for name in names]
        out: Dict[Exponents, int] = {}
        for exps, c in self._terms.items():
            key = list(exps)
            for i in idx:
                key[i] = 0
            tkey = tuple(key)
            out[tkey] = out.get(tkey, 0) + c
        return MultiPoly._wrap({k: c for k, c in out.items() if c})

    def substitute_all_but(self, *keep: str) -> MultiPoly:
        """Set every variable not named in ``keep`` to 1."""
        return self.substitute_one(*(v for v in VARIABLES if v not in keep))

    def rename(self, mapping: Mapping[str, str]) -> MultiPoly:
        """Exchange variables, e.g. ``{"u": "t", "t": "u"}``.

        The mapping must be a permutation of the names it mentions.
        """
        perm = list(range(NVARS))
        for src, dst in mapping.items():
            perm[_var_index(dst)] = _var_index(src)
        if sorted(perm) != list(range(NVARS)):
            raise ValueError(f"variable mapping {dict(mapping)} is not a bijection")
        return MultiPoly._wrap(
            {tuple(exps[perm[i]] for i in range(NVARS)): c
             for exps, c in self._terms.items()}
        )

    # Text and JSON

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = _format_monomial(exps)
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_json(self) -> List[dict]:
        return [{"e": list(exps), "c": str(c)} for exps, c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> MultiPoly:
        terms: Dict[Exponents, int] = {}
        for item in data:
            key = tuple(int(e) for e in item["e"])
            if key in terms:
                raise ValueError(f"duplicate monomial {list(key)} in JSON")
            terms[key] = int(item["c"])
        return cls(terms)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def substitute_one(a: MultiPoly, var: str) -> MultiPoly:
    return a.substitute_one(var)


ZERO = MultiPoly()
ONE = MultiPoly.constant(1)


def _coerce_coeffs(coeffs: Iterable[Union[MultiPoly, int]]) -> List[MultiPoly]:
    return [MultiPoly.promote(c) for c in coeffs]


class XPolynomial:
    """A polynomial in x whose coefficients are MultiPoly values."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[MultiPoly, int]] = ()):
        cs = _coerce_coeffs(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: Tuple[MultiPoly, ...] = tuple(cs)

    @classmethod
    def monomial(cls, poly: Union[MultiPoly, int], power: int) -> XPolynomial:
        return cls([ZERO] * power + [MultiPoly.promote(poly)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> MultiPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def monomial_count(self) -> int:
        """Number of distinct monomials in the seven variables p..t, x."""
        return sum(len(c) for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> XPolynomial:
        return XPolynomial(-c for c in self.coeffs)

    def __add__(self, other: XPolynomial) -> XPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return XPolynomial(
            self.coefficient(k) + other.coefficient(k) for k in range(size)
        )

    def __sub__(self, other: XPolynomial) -> XPolynomial:
        return self + (-other)

    def __mul__(self, other: Union[XPolynomial, MultiPoly, int]) -> XPolynomial:
        if not isinstance(other, XPolynomial):
            scale = MultiPoly.promote(other)
            return XPolynomial(c * scale for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return XPolynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return XPolynomial(out)

    __rmul__ = __mul__

    def substitute_one(self, *names: str) -> XPolynomial:
        return XPolynomial(c.substitute_one(*names) for c in self.coeffs)

    def rename(self, mapping: Mapping[str, str]) -> XPolynomial:
        return XPolynomial(c.rename(mapping) for c in self.coeffs)

    def at_ones(self) -> XPolynomial:
        return XPolynomial(MultiPoly.constant(c.evaluate_ones()) for c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})" + ("" if k == 0 else f"x^{k}"))
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"XPolynomial({self})"


class XSeries:
    """A power series in x truncated after x^order.

    Args:
        order: Truncation order N; the series stores c_0 .. c_N.
        coeffs: Coefficients of x^0, x^1, ...; padded with zeros or cut at N.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Union[MultiPoly, int]] = ()):
        if order < 0:
            raise ValueError(f"series order must be nonnegative, got {order}")
        cs = _coerce_coeffs(coeffs)[: order + 1]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs: Tuple[MultiPoly, ...] = tuple(cs)

    @classmethod
    def from_xpolynomial(cls, poly: XPolynomial, order: int) -> XSeries:
        return cls(order, poly.coeffs)

    def coefficient(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def _check(self, other: XSeries) -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __neg__(self) -> XSeries:
        return XSeries(self.order, (-c for c in self.coeffs))

    def __add__(self, other: XSeries) -> XSeries:
        self._check(other)
        return XSeries(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: XSeries) -> XSeries:
        return self + (-other)

    def __mul__(self, other: Union[XSeries, MultiPoly, int]) -> XSeries:
        if not isinstance(other, XSeries):
            scale = MultiPoly.promote(other)
            return XSeries(self.order, (c * scale for c in self.coeffs))
        self._check(other)
        out = [ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return XSeries(self.order, out)

    __rmul__ = __mul__

    def truncate(self, order: int) -> XSeries:
        if order > self.order:
            raise OrderMismatchError(f"cannot extend a series of order {self.order}")
        return XSeries(order, self.coeffs)

    def substitute_one(self, *names: str) -> XSeries:
        return XSeries(self.order, (c.substitute_one(*names) for c in self.coeffs))

    def rename(self, mapping: Mapping[str, str]) -> XSeries:
        return XSeries(self.order, (c.rename(mapping) for c in self.coeffs))

    def at_ones(self) -> List[int]:
        """Coefficients with every statistic variable set to 1."""
        return [c.evaluate_ones() for c in self.coeffs]

    def __str__(self) -> str:
        return "\n".join(f"x^{n}: {c}" for n, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"XSeries(order={self.order})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> XSeries:
        coeffs = [MultiPoly.from_json(c) for c in data["coeffs"]]
        if len(coeffs) != int(data["order"]) + 1:
            raise ValueError("series JSON has the wrong number of coefficients")
        return cls(int(data["order"]), coeffs)


def series_add(a: XSeries, b: XSeries) -> XSeries:
    return a + b


def series_mul(a: XSeries, b: XSeries) -> XSeries:
    return a * b


class RationalGF:
    """numerator / denominator, both polynomials in x over Z[p, ..., t]."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: XPolynomial, denominator: XPolynomial):
        if not denominator.coeffs:
            raise ZeroDivisionError("zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    def normalized(self) -> RationalGF:
        """Flip the global sign so the denominator's constant term is +1."""
        if self.denominator.coefficient(0) == MultiPoly.constant(-1):
            return RationalGF(-self.numerator, -self.denominator)
        return self

    def rename(self, mapping: Mapping[str, str]) -> RationalGF:
        return RationalGF(
            self.numerator.rename(mapping), self.denominator.rename(mapping)
        )

    def substitute_one(self, *names: str) -> RationalGF:
        return RationalGF(
            self.numerator.substitute_one(*names),
            self.denominator.substitute_one(*names),
        )

    def at_ones(self) -> RationalGF:
        return RationalGF(self.numerator.at_ones(), self.denominator.at_ones())

    def monomial_counts(self) -> Tuple[int, int]:
        return (self.numerator.monomial_count(), self.denominator.monomial_count())

    def expand(self, order: int) -> XSeries:
        return expand_rational(self, order)

    def __repr__(self) -> str:
        return f"RationalGF({self.numerator} / {self.denominator})"


def expand_rational(gf: RationalGF, order: int) -> XSeries:
    """Expand ``gf`` as a power series up to and including x^order.

    Args:
        gf: The rational function.
        order: Truncation order N.

    Returns:
        The unique series S with S * denominator = numerator mod x^(N+1).

    Raises:
        NonInvertibleError: If the denominator's x^0 coefficient is not +1 or -1.
    """
    d0 = gf.denominator.coefficient(0)
    if d0 == ONE:
        unit = 1
    elif d0 == MultiPoly.constant(-1):
        unit = -1
    else:
        raise NonInvertibleError(
            f"denominator constant term {d0} is not a unit; cannot expand"
        )
    den = gf.denominator.coeffs
    out: List[MultiPoly] = []
    for k in range(order + 1):
        acc = gf.numerator.coefficient(k)
        for i in range(1, min(k, len(den) - 1) + 1):
            if den[i]:
                acc = acc - den[i] * out[k - i]
        out.append(acc if unit == 1 else -acc)
    return XSeries(order, out)
