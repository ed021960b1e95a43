import pytest

from poplab.enumerator import AvoiderQuery, distribution
from poplab.gfseries import (
    EXPECTED_MONOMIALS,
    INV_COM_SWAP,
    FixtureError,
    UnsupportedPairError,
    fixture_gfs,
    identity_gf,
    load_theorem_gf,
    parse_fixture,
    single_pop_series,
    small_coefficients,
    solve_system,
    solve_system_rational,
    solved_counts,
    theorem_series,
    univariate,
    univariate_gf,
)
from poplab.patterns import make_flat_pj, make_flat_ptilde
from poplab.poly import MultiPoly, XPolynomial, XSeries

PAIRS = [(j, l) for j in range(3, 6) for l in range(3, 6)]  # noqa: E741

COROLLARY_TERMS = {
    (3, 3): [1, 1, 2, 3, 5, 8, 13, 21],
    (3, 4): [1, 1, 2, 4, 7, 13, 24, 44],
    (3, 5): [1, 1, 2, 4, 8, 15, 29, 56],
    (4, 4): [1, 1, 2, 6, 12, 25, 57, 124],
    (4, 5): [1, 1, 2, 6, 16, 34, 79, 193],
    (5, 5): [1, 1, 2, 6, 22, 52, 122, 321],
}

SEPARABLE_5_5 = [
    1, 1, 2, 6, 22, 52, 122, 321, 885, 2304, 5880,
    15276, 40172, 104948, 272641, 709605, 1851794,
]  # fmt: skip

uvst = MultiPoly.monomial((0, 0, 1, 1, 1, 1))
pu2vst2 = MultiPoly.monomial((1, 0, 2, 1, 1, 2))
quv2s2t = MultiPoly.monomial((0, 1, 1, 2, 2, 1))
put = MultiPoly.monomial((1, 0, 1, 0, 0, 1))
pqut = MultiPoly.monomial((1, 1, 1, 0, 0, 1))

GOOD_FIXTURE = """
# comment
[F_3_3 numerator]
-1 p^0 q^0 u^0 v^0 s^0 t^0 x^0

[F_3_3 denominator]
-1 p^0 q^0 u^0 v^0 s^0 t^0 x^0
+1 p^1 q^0 u^1 v^0 s^0 t^1 x^1
"""


class TestFixture:
    def test_monomial_counts(self):
        gfs = fixture_gfs()
        assert sorted(gfs) == sorted(EXPECTED_MONOMIALS)
        for pair, counts in EXPECTED_MONOMIALS.items():
            assert gfs[pair].monomial_counts() == counts

    def test_series_times_denominator(self):
        for gf in fixture_gfs().values():
            gf = gf.normalized()
            series = gf.expand(6)
            product = series * XSeries.from_xpolynomial(gf.denominator, 6)
            assert product == XSeries.from_xpolynomial(gf.numerator, 6)

    def test_parse_minimal(self):
        gfs = parse_fixture(GOOD_FIXTURE)
        gf = gfs[(3, 3)].normalized()
        assert gf.numerator == XPolynomial([1])
        assert gf.denominator == XPolynomial([1, -put])

    @pytest.mark.parametrize(
        "text",
        [
            GOOD_FIXTURE + "+1 p^1 q^0 u^1 v^0 s^0 t^1 x^1\n",
            GOOD_FIXTURE + "[F_3_3 numerator]\n",
            "[F_3_3 numerator]\n+1 p^0 q^0 u^0 v^0 s^0 t^0 x^0\n",
            "[F_3_3 numerator]\n+1 p^0 q^0 u^0 v^0 s^0 x^0\n",
            "+1 p^0 q^0 u^0 v^0 s^0 t^0 x^0\n",
            "[F_3_3 numerator]\n+1 p^0 q^0 u^0 v^0 s^0 t^0 x^0\n[F_3_3 denominator]\n",
        ],
        ids=[
            "duplicate-monomial",
            "duplicate-section",
            "missing-denominator",
            "bad-term",
            "term-outside-section",
            "empty-denominator",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(FixtureError):
            parse_fixture(text)


class TestLoad:
    def test_three_three(self):
        gf = load_theorem_gf(3, 3)
        assert gf.denominator == XPolynomial([1, -put, -pqut])
        assert univariate_gf(gf) == ([1], [1, -1, -1])

    def test_swap_for_larger_j(self):
        swapped = load_theorem_gf(5, 3).expand(6)
        assert swapped == load_theorem_gf(3, 5).expand(6).rename(INV_COM_SWAP)

    def test_identity_pairs(self):
        expected = identity_gf().expand(5)
        assert load_theorem_gf(2, 4).expand(5) == expected
        assert load_theorem_gf(5, 2).expand(5) == expected
        assert univariate(expected) == [1, 1, 1, 1, 1, 1]

    @pytest.mark.parametrize(("j", "l"), [(6, 3), (3, 6), (1, 4), (0, 0)])
    def test_unsupported(self, j, l):  # noqa: E741
        with pytest.raises(UnsupportedPairError):
            load_theorem_gf(j, l)

    def test_low_order_terms(self):
        series = theorem_series(3, 3, 2)
        assert series.coefficient(0) == MultiPoly.constant(1)
        assert series.coefficient(1) == uvst
        assert series.coefficient(2) == pu2vst2 + quv2s2t

    @pytest.mark.parametrize("pair", sorted(COROLLARY_TERMS))
    def test_corollary_sequences(self, pair):
        assert univariate(theorem_series(*pair, 7)) == COROLLARY_TERMS[pair]

    def test_matches_brute_force(self):
        for j, l in PAIRS:  # noqa: E741
            series = theorem_series(j, l, 5)
            pops = (make_flat_pj(j), make_flat_ptilde(l))
            for n in range(6):
                query = AvoiderQuery(n, pops, separable_only=True)
                assert series.coefficient(n) == distribution(query)

    def test_substitution_commutes_with_expansion(self):
        gf = load_theorem_gf(4, 5)
        for var in ("v", "p", "t"):
            assert gf.substitute_one(var).expand(6) == gf.expand(6).substitute_one(var)


class TestSmallCoefficients:
    def test_examples(self):
        assert small_coefficients(3, 3).W[1] == uvst
        assert small_coefficients(4, 4).W[2] == pu2vst2 + quv2s2t
        assert small_coefficients(4, 5).X[1] == uvst

    def test_index_ranges(self):
        table = small_coefficients(3, 3)
        assert not table.U and not table.X and not table.Z
        table = small_coefficients(5, 5)
        assert sorted(table.W) == [1, 2, 3]
        assert sorted(table.U) == [(i, a) for i in range(1, 4) for a in range(1, 3)]
        assert sorted(table.X) == [1]
        assert sorted(table.Z) == [(2, 1, 1), (3, 1, 1)]

    def test_u_entries_are_single_pop_coefficients(self):
        table = small_coefficients(5, 4)
        assert table.U[1, 1] == uvst
        assert table.V[3, 1] == single_pop_series("ptilde", 2, 3).coefficient(3)

    def test_unsupported(self):
        with pytest.raises(UnsupportedPairError):
            small_coefficients(2, 3)


class TestSystem:
    @pytest.mark.parametrize(("j", "l"), PAIRS)
    def test_matches_explicit(self, j, l):  # noqa: E741
        assert solve_system(j, l, 6) == theorem_series(j, l, 6)

    def test_four_five_to_order_eight(self):
        assert solve_system(4, 5, 8) == theorem_series(4, 5, 8)

    def test_constant_term(self):
        assert solve_system(4, 4, 4).coefficient(0) == MultiPoly.constant(1)

    def test_identity_pair(self):
        assert solve_system_rational(2, 5).expand(4) == identity_gf().expand(4)

    def test_solved_counts(self):
        assert solved_counts(5, 5, 16) == SEPARABLE_5_5
        assert solved_counts(3, 3, 7) == COROLLARY_TERMS[(3, 3)]


class TestSinglePopSeries:
    def test_printed_terms(self):
        for kind in ("pj", "ptilde"):
            series = single_pop_series(kind, 3, 2)
            assert series.coefficient(1) == uvst
            assert series.coefficient(2) == pu2vst2 + quv2s2t
        assert single_pop_series("pj", 2, 2).coefficient(2) == pu2vst2

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            single_pop_series("chain", 3, 2)
