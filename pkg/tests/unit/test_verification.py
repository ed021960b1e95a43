import pytest

from configs import CLAIMS
from configs.config_utils import derive_claim
from poplab.verification import (
    ERRATUM,
    FAIL,
    PASS,
    BandedWindowClaim,
    Claim,
    ClaimReport,
    Comparison,
    CorollaryClaim,
    ExplicitGFClaim,
    FixtureAuditClaim,
    IdentityOnlyClaim,
    KFibCountsClaim,
    ReverseComplementClaim,
    SeparableSuperfluousClaim,
    SinglePopSeriesClaim,
    SystemVsExplicitClaim,
    verify_all,
    verify_theorem,
)


class TestReport:
    def test_status(self):
        report = ClaimReport("demo", "")
        assert report.status == FAIL
        report.comparisons.append(Comparison("a", "1", "1", PASS))
        assert report.status == PASS
        report.comparisons.append(Comparison("b", "2", "3", ERRATUM))
        assert report.status == ERRATUM
        assert report.passed
        report.comparisons.append(Comparison("c", "2", "3", FAIL))
        assert report.status == FAIL
        assert not report.passed
        assert [c.label for c in report.failures()] == ["c"]

    def test_to_json(self):
        report = ClaimReport("demo", "desc", [Comparison("a", "1", "1", PASS)], 0.12345)
        data = report.to_json()
        assert data["status"] == PASS
        assert data["elapsed"] == 0.123
        assert data["comparisons"] == [
            {"label": "a", "expected": "1", "actual": "1", "status": PASS}
        ]

    def test_compare_records_mismatch(self):
        claim = Claim(name="demo")
        assert claim.compare("same", 3, 3)
        assert not claim.compare("differs", 3, 4)
        assert not claim.compare("misprint", 3, 4, erratum=True)
        assert [c.status for c in claim.report.comparisons] == [PASS, FAIL, ERRATUM]

    def test_base_claim_has_no_check(self):
        with pytest.raises(NotImplementedError):
            Claim().run()


class TestClaims:
    @pytest.mark.parametrize(
        "claim",
        [
            ExplicitGFClaim(3, 4, n_max=5),
            ExplicitGFClaim(5, 3, n_max=5),
            SystemVsExplicitClaim(4, 5, n_max=6),
            SystemVsExplicitClaim(5, 4, n_max=6),
            FixtureAuditClaim(n_max=5),
            KFibCountsClaim(js=(3, 4), banded_n_max=15, n_max=6),
            BandedWindowClaim(sizes=(2, 3, 4), n_max=6),
            SeparableSuperfluousClaim(n_max=6),
            IdentityOnlyClaim(ls=(2, 4), n_max=5),
            ReverseComplementClaim(sizes=(3, 4), n_max=5),
        ],
        ids=lambda claim: claim.name,
    )
    def test_small_claims_pass(self, claim):
        report = claim.run()
        assert report.status == PASS
        assert report.comparisons

    def test_corollary_pass(self):
        report = verify_theorem(CLAIMS["corollary-3-4"], name="corollary-3-4")
        assert report.status == PASS
        assert report.comparisons[1].actual == "1 - x - x^2 - x^3"

    def test_corollary_erratum(self):
        report = verify_theorem(CLAIMS["corollary-5-5"], name="corollary-5-5")
        assert report.status == ERRATUM
        assert report.passed
        misprints = [c for c in report.comparisons if c.status == ERRATUM]
        assert [(c.expected, c.actual) for c in misprints] == [
            ("58", "52"),
            ("137", "122"),
            ("385", "321"),
        ]

    def test_corollary_wrong_denominator_fails(self):
        config = derive_claim(CLAIMS["corollary-3-3"], denominator=[1, -1, -2])
        report = verify_theorem(config, name="bad")
        assert report.status == FAIL
        assert len(report.failures()) == 2

    def test_unlisted_misprint_fails(self):
        config = derive_claim(CLAIMS["corollary-5-5"], errata=[5, 6])
        assert verify_theorem(config).status == FAIL

    def test_single_pop_series(self):
        assert verify_theorem(CLAIMS["single-pop-series"]).status == PASS


class TestVerifyAll:
    def test_selected_claims(self):
        reports = verify_all(
            CLAIMS, names=["identity-only", "fixture-audit"], n_max=4, jobs=1
        )
        assert [r.name for r in reports] == ["identity-only", "fixture-audit"]
        assert all(r.status == PASS for r in reports)

    def test_unknown_claim(self):
        with pytest.raises(ValueError, match="unknown claim"):
            verify_all(CLAIMS, names=["no-such-claim"])

    def test_n_max_override(self):
        report = verify_theorem(CLAIMS["explicit-gf-3-3"], name="x", n_max=3)
        assert len(report.comparisons) == 4
