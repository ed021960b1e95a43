import json

import pytest

from configs.identity_claims import CONFIGS as IDENTITY_CLAIMS
from poplab.cli import EXIT_CAP, EXIT_MATH, EXIT_OK, EXIT_USAGE, main
from poplab.perm_core import MAX_N_ENV
from poplab.poly import MultiPoly, XSeries


@pytest.fixture(autouse=True)
def default_cap(monkeypatch):
    monkeypatch.delenv(MAX_N_ENV, raising=False)


def run(capsys, *argv, claims=None):
    status = main(list(argv), all_claims=claims)
    out = capsys.readouterr().out.strip()
    return status, out


class TestCount:
    @pytest.mark.parametrize(
        ("argv", "expected"),
        [
            (["--pops", "Pj:4,Pt:4", "--separable", "--n", "4"], "12"),
            (["--banded", "2,2", "--n", "5"], "8"),
            (["--pops", "Pj:3", "--n", "0"], "1"),
            (["--pops", "Pj:3", "--pops", "Pt:3", "--n", "6"], "13"),
        ],
    )
    def test_examples(self, capsys, argv, expected):
        assert run(capsys, "count", "--jobs", "1", *argv) == (EXIT_OK, expected)

    def test_sequence(self, capsys):
        status, out = run(capsys, "count", "--banded", "2,3", "--n-max", "7")
        assert status == EXIT_OK
        assert out == "1, 1, 2, 4, 7, 13, 24, 44"

    def test_formats(self, capsys):
        banded = ["count", "--banded", "2,2"]
        _, out = run(capsys, *banded, "--n", "5", "--format", "json")
        assert json.loads(out) == {"n": 5, "count": "8"}
        _, out = run(capsys, *banded, "--n-max", "2", "--format", "csv")
        assert out.splitlines() == ["n,value", "0,1", "1,1", "2,2"]
        _, out = run(capsys, *banded, "--n-max", "2", "--format", "json")
        assert json.loads(out) == ["1", "1", "2"]

    def test_plot(self, capsys, tmp_path):
        path = tmp_path / "counts.png"
        status, _ = run(
            capsys, "count", "--pops", "Pj:3,Pt:4", "--n-max", "5", "--jobs", "1",
            "--plot", str(path),
        )  # fmt: skip
        assert status == EXIT_OK
        assert path.exists()

    def test_cap_exceeded(self, capsys):
        status, _ = run(capsys, "count", "--pops", "Pj:3", "--n", "13", "--jobs", "1")
        assert status == EXIT_CAP

    def test_cap_override_needs_acknowledgement(self, capsys):
        status, _ = run(capsys, "count", "--pops", "Pj:3", "--n", "4", "--max-n", "13")
        assert status == EXIT_USAGE

    def test_cap_override_is_scoped(self, capsys):
        argv = ["count", "--n", "13", "--jobs", "1", "--pops", "Pj:2"]
        status, out = run(capsys, *argv, "--max-n", "13", "--allow-large")
        assert (status, out) == (EXIT_OK, "1")
        assert run(capsys, *argv)[0] == EXIT_CAP

    @pytest.mark.parametrize(
        "argv",
        [
            ["count", "--pops", "Pq:4", "--n", "3"],
            ["count", "--pops", "pop k=2 below=1<2;2<1", "--n", "3"],
            ["count", "--banded", "0,2", "--n", "3"],
            ["count", "--banded", "2", "--n", "3"],
            ["count", "--n", "-1"],
            ["count", "--n", "3", "--jobs", "0"],
            ["count", "--banded", "2,2", "--pops", "Pj:3", "--n", "3"],
            ["count", "--banded", "2,2", "--separable", "--n-max", "3"],
            ["recurrence", "--banded", "2,2", "--pops", "Pt:3"],
            ["count"],
            ["frobnicate"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == EXIT_USAGE


class TestDistribution:
    def test_single_pop(self, capsys):
        status, out = run(
            capsys, "distribution", "--pops", "Pj:3", "--separable", "--n", "2",
            "--format", "json", "--jobs", "1",
        )  # fmt: skip
        assert status == EXIT_OK
        poly = MultiPoly.from_json(json.loads(out))
        assert poly == MultiPoly({(1, 0, 2, 1, 1, 2): 1, (0, 1, 1, 2, 2, 1): 1})

    def test_plain(self, capsys):
        assert run(capsys, "distribution", "--pops", "Pj:4", "--n", "1") == (
            EXIT_OK,
            "uvst",
        )
        _, out = run(
            capsys, "distribution", "--pops", "Pj:2,Pt:5", "--separable", "--n", "3",
            "--jobs", "1",
        )  # fmt: skip
        assert out == "p^2u^3vst^3"

    def test_csv(self, capsys):
        _, out = run(capsys, "distribution", "--n", "1", "--format", "csv")
        assert out.splitlines() == ["p,q,u,v,s,t,coefficient", "0,0,1,1,1,1,1"]


class TestRecurrence:
    def test_banded(self, capsys):
        assert run(capsys, "recurrence", "--banded", "2,2", "--terms", "12") == (
            EXIT_OK,
            "1 - x - x^2",
        )

    def test_system(self, capsys):
        status, out = run(capsys, "recurrence", "--system", "5,5", "--terms", "16")
        assert status == EXIT_OK
        assert out == "1 - x - x^2 - 3x^3 - 11x^4 - 7x^5 - x^6"

    def test_literal_sequence(self, capsys):
        assert run(capsys, "recurrence", "--seq", "1,1,1,1,1,1") == (EXIT_OK, "1 - x")

    def test_from_pops(self, capsys):
        status, out = run(
            capsys, "recurrence", "--from-pops", "--pops", "Pj:4,Pt:3", "--terms",
            "10", "--jobs", "1",
        )  # fmt: skip
        assert (status, out) == (EXIT_OK, "1 - x - x^2 - x^3")

    def test_json(self, capsys):
        _, out = run(capsys, "recurrence", "--seq", "1,2,4,8,16,32", "--format", "json")
        assert json.loads(out) == {
            "order": 1,
            "coefficients": ["2"],
            "denominator": "1 - 2x",
        }

    def test_no_recurrence(self, capsys):
        assert run(capsys, "recurrence", "--seq", "1,2,4,8,16,3")[0] == EXIT_MATH

    def test_unsupported_pair(self, capsys):
        assert run(capsys, "recurrence", "--system", "6,6")[0] == EXIT_USAGE


class TestKFib:
    @pytest.mark.parametrize(
        ("k", "n", "expected"), [("2", "7", "13"), ("5", "1", "1"), ("3", "5", "7")]
    )
    def test_examples(self, capsys, k, n, expected):
        assert run(capsys, "kfib", "--k", k, "--n", n) == (EXIT_OK, expected)

    def test_small_k(self, capsys):
        assert run(capsys, "kfib", "--k", "1", "--n", "3")[0] == EXIT_USAGE


class TestSeries:
    def test_ones(self, capsys):
        _, out = run(capsys, "series", "--pair", "4,4", "--order", "7", "--ones")
        assert out == "1, 1, 2, 6, 12, 25, 57, 124"

    def test_system_json_round_trip(self, capsys):
        status, out = run(
            capsys, "series", "--pair", "3,3", "--order", "3", "--system",
            "--format", "json",
        )  # fmt: skip
        assert status == EXIT_OK
        series = XSeries.from_json(json.loads(out))
        assert series.at_ones() == [1, 1, 2, 3]

    def test_plain(self, capsys):
        _, out = run(capsys, "series", "--pair", "3,3", "--order", "1")
        assert out.splitlines() == ["x^0: 1", "x^1: uvst"]


class TestVerify:
    def test_selected_claims(self, capsys):
        status, out = run(
            capsys, "verify", "--claim", "identity-only", "--claim", "kfib-counts",
            "--n-max", "5", "--jobs", "1",
            claims=IDENTITY_CLAIMS,
        )  # fmt: skip
        assert status == EXIT_OK
        lines = out.splitlines()
        assert lines[0].startswith("claim")
        assert [line.split()[:2] for line in lines[1:]] == [
            ["identity-only", "pass"],
            ["kfib-counts", "pass"],
        ]

    def test_failing_claim_exit_status(self, capsys):
        claims = {
            "separable-4-4": {
                **IDENTITY_CLAIMS["separable-superfluous"],
                "claim_args": {"pairs": [(4, 4)]},
                "n_max": 4,
            }
        }
        status, out = run(
            capsys, "verify", "--all", "--jobs", "1", "--format", "json", claims=claims
        )
        assert status == EXIT_MATH
        assert json.loads(out)[0]["status"] == "fail"

    def test_unknown_claim(self, capsys):
        status, _ = run(capsys, "verify", "--claim", "nope", claims=IDENTITY_CLAIMS)
        assert status == EXIT_USAGE
