import json

import pytest

from adapters import StrategyFactory
from app.main import main
from kfib.errors import InexactDivision
from kfib.exact import Mat2, Params
from kfib.identities import Failure, Identity, IdentityReport
from kfib.sums import SumKind, SumMethod, SumResult
from tests.test_bench import OffByOneStrategy


def run(capsys, *argv: str) -> tuple[int, str, str]:
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out.strip(), captured.err


class TestCompute:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["--k", "1", "--n", "10"], "55"),
            (["--k", "2", "--n", "5"], "29"),
            (["--k", "1", "--n", "0", "--lucas"], "2"),
            (["--k", "3", "--n", "-4"], "-33"),
        ],
    )
    def test_text(self, capsys, argv, expected):
        assert run(capsys, "compute", *argv)[:2] == (0, expected)

    def test_millionth_index(self, capsys):
        status, out, _ = run(capsys, "compute", "--k", "1", "--n", "1000000")
        assert status == 0
        assert len(out) == 208988

    def test_json(self, capsys):
        status, out, _ = run(capsys, "compute", "--k", "1", "--n", "10", "--format", "json")
        assert status == 0
        assert json.loads(out) == {"k": "1", "n": "10", "kind": "fibonacci", "value": "55"}

    @pytest.mark.parametrize(
        "argv",
        [
            ["compute", "--k", "0", "--n", "1"],
            ["compute", "--k", "1"],
            ["compute", "--k", "x", "--n", "1"],
            ["frobnicate"],
            [],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestSum:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["--k", "1", "--a", "2", "--n", "3"], "12"),
            (["--k", "1", "--a", "2", "--n", "3", "--alternating"], "-6"),
            (["--k", "1", "--a", "1", "--n", "4", "--method", "both"], "7 7 MATCH"),
            (["--k", "1", "--a", "1", "--n", "3", "--alternating", "--method", "matrix"], "-2"),
        ],
    )
    def test_text(self, capsys, argv, expected):
        assert run(capsys, "sum", *argv)[:2] == (0, expected)

    def test_json(self, capsys):
        _, out, _ = run(capsys, "sum", "--k", "2", "--a", "1", "--n", "3", "--format", "json")
        assert json.loads(out) == {
            "k": "2",
            "a": "1",
            "n": "3",
            "kind": "plain",
            "method": "closed",
            "value": "8",
            "denominator": "-2",
        }

    def test_mismatch_exits_one(self, capsys, monkeypatch):
        def fake(p, n, kind, method):
            value = 7 if method is SumMethod.CLOSED else 8
            return SumResult(params=p, n=n, kind=kind, value=value, method=method, denominator=-1)

        monkeypatch.setattr("app.commands.sums.evaluate_sum", fake)
        status, out, _ = run(capsys, "sum", "--k", "1", "--a", "1", "--n", "4", "--method", "both")
        assert (status, out) == (1, "7 8 MISMATCH")

    def test_inexact_division_exits_three(self, capsys, monkeypatch):
        def fake(p, n, kind, method):
            raise InexactDivision(28, 5)

        monkeypatch.setattr("app.commands.sums.evaluate_sum", fake)
        status, _, err = run(capsys, "sum", "--k", "1", "--a", "2", "--n", "3", "--alternating")
        assert status == 3
        assert "28 is not divisible by 5" in err


class TestMatpow:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["--k", "1", "--a", "2", "--n", "2", "--matrix", "r"], "[[8,-3],[3,-1]] CONSISTENT"),
            (["--k", "1", "--a", "1", "--n", "2", "--matrix", "s"], "[[3/2,5/2],[1/2,3/2]] CONSISTENT"),
            (["--k", "1", "--a", "1", "--n", "0", "--matrix", "r"], "[[1,0],[0,1]] CONSISTENT"),
        ],
    )
    def test_text(self, capsys, argv, expected):
        assert run(capsys, "matpow", *argv)[:2] == (0, expected)

    def test_json(self, capsys):
        _, out, _ = run(
            capsys, "matpow", "--k", "1", "--a", "1", "--n", "2", "--matrix", "s", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["entries"] == [["3/2", "5/2"], ["1/2", "3/2"]]
        assert payload["consistent"] is True

    def test_inconsistent_exits_three(self, capsys, monkeypatch):
        monkeypatch.setattr("app.commands.matpow.r_power_closed", lambda p, n: Mat2.zero())
        status, out, _ = run(capsys, "matpow", "--k", "1", "--a", "1", "--n", "3", "--matrix", "r")
        assert status == 3
        assert out.endswith("INCONSISTENT")

    def test_negative_n_is_usage_error(self, capsys):
        assert run(capsys, "matpow", "--k", "1", "--a", "1", "--n", "-1", "--matrix", "r")[0] == 2


class TestVerify:
    def test_catalan(self, capsys):
        status, out, _ = run(
            capsys, "verify", "--identity", "catalan", "--k-max", "3", "--a-max", "3", "--n-max", "10"
        )
        assert status == 0
        assert out == "catalan checked=90 failures=0"

    def test_zero_layer_reported_in_text(self, capsys):
        status, out, _ = run(
            capsys, "verify", "--identity", "honsberger", "--k-max", "2", "--n-max", "6", "--m-max", "6"
        )
        assert status == 0
        assert out == "honsberger checked=98 failures=0 n0=held"

    def test_zero_layer_reported_in_json(self, capsys):
        _, out, _ = run(
            capsys, "verify", "--identity", "sum", "--k-max", "2", "--a-max", "2", "--n-max", "4",
            "--format", "json",
        )
        assert json.loads(out)["holds_at_zero"] is True

    def test_zero_layer_omitted_when_grid_starts_at_one(self, capsys):
        _, out, _ = run(
            capsys, "verify", "--identity", "catalan", "--k-max", "1", "--a-max", "1", "--n-max", "3",
            "--format", "json",
        )
        assert "holds_at_zero" not in json.loads(out)

    def test_failed_zero_layer_in_text(self, capsys, monkeypatch):
        def fake(identity, kmax, amax, nmax, mmax, *, workers=1):
            return IdentityReport(
                identity=identity,
                k_range=(1, kmax),
                a_range=(1, 1),
                n_range=(0, nmax),
                m_range=(0, mmax),
                checked=4,
                failures=[Failure(k=1, a=1, n=0, m=1, lhs="0", rhs="1")],
            )

        monkeypatch.setattr("app.commands.verify.verify_grid", fake)
        status, out, _ = run(capsys, "verify", "--identity", "docagne")
        assert status == 1
        assert out.splitlines()[0] == "docagne checked=4 failures=1 n0=failed"

    def test_all_passes_and_lists_erratum(self, capsys):
        status, out, _ = run(
            capsys, "verify", "--identity", "all",
            "--k-max", "2", "--a-max", "2", "--n-max", "8", "--m-max", "8",
        )
        assert status == 0
        assert "k=1 a=1 n=3 statement=0 oracle=-2 mismatch" in out
        assert "k=1 a=2 n=3 statement=inexact oracle=-6 inexact" in out
        assert out.endswith("ALL PASS")
        for identity in Identity:
            assert f"{identity.value} checked=" in out

    def test_all_json(self, capsys):
        _, out, _ = run(
            capsys, "verify", "--k-max", "1", "--a-max", "2", "--n-max", "4", "--m-max", "2",
            "--format", "json",
        )
        payload = json.loads(out)
        assert len(payload["suites"]) == len(Identity)
        assert {"k": "1", "a": "1", "n": "3", "oracle": "-2", "statement": "0", "outcome": "mismatch"} in payload["erratum"]

    def test_failure_exits_one(self, capsys, monkeypatch):
        def fake(identity, kmax, amax, nmax, mmax, *, workers=1):
            return IdentityReport(
                identity=identity,
                k_range=(1, kmax),
                a_range=(1, amax),
                n_range=(0, nmax),
                m_range=(0, 0),
                checked=1,
                failures=[Failure(k=1, a=1, n=0, m=0, lhs="1", rhs="2")],
            )

        monkeypatch.setattr("app.commands.verify.verify_grid", fake)
        status, out, _ = run(capsys, "verify", "--identity", "docagne", "--format", "json")
        assert status == 1
        assert json.loads(out) == {
            "identity": "docagne",
            "checked": "1",
            "holds_at_zero": False,
            "failures": [{"k": "1", "a": "1", "n": "0", "m": "0", "lhs": "1", "rhs": "2"}],
        }


class TestBench:
    def test_trivial_json(self, capsys):
        status, out, _ = run(capsys, "bench", "--k", "1", "--n", "1", "--reps", "1", "--format", "json")
        assert status == 0
        records = json.loads(out)["records"]
        assert [r["strategy"] for r in records] == ["iterative", "matrix-pow", "fast-doubling"]
        assert all(r["digits"] == "1" and r["mults"] == "0" for r in records)

    def test_table(self, capsys):
        status, out, _ = run(capsys, "bench", "--k", "2", "--n", "10", "20", "--strategy", "fast-doubling")
        assert status == 0
        lines = out.splitlines()
        assert lines[0].split() == ["strategy", "k", "n", "millis", "mults", "digits"]
        assert len(lines) == 4

    def test_unknown_strategy(self, capsys):
        assert run(capsys, "bench", "--k", "1", "--n", "5", "--strategy", "binet")[0] == 2

    def test_disagreement_exits_three(self, capsys):
        StrategyFactory.register("off-by-one", OffByOneStrategy)
        status, _, err = run(capsys, "bench", "--k", "1", "--n", "5", "--reps", "1")
        assert status == 3
        assert "StrategyMismatch" in err
