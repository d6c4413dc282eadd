from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from brauer_osp import cli


def run(capsys, *argv: str):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows_by_r(table):
    return {row["r"]: row for row in table}


class TestDims:
    def test_oxygen_rows(self, capsys):
        code, out, _ = run(capsys, "dims", "--m", "1", "--n", "1", "--r-max", "5", "--json")
        report = json.loads(out)
        rows = rows_by_r(report["table"])
        assert code == 0 and report["schema"] == "1"
        assert (rows[4]["dim_B"], rows[4]["r_c"], rows[4]["ker_dim"]) == (105, 4, 14)
        assert (rows[3]["dim_B"], rows[3]["r_c"], rows[3]["ker_dim"]) == (15, 4, 0)
        assert max(rows) == 5

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "dims", "--m", "0", "--n", "1", "--r", "3", "--csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and len(rows) == 4
        assert rows[2] == {"r": "2", "dim_B": "3", "r_c": "2", "ker_dim": "1"}


class TestKernelRank:
    @pytest.mark.parametrize("mnr,rank,nullity", [((1, 1, 4), 91, 14), ((1, 1, 3), 15, 0), ((0, 2, 3), 14, 1)])
    def test_anchors(self, capsys, mnr, rank, nullity):
        m, n, r = map(str, mnr)
        code, out, _ = run(capsys, "kernel-rank", "--m", m, "--n", n, "--r", r, "--json")
        report = json.loads(out)
        assert code == 0 and report["status"] == "pass"
        row = report["table"][0]
        assert (row["rank"], row["nullity"], row["predicted"]) == (rank, nullity, nullity)
        check = report["checks"][0]
        assert {"name", "status", "expected", "computed", "seconds"} <= set(check)

    def test_budget_skip(self, capsys):
        code, out, _ = run(capsys, "kernel-rank", "--m", "2", "--n", "2", "--r", "5", "--budget-entries", "1000")
        assert code == 2
        assert "skip" in out

    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "kernel-rank", "--m", "0", "--n", "1", "--r", "2")
        assert code == 0
        assert "1/1 checks passed" in out


class TestVerify:
    def test_lz(self, capsys):
        code, out, _ = run(capsys, "verify", "lz", "--json")
        report = json.loads(out)
        assert code == 0
        assert report["checks"] and all(c["status"] == "pass" for c in report["checks"])

    def test_relations_with_numeric_delta(self, capsys):
        code, out, _ = run(capsys, "verify", "relations", "--delta=-3/2", "--r-max", "3", "--json")
        report = json.loads(out)
        assert code == 0 and report["params"]["delta"] == "-3/2"

    def test_deterministic(self, capsys):
        def strip(text):
            report = json.loads(text)
            for c in report["checks"]:
                c.pop("seconds")
            return report

        _, first, _ = run(capsys, "verify", "actions", "--json")
        _, second, _ = run(capsys, "verify", "actions", "--json")
        assert strip(first) == strip(second)
        assert json.loads(first)["seed"] == cli.DEFAULT_SEED


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            ("bogus",),
            ("verify", "nonsense"),
            ("dims", "--json", "--csv"),
            ("verify", "lz", "--csv"),
            ("dims", "--m", "x"),
            (),
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 3
        assert err

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "brauer_osp", "dims", "--m", "1", "--n", "0", "--r-max", "2", "--csv"],
            capture_output=True,
            text=True,
            check=False,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "r,dim_B,r_c,ker_dim"
