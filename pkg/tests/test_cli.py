import json
import math

import pytest

from bszego.cli import main, records_to_csv, records_to_json, records_to_text
from bszego.suites import SUITE_CRITERIA, SUITES, VerificationRecord, run_verify


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestRuleCommand:
    def test_simplest_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "rule", "--n", "1", "--m", "1", "--a", "1",
                               "--family", "cos_plus_cosh", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["nodes"] == [0.0]
        assert doc["weights"] == [1.5707963267948966]
        assert doc["exact_degree"] == 1
        assert doc["constraint"] is None
        assert doc["spec"]["family"] == "cos_plus_cosh"

    def test_csv_row_count(self, capsys):
        code, out, _ = run_cli(capsys, "rule", "--n", "3", "--m", "5", "--a", "2",
                               "--family", "cos_plus_cosh", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "node,weight"
        assert len(lines) == 1 + 4  # (m+n)/2 nodes

    def test_constraint_flag_in_schema(self, capsys):
        code, out, _ = run_cli(capsys, "rule", "--n", "3", "--m", "2", "--a", "1",
                               "--family", "cosh_minus_cos_over_t", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["constraint"] == {"p_zero_at_origin": True}

    def test_parity_error_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "rule", "--n", "2", "--m", "3", "--a", "1",
                               "--family", "cos_plus_cosh")
        assert code == 2
        assert "odd" in err

    def test_seventeen_digit_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "rule", "--n", "3", "--m", "5", "--a", "2",
                               "--family", "cos_plus_cosh", "--format", "csv")
        from bszego.quadrature import rule_cos_plus_cosh

        rule = rule_cos_plus_cosh(3, 5, 2.0)
        lines = out.strip().splitlines()[1:]
        for (node, weight), line in zip(zip(rule.nodes, rule.weights), lines):
            ns, ws = line.split(",")
            assert float(ns) == node
            assert float(ws) == weight


class TestVerifyCommand:
    def test_single_suite_green(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "corollary_B", "--format", "text")
        assert code == 0
        assert "6/6 passed" in out

    def test_unknown_suite(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "nope")
        assert code == 2
        assert "unknown suite" in err

    def test_json_report_determinism(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        for p in (p1, p2):
            code, _, _ = run_cli(capsys, "verify", "--suite", "corollary_B",
                                 "--format", "json", "--out", str(p))
            assert code == 0
        d1, d2 = json.loads(p1.read_text()), json.loads(p2.read_text())
        d1.pop("runtimes_ms")
        d2.pop("runtimes_ms")
        assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)

    def test_config_grid_override(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "suites": ["tt"],
            "grids": {"tt": {"n": [3], "m": [3, 5]}},
            "output": {"format": "text"},
        }))
        code, out, _ = run_cli(capsys, "verify", "--config", str(cfg))
        assert code == 0
        assert "2/2 passed" in out

    def test_jobs_flag(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "corollary_B",
                               "--jobs", "4", "--format", "text")
        assert code == 0

    def test_records_independent_of_worker_count(self):
        grids = {"tt": {"n": [3, 5], "m": [3, 5]}}
        a = run_verify("tt", grids=grids, jobs=1)
        b = run_verify("tt", grids=grids, jobs=4)
        assert [r.core_dict() for r in a] == [r.core_dict() for r in b]


class TestReportCommand:
    def _mk_record(self, passed, i=0):
        return VerificationRecord(
            theorem_id="demo", params={"i": i}, closed_form=1.0,
            oracle_value=1.0 if passed else 2.0,
            abs_error=0.0 if passed else 1.0, tol=1e-8, passed=passed, runtime_ms=1,
        )

    def test_empty(self, capsys, tmp_path):
        p = tmp_path / "r.json"
        p.write_text(records_to_json([]))
        code, out, _ = run_cli(capsys, "report", "--in", str(p), "--format", "text")
        assert code == 0
        assert "0/0 passed" in out
        code, out, _ = run_cli(capsys, "report", "--in", str(p), "--format", "csv")
        assert out.startswith("theorem_id,params,")

    def test_all_passing(self, capsys, tmp_path):
        p = tmp_path / "r.json"
        p.write_text(records_to_json([self._mk_record(True, i) for i in range(3)]))
        code, out, _ = run_cli(capsys, "report", "--in", str(p), "--format", "text")
        assert code == 0
        assert "3/3 passed" in out

    def test_mixed_exits_nonzero(self, capsys, tmp_path):
        p = tmp_path / "r.json"
        p.write_text(records_to_json([self._mk_record(True), self._mk_record(False, 1)]))
        code, out, _ = run_cli(capsys, "report", "--in", str(p), "--format", "text")
        assert code == 1
        assert "1/2 passed" in out


class TestRunVerifyGrids:
    def test_quad1_grid_override_gives_27_records(self):
        records = run_verify("quad1", grids={"quad1": {"n": [1, 3, 5], "m": [1, 3, 5]}})
        assert len(records) == 27
        assert all(r.passed for r in records)

    def test_353m_grid_override(self):
        records = run_verify("353m", grids={"353m": {"n": [2, 4], "k": [1, 3], "nu": []}})
        assert len(records) == 4
        assert all(r.passed for r in records)
        assert all(abs(r.closed_form - math.pi / 4) < 1e-15 for r in records)

    def test_corollary_a_value_independent_of_params(self):
        records = run_verify("corollary_A")
        assert all(r.closed_form == math.pi / 4 for r in records)
        values = {round(r.oracle_value, 10) for r in records}
        assert values == {round(math.pi / 4, 10)}


class TestRegistry:
    def test_every_suite_covers_a_criterion(self):
        assert set(SUITE_CRITERIA) == set(SUITES)
        for suite, crit in SUITE_CRITERIA.items():
            assert 1 <= crit <= 16

    def test_all_sixteen_criteria_covered(self):
        assert set(SUITE_CRITERIA.values()) == set(range(1, 17))

    def test_record_invariant(self):
        for r in run_verify("corollary_B"):
            assert r.passed == (r.abs_error <= r.tol)
            assert math.isfinite(r.closed_form)

    def test_renderers(self):
        records = run_verify("corollary_B")
        assert "corollary_B" in records_to_csv(records)
        assert "passed" in records_to_text(records)
        doc = json.loads(records_to_json(records))
        assert doc["summary"]["total"] == len(records)
        assert len(doc["runtimes_ms"]) == len(records)
        assert "runtime" not in json.dumps(doc["records"])
