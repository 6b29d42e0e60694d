import json
import subprocess
import sys

import pytest

from twistgab.cli import main

FIELD16 = {"p": 2, "e": 1, "m": 4, "top_modulus": [1, 1, 0, 0, 1]}
ALPHA16 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
CODE16 = {"alpha": ALPHA16, "k": 2, "h": 0, "twists": [{"t": 0, "eta": [0, 1, 0, 0]}]}


@pytest.fixture
def files(tmp_path):
    field = tmp_path / "field.json"
    field.write_text(json.dumps(FIELD16))
    code = tmp_path / "code.json"
    code.write_text(json.dumps(CODE16))
    return tmp_path, field, code


def run_main(args):
    return main([str(a) for a in args])


class TestClassify:
    def test_single_code(self, files, capsys):
        _, field, code = files
        assert run_main(["classify", "--field", field, "--code", code]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["schema"] == "twistgab/1"
        entry = report["entries"][0]
        assert entry["routes_agree"] and entry["report"]["d_rank"] == 2
        assert entry["hamming_class"]["label"] == "MDS"

    def test_sweep_to_file(self, files):
        tmp, field, _ = files
        sweep = tmp / "sweep.json"
        sweep.write_text(json.dumps({"alpha": ALPHA16, "k": 2, "h": [0, 1], "ts": [0], "etas": "all"}))
        out = tmp / "report.json"
        assert run_main(["classify", "--field", field, "--sweep", sweep, "--out", out]) == 0
        report = json.loads(out.read_text())
        assert len(report["entries"]) == 30
        assert not any(e["report"]["is_mrd"] for e in report["entries"])

    def test_sweep_with_explicit_eta_list(self, files, capsys):
        tmp, field, _ = files
        sweep = tmp / "explicit.json"
        sweep.write_text(json.dumps({
            "alpha": ALPHA16, "k": 1, "h": [0], "ts": [0, 1],
            "etas": [[[0, 1, 0, 0], [0, 0, 1, 0]], [[1, 0, 0, 0], [1, 1, 0, 0]]],
        }))
        assert run_main(["classify", "--field", field, "--sweep", sweep]) == 0
        report = json.loads(capsys.readouterr().out)
        assert len(report["entries"]) == 2
        assert all(len(e["spec"]["twists"]) == 2 for e in report["entries"])

    def test_sweep_refuses_over_budget_grid(self, files):
        tmp, field, _ = files
        sweep = tmp / "sweep.json"
        sweep.write_text(json.dumps({"alpha": ALPHA16, "k": 2, "h": [0, 1], "ts": [0], "etas": "all"}))
        assert run_main([
            "classify", "--field", field, "--sweep", sweep, "--budget-codewords", "100",
        ]) == 3

    def test_missing_code(self, files):
        _, field, _ = files
        assert run_main(["classify", "--field", field]) == 2

    def test_malformed_json(self, files):
        tmp, field, _ = files
        bad = tmp / "bad.json"
        bad.write_text("{не json")
        assert run_main(["classify", "--field", field, "--code", bad]) == 2

    def test_invalid_spec(self, files):
        tmp, field, _ = files
        code = tmp / "zero_eta.json"
        code.write_text(json.dumps({**CODE16, "twists": [{"t": 0, "eta": [0, 0, 0, 0]}]}))
        assert run_main(["classify", "--field", field, "--code", code]) == 2

    def test_budget_exit_code(self, files):
        _, field, code = files
        assert run_main(["classify", "--field", field, "--code", code, "--budget-codewords", "3"]) == 3

    def test_timings_flag(self, files, capsys):
        _, field, code = files
        assert run_main(["classify", "--field", field, "--code", code, "--timings"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert "timing_ms" in report

    def test_gabidulin_code(self, files, capsys):
        tmp, field, _ = files
        code = tmp / "gab.json"
        code.write_text(json.dumps({"alpha": ALPHA16, "k": 2, "twists": []}))
        assert run_main(["classify", "--field", field, "--code", code]) == 0
        entry = json.loads(capsys.readouterr().out)["entries"][0]
        assert entry["report"]["is_mrd"] and entry["hamming_class"]["label"] == "MDS"

    def test_consistency_failure_exits_4(self, files, monkeypatch):
        from twistgab import cli
        from twistgab.errors import ConsistencyError

        _, field, code = files

        def boom(*args, **kwargs):
            raise ConsistencyError("forced for the exit-code contract")

        monkeypatch.setattr(cli.codes, "classify", boom)
        assert run_main(["classify", "--field", field, "--code", code]) == 4

    def test_audit_counts_present(self, files, capsys):
        _, field, code = files
        assert run_main(["classify", "--field", field, "--code", code]) == 0
        entry = json.loads(capsys.readouterr().out)["entries"][0]
        assert entry["enumerated"]["subspace_representatives"] == 35
        assert entry["enumerated"]["message_classes"] == 17


class TestDeterminism:
    def test_workers_do_not_change_bytes(self, files):
        tmp, field, _ = files
        sweep = tmp / "sweep.json"
        sweep.write_text(json.dumps({"alpha": ALPHA16, "k": 2, "h": [0, 1], "ts": [0], "etas": "all"}))
        outs = []
        for workers in (1, 3, 7):
            out = tmp / f"r{workers}.json"
            assert run_main([
                "classify", "--field", field, "--sweep", sweep,
                "--workers", workers, "--out", out,
            ]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1] == outs[2]

    def test_deephole_seed_stability(self, files):
        tmp, field, code = files
        a = tmp / "a.json"
        b = tmp / "b.json"
        for out in (a, b):
            assert run_main([
                "deephole", "--field", field, "--code", code,
                "--seed", 7, "--grid", 4, "--sample", 8, "--out", out,
            ]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_subprocess_entry_point(self, files):
        # the installed console script must behave like main()
        tmp, field, code = files
        proc = subprocess.run(
            [sys.executable, "-m", "twistgab", "classify", "--field", str(field), "--code", str(code)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["schema"] == "twistgab/1"
        assert "[timing]" in proc.stderr


class TestForbidden:
    def test_one_twist_sets(self, files, capsys):
        _, field, code = files
        assert run_main(["forbidden", "--field", field, "--code", code]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["ratio_set"]["size"] == 15  # every eta forbidden at q = 2
        assert report["omega_one"]["size"] >= 1
        assert "omega_one_prime" in report

    def test_gabidulin_rejected(self, files):
        tmp, field, _ = files
        code = tmp / "gab.json"
        code.write_text(json.dumps({"alpha": ALPHA16, "k": 2, "twists": []}))
        assert run_main(["forbidden", "--field", field, "--code", code]) == 2

    def test_two_twist_witness(self, files, capsys):
        tmp, field, _ = files
        code = tmp / "two.json"
        code.write_text(json.dumps({
            "alpha": ALPHA16, "k": 1, "h": 0,
            "twists": [{"t": 0, "eta": [0, 1, 0, 0]}, {"t": 1, "eta": [0, 1, 0, 0]}],
        }))
        assert run_main(["forbidden", "--field", field, "--code", code]) == 0
        report = json.loads(capsys.readouterr().out)
        assert "omega_witness" in report


class TestConstructAndCovering:
    def test_construct_then_classify_roundtrip(self, tmp_path, capsys):
        field = tmp_path / "f256.json"
        field.write_text(json.dumps({"p": 2, "e": 1, "m": 8}))
        from twistgab.fieldtower import default_tower

        t = default_tower(2, 1, 8)
        basis = []
        for x in t.subfield_elements(4):
            if x and t.fq_rank(basis + [x]) == len(basis) + 1:
                basis.append(x)
            if len(basis) == 4:
                break
        eta = next(x for x in t.nonzero_elements() if not t.subfield_membership(x, 4))
        task = tmp_path / "task.json"
        task.write_text(json.dumps({
            "mode": "nested", "degrees": [4],
            "etas": [t.element_to_json(eta)],
            "alpha": [t.element_to_json(a) for a in basis],
            "k": 2, "h": 0, "ts": [0],
        }))
        spec_out = tmp_path / "constructed.json"
        assert run_main(["construct", "--field", field, "--task", task, "--out", spec_out]) == 0
        constructed = json.loads(spec_out.read_text())
        assert constructed["verified_mrd"] is True
        assert run_main(["classify", "--field", field, "--code", spec_out]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["entries"][0]["report"]["is_mrd"]

    def test_sum_product_free_mode(self, tmp_path):
        field = tmp_path / "f256.json"
        field.write_text(json.dumps({"p": 2, "e": 1, "m": 8}))
        from twistgab.fieldtower import default_tower

        t = default_tower(2, 1, 8)
        basis = []
        for x in t.subfield_elements(4):
            if x and t.fq_rank(basis + [x]) == len(basis) + 1:
                basis.append(x)
            if len(basis) == 4:
                break
        eta1 = next(x for x in t.nonzero_elements() if not t.subfield_membership(x, 4))
        sub = t.subfield_elements(4)
        etas = [eta1, t.mul(sub[2], eta1), t.mul(sub[9], eta1)]
        task = tmp_path / "spf.json"
        task.write_text(json.dumps({
            "mode": "sum-product-free", "s": 4,
            "etas": [t.element_to_json(e) for e in etas],
            "alpha": [t.element_to_json(a) for a in basis],
            "k": 1, "h": 0, "ts": [0, 1, 2],
        }))
        out = tmp_path / "spf_out.json"
        assert run_main(["construct", "--field", field, "--task", task, "--out", out]) == 0
        assert json.loads(out.read_text())["verified_mrd"] is True

    def test_covering_report(self, files, capsys):
        _, field, code = files
        assert run_main(["covering", "--field", field, "--code", code]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["report"]["rho"] == {"value": 2, "method": "exhaustive"}

    def test_covering_budget_gives_bounds_only(self, files, capsys):
        _, field, code = files
        assert run_main([
            "covering", "--field", field, "--code", code, "--budget-ambient", "10",
        ]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["report"]["rho"] is None
        assert report["report"]["lower_bound"]["value"] == 2

    def test_deephole_report(self, files, capsys):
        _, field, code = files
        assert run_main([
            "deephole", "--field", field, "--code", code, "--grid", 6, "--sample", 20,
        ]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["all_families_verified"]
        assert report["sampled_iff_checks"]["agree"] == report["sampled_iff_checks"]["total"]
        assert report["rho"] == {"value": 2, "method": "exhaustive"}
