import io
import json
from contextlib import redirect_stderr, redirect_stdout

from abeliancft.cli import main
from abeliancft.survey import CSV_VERSION_LINE


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


class TestFieldVerb:
    def test_quadratic_report(self):
        code, out, _ = run_cli(["field", "quad:d=-5"])
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == "abelian-cft/report-v1"
        assert report["degree"] == 2
        assert report["conductor"] == 20
        assert report["discriminant"] == 20
        assert report["quadratic"]["h"] == 2
        assert report["polya_order"] == 2
        assert report["genus_degree"] == 2
        assert report["t_bound"]["t"] == 4
        verdicts = {c["theorem"]: c["verdict"] for c in report["certificates"]}
        assert verdicts["cor-4.4"] == "abelian"
        assert verdicts["cor-3.9"] == "bound_holds"
        assert verdicts["thm-1.1"] == "bound_holds"

    def test_cyclotomic_report(self):
        code, out, _ = run_cli(["field", "cyclotomic:m=5", "--h", "1"])
        assert code == 0
        report = json.loads(out)
        assert report["degree"] == 4
        assert report["t_bound"]["t"] == 1
        verdicts = {c["theorem"]: c["verdict"] for c in report["certificates"]}
        assert verdicts["cor-3.2"] == "abelian"

    def test_cubic_subfield_report(self):
        code, out, _ = run_cli(["field", "m=63;gens=2,62", "--h", "3"])
        assert code == 0
        report = json.loads(out)
        assert report["degree"] == 3
        assert report["genus_degree"] == 3
        assert report["predicted_class_group"]["invariant_factors"] == [3]
        verdicts = {c["theorem"]: c["verdict"] for c in report["certificates"]}
        assert verdicts["thm-4.1"] == "abelian"

    def test_parse_error_exit_code(self):
        code, _, err = run_cli(["field", "bogus"])
        assert code == 2
        assert "error" in err

    def test_out_file(self, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run_cli(["--out", str(path), "field", "quad:d=221"])
        assert code == 0 and out == ""
        report = json.loads(path.read_text())
        assert report["quadratic"]["h"] == 2
        assert report["quadratic"]["unit_norm"] == 1


class TestSurveyVerb:
    def test_csv_output(self, tmp_path):
        path = tmp_path / "rows.csv"
        code, _, err = run_cli(
            [
                "--out",
                str(path),
                "survey",
                "--mode",
                "imaginary_quadratic",
                "--min",
                "-100",
                "--max",
                "-3",
            ]
        )
        assert code == 0
        summary = json.loads(err)
        lines = path.read_text().splitlines()
        assert lines[0] == CSV_VERSION_LINE
        assert lines[1].startswith("d,D,r,h,")
        assert summary["rows"] == len(lines) - 2

    def test_jsonl_output(self, tmp_path):
        path = tmp_path / "rows.jsonl"
        code, _, _ = run_cli(
            [
                "--out",
                str(path),
                "survey",
                "--mode",
                "real_quadratic",
                "--min",
                "2",
                "--max",
                "120",
                "--format",
                "jsonl",
            ]
        )
        assert code == 0
        rows = [json.loads(line) for line in path.read_text().splitlines()]
        assert all(row["verdict"] in ("abelian", "non_abelian") for row in rows)
        d221 = [row for row in rows if row["D"] == 5]
        assert d221 and d221[0]["h"] == 1

    def test_worker_determinism_small(self, tmp_path):
        paths = []
        for workers, name in ((1, "one.csv"), (3, "three.csv")):
            path = tmp_path / name
            code, _, _ = run_cli(
                [
                    "--workers",
                    str(workers),
                    "--out",
                    str(path),
                    "survey",
                    "--mode",
                    "imaginary_quadratic",
                    "--min",
                    "-3000",
                    "--max",
                    "-3",
                ]
            )
            assert code == 0
            paths.append(path.read_bytes())
        assert paths[0] == paths[1]

    def test_mode_range_mismatch(self):
        code, _, _ = run_cli(
            ["survey", "--mode", "imaginary_quadratic", "--min", "3", "--max", "10"]
        )
        assert code == 2


class TestOtherVerbs:
    def test_tbound(self):
        code, out, _ = run_cli(["tbound", "--m", "21", "--ell", "3"])
        assert code == 0
        payload = json.loads(out)
        assert payload["t_bound"]["t"] == 4
        assert payload["ell_certificate"]["verdict"] == "excluded"

    def test_cubic(self):
        code, out, _ = run_cli(["cubic", "--c", "121", "--h", "5"])
        payload = json.loads(out)
        assert payload["family_certificate"]["verdict"] == "s3"
        assert payload["pht2_certificate"]["verdict"] == "applies"
        assert payload["pht1_certificate"]["verdict"] == "applies"

    def test_cubic_h14_documents_failure(self):
        code, out, _ = run_cli(["cubic", "--c", "59", "--h", "14"])
        payload = json.loads(out)
        assert payload["family_certificate"]["verdict"] == "s3"
        assert payload["pht2_certificate"]["verdict"] == "does_not_apply"

    def test_n1bound(self):
        code, out, _ = run_cli(
            [
                "n1bound",
                "--n", "2", "--h", "1", "--m", "4", "--m1", "1",
                "--po-k", "1", "--po-rel", "1",
            ]
        )
        payload = json.loads(out)
        witnesses = dict(
            (k, v) for k, v in payload["certificate"]["witnesses"]
        )
        assert witnesses["bound"] == "2"

    def test_autorder(self):
        code, out, _ = run_cli(["autorder", "2", "4"])
        payload = json.loads(out)
        assert payload["aut_order"] == 8
        code, out, _ = run_cli(["autorder", "3", "2"])
        payload = json.loads(out)
        assert payload["invariant_factors"] == [6]
        assert payload["aut_order"] == 2

    def test_usage_error(self):
        code, _, _ = run_cli(["tbound"])
        assert code == 2
        code, _, _ = run_cli([])
        assert code == 2

    def test_compact_json_flag(self):
        code, out, _ = run_cli(["--json", "tbound", "--m", "5"])
        assert code == 0 and "\n" not in out.strip()

    def test_global_flags_after_verb(self):
        code, out, _ = run_cli(["tbound", "--m", "5", "--json"])
        assert code == 0 and "\n" not in out.strip()

    def test_out_before_verb(self, tmp_path):
        path = tmp_path / "payload.json"
        code, out, _ = run_cli(["--out", str(path), "tbound", "--m", "21"])
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["t_bound"]["t"] == 4
