import json
import os
import tempfile
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings

from homspace.models import ReportRow, VerificationRun
from homspace.reports import Inequality, VerificationReport


def run(*args):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err)
    return out.getvalue(), err.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line]


class TableCommandTests(SimpleTestCase):
    def test_exceptional_floors(self):
        out, _ = run("table", "3", "--format", "table")
        e8 = next(line for line in out.splitlines() if line.startswith("E8"))
        self.assertIn("114 168 190 192 222 228 238 240", e8)
        g2 = next(line for line in out.splitlines() if line.startswith("G2"))
        self.assertTrue(g2.endswith("-"))

    def test_table_output_is_stable(self):
        self.assertEqual(run("table", "3", "--format", "table"), run("table", "3", "--format", "table"))

    def test_maximal_dimensions(self):
        out, _ = run("table", "2", "--format", "table")
        self.assertIn("133 / E7", out)
        self.assertIn("21 / B3,C3", out)
        records = json_lines(run("table", "2", "--format", "json")[0])
        self.assertEqual(len(records), 7)
        self.assertEqual(records[5]["D^s / types"], "78 / B6,C6,E6")
        self.assertEqual(records[5]["note"], "E6 ties with B6,C6")
        self.assertEqual([r["note"] for r in records if r["rank"] != "6"], [""] * 6)

    def test_simple_algebras_up_to_cap(self):
        records = json_lines(run("table", "1", "--max-rank", "2", "--format", "json")[0])
        rows = {r["algebra"]: r for r in records}
        self.assertEqual(rows["A_l"]["l=2"], "8")
        self.assertEqual(rows["A_l"]["dim"], "l^2 + 2l")
        self.assertEqual(rows["D_l"]["l=2"], "-")
        self.assertEqual(rows["G2"]["l=2"], "14")
        self.assertEqual(rows["E8"]["l=2"], "-")

    def test_csv_header(self):
        out, _ = run("table", "3", "--format", "csv")
        self.assertEqual(out.splitlines()[0], "algebra,t=1,t=2,t=3,t=4,t=5,t=6,t=7,t=8")

    def test_json_is_default_off_a_terminal(self):
        records = json_lines(run("table", "3")[0])
        self.assertEqual(records[-1]["algebra"], "G2")

    def test_unknown_table(self):
        with self.assertRaises(CommandError) as ctx:
            run("table", "4")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_pdf_export(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "floors.pdf")
            _, err = run("table", "3", "--format", "table", "--pdf", path)
            with open(path, "rb") as fh:
                self.assertEqual(fh.read(4), b"%PDF")
        self.assertIn("floors.pdf", err)


class FlagCommandTests(SimpleTestCase):
    def test_full_flag(self):
        (record,) = json_lines(run("flag", "A3", "--parabolic", "", "--format", "json")[0])
        self.assertEqual((record["dim_x"], record["picard_rank"]), (6, 3))
        self.assertEqual(record["linear_slack"], "0")
        self.assertEqual(record["sqrt_slack"], 3)

    def test_projective_line(self):
        (record,) = json_lines(run("flag", "A1", "--format", "json")[0])
        self.assertEqual((record["dim_x"], record["picard_rank"]), (1, 1))

    def test_point(self):
        (record,) = json_lines(run("flag", "E6", "--parabolic", "1,2,3,4,5,6", "--format", "json")[0])
        self.assertEqual((record["dim_x"], record["picard_rank"]), (0, 0))
        self.assertIsNone(record["linear_slack"])

    def test_text_form(self):
        out, _ = run("flag", "B3", "--parabolic", "2,3", "--format", "table")
        self.assertIn("parabolic", out)
        self.assertIn("{2,3}", out)

    def test_bad_index_is_a_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run("flag", "A3", "--parabolic", "1,9")
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("9", str(ctx.exception))

    def test_bad_type_is_a_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run("flag", "Q7")
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("Q7", str(ctx.exception))

    def test_non_ascii_digit_is_a_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run("flag", "A3", "--parabolic", "1,\N{SUPERSCRIPT TWO}")
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("\N{SUPERSCRIPT TWO}", str(ctx.exception))

    @override_settings(HOMSPACE_MAX_RANK=6)
    def test_rank_above_cap_is_a_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            run("flag", "A5000")
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("HOMSPACE_MAX_RANK", str(ctx.exception))
        (record,) = json_lines(run("flag", "D6", "--format", "json")[0])
        self.assertEqual(record["picard_rank"], 6)


class VerifyCommandTests(SimpleTestCase):
    def test_projective_type_a(self):
        out, err = run("verify", "--projective", "--type", "A", "--max-rank", "8", "--format", "json")
        records = json_lines(out)
        instances = {r["instance_id"] for r in records}
        self.assertEqual(len(instances), sum(2**l - 1 for l in range(1, 9)))
        self.assertTrue(all(r["passed"] for r in records))
        self.assertIn("0 failed", err)

    def test_repeated_runs_are_identical(self):
        args = ("verify", "--all", "--type", "B", "--type", "G2", "--max-rank", "4", "--format", "json")
        self.assertEqual(run(*args), run(*args))
        product = ("verify", "--projective", "--product", "A2,A2,A2", "--format", "json")
        with self.settings(HOMSPACE_SAMPLE_LIMIT=20, HOMSPACE_SAMPLE_SEED=5):
            self.assertEqual(run(*product), run(*product))

    def test_affine_exceptional(self):
        out, _ = run("verify", "--affine", "--exceptional", "--max-rank", "8", "--format", "json")
        records = json_lines(out)
        self.assertEqual(len({r["instance_id"] for r in records}), 28)
        for record in records:
            self.assertEqual(VerificationReport.from_dict(record).to_dict(), record)

    def test_family_needs_higher_rank(self):
        with self.assertRaises(CommandError) as ctx:
            run("verify", "--projective", "--type", "D", "--max-rank", "2")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_unknown_family(self):
        with self.assertRaises(CommandError) as ctx:
            run("verify", "--type", "Z")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_product(self):
        out, _ = run("verify", "--projective", "--product", "A1,A1", "--format", "csv")
        lines = out.splitlines()
        self.assertEqual(lines[0], "instance_id,dim_x,picard_bound,inequality,lhs,rhs,passed,slack,note")
        self.assertIn("A1xA1/I={};{},2,2,cor_proj_ss,2,2,True,0,", lines)

    def test_bad_product(self):
        with self.assertRaises(CommandError) as ctx:
            run("verify", "--product", "A1,X9")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_failed_row_exits_with_one(self):
        failing = [VerificationReport.compare("A1/I={}", 1, 1, Inequality.THM_PROJ_SQRT, 4, 2)]
        with mock.patch("homspace.management.commands.verify.collect_reports", return_value=failing):
            with self.assertRaises(CommandError) as ctx:
                run("verify", "--projective", "--type", "A", "--max-rank", "1", "--format", "json")
        self.assertEqual(ctx.exception.returncode, 1)

    def test_pdf_report(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "g2")
            _, err = run("verify", "--affine", "--type", "G2", "--max-rank", "2", "--format", "json", "--pdf", path)
            with open(path + ".pdf", "rb") as fh:
                self.assertEqual(fh.read(4), b"%PDF")
        self.assertIn("g2.pdf", err)


class VerdictCommandTests(SimpleTestCase):
    def test_verdicts(self):
        self.assertEqual(run("verdict", "--dim", "3", "--rho", "5", "--format", "table")[0], "excluded\n")
        self.assertEqual(run("verdict", "--dim", "5", "--rho", "5", "--format", "table")[0], "not-excluded\n")
        self.assertEqual(run("verdict", "--dim", "14", "--rho", "2", "--format", "table")[0], "not-excluded\n")

    def test_json(self):
        (record,) = json_lines(run("verdict", "--dim", "3", "--rho", "5")[0])
        self.assertEqual(record, {"dim_x": 3, "rho": 5, "verdict": "excluded"})

    def test_non_positive_input(self):
        with self.assertRaises(CommandError) as ctx:
            run("verdict", "--dim", "0", "--rho", "1")
        self.assertEqual(ctx.exception.returncode, 2)


class SavedRunTests(TestCase):
    def test_save_round_trips_rows(self):
        out, err = run("verify", "--affine", "--exceptional", "--max-rank", "8", "--format", "json", "--save")
        run_obj = VerificationRun.objects.get()
        self.assertTrue(run_obj.passed)
        self.assertEqual(run_obj.total, 28 * 5)
        self.assertEqual(run_obj.rows.count(), 28 * 5)
        self.assertIn(f"saved run {run_obj.pk}", err)

        first = json_lines(out)[0]
        stored = ReportRow.objects.filter(run=run_obj).first()
        self.assertEqual(stored.to_report().to_dict(), first)
        self.assertEqual(run_obj.scope, "affine types=E6,E7,E8,F4,G2")

    def test_failed_runs_are_recorded(self):
        failing = [VerificationReport.compare("A1/I={}", 1, 1, Inequality.THM_PROJ_SQRT, 4, 2)]
        with mock.patch("homspace.management.commands.verify.collect_reports", return_value=failing):
            with self.assertRaises(CommandError):
                run("verify", "--projective", "--type", "A", "--max-rank", "1", "--format", "json", "--save")
        self.assertEqual(VerificationRun.objects.get().failed, 1)
