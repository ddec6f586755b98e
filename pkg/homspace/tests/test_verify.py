from fractions import Fraction

from django.test import SimpleTestCase

from homspace.exceptions import DomainError
from homspace.reports import Inequality, SweepSummary, VerificationReport
from homspace.rootsys import Family, SimpleType, all_types
from homspace.verify import (
    Mode,
    SemisimpleProduct,
    SweepOptions,
    Verdict,
    affine_floor,
    collect_reports,
    flag_variety_verdict,
    verify_affine_simple,
    verify_projective_simple,
    verify_semisimple_product,
)


def rows_for(reports, instance_id, inequality):
    return [r for r in reports if r.instance_id == instance_id and r.inequality == inequality]


class ReportTests(SimpleTestCase):
    def test_strict_inequality_fails_on_equality(self):
        row = VerificationReport.compare("x", 2, 2, Inequality.THM_PROJ_SQRT, 4, 4)
        self.assertFalse(row.passed)
        self.assertEqual(row.slack, 0)

    def test_non_strict_inequality_passes_on_equality(self):
        row = VerificationReport.compare("x", 6, 3, Inequality.THM_PROJ_LINEAR, 3, Fraction(12, 4))
        self.assertTrue(row.passed)
        self.assertEqual(row.slack, 0)

    def test_dict_form(self):
        row = VerificationReport.compare("E6/t=1", 22, 1, Inequality.THM_AFFINE, 1, Fraction(22, 7), note="n")
        data = row.to_dict()
        self.assertEqual(list(data), ["instance_id", "dim_x", "picard_bound", "inequality", "lhs", "rhs",
                                      "passed", "slack", "note"])
        self.assertEqual(data["rhs"], "22/7")
        self.assertEqual(VerificationReport.from_dict(data), row)

    def test_summary(self):
        reports = [
            VerificationReport.compare("a", 2, 1, Inequality.PROP1, 1, 2),
            VerificationReport.compare("a", 2, 1, Inequality.COR_HALF, 1, 1),
            VerificationReport.compare("b", 1, 1, Inequality.THM_PROJ_SQRT, 1, 1),
        ]
        summary = SweepSummary.of(reports)
        self.assertEqual((summary.total, summary.failed, summary.instances), (3, 1, 2))
        self.assertFalse(summary.passed)
        self.assertEqual(list(summary.min_slack), [Inequality.PROP1, Inequality.COR_HALF, Inequality.THM_PROJ_SQRT])
        self.assertIn("1 failed", summary.line())


class ProjectiveSweepTests(SimpleTestCase):
    def test_complete_flag_attains_linear_bound(self):
        for n in range(2, 9):
            reports = verify_projective_simple(SimpleType(Family.A, n - 1))
            (row,) = rows_for(reports, f"A{n - 1}/I={{}}", Inequality.THM_PROJ_LINEAR)
            self.assertEqual(row.slack, 0)
            self.assertTrue(row.passed)

    def test_projective_line(self):
        reports = verify_projective_simple(SimpleType(Family.A, 1))
        (row,) = rows_for(reports, "A1/I={}", Inequality.THM_PROJ_SQRT)
        self.assertEqual((row.lhs, row.rhs), (1, 2))
        self.assertTrue(row.passed)

    def test_e8_proper_subsets(self):
        reports = verify_projective_simple(SimpleType(Family.E8))
        self.assertEqual(len({r.instance_id for r in reports}), 255)
        self.assertTrue(all(r.passed for r in reports))

    def test_all_families_up_to_rank_8(self):
        reports = collect_reports(all_types(8), [Mode.PROJECTIVE])
        self.assertEqual([r for r in reports if not r.passed], [])
        self.assertEqual(len({r.instance_id.split("/")[0] for r in reports}), 8 + 7 + 7 + 6 + 5)

    def test_simple_sweeps_ignore_sample_limit(self):
        options = SweepOptions(sample_limit=1, seed=3)
        e6 = SimpleType(Family.E6)
        reports = verify_projective_simple(e6, options)
        self.assertEqual(reports, verify_projective_simple(e6))
        self.assertEqual(len({r.instance_id for r in reports}), 63)
        f4 = SimpleType(Family.F4)
        self.assertEqual(verify_affine_simple(f4, options), verify_affine_simple(f4))


class AffineSweepTests(SimpleTestCase):
    def test_g2_floors(self):
        reports = verify_affine_simple(SimpleType(Family.G2))
        floors = [r.dim_x for r in reports if r.inequality == Inequality.THM_AFFINE]
        self.assertEqual(floors, [10, 12])
        self.assertTrue(all(r.passed for r in reports))

    def test_f4_and_e6_full_torus(self):
        (f4,) = rows_for(verify_affine_simple(SimpleType(Family.F4)), "F4/t=4", Inequality.THM_AFFINE)
        self.assertEqual((f4.dim_x, f4.picard_bound), (48, 4))
        (e6,) = rows_for(verify_affine_simple(SimpleType(Family.E6)), "E6/t=6", Inequality.THM_AFFINE)
        self.assertEqual(e6.dim_x, 72)
        self.assertGreaterEqual(e6.dim_x, 6 * 7)

    def test_classical_delegates_to_pattern_sweep(self):
        reports = verify_affine_simple(SimpleType(Family.C, 4))
        self.assertEqual([r.instance_id for r in reports[::5]], ["C4/k=1", "C4/k=2", "C4/k=3", "C4/k=4"])

    def test_exceptional_grid(self):
        types = [SimpleType(f) for f in (Family.E6, Family.E7, Family.E8, Family.F4, Family.G2)]
        reports = collect_reports(types, [Mode.AFFINE])
        self.assertEqual(len({r.instance_id for r in reports}), 28)
        self.assertTrue(all(r.passed for r in reports))

    def test_affine_floor(self):
        self.assertEqual(affine_floor(SimpleType(Family.A, 1), 0), 0)
        self.assertEqual(affine_floor(SimpleType(Family.A, 1), 1), 2)
        self.assertEqual(affine_floor(SimpleType(Family.E6), 6), 72)


class ProductSweepTests(SimpleTestCase):
    def test_parse(self):
        product = SemisimpleProduct.parse("A1, A1,B2")
        self.assertEqual(product.label, "A1xA1xB2")
        self.assertEqual(product.min_rank, 1)

    def test_empty_product_rejected(self):
        with self.assertRaises(DomainError):
            SemisimpleProduct.parse("")

    def test_affine_quadric_product(self):
        n = 3
        product = SemisimpleProduct((SimpleType(Family.A, 1),) * n)
        reports = verify_semisimple_product(product, Mode.AFFINE)
        (row,) = rows_for(reports, "A1xA1xA1/t=1;1;1", Inequality.COR_SS)
        self.assertEqual((row.dim_x, row.picard_bound), (2 * n, n))
        self.assertEqual(row.slack, 0)
        self.assertTrue(all(r.passed for r in reports))

    def test_product_of_projective_lines(self):
        n = 4
        product = SemisimpleProduct((SimpleType(Family.A, 1),) * n)
        reports = verify_semisimple_product(product, Mode.PROJECTIVE)
        (row,) = rows_for(reports, "A1xA1xA1xA1/I={};{};{};{}", Inequality.COR_PROJ_SS)
        self.assertEqual((row.dim_x, row.picard_bound), (n, n))
        self.assertEqual(row.slack, 0)
        self.assertTrue(all(r.passed for r in reports))

    def test_single_factor_reduces_to_simple_sweep(self):
        stype = SimpleType(Family.B, 3)
        product = verify_semisimple_product(SemisimpleProduct((stype,)), Mode.PROJECTIVE)
        simple = verify_projective_simple(stype)
        ss_bounds = {r.instance_id: r.rhs for r in product if r.inequality == Inequality.COR_PROJ_SS}
        linear = {r.instance_id: r.rhs for r in simple if r.inequality == Inequality.THM_PROJ_LINEAR}
        self.assertEqual(ss_bounds, linear)

    def test_single_factor_affine_matches_simple_floors(self):
        stype = SimpleType(Family.A, 3)
        product = verify_semisimple_product(SemisimpleProduct((stype,)), Mode.AFFINE)
        simple = verify_affine_simple(stype)
        ss_bounds = [r.rhs for r in product if r.inequality == Inequality.COR_SS]
        linear = [r.rhs for r in simple if r.inequality == Inequality.THM_AFFINE]
        self.assertEqual(ss_bounds, linear)

    def test_sampling_is_deterministic(self):
        product = SemisimpleProduct.parse("A2,A2,A2")
        options = SweepOptions(sample_limit=10, seed=7)
        with self.assertLogs("homspace.verify", level="WARNING"):
            first = verify_semisimple_product(product, Mode.PROJECTIVE, options)
        second = verify_semisimple_product(product, Mode.PROJECTIVE, options)
        self.assertEqual(first, second)
        self.assertLessEqual(len({r.instance_id for r in first}), 10)
        self.assertTrue(all(r.passed for r in first))

    def test_exhaustive_below_limit(self):
        product = SemisimpleProduct.parse("A2,A2")
        reports = verify_semisimple_product(product, Mode.PROJECTIVE, SweepOptions(sample_limit=16, seed=0))
        self.assertEqual(len({r.instance_id for r in reports}), 15)


class VerdictTests(SimpleTestCase):
    def test_verdicts(self):
        self.assertEqual(flag_variety_verdict(3, 5), Verdict.EXCLUDED)
        self.assertEqual(flag_variety_verdict(5, 5), Verdict.NOT_EXCLUDED)
        self.assertEqual(flag_variety_verdict(6, 3), Verdict.NOT_EXCLUDED)
        self.assertEqual(Verdict.NOT_EXCLUDED.value, "not-excluded")

    def test_non_positive_input_rejected(self):
        for dim_x, rho in ((0, 1), (1, 0), (-2, 3)):
            with self.assertRaises(DomainError):
                flag_variety_verdict(dim_x, rho)
