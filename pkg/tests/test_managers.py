import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import json
from fractions import Fraction

from src.bott.cohomology import BottResult
from src.errors import OdlError
from src.loci.reports import Classification, LocusReport
from src.loci.tables import FORMS_ROWS, NilpotentRow
from src.managers import FAIL, PASS, SKIPPED, SUITES, ReportManager, RowVerdict, SuiteResult, VerificationManager
from src.managers.verification_manager import (_run_job, compare, forms_row, nilpotent_row, numerology_rows,
                                               pushforward_rows, serre_rows)


class TestVerdicts(unittest.TestCase):
    def test_compare(self):
        self.assertEqual(compare('s', 'a', {'chi_O': 2}, {'chi_O': Fraction(2)}).verdict, PASS)
        verdict = compare('s', 'b', {'chi_O': 2, 'kind': 'cy'}, {'chi_O': 3, 'kind': 'cy'})
        self.assertEqual(verdict.verdict, FAIL)
        self.assertEqual(verdict.message, "chi_O: expected 2, got 3")

    def test_row_dict(self):
        data = RowVerdict('s', 'x', PASS, {'chi': Fraction(1, 2)}, {'chi': Fraction(1, 2)}).to_dict()
        self.assertEqual(data['expected'], {'chi': '1/2'})
        self.assertNotIn('suite', data)

    def test_suite_counts(self):
        result = SuiteResult('s', [RowVerdict('s', 'a', PASS), RowVerdict('s', 'b', SKIPPED)], 3.5)
        self.assertTrue(result.passed)
        self.assertEqual(result.count(SKIPPED), 1)
        data = result.to_dict()
        self.assertEqual(data['counts'], {PASS: 1, FAIL: 0, SKIPPED: 1})
        self.assertNotIn('elapsed', data)
        result.rows.append(RowVerdict('s', 'c', FAIL))
        self.assertFalse(result.passed)


class TestRows(unittest.TestCase):
    def test_skipped_forms_row(self):
        skipped = [r for r in FORMS_ROWS if r.skip]
        self.assertEqual(len(skipped), 2)
        for row in skipped:
            verdicts = forms_row('table2', row)
            self.assertEqual(verdicts[0].verdict, SKIPPED)
            self.assertEqual(verdicts[0].message, row.skip)

    def test_numerology(self):
        self.assertTrue(all(v.verdict == PASS for v in numerology_rows()))

    def test_pushforwards_of_trivial_bundle(self):
        verdicts = pushforward_rows('O')
        self.assertEqual(len(verdicts), 6)
        self.assertTrue(all(v.verdict == PASS for v in verdicts), [v.message for v in verdicts])

    def test_serre_duality_on_several_ambients(self):
        verdicts = serre_rows()
        self.assertTrue(all(v.verdict == PASS for v in verdicts), [v.message for v in verdicts if v.message])
        for name in ('P5', 'Gr(2,7)'):
            rows = [v for v in verdicts if v.label.startswith(f"Serre duality {name} ")]
            self.assertGreaterEqual(len(rows), 20, name)

    def test_failure_becomes_verdict(self):
        row = NilpotentRow('bad', 4, 'projective_space(7)', (), '4*O', 'O(1)', {'degree': 10})
        verdicts = _run_job('table5', (nilpotent_row, ('table5', row, 1)))
        self.assertEqual(len(verdicts), 1)
        self.assertEqual((verdicts[0].label, verdicts[0].verdict), ('bad', FAIL))


class TestVerificationManager(unittest.TestCase):
    def setUp(self):
        self.manager = VerificationManager()

    def test_names(self):
        self.assertEqual(self.manager.names('all'), SUITES)
        self.assertEqual(self.manager.names('table5'), ('table5',))

    def test_orbit_data(self):
        results = self.manager.run('table4-data')
        self.assertEqual(len(results), 1)
        result = results[0]
        self.assertEqual(result.count(PASS), 16)
        self.assertTrue(self.manager.passed)
        double = [r.label for r in result.rows if 'degree 2 collapsing' in r.message]
        self.assertEqual(double, ['(4)', '(11)', '(15)'])

    def test_unknown_suite(self):
        with self.assertRaises(OdlError):
            self.manager.run('table9')


class TestReportManager(unittest.TestCase):
    def setUp(self):
        self.reports = ReportManager(indent=2)

    def report(self):
        return LocusReport('f.1', 'projective_space(9)', '2*O(1)+4*O', 4, 'K = 0', Classification('cy', 0),
                           chi_O=Fraction(2), notes=['general section'])

    def test_locus_json(self):
        data = json.loads(self.reports.locus_json(self.report(), [{'chi_O': PASS}]))
        self.assertEqual(data['engine'], 'odl')
        self.assertEqual(data['report']['chi_O'], 2)
        self.assertEqual(data['report']['assumptions'], ['general section'])
        self.assertEqual(data['report']['verdicts'], [{'chi_O': PASS}])

    def test_locus_text(self):
        text = self.reports.locus_text(self.report(), elapsed=1.5)
        self.assertIn("chi(O)         2", text)
        self.assertIn("* general section", text)
        self.assertNotIn("1.50s", self.reports.locus_text(self.report()))

    def test_suites_json_is_deterministic(self):
        first = [SuiteResult('s', [RowVerdict('s', 'a', PASS, {'n': 1}, {'n': 1})], 0.25)]
        second = [SuiteResult('s', [RowVerdict('s', 'a', PASS, {'n': 1}, {'n': 1})], 9.0)]
        self.assertEqual(self.reports.suites_json(first), self.reports.suites_json(second))
        self.assertTrue(json.loads(self.reports.suites_json(first))['passed'])

    def test_suites_text(self):
        result = SuiteResult('s', [RowVerdict('s', 'a', SKIPPED, message='out of scope')], 0.0)
        text = self.reports.suites_text([result])
        self.assertTrue(text.startswith("[s] PASS: 0 passed, 0 failed, 1 skipped"))
        self.assertIn("out of scope", text)

    def test_bott(self):
        self.assertEqual(self.reports.bott_text('P5', (-3, 0, 0, 0, 0, 0), None),
                         "P5, weight -3,0,0,0,0,0: acyclic\n")
        result = BottResult(0, ((2, 0, 0, 0, 0, 0),), 21)
        data = json.loads(self.reports.bott_json('P5', (2, 0, 0, 0, 0, 0), result))
        self.assertEqual(data['bott']['dimension'], 21)
        self.assertFalse(data['bott']['acyclic'])
        self.assertIn("dimension 21", self.reports.bott_text('P5', (2, 0, 0, 0, 0, 0), result))

    def test_polynomials(self):
        entries = {'fundamental class': 'e1*(e1**4)'}
        self.assertEqual(self.reports.polynomials_text(entries), "fundamental class:\n  e1*(e1**4)\n")
        self.assertEqual(json.loads(self.reports.polynomials_json(entries))['polynomials'], entries)


if __name__ == '__main__':
    unittest.main()
