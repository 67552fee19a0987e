import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from unittest import mock

import sympy

from src.errors import ConsistencyError, DomainError
from src.loci import (AmbientSpec, FormsLocus, FormsLocusConfig, check_conditions, check_grassmann_bundle,
                      generic_polynomials, grassmann_bundle_catalog, hodge_numbers, invariants,
                      polynomial_identity_checks, schur_forms, twisted_coherence)
from src.loci.reports import CLASS_CHECK, INTEGRALITY_CHECK
from src.loci.tables import (FORMS_ROWS, FUNDAMENTAL_CLASS, GRASSMANN_BUNDLE_ROWS, HODGE_ROWS, SCHUR_COFACTOR,
                             SCHUR_FULL)
from src.loci.universal import generic_fundamental_class

P9 = AmbientSpec('projective_space(9)')


def locus(bundle, ambient=P9, twist=None):
    return FormsLocus(FormsLocusConfig(ambient, bundle, twist))


class TestGenericClass(unittest.TestCase):
    def test_fundamental_class(self):
        difference = sympy.expand(generic_fundamental_class().to_expr() - sympy.sympify(FUNDAMENTAL_CLASS))
        self.assertEqual(difference, 0)

    def test_schur_forms(self):
        cofactor, full = schur_forms()
        self.assertEqual({tuple(p): c for p, c in cofactor.items()}, SCHUR_COFACTOR)
        self.assertEqual({tuple(p): c for p, c in full.items()}, SCHUR_FULL)

    def test_generic_polynomials(self):
        entries = generic_polynomials(5)
        self.assertIn('fundamental class', entries)
        self.assertIn('todd polynomial in dimension 5', entries)
        self.assertEqual(len([k for k in entries if k.startswith('c_top')]), 6)

    def test_generic_dimension_range(self):
        with self.assertRaises(DomainError):
            generic_polynomials(4)
        with self.assertRaises(DomainError):
            generic_polynomials(13)


class TestClassification(unittest.TestCase):
    def test_calabi_yau(self):
        c = locus('2*O(1)+4*O').classify()
        self.assertEqual(c.kind, 'cy')
        self.assertFalse(c.degenerate)

    def test_split_bundle_is_degenerate(self):
        c = locus('O(2)+5*O').classify()
        self.assertEqual(c.kind, 'cy')
        self.assertTrue(c.degenerate)

    def test_index_too_large(self):
        c = locus('6*O').classify()
        self.assertEqual(c.kind, 'fano')
        self.assertEqual(c.index, 10)
        self.assertTrue(any('exceeds' in d for d in c.diagnostics))

    def test_negative_canonical(self):
        self.assertEqual(locus('3*O(1)+3*O').classify().kind, 'violated')

    def test_fano_threefold(self):
        c = locus('dual(U)+4*O', AmbientSpec('grassmannian(2,6)')).classify()
        self.assertEqual((c.kind, c.index, c.coindex), ('fano', 1, 3))

    def test_twisted(self):
        c = locus('4*O(1)+2*O', twist='O(-1)').classify()
        self.assertEqual(c.kind, 'twisted')

    def test_rank_must_be_six(self):
        with self.assertRaises(DomainError):
            locus('5*O')

    def test_twist_must_be_a_line(self):
        with self.assertRaises(DomainError):
            locus('6*O', twist='2*O')

    def test_negative_dimension(self):
        with self.assertRaises(DomainError):
            locus('6*O', AmbientSpec('projective_space(3)')).invariants()


class TestInvariants(unittest.TestCase):
    def test_fourfold_in_projective_space(self):
        report = locus('2*O(1)+4*O').invariants()
        self.assertEqual(report.dim, 4)
        self.assertEqual(report.chi_O, 2)
        self.assertTrue(report.nonempty)
        self.assertTrue(report.is_cy)
        self.assertTrue(report.schur_form.startswith('e1*('))

    def test_tower_agrees_with_universal(self):
        forms = locus('2*O(1)+4*O')
        self.assertEqual(forms.fundamental_class('tower'), forms.fundamental_class('universal'))

    def test_closed_form_mismatch_is_reported(self):
        forms = locus('2*O(1)+4*O')
        with mock.patch('src.loci.forms.closed_form_class', return_value=forms.variety.ring.zero()):
            with self.assertRaises(ConsistencyError):
                forms.fundamental_class()

    def test_twisted_class_is_evaluated_once(self):
        forms = locus('4*O(1)+2*O', twist='O(-1)')
        with mock.patch.object(FormsLocus, 'evaluate', autospec=True, side_effect=FormsLocus.evaluate) as evaluate:
            forms.fundamental_class()
        self.assertEqual(evaluate.call_count, 1)

    def test_recorded_checks(self):
        report = locus('2*O(1)+4*O').invariants()
        self.assertEqual(report.checks, {CLASS_CHECK: True, INTEGRALITY_CHECK: True})
        twisted = locus('4*O(1)+2*O', twist='O(-1)').invariants()
        self.assertNotIn(CLASS_CHECK, twisted.checks)
        self.assertTrue(twisted.checks[INTEGRALITY_CHECK])

    def test_twisted_fourfold(self):
        report = locus('4*O(1)+2*O', twist='O(-1)').invariants()
        self.assertEqual(report.chi_O, 2)
        self.assertEqual(report.schur_form, "")

    def test_twisted_coherence(self):
        twisted, plain = twisted_coherence(P9, '2*O+4*O(-1)', 'O(1)')
        self.assertEqual(twisted.chi_O, plain.chi_O)

    def test_fano_degree(self):
        report = locus('dual(U)+4*O', AmbientSpec('grassmannian(2,6)')).invariants()
        self.assertEqual(report.anticanonical_degree, 16)
        self.assertEqual(report.chi_O, 1)
        self.assertIn(1, report.chi_omega)

    def test_functional_entry_points(self):
        cfg = FormsLocusConfig(P9, '2*O(1)+4*O')
        self.assertEqual(check_conditions(cfg).kind, 'cy')
        self.assertEqual(invariants(cfg).chi_O, 2)

    def test_unknown_method(self):
        with self.assertRaises(DomainError):
            locus('2*O(1)+4*O').invariants(method='numeric')

    def test_hodge_needs_threefold(self):
        with self.assertRaises(DomainError):
            locus('2*O(1)+4*O').hodge_numbers()

    def test_report_dict(self):
        data = locus('2*O(1)+4*O').invariants().to_dict()
        self.assertEqual(data['chi_O'], 2)
        self.assertEqual(data['classification']['kind'], 'cy')


class TestHodgeNumbers(unittest.TestCase):
    def test_threefold_in_grassmannian(self):
        row = HODGE_ROWS[0]
        table = hodge_numbers(FormsLocusConfig(AmbientSpec(row.ambient, list(row.cuts)), row.bundle))
        self.assertEqual(table.interval('h11'), row.h11)
        self.assertEqual(table.interval('h21'), row.h21)
        self.assertEqual(table.value('h00'), 1)
        self.assertGreaterEqual(table.divisor_rank, 1)


class TestGrassmannBundles(unittest.TestCase):
    def test_admissible_row(self):
        row = next(r for r in GRASSMANN_BUNDLE_ROWS if r.label == 'f.17')
        check = check_grassmann_bundle(row.label, row.base, row.cuts, row.bundle_f, row.k)
        self.assertTrue(check.admissible)
        self.assertEqual(check.config.bundle, 'dual(Urel)+4*O')
        report = FormsLocus(check.config).invariants(forms=())
        self.assertEqual(report.chi_O, 2)
        self.assertEqual(report.classification.kind, 'cy')

    def test_wrong_rank(self):
        check = check_grassmann_bundle('x', 'projective_space(3)', (), '6*O', 2)
        self.assertFalse(check.admissible)
        self.assertEqual(check.condition, 'rank')

    def test_wrong_determinant(self):
        check = check_grassmann_bundle('x', 'projective_space(3)', (), '5*O', 2)
        self.assertFalse(check.admissible)

    def test_catalog_marks_skips(self):
        checks = {c.label: c for c in grassmann_bundle_catalog()}
        self.assertEqual(checks['f.18'].condition, 'skipped')
        self.assertEqual(checks['f.19'].condition, 'skipped')
        in_scope = [c for c in checks.values() if c.condition != 'skipped']
        self.assertTrue(all(c.admissible for c in in_scope), [c.label for c in in_scope if not c.admissible])


class TestPolynomialIdentities(unittest.TestCase):
    def test_symbolic_checks(self):
        report = polynomial_identity_checks(rows=[r for r in FORMS_ROWS if r.label == 'f.1'])
        self.assertTrue(all(c.passed for c in report.checks), [c.name for c in report.checks if not c.passed])
        formula, direct = report.rows['f.1']
        self.assertEqual(formula, direct)


if __name__ == '__main__':
    unittest.main()
