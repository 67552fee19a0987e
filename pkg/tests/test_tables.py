import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import sympy

from src.symfun import Partition, SchurVector, n_value, schur_product
from src.loci.tables import (CTOP_EXPANSION, FANO4_ROWS, FORMS_FANO3, FORMS_ROWS, FOURFOLDS, FUNDAMENTAL_CLASS,
                             GRASSMANN_BUNDLE_ROWS, HODGE_ROWS, N_VALUE_EXAMPLES, NILPOTENT_FANO3, NILPOTENT_ROWS,
                             ORBIT_ROWS, PUSHFORWARD_TABLES, SCHUR_COFACTOR, SCHUR_FULL, SPORADIC_BUNDLES,
                             SPORADIC_FORMS, forms_rows)


class TestGoldenRows(unittest.TestCase):
    def test_labels_are_unique(self):
        rows = (HODGE_ROWS + FORMS_ROWS + GRASSMANN_BUNDLE_ROWS + SPORADIC_BUNDLES + SPORADIC_FORMS + FORMS_FANO3
                + NILPOTENT_FANO3 + NILPOTENT_ROWS + FANO4_ROWS + FOURFOLDS)
        labels = [r.label for r in rows]
        self.assertEqual(len(labels), len(set(labels)))

    def test_table_sizes(self):
        self.assertEqual(len(HODGE_ROWS), 5)
        self.assertEqual(len(FORMS_ROWS), 11)
        self.assertEqual(len(forms_rows(skip_out_of_scope=True)), 9)
        self.assertEqual(len(GRASSMANN_BUNDLE_ROWS), 27)
        self.assertEqual([r.label for r in GRASSMANN_BUNDLE_ROWS if r.skip], ['f.18', 'f.19'])

    def test_orbit_rows(self):
        self.assertEqual([r.id for r in ORBIT_ROWS], list(range(1, 17)))
        self.assertEqual([r.id for r in ORBIT_ROWS if r.delta == 2], [4, 11, 15])
        for row in ORBIT_ROWS:
            self.assertEqual(row.rank is None, row.flag_dims is None, row.id)
            if row.rank is not None:
                self.assertEqual(row.group_dim, row.rank ** 2 - 1, row.id)

    def test_skipped_nilpotent_rows_are_out_of_scope(self):
        for row in NILPOTENT_ROWS:
            orbit = ORBIT_ROWS[row.orbit - 1]
            if orbit.rank is None or row.ambient.startswith('P('):
                self.assertIsNotNone(row.skip, row.label)

    def test_fano_rows(self):
        for row in FORMS_FANO3 + NILPOTENT_FANO3 + FANO4_ROWS:
            self.assertGreater(row.degree, 0)
            self.assertTrue(row.chi_omega)


class TestGoldenPolynomials(unittest.TestCase):
    def test_leading_coefficient_is_the_class(self):
        self.assertEqual(sympy.expand(sympy.sympify(CTOP_EXPANSION[5]) - sympy.sympify(FUNDAMENTAL_CLASS)), 0)
        self.assertEqual(sorted(CTOP_EXPANSION), list(range(6)))

    def test_schur_forms_differ_by_e1(self):
        cofactor = SchurVector({Partition(p): c for p, c in SCHUR_COFACTOR.items()})
        full = schur_product(SchurVector.single(Partition((1,))), cofactor)
        self.assertEqual({tuple(p): c for p, c in full.items()}, SCHUR_FULL)

    def test_pushforward_shapes(self):
        for name, table in PUSHFORWARD_TABLES.items():
            for (i, q), partitions in table.items():
                self.assertTrue(0 <= i <= 10 and 0 <= q <= 5, (name, i, q))
                for lam in partitions:
                    self.assertEqual(len(lam), 6)
                    Partition(lam)

    def test_n_values(self):
        for args, n in N_VALUE_EXAMPLES:
            self.assertEqual(n_value(*args), n, args)


if __name__ == '__main__':
    unittest.main()
