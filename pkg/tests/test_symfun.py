import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import random

import sympy

from src.errors import DomainError
from src.loci.tables import N_VALUE_EXAMPLES
from src.symfun.characters import (GLCharacter, schur_character, schur_decompose, sym_of_character,
                                   wedge_of_character)
from src.symfun.littlewood_richardson import (column_class_integral, elementary_symbols, lr_coefficient,
                                              schur_in_elementary, schur_product, to_schur_basis)
from src.symfun.numerology import crepancy_check, n_value, rank_variety_numerology, schur_rank_locus_condition
from src.symfun.partitions import Partition, SchurVector, complement, partitions_in_box, partitions_of, weyl_dim


def standard(n):
    return [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]


class TestPartition(unittest.TestCase):
    def test_trailing_zeros_dropped(self):
        self.assertEqual(Partition((2, 1, 0, 0)).parts, (2, 1))

    def test_not_decreasing(self):
        with self.assertRaises(DomainError):
            Partition((1, 2))

    def test_negative_part(self):
        with self.assertRaises(DomainError):
            Partition((2, -1))

    def test_conjugate(self):
        self.assertEqual(Partition((3, 1)).conjugate(), Partition((2, 1, 1)))
        self.assertEqual(Partition((4, 2, 1)).conjugate().conjugate(), Partition((4, 2, 1)))

    def test_index_past_length(self):
        self.assertEqual(Partition((2,))[5], 0)

    def test_complement(self):
        self.assertEqual(complement(Partition((2, 1)), 2, 3), Partition((2, 1)))
        self.assertEqual(complement(Partition(), 2, 2), Partition((2, 2)))

    def test_complement_outside_box(self):
        with self.assertRaises(DomainError):
            complement(Partition((4,)), 2, 3)

    def test_counts(self):
        self.assertEqual(len(partitions_of(4)), 5)
        self.assertEqual(len(partitions_of(6, max_length=2)), 4)
        self.assertEqual(len(partitions_in_box(2, 2)), 6)
        self.assertEqual(len(partitions_in_box(2, 5)), 21)


class TestWeylDimension(unittest.TestCase):
    def test_fundamental(self):
        self.assertEqual(weyl_dim((1,), 6), 6)
        self.assertEqual(weyl_dim((1, 1, 1), 6), 20)

    def test_symmetric_square(self):
        self.assertEqual(weyl_dim((2,), 3), 6)

    def test_adjoint(self):
        self.assertEqual(weyl_dim((1, 0, -1), 3), 8)

    def test_tableau_counts(self):
        self.assertEqual(weyl_dim((2, 1, 1), 4), 15)
        self.assertEqual(weyl_dim((2, 1), 3), 8)

    def test_too_many_rows(self):
        self.assertEqual(weyl_dim((1, 1, 1), 2), 0)
        self.assertEqual(weyl_dim((2, 0, 0), 2), 3)
        with self.assertRaises(DomainError):
            weyl_dim((1, 0, -1), 2)

    def test_not_dominant(self):
        with self.assertRaises(DomainError):
            weyl_dim((0, 1), 2)


class TestLittlewoodRichardson(unittest.TestCase):
    def test_single_box(self):
        self.assertEqual(lr_coefficient(Partition((2, 1)), Partition((1,)), Partition((1,))), 1)

    def test_multiplicity_two(self):
        self.assertEqual(lr_coefficient(Partition((3, 2, 1)), Partition((2, 1)), Partition((2, 1))), 2)

    def test_size_mismatch(self):
        self.assertEqual(lr_coefficient(Partition((3,)), Partition((1,)), Partition((1,))), 0)

    def test_pieri(self):
        s1 = SchurVector.single(Partition((1,)))
        product = schur_product(s1, s1)
        self.assertEqual(product.coefficient(Partition((2,))), 1)
        self.assertEqual(product.coefficient(Partition((1, 1))), 1)
        self.assertEqual(len(product), 2)

    def test_product_in_box(self):
        s1 = SchurVector.single(Partition((1,)))
        product = schur_product(s1, s1, rows=1)
        self.assertEqual(product, SchurVector.single(Partition((2,))))

    def test_grassmannian_degrees(self):
        self.assertEqual(column_class_integral((4,), 2, 2), 2)
        self.assertEqual(column_class_integral((6,), 2, 3), 5)
        self.assertEqual(column_class_integral((10,), 2, 5), 42)

    def test_elementary_expansion(self):
        e1, e2 = elementary_symbols(3)[:2]
        self.assertEqual(schur_in_elementary(Partition((1, 1)), 3), e2)
        self.assertEqual(sympy.expand(schur_in_elementary(Partition((2,)), 3) - (e1 ** 2 - e2)), 0)

    def test_schur_basis(self):
        e1 = elementary_symbols(3)[0]
        vector = to_schur_basis(e1 ** 2, 3)
        self.assertEqual(vector, SchurVector({Partition((2,)): 1, Partition((1, 1)): 1}))


class TestCharacters(unittest.TestCase):
    def setUp(self):
        self.std = GLCharacter.from_weights(3, standard(3))

    def test_dimensions(self):
        self.assertEqual(wedge_of_character(self.std, 2).dimension(), 3)
        self.assertEqual(wedge_of_character(self.std, 3).dimension(), 1)
        self.assertEqual(wedge_of_character(self.std, 4).dimension(), 0)
        self.assertEqual(sym_of_character(self.std, 2).dimension(), 6)

    def test_schur_character(self):
        self.assertEqual(schur_character((2, 1), standard(3), 3).dimension(), 8)
        self.assertEqual(schur_character((1, 1, 1, 1), standard(3), 3).dimension(), 0)

    def test_decompose_square(self):
        square = self.std * self.std
        self.assertEqual(schur_decompose(square), [((2, 0, 0), 1), ((1, 1, 0), 1)])

    def test_decompose_needs_symmetry(self):
        with self.assertRaises(DomainError):
            schur_decompose(GLCharacter(3, {(1, 0, 0): 1}))

    def test_decompose_bound(self):
        square = self.std * self.std
        with self.assertRaises(DomainError):
            schur_decompose(square, max_dim=4)

    def test_dual(self):
        self.assertEqual(self.std.dual().dual(), self.std)
        self.assertEqual(self.std.dual().multiplicity((-1, 0, 0)), 1)

    def test_negative_multiplicity_is_rejected(self):
        virtual = GLCharacter.trivial(3, multiplicity=-1)
        with self.assertRaises(DomainError):
            wedge_of_character(virtual, 1)
        with self.assertRaises(DomainError):
            sym_of_character(virtual, 2)
        with self.assertRaises(DomainError):
            schur_decompose(-self.std)

    def test_decompose_stops_at_negative_multiplicity(self):
        # the power sum p_2 = s_(2) - s_(1,1) is symmetric and effective but not polynomial
        with self.assertRaises(DomainError):
            schur_decompose(self.std.adams(2))

    def test_wedge_of_wedge(self):
        std4 = GLCharacter.from_weights(4, standard(4))
        chi = wedge_of_character(wedge_of_character(std4, 2), 2)
        self.assertEqual(chi.dimension(), 15)
        self.assertEqual(schur_decompose(chi), [((2, 1, 1, 0), 1)])

    def test_wedge_of_three_forms(self):
        std5 = GLCharacter.from_weights(5, standard(5))
        chi = wedge_of_character(wedge_of_character(std5, 3), 2)
        self.assertEqual(chi.dimension(), 45)
        pieces = schur_decompose(chi)
        self.assertTrue(all(sum(w) == 6 and min(w) >= 0 for w, _ in pieces))
        self.assertEqual(sum(m * weyl_dim(w, 5) for w, m in pieces), 45)


class TestSymmetricFunctionProperties(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(1729)

    def test_lr_symmetry(self):
        for _ in range(40):
            lam = self.rng.choice(partitions_of(self.rng.randint(0, 4)))
            mu = self.rng.choice(partitions_of(self.rng.randint(0, 4)))
            for nu in partitions_of(lam.size + mu.size):
                self.assertEqual(lr_coefficient(nu, lam, mu), lr_coefficient(nu, mu, lam), (nu, lam, mu))

    def test_decomposition_dimensions(self):
        std = GLCharacter.from_weights(3, standard(3))
        for _ in range(12):
            chi = sym_of_character(std, self.rng.randint(0, 3)) * wedge_of_character(std, self.rng.randint(0, 3))
            if self.rng.random() < 0.5:
                chi = chi * std
            self.assertLessEqual(chi.dimension(), 90)
            total = sum(m * weyl_dim(w, 3) for w, m in schur_decompose(chi))
            self.assertEqual(total, chi.dimension())

    def test_wedge_dimensions_add_to_a_power_of_two(self):
        std = GLCharacter.from_weights(4, standard(4))
        for chi in (std, wedge_of_character(std, 2), std * std.dual()):
            n = chi.dimension()
            self.assertEqual(sum(wedge_of_character(chi, i).dimension() for i in range(n + 1)), 2 ** n)

    def test_jacobi_trudi_specialization(self):
        n = 3
        symbols = elementary_symbols(n)
        for _ in range(10):
            xs = self.rng.sample(range(-6, 7), n)
            e = [1] + [0] * n
            for x in xs:
                for i in range(n, 0, -1):
                    e[i] += e[i - 1] * x
            lam = self.rng.choice(partitions_of(self.rng.randint(1, 5), max_length=n))
            parts = lam.parts + (0,) * (n - len(lam.parts))
            numerator = sympy.Matrix(n, n, lambda i, j: xs[j] ** (parts[i] + n - 1 - i))
            denominator = sympy.Matrix(n, n, lambda i, j: xs[j] ** (n - 1 - i))
            direct = numerator.det() / denominator.det()
            value = schur_in_elementary(lam, n).subs(dict(zip(symbols, e[1:])))
            self.assertEqual(sympy.simplify(value - direct), 0, (lam, xs))


class TestNumerology(unittest.TestCase):
    def test_rank_variety(self):
        self.assertEqual(rank_variety_numerology(Partition((1,)), 2), (1, 2))
        self.assertEqual(rank_variety_numerology(Partition((2,)), 3), (4, 6))
        self.assertEqual(rank_variety_numerology(Partition((2, 1)), 3), (8, 8))
        self.assertEqual(rank_variety_numerology(Partition((3,)), 1), (3, 1))

    def test_rank_variety_of_a_long_partition(self):
        self.assertEqual(rank_variety_numerology(Partition((1, 1, 1)), 2), (0, 0))

    def test_schur_rank_locus_condition(self):
        self.assertTrue(schur_rank_locus_condition(Partition((2, 1)), 3))
        self.assertFalse(schur_rank_locus_condition(Partition((1,)), 2))
        self.assertFalse(schur_rank_locus_condition(Partition((2,)), 3))

    def test_n_values(self):
        for args, expected in N_VALUE_EXAMPLES:
            self.assertEqual(n_value(*args), expected, args)

    def test_crepancy(self):
        for args, _ in N_VALUE_EXAMPLES:
            self.assertTrue(crepancy_check(*args), args)
        self.assertEqual(n_value(3, 0, 10, 5), 6)
        self.assertFalse(crepancy_check(3, 0, 10, 5))

    def test_invalid_parameters(self):
        with self.assertRaises(DomainError):
            n_value(5, 0, 4, 6)


if __name__ == '__main__':
    unittest.main()
