import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from fractions import Fraction

from src.chow.graded import ChowRing
from src.chow.varieties import (flag_bundle, generic_base, grassmann_bundle, grassmannian, product,
                                projective_bundle, projective_space, quadric, zero_locus)
from src.errors import ConsistencyError, DomainError
from src.sheaves.sheaf_class import SheafClass


def euler_number(variety):
    return variety.integrate(variety.tangent.top())


class TestChowRing(unittest.TestCase):
    def setUp(self):
        self.ring = ChowRing(['h'], [1], 3)

    def test_truncation(self):
        h = self.ring.gen('h')
        self.assertTrue((h ** 4).is_zero())
        self.assertFalse((h ** 3).is_zero())

    def test_from_expr(self):
        cls = self.ring.from_expr("1 + 2*h + h**5")
        self.assertEqual(cls.coefficient((1,)), 2)
        self.assertEqual(cls.degrees(), (0, 1))

    def test_unknown_symbol(self):
        with self.assertRaises(DomainError):
            self.ring.from_expr("x + h")

    def test_exact_fractions(self):
        h = self.ring.gen('h')
        self.assertEqual((h / 3).coefficient((1,)), Fraction(1, 3))

    def test_lift_to_extension(self):
        bigger = ChowRing(['h', 'H'], [1, 1], 4, [(1, 3)])
        lifted = bigger.lift(self.ring.gen('h'))
        self.assertEqual(lifted.coefficient((1, 0)), 1)


class TestAbsoluteVarieties(unittest.TestCase):
    def test_projective_space(self):
        P3 = projective_space(3)
        self.assertEqual(P3.integrate(P3.polarization() ** 3), 1)
        self.assertEqual(P3.euler_characteristic(P3.trivial()), 1)
        self.assertEqual(P3.euler_characteristic(P3.line([1])), 4)
        self.assertEqual(P3.euler_characteristic(P3.line([-1])), 0)
        self.assertEqual(P3.euler_characteristic(P3.line([-4])), -1)
        self.assertEqual(euler_number(P3), 4)

    def test_non_integral_euler_characteristic(self):
        P2 = projective_space(2)
        half = SheafClass.line(P2.polarization() * Fraction(1, 2))
        with self.assertRaises(ConsistencyError):
            P2.euler_characteristic(half)

    def test_point_class(self):
        P2 = projective_space(2)
        self.assertEqual(P2.point_class(), P2.polarization() ** 2)

    def test_grassmannian(self):
        G = grassmannian(2, 4)
        self.assertEqual(G.integrate(G.ring.gen('a1') ** 4), 2)
        G25 = grassmannian(2, 5)
        self.assertEqual(G25.euler_characteristic(G25.trivial()), 1)
        self.assertEqual(euler_number(G25), 10)
        self.assertEqual(G25.sheaf('Q').rank, 3)

    def test_lines_are_projective_space(self):
        self.assertEqual(grassmannian(1, 5).name, "P^4")

    def test_odd_quadric(self):
        Q = quadric(3)
        self.assertEqual(Q.integrate(Q.polarization() ** 3), 2)
        self.assertEqual(Q.euler_characteristic(Q.trivial()), 1)
        self.assertEqual(euler_number(Q), 4)
        Q7 = quadric(7)
        self.assertEqual(Q7.tangent.c1(), Q7.divisor([7]))

    def test_even_quadric(self):
        self.assertEqual(quadric(4).dim, 4)
        with self.assertRaises(DomainError):
            quadric(6)

    def test_product(self):
        X = product(projective_space(2), projective_space(2))
        self.assertEqual(X.integrate(X.divisor([1, 1]) ** 4), 6)
        self.assertEqual(euler_number(X), 9)
        self.assertEqual(X.sheaf('Q2').rank, 2)

    def test_generic_base(self):
        B = generic_base(4, {'E': 3})
        self.assertEqual(B.sheaf('E').rank, 3)
        with self.assertRaises(DomainError):
            B.integrate(B.ring.one())


class TestZeroLoci(unittest.TestCase):
    def test_quintic(self):
        P4 = projective_space(4)
        Y = zero_locus(P4, P4.line([5]))
        self.assertEqual(Y.dim, 3)
        self.assertEqual(Y.euler_characteristic(Y.trivial()), 0)
        self.assertEqual(euler_number(Y), -200)

    def test_quartic_surface(self):
        P3 = projective_space(3)
        S = zero_locus(P3, P3.line([4]))
        self.assertEqual(S.euler_characteristic(S.trivial()), 2)
        self.assertEqual(euler_number(S), 24)

    def test_cubic_surface(self):
        P3 = projective_space(3)
        S = zero_locus(P3, P3.line([3]))
        self.assertEqual(euler_number(S), 9)
        self.assertEqual(S.integrate(S.tangent.c1() ** 2), 3)

    def test_negative_dimension(self):
        P1 = projective_space(1)
        with self.assertRaises(DomainError):
            zero_locus(P1, P1.line([1]) * 2)


class TestBundles(unittest.TestCase):
    def test_trivial_projective_bundle(self):
        P2 = projective_space(2)
        X = projective_bundle(P2, P2.trivial(3))
        self.assertEqual(X.dim, 4)
        self.assertEqual(euler_number(X), 9)
        self.assertEqual(X.euler_characteristic(X.trivial()), 1)

    def test_hirzebruch_surface(self):
        P1 = projective_space(1)
        X = projective_bundle(P1, P1.trivial() + P1.line([1]))
        self.assertEqual(euler_number(X), 4)
        self.assertEqual(X.euler_characteristic(X.trivial()), 1)

    def test_pushforward_of_fibre_class(self):
        P2 = projective_space(2)
        X = projective_bundle(P2, P2.line([1]) + P2.trivial(2))
        self.assertEqual(X.pushforward(X.H ** 2), P2.ring.one())
        self.assertTrue(X.pushforward(X.H).is_zero())

    def test_normal_form(self):
        P2 = projective_space(2)
        X = projective_bundle(P2, P2.line([1]) + P2.trivial(2))
        cls = X.H ** 4
        reduced = X.normal_form(cls)
        self.assertTrue(all(m[-1] < 3 for m, _ in reduced.terms()))
        self.assertEqual(X.pushforward(reduced), X.pushforward(cls))

    def test_grassmann_bundle(self):
        P1 = projective_space(1)
        X = grassmann_bundle(P1, P1.trivial(4), 2)
        self.assertEqual(X.dim, 5)
        self.assertEqual(euler_number(X), 12)
        self.assertEqual(X.euler_characteristic(X.trivial()), 1)

    def test_grassmann_bundle_range(self):
        P1 = projective_space(1)
        with self.assertRaises(DomainError):
            grassmann_bundle(P1, P1.trivial(3), 3)

    def test_flag_bundle(self):
        P1 = projective_space(1)
        X = flag_bundle(P1, P1.trivial(3), (1, 2))
        self.assertEqual(X.dim, 4)
        self.assertEqual(euler_number(X), 12)
        self.assertEqual(X.sheaf('G3').rank, 1)

    def test_flag_bundle_dims(self):
        P1 = projective_space(1)
        with self.assertRaises(DomainError):
            flag_bundle(P1, P1.trivial(3), (2, 1))


if __name__ == '__main__':
    unittest.main()
