import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import random
from itertools import combinations, combinations_with_replacement

from src.chow.graded import ChowRing
from src.errors import DomainError
from src.sheaves import SheafClass, adjoint_sl, chern_from_ch, cotangent_of_zero_locus, direct_sum
from src.symfun.partitions import Partition

TRIALS = 20


class TestSplittingPrinciple(unittest.TestCase):
    """Operations on sums of line bundles against their expansions in the roots."""

    def setUp(self):
        self.ring = ChowRing(['x1', 'x2', 'x3'], [1, 1, 1], 4)
        self.rng = random.Random(20190101)

    def random_roots(self, rank):
        x = [self.ring.gen(name) for name in self.ring.names]
        return [sum((self.rng.randint(-2, 2) * g for g in x), self.ring.zero()) for _ in range(rank)]

    def sum_of_lines(self, roots):
        return direct_sum(*[SheafClass.line(r) for r in roots])

    def test_chern_class(self):
        for _ in range(TRIALS):
            roots = self.random_roots(self.rng.randint(1, 4))
            expected = self.ring.one()
            for r in roots:
                expected = expected * (1 + r)
            self.assertEqual(self.sum_of_lines(roots).chern, expected)

    def test_wedge(self):
        for _ in range(TRIALS):
            roots = self.random_roots(self.rng.randint(1, 4))
            k = self.rng.randint(0, len(roots) + 1)
            expected = SheafClass.trivial(self.ring, 0)
            for subset in combinations(roots, k):
                expected = expected + SheafClass.line(sum(subset, self.ring.zero()))
            self.assertEqual(self.sum_of_lines(roots).wedge(k), expected)

    def test_sym(self):
        for _ in range(TRIALS):
            roots = self.random_roots(self.rng.randint(1, 3))
            k = self.rng.randint(0, 3)
            expected = SheafClass.trivial(self.ring, 0)
            for subset in combinations_with_replacement(roots, k):
                expected = expected + SheafClass.line(sum(subset, self.ring.zero()))
            self.assertEqual(self.sum_of_lines(roots).sym(k), expected)

    def test_dual_and_det(self):
        for _ in range(TRIALS):
            roots = self.random_roots(self.rng.randint(1, 4))
            E = self.sum_of_lines(roots)
            self.assertEqual(E.dual(), self.sum_of_lines([-r for r in roots]))
            self.assertEqual(E.det(), SheafClass.line(sum(roots, self.ring.zero())))

    def test_tensor(self):
        for _ in range(TRIALS):
            a = self.random_roots(2)
            b = self.random_roots(self.rng.randint(1, 3))
            expected = self.sum_of_lines([p + q for p in a for q in b])
            self.assertEqual(self.sum_of_lines(a) * self.sum_of_lines(b), expected)

    def test_schur_hook(self):
        hook = Partition((2, 1))
        for _ in range(TRIALS):
            E = self.sum_of_lines(self.random_roots(3))
            self.assertEqual(E.schur(hook), E * E.wedge(2) - E.wedge(3))

    def test_schur_row_and_column(self):
        for _ in range(TRIALS):
            E = self.sum_of_lines(self.random_roots(self.rng.randint(1, 4)))
            self.assertEqual(E.schur(Partition((2,))), E.sym(2))
            self.assertEqual(E.schur(Partition((1, 1))), E.wedge(2))


class TestSheafClass(unittest.TestCase):
    def setUp(self):
        self.ring = ChowRing(['h'], [1], 5)
        self.h = self.ring.gen('h')

    def test_rank(self):
        E = SheafClass.trivial(self.ring, 3) + SheafClass.line(self.h)
        self.assertEqual(E.rank, 4)
        self.assertEqual(E.schur(Partition((2, 1))).rank, 20)
        self.assertEqual(SheafClass.trivial(self.ring, 3).schur(Partition((2, 1))).rank, 8)

    def test_arithmetic_with_integers(self):
        L = SheafClass.line(self.h)
        self.assertEqual((L + 2).rank, 3)
        self.assertEqual((2 - L).rank, 1)
        self.assertEqual((L * 3).c1(), 3 * self.h)

    def test_from_chern_round_trip(self):
        chern = self.ring.from_expr("1 + 3*h + 5*h**2 - h**4")
        E = SheafClass.from_chern(4, chern)
        self.assertEqual(SheafClass(E.ch).chern, chern)
        recovered = chern_from_ch(4, E.ch)
        self.assertIsInstance(recovered, SheafClass)
        self.assertEqual(recovered, E)
        self.assertEqual(recovered.rank, 4)
        self.assertEqual(recovered.chern, chern)

    def test_chern_from_ch_rank_mismatch(self):
        with self.assertRaises(DomainError):
            chern_from_ch(2, SheafClass.trivial(self.ring, 3).ch)

    def test_top_and_segre(self):
        E = SheafClass.line(self.h) * 2
        self.assertEqual(E.top(), self.h ** 2)
        self.assertEqual(E.segre() * E.chern, self.ring.one())

    def test_negative_rank_top(self):
        with self.assertRaises(DomainError):
            (1 - SheafClass.trivial(self.ring, 2)).top()

    def test_todd_of_line(self):
        td = SheafClass.line(self.h).todd()
        self.assertEqual(td.coefficient((1,)), 1 / 2)
        self.assertEqual(td.coefficient((2,)), self.ring.from_expr("h**2/12").coefficient((2,)))
        self.assertEqual(td.coefficient((3,)), 0)

    def test_adams(self):
        L = SheafClass.line(self.h)
        self.assertEqual(L.adams(3), SheafClass.line(3 * self.h))
        self.assertEqual(L.adams(-1), L.dual())

    def test_tensor_line_needs_rank_one(self):
        with self.assertRaises(DomainError):
            SheafClass.trivial(self.ring, 2).tensor_line(SheafClass.trivial(self.ring, 2))

    def test_adjoint(self):
        E = SheafClass.line(self.h) + SheafClass.trivial(self.ring, 2)
        sl = adjoint_sl(E)
        self.assertEqual(sl.rank, 8)
        self.assertTrue(sl.c1().is_zero())
        self.assertEqual(sl, sl.dual())
        with self.assertRaises(DomainError):
            adjoint_sl(SheafClass.trivial(self.ring))

    def test_cotangent_of_hypersurface(self):
        # quintic threefold in P4: Omega^3 is trivial on the zero locus
        ring = ChowRing(['h'], [1], 4)
        h = ring.gen('h')
        tangent = SheafClass.line(h) * 5 - 1
        omega3 = cotangent_of_zero_locus(tangent, SheafClass.line(5 * h), 3)
        self.assertEqual(omega3.rank, 1)
        self.assertTrue(omega3.c1().is_zero())

    def test_negative_powers(self):
        with self.assertRaises(DomainError):
            SheafClass.trivial(self.ring, 2).wedge(-1)


if __name__ == '__main__':
    unittest.main()
