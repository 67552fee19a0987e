import unittest
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.errors import DomainError
from src.loci import (AmbientSpec, NilpotentLocus, NilpotentLocusConfig, feasibility, fourfold_catalog,
                      full_cone_ci_check, minimal_orbit_ci_check, orbit_catalog, typeA_invariants)
from src.loci.nilpotent import (dominates, flag_dimension, flag_dims_of, orbit_by_id, orbit_codimension,
                                orbit_dimension, partition_of_flag, singular_codimension)
from src.loci.tables import ORBIT_ROWS
from src.symfun.partitions import Partition, partitions_of


def nilpotent(ambient, bundle, twist='O(1)', orbit=None, partition=None):
    return NilpotentLocus(NilpotentLocusConfig(AmbientSpec(ambient), bundle, twist, orbit, partition))


class TestOrbits(unittest.TestCase):
    def test_dimensions(self):
        self.assertEqual(orbit_dimension(Partition((3,))), 6)
        self.assertEqual(orbit_dimension(Partition((2, 1))), 4)
        self.assertEqual(orbit_dimension(Partition((1, 1, 1))), 0)
        self.assertEqual(orbit_codimension(Partition((3,))), 2)

    def test_dominance(self):
        self.assertTrue(dominates(Partition((3,)), Partition((2, 1))))
        self.assertFalse(dominates(Partition((2, 1)), Partition((3,))))
        self.assertFalse(dominates(Partition((3, 3)), Partition((4, 1, 1))))

    def test_singular_codimension(self):
        self.assertEqual(singular_codimension(Partition((3,))), 2)
        self.assertEqual(singular_codimension(Partition((2, 1))), 4)
        self.assertIsNone(singular_codimension(Partition((1, 1, 1))))

    def test_flag_round_trip(self):
        self.assertEqual(flag_dims_of(Partition((2, 1))), (1,))
        self.assertEqual(flag_dims_of(Partition((3,))), (1, 2))
        for e in range(2, 5):
            for partition in partitions_of(e):
                dims = flag_dims_of(partition)
                if dims:
                    self.assertEqual(partition_of_flag(dims, e), partition)

    def test_collapsing_dimension(self):
        # the cotangent bundle of G/P has dimension twice dim G/P, which is the orbit dimension
        for e in range(2, 5):
            for partition in partitions_of(e):
                dims = flag_dims_of(partition)
                if dims:
                    self.assertEqual(2 * flag_dimension(dims, e), orbit_dimension(partition), partition)

    def test_catalog(self):
        orbits = orbit_catalog()
        self.assertEqual(len(orbits), len(ORBIT_ROWS))
        for orbit in orbits:
            self.assertEqual(orbit.levi_excess, orbit.ell_p)
            if orbit.computable:
                self.assertEqual(orbit_codimension(orbit.partition()), orbit.ell_p)
                self.assertEqual(singular_codimension(orbit.partition()), orbit.codim_sing)

    def test_non_type_a(self):
        orbit = orbit_by_id(4)
        self.assertFalse(orbit.computable)
        self.assertFalse(orbit.birational)
        with self.assertRaises(DomainError):
            orbit.partition()
        with self.assertRaises(DomainError):
            orbit_by_id(17)


class TestFeasibility(unittest.TestCase):
    def test_forced_projective_space(self):
        result = feasibility(orbit_by_id(1), 0)
        self.assertTrue(result.possible)
        self.assertEqual(result.ambient, "P^1")

    def test_impossible(self):
        result = feasibility(orbit_by_id(10), 3)
        self.assertFalse(result.possible)

    def test_fano_target(self):
        cy = feasibility(orbit_by_id(2), 3)
        fano = feasibility(orbit_by_id(2), 3, 'fano')
        self.assertEqual(fano.index, cy.index + 1)
        self.assertEqual(fano.ambient_dim, 7)

    def test_unknown_target(self):
        with self.assertRaises(DomainError):
            feasibility(orbit_by_id(1), 3, 'k3')


class TestNilpotentLocus(unittest.TestCase):
    def test_orbit_and_bundle_ranks(self):
        with self.assertRaises(DomainError):
            nilpotent('projective_space(5)', '4*O', orbit=6)
        with self.assertRaises(DomainError):
            nilpotent('projective_space(5)', '3*O', orbit=4)

    def test_partition_checks(self):
        with self.assertRaises(DomainError):
            nilpotent('projective_space(5)', '3*O', partition=(2, 1, 1))
        with self.assertRaises(DomainError):
            nilpotent('projective_space(5)', '3*O', partition=(1, 1, 1))
        with self.assertRaises(DomainError):
            nilpotent('projective_space(5)', '3*O')

    def test_twist_is_a_line(self):
        with self.assertRaises(DomainError):
            nilpotent('projective_space(5)', '3*O', twist='2*O', orbit=6)

    def test_almost_fano(self):
        locus = nilpotent('projective_space(5)', '3*O', orbit=6)
        self.assertEqual(locus.dim, 3)
        c = locus.classify()
        self.assertEqual((c.kind, c.index), ('almost-fano', 1))

    def test_fano(self):
        c = nilpotent('quadric(7)', '3*O', orbit=2).classify()
        self.assertEqual((c.kind, c.index, c.coindex), ('fano', 1, 3))

    def test_degree(self):
        report = nilpotent('projective_space(5)', '3*O', orbit=6).invariants(forms=())
        self.assertEqual(report.anticanonical_degree, 6)
        self.assertEqual(report.chi_O, 1)
        self.assertIsNotNone(report.h0_anticanonical)

    def test_calabi_yau_fourfold(self):
        locus = nilpotent('grassmannian(2,5)', '3*O', orbit=6)
        report = locus.invariants(forms=())
        self.assertEqual(report.classification.kind, 'cy')
        self.assertEqual(report.dim, 4)
        self.assertEqual(report.chi_O, 2)

    def test_functional_entry_point(self):
        cfg = NilpotentLocusConfig(AmbientSpec('projective_space(5)'), '3*O', 'O(1)', orbit=6)
        self.assertEqual(typeA_invariants(cfg).anticanonical_degree, 6)

    def test_fourfold_catalog(self):
        reports = fourfold_catalog()
        self.assertEqual(len(reports), 9)
        for report in reports:
            self.assertEqual((report.dim, report.chi_O), (4, 2), report.label)

    def test_same_orbit_by_partition(self):
        by_id = nilpotent('projective_space(5)', '3*O', orbit=6)
        by_partition = nilpotent('projective_space(5)', '3*O', partition=(3,))
        self.assertEqual(by_id.dims, by_partition.dims)
        self.assertEqual(by_id.fundamental_class(), by_partition.fundamental_class())


class TestCompleteIntersectionModels(unittest.TestCase):
    def test_minimal_orbit(self):
        result = minimal_orbit_ci_check(AmbientSpec('projective_space(4)'), 2)
        self.assertTrue(result.agrees)
        self.assertEqual(result.model['dim'], 3)

    def test_full_cone(self):
        result = full_cone_ci_check(AmbientSpec('projective_space(3)'), '3*O', 'O(1)')
        self.assertTrue(result.agrees)
        self.assertEqual(result.model['dim'], 1)

    def test_minimal_orbit_rank(self):
        with self.assertRaises(DomainError):
            minimal_orbit_ci_check(AmbientSpec('projective_space(4)'), 1)


if __name__ == '__main__':
    unittest.main()
