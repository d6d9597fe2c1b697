# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for gemkit.recognition."""

import fractions
import unittest

from gemkit import constructions
from gemkit import errors
from gemkit import gem_core
from gemkit import genus
from gemkit import moves
from gemkit import recognition
from gemkit.tests import corpus


def rp2_product():
    return constructions.product_with_interval(constructions.rp2_gem())


class TestVerifyBoundary(unittest.TestCase):

    def test_ball(self):
        report = recognition.verify_boundary3(constructions.d3_gem())
        self.assertTrue(report.verdict)
        self.assertEqual(report.h, 1)
        self.assertEqual(report.differences, (0, 0, 0))
        self.assertEqual(report.target, 0)
        self.assertEqual(report.residue_sum, 3)
        self.assertEqual(report.diagnostics, ())

    def test_cone_over_rp2_fails_sum_condition(self):
        report = recognition.verify_boundary3(corpus.rp2_cone())
        self.assertFalse(report.verdict)
        self.assertFalse(report.condition_iii)
        self.assertEqual(report.residue_sum, 3)
        self.assertTrue(any("(iii)" in line for line in report.diagnostics))

    def test_nonorientable_handlebody(self):
        report = recognition.verify_boundary3(constructions.handlebody_nonorientable(3))
        self.assertTrue(report.verdict)
        self.assertEqual(report.h, 1)

    def test_rp2_product(self):
        report = recognition.verify_boundary3(rp2_product())
        self.assertTrue(report.verdict)
        self.assertEqual(report.h, 2)
        self.assertEqual(report.target, fractions.Fraction(2))

    def test_dipole_breaks_condition_i(self):
        report = recognition.verify_boundary3(corpus.two_block_graph())
        self.assertFalse(report.condition_i)
        self.assertFalse(report.verdict)

    def test_errors(self):
        with self.assertRaises(errors.GemError) as caught:
            recognition.verify_boundary3(constructions.s3_gem())
        self.assertEqual(caught.exception.code, errors.ErrorCode.CLOSED_GRAPH)
        with self.assertRaises(errors.GemError) as caught:
            recognition.verify_boundary3(constructions.rp2_gem())
        self.assertEqual(caught.exception.code, errors.ErrorCode.DIMENSION)


class TestVerifyClosed(unittest.TestCase):

    def test_sphere(self):
        self.assertTrue(recognition.verify_closed3(constructions.s3_gem()))

    def test_seeds(self):
        for seed in constructions.SeedName:
            report = recognition.inspect_closed3(constructions.closed_seed(seed))
            self.assertTrue(report.manifold, seed)
            self.assertTrue(report.contracted, seed)
            self.assertEqual(report.failures, ())

    def test_manifold_gem_that_is_not_contracted(self):
        seed = constructions.closed_seed(constructions.SeedName.RP3)
        doubled, _ = moves.insert_1_dipole(seed, 0, 3)
        report = recognition.inspect_closed3(doubled.graph)
        self.assertTrue(report.manifold)
        self.assertFalse(report.contracted)
        self.assertFalse(report.verdict)

    def test_rejects_boundary(self):
        with self.assertRaises(errors.GemError) as caught:
            recognition.verify_closed3(constructions.d3_gem())
        self.assertEqual(caught.exception.code, errors.ErrorCode.BOUNDARY_GRAPH)


class TestBoundaryGenus(unittest.TestCase):

    def test_ball(self):
        report = recognition.boundary_regular_genus(constructions.d3_gem())
        self.assertEqual(len(report.components), 1)
        self.assertEqual(report.total, 0)
        self.assertTrue(report.vertex_count_check)

    def test_handlebodies(self):
        for n in range(1, 5):
            report = recognition.boundary_regular_genus(constructions.handlebody_orientable(n))
            self.assertEqual(len(report.components), 1)
            self.assertEqual(report.total, n)
            self.assertEqual(report.components[0].vertex_count, 2 + 4 * n)
            self.assertTrue(report.components[0].orientable)
            self.assertTrue(report.vertex_count_check)

    def test_nonorientable_handlebody_boundary(self):
        report = recognition.boundary_regular_genus(constructions.handlebody_nonorientable(2))
        self.assertFalse(report.components[0].orientable)
        self.assertFalse(report.components[0].odd_crosscap)
        self.assertEqual(report.total, 2)

    def test_rp2_product(self):
        report = recognition.boundary_regular_genus(rp2_product())
        self.assertEqual([c.regular_genus for c in report.components],
                         [genus.HalfInteger(1), genus.HalfInteger(1)])
        self.assertTrue(all(c.odd_crosscap for c in report.components))
        self.assertEqual(report.total, 1)
        self.assertIsNone(report.vertex_count_check)

    def test_closed_rejected(self):
        with self.assertRaises(errors.GemError) as caught:
            recognition.boundary_regular_genus(constructions.s3_gem())
        self.assertEqual(caught.exception.code, errors.ErrorCode.CLOSED_GRAPH)


class TestGRelations(unittest.TestCase):

    def test_ball(self):
        report = recognition.check_g_relations(constructions.d3_gem())
        self.assertTrue(report.all_hold)
        for row in report.rows:
            self.assertEqual((row.g_i3, row.g_jk, row.c_i3), (1, 1, 0))

    def test_handlebody(self):
        report = recognition.check_g_relations(constructions.handlebody_orientable(2))
        self.assertEqual(report.n, 2)
        self.assertTrue(report.minimal)
        self.assertTrue(report.minimal_equalities)
        self.assertTrue(all(row.c_i3 == 0 for row in report.rows))
        self.assertTrue(report.all_hold)

    def test_joined_rp2_product(self):
        graph = moves.join_boundary_components(rp2_product()).graph
        report = recognition.check_g_relations(graph)
        self.assertEqual(report.n, 1)
        self.assertTrue(report.all_hold)

    def test_every_connected_boundary_crystallization(self):
        for graph in corpus.connected_boundary_crystallizations():
            report = recognition.check_g_relations(graph)
            self.assertTrue(report.all_hold, report)

    def test_preconditions(self):
        with self.assertRaises(errors.GemError) as caught:
            recognition.check_g_relations(rp2_product())
        self.assertEqual(caught.exception.code, errors.ErrorCode.DISCONNECTED_BOUNDARY)
        with self.assertRaises(errors.GemError) as caught:
            recognition.check_g_relations(corpus.rp2_cone())
        self.assertEqual(caught.exception.code, errors.ErrorCode.NOT_A_CRYSTALLIZATION)


class TestHandlebody(unittest.TestCase):

    def test_examples(self):
        self.assertTrue(recognition.is_handlebody(constructions.d3_gem()))
        self.assertTrue(recognition.is_handlebody(constructions.handlebody_orientable(3)))
        self.assertFalse(recognition.is_handlebody(constructions.non_handlebody(1, constructions.SeedName.RP3)))

    def test_witness(self):
        result = recognition.handlebody_witness(constructions.handlebody_orientable(3))
        self.assertEqual(result.witness_pair, (0, 1))
        self.assertEqual(result.witness_value, 4)
        self.assertEqual(result.target, 4)
        self.assertTrue(result.below_threshold)

    def test_disconnected_boundary(self):
        with self.assertRaises(errors.GemError) as caught:
            recognition.is_handlebody(rp2_product())
        self.assertEqual(caught.exception.code, errors.ErrorCode.DISCONNECTED_BOUNDARY)

    def test_threshold(self):
        for graph in corpus.connected_boundary_crystallizations():
            result = recognition.handlebody_witness(graph)
            if result.below_threshold:
                self.assertTrue(result.verdict)

    def test_seed_sums_sit_on_threshold(self):
        for (seed, n), graph in corpus.seed_sums().items():
            result = recognition.handlebody_witness(graph)
            self.assertEqual(graph.vertex_count, 6 * n + 8)
            self.assertFalse(result.verdict, (seed, n))
            self.assertFalse(result.below_threshold)
            self.assertEqual(gem_core.vertex_stats(graph).p - 1, 3 * (n + 1))


class TestRhoDecomposition(unittest.TestCase):

    def test_seed_sum(self):
        result = recognition.rho_decomposition(constructions.non_handlebody(1, constructions.SeedName.RP3))
        self.assertEqual(result.cycle_counts, (1, 1, 1))
        self.assertEqual(result.predicted_rho, 2)
        self.assertTrue(result.holds)

    def test_corpus(self):
        for graph in corpus.connected_boundary_crystallizations():
            self.assertTrue(recognition.rho_decomposition(graph).holds)


class TestComplexityBounds(unittest.TestCase):

    def by_kind(self, graph):
        return {c.bound_kind: c for c in recognition.gem_complexity_bounds(graph)}

    def test_handlebody(self):
        certificates = self.by_kind(constructions.handlebody_orientable(3))
        boundary = certificates[recognition.BoundKind.FROM_BOUNDARY]
        self.assertEqual(boundary.lower_bound, 9)
        self.assertEqual(boundary.slack, 0)
        self.assertNotIn(recognition.BoundKind.NON_HANDLEBODY, certificates)

    def test_rp2_product(self):
        certificates = self.by_kind(rp2_product())
        boundary = certificates[recognition.BoundKind.FROM_BOUNDARY]
        self.assertEqual(boundary.genus_used, 1)
        self.assertEqual(boundary.h, 2)
        self.assertEqual(boundary.lower_bound, 6)
        self.assertEqual(boundary.slack, 1)

    def test_ball(self):
        for certificate in recognition.gem_complexity_bounds(constructions.d3_gem()):
            self.assertEqual(certificate.lower_bound, 0)
            self.assertEqual(certificate.slack, 0)

    def test_non_handlebody_is_sharp(self):
        for graph in corpus.seed_sums().values():
            certificate = self.by_kind(graph)[recognition.BoundKind.NON_HANDLEBODY]
            self.assertEqual(certificate.slack, 0)

    def test_handlebody_sums_are_sharp(self):
        for genera, graph in corpus.handlebody_sums().items():
            certificates = self.by_kind(graph)
            self.assertNotIn(recognition.BoundKind.NON_HANDLEBODY, certificates)
            for kind in (recognition.BoundKind.FROM_RHO, recognition.BoundKind.FROM_BOUNDARY):
                self.assertEqual(certificates[kind].h, len(genera[0]) + len(genera[1]), genera)
                self.assertEqual(certificates[kind].slack, 0, genera)

    def test_lower_bound_formula(self):
        for graph in corpus.connected_boundary_crystallizations() + list(corpus.products().values()):
            for certificate in recognition.gem_complexity_bounds(graph):
                if certificate.bound_kind == recognition.BoundKind.NON_HANDLEBODY:
                    expected = (certificate.genus_used + 1) * 3
                else:
                    expected = (certificate.genus_used + certificate.h - 1) * 3
                self.assertEqual(certificate.lower_bound, expected)
                self.assertTrue(certificate.holds)

    def test_rho_inequality_on_verified_gems(self):
        for graph in corpus.boundary_gems():
            report = recognition.verify_boundary3(graph)
            if not report.verdict:
                continue
            rho = genus.regular_genus(graph).rho
            self.assertGreaterEqual(report.p - 1, (rho + report.h - 1) * 3)

    def test_rejects_non_crystallization(self):
        with self.assertRaises(errors.GemError) as caught:
            recognition.gem_complexity_bounds(corpus.two_block_graph())
        self.assertEqual(caught.exception.code, errors.ErrorCode.NOT_A_CRYSTALLIZATION)

    def test_product_range(self):
        low, high = recognition.product_complexity_range(constructions.rp2_gem())
        self.assertEqual((low, high), (6, 7))
        for name, graph in corpus.products().items():
            spec = corpus.SURFACES[name]
            low, high = recognition.product_complexity_range(constructions.surface_gem(spec))
            self.assertEqual(gem_core.vertex_stats(graph).p - 1, high)
            self.assertLessEqual(low, high)


class TestEulerOracle(unittest.TestCase):

    def test_closed_gems(self):
        for graph in corpus.closed_gems().values():
            self.assertEqual(gem_core.complex_summary(graph).euler_characteristic, 0)

    def test_boundary_gems(self):
        graphs = corpus.connected_boundary_crystallizations() + list(corpus.products().values())
        for graph in graphs:
            boundary = recognition.boundary_regular_genus(graph)
            total_chi = sum(component.chi for component in boundary.components)
            self.assertEqual(2 * gem_core.complex_summary(graph).euler_characteristic, total_chi)

    def test_handlebody_rho_matches_oracle(self):
        for n in range(5):
            graph = constructions.handlebody_orientable(n)
            self.assertEqual(gem_core.complex_summary(graph).euler_characteristic, 1 - n)
            self.assertEqual(genus.regular_genus(graph).rho, n)


if __name__ == "__main__":
    unittest.main()
