# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Tests for gemkit.moves."""

import unittest

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from gemkit import constructions
from gemkit import errors
from gemkit import gem_core
from gemkit import moves
from gemkit import recognition
from gemkit.tests import corpus


class TestConnectedSum(unittest.TestCase):

    def test_sphere_is_neutral(self):
        seed = constructions.closed_seed(constructions.SeedName.RP3)
        result = moves.connected_sum(constructions.s3_gem(), 0, seed, 0)
        self.assertEqual(result.graph, seed)
        self.assertEqual(result.notes, ())
        sphere = moves.connected_sum(constructions.s3_gem(), 0, constructions.s3_gem(), 0)
        self.assertEqual(sphere.graph, constructions.s3_gem())

    def test_handlebody_and_seed(self):
        handlebody = constructions.handlebody_orientable(1)
        seed = constructions.closed_seed(constructions.SeedName.S2xS1)
        result = moves.connected_sum(handlebody, 3, seed, 0)
        self.assertEqual(result.graph.vertex_count, 14)
        first, second = result.relabelings
        self.assertEqual(first, {0: 0, 1: 1, 2: 2, 4: 3, 5: 4, 6: 5, 7: 6})
        self.assertEqual(sorted(second.values()), list(range(7, 14)))
        self.assertEqual(result.graph, constructions.non_handlebody(1, constructions.SeedName.S2xS1))

    def test_boundary_vertices_leave_a_note(self):
        with self.assertLogs("gemkit.moves", level="WARNING"):
            result = moves.connected_sum(constructions.d3_gem(), 0, constructions.d3_gem(), 0)
        self.assertEqual(result.graph, constructions.d3_gem())
        self.assertEqual(len(result.notes), 1)

    def test_color_mismatch(self):
        with self.assertRaises(errors.GemError) as caught:
            moves.connected_sum(constructions.d3_gem(), 0, constructions.s3_gem(), 0)
        self.assertEqual(caught.exception.code, errors.ErrorCode.COLOR_MISMATCH)

    def test_dimension_mismatch(self):
        with self.assertRaises(errors.GemError) as caught:
            moves.connected_sum(constructions.s3_gem(), 0, constructions.rp2_gem(), 0)
        self.assertEqual(caught.exception.code, errors.ErrorCode.DIMENSION)

    def test_invalid_vertex(self):
        with self.assertRaises(errors.GemError) as caught:
            moves.connected_sum(constructions.s3_gem(), 2, constructions.s3_gem(), 0)
        self.assertEqual(caught.exception.code, errors.ErrorCode.INVALID_VERTEX)


class TestDipoles(unittest.TestCase):

    def test_find(self):
        self.assertEqual(moves.find_1_dipoles(constructions.s3_gem()), [])
        self.assertEqual(moves.find_1_dipoles(corpus.two_block_graph()), [moves.DipoleSite(1, 2, 3)])
        self.assertEqual(moves.find_1_dipoles(constructions.handlebody_orientable(1)), [])

    def test_cancel_to_ball(self):
        result = moves.cancel_1_dipole(corpus.two_block_graph(), moves.DipoleSite(1, 2, 3))
        self.assertEqual(result.graph, constructions.d3_gem())
        self.assertEqual(result.relabeling, {0: 0, 3: 1})

    def test_invalid_sites(self):
        cases = [
            (constructions.s3_gem(), moves.DipoleSite(0, 1, 0)),
            (corpus.two_block_graph(), moves.DipoleSite(0, 2, 3)),
        ]
        for graph, site in cases:
            with self.assertRaises(errors.GemError) as caught:
                moves.cancel_1_dipole(graph, site)
            self.assertEqual(caught.exception.code, errors.ErrorCode.INVALID_SITE)

    def test_insert_reports_site(self):
        result, site = moves.insert_1_dipole(constructions.s3_gem(), 0, 3)
        self.assertEqual(site, moves.DipoleSite(2, 3, 3))
        self.assertEqual(result.graph.vertex_count, 4)
        self.assertIn(site, moves.find_1_dipoles(result.graph))

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_insert_then_cancel(self, data):
        graph = data.draw(corpus.random_gems(dims=(3,)))
        vertex = data.draw(st.integers(min_value=0, max_value=graph.vertex_count - 1))
        color = data.draw(st.sampled_from(graph.colors))
        result, site = moves.insert_1_dipole(graph, vertex, color)
        self.assertEqual(moves.cancel_1_dipole(result.graph, site).graph, graph)

    def test_reduce_twice_inserted_ball(self):
        first, _ = moves.insert_1_dipole(constructions.d3_gem(), 0, 0)
        second, _ = moves.insert_1_dipole(first.graph, 1, 1)
        reduced, cancelled, mapping = moves.reduce_1_dipoles(second.graph)
        self.assertEqual(reduced, constructions.d3_gem())
        self.assertEqual(len(cancelled), 2)
        self.assertEqual(sorted(mapping.values()), [0, 1])

    def test_reduce_leaves_contracted_gems_alone(self):
        graph = constructions.handlebody_orientable(2)
        reduced, cancelled, mapping = moves.reduce_1_dipoles(graph)
        self.assertEqual(reduced, graph)
        self.assertEqual(cancelled, [])
        self.assertEqual(mapping, {v: v for v in range(graph.vertex_count)})

    def test_inserted_site_is_found(self):
        for (vertex, color), graph in corpus.dipole_variants().items():
            self.assertIn(moves.DipoleSite(8, 9, color), moves.find_1_dipoles(graph), (vertex, color))

    def test_every_cancellation_keeps_a_valid_gem(self):
        for graph in corpus.dipole_variants().values():
            twice_genus = gem_core.boundary_twice_genus(graph)
            for site in moves.find_1_dipoles(graph):
                try:
                    result = moves.cancel_1_dipole(graph, site).graph
                except errors.GemError as e:
                    self.assertEqual(e.code, errors.ErrorCode.INVALID_SITE)
                    continue
                self.assertEqual(result.vertex_count, graph.vertex_count - 2)
                self.assertEqual(gem_core.residue_count(result, result.colors), 1)
                self.assertEqual(gem_core.boundary_twice_genus(result), twice_genus)

    def assertFullyReduced(self, graph):
        for site in moves.find_1_dipoles(graph):
            with self.assertRaises(errors.GemError) as caught:
                moves.cancel_1_dipole(graph, site)
            self.assertEqual(caught.exception.code, errors.ErrorCode.INVALID_SITE)

    def test_reduced_variants_are_handlebodies(self):
        for graph in corpus.dipole_variants().values():
            reduced, _, _ = moves.reduce_1_dipoles(graph)
            self.assertFullyReduced(reduced)
            self.assertEqual(gem_core.boundary_twice_genus(reduced), 2)
            report = recognition.verify_boundary3(reduced)
            if report.verdict and report.h == 1:
                self.assertTrue(recognition.is_handlebody(reduced))

    def test_mixed_site_rejected(self):
        graph = corpus.mixed_site_graph()
        sites = moves.find_1_dipoles(graph)
        self.assertEqual(sites, [moves.DipoleSite(0, 1, 0), moves.DipoleSite(2, 3, 0)])
        for site in sites:
            with self.assertRaises(errors.GemError) as caught:
                moves.cancel_1_dipole(graph, site)
            self.assertEqual(caught.exception.code, errors.ErrorCode.INVALID_SITE)
            self.assertIn("boundary vertex to an interior one", str(caught.exception))

    def test_reduce_skips_mixed_sites(self):
        graph = corpus.mixed_site_graph()
        reduced, cancelled, mapping = moves.reduce_1_dipoles(graph)
        self.assertEqual(reduced, graph)
        self.assertEqual(cancelled, [])
        self.assertEqual(mapping, {v: v for v in range(4)})

    def test_product_reductions_keep_the_boundary(self):
        for name, product in corpus.products().items():
            reduced, cancelled, _ = moves.reduce_1_dipoles(product)
            graph = product
            twice_genus = gem_core.boundary_twice_genus(product)
            h = gem_core.boundary_graph(product).h
            for site in cancelled:
                graph = moves.cancel_1_dipole(graph, site).graph
                self.assertEqual(gem_core.boundary_twice_genus(graph), twice_genus, name)
                self.assertLessEqual(gem_core.boundary_graph(graph).h, h, name)
                h = gem_core.boundary_graph(graph).h
            self.assertEqual(graph, reduced, name)
            self.assertEqual(twice_genus, 2 * corpus.SURFACE_TWICE_GENUS[name], name)
            self.assertFullyReduced(reduced)
            if name != "sphere":
                self.assertNotEqual(reduced, constructions.d3_gem(), name)


class TestPuncture(unittest.TestCase):

    def test_sphere_becomes_ball(self):
        result = moves.puncture(constructions.s3_gem(), 0)
        self.assertEqual(result.graph, constructions.d3_gem())

    def test_seed(self):
        graph = moves.puncture(constructions.closed_seed(constructions.SeedName.RP3), 0).graph
        self.assertEqual(len(graph.boundary_vertices()), 2)
        self.assertEqual(gem_core.boundary_graph(graph).h, 1)

    def test_boundary_vertex_rejected(self):
        with self.assertRaises(errors.GemError) as caught:
            moves.puncture(constructions.d3_gem(), 0)
        self.assertEqual(caught.exception.code, errors.ErrorCode.INVALID_VERTEX)


class TestJoin(unittest.TestCase):

    def test_rp2_product(self):
        product = constructions.product_with_interval(constructions.rp2_gem())
        joined = moves.join_boundary_components(product).graph
        self.assertEqual(joined.vertex_count, product.vertex_count)
        report = recognition.verify_boundary3(joined)
        self.assertTrue(report.verdict)
        self.assertEqual(report.h, 1)
        check = moves.check_join(product, joined)
        self.assertEqual(check.h, 2)
        self.assertEqual(check.rho_before, 1)
        self.assertEqual(check.rho_after, 2)
        self.assertTrue(check.all_hold)

    def test_torus_product_keeps_vertices(self):
        product = constructions.product_with_interval(constructions.torus_gem())
        joined = moves.join_boundary_components(product).graph
        self.assertEqual(joined.vertex_count, 24)
        self.assertEqual(len(joined.boundary_vertices()), len(product.boundary_vertices()) - 2)

    def test_every_product(self):
        for name, product in corpus.products().items():
            joined = corpus.joined_products()[name]
            self.assertEqual(gem_core.boundary_graph(joined).h, 1, name)
            self.assertTrue(recognition.verify_boundary3(joined).verdict, name)
            self.assertTrue(moves.check_join(product, joined).all_hold, name)

    def test_errors(self):
        cases = [
            (constructions.d3_gem(), errors.ErrorCode.CONNECTED_BOUNDARY),
            (constructions.s3_gem(), errors.ErrorCode.CLOSED_GRAPH),
            (constructions.rp2_gem(), errors.ErrorCode.DIMENSION),
        ]
        for graph, code in cases:
            with self.assertRaises(errors.GemError) as caught:
                moves.join_boundary_components(graph)
            self.assertEqual(caught.exception.code, code)


if __name__ == "__main__":
    unittest.main()
