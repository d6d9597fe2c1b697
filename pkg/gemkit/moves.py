# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Graph surgery on gems: connected sum, 1-dipoles and boundary joining."""

import dataclasses
import logging

from gemkit import errors
from gemkit import gem_core
from gemkit import genus

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class DipoleSite:
    x: int
    y: int
    color: int

    def __str__(self):
        return "(%d,%d,color %d)" % (self.x, self.y, self.color)


@dataclasses.dataclass(frozen=True)
class SurgeryResult:
    """A new graph plus, per input graph, the map from surviving old vertices to new ones."""

    graph: gem_core.ColoredGraph
    relabelings: tuple
    notes: tuple = ()

    @property
    def relabeling(self):
        return self.relabelings[0]


@dataclasses.dataclass(frozen=True)
class JoinReport:
    h: int
    cycles_preserved: bool
    interior_residues_preserved: bool
    boundary_cycles_shifted: bool
    rho_shifted: bool
    rho_before: genus.HalfInteger
    rho_after: genus.HalfInteger

    @property
    def all_hold(self):
        return (self.cycles_preserved and self.interior_residues_preserved
                and self.boundary_cycles_shifted and self.rho_shifted)


def _edge_lists(graph):
    return [set(graph.matchings[c]) for c in graph.colors]


def _rebuild(dim, vertex_count, edge_lists, removed):
    """Drop removed vertices, relabel survivors in ascending order and validate."""
    keep = [v for v in range(vertex_count) if v not in removed]
    mapping = {old: new for new, old in enumerate(keep)}
    matchings = [[(mapping[a], mapping[b]) for a, b in edges] for edges in edge_lists]
    return gem_core.from_matchings(dim, len(keep), matchings), mapping


def connected_sum(graph1, vertex1, graph2, vertex2):
    """Remove vertex1 and vertex2 and weld their hanging edges color by color.

    The result's first |V1|-1 vertices come from graph1, the rest from graph2.
    """
    if graph1.dim != graph2.dim:
        raise errors.GemError(errors.ErrorCode.DIMENSION,
                              "summands have dims %d and %d" % (graph1.dim, graph2.dim))
    graph1.check_vertex(vertex1)
    graph2.check_vertex(vertex2)
    notes = []
    for color in graph1.colors:
        if graph1.has_color(vertex1, color) != graph2.has_color(vertex2, color):
            raise errors.GemError(
                errors.ErrorCode.COLOR_MISMATCH,
                "color %d is present at only one of vertices %d and %d" % (color, vertex1, vertex2))
    if not (graph1.has_color(vertex1, graph1.dim) and graph2.has_color(vertex2, graph2.dim)):
        logger.warning("Connected sum at boundary vertices %d and %d: the result need not "
                       "represent the manifold sum", vertex1, vertex2)
        notes.append("summed at boundary vertices; no color %d edge welded" % graph1.dim)

    offset = graph1.vertex_count
    edge_lists = _edge_lists(graph1)
    for color in graph2.colors:
        edge_lists[color] |= {(a + offset, b + offset) for a, b in graph2.matchings[color]}
    for color in graph1.colors:
        if not graph1.has_color(vertex1, color):
            continue
        u1 = graph1.partner(vertex1, color)
        u2 = graph2.partner(vertex2, color)
        edges = edge_lists[color]
        edges.discard(tuple(sorted((vertex1, u1))))
        edges.discard(tuple(sorted((vertex2 + offset, u2 + offset))))
        edges.add((u1, u2 + offset))

    graph, mapping = _rebuild(graph1.dim, offset + graph2.vertex_count, edge_lists,
                              {vertex1, vertex2 + offset})
    first = {old: mapping[old] for old in range(graph1.vertex_count) if old != vertex1}
    second = {old: mapping[old + offset] for old in range(graph2.vertex_count) if old != vertex2}
    logger.info("Connected sum: %d + %d -> %d vertices",
                graph1.vertex_count, graph2.vertex_count, graph.vertex_count)
    return SurgeryResult(graph=graph, relabelings=(first, second), notes=tuple(notes))


def find_1_dipoles(graph):
    """Every 1-dipole, ordered by color and then by smaller endpoint."""
    sites = []
    full = set(graph.colors)
    for color in graph.colors:
        labels = gem_core.residue_labels(graph, full - {color})
        for x, y in graph.edges(color):
            if labels[x] != labels[y]:
                sites.append(DipoleSite(x, y, color))
    return sites


def _check_site(graph, site):
    graph.check_vertex(site.x)
    graph.check_vertex(site.y)
    graph.check_color(site.color)
    if graph.partner(site.x, site.color) != site.y:
        raise errors.GemError(errors.ErrorCode.INVALID_SITE,
                              "%d and %d are not joined by color %d" % (site.x, site.y, site.color))
    labels = gem_core.residue_labels(graph, set(graph.colors) - {site.color})
    if labels[site.x] == labels[site.y]:
        raise errors.GemError(errors.ErrorCode.INVALID_SITE,
                              "%s lies in a single %d-hat residue" % (site, site.color))
    regular = graph.regular_color
    if graph.has_color(site.x, regular) != graph.has_color(site.y, regular):
        raise errors.GemError(errors.ErrorCode.INVALID_SITE,
                              "%s joins a boundary vertex to an interior one" % site)


def cancel_1_dipole(graph, site):
    """Delete the dipole's two vertices and weld same-colored hanging edges.

    Raises:
        GemError: INVALID_SITE when site is no 1-dipole, when one endpoint is
            a boundary vertex and the other is not, or when the cancellation
            would change the total boundary genus
    """
    _check_site(graph, site)
    edge_lists = _edge_lists(graph)
    x, y = site.x, site.y
    edge_lists[site.color].discard(tuple(sorted((x, y))))
    for color in graph.colors:
        if color == site.color or not graph.has_color(x, color):
            continue
        a = graph.partner(x, color)
        b = graph.partner(y, color)
        edges = edge_lists[color]
        edges.discard(tuple(sorted((x, a))))
        edges.discard(tuple(sorted((y, b))))
        edges.add(tuple(sorted((a, b))))

    result, mapping = _rebuild(graph.dim, graph.vertex_count, edge_lists, {x, y})
    before = gem_core.boundary_twice_genus(graph)
    after = gem_core.boundary_twice_genus(result)
    if before != after:
        raise errors.GemError(errors.ErrorCode.INVALID_SITE,
                              "cancelling %s changes the boundary twice-genus from %s to %s"
                              % (site, before, after))
    logger.info("Cancelled 1-dipole %s: %d -> %d vertices", site,
                graph.vertex_count, result.vertex_count)
    return SurgeryResult(graph=result, relabelings=(mapping,))


def insert_1_dipole(graph, vertex, color):
    """Split vertex by a new 1-dipole of the given color; the inverse of cancel_1_dipole.

    Returns the SurgeryResult and the new site (2p, 2p+1, color).
    """
    graph.check_vertex(vertex)
    graph.check_color(color)
    x = graph.vertex_count
    y = x + 1
    edge_lists = _edge_lists(graph)
    for other in graph.colors:
        if other == color:
            continue
        partner = graph.partner(vertex, other)
        if partner is None:
            continue
        edges = edge_lists[other]
        edges.discard(tuple(sorted((vertex, partner))))
        edges.add((vertex, x))
        edges.add(tuple(sorted((y, partner))))
    edge_lists[color].add((x, y))
    result = gem_core.from_matchings(graph.dim, graph.vertex_count + 2, edge_lists)
    identity = {v: v for v in range(graph.vertex_count)}
    logger.info("Inserted 1-dipole of color %d at vertex %d", color, vertex)
    return SurgeryResult(graph=result, relabelings=(identity,)), DipoleSite(x, y, color)


def _first_cancellation(graph):
    for site in find_1_dipoles(graph):
        try:
            return site, cancel_1_dipole(graph, site)
        except errors.GemError as e:
            if e.code != errors.ErrorCode.INVALID_SITE:
                raise
            logger.debug("Skipping 1-dipole %s: %s", site, e)
    return None, None


def reduce_1_dipoles(graph):
    """Cancel 1-dipoles until none that keeps the boundary genus is left.

    Returns the reduced graph, the cancelled sites (in the labels current at
    each step) and the map from surviving original vertices to final ones.
    """
    mapping = {v: v for v in range(graph.vertex_count)}
    cancelled = []
    while True:
        site, result = _first_cancellation(graph)
        if site is None:
            break
        cancelled.append(site)
        mapping = {old: result.relabeling[new] for old, new in mapping.items()
                   if new in result.relabeling}
        graph = result.graph
    logger.info("Dipole reduction cancelled %d sites, %d vertices remain",
                len(cancelled), graph.vertex_count)
    return graph, cancelled, mapping


def puncture(graph, vertex):
    """Remove the regular-color edge at an interior vertex, opening a spherical boundary."""
    graph.check_vertex(vertex)
    partner = graph.partner(vertex, graph.regular_color)
    if partner is None:
        raise errors.GemError(errors.ErrorCode.INVALID_VERTEX,
                              "vertex %d is already a boundary vertex" % vertex)
    edge_lists = _edge_lists(graph)
    edge_lists[graph.regular_color].discard(tuple(sorted((vertex, partner))))
    result = gem_core.from_matchings(graph.dim, graph.vertex_count, edge_lists)
    identity = {v: v for v in range(graph.vertex_count)}
    return SurgeryResult(graph=result, relabelings=(identity,),
                         notes=("vertices %d and %d are now boundary vertices" % (vertex, partner),))


def join_boundary_components(graph):
    """Connect the h boundary components with h-1 new color-3 edges."""
    if graph.dim != 3:
        raise errors.GemError(errors.ErrorCode.DIMENSION, "boundary joining needs dim 3, got %d" % graph.dim)
    boundary = gem_core.boundary_graph(graph)
    if boundary.h == 1:
        raise errors.GemError(errors.ErrorCode.CONNECTED_BOUNDARY, "boundary is already connected")

    components = boundary.component_parent_vertices()
    unused = list(components[0])
    joined = list(components[0])
    edge_lists = _edge_lists(graph)
    for component in components[1:]:
        # component 1 first; once exhausted, any unused vertex already joined
        source = unused.pop(0) if unused else min(v for v in joined if not _covered(edge_lists, v))
        target = component[0]
        edge_lists[graph.regular_color].add((source, target))
        joined.extend(component)
        logger.debug("Joined boundary vertices %d and %d", source, target)

    result = gem_core.from_matchings(graph.dim, graph.vertex_count, edge_lists)
    logger.info("Joined %d boundary components with %d edges", boundary.h, boundary.h - 1)
    identity = {v: v for v in range(graph.vertex_count)}
    return SurgeryResult(graph=result, relabelings=(identity,))


def _covered(edge_lists, vertex):
    return any(vertex in edge for edge in edge_lists[-1])


def check_join(before, after):
    """Census and genus shifts expected when h boundary components are joined."""
    boundary_before = gem_core.boundary_graph(before)
    h = boundary_before.h
    census_before = gem_core.census(before)
    census_after = gem_core.census(after)
    boundary_after = gem_core.boundary_graph(after)
    rho_before = genus.regular_genus(before).rho
    rho_after = genus.regular_genus(after).rho
    return JoinReport(
        h=h,
        cycles_preserved=all(census_after.c(i, 3) == census_before.c(i, 3) for i in range(3)),
        interior_residues_preserved=all(census_after.g(j, k) == census_before.g(j, k)
                                        for j, k in ((0, 1), (0, 2), (1, 2))),
        boundary_cycles_shifted=all(
            boundary_after.boundary_cycle_counts[pair] == count - (h - 1)
            for pair, count in boundary_before.boundary_cycle_counts.items()),
        rho_shifted=rho_after == rho_before + h - 1,
        rho_before=rho_before,
        rho_after=rho_after)
