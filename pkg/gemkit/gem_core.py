# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Colored multigraph model, gem validation and residue censuses."""

import dataclasses
import logging

import networkx as nx

from gemkit import constants
from gemkit import errors
from gemkit import utils

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ColoredGraph:
    """A properly edge-colored multigraph, regular with respect to color dim.

    Colors run 0..dim. Every color below dim is a perfect matching, color dim
    may leave vertices uncovered: those are the boundary vertices. Build
    instances with from_matchings, which validates everything eagerly.
    """

    dim: int
    vertex_count: int
    matchings: tuple
    partners: tuple = dataclasses.field(default=(), compare=False, repr=False)

    @property
    def colors(self):
        return range(self.dim + 1)

    @property
    def regular_color(self):
        return self.dim

    def partner(self, vertex, color):
        """The vertex joined to vertex by color, or None."""
        return self.partners[color][vertex]

    def has_color(self, vertex, color):
        return self.partners[color][vertex] is not None

    def edges(self, color):
        return sorted(self.matchings[color])

    def all_edges(self):
        for color in self.colors:
            for a, b in self.edges(color):
                yield a, b, color

    def boundary_vertices(self):
        missing = self.partners[self.dim]
        return [v for v in range(self.vertex_count) if missing[v] is None]

    def interior_vertices(self):
        missing = self.partners[self.dim]
        return [v for v in range(self.vertex_count) if missing[v] is not None]

    @property
    def is_closed(self):
        return len(self.matchings[self.dim]) * 2 == self.vertex_count

    def check_vertex(self, vertex):
        if not 0 <= vertex < self.vertex_count:
            raise errors.GemError(
                errors.ErrorCode.INVALID_VERTEX,
                "vertex %d not in 0..%d" % (vertex, self.vertex_count - 1))

    def check_color(self, color):
        if not 0 <= color <= self.dim:
            raise errors.GemError(
                errors.ErrorCode.INVALID_COLOR,
                "color %d not in 0..%d" % (color, self.dim))


@dataclasses.dataclass(frozen=True)
class VertexStats:
    p: int
    p_bar: int
    p_dot: int

    @property
    def is_closed(self):
        return self.p_bar == 0


@dataclasses.dataclass(frozen=True)
class Census:
    """Residue counts g_B for every color subset B and cycle counts C_ij."""

    dim: int
    stats: VertexStats
    residue_counts: dict
    cycle_counts: dict

    def g(self, *colors):
        return self.residue_counts[frozenset(colors)]

    def c(self, i, j):
        return self.cycle_counts[frozenset((i, j))]


@dataclasses.dataclass(frozen=True)
class BoundaryGraph:
    """The boundary gem together with its component decomposition.

    graph has dim d-1 and is generally disconnected. Boundary-graph vertex k
    stands for parent vertex parent_vertices[k].
    """

    graph: ColoredGraph
    parent_vertices: tuple
    component_ids: tuple
    h: int
    boundary_cycle_counts: dict

    def component_of(self, parent_vertex):
        return self.component_ids[self.parent_vertices.index(parent_vertex)]

    def component_vertices(self):
        """Boundary-graph vertex lists per component, in component order."""
        groups = [[] for _ in range(self.h)]
        for vertex, component in enumerate(self.component_ids):
            groups[component].append(vertex)
        return groups

    def component_parent_vertices(self):
        return [[self.parent_vertices[v] for v in group]
                for group in self.component_vertices()]

    def component_graphs(self):
        """One connected closed gem per boundary component."""
        return [induced_subgraph(self.graph, group)
                for group in self.component_vertices()]

    def cycle_count(self, i, j):
        return self.boundary_cycle_counts[frozenset((i, j))]


@dataclasses.dataclass(frozen=True)
class ComplexSummary:
    f_vector: tuple
    euler_characteristic: int
    vertex_count_of_complex: int
    h: int
    crystallization_vertex_condition: bool


def _assemble(dim, vertex_count, matchings, connected, perfect_colors):
    """Validate and freeze matchings; colors below perfect_colors must cover every vertex."""
    if vertex_count <= 0 or vertex_count % 2:
        raise errors.GemError(
            errors.ErrorCode.INVALID_PARAMETER,
            "vertex count must be even and positive, got %d" % vertex_count)
    if len(matchings) != dim + 1:
        raise errors.GemError(
            errors.ErrorCode.DIMENSION,
            "expected %d color classes for dim %d, got %d" % (dim + 1, dim, len(matchings)))

    frozen = []
    partners = []
    for color, pairs in enumerate(matchings):
        partner = [None] * vertex_count
        normalized = set()
        for a, b in pairs:
            if a == b:
                raise errors.GemError(
                    errors.ErrorCode.LOOP_EDGE,
                    "color %d has a loop at vertex %d" % (color, a))
            for v in (a, b):
                if not 0 <= v < vertex_count:
                    raise errors.GemError(
                        errors.ErrorCode.VERTEX_OUT_OF_RANGE,
                        "color %d uses vertex %d outside 0..%d" % (color, v, vertex_count - 1))
                if partner[v] is not None:
                    raise errors.GemError(
                        errors.ErrorCode.DUPLICATE_VERTEX,
                        "vertex %d appears twice in color %d" % (v, color))
            partner[a] = b
            partner[b] = a
            normalized.add(utils.normalize_pair(a, b))
        if color < perfect_colors and len(normalized) * 2 != vertex_count:
            raise errors.GemError(
                errors.ErrorCode.NON_PERFECT_MATCHING,
                "color %d covers %d of %d vertices" % (color, len(normalized) * 2, vertex_count))
        frozen.append(frozenset(normalized))
        partners.append(tuple(partner))

    graph = ColoredGraph(dim, vertex_count, tuple(frozen), tuple(partners))
    if connected:
        components = residue_count(graph, graph.colors)
        if components != 1:
            raise errors.GemError(
                errors.ErrorCode.DISCONNECTED,
                "graph has %d connected components" % components)
    return graph


def from_matchings(dim, vertex_count, matchings, connected=True):
    """Build a validated gem from one collection of vertex pairs per color.

    Args:
        dim: d, the colors are 0..d with d the regular color
        vertex_count: number of vertices, even and positive
        matchings: d+1 iterables of (a, b) pairs
        connected: require a connected graph

    Raises:
        GemError: naming the violated invariant
    """
    if dim < constants.MIN_DIM:
        raise errors.GemError(errors.ErrorCode.DIMENSION, "dim must be >= %d" % constants.MIN_DIM)
    return _assemble(dim, vertex_count, [list(m) for m in matchings], connected, dim)


def induced_subgraph(graph, vertices):
    """The subgraph on a union of components, relabeled densely in ascending order."""
    mapping = {old: new for new, old in enumerate(sorted(vertices))}
    matchings = []
    for color in graph.colors:
        matchings.append([(mapping[a], mapping[b]) for a, b in graph.edges(color)
                          if a in mapping and b in mapping])
    return _assemble(graph.dim, len(mapping), matchings, True,
                     graph.dim + (1 if graph.is_closed else 0))


def vertex_stats(graph):
    boundary = len(graph.boundary_vertices())
    p = graph.vertex_count // 2
    return VertexStats(p=p, p_bar=boundary // 2, p_dot=p - boundary // 2)


def _check_colors(graph, colors):
    colors = frozenset(colors)
    for color in colors:
        graph.check_color(color)
    return colors


def residue_labels(graph, colors):
    """Per-vertex component label (smallest vertex of its component)."""
    sets = nx.utils.UnionFind(range(graph.vertex_count))
    for color in _check_colors(graph, colors):
        for a, b in graph.matchings[color]:
            sets.union(a, b)
    smallest = {}
    return [smallest.setdefault(sets[vertex], vertex) for vertex in range(graph.vertex_count)]


def residue_components(graph, colors):
    """Vertex lists of the components of the residue keeping only colors."""
    groups = {}
    for vertex, label in enumerate(residue_labels(graph, colors)):
        groups.setdefault(label, []).append(vertex)
    return [groups[label] for label in sorted(groups)]


def residue_count(graph, colors):
    return len(set(residue_labels(graph, colors)))


def cycle_count(graph, i, j):
    """Number of {i,j}-residues that are closed alternating cycles."""
    if i == j:
        raise errors.GemError(errors.ErrorCode.INVALID_COLOR, "cycle colors must differ, got %d twice" % i)
    count = 0
    for component in residue_components(graph, (i, j)):
        if all(graph.has_color(v, i) and graph.has_color(v, j) for v in component):
            count += 1
    return count


def is_bipartite(graph):
    multigraph = nx.MultiGraph()
    multigraph.add_nodes_from(range(graph.vertex_count))
    multigraph.add_edges_from((a, b) for a, b, _ in graph.all_edges())
    return nx.is_bipartite(multigraph)


def is_contracted(graph):
    full = set(graph.colors)
    return all(residue_count(graph, full - {c}) == 1 for c in graph.colors)


def is_boundary_contracted(graph):
    if graph.is_closed:
        raise errors.GemError(errors.ErrorCode.CLOSED_GRAPH, "graph has no boundary vertices")
    h = boundary_graph(graph).h
    full = set(graph.colors)
    if residue_count(graph, full - {graph.regular_color}) != 1:
        return False
    return all(residue_count(graph, full - {c}) == h for c in range(graph.dim))


def _trace_boundary_path(graph, start, color):
    """Follow the alternating (color, d)-path from a boundary vertex to its other end."""
    vertex = start
    while True:
        other = graph.partner(vertex, color)
        nxt = graph.partner(other, graph.regular_color)
        if nxt is None:
            return other
        vertex = nxt


def boundary_graph(graph):
    """Build the d-colored boundary gem on the boundary vertices."""
    boundary = graph.boundary_vertices()
    if not boundary:
        raise errors.GemError(errors.ErrorCode.CLOSED_GRAPH, "graph has no boundary vertices")
    index = {v: k for k, v in enumerate(boundary)}
    matchings = []
    for color in range(graph.dim):
        pairs = set()
        for u in boundary:
            end = _trace_boundary_path(graph, u, color)
            pairs.add(utils.normalize_pair(index[u], index[end]))
        matchings.append(pairs)

    bgraph = _assemble(graph.dim - 1, len(boundary), matchings, False, graph.dim)
    labels = residue_labels(bgraph, bgraph.colors)
    order = {label: k for k, label in enumerate(sorted(set(labels)))}
    component_ids = tuple(order[label] for label in labels)
    cycles = {}
    for i in range(bgraph.dim + 1):
        for j in range(i + 1, bgraph.dim + 1):
            cycles[frozenset((i, j))] = cycle_count(bgraph, i, j)
    logger.debug("Boundary graph: %d vertices, %d components", len(boundary), len(order))
    return BoundaryGraph(graph=bgraph, parent_vertices=tuple(boundary),
                         component_ids=component_ids, h=len(order),
                         boundary_cycle_counts=cycles)


def census(graph):
    residues = {subset: residue_count(graph, subset)
                for subset in utils.color_subsets(graph.colors)}
    cycles = {}
    for i in graph.colors:
        for j in range(i + 1, graph.dim + 1):
            cycles[frozenset((i, j))] = cycle_count(graph, i, j)
    return Census(dim=graph.dim, stats=vertex_stats(graph),
                  residue_counts=residues, cycle_counts=cycles)


def f_vector(graph, residues=None):
    """Simplex counts of K(graph): f_k sums g over complements of (k+1)-sets."""
    if residues is None:
        residues = census(graph).residue_counts
    full = frozenset(graph.colors)
    counts = [0] * (graph.dim + 1)
    for subset in utils.color_subsets(graph.colors):
        if subset:
            counts[len(subset) - 1] += residues[full - subset]
    return tuple(counts)


def complex_summary(graph):
    f = f_vector(graph)
    chi = sum((-1) ** k * count for k, count in enumerate(f))
    h = 0 if graph.is_closed else boundary_graph(graph).h
    return ComplexSummary(
        f_vector=f,
        euler_characteristic=chi,
        vertex_count_of_complex=f[0],
        h=h,
        crystallization_vertex_condition=f[0] == graph.dim * max(1, h) + 1)


def boundary_twice_genus(graph):
    """Sum of 2 - chi over the boundary components, or None for a closed gem."""
    if graph.is_closed:
        return None
    components = boundary_graph(graph).component_graphs()
    return sum(2 - complex_summary(component).euler_characteristic for component in components)
