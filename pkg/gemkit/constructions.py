# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Generators for handlebodies and their sums, surfaces, products with an interval and closed seeds."""

import dataclasses
import enum
import logging
import pathlib

from gemkit import constants
from gemkit import errors
from gemkit import gem_core
from gemkit import gem_file
from gemkit import moves
from gemkit import recognition

logger = logging.getLogger(__name__)


class SurfaceKind(enum.Enum):
    ORIENTABLE = "orientable"
    NONORIENTABLE = "nonorientable"


@dataclasses.dataclass(frozen=True)
class SurfaceSpec:
    kind: SurfaceKind
    parameter: int

    def __post_init__(self):
        minimum = 1 if self.kind == SurfaceKind.NONORIENTABLE else 0
        if self.parameter < minimum:
            raise errors.GemError(
                errors.ErrorCode.INVALID_PARAMETER,
                "%s surfaces need parameter >= %d, got %d"
                % (self.kind.value, minimum, self.parameter))

    @property
    def euler_characteristic(self):
        if self.kind == SurfaceKind.ORIENTABLE:
            return 2 - 2 * self.parameter
        return 2 - self.parameter


class SeedName(enum.Enum):
    S2xS1 = "s2xs1"
    RP3 = "rp3"
    TWISTED_S2xS1 = "twisted_s2xs1"


def s3_gem():
    return gem_core.from_matchings(3, 2, [[(0, 1)]] * 4)


def d3_gem():
    return gem_core.from_matchings(3, 2, [[(0, 1)], [(0, 1)], [(0, 1)], []])


def sphere_surface_gem():
    return gem_core.from_matchings(2, 2, [[(0, 1)]] * 3)


def rp2_gem():
    return gem_core.from_matchings(2, 4, [
        [(0, 1), (2, 3)],
        [(1, 2), (3, 0)],
        [(0, 2), (1, 3)],
    ])


def torus_gem():
    # hexagon 0..5 alternating colors 0 and 1, antipodal color 2 chords
    return gem_core.from_matchings(2, 6, [
        [(0, 1), (2, 3), (4, 5)],
        [(1, 2), (3, 4), (5, 0)],
        [(0, 3), (1, 4), (2, 5)],
    ])


def _handlebody(n, orientable):
    if n == 0:
        return d3_gem()
    size = constants.HANDLEBODY_BLOCK_SIZE
    vertex_count = size * n + 2
    color0 = [(1, 2)]
    color1 = [(1, 3)]
    color2 = [(0, 1)]
    color3 = []
    for block in range(n):
        b = size * block
        last = block == n - 1
        # upper chain 1-2-6-8-... closes at v0 with color 0, lower chain 1-3-7-9-... with color 1
        color1.append((b + 2, b + 6))
        color0.append((b + 6, 0 if last else b + 8))
        color0.append((b + 3, b + 7))
        color1.append((b + 7, 0 if last else b + 9))
        color0.append((b + 4, b + 5))
        color1.append((b + 4, b + 5))
        color2.append((b + 3, b + 7))
        if orientable:
            color2.extend([(b + 2, b + 4), (b + 6, b + 5)])
        else:
            color2.extend([(b + 2, b + 5), (b + 6, b + 4)])
        color3.append((b + 3, b + 4))
    graph = gem_core.from_matchings(3, vertex_count, [color0, color1, color2, color3])
    logger.info("Built %s handlebody of genus %d: %d vertices",
                "orientable" if orientable else "non-orientable", n, vertex_count)
    return graph


def handlebody_orientable(n):
    if n < 0:
        raise errors.GemError(errors.ErrorCode.INVALID_PARAMETER, "genus must be >= 0, got %d" % n)
    return _handlebody(n, True)


def handlebody_nonorientable(n):
    if n < 1:
        raise errors.GemError(errors.ErrorCode.INVALID_PARAMETER,
                              "non-orientable genus must be >= 1, got %d" % n)
    return _handlebody(n, False)


def surface_gem(spec):
    """Closed surface gem by connected sum of torus or projective-plane blocks."""
    if spec.parameter == 0:
        return sphere_surface_gem()
    block = torus_gem if spec.kind == SurfaceKind.ORIENTABLE else rp2_gem
    graph = block()
    for _ in range(spec.parameter - 1):
        graph = moves.connected_sum(graph, 0, block(), 0).graph
    logger.info("Built %s surface with parameter %d: %d vertices",
                spec.kind.value, spec.parameter, graph.vertex_count)
    return graph


# surface color -> product color, per copy; missing colors are dropped
PRODUCT_SUBSTITUTIONS = (
    {0: 0, 1: 1},
    {1: 1, 2: 3},
    {0: 2, 2: 3},
    {0: 2, 1: 0},
)
# color joining copy m to copy m+1
PRODUCT_JOINS = (2, 0, 1)
# a vertex on the far boundary sphere of the sphere product
SHELL_INNER_VERTEX = 6


def product_with_interval(surface):
    """The four-copy crystallization of S x [0,1] from a surface gem of S."""
    recognition.check_surface(surface)
    size = surface.vertex_count
    matchings = [[] for _ in range(4)]
    for copy, substitution in enumerate(PRODUCT_SUBSTITUTIONS):
        offset = copy * size
        for source, target in substitution.items():
            matchings[target].extend((a + offset, b + offset) for a, b in surface.edges(source))
    for copy, color in enumerate(PRODUCT_JOINS):
        offset = copy * size
        matchings[color].extend((v + offset, v + offset + size) for v in range(size))
    graph = gem_core.from_matchings(3, constants.PRODUCT_COPIES * size, matchings)
    logger.info("Built product with interval: %d -> %d vertices", size, graph.vertex_count)
    return graph


def seed_path(name):
    return pathlib.Path(__file__).parent / constants.DATA_DIR / (name.value + constants.SEED_SUFFIX)


def closed_seed(name):
    return gem_file.read_gem(seed_path(SeedName(name)))


def non_handlebody(n, seed, orientable=True):
    """A 6n+8 vertex crystallization of a handlebody summed with a closed seed.

    For n = 0 the seed is punctured instead, as the 2-vertex ball has no
    interior vertex to sum at.
    """
    seed_graph = closed_seed(seed)
    if n == 0:
        return moves.puncture(seed_graph, 0).graph
    handlebody = handlebody_orientable(n) if orientable else handlebody_nonorientable(n)
    vertex = handlebody.interior_vertices()[0]
    return moves.connected_sum(handlebody, vertex, seed_graph, 0).graph


def handlebody_sum(orientable_genera=(), nonorientable_genera=()):
    """A crystallization of the connected sum of one handlebody per genus.

    Each handlebody after the first is joined by boundary sums through a copy
    of the sphere times an interval, so every summand keeps its own boundary
    surface. The result has 6G + 6h - 4 vertices for total genus G and h
    components. Orientable components come first.
    """
    pieces = ([(n, True) for n in orientable_genera]
              + [(n, False) for n in nonorientable_genera])
    if not pieces:
        raise errors.GemError(errors.ErrorCode.INVALID_PARAMETER,
                              "a handlebody sum needs at least one component")
    builders = {True: handlebody_orientable, False: handlebody_nonorientable}
    handlebodies = [builders[orientable](n) for n, orientable in pieces]
    graph = handlebodies[0]
    for piece in handlebodies[1:]:
        shell = product_with_interval(sphere_surface_gem())
        summed = moves.connected_sum(graph, graph.boundary_vertices()[0], shell, 0)
        inner = summed.relabelings[1][SHELL_INNER_VERTEX]
        graph = summed.graph
        if piece.vertex_count > 2:
            graph = moves.connected_sum(graph, inner, piece, piece.boundary_vertices()[0]).graph
    logger.info("Built sum of %d handlebodies: %d vertices", len(pieces), graph.vertex_count)
    return graph
