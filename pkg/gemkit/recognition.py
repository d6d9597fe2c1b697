# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Crystallization checks, boundary genus, handlebody criterion and complexity bounds.

Everything here works on 4-colored gems (dim 3) except check_surface and
product_complexity_range, which take 3-colored surface gems.
"""

import dataclasses
import enum
import fractions
import itertools
import logging

from gemkit import constants
from gemkit import errors
from gemkit import gem_core
from gemkit import genus

logger = logging.getLogger(__name__)

INTERIOR_PAIRS = ((0, 1), (0, 2), (1, 2))
# (i, j, k) with {j, k} the complement of i in {0, 1, 2}
RELATION_TRIPLES = ((0, 1, 2), (1, 0, 2), (2, 0, 1))


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    condition_i: bool
    condition_ii: bool
    condition_iii: bool
    h: int
    p: int
    p_bar: int
    hat_residues: tuple
    differences: tuple
    target: fractions.Fraction
    residue_sum: int
    diagnostics: tuple

    @property
    def verdict(self):
        return self.condition_i and self.condition_ii and self.condition_iii


@dataclasses.dataclass(frozen=True)
class ResidueFailure:
    color: int
    vertex: int
    vertex_count: int
    pair_residues: int
    expected: int


@dataclasses.dataclass(frozen=True)
class ClosedVerificationReport:
    manifold: bool
    contracted: bool
    failures: tuple

    @property
    def verdict(self):
        return self.manifold and self.contracted


@dataclasses.dataclass(frozen=True)
class BoundaryComponent:
    vertex_count: int
    orientable: bool
    chi: int
    regular_genus: genus.HalfInteger
    odd_crosscap: bool
    smallest_vertex: int


@dataclasses.dataclass(frozen=True)
class BoundaryGenusReport:
    components: tuple
    total: genus.HalfInteger
    vertex_count_check: object = None


@dataclasses.dataclass(frozen=True)
class RelationRow:
    i: int
    j: int
    k: int
    g_i3: int
    g_jk: int
    c_i3: int
    relation_i: bool
    relation_ii: bool
    relation_iii: bool
    bound_g_i3: bool
    bound_g_jk: bool

    @property
    def all_hold(self):
        return (self.relation_i and self.relation_ii and self.relation_iii
                and self.bound_g_i3 and self.bound_g_jk)


@dataclasses.dataclass(frozen=True)
class RelationReport:
    n: genus.HalfInteger
    rows: tuple
    vertex_bound: bool
    minimal: bool
    minimal_equalities: object = None

    @property
    def all_hold(self):
        return (all(row.all_hold for row in self.rows) and self.vertex_bound
                and self.minimal_equalities is not False)


@dataclasses.dataclass(frozen=True)
class HandlebodyVerdict:
    n: genus.HalfInteger
    g_values: dict
    witness_pair: tuple
    witness_value: int
    target: genus.HalfInteger
    below_threshold: bool

    @property
    def verdict(self):
        return self.witness_value == self.target


@dataclasses.dataclass(frozen=True)
class RhoDecomposition:
    n: genus.HalfInteger
    cycle_counts: tuple
    rho: genus.HalfInteger
    predicted_rho: genus.HalfInteger
    p: int
    predicted_p: genus.HalfInteger

    @property
    def holds(self):
        return self.rho == self.predicted_rho and self.p == self.predicted_p


class BoundKind(enum.Enum):
    FROM_RHO = "FROM_RHO"
    FROM_BOUNDARY = "FROM_BOUNDARY"
    NON_HANDLEBODY = "NON_HANDLEBODY"


@dataclasses.dataclass(frozen=True)
class BoundCertificate:
    """A lower bound on gem-complexity together with the graph-level check behind it."""

    bound_kind: BoundKind
    genus_used: genus.HalfInteger
    h: int
    lower_bound: genus.HalfInteger
    slack: genus.HalfInteger
    bounded_quantity: str
    verified_inequality: str

    @property
    def holds(self):
        return self.slack >= 0


def _require_dim3(graph):
    if graph.dim != constants.RECOGNITION_DIM:
        raise errors.GemError(
            errors.ErrorCode.DIMENSION,
            "expected a dim %d gem, got dim %d" % (constants.RECOGNITION_DIM, graph.dim))


def verify_boundary3(graph):
    """Check the three crystallization conditions for a gem with boundary."""
    _require_dim3(graph)
    if graph.is_closed:
        raise errors.GemError(errors.ErrorCode.CLOSED_GRAPH, "graph has no boundary vertices")
    census = gem_core.census(graph)
    stats = census.stats
    h = gem_core.boundary_graph(graph).h
    full = frozenset(graph.colors)
    hats = tuple(census.residue_counts[full - {c}] for c in graph.colors)
    diagnostics = []

    condition_i = hats[3] == 1 and all(count == h for count in hats[:3])
    if not condition_i:
        diagnostics.append(
            "condition (i): hat residues g_0^..g_3^ = %s, expected (%d, %d, %d, 1)"
            % (hats, h, h, h))

    differences = (census.g(0, 3) - census.g(1, 2),
                   census.g(1, 3) - census.g(0, 2),
                   census.g(2, 3) - census.g(0, 1))
    target = fractions.Fraction(stats.p_bar, 2) + fractions.Fraction(h, 2) - 1
    condition_ii = all(diff == target for diff in differences)
    if not condition_ii:
        diagnostics.append("condition (ii): differences %s, expected %s each"
                           % (differences, target))

    residue_sum = census.g(0, 1) + census.g(0, 2) + census.g(1, 2)
    condition_iii = residue_sum == 2 + stats.p
    if not condition_iii:
        diagnostics.append("condition (iii): g01+g02+g12 = %d, expected %d"
                           % (residue_sum, 2 + stats.p))

    report = VerificationReport(
        condition_i=condition_i, condition_ii=condition_ii, condition_iii=condition_iii,
        h=h, p=stats.p, p_bar=stats.p_bar, hat_residues=hats, differences=differences,
        target=target, residue_sum=residue_sum, diagnostics=tuple(diagnostics))
    logger.info("Boundary verification: verdict=%s, h=%d", report.verdict, h)
    return report


def inspect_closed3(graph):
    """Sphere condition on every 3-residue plus contractedness, for closed gems."""
    _require_dim3(graph)
    if not graph.is_closed:
        raise errors.GemError(errors.ErrorCode.BOUNDARY_GRAPH,
                              "graph has boundary vertices, use verify_boundary3")
    failures = []
    full = set(graph.colors)
    for color in graph.colors:
        others = sorted(full - {color})
        labels = gem_core.residue_labels(graph, others)
        sizes = {}
        for label in labels:
            sizes[label] = sizes.get(label, 0) + 1
        pair_sums = dict.fromkeys(sizes, 0)
        for pair in itertools.combinations(others, 2):
            for component in gem_core.residue_components(graph, pair):
                pair_sums[labels[component[0]]] += 1
        for label in sorted(sizes):
            expected = sizes[label] // 2 + constants.SPHERE_RESIDUE_OFFSET
            if pair_sums[label] != expected:
                failures.append(ResidueFailure(color=color, vertex=label, vertex_count=sizes[label],
                                               pair_residues=pair_sums[label], expected=expected))
    report = ClosedVerificationReport(manifold=not failures,
                                      contracted=gem_core.is_contracted(graph),
                                      failures=tuple(failures))
    logger.info("Closed verification: manifold=%s, contracted=%s",
                report.manifold, report.contracted)
    return report


def verify_closed3(graph):
    return inspect_closed3(graph).verdict


def check_surface(graph):
    """Euler characteristic of a closed, contracted 3-colored surface gem."""
    if graph.dim != 2:
        raise errors.GemError(errors.ErrorCode.INVALID_SURFACE,
                              "surface gems have dim 2, got %d" % graph.dim)
    if not graph.is_closed:
        raise errors.GemError(errors.ErrorCode.INVALID_SURFACE, "surface gem has boundary vertices")
    if not gem_core.is_contracted(graph):
        raise errors.GemError(errors.ErrorCode.INVALID_SURFACE, "surface gem is not contracted")
    return gem_core.complex_summary(graph).euler_characteristic


def _component_row(component, smallest_vertex):
    census = gem_core.census(component)
    pairs = sum(census.g(a, b) for a, b in INTERIOR_PAIRS)
    chi = pairs - component.vertex_count // 2
    orientable = gem_core.is_bipartite(component)
    if chi != gem_core.complex_summary(component).euler_characteristic:
        raise errors.GemError(errors.ErrorCode.SURFACE_CHECK_FAILED,
                              "component at vertex %d: residue and f-vector Euler characteristics differ"
                              % smallest_vertex)
    if chi > 2 or (orientable and chi % 2):
        raise errors.GemError(errors.ErrorCode.SURFACE_CHECK_FAILED,
                              "component at vertex %d: impossible Euler characteristic %d"
                              % (smallest_vertex, chi))
    odd_crosscap = not orientable and (2 - chi) % 2 == 1
    if odd_crosscap:
        logger.warning("Boundary component at vertex %d has odd crosscap number %d",
                       smallest_vertex, 2 - chi)
    return BoundaryComponent(vertex_count=component.vertex_count, orientable=orientable,
                             chi=chi, regular_genus=genus.HalfInteger(2 - chi),
                             odd_crosscap=odd_crosscap, smallest_vertex=smallest_vertex)


def boundary_regular_genus(graph):
    _require_dim3(graph)
    boundary = gem_core.boundary_graph(graph)
    rows = []
    for component, parents in zip(boundary.component_graphs(),
                                  boundary.component_parent_vertices()):
        rows.append(_component_row(component, parents[0]))
    total = sum((row.regular_genus for row in rows), genus.HalfInteger(0))

    vertex_count_check = None
    if boundary.h == 1 and verify_boundary3(graph).verdict:
        vertex_count_check = boundary.graph.vertex_count == 2 + 2 * total.twice_value
    return BoundaryGenusReport(components=tuple(rows), total=total,
                               vertex_count_check=vertex_count_check)


def _connected_crystallization(graph):
    """Census and boundary genus n of a crystallization with connected boundary."""
    report = verify_boundary3(graph)
    if not report.verdict:
        raise errors.GemError(errors.ErrorCode.NOT_A_CRYSTALLIZATION, "; ".join(report.diagnostics))
    if report.h > 1:
        raise errors.GemError(errors.ErrorCode.DISCONNECTED_BOUNDARY,
                              "boundary has %d components" % report.h)
    return gem_core.census(graph), boundary_regular_genus(graph).total


def check_g_relations(graph):
    census, n = _connected_crystallization(graph)
    rows = []
    for i, j, k in RELATION_TRIPLES:
        g_i3 = census.g(i, 3)
        g_jk = census.g(j, k)
        c_i3 = census.c(i, 3)
        rows.append(RelationRow(
            i=i, j=j, k=k, g_i3=g_i3, g_jk=g_jk, c_i3=c_i3,
            relation_i=g_i3 == n * 2 + 1 + c_i3,
            relation_ii=g_i3 == n + g_jk,
            relation_iii=g_jk == n + 1 + c_i3,
            bound_g_i3=g_i3 >= n * 2 + 1,
            bound_g_jk=g_jk >= n + 1))
    minimal_size = n * 6 + 2
    minimal = graph.vertex_count == minimal_size
    minimal_equalities = None
    if minimal:
        minimal_equalities = all(row.g_i3 == n * 2 + 1 and row.g_jk == n + 1 for row in rows)
    return RelationReport(n=n, rows=tuple(rows), vertex_bound=graph.vertex_count >= minimal_size,
                          minimal=minimal, minimal_equalities=minimal_equalities)


def handlebody_witness(graph):
    census, n = _connected_crystallization(graph)
    g_values = {(j, k): census.g(j, k) for j, k in INTERIOR_PAIRS}
    witness_pair = min(INTERIOR_PAIRS, key=lambda pair: g_values[pair])
    threshold = n * constants.HANDLEBODY_THRESHOLD_STEP + constants.HANDLEBODY_THRESHOLD_BASE
    result = HandlebodyVerdict(n=n, g_values=g_values, witness_pair=witness_pair,
                               witness_value=g_values[witness_pair], target=n + 1,
                               below_threshold=graph.vertex_count < threshold)
    logger.info("Handlebody criterion: min g%d%d = %d, 1+n = %s",
                witness_pair[0], witness_pair[1], result.witness_value, result.target)
    return result


def is_handlebody(graph):
    return handlebody_witness(graph).verdict


def rho_decomposition(graph):
    census, n = _connected_crystallization(graph)
    cycles = tuple(census.c(i, 3) for i in range(3))
    return RhoDecomposition(n=n, cycle_counts=cycles, rho=genus.regular_genus(graph).rho,
                            predicted_rho=n + min(cycles), p=census.stats.p,
                            predicted_p=n * 3 + 1 + sum(cycles))


def _certificate(kind, genus_used, h, lower_bound, p, quantity, inequality):
    return BoundCertificate(bound_kind=kind, genus_used=genus_used, h=h, lower_bound=lower_bound,
                            slack=genus.HalfInteger.of(p - 1) - lower_bound,
                            bounded_quantity=quantity, verified_inequality=inequality)


def gem_complexity_bounds(graph):
    """Lower-bound certificates for the gem-complexity of the represented manifold."""
    report = verify_boundary3(graph)
    if not report.verdict:
        raise errors.GemError(errors.ErrorCode.NOT_A_CRYSTALLIZATION, "; ".join(report.diagnostics))
    h = report.h
    p = report.p
    rho = genus.regular_genus(graph).rho
    boundary_genus = boundary_regular_genus(graph).total
    certificates = [
        _certificate(BoundKind.FROM_RHO, rho, h, (rho + h - 1) * 3, p,
                     "k(M) >= 3(G(M)+h-1), evaluated at rho(graph)",
                     "p-1 >= 3(rho(graph)+h-1)"),
        _certificate(BoundKind.FROM_BOUNDARY, boundary_genus, h, (boundary_genus + h - 1) * 3, p,
                     "k(M) >= 3(G(dM)+h-1)",
                     "p-1 >= 3(G(dM)+h-1)"),
    ]
    if h == 1 and not is_handlebody(graph):
        certificates.append(
            _certificate(BoundKind.NON_HANDLEBODY, boundary_genus, h, (boundary_genus + 1) * 3, p,
                         "k(M) >= 3(G(dM)+1) for non-handlebodies",
                         "p-1 >= 3(G(dM)+1)"))
    for certificate in certificates:
        logger.debug("%s: bound %s, slack %s", certificate.bound_kind.value,
                     certificate.lower_bound, certificate.slack)
    return certificates


def product_complexity_range(surface):
    """(6G(S)+3, 8G(S)+3): the bracket on the gem-complexity of S x [0,1]."""
    surface_genus = genus.HalfInteger(2 - check_surface(surface))
    return surface_genus * 6 + 3, surface_genus * 8 + 3
