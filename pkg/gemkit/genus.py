# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Regular embeddings: Euler characteristic, holes and regular genus."""

import dataclasses
import fractions
import functools
import itertools
import logging

from gemkit import errors
from gemkit import gem_core

logger = logging.getLogger(__name__)

MIN_GENUS_DIM = 2


@functools.total_ordering
@dataclasses.dataclass(frozen=True, eq=False)
class HalfInteger:
    """An exact multiple of 1/2, stored as twice its value."""

    twice_value: int

    @classmethod
    def of(cls, value):
        twice = fractions.Fraction(value) * 2
        if twice.denominator != 1:
            raise ValueError("%s is not a multiple of 1/2" % value)
        return cls(int(twice))

    @staticmethod
    def _coerce(other):
        if isinstance(other, HalfInteger):
            return other
        if isinstance(other, (int, fractions.Fraction)):
            return HalfInteger.of(other)
        return None

    def as_fraction(self):
        return fractions.Fraction(self.twice_value, 2)

    @property
    def is_integer(self):
        return self.twice_value % 2 == 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.twice_value == other.twice_value

    def __hash__(self):
        return hash(self.as_fraction())

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.twice_value < other.twice_value

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HalfInteger(self.twice_value + other.twice_value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return HalfInteger(self.twice_value - other.twice_value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return HalfInteger(-self.twice_value)

    def __mul__(self, factor):
        if not isinstance(factor, int):
            return NotImplemented
        return HalfInteger(self.twice_value * factor)

    __rmul__ = __mul__

    def __str__(self):
        if self.is_integer:
            return str(self.twice_value // 2)
        return "%d/2" % self.twice_value

    def __repr__(self):
        return "HalfInteger(%s)" % self


@dataclasses.dataclass(frozen=True)
class CyclicPermutation:
    """A cyclic order (e_0, ..., e_d) of all colors ending in the regular color d."""

    order: tuple

    def __post_init__(self):
        dim = len(self.order) - 1
        if dim < 1 or sorted(self.order) != list(range(dim + 1)) or self.order[-1] != dim:
            raise errors.GemError(
                errors.ErrorCode.INVALID_PARAMETER,
                "%s is not a permutation of 0..%d ending in %d" % (self.order, dim, dim))

    @property
    def dim(self):
        return len(self.order) - 1

    def consecutive_pairs(self):
        """Cyclically consecutive color pairs, including (e_d, e_0)."""
        size = len(self.order)
        return [(self.order[k], self.order[(k + 1) % size]) for k in range(size)]

    def reversed(self):
        return CyclicPermutation(tuple(reversed(self.order[:-1])) + (self.dim,))

    def __str__(self):
        return "(%s)" % ",".join(str(c) for c in self.order)


@dataclasses.dataclass(frozen=True)
class GenusRow:
    eps: CyclicPermutation
    chi: int
    holes: int
    rho: HalfInteger


@dataclasses.dataclass(frozen=True)
class GenusReport:
    rows: tuple
    rho: HalfInteger
    argmin: CyclicPermutation

    def distinct_rows(self):
        """Rows with a new (chi, holes, rho) triple, in enumeration order."""
        seen = set()
        result = []
        for row in self.rows:
            key = (row.chi, row.holes, row.rho)
            if key not in seen:
                seen.add(key)
                result.append(row)
        return result


def permutations(dim):
    """Every cyclic permutation with last entry dim, lexicographically ordered."""
    return [CyclicPermutation(head + (dim,))
            for head in itertools.permutations(range(dim))]


def _check(graph, eps):
    if graph.dim < MIN_GENUS_DIM:
        raise errors.GemError(
            errors.ErrorCode.DIMENSION, "regular genus needs dim >= %d" % MIN_GENUS_DIM)
    if eps.dim != graph.dim:
        raise errors.GemError(
            errors.ErrorCode.DIMENSION,
            "permutation %s does not match dim %d" % (eps, graph.dim))


def euler_characteristic(graph, eps, census=None):
    _check(graph, eps)
    if census is None:
        census = gem_core.census(graph)
    stats = census.stats
    d = graph.dim
    cycles = sum(census.c(a, b) for a, b in eps.consecutive_pairs())
    return cycles + (1 - d) * stats.p_dot + (2 - d) * stats.p_bar


def holes(graph, eps, boundary=None):
    """Number of {e_0, e_(d-1)}-cycles of the boundary graph."""
    _check(graph, eps)
    if graph.is_closed:
        return 0
    if boundary is None:
        boundary = gem_core.boundary_graph(graph)
    return boundary.cycle_count(eps.order[0], eps.order[graph.dim - 1])


def _rho(chi, hole_count):
    return HalfInteger(2 - chi - hole_count)


def regular_genus_for(graph, eps):
    return _rho(euler_characteristic(graph, eps), holes(graph, eps))


def regular_genus(graph):
    if graph.dim < MIN_GENUS_DIM:
        raise errors.GemError(
            errors.ErrorCode.DIMENSION, "regular genus needs dim >= %d" % MIN_GENUS_DIM)
    census = gem_core.census(graph)
    boundary = None if graph.is_closed else gem_core.boundary_graph(graph)
    rows = []
    for eps in permutations(graph.dim):
        chi = euler_characteristic(graph, eps, census)
        hole_count = holes(graph, eps, boundary)
        rows.append(GenusRow(eps=eps, chi=chi, holes=hole_count, rho=_rho(chi, hole_count)))
    best = min(rows, key=lambda row: row.rho)
    logger.debug("Regular genus %s attained at %s", best.rho, best.eps)
    return GenusReport(rows=tuple(rows), rho=best.rho, argmin=best.eps)
