# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Rendering of gemkit reports as text lines and JSON-ready dicts."""

import dataclasses
import enum
import fractions

from gemkit import constants
from gemkit import gem_core
from gemkit import genus
from gemkit import utils

# derived properties included alongside dataclass fields
DERIVED = ("verdict", "all_hold", "holds")


def _key(key):
    if isinstance(key, (frozenset, tuple)):
        return utils.format_colors(key)
    return str(key)


def plain(value):
    """Convert a report value into JSON-compatible data.

    Half-integers and fractions become strings such as "3/2" so no value is
    ever rounded.
    """
    if isinstance(value, (genus.HalfInteger, fractions.Fraction)):
        return str(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, genus.CyclicPermutation):
        return list(value.order)
    if isinstance(value, gem_core.ColoredGraph):
        return {"dim": value.dim, "vertex_count": value.vertex_count}
    if dataclasses.is_dataclass(value):
        data = {field.name: plain(getattr(value, field.name))
                for field in dataclasses.fields(value) if field.repr}
        for name in DERIVED:
            if isinstance(getattr(type(value), name, None), property):
                data[name] = plain(getattr(value, name))
        return data
    if isinstance(value, dict):
        return {_key(k): plain(v) for k, v in sorted(value.items(), key=lambda kv: _key(kv[0]))}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    return value


def envelope(command, report):
    return {
        "schema": constants.REPORT_SCHEMA,
        "schema_version": constants.REPORT_SCHEMA_VERSION,
        "command": command,
        "report": report,
    }


def _yes(flag):
    return "yes" if flag else "no"


def verification_lines(report):
    lines = [
        "crystallization: %s" % _yes(report.verdict),
        "h = %d, p = %d, p_bar = %d" % (report.h, report.p, report.p_bar),
        "condition (i):   %s  hat residues %s" % (_yes(report.condition_i), report.hat_residues),
        "condition (ii):  %s  differences %s, target %s" % (
            _yes(report.condition_ii), report.differences, report.target),
        "condition (iii): %s  g01+g02+g12 = %d" % (_yes(report.condition_iii), report.residue_sum),
    ]
    lines.extend(report.diagnostics)
    return lines


def closed_lines(report):
    lines = [
        "manifold gem: %s" % _yes(report.manifold),
        "contracted: %s" % _yes(report.contracted),
        "crystallization: %s" % _yes(report.verdict),
    ]
    for failure in report.failures:
        lines.append("color %d residue at vertex %d: %d pair residues, expected %d"
                     % (failure.color, failure.vertex, failure.pair_residues, failure.expected))
    return lines


def genus_lines(report):
    lines = ["%-12s %5s %5s %6s" % ("eps", "chi", "holes", "rho")]
    for row in report.rows:
        lines.append("%-12s %5d %5d %6s" % (row.eps, row.chi, row.holes, row.rho))
    lines.append("rho = %s at %s" % (report.rho, report.argmin))
    return lines


def census_lines(census, summary):
    stats = census.stats
    lines = ["p = %d, p_bar = %d, p_dot = %d" % (stats.p, stats.p_bar, stats.p_dot)]
    for colors, count in sorted(census.residue_counts.items(),
                                key=lambda item: (len(item[0]), sorted(item[0]))):
        if 0 < len(colors) <= census.dim:
            lines.append("g%s = %d" % (utils.format_colors(colors), count))
    for pair, count in sorted(census.cycle_counts.items(), key=lambda item: sorted(item[0])):
        lines.append("C%s = %d" % (utils.format_colors(pair), count))
    lines.append("f-vector = %s" % (summary.f_vector,))
    lines.append("chi(K) = %d" % summary.euler_characteristic)
    lines.append("crystallization vertex count: %s" % _yes(summary.crystallization_vertex_condition))
    return lines


def boundary_lines(boundary, genus_report):
    lines = ["boundary components: %d" % boundary.h]
    rows = genus_report.components if genus_report is not None else [None] * boundary.h
    for index, (vertices, row) in enumerate(zip(boundary.component_parent_vertices(), rows)):
        line = "component %d: %d vertices" % (index, len(vertices))
        if row is not None:
            line += ", chi %d, %s, genus %s" % (
                row.chi, "orientable" if row.orientable else "non-orientable", row.regular_genus)
            if row.odd_crosscap:
                line += " (odd crosscap number)"
        lines.append(line)
    if genus_report is not None:
        lines.append("total genus = %s" % genus_report.total)
    return lines


def bounds_lines(certificates):
    lines = []
    for certificate in certificates:
        lines.append("%s: %s" % (certificate.bound_kind.value, certificate.bounded_quantity))
        lines.append("  genus %s, h %d, bound %s, slack %s (%s: %s)" % (
            certificate.genus_used, certificate.h, certificate.lower_bound, certificate.slack,
            certificate.verified_inequality, "holds" if certificate.holds else "FAILS"))
    return lines


def handlebody_lines(result):
    j, k = result.witness_pair
    lines = [
        "handlebody: %s" % _yes(result.verdict),
        "n = %s, min g = g%d%d = %d, 1+n = %s" % (result.n, j, k, result.witness_value, result.target),
    ]
    if result.below_threshold:
        lines.append("below the 8+6n vertex threshold")
    return lines


def relabeling_lines(relabelings):
    lines = []
    for index, mapping in enumerate(relabelings, start=1):
        pairs = " ".join("%d->%d" % item for item in sorted(mapping.items()))
        lines.append("relabeling %d: %s" % (index, pairs))
    return lines


def join_lines(report):
    return [
        "joined %d boundary components" % report.h,
        "C_i3 preserved: %s" % _yes(report.cycles_preserved),
        "g_jk preserved: %s" % _yes(report.interior_residues_preserved),
        "boundary cycles shifted by h-1: %s" % _yes(report.boundary_cycles_shifted),
        "rho %s -> %s (shift h-1: %s)" % (report.rho_before, report.rho_after, _yes(report.rho_shifted)),
    ]
