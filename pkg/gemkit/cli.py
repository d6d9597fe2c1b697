# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Command-line surface for gemkit."""

import argparse
import json
import logging
import pathlib
import sys

from gemkit import constants
from gemkit import constructions
from gemkit import errors
from gemkit import gem_core
from gemkit import gem_file
from gemkit import genus
from gemkit import moves
from gemkit import recognition
from gemkit import reports

logger = logging.getLogger(__name__)

VERSION_FILE = pathlib.Path(__file__).parent / "version.json"


def read_version():
    with open(VERSION_FILE) as f:
        return json.load(f)["version"]


class Output:
    """Collects a command's report and optional gem, then prints them."""

    def __init__(self, args, command):
        self.args = args
        self.command = command

    def emit(self, report, lines, graph=None, provenance=()):
        """Print the report; a produced graph goes to --output or stdout.

        Without --output the text report rides along as comment lines so that
        stdout remains a valid gem file.
        """
        output = getattr(self.args, "output", None)
        if self.args.json:
            data = reports.plain(report)
            if graph is not None:
                data = dict(data, gem=gem_file.serialize(graph, provenance))
                if output:
                    gem_file.write_gem(output, graph, provenance)
            print(json.dumps(reports.envelope(self.command, data), indent=2, sort_keys=True))
            return
        if graph is None:
            print("\n".join(lines))
        elif output:
            gem_file.write_gem(output, graph, provenance)
            if lines:
                print("\n".join(lines))
        else:
            sys.stdout.write(gem_file.serialize(graph, tuple(provenance) + tuple(lines)))


def _exit_for(verdict):
    return constants.EXIT_OK if verdict else constants.EXIT_VERDICT_FALSE


def cmd_verify(args, out):
    graph = gem_file.read_gem(args.file)
    closed = graph.is_closed
    if args.closed:
        closed = True
    elif args.boundary:
        closed = False
    if closed:
        report = recognition.inspect_closed3(graph)
        out.emit({"kind": "closed", "result": report}, reports.closed_lines(report))
    else:
        report = recognition.verify_boundary3(graph)
        out.emit({"kind": "boundary", "result": report}, reports.verification_lines(report))
    return _exit_for(report.verdict)


def cmd_genus(args, out):
    report = genus.regular_genus(gem_file.read_gem(args.file))
    out.emit(report, reports.genus_lines(report))
    return constants.EXIT_OK


def cmd_census(args, out):
    graph = gem_file.read_gem(args.file)
    census = gem_core.census(graph)
    summary = gem_core.complex_summary(graph)
    data = {
        "stats": census.stats,
        "residue_counts": {k: v for k, v in census.residue_counts.items() if k},
        "cycle_counts": census.cycle_counts,
        "summary": summary,
    }
    out.emit(data, reports.census_lines(census, summary))
    return constants.EXIT_OK


def cmd_boundary(args, out):
    graph = gem_file.read_gem(args.file)
    boundary = gem_core.boundary_graph(graph)
    genus_report = recognition.boundary_regular_genus(graph) if graph.dim == 3 else None
    components = boundary.component_graphs()
    if args.output:
        directory = pathlib.Path(args.output)
        directory.mkdir(parents=True, exist_ok=True)
        for index, component in enumerate(components):
            gem_file.write_gem(directory / ("component_%d%s" % (index, constants.SEED_SUFFIX)),
                               component, ("boundary component %d of %s" % (index, args.file),))
    data = {
        "h": boundary.h,
        "component_vertices": boundary.component_parent_vertices(),
        "boundary_cycle_counts": boundary.boundary_cycle_counts,
        "genus": genus_report,
        "components": [gem_file.serialize(c) for c in components],
    }
    lines = reports.boundary_lines(boundary, genus_report)
    if not args.output:
        lines += [""] + [gem_file.serialize(c) for c in components]
    out.emit(data, lines)
    return constants.EXIT_OK


def cmd_bounds(args, out):
    certificates = recognition.gem_complexity_bounds(gem_file.read_gem(args.file))
    out.emit(certificates, reports.bounds_lines(certificates))
    return constants.EXIT_OK


def cmd_handlebody(args, out):
    result = recognition.handlebody_witness(gem_file.read_gem(args.file))
    out.emit(result, reports.handlebody_lines(result))
    return _exit_for(result.verdict)


def cmd_generate(args, out):
    if args.family == "handlebody":
        if args.nonorientable:
            graph = constructions.handlebody_nonorientable(args.genus)
        else:
            graph = constructions.handlebody_orientable(args.genus)
        label = "%s handlebody of genus %d" % (
            "non-orientable" if args.nonorientable else "orientable", args.genus)
    elif args.family == "surface":
        kind = (constructions.SurfaceKind.NONORIENTABLE if args.nonorientable
                else constructions.SurfaceKind.ORIENTABLE)
        graph = constructions.surface_gem(constructions.SurfaceSpec(kind, args.genus))
        label = "%s surface with parameter %d" % (kind.value, args.genus)
    elif args.family == "product":
        graph = constructions.product_with_interval(gem_file.read_gem(args.surface))
        label = "product of %s with an interval" % args.surface
    elif args.family == "nonhandlebody":
        graph = constructions.non_handlebody(args.genus, args.seed, not args.nonorientable)
        label = "handlebody of genus %d summed with %s" % (args.genus, args.seed)
    elif args.family == "handlebody-sum":
        graph = constructions.handlebody_sum(args.genus, args.nonorientable_genus)
        label = "sum of handlebodies with genera %s and non-orientable genera %s" % (
            args.genus, args.nonorientable_genus)
    else:
        graph = constructions.closed_seed(args.name)
        label = "closed seed %s" % args.name
    out.emit({"graph": graph, "description": label}, [], graph, ("generated: " + label,))
    return constants.EXIT_OK


def cmd_sum(args, out):
    result = moves.connected_sum(gem_file.read_gem(args.file1), args.vertex1,
                                 gem_file.read_gem(args.file2), args.vertex2)
    lines = reports.relabeling_lines(result.relabelings) + list(result.notes)
    out.emit(result, lines, result.graph)
    return constants.EXIT_OK


def cmd_dipole(args, out):
    graph = gem_file.read_gem(args.file)
    if args.action == "list":
        sites = moves.find_1_dipoles(graph)
        out.emit({"sites": sites}, [str(site) for site in sites] or ["no 1-dipoles"])
        return constants.EXIT_OK
    if args.action == "cancel":
        result = moves.cancel_1_dipole(graph, moves.DipoleSite(args.x, args.y, args.color))
        lines = reports.relabeling_lines(result.relabelings) + list(result.notes)
        out.emit(result, lines, result.graph)
        return constants.EXIT_OK
    if args.action == "insert":
        result, site = moves.insert_1_dipole(graph, args.vertex, args.color)
        out.emit({"site": site, "graph": result.graph}, ["inserted %s" % site], result.graph)
        return constants.EXIT_OK
    reduced, sites, mapping = moves.reduce_1_dipoles(graph)
    lines = ["cancelled %d 1-dipoles" % len(sites)] + [str(site) for site in sites]
    lines += reports.relabeling_lines((mapping,))
    out.emit({"sites": sites, "relabeling": mapping, "graph": reduced}, lines, reduced)
    return constants.EXIT_OK


def cmd_join(args, out):
    graph = gem_file.read_gem(args.file)
    result = moves.join_boundary_components(graph)
    report = moves.check_join(graph, result.graph)
    out.emit(report, reports.join_lines(report), result.graph)
    return constants.EXIT_OK


def _add_file(parser):
    parser.add_argument("file", help="gem file")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    writes = argparse.ArgumentParser(add_help=False)
    writes.add_argument("-o", "--output", help="write the resulting gem here instead of stdout")

    parser = argparse.ArgumentParser(prog="gemkit", description="Crystallizations of 3-manifolds with boundary")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs")
    parser.add_argument("--version", action="version", version="%(prog)s " + read_version())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check the crystallization conditions")
    _add_file(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--closed", action="store_true", help="force the closed-manifold check")
    mode.add_argument("--boundary", action="store_true", help="force the boundary check")
    p.set_defaults(handler=cmd_verify)

    for name, handler, text in (("genus", cmd_genus, "regular genus over all permutations"),
                                ("census", cmd_census, "residue and cycle counts"),
                                ("bounds", cmd_bounds, "gem-complexity bound certificates"),
                                ("handlebody", cmd_handlebody, "handlebody criterion")):
        p = sub.add_parser(name, parents=[common], help=text)
        _add_file(p)
        p.set_defaults(handler=handler)

    p = sub.add_parser("boundary", parents=[common], help="boundary graph and its components")
    _add_file(p)
    p.add_argument("-o", "--output", help="directory for component gem files")
    p.set_defaults(handler=cmd_boundary)

    p = sub.add_parser("generate", help="write a generated gem")
    families = p.add_subparsers(dest="family", required=True)
    g = families.add_parser("handlebody", parents=[common, writes])
    g.add_argument("--genus", type=int, required=True)
    g.add_argument("--nonorientable", action="store_true")
    g = families.add_parser("surface", parents=[common, writes])
    g.add_argument("--genus", type=int, required=True,
                   help="genus, or crosscap count with --nonorientable")
    g.add_argument("--nonorientable", action="store_true")
    g = families.add_parser("product", parents=[common, writes])
    g.add_argument("--surface", required=True, help="surface gem file")
    g = families.add_parser("seed", parents=[common, writes])
    g.add_argument("name", choices=[s.value for s in constructions.SeedName])
    g = families.add_parser("nonhandlebody", parents=[common, writes])
    g.add_argument("--genus", type=int, required=True)
    g.add_argument("--seed", choices=[s.value for s in constructions.SeedName], required=True)
    g.add_argument("--nonorientable", action="store_true")
    g = families.add_parser("handlebody-sum", parents=[common, writes])
    g.add_argument("--genus", type=int, action="append", default=[],
                   help="orientable summand genus, repeatable")
    g.add_argument("--nonorientable-genus", type=int, action="append", default=[],
                   help="non-orientable summand genus, repeatable")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("sum", parents=[common, writes], help="connected sum")
    p.add_argument("file1")
    p.add_argument("vertex1", type=int)
    p.add_argument("file2")
    p.add_argument("vertex2", type=int)
    p.set_defaults(handler=cmd_sum)

    p = sub.add_parser("dipole", help="1-dipole moves")
    actions = p.add_subparsers(dest="action", required=True)
    d = actions.add_parser("list", parents=[common])
    _add_file(d)
    d = actions.add_parser("cancel", parents=[common, writes])
    _add_file(d)
    d.add_argument("x", type=int)
    d.add_argument("y", type=int)
    d.add_argument("color", type=int)
    d = actions.add_parser("insert", parents=[common, writes])
    _add_file(d)
    d.add_argument("vertex", type=int)
    d.add_argument("color", type=int)
    d = actions.add_parser("reduce", parents=[common, writes])
    _add_file(d)
    p.set_defaults(handler=cmd_dipole)

    p = sub.add_parser("join", parents=[common, writes], help="connect the boundary components")
    _add_file(p)
    p.set_defaults(handler=cmd_join)
    return parser


def run(args):
    out = Output(args, args.command)
    try:
        return args.handler(args, out)
    except errors.GemError as e:
        print("error: %s" % e, file=sys.stderr)
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
    return constants.EXIT_INPUT_ERROR
