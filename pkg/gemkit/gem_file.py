# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Text format for gems.

    gem 1
    dim <d>
    vertices <2p>
    color 0: <a>-<b> <a>-<b> ...
    ...
    color <d>: ...

'#' starts a comment, runs of whitespace count as one space and vertices
are 0-based. Color d is always last.
"""

import logging
import pathlib
import re

from gemkit import constants
from gemkit import errors
from gemkit import gem_core

logger = logging.getLogger(__name__)

COLOR_LINE = re.compile(r"^color ([0-9]+) ?:(.*)$")
PAIR = re.compile(r"^([0-9]+)-([0-9]+)$")
INTEGER = re.compile(r"[0-9]+")
MAX_DIGITS = 18


def _fail(code, message, line):
    raise errors.GemError(code, message, line=line)


def _content_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split(constants.COMMENT_CHAR, 1)[0].split()
        if tokens:
            yield number, tokens


def _integer(token, number):
    if len(token) > MAX_DIGITS:
        _fail(errors.ErrorCode.PARSE_ERROR, "integer %.20s... is too long" % token, number)
    return int(token)


def _header_value(entry, keyword):
    number, tokens = entry
    if len(tokens) != 2 or tokens[0] != keyword or INTEGER.fullmatch(tokens[1]) is None:
        _fail(errors.ErrorCode.PARSE_ERROR, "expected '%s <integer>'" % keyword, number)
    return _integer(tokens[1], number)


def _parse_color(entry, expected, dim, vertex_count):
    number, tokens = entry
    match = COLOR_LINE.match(" ".join(tokens))
    if match is None:
        _fail(errors.ErrorCode.PARSE_ERROR, "expected 'color %d: <pairs>'" % expected, number)
    if _integer(match.group(1), number) != expected:
        _fail(errors.ErrorCode.PARSE_ERROR,
              "expected color %d, found color %s" % (expected, match.group(1)), number)
    pairs = []
    seen = set()
    for token in match.group(2).split():
        pair = PAIR.match(token)
        if pair is None:
            _fail(errors.ErrorCode.PARSE_ERROR, "malformed pair '%s'" % token, number)
        a, b = _integer(pair.group(1), number), _integer(pair.group(2), number)
        if a == b:
            _fail(errors.ErrorCode.LOOP_EDGE, "loop edge %s in color %d" % (token, expected), number)
        for v in (a, b):
            if v >= vertex_count:
                _fail(errors.ErrorCode.VERTEX_OUT_OF_RANGE,
                      "vertex %d outside 0..%d" % (v, vertex_count - 1), number)
            if v in seen:
                _fail(errors.ErrorCode.DUPLICATE_VERTEX,
                      "vertex %d appears twice in color %d" % (v, expected), number)
            seen.add(v)
        pairs.append((a, b))
    if expected < dim and len(seen) != vertex_count:
        _fail(errors.ErrorCode.NON_PERFECT_MATCHING,
              "color %d covers %d of %d vertices" % (expected, len(seen), vertex_count), number)
    return pairs


def parse(text):
    """Parse gem text into a validated ColoredGraph.

    Raises:
        GemError: with the offending line number where one applies
    """
    entries = list(_content_lines(text))
    if len(entries) < 3:
        _fail(errors.ErrorCode.PARSE_ERROR, "missing header", entries[-1][0] if entries else 1)

    number, tokens = entries[0]
    if tokens[0] != constants.FORMAT_TAG or len(tokens) != 2:
        _fail(errors.ErrorCode.PARSE_ERROR, "expected '%s %d'"
              % (constants.FORMAT_TAG, constants.FORMAT_VERSION), number)
    if tokens[1] != str(constants.FORMAT_VERSION):
        _fail(errors.ErrorCode.UNSUPPORTED_VERSION, "unsupported format version %s" % tokens[1], number)

    dim = _header_value(entries[1], "dim")
    if dim < constants.MIN_DIM:
        _fail(errors.ErrorCode.DIMENSION, "dim must be >= %d" % constants.MIN_DIM, entries[1][0])
    if dim > constants.MAX_DIM:
        _fail(errors.ErrorCode.DIMENSION, "dim must be <= %d" % constants.MAX_DIM, entries[1][0])
    vertex_count = _header_value(entries[2], "vertices")
    if vertex_count <= 0 or vertex_count % 2:
        _fail(errors.ErrorCode.INVALID_PARAMETER,
              "vertex count must be even and positive", entries[2][0])
    if vertex_count > constants.MAX_VERTICES:
        _fail(errors.ErrorCode.INVALID_PARAMETER,
              "vertex count must be <= %d" % constants.MAX_VERTICES, entries[2][0])

    color_entries = entries[3:]
    if len(color_entries) < dim + 1:
        last = color_entries[-1][0] if color_entries else entries[2][0]
        _fail(errors.ErrorCode.PARSE_ERROR,
              "expected %d color lines, found %d" % (dim + 1, len(color_entries)), last)
    if len(color_entries) > dim + 1:
        _fail(errors.ErrorCode.PARSE_ERROR, "unexpected content after color %d" % dim,
              color_entries[dim + 1][0])
    matchings = [_parse_color(entry, color, dim, vertex_count)
                 for color, entry in enumerate(color_entries)]
    return gem_core.from_matchings(dim, vertex_count, matchings)


def serialize(graph, provenance=()):
    """Canonical text: colors ascending, pairs sorted, smaller endpoint first."""
    lines = ["%s %d" % (constants.FORMAT_TAG, constants.FORMAT_VERSION)]
    lines.extend("%s %s" % (constants.COMMENT_CHAR, note) for note in provenance)
    lines.append("dim %d" % graph.dim)
    lines.append("vertices %d" % graph.vertex_count)
    for color in graph.colors:
        pairs = " ".join("%d-%d" % pair for pair in graph.edges(color))
        lines.append(("color %d: %s" % (color, pairs)).rstrip())
    return "\n".join(lines) + "\n"


def read_gem(path):
    path = pathlib.Path(path)
    logger.debug("Reading gem from %s", path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        _fail(errors.ErrorCode.PARSE_ERROR, "byte 0x%02x is not valid UTF-8" % data[e.start],
              data.count(b"\n", 0, e.start) + 1)
    return parse(text)


def write_gem(path, graph, provenance=()):
    path = pathlib.Path(path)
    path.write_text(serialize(graph, provenance), encoding="utf-8")
    logger.info("Wrote %d-vertex gem to %s", graph.vertex_count, path)
