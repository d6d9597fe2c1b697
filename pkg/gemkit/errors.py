# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Error type shared by every gemkit module."""

import enum


class ErrorCode(enum.Enum):
    # from_matchings invariants
    DUPLICATE_VERTEX = "DUPLICATE_VERTEX"
    NON_PERFECT_MATCHING = "NON_PERFECT_MATCHING"
    LOOP_EDGE = "LOOP_EDGE"
    VERTEX_OUT_OF_RANGE = "VERTEX_OUT_OF_RANGE"
    DISCONNECTED = "DISCONNECTED"
    # argument checks
    DIMENSION = "DIMENSION"
    INVALID_COLOR = "INVALID_COLOR"
    INVALID_VERTEX = "INVALID_VERTEX"
    INVALID_PARAMETER = "INVALID_PARAMETER"
    # operation preconditions
    CLOSED_GRAPH = "CLOSED_GRAPH"
    BOUNDARY_GRAPH = "BOUNDARY_GRAPH"
    NOT_A_CRYSTALLIZATION = "NOT_A_CRYSTALLIZATION"
    DISCONNECTED_BOUNDARY = "DISCONNECTED_BOUNDARY"
    CONNECTED_BOUNDARY = "CONNECTED_BOUNDARY"
    SURFACE_CHECK_FAILED = "SURFACE_CHECK_FAILED"
    INVALID_SURFACE = "INVALID_SURFACE"
    COLOR_MISMATCH = "COLOR_MISMATCH"
    INVALID_SITE = "INVALID_SITE"
    # text format
    PARSE_ERROR = "PARSE_ERROR"
    UNSUPPORTED_VERSION = "UNSUPPORTED_VERSION"


class GemError(ValueError):
    """A gem violates an invariant or an operation's precondition."""

    def __init__(self, code, message, line=None):
        self.code = code
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)

    def __str__(self):
        return "%s: %s" % (self.code.value, self.args[0])
