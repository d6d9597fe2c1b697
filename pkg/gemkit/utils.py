# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

"""Small helpers shared by the gem modules."""

import itertools


def normalize_pair(a, b):
    return (a, b) if a <= b else (b, a)


def color_subsets(colors):
    """All subsets of the given colors, smallest first, as frozensets."""
    colors = sorted(colors)
    for size in range(len(colors) + 1):
        for subset in itertools.combinations(colors, size):
            yield frozenset(subset)


def format_colors(colors):
    return "".join(str(c) for c in sorted(colors)) or "-"
