# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later

# Gem text format
FORMAT_TAG = "gem"
FORMAT_VERSION = 1
COMMENT_CHAR = "#"
MIN_DIM = 1
# census and genus enumerate 2^(d+1) color subsets and d! permutations
MAX_DIM = 8
MAX_VERTICES = 1000000

# JSON reports
REPORT_SCHEMA = "gemkit.report"
REPORT_SCHEMA_VERSION = 1

# Exit codes
EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_INPUT_ERROR = 2

# Logging
LOG_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"
LOG_DATE_FORMAT = "%H:%M:%S"

# Seed data shipped with the package
DATA_DIR = "data"
SEED_SUFFIX = ".gem"

# Recognition
RECOGNITION_DIM = 3
# Every 3-residue of a closed 3-manifold gem is a sphere: the sum of its
# pair residues equals half its vertex count plus this offset.
SPHERE_RESIDUE_OFFSET = 2
# 2p < HANDLEBODY_THRESHOLD_BASE + HANDLEBODY_THRESHOLD_STEP * n forces a handlebody.
HANDLEBODY_THRESHOLD_BASE = 8
HANDLEBODY_THRESHOLD_STEP = 6

# Constructions
HANDLEBODY_BLOCK_SIZE = 6
PRODUCT_COPIES = 4
