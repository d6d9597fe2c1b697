# Copyright (C) 2026 H. Blok
# SPDX-License-Identifier: GPL-3.0-or-later
