"""Frozen height and work bounds.

Calibrated once with ``scripts/calibrate.py`` on the randomized contraction
used by the engine, then fixed as regression thresholds:

* height of a tree with ``s`` vertices <= ``c_h * log2(s) + k``,
* joins + splits for one link, cut or expose <= ``c_ops * log2(n) + k``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    # calibration worst cases with k = 8: height ratio 3.86, work ratio 14.5
    c_h: float = 5.0
    c_ops: float = 24.0
    k: float = 8.0

    def height(self, s):
        return self.c_h * math.log2(max(s, 2)) + self.k

    def work(self, n):
        return self.c_ops * math.log2(max(n, 2)) + self.k


BOUNDS = Bounds()
