"""Size caps that keep every exhaustive check desk-scale.

All enumeration entry points take an optional :class:`Limits`; exceeding a
cap raises :class:`~tilegraphs.errors.SizeLimit` rather than truncating.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_tile_cells: int = 64
    max_vertices: int = 1024
    max_paths: int = 200_000

    def __post_init__(self):
        if min(self.max_tile_cells, self.max_vertices, self.max_paths) <= 0:
            raise ValueError("size caps must be positive")


DEFAULT_LIMITS = Limits()
