"""The rank-2 graph generated by basic data.

Paths of degree ``n`` are labellings of the translate union ``T(n)`` whose
every tile-window restriction is a vertex.  The window at the origin is the
*range* of the path and the window at offset ``n`` is its *source*; an edge
of degree ``e1`` ("blue") from ``v`` to ``u`` therefore exists iff
``v(m) == u(m - e1)`` on the overlap ``T n (T + e1)``, and likewise in red
for ``e2``.

Composition of paths with matching source and range is total and unique: the
two rectangular regions left uncovered by the operands are filled one corner
cell at a time, each cell forced by the single tile window it completes.
The bottom-right rectangle is filled column by column (left to right, top to
bottom within a column) using the forward bijections; the upper-left
rectangle row by row (bottom to top, right to left within a row) using the
inverses.  Any consistent order would give the same labels; this one makes
the intermediate states easy to test.

All values here are immutable; building and enumerating paths is pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .data import BasicData, Vertex, vertex_from_labels
from .errors import (
    InconsistentInput,
    InvariantViolation,
    OutOfRange,
    SizeLimit,
    SourceRangeMismatch,
    ValidationError,
)
from .lattice import (
    ORIGIN,
    Point,
    Tile,
    contained_translates,
    overlap,
    p_add,
    p_leq,
    p_sub,
    translate_union,
    unit,
)
from .limits import DEFAULT_LIMITS, Limits

BLUE, RED = "blue", "red"
COLOUR_AXIS = {BLUE: 1, RED: 2}


@dataclass(frozen=True)
class Path:
    """A degree-``n`` labelling of ``T(n)``; degree ``(0, 0)`` wraps a vertex."""

    tile: Tile
    degree: Point
    labels: tuple[tuple[Point, str], ...]

    @staticmethod
    def make(tile: Tile, degree: Point, labels: Mapping[Point, str]) -> "Path":
        return Path(tile, degree, tuple(sorted(labels.items())))

    @staticmethod
    def from_vertex(tile: Tile, v: Vertex) -> "Path":
        return Path(tile, ORIGIN, v.labels)

    def label(self, point: Point) -> str:
        return self.as_dict()[point]

    def as_dict(self) -> dict[Point, str]:
        return dict(self.labels)

    def window(self, m: Point) -> Vertex:
        """The tile-window restriction at offset ``m`` (shifted back to the tile)."""
        d = self.as_dict()
        return vertex_from_labels(
            self.tile, {t: d[p_add(t, m)] for t in self.tile.points}
        )

    @property
    def range_vertex(self) -> Vertex:
        return self.window(ORIGIN)

    @property
    def source_vertex(self) -> Vertex:
        return self.window(self.degree)


def edge_condition(tile: Tile, v: Vertex, u: Vertex, axis: int) -> bool:
    """Whether the degree-``e_axis`` edge from ``v`` to ``u`` exists."""
    e = unit(axis)
    vd, ud = v.as_dict(), u.as_dict()
    return all(vd[m] == ud[p_sub(m, e)] for m in overlap(tile, axis))


@dataclass(eq=False)
class Skeleton:
    """Bicoloured directed graph on the vertex set.

    Edges are ordered pairs of vertex indices ``(v, u)`` with ``v`` the
    range-side window; there is at most one edge per colour per pair.
    """

    basic_data: BasicData
    vertices: tuple[Vertex, ...]
    blue: tuple[tuple[int, int], ...]
    red: tuple[tuple[int, int], ...]
    index: dict[Vertex, int] = field(repr=False)

    def edges(self, colour: str) -> tuple[tuple[int, int], ...]:
        if colour == BLUE:
            return self.blue
        if colour == RED:
            return self.red
        raise ValueError(f"colour must be 'blue' or 'red', got {colour!r}")

    def out_neighbours(self, colour: str, v: int) -> list[int]:
        return [u for (w, u) in self.edges(colour) if w == v]

    def has_edge(self, colour: str, v: int, u: int) -> bool:
        return (v, u) in set(self.edges(colour))

    def matrix(self, colour: str) -> np.ndarray:
        n = len(self.vertices)
        m = np.zeros((n, n), dtype=np.int64)
        for v, u in self.edges(colour):
            m[v, u] = 1
        return m

    def edge_path(self, colour: str, v: int, u: int) -> Path:
        """The unique degree-``e_axis`` path with range ``v`` and source ``u``."""
        axis = COLOUR_AXIS[colour]
        e = unit(axis)
        tile = self.basic_data.tile
        labels = self.vertices[v].as_dict()
        for t, s in self.vertices[u].labels:
            q = p_add(t, e)
            if q in labels and labels[q] != s:
                raise InvariantViolation(
                    f"edge ({v}, {u}, {colour}) has inconsistent overlap"
                )
            labels[q] = s
        return Path.make(tile, e, labels)


def build_skeleton(
    bd: BasicData, limits: Limits = DEFAULT_LIMITS, check: bool = True
) -> Skeleton:
    """Construct the skeleton, testing the overlap condition for every
    ordered vertex pair and both colours, then check the degree counts
    (``check=False`` skips that guard so verification suites can diagnose
    deliberately broken data instead of tripping over it).

    For degenerate (one-cell) data the overlap sets are empty, so the result
    is the complete bicoloured digraph with loops on the single vertex.
    """
    from .data import enumerate_vertices

    vertices = tuple(enumerate_vertices(bd, limits))
    index = {v: i for i, v in enumerate(vertices)}
    tile = bd.tile
    blue: list[tuple[int, int]] = []
    red: list[tuple[int, int]] = []
    for colour, acc in ((BLUE, blue), (RED, red)):
        axis = COLOUR_AXIS[colour]
        for i, v in enumerate(vertices):
            for j, u in enumerate(vertices):
                if edge_condition(tile, v, u, axis):
                    acc.append((i, j))
    sk = Skeleton(bd, vertices, tuple(blue), tuple(red), index)
    if check:
        _check_degree_counts(sk)
    return sk


def _check_degree_counts(sk: Skeleton) -> None:
    """Every vertex must have |A|^c2 blue and |A|^c1 red edges, both ways."""
    bd = sk.basic_data
    if bd.degenerate:
        want_blue = want_red = 1
    else:
        want_blue = len(bd.alphabet) ** bd.tile.c2
        want_red = len(bd.alphabet) ** bd.tile.c1
    for colour, want in ((BLUE, want_blue), (RED, want_red)):
        outs = [0] * len(sk.vertices)
        ins = [0] * len(sk.vertices)
        for v, u in sk.edges(colour):
            outs[v] += 1
            ins[u] += 1
        for i, (o, n) in enumerate(zip(outs, ins)):
            if o != want or n != want:
                raise InvariantViolation(
                    f"vertex {i} has {o} outgoing / {n} incoming {colour} "
                    f"edges, expected {want}"
                )


def to_dot(sk: Skeleton) -> str:
    """Deterministic DOT rendering: blue edges solid, red edges dashed."""
    from .data import pattern_key

    lines = ["digraph skeleton {"]
    for i, v in enumerate(sk.vertices):
        label = f"{pattern_key(v.pattern)}|{v.top}"
        lines.append(f'  v{i} [label="{label}"];')
    for v, u in sk.blue:
        lines.append(f"  v{v} -> v{u} [color=blue, style=solid];")
    for v, u in sk.red:
        lines.append(f"  v{v} -> v{u} [color=red, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- corner filling ----------------------------------------------------------

def _pattern_at(bd: BasicData, labels: Mapping[Point, str], base: Point):
    return tuple(labels[p_add(t, base)] for t in bd.tile.sorted_reduced)


def _fill_value_br(bd: BasicData, labels: Mapping[Point, str], base: Point) -> str:
    """Forced value of the bottom-right corner of the window at ``base``."""
    p = _pattern_at(bd, labels, base)
    a = labels[p_add(base, bd.tile.corner_ul)]
    return bd.f(p, a)


def _fill_value_ul(bd: BasicData, labels: Mapping[Point, str], base: Point) -> str:
    """Forced value of the upper-left corner of the window at ``base``."""
    p = _pattern_at(bd, labels, base)
    b = labels[p_add(base, bd.tile.corner_br)]
    return bd.f_inv(p, b)


def _check_windows(bd: BasicData, labels: Mapping[Point, str]) -> None:
    region = frozenset(labels)
    for k in contained_translates(bd.tile, region):
        v = vertex_from_labels(bd.tile, {t: labels[p_add(t, k)] for t in bd.tile.points})
        if not bd.is_vertex(v):
            raise InconsistentInput(
                f"the window at offset {k} is not a vertex of the data"
            )


def fill_corner_br(
    bd: BasicData, labels: Mapping[Point, str], n: Point
) -> tuple[Point, str]:
    """Fill the bottom-right corner cell ``n + (c1 + 1) e1 - e2``.

    ``labels`` must cover ``T + n + e1`` and ``T + n - e2`` and every fully
    contained window must already be a vertex.  Returns the corner point and
    the unique symbol making the newly completed window a vertex; if the
    corner is already labelled the existing symbol is returned unchanged.

    Raises
    ------
    InconsistentInput
        A fully contained window of the input already fails the vertex
        condition.
    """
    tile = bd.tile
    if bd.degenerate:
        raise ValidationError("corner filling needs a nondegenerate tile")
    if n[1] < 1:
        raise ValueError(f"offset {n} must have a positive second coordinate")
    have = frozenset(labels)
    for k in (p_add(n, unit(1)), p_sub(n, unit(2))):
        missing = tile.translate(k) - have
        if missing:
            raise ValueError(
                f"labels must cover the window at {k}; missing {sorted(missing)}"
            )
    _check_windows(bd, labels)
    target = p_add(n, (tile.c1 + 1, -1))
    if target in have:
        return target, labels[target]
    base = p_add(n, (1, -1))
    return target, _fill_value_br(bd, labels, base)


def fill_corner_ul(
    bd: BasicData, labels: Mapping[Point, str], n: Point
) -> tuple[Point, str]:
    """Fill the upper-left corner cell ``n + c2 e2`` (mirror of
    :func:`fill_corner_br`, using the inverse bijections)."""
    tile = bd.tile
    if bd.degenerate:
        raise ValidationError("corner filling needs a nondegenerate tile")
    if n[1] < 1:
        raise ValueError(f"offset {n} must have a positive second coordinate")
    have = frozenset(labels)
    for k in (p_add(n, unit(1)), p_sub(n, unit(2))):
        missing = tile.translate(k) - have
        if missing:
            raise ValueError(
                f"labels must cover the window at {k}; missing {sorted(missing)}"
            )
    _check_windows(bd, labels)
    target = p_add(n, (0, tile.c2))
    if target in have:
        return target, labels[target]
    return target, _fill_value_ul(bd, labels, n)


# -- composition and factorisation -------------------------------------------

def compose(bd: BasicData, mu: Path, nu: Path) -> Path:
    """The unique path restricting to ``mu`` at the origin and to ``nu`` at
    offset ``d(mu)``.

    Raises
    ------
    SourceRangeMismatch
        If ``mu``'s source window differs from ``nu``'s range window.
    """
    tile = bd.tile
    if mu.source_vertex != nu.range_vertex:
        raise SourceRangeMismatch(
            "cannot compose: source window of the first path differs from "
            "the range window of the second"
        )
    dmu, dnu = mu.degree, nu.degree
    total = p_add(dmu, dnu)

    labels = mu.as_dict()
    for p, s in nu.labels:
        q = p_add(p, dmu)
        if labels.get(q, s) != s:
            raise InvariantViolation(
                f"operands disagree at {q} although their windows match"
            )
        labels[q] = s

    if bd.degenerate:
        # One-cell tile: every cell of the rectangle carries the single
        # distinguished symbol; no corner filling is needed.
        for x in range(total[0] + 1):
            for y in range(total[1] + 1):
                labels.setdefault((x, y), bd.distinguished)
        return Path.make(tile, total, labels)

    c1, c2 = tile.c1, tile.c2
    # Bottom-right rectangle: columns left to right, top to bottom.
    for x in range(c1 + dmu[0] + 1, c1 + dmu[0] + dnu[0] + 1):
        for y in range(dmu[1] - 1, -1, -1):
            _fill_cell(bd, labels, (x, y), (x - c1, y), _fill_value_br)
    # Upper-left rectangle: rows bottom to top, right to left.
    for y in range(c2 + dmu[1] + 1, c2 + dmu[1] + dnu[1] + 1):
        for x in range(dmu[0] - 1, -1, -1):
            _fill_cell(bd, labels, (x, y), (x, y - c2), _fill_value_ul)

    if frozenset(labels) != translate_union(tile, total).points:
        raise InvariantViolation(
            "corner filling did not produce the full translate union"
        )
    return Path.make(tile, total, labels)


def _fill_cell(bd, labels, cell, base, rule) -> None:
    window = bd.tile.translate(base)
    missing = window - frozenset(labels) - {cell}
    if missing:
        raise InvariantViolation(
            f"cannot fill {cell}: window at {base} is missing {sorted(missing)}"
        )
    labels[cell] = rule(bd, labels, base)


def factorize(lam: Path, m: Point, n: Point) -> Path:
    """The degree-``(n - m)`` slice ``i -> lam(m + i)`` on ``T(n - m)``.

    Raises
    ------
    OutOfRange
        Unless ``0 <= m <= n <= d(lam)``.
    """
    if not (p_leq(ORIGIN, m) and p_leq(m, n) and p_leq(n, lam.degree)):
        raise OutOfRange(
            f"slice ({m}, {n}) is not within degree {lam.degree}"
        )
    d = lam.as_dict()
    sub = p_sub(n, m)
    labels = {
        i: d[p_add(i, m)] for i in translate_union(lam.tile, sub).points
    }
    return Path.make(lam.tile, sub, labels)


# -- enumeration --------------------------------------------------------------

def path_count(bd: BasicData, n: Point) -> int:
    """|A| ** (n1 c2 + n2 c1): the number of paths of degree ``n`` from any
    fixed range vertex."""
    if bd.degenerate:
        return 1
    return len(bd.alphabet) ** (n[0] * bd.tile.c2 + n[1] * bd.tile.c1)


def enumerate_paths(
    bd: BasicData,
    v: Vertex,
    n: Point,
    skeleton: Skeleton | None = None,
    limits: Limits = DEFAULT_LIMITS,
    strict: bool = True,
) -> list[Path]:
    """All paths of degree ``n`` whose range window is ``v``, in a
    deterministic order (edges of degree ``e1`` are appended before ``e2``,
    following the canonical vertex order at each step).

    ``strict=False`` drops the count cross-check, for suites that probe
    deliberately broken data.
    """
    expected = path_count(bd, n)
    if expected > limits.max_paths:
        raise SizeLimit(
            f"{expected} paths of degree {n} would exceed the cap of "
            f"{limits.max_paths}"
        )
    tile = bd.tile
    if bd.degenerate:
        labels = {
            (x, y): bd.distinguished
            for x in range(n[0] + 1)
            for y in range(n[1] + 1)
        }
        return [Path.make(tile, n, labels)]

    sk = skeleton if skeleton is not None else build_skeleton(bd, limits)
    out_lists = {
        colour: _adjacency(sk, colour) for colour in (BLUE, RED)
    }
    paths = [Path.from_vertex(tile, v)]
    for colour in (BLUE,) * n[0] + (RED,) * n[1]:
        nxt = []
        for lam in paths:
            src = sk.index[lam.source_vertex]
            for u in out_lists[colour][src]:
                nxt.append(compose(bd, lam, sk.edge_path(colour, src, u)))
        paths = nxt
    if strict and len(paths) != expected:
        raise InvariantViolation(
            f"enumerated {len(paths)} paths of degree {n}, expected {expected}"
        )
    return paths


def all_paths(
    bd: BasicData,
    n: Point,
    skeleton: Skeleton | None = None,
    limits: Limits = DEFAULT_LIMITS,
    strict: bool = True,
) -> list[Path]:
    """All paths of degree ``n``, grouped by range vertex in canonical order."""
    sk = skeleton if skeleton is not None else build_skeleton(bd, limits)
    if path_count(bd, n) * len(sk.vertices) > limits.max_paths:
        raise SizeLimit(
            f"{path_count(bd, n) * len(sk.vertices)} paths of degree {n} "
            f"would exceed the cap of {limits.max_paths}"
        )
    out: list[Path] = []
    for v in sk.vertices:
        out.extend(
            enumerate_paths(bd, v, n, skeleton=sk, limits=limits, strict=strict)
        )
    return out


def _adjacency(sk: Skeleton, colour: str) -> list[list[int]]:
    n = len(sk.vertices)
    adj: list[list[int]] = [[] for _ in range(n)]
    for v, u in sk.edges(colour):
        adj[v].append(u)
    for row in adj:
        row.sort()
    return adj
