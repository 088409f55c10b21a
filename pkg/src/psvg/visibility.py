"""Natural visibility graph construction.

Maps a series x[0..n-1] to an undirected graph on the sample indices: two
samples m < n are linked iff the straight segment between (m, x[m]) and
(n, x[n]) passes strictly above every intermediate sample, i.e. for every
m < t < n

    x[t] < x[n] + ((n - t) / (n - m)) * (x[m] - x[n]).

The inequality is strict, so collinear or equal-valued intermediate points
block visibility; consecutive samples always see each other. This is the
natural (not horizontal) visibility criterion of Lacasa et al. (2008).

Two constructors are provided: a brute-force reference and a
divide-and-conquer constructor that recurses on the range maximum. Both
evaluate the criterion through the same slope comparison, anchored at the
higher-valued endpoint, with no epsilon tolerance: dividing the inequality
above by the positive index gap turns it into a comparison of finite
slopes, and anchoring both constructors at the same endpoint makes their
floating-point decisions identical, not merely mathematically equivalent.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .exceptions import SeriesTooShortError
from .series_io import TimeSeries


class VisibilityGraph:
    """Undirected simple graph on series indices with sorted adjacency.

    Nodes are 0..node_count-1. Every consecutive pair of nodes is an edge,
    so the graph is connected. Instances are immutable after construction.
    """

    __slots__ = ("node_count", "_neighbors", "_edge_count")

    def __init__(self, node_count: int, edges: Sequence[tuple[int, int]]):
        if node_count < 2:
            raise SeriesTooShortError(
                f"graph needs at least 2 nodes, got {node_count}")
        neighbors: list[list[int]] = [[] for _ in range(node_count)]
        for a, b in edges:
            neighbors[a].append(b)
            neighbors[b].append(a)
        for lst in neighbors:
            lst.sort()
        self.node_count = node_count
        self._neighbors = neighbors
        self._edge_count = len(edges)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, i: int) -> list[int]:
        """Sorted neighbor indices of node i."""
        return list(self._neighbors[i])

    def degree(self, i: int) -> int:
        return len(self._neighbors[i])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (m, n) with m < n in lexicographic order."""
        for i, nbrs in enumerate(self._neighbors):
            for j in nbrs:
                if j > i:
                    yield (i, j)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def __eq__(self, other) -> bool:
        if not isinstance(other, VisibilityGraph):
            return NotImplemented
        return (self.node_count == other.node_count
                and self._neighbors == other._neighbors)

    def __hash__(self):
        raise TypeError("VisibilityGraph is not hashable")

    def __repr__(self) -> str:
        return (f"VisibilityGraph(nodes={self.node_count}, "
                f"edges={self._edge_count})")


def _pair_visible(values: Sequence[float], m: int, n: int) -> bool:
    # Anchor the slope comparison at the higher endpoint (ties: left). The
    # divide-and-conquer constructor always sweeps outward from a range
    # maximum, so this choice reproduces its comparisons exactly.
    if n == m + 1:
        return True
    if values[m] >= values[n]:
        vm = values[m]
        ref = (values[n] - vm) / (n - m)
        for t in range(m + 1, n):
            if not ((values[t] - vm) / (t - m) < ref):
                return False
    else:
        vn = values[n]
        ref = (values[m] - vn) / (n - m)
        for t in range(m + 1, n):
            if not ((values[t] - vn) / (n - t) < ref):
                return False
    return True


def visible(series: TimeSeries, m: int, n: int) -> bool:
    """Decide whether samples m and n see each other (0-based, m < n).

    True iff the strict visibility inequality holds at every intermediate
    index; vacuously true for consecutive samples.
    """
    if not (0 <= m < len(series) and 0 <= n < len(series)):
        raise IndexError(f"indices ({m}, {n}) out of range for length {len(series)}")
    if m >= n:
        raise ValueError(f"need m < n, got m={m}, n={n}")
    return _pair_visible([float(v) for v in series.values], m, n)


def build_graph_naive(series: TimeSeries) -> VisibilityGraph:
    """Reference constructor: test every index pair against the criterion.

    Worst-case cubic in series length; kept deliberately simple to serve as
    the correctness oracle for build_graph_fast.
    """
    n = len(series)
    if n < 2:
        raise SeriesTooShortError(f"series of length {n} has no visibility graph")
    values = [float(v) for v in series.values]
    edges = []
    for m in range(n - 1):
        edges.append((m, m + 1))
        for t in range(m + 2, n):
            if _pair_visible(values, m, t):
                edges.append((m, t))
    return VisibilityGraph(n, edges)


def build_graph_fast(series: TimeSeries) -> VisibilityGraph:
    """Divide-and-conquer constructor; same edge set as build_graph_naive.

    Splits each index range at its maximum (leftmost on ties): no edge can
    span a strict range maximum without being incident to it, because the
    segment between its endpoints runs at or below the maximum there. The
    maximum's own neighbors are found by one linear sweep per side that
    keeps the running maximum slope; the two open sub-ranges are processed
    iteratively. Roughly n log n on typical data, quadratic on monotone
    series where every split is maximally unbalanced.
    """
    x = np.asarray(series.values, dtype=np.float64)
    n = len(x)
    if n < 2:
        raise SeriesTooShortError(f"series of length {n} has no visibility graph")
    edges: list[tuple[int, int]] = []
    stack = [(0, n - 1)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 1:
            continue
        p = lo + int(np.argmax(x[lo:hi + 1]))
        vp = x[p]
        if p < hi:
            seg = x[p + 1:hi + 1]
            slopes = (seg - vp) / np.arange(1, len(seg) + 1, dtype=np.float64)
            run = np.maximum.accumulate(slopes)
            vis = np.empty(len(slopes), dtype=bool)
            vis[0] = True
            vis[1:] = slopes[1:] > run[:-1]
            edges.extend((p, p + 1 + int(k)) for k in np.flatnonzero(vis))
        if p > lo:
            seg = x[p - 1::-1][:p - lo]  # x[p-1], x[p-2], ..., x[lo]
            slopes = (seg - vp) / np.arange(1, len(seg) + 1, dtype=np.float64)
            run = np.maximum.accumulate(slopes)
            vis = np.empty(len(slopes), dtype=bool)
            vis[0] = True
            vis[1:] = slopes[1:] > run[:-1]
            edges.extend((p - 1 - int(k), p) for k in np.flatnonzero(vis))
        if p - 1 > lo:
            stack.append((lo, p - 1))
        if hi > p + 1:
            stack.append((p + 1, hi))
    return VisibilityGraph(n, edges)


def degree_sequence(graph: VisibilityGraph) -> list[int]:
    """Per-node edge counts, in node order."""
    return [graph.degree(i) for i in range(graph.node_count)]


def build_graph(series: TimeSeries, constructor: str = "fast") -> VisibilityGraph:
    """Dispatch to a constructor by name ("fast" or "naive")."""
    if constructor == "fast":
        return build_graph_fast(series)
    if constructor == "naive":
        return build_graph_naive(series)
    raise ValueError(f"unknown constructor {constructor!r}")
