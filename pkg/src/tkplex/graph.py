"""Temporal graph model: ingestion, frame arithmetic, non-neighbor index,
slice degeneracy, and the combinatorial output bound."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .intervals import Interval, IntervalSet

log = logging.getLogger(__name__)


class EdgeListParseError(ValueError):
    """Malformed, empty, or otherwise unusable edge-list input."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass
class TemporalGraph:
    """Undirected temporal graph with dense vertex indices.

    ``labels`` maps index -> original vertex name (sorted lexicographically at
    ingestion, so index order equals label order).  ``edges`` holds distinct
    (t, u, v) triples with u < v, sorted, and timestamps in [1, lifetime].
    Instances are treated as immutable after construction.
    """

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]
    lifetime: int
    _pair_times: dict[tuple[int, int], tuple[int, ...]] | None = field(
        default=None, repr=False, compare=False
    )

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def pair_timestamps(self, u: int, v: int) -> tuple[int, ...]:
        """Sorted timestamps of edges between u and v (empty if none)."""
        if self._pair_times is None:
            times: dict[tuple[int, int], list[int]] = {}
            for t, a, b in self.edges:
                times.setdefault((a, b), []).append(t)
            self._pair_times = {p: tuple(ts) for p, ts in times.items()}
        key = (u, v) if u < v else (v, u)
        return self._pair_times.get(key, ())

    def union_adjacency(self) -> dict[int, set[int]]:
        """Static adjacency of the underlying (time-collapsed) graph."""
        adj: dict[int, set[int]] = {v: set() for v in range(self.vertex_count)}
        for _, u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def parse_edge_list(
    text: str,
    column_spec: tuple[int, int, int] = (0, 1, 2),
    dedupe: bool = True,
    on_self_loop: str = "error",
) -> TemporalGraph:
    """Build a graph from whitespace-separated edge lines.

    ``column_spec`` gives the (timestamp, vertex, vertex) column indices;
    extra columns are ignored and '#' lines are comments.  Timestamps are
    shifted so the smallest maps to 1.  Self-loops are rejected unless
    ``on_self_loop`` is "skip".
    """
    if on_self_loop not in ("error", "skip"):
        raise ValueError(f"unknown self-loop policy {on_self_loop!r}")
    t_col, u_col, v_col = column_spec
    need = max(column_spec) + 1
    raw: list[tuple[int, str, str]] = []
    self_loops = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) < need:
            raise EdgeListParseError(
                f"expected at least {need} columns, got {len(fields)}", line_no
            )
        try:
            t = int(fields[t_col])
        except ValueError:
            raise EdgeListParseError(
                f"bad timestamp {fields[t_col]!r}", line_no
            ) from None
        if t < 0:
            raise EdgeListParseError(f"negative timestamp {t}", line_no)
        a, b = fields[u_col], fields[v_col]
        if a == b:
            self_loops += 1
            if on_self_loop == "error":
                raise EdgeListParseError(f"self-loop on vertex {a!r}", line_no)
            continue
        raw.append((t, a, b))
    if self_loops:
        log.warning("skipped %d self-loop edge(s)", self_loops)
    if not raw:
        raise EdgeListParseError("empty input")

    labels = tuple(sorted({name for _, a, b in raw for name in (a, b)}))
    index = {name: i for i, name in enumerate(labels)}
    shift = min(t for t, _, _ in raw) - 1
    edges_iter = (
        (t - shift, *sorted((index[a], index[b]))) for t, a, b in raw
    )
    edges = set(edges_iter) if dedupe else list(edges_iter)
    sorted_edges = tuple(sorted(edges))
    if not dedupe and len(set(sorted_edges)) != len(sorted_edges):
        raise EdgeListParseError("duplicate time-stamped edges with dedupe off")
    lifetime = max(t for t, _, _ in sorted_edges)
    return TemporalGraph(labels, sorted_edges, lifetime)


def normalize_timestamps(graph: TemporalGraph, resolution: int) -> TemporalGraph:
    """Rescale timestamps to step size 1: t -> (t - min) / resolution + 1.

    ``resolution`` must divide every shifted timestamp.
    """
    if resolution < 1:
        raise ValueError("resolution must be a positive integer")
    t_min = min(t for t, _, _ in graph.edges)
    edges = []
    for t, u, v in graph.edges:
        shifted = t - t_min
        if shifted % resolution:
            raise EdgeListParseError(
                f"timestamp {t} is not aligned to resolution {resolution}"
            )
        edges.append((shifted // resolution + 1, u, v))
    edges = tuple(sorted(set(edges)))
    return TemporalGraph(graph.labels, edges, max(t for t, _, _ in edges))


def render_edge_list(graph: TemporalGraph) -> str:
    """Inverse of parse_edge_list for the default column order."""
    lines = [
        f"{t} {graph.labels[u]} {graph.labels[v]}" for t, u, v in graph.edges
    ]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class FrameDomain:
    """Window width delta and the index range [1, last_frame] of frames."""

    delta: int
    last_frame: int

    @classmethod
    def for_graph(cls, graph: TemporalGraph, delta: int) -> "FrameDomain":
        if delta < 0:
            raise ValueError("delta must be non-negative")
        if graph.lifetime - delta < 1:
            raise ValueError(
                f"delta {delta} too large for lifetime {graph.lifetime}"
            )
        return cls(delta, graph.lifetime - delta)

    def full_set(self) -> IntervalSet:
        return IntervalSet([(1, self.last_frame)])


def frames_covered(t: int, fd: FrameDomain) -> Interval:
    """Frame indices i whose window [i, i+delta] contains time step t."""
    return Interval(max(1, t - fd.delta), min(fd.last_frame, t))


class NonNeighborhoodIndex:
    """Per-pair frame sets where two vertices share no edge in the window.

    Pairs that never share an edge are kept implicit (full frame domain), as
    is the self-entry of every vertex.
    """

    def __init__(self, graph: TemporalGraph, fd: FrameDomain):
        self.frame_domain = fd
        self.full = fd.full_set()
        by_pair: dict[tuple[int, int], list[int]] = {}
        for t, u, v in graph.edges:  # edges sorted by t
            by_pair.setdefault((u, v), []).append(t)
        self._pairs: dict[tuple[int, int], IntervalSet] = {}
        last = fd.last_frame
        for pair, times in by_pair.items():
            gaps: list[Interval] = []
            cursor = 1
            for t in times:
                lo = max(1, t - fd.delta)
                if lo > cursor:
                    gaps.append(Interval(cursor, lo - 1))
                cursor = max(cursor, min(last, t) + 1)
            if cursor <= last:
                gaps.append(Interval(cursor, last))
            self._pairs[pair] = IntervalSet._raw(gaps)

    def nonneighbor_frames(self, u: int, v: int) -> IntervalSet:
        """Frames where u and v are non-neighbors (full domain for u == v)."""
        if u == v:
            return self.full
        key = (u, v) if u < v else (v, u)
        return self._pairs.get(key, self.full)

    def neighbor_frames(self, u: int, v: int) -> IntervalSet:
        return self.full.minus(self.nonneighbor_frames(u, v))


def build_nonneighborhood_index(
    graph: TemporalGraph, fd: FrameDomain
) -> NonNeighborhoodIndex:
    return NonNeighborhoodIndex(graph, fd)


def _bucket_degeneracy(adjacency: dict[int, set[int]]) -> int:
    """Static degeneracy by bucket-queue minimum-degree peeling."""
    degree = {v: len(nb) for v, nb in adjacency.items()}
    if not degree:
        return 0
    max_deg = max(degree.values())
    buckets: list[set[int]] = [set() for _ in range(max_deg + 1)]
    for v, d in degree.items():
        buckets[d].add(v)
    removed: set[int] = set()
    best = 0
    cursor = 0
    for _ in range(len(adjacency)):
        while not buckets[cursor]:
            cursor += 1
        v = buckets[cursor].pop()
        best = max(best, cursor)
        removed.add(v)
        for w in adjacency[v]:
            if w in removed:
                continue
            d = degree[w]
            buckets[d].discard(w)
            degree[w] = d - 1
            buckets[d - 1].add(w)
        cursor = max(0, cursor - 1)
    return best


def delta_slice_degeneracy(graph: TemporalGraph, fd: FrameDomain) -> int:
    """Maximum static degeneracy over all frame snapshot graphs.

    Frame edge sets are gathered with a sliding window over the sorted edge
    list; each frame is then peeled independently.
    """
    window: dict[tuple[int, int], int] = {}
    edges = graph.edges
    n_edges = len(edges)
    add_ptr = 0
    remove_ptr = 0
    best = 0
    for i in range(1, fd.last_frame + 1):
        while add_ptr < n_edges and edges[add_ptr][0] <= i + fd.delta:
            t, u, v = edges[add_ptr]
            if t >= i:
                window[(u, v)] = window.get((u, v), 0) + 1
            add_ptr += 1
        while remove_ptr < n_edges and edges[remove_ptr][0] < i:
            t, u, v = edges[remove_ptr]
            count = window.get((u, v))
            if count is not None:
                if count == 1:
                    del window[(u, v)]
                else:
                    window[(u, v)] = count - 1
            remove_ptr += 1
        adjacency: dict[int, set[int]] = {}
        for u, v in window:
            adjacency.setdefault(u, set()).add(v)
            adjacency.setdefault(v, set()).add(u)
        best = max(best, _bucket_degeneracy(adjacency))
    return best


def plex_count_upper_bound(n: int, k: int, d: int, m: int, lifetime: int) -> int:
    """n * C(n, k) * 2^(d+k) * min(m, lifetime), exactly."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return n * math.comb(n, k) * 2 ** (d + k) * min(m, lifetime)
