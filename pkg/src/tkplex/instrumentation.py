"""Debug-time invariant checks for the recursion.

The monitor recomputes every claimed property from the raw edge list (never
from the non-neighborhood index), so a passing run is independent evidence
that the pool, the candidate sets, and the call tree are all consistent.
Intended for small instances only; every call costs O(|V|^2 * frames).
"""

from __future__ import annotations

from bisect import bisect_left

from .graph import TemporalGraph
from .intervals import Interval, IntervalSet
from .pairset import PairSet
from .pool import Pool


class InvariantViolation(AssertionError):
    pass


class InvariantMonitor:
    """Checks pool counts, candidate exactness, and call uniqueness.

    Attach via the ``monitor`` argument of ``enumerate_maximal_plexes``.
    """

    def __init__(self, graph: TemporalGraph, delta: int, k: int):
        self.graph = graph
        self.delta = delta
        self.k = k
        self.last_frame = graph.lifetime - delta
        self.calls_seen: set[tuple] = set()
        self._times: dict[tuple[int, int], list[int]] = {}
        for t, u, v in graph.edges:
            self._times.setdefault((u, v), []).append(t)

    def _non_neighbors_in_frame(self, u: int, w: int, i: int) -> bool:
        if u == w:
            return True
        key = (u, w) if u < w else (w, u)
        times = self._times.get(key)
        if not times:
            return True
        j = bisect_left(times, i)
        return not (j < len(times) and times[j] <= i + self.delta)

    def _frame_ok(self, group: tuple[int, ...], i: int) -> bool:
        for v in group:
            missing = sum(
                1 for u in group if self._non_neighbors_in_frame(u, v, i)
            )
            if missing > self.k:
                return False
        return True

    def _feasible_runs(self, group: tuple[int, ...]) -> list[Interval]:
        runs: list[Interval] = []
        for i in range(1, self.last_frame + 1):
            if self._frame_ok(group, i):
                if runs and runs[-1].end == i - 1:
                    runs[-1] = Interval(runs[-1].start, i)
                else:
                    runs.append(Interval(i, i))
        return runs

    def on_call(
        self,
        members: tuple[int, ...],
        lifetimes: IntervalSet,
        candidates: PairSet,
        excluded: PairSet,
        pool: Pool,
    ) -> None:
        self._check_call_unique(members, lifetimes)
        self._check_pool(members, lifetimes, candidates, excluded, pool)
        self._check_lifetimes(members, lifetimes)
        self._check_candidates(members, lifetimes, candidates, excluded)

    def _check_call_unique(self, members, lifetimes) -> None:
        fingerprint = (frozenset(members), lifetimes.intervals)
        if fingerprint in self.calls_seen:
            raise InvariantViolation(
                f"duplicate recursive call for {sorted(members)} {lifetimes}"
            )
        self.calls_seen.add(fingerprint)

    def _check_pool(self, members, lifetimes, candidates, excluded, pool) -> None:
        tracked = dict(candidates)
        tracked.update(excluded)
        for c in members:
            tracked[c] = lifetimes
        for w, iset in tracked.items():
            for frame in iset.members():
                expected = sum(
                    1
                    for u in members
                    if self._non_neighbors_in_frame(u, w, frame)
                )
                got = pool.count(w, frame)
                if got != expected:
                    raise InvariantViolation(
                        f"pool count for vertex {w} frame {frame} is {got}, "
                        f"expected {expected} (plex {sorted(members)})"
                    )

    def _check_lifetimes(self, members, lifetimes) -> None:
        if not members:
            return
        runs = set(self._feasible_runs(tuple(members)))
        for iv in lifetimes.intervals:
            if iv not in runs:
                raise InvariantViolation(
                    f"{sorted(members)} is not a time-maximal plex on {iv}"
                )

    def _check_candidates(self, members, lifetimes, candidates, excluded) -> None:
        in_plex = set(members)
        entries = dict(candidates)
        for v, iset in excluded.items():
            if v in entries:
                raise InvariantViolation(
                    f"vertex {v} present in both candidate and excluded sets"
                )
            entries[v] = iset
        for v in range(self.graph.vertex_count):
            if v in in_plex:
                continue
            grown = tuple(sorted((*members, v)))
            expected = tuple(
                run
                for run in self._feasible_runs(grown)
                if lifetimes.covers(run)
            )
            got = entries.get(v)
            got_intervals = () if got is None else got.intervals
            if got_intervals != expected:
                raise InvariantViolation(
                    f"candidate entry for vertex {v} at plex {sorted(members)} "
                    f"is {got_intervals}, expected {expected}"
                )
