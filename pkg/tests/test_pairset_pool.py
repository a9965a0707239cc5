import random

import pytest

from tkplex import pairset
from tkplex.intervals import EMPTY_SET, Interval, IntervalSet
from tkplex.pool import Pool


def iset(*pairs) -> IntervalSet:
    return IntervalSet(pairs)


class TestRestrictTime:
    def test_per_entry_intersection(self):
        pairs = {0: iset((1, 5)), 1: iset((3, 4))}
        got = pairset.restrict_time(pairs, iset((4, 5)))
        assert got == {0: iset((4, 5)), 1: iset((4, 4))}

    def test_empty_window_annihilates(self):
        assert pairset.restrict_time({0: iset((1, 5))}, EMPTY_SET) == {}

    def test_empty_input(self):
        assert pairset.restrict_time({}, iset((1, 5))) == {}


class TestRestrictVertices:
    def test_filter(self):
        pairs = {0: iset((1, 5)), 1: iset((3, 4))}
        assert pairset.restrict_vertices(pairs, {0}) == {0: iset((1, 5))}

    def test_empty_keep_set(self):
        assert pairset.restrict_vertices({0: iset((1, 5))}, set()) == {}

    def test_superset_is_identity(self):
        pairs = {0: iset((1, 5)), 1: iset((3, 4))}
        assert pairset.restrict_vertices(pairs, {0, 1, 2}) == pairs


class TestMergePair:
    def test_insert_new_vertex(self):
        got = pairset.merge_pair(0, iset((1, 2)), {1: iset((1, 1))})
        assert got == {0: iset((1, 2)), 1: iset((1, 1))}

    def test_union_with_existing_entry(self):
        got = pairset.merge_pair(0, iset((3, 3)), {0: iset((1, 2))})
        assert got == {0: iset((1, 3))}

    def test_empty_contribution_is_noop(self):
        pairs = {1: iset((1, 1))}
        assert pairset.merge_pair(0, EMPTY_SET, pairs) == pairs

    def test_does_not_mutate_input(self):
        pairs = {0: iset((1, 2))}
        pairset.merge_pair(0, iset((5, 6)), pairs)
        assert pairs == {0: iset((1, 2))}


class TestIntersect:
    def test_common_vertex(self):
        assert pairset.intersect({0: iset((1, 5))}, {0: iset((3, 8))}) == {
            0: iset((3, 5))
        }

    def test_disjoint_vertices(self):
        assert pairset.intersect({0: iset((1, 5))}, {1: iset((1, 5))}) == {}

    def test_idempotent(self):
        pairs = {0: iset((1, 5)), 2: iset((2, 2), (7, 9))}
        assert pairset.intersect(pairs, pairs) == pairs


class TestPool:
    def test_starts_all_zero(self):
        pool = Pool(5)
        assert all(pool.count(3, i) == 0 for i in range(1, 6))
        assert pool.runs(3) == [(1, 5, 0)]

    def test_rejects_empty_domain(self):
        with pytest.raises(ValueError):
            Pool(0)

    def test_single_increment(self):
        pool = Pool(5)
        hits = pool.increment(0, iset((2, 4)), critical_at=1)
        assert hits == [Interval(2, 4)]
        assert pool.runs(0) == [(1, 1, 0), (2, 4, 1), (5, 5, 0)]

    def test_critical_only_at_threshold(self):
        pool = Pool(5)
        assert pool.increment(0, iset((1, 5)), critical_at=2) == []
        assert pool.increment(0, iset((2, 3)), critical_at=2) == [Interval(2, 3)]
        assert pool.runs(0) == [(1, 1, 1), (2, 3, 2), (4, 5, 1)]

    def test_copy_isolated_from_later_increments(self):
        pool = Pool(4)
        pool.increment(0, iset((1, 2)), critical_at=99)
        snapshot = pool.copy()
        pool.increment(0, iset((1, 4)), critical_at=99)
        assert snapshot.count(0, 1) == 1
        assert pool.count(0, 1) == 2

    def test_runs_partition_and_alternate(self):
        rng = random.Random(99)
        pool = Pool(12)
        counts = {v: [0] * 13 for v in range(3)}
        for _ in range(60):
            v = rng.randrange(3)
            lo = rng.randint(1, 12)
            hi = rng.randint(lo, 12)
            threshold = rng.randint(1, 5)
            hits = pool.increment(v, iset((lo, hi)), critical_at=threshold)
            for i in range(lo, hi + 1):
                counts[v][i] += 1
            expected_hits = [
                i for i in range(lo, hi + 1) if counts[v][i] == threshold
            ]
            assert sorted(
                i for iv in hits for i in range(iv.start, iv.end + 1)
            ) == expected_hits
            for u in range(3):
                runs = pool.runs(u)
                assert runs[0][0] == 1 and runs[-1][1] == 12
                assert all(
                    r1[1] + 1 == r2[0] and r1[2] != r2[2]
                    for r1, r2 in zip(runs, runs[1:])
                )
                assert all(
                    pool.count(u, i) == counts[u][i] for i in range(1, 13)
                )
