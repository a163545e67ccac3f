import itertools
import random

import pytest

from schurkit import (
    InfiniteRegionError,
    Partition,
    Point,
    all_partitions,
    evaluation_nonzero,
    ideal_complement,
    minkowski_sum,
    outer_corners,
    partitions_of,
    point_in_diagram,
)

P = Partition


class TestConstruction:
    def test_strips_trailing_zeros(self):
        assert P([3, 2, 0, 0]) == P([3, 2])
        assert P([0, 0]) == P()

    def test_rejects_non_monotone(self):
        with pytest.raises(ValueError):
            P([2, 3])

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            P([3, -1])

    def test_size_and_indexing(self):
        lam = P([3, 2])
        assert lam.size == 5
        assert lam[0] == 3 and lam[1] == 2 and lam[2] == 0 and lam[99] == 0
        assert len(lam) == 2
        assert not P()
        assert lam

    def test_hash_and_eq(self):
        assert hash(P([3, 2])) == hash(P((3, 2)))
        assert P([3, 2]) != P([3, 2, 1])


class TestContains:
    def test_nested_chain(self):
        assert P([8, 5, 3, 2, 1, 1, 1]).contains(P([3, 2]))

    def test_empty_in_empty(self):
        assert P().contains(P())

    def test_single_row_misses_two_rows(self):
        assert not P([10]).contains(P([3, 2]))

    def test_antisymmetry_exhaustive(self):
        for n in range(7):
            for lam in all_partitions(n):
                for mu in all_partitions(n):
                    if lam.contains(mu) and mu.contains(lam):
                        assert lam == mu


class TestConjugate:
    def test_small(self):
        assert P([3, 2]).conjugate() == P([2, 2, 1])

    def test_empty(self):
        assert P().conjugate() == P()

    def test_column_bound_case(self):
        assert P([7, 4, 3, 2, 2, 1, 1, 1, 1, 1]).conjugate() == P([10, 5, 3, 2, 1, 1, 1])

    def test_involution_exhaustive(self):
        for n in range(13):
            for lam in all_partitions(n):
                assert lam.conjugate().conjugate() == lam


class TestSumUnion:
    def test_extreme_terms(self):
        assert P([3, 2]) + P([3, 2]) == P([6, 4])
        assert P([3, 2]).union(P([3, 2])) == P([3, 3, 2, 2])

    def test_union_identity(self):
        assert P([4, 1]).union(P()) == P([4, 1])

    def test_sum_partwise(self):
        assert P([2, 1]) + P([1, 1]) == P([3, 2])

    def test_sizes_add(self):
        for lam, mu in itertools.product(all_partitions(4), all_partitions(3)):
            assert (lam + mu).size == 7
            assert lam.union(mu).size == 7


class TestDominance:
    def test_examples(self):
        assert P([6, 4]).dominates(P([3, 3, 2, 2]))
        assert P([4, 3, 3]).dominates(P([3, 3, 3, 1]))

    def test_reflexive(self):
        for lam in all_partitions(6):
            assert lam.dominates(lam)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            P([2]).dominates(P([2, 1]))

    def test_is_partial_order(self):
        parts = all_partitions(6)
        for a, b in itertools.product(parts, parts):
            if a.dominates(b) and b.dominates(a):
                assert a == b
        for a, b, c in itertools.combinations(parts, 3):
            if a.dominates(b) and b.dominates(c):
                assert a.dominates(c)


class TestOuterCorners:
    def test_known_sets(self):
        assert outer_corners(P([3, 3, 1])) == {Point(0, 3), Point(1, 2), Point(3, 0)}
        assert outer_corners(P([3, 2])) == {Point(0, 2), Point(2, 1), Point(3, 0)}
        assert outer_corners(P()) == {Point(0, 0)}

    def _added(self, lam, p):
        rows = list(lam.parts)
        while len(rows) <= p.r:
            rows.append(0)
        rows[p.r] += 1
        return rows

    def test_corners_are_exactly_the_addable_cells(self):
        for n in range(9):
            for lam in all_partitions(n):
                corners = outer_corners(lam)
                assert all(not point_in_diagram(lam, p) for p in corners)
                # scan a window just past the diagram
                for c in range(lam[0] + 2):
                    for r in range(len(lam) + 2):
                        p = Point(c, r)
                        if point_in_diagram(lam, p):
                            continue
                        rows = self._added(lam, p)
                        addable = p.c == lam[p.r] and all(
                            a >= b for a, b in zip(rows, rows[1:])
                        )
                        assert (p in corners) == addable

    def test_antichain(self):
        for n in range(9):
            for lam in all_partitions(n):
                corners = outer_corners(lam)
                for p, q in itertools.permutations(corners, 2):
                    assert not (p.c <= q.c and p.r <= q.r)


class TestMinkowski:
    def test_triple_worked_example(self):
        s = minkowski_sum(
            outer_corners(P([3, 2])), outer_corners(P([1, 1]))
        )
        s = minkowski_sum(s, outer_corners(P([1, 1])))
        assert s == {
            Point(0, 6), Point(1, 4), Point(2, 2), Point(2, 5), Point(3, 3),
            Point(4, 1), Point(3, 4), Point(4, 2), Point(5, 0),
        }

    def test_identity_element(self):
        s = outer_corners(P([4, 2]))
        assert minkowski_sum(s, {Point(0, 0)}) == s

    def test_duplicate_collapse(self):
        s = frozenset({Point(0, 2), Point(1, 0)})
        assert minkowski_sum(s, s) == {Point(0, 4), Point(1, 2), Point(2, 0)}

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            minkowski_sum(set(), {Point(0, 0)})

    def test_commutative_associative_random(self):
        rng = random.Random(7)
        for _ in range(50):
            sets = [
                frozenset(
                    Point(rng.randrange(5), rng.randrange(5))
                    for _ in range(rng.randrange(1, 5))
                )
                for _ in range(3)
            ]
            a, b, c = sets
            assert minkowski_sum(a, b) == minkowski_sum(b, a)
            assert minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(
                a, minkowski_sum(b, c)
            )


class TestIdealComplement:
    def test_three_generators(self):
        assert ideal_complement({Point(1, 3), Point(0, 4), Point(2, 0)}) == P([2, 2, 2, 1])

    def test_nine_point_sum(self):
        pts = {
            Point(0, 6), Point(1, 4), Point(2, 2), Point(2, 5), Point(3, 3),
            Point(4, 1), Point(3, 4), Point(4, 2), Point(5, 0),
        }
        assert ideal_complement(pts) == P([5, 4, 2, 2, 1, 1])

    def test_origin_only(self):
        assert ideal_complement({Point(0, 0)}) == P()

    def test_infinite_region(self):
        with pytest.raises(InfiniteRegionError):
            ideal_complement({Point(1, 1)})
        with pytest.raises(InfiniteRegionError):
            ideal_complement(set())

    def test_round_trip_exhaustive(self):
        for n in range(13):
            for lam in all_partitions(n):
                assert ideal_complement(outer_corners(lam)) == lam


class TestPointMembership:
    def test_examples(self):
        assert not point_in_diagram(P([3, 3, 3, 1]), Point(1, 3))
        assert not point_in_diagram(P(), Point(0, 0))
        assert point_in_diagram(P([3, 3, 1]), Point(0, 2))

    def test_evaluation_nonzero_agrees(self):
        lam = P([3, 2])
        # r positive letters and c negative letters are enough iff the
        # diagram omits (c, r)
        assert evaluation_nonzero(lam, 2, 0)
        assert evaluation_nonzero(lam, 3, 1)
        assert not evaluation_nonzero(lam, 1, 0)


class TestGenerators:
    def test_counts(self):
        # p(n) for n = 0..16
        expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231]
        for n, want in enumerate(expected):
            assert len(all_partitions(n)) == want

    def test_constraints(self):
        got = list(partitions_of(8, max_part=4, max_length=3))
        assert all(p[0] <= 4 and len(p) <= 3 and p.size == 8 for p in got)
        assert P([4, 4]) in got and P([3, 3, 2]) in got

    def test_descending_lex_order(self):
        ps = [p.parts for p in partitions_of(7)]
        assert ps == sorted(ps, reverse=True)
