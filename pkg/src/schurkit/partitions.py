"""Integer partitions and Young diagram geometry.

Diagrams use the French convention throughout: a cell is a lattice point
(c, r) with column c and row r, both 0-indexed, origin at the bottom left.
Row r of the diagram of ``lam`` consists of the points (0, r) .. (lam[r]-1, r),
so the longest row sits at the bottom.  Every point-valued API in this package
is (column, row) in that order; off-by-one and order bugs between the English
and French conventions are the classic failure mode here, which is why points
are a named type instead of bare tuples.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class InfiniteRegionError(ValueError):
    """The complement of the given ideal is not a finite diagram."""


class Point(NamedTuple):
    """Lattice point of the quadrant, as (column, row)."""

    c: int
    r: int

    def __add__(self, other: "Point") -> "Point":
        return Point(self.c + other.c, self.r + other.r)


class Partition:
    """A weakly decreasing sequence of positive integers.

    Immutable and hashable.  Trailing zeros are stripped on construction;
    non-monotone input is rejected rather than sorted (sorting the parts is
    what :meth:`union` does).  Indexing past the last part returns 0, which
    keeps part-wise arithmetic free of padding logic.
    """

    __slots__ = ("_parts", "_size")

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        if ps and ps[-1] < 0:
            raise ValueError(f"parts must be positive, got {ps}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {ps}")
        self._parts = ps
        self._size = sum(ps)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return self._size

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, row: int) -> int:
        if row < 0:
            raise IndexError("row index must be non-negative")
        return self._parts[row] if row < len(self._parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    # lexicographic comparison of the part sequences; this is a total order
    # used for deterministic serialisation, not the dominance order
    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __le__(self, other: "Partition") -> bool:
        return self._parts <= other._parts

    def __gt__(self, other: "Partition") -> bool:
        return self._parts > other._parts

    def __ge__(self, other: "Partition") -> bool:
        return self._parts >= other._parts

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def to_list(self) -> list[int]:
        """JSON form: plain list of parts, ``[]`` for the empty partition."""
        return list(self._parts)

    def conjugate(self) -> "Partition":
        """Transpose the diagram: column lengths become row lengths."""
        if not self._parts:
            return Partition()
        width = self._parts[0]
        return Partition(
            sum(1 for p in self._parts if p >= c) for c in range(1, width + 1)
        )

    def contains(self, inner: "Partition") -> bool:
        """Diagram containment: every row of ``inner`` fits inside this one."""
        if len(inner) > len(self._parts):
            return False
        return all(inner[i] <= self._parts[i] for i in range(len(inner)))

    def union(self, other: "Partition") -> "Partition":
        """Multiset merge of the parts, re-sorted."""
        return Partition(sorted(self._parts + other._parts, reverse=True))

    def __add__(self, other: "Partition") -> "Partition":
        """Part-wise sum."""
        n = max(len(self._parts), len(other))
        return Partition(self[i] + other[i] for i in range(n))

    def dominates(self, other: "Partition") -> bool:
        """Dominance order: every prefix sum of self is >= the same prefix sum
        of ``other``.  Only defined between partitions of equal size."""
        if self._size != other.size:
            raise ValueError(
                f"dominance compares partitions of equal size, got {self._size} and {other.size}"
            )
        a = b = 0
        for i in range(max(len(self._parts), len(other))):
            a += self[i]
            b += other[i]
            if a < b:
                return False
        return True

    def cells(self) -> Iterator[Point]:
        """All cells of the diagram, as (column, row) points."""
        for r, length in enumerate(self._parts):
            for c in range(length):
                yield Point(c, r)


def point_in_diagram(lam: Partition, p: Point) -> bool:
    """Membership test (c, r) in [lam]."""
    return p.c < lam[p.r] if p.r < len(lam) else False


def evaluation_nonzero(lam: Partition, r: int, c: int) -> bool:
    """Whether s_lam evaluated on an alphabet of r positive and c negative
    letters is nonzero.  Equivalent to (c, r) lying outside [lam]: a tableau
    on that alphabet exists exactly when lam omits that point."""
    return not point_in_diagram(lam, Point(c, r))


def outer_corners(lam: Partition) -> frozenset[Point]:
    """Addable cells of the diagram.

    These are the points outside [lam] whose addition still yields a
    partition diagram.  There is always exactly one with c = 0 (on top) and
    one with r = 0 (end of the bottom row); for the empty partition both are
    (0, 0).  The result is the minimal generating antichain of the ideal
    complement of [lam].
    """
    pts = {Point(lam[0], 0), Point(0, len(lam))}
    for r in range(1, len(lam)):
        if lam[r - 1] > lam[r]:
            pts.add(Point(lam[r], r))
    return frozenset(pts)


def minkowski_sum(a: Iterable[Point], b: Iterable[Point]) -> frozenset[Point]:
    """{p + q : p in a, q in b} with coordinate-wise addition.

    Duplicates collapse but dominated points are kept; reduction to an
    antichain is ideal_complement's job.
    """
    aset, bset = set(a), set(b)
    if not aset or not bset:
        raise ValueError("minkowski_sum requires non-empty point sets")
    return frozenset(p + q for p in aset for q in bset)


def _minimal_antichain(points: set[Point]) -> list[Point]:
    return [
        p
        for p in points
        if not any(q != p and q.c <= p.c and q.r <= p.r for q in points)
    ]


def ideal_complement(generators: Iterable[Point]) -> Partition:
    """The partition whose diagram is the complement of the ideal generated
    by ``generators`` under coordinate-wise order.

    A point survives iff no generator is <= it coordinate-wise, so row r of
    the result has length min{q.c : q.r <= r}.  The complement is finite only
    when the generators include a point on each axis (some c = 0 and some
    r = 0); otherwise InfiniteRegionError is raised.
    """
    pts = {Point(p[0], p[1]) for p in generators}
    if not any(p.c == 0 for p in pts) or not any(p.r == 0 for p in pts):
        raise InfiniteRegionError(
            "generators must include a point with c = 0 and a point with r = 0"
        )
    gens = _minimal_antichain(pts)
    first_empty_row = min(p.r for p in gens if p.c == 0)
    rows = []
    for r in range(first_empty_row):
        rows.append(min(p.c for p in gens if p.r <= r))
    return Partition(rows)


def partitions_of(
    n: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order, optionally with
    bounded first part and bounded number of parts."""
    if n < 0:
        return
    cap = n if max_part is None else min(max_part, n)
    slots = n if max_length is None else max_length

    def rec(remaining: int, cap: int, slots: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0 or cap == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, cap, slots, [])


@lru_cache(maxsize=64)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """Cached tuple of all partitions of n, descending lexicographic."""
    return tuple(partitions_of(n))
