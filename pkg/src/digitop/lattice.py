"""Points, digital images, c_u adjacency, neighborhoods, connectivity, paths.

A digital image is a finite nonempty set of integer lattice points; the
adjacency relation is supplied separately as an oracle with an
``adjacent(p, q) -> bool`` method (see :mod:`digitop.adjacency`), so every
operation here works uniformly for c_u and for the product adjacencies.

All types are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Point = tuple[int, ...]


def as_point(coords: Sequence[int]) -> Point:
    p = tuple(int(c) for c in coords)
    if not p:
        raise ValueError("a point needs at least one coordinate")
    return p


class DigitalImage:
    """A finite nonempty duplicate-free set of lattice points of one dimension.

    Iteration is always in sorted order so that every derived result is
    deterministic.
    """

    __slots__ = ("points", "dim", "_sorted")

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = frozenset(as_point(p) for p in points)
        if not pts:
            raise ValueError("a digital image must contain at least one point")
        dims = {len(p) for p in pts}
        if len(dims) > 1:
            raise ValueError(f"points of mixed dimension: {sorted(dims)}")
        self.points: frozenset[Point] = pts
        self.dim: int = dims.pop()
        self._sorted: tuple[Point, ...] = tuple(sorted(pts))

    @property
    def sorted_points(self) -> tuple[Point, ...]:
        return self._sorted

    def __contains__(self, p) -> bool:
        return p in self.points

    def __iter__(self) -> Iterator[Point]:
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, DigitalImage) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        pts = ", ".join(format_point(p) for p in self._sorted[:6])
        more = f", ... ({len(self)} points)" if len(self) > 6 else ""
        return f"DigitalImage[{pts}{more}]"

    def restrict(self, points: Iterable[Sequence[int]]) -> "DigitalImage":
        """Sub-image on the given points, which must all belong to the image."""
        sub = DigitalImage(points)
        if not sub.points <= self.points:
            missing = sorted(sub.points - self.points)[0]
            raise ValueError(f"{format_point(missing)} is not a point of the image")
        return sub

    def translate(self, offset: Sequence[int]) -> "DigitalImage":
        off = as_point(offset)
        if len(off) != self.dim:
            raise ValueError("offset dimension mismatch")
        return DigitalImage(tuple(c + o for c, o in zip(p, off)) for p in self._sorted)


def format_point(p: Point) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


def interval(lo: int, hi: int) -> DigitalImage:
    """The 1-dimensional image {lo, ..., hi}; requires lo <= hi."""
    if lo > hi:
        raise ValueError(f"empty interval [{lo},{hi}]")
    return DigitalImage((i,) for i in range(lo, hi + 1))


def box(bounds: Sequence[tuple[int, int]]) -> DigitalImage:
    """Axis-aligned window: the product of the given coordinate intervals.

    Used wherever a statement quantifies over "all of Z^n": the caller picks
    an explicit finite window instead.
    """
    if not bounds:
        raise ValueError("a box needs at least one axis")
    axes = []
    for lo, hi in bounds:
        if lo > hi:
            raise ValueError(f"empty axis [{lo},{hi}]")
        axes.append(range(lo, hi + 1))
    points = [()]
    for axis in axes:
        points = [p + (c,) for p in points for c in axis]
    return DigitalImage(points)


def cu_adjacent(u: int, p: Sequence[int], q: Sequence[int]) -> bool:
    """c_u adjacency on Z^n: p != q, every coordinate moves by at most 1,
    and between 1 and u coordinates move."""
    n = len(p)
    if len(q) != n:
        raise ValueError(f"dimension mismatch: {len(p)} vs {len(q)}")
    if not 1 <= u <= n:
        raise ValueError(f"u={u} out of range [1,{n}]")
    moved = 0
    for a, b in zip(p, q):
        d = a - b
        if d:
            if d != 1 and d != -1:
                return False
            moved += 1
            if moved > u:
                return False
    return moved >= 1


@lru_cache(maxsize=None)
def adjacent_pairs(img: DigitalImage, adj) -> tuple[tuple[Point, Point], ...]:
    """All unordered adjacent pairs of the image, sorted. Cached, since the
    decision procedures revisit the same (image, adjacency) graphs heavily."""
    pts = img.sorted_points
    out = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if adj.adjacent(pts[i], pts[j]):
                out.append((pts[i], pts[j]))
    return tuple(out)


@lru_cache(maxsize=None)
def neighbor_table(img: DigitalImage, adj) -> dict[Point, tuple[Point, ...]]:
    """Sorted strict-neighbor lists within the image, per point."""
    table: dict[Point, list[Point]] = {p: [] for p in img.sorted_points}
    for p, q in adjacent_pairs(img, adj):
        table[p].append(q)
        table[q].append(p)
    return {p: tuple(sorted(ns)) for p, ns in table.items()}


def neighborhood(adj, domain: DigitalImage, x: Point, closed: bool = False) -> frozenset[Point]:
    """Points of the domain adjacent to x; with x itself when closed."""
    if x not in domain:
        raise ValueError(f"{format_point(x)} is not a point of the domain")
    near = set(neighbor_table(domain, adj)[x])
    if closed:
        near.add(x)
    return frozenset(near)


def eq_or_adjacent(adj, p: Point, q: Point) -> bool:
    return p == q or adj.adjacent(p, q)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        parent = self.parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]  # path halving
            i = parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[rj] = ri


def components(img: DigitalImage, adj) -> tuple[tuple[Point, ...], ...]:
    """Partition into maximal connected subsets.

    Blocks are sorted tuples, ordered by their least point; the image is
    connected exactly when there is a single block.
    """
    pts = img.sorted_points
    index = {p: i for i, p in enumerate(pts)}
    uf = _UnionFind(len(pts))
    for p, q in adjacent_pairs(img, adj):
        uf.union(index[p], index[q])
    blocks: dict[int, list[Point]] = {}
    for i, p in enumerate(pts):
        blocks.setdefault(uf.find(i), []).append(p)
    return tuple(tuple(b) for b in sorted(blocks.values()))


def is_connected(img: DigitalImage, adj) -> bool:
    return len(components(img, adj)) == 1


def is_connected_set(points: Iterable[Point], adj) -> bool:
    """Internal connectivity of a nonempty point set, as a subgraph."""
    sub = DigitalImage(points)
    return is_connected(sub, adj)


def sets_adjacent(a: Iterable[Point], b: Iterable[Point], adj) -> bool:
    """True iff some point of a equals or is adjacent to some point of b."""
    sa, sb = set(a), set(b)
    if not sa or not sb:
        raise ValueError("sets_adjacent requires nonempty sets")
    if sa & sb:
        return True
    for p in sorted(sa):
        for q in sorted(sb):
            if adj.adjacent(p, q):
                return True
    return False


def connected_subsets(img: DigitalImage, adj, max_size: int | None = None) -> list[frozenset[Point]]:
    """All nonempty connected subsets of the image, smallest first.

    Exponential in the image size; guarded to at most 20 points.
    """
    pts = img.sorted_points
    n = len(pts)
    if n > 20:
        raise ValueError("connected-subset enumeration is limited to 20 points")
    nbr_masks = [0] * n
    index = {p: i for i, p in enumerate(pts)}
    for p, q in adjacent_pairs(img, adj):
        nbr_masks[index[p]] |= 1 << index[q]
        nbr_masks[index[q]] |= 1 << index[p]
    out = []
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if max_size is not None and size > max_size:
            continue
        seed = mask & -mask
        seen = seed
        frontier = seed
        while frontier:
            grow = 0
            m = frontier
            while m:
                bit = m & -m
                m ^= bit
                grow |= nbr_masks[bit.bit_length() - 1]
            frontier = grow & mask & ~seen
            seen |= frontier
        if seen == mask:
            out.append(frozenset(pts[i] for i in range(n) if mask >> i & 1))
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def find_path(img: DigitalImage, adj, a: Point, b: Point) -> list[Point] | None:
    """Shortest adjacency path from a to b inside the image, or None.

    Breadth-first with sorted expansion, so ties break toward the
    lexicographically least path; a == b yields the length-0 path [a].
    """
    for end in (a, b):
        if end not in img:
            raise ValueError(f"endpoint {format_point(end)} is not in the image")
    if a == b:
        return [a]
    nbrs = neighbor_table(img, adj)
    parent: dict[Point, Point] = {a: a}
    queue = deque([a])
    while queue:
        p = queue.popleft()
        for q in nbrs[p]:
            if q not in parent:
                parent[q] = p
                if q == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(q)
    return None
