"""Deterministic instance families for the theorem checks.

Canonical pools enumerate small images up to translation (least coordinate 0
on every axis), so exhaustive checks quantify over structurally distinct
instances only.  Randomized families derive everything from a seeded
``random.Random``; identical seeds give identical instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product as iter_product

from ..adjacency import Adjacency, cu
from ..lattice import DigitalImage, adjacent_pairs
from ..maps import DigitalMap, all_maps, continuous_maps


@dataclass(frozen=True)
class InstanceFamily:
    """Description of a generated family, recorded in check reports."""

    max_points: int
    max_dim: int
    adjacencies: tuple[str, ...]
    seed: int | str = 0

    def describe(self) -> str:
        return (
            f"<=:{self.max_points}pts dim<={self.max_dim} "
            f"adj={','.join(self.adjacencies)} seed={self.seed}"
        )


def canonical_images_1d(max_points: int = 3, span: int = 2) -> list[DigitalImage]:
    """Nonempty subsets of [0, span] with least point 0, up to max_points."""
    cells = list(range(span + 1))
    out = []
    for size in range(1, max_points + 1):
        for combo in combinations(cells, size):
            if combo[0] == 0:
                out.append(DigitalImage((c,) for c in combo))
    return out


def canonical_images_2d(max_points: int = 3, span: int = 1) -> list[DigitalImage]:
    """Nonempty subsets of [0, span]^2 with least coordinate 0 on both axes."""
    cells = [(x, y) for x in range(span + 1) for y in range(span + 1)]
    out = []
    for size in range(1, max_points + 1):
        for combo in combinations(cells, size):
            if min(c[0] for c in combo) == 0 and min(c[1] for c in combo) == 0:
                out.append(DigitalImage(combo))
    return out


def pool_1d(max_points: int = 3, span: int = 2) -> list[tuple[DigitalImage, Adjacency]]:
    c1 = cu(1, 1)
    return [(img, c1) for img in canonical_images_1d(max_points, span)]


def pool_2d(max_points: int = 3, span: int = 1) -> list[tuple[DigitalImage, Adjacency]]:
    out = []
    for img in canonical_images_2d(max_points, span):
        out.append((img, cu(1, 2)))
        out.append((img, cu(2, 2)))
    return out


def pool_mixed(max_points: int = 3) -> list[tuple[DigitalImage, Adjacency]]:
    return pool_1d(max_points) + pool_2d(max_points)


def msc8() -> DigitalImage:
    """A 6-point simple closed curve under c_2 in the plane: every point has
    exactly its two cyclic neighbors."""
    return DigitalImage(msc8_cycle())


def msc8_cycle() -> tuple[tuple[int, int], ...]:
    """The curve's points in cyclic order."""
    return ((0, 0), (1, 1), (2, 1), (3, 0), (2, -1), (1, -1))


def has_adjacent_pair(img: DigitalImage, adj: Adjacency) -> bool:
    return bool(adjacent_pairs(img, adj))


def check_rng(seed: int | str, check_id: str) -> random.Random:
    return random.Random(f"{seed}/{check_id}")


def random_image(rng: random.Random, dim: int, max_points: int, span: int = 2) -> DigitalImage:
    cells = list(iter_product(range(span + 1), repeat=dim))
    size = rng.randint(1, max_points)
    return DigitalImage(rng.sample(cells, min(size, len(cells))))


def random_subimage(rng: random.Random, img: DigitalImage) -> DigitalImage:
    size = rng.randint(1, len(img))
    return DigitalImage(rng.sample(list(img.sorted_points), size))


def random_map(
    rng: random.Random, x: DigitalImage, adj_x: Adjacency, y: DigitalImage, adj_y: Adjacency
) -> DigitalMap:
    table = {p: rng.choice(y.sorted_points) for p in x}
    return DigitalMap(x, y, table, adj_x, adj_y)


def random_continuous_map(
    rng: random.Random, x: DigitalImage, adj_x: Adjacency, y: DigitalImage, adj_y: Adjacency
) -> DigitalMap:
    """Uniform choice among all continuous maps (enumerated; images are tiny)."""
    options = list(continuous_maps(x, adj_x, y, adj_y))
    return rng.choice(options)


def random_multimap_table(rng: random.Random, x: DigitalImage, y: DigitalImage):
    pts = y.sorted_points
    table = {}
    for p in x:
        size = rng.randint(1, len(pts))
        table[p] = tuple(rng.sample(list(pts), size))
    return table


def nonempty_value_sets(y: DigitalImage) -> list[tuple]:
    """All nonempty subsets of the codomain, as sorted tuples."""
    pts = y.sorted_points
    out = []
    for mask in range(1, 1 << len(pts)):
        out.append(tuple(pts[i] for i in range(len(pts)) if mask >> i & 1))
    return out


def all_multimap_tables(x: DigitalImage, y: DigitalImage):
    """Every multivalued table x -> nonempty subsets of y, lexicographically."""
    values = nonempty_value_sets(y)
    pts = x.sorted_points

    def extend(i, acc):
        if i == len(pts):
            yield dict(acc)
            return
        for vs in values:
            acc[pts[i]] = vs
            yield from extend(i + 1, acc)
        acc.pop(pts[i], None)

    yield from extend(0, {})


__all__ = [
    "InstanceFamily",
    "all_maps",
    "all_multimap_tables",
    "canonical_images_1d",
    "canonical_images_2d",
    "check_rng",
    "has_adjacent_pair",
    "msc8",
    "msc8_cycle",
    "nonempty_value_sets",
    "pool_1d",
    "pool_2d",
    "pool_mixed",
    "random_continuous_map",
    "random_image",
    "random_map",
    "random_multimap_table",
    "random_subimage",
]
