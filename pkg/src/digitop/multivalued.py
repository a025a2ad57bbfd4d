"""Multivalued maps between digital images: weak and strong continuity,
connectivity preservation, lattice subdivisions, subdivision-based
continuity, multivalued retractions, and inverses of surjections.

Subdivision continuity is a semi-decision: a multivalued map counts as
continuous when some single-valued continuous map on the r-th subdivision of
the domain induces it, and there is no computable bound on r.  The search
here runs r = 1..r_max and distinguishes "witness found at r" from "no
witness for any r <= r_max" (which proves nothing beyond r_max).  Witnesses
found at some r refine to every multiple of r, so scanning r upward never
needs to revisit smaller values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterable, Mapping, Sequence

from .adjacency import Adjacency, Cu, product_adjacency, product_image, split_point
from .lattice import (
    DigitalImage,
    Point,
    adjacent_pairs,
    connected_subsets,
    eq_or_adjacent,
    format_point,
    is_connected_set,
    neighbor_table,
    sets_adjacent,
)
from .maps import DigitalMap, Verdict, is_continuous
from .search import Budget, as_budget


class MultiMap:
    """A total table assigning a nonempty subset of the codomain per point."""

    __slots__ = ("domain", "codomain", "table", "dom_adj", "cod_adj")

    def __init__(
        self,
        domain: DigitalImage,
        codomain: DigitalImage,
        table: Mapping[Point, Iterable[Point]],
        dom_adj: Adjacency,
        cod_adj: Adjacency,
    ):
        if dom_adj.dim != domain.dim:
            raise ValueError("domain adjacency arity does not match the domain")
        if cod_adj.dim != codomain.dim:
            raise ValueError("codomain adjacency arity does not match the codomain")
        tbl = {tuple(k): frozenset(tuple(v) for v in vs) for k, vs in table.items()}
        if set(tbl) != set(domain.points):
            raise ValueError("table is not total on the domain")
        for x, vs in sorted(tbl.items()):
            if not vs:
                raise ValueError(f"image of {format_point(x)} is empty")
            if not vs <= codomain.points:
                bad = sorted(vs - codomain.points)[0]
                raise ValueError(f"value {format_point(bad)} is outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self.table = tbl
        self.dom_adj = dom_adj
        self.cod_adj = cod_adj

    def __call__(self, x: Point) -> frozenset[Point]:
        return self.table[x]

    def of_set(self, points: Iterable[Point]) -> frozenset[Point]:
        out: set[Point] = set()
        for x in points:
            out |= self.table[x]
        return frozenset(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.dom_adj == other.dom_adj
            and self.cod_adj == other.cod_adj
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.domain,
                self.codomain,
                self.dom_adj,
                self.cod_adj,
                tuple(tuple(sorted(self.table[x])) for x in self.domain.sorted_points),
            )
        )

    def __repr__(self) -> str:
        return f"MultiMap(|X|={len(self.domain)}, |Y|={len(self.codomain)})"


def multimap_from_map(f: DigitalMap) -> MultiMap:
    """View a single-valued map as a multivalued one."""
    return MultiMap(
        f.domain, f.codomain, {x: (v,) for x, v in f.table.items()}, f.dom_adj, f.cod_adj
    )


# ---------------------------------------------------------------------------
# weak/strong continuity and connectivity preservation


def has_weak_continuity(F: MultiMap) -> Verdict:
    """Adjacent points must have adjacent value sets."""
    for x, y in adjacent_pairs(F.domain, F.dom_adj):
        if not sets_adjacent(F.table[x], F.table[y], F.cod_adj):
            return Verdict(False, (x, y))
    return Verdict(True)


def has_strong_continuity(F: MultiMap) -> Verdict:
    """For adjacent points, every value on either side must have an equal or
    adjacent partner on the other side."""
    cod = F.cod_adj
    for x, y in adjacent_pairs(F.domain, F.dom_adj):
        for a, b in ((x, y), (y, x)):
            vb = sorted(F.table[b])
            for v in sorted(F.table[a]):
                if not any(eq_or_adjacent(cod, v, w) for w in vb):
                    return Verdict(False, ((a, b), v))
    return Verdict(True)


def is_connectivity_preserving(F: MultiMap) -> Verdict:
    """Point images connected, and adjacent points have adjacent images;
    equivalent to preserving connectedness of arbitrary subsets."""
    for x in F.domain:
        if not is_connected_set(F.table[x], F.cod_adj):
            return Verdict(False, ("point image disconnected", x))
    for x, y in adjacent_pairs(F.domain, F.dom_adj):
        if not sets_adjacent(F.table[x], F.table[y], F.cod_adj):
            return Verdict(False, ("images not adjacent", (x, y)))
    return Verdict(True)


# ---------------------------------------------------------------------------
# subdivisions


class Subdivision:
    """The r-th subdivision of an image: every point is replaced by the r^n
    scaled lattice points flooring into it.

    Scaled points are kept exact as integer numerators over the common
    denominator r; the numerators form a digital image in their own right, so
    all single-valued machinery applies to them directly.
    """

    __slots__ = ("base", "r", "image")

    def __init__(self, base: DigitalImage, r: int):
        if r < 1:
            raise ValueError("subdivision level must be a positive integer")
        self.base = base
        self.r = r
        offsets = list(iter_product(range(r), repeat=base.dim))
        numerators = []
        for p in base:
            scaled = tuple(c * r for c in p)
            for off in offsets:
                numerators.append(tuple(s + o for s, o in zip(scaled, off)))
        self.image = DigitalImage(numerators)

    def floor(self, z: Point) -> Point:
        """E_r: the base point a scaled point floors into."""
        if z not in self.image:
            raise ValueError(f"{format_point(z)} is not a subdivision point")
        return tuple(c // self.r for c in z)

    def fiber(self, x: Point) -> tuple[Point, ...]:
        """Sorted preimage of a base point under the floor map."""
        if x not in self.base:
            raise ValueError(f"{format_point(x)} is not a base point")
        scaled = tuple(c * self.r for c in x)
        return tuple(
            sorted(
                tuple(s + o for s, o in zip(scaled, off))
                for off in iter_product(range(self.r), repeat=self.base.dim)
            )
        )

    def __repr__(self) -> str:
        return f"Subdivision(r={self.r}, |base|={len(self.base)}, |points|={len(self.image)})"


def subdivide(x: DigitalImage, r: int) -> Subdivision:
    return Subdivision(x, r)


def induced_multimap(f: DigitalMap, sub: Subdivision) -> MultiMap:
    """The multivalued map sending each base point to the values its fiber
    takes under f."""
    if f.domain != sub.image:
        raise ValueError("the map must be defined on the subdivision points")
    table = {x: frozenset(f.table[z] for z in sub.fiber(x)) for x in sub.base}
    return MultiMap(sub.base, f.codomain, table, _rebase_cu(f.dom_adj, sub.base.dim), f.cod_adj)


def _rebase_cu(adj: Adjacency, dim: int) -> Adjacency:
    spec = adj.spec
    if not isinstance(spec, Cu):
        raise ValueError("subdivision machinery handles c_u-family adjacencies only")
    return Adjacency(Cu(spec.u, dim))


def _require_cu(F: MultiMap) -> Cu:
    spec = F.dom_adj.spec
    if not isinstance(spec, Cu):
        raise ValueError(
            "subdivision continuity is defined for c_u-family domain adjacencies; "
            f"got {F.dom_adj!r}"
        )
    return spec


def find_generator(
    F: MultiMap,
    r: int,
    locally_one_to_one: bool = False,
    budget: Budget | int | None = None,
) -> DigitalMap | None:
    """A continuous map on the r-th subdivision of the domain inducing F, or
    None when there is none at this r.

    Cells are assigned in lexicographic numerator order with continuity and
    value-coverage pruning, so witnesses are deterministic.  With
    ``locally_one_to_one`` the map must also be injective on every closed
    neighborhood.
    """
    cu_spec = _require_cu(F)
    budget = as_budget(budget, f"generator search at r={r}")
    sub = subdivide(F.domain, r)
    sub_adj = Adjacency(Cu(cu_spec.u, sub.image.dim))
    cells = sub.image.sorted_points
    nbrs = neighbor_table(sub.image, sub_adj)
    cod = F.cod_adj

    base_of = {z: sub.floor(z) for z in cells}
    remaining = {x: len(sub.fiber(x)) for x in F.domain}
    uncovered = {x: set(F.table[x]) for x in F.domain}
    assignment: dict[Point, Point] = {}

    def extend(i: int) -> DigitalMap | None:
        if i == len(cells):
            return DigitalMap(sub.image, F.codomain, assignment, sub_adj, cod)
        z = cells[i]
        x = base_of[z]
        for v in sorted(F.table[x]):
            budget.charge()
            ok = True
            for q in nbrs[z]:
                if q in assignment and not eq_or_adjacent(cod, v, assignment[q]):
                    ok = False
                    break
            if ok and locally_one_to_one:
                seen = {v}
                for q in nbrs[z]:
                    if q in assignment:
                        if assignment[q] in seen:
                            ok = False
                            break
                        seen.add(assignment[q])
            if not ok:
                continue
            remaining[x] -= 1
            was_uncovered = v in uncovered[x]
            if was_uncovered:
                uncovered[x].discard(v)
            if len(uncovered[x]) <= remaining[x]:
                assignment[z] = v
                found = extend(i + 1)
                if found is not None:
                    return found
                del assignment[z]
            remaining[x] += 1
            if was_uncovered:
                uncovered[x].add(v)
        return None

    return extend(0)


def is_continuous_multimap(
    F: MultiMap,
    r_max: int,
    locally_one_to_one: bool = False,
    budget: Budget | int | None = None,
) -> tuple[int, DigitalMap] | None:
    """First (r, generator) with r <= r_max inducing F, else None.

    None only means no witness up to r_max; it is not a proof of
    discontinuity.
    """
    if r_max < 1:
        raise ValueError("r_max must be a positive integer")
    budget = as_budget(budget, "subdivision continuity search")
    for r in range(1, r_max + 1):
        f = find_generator(F, r, locally_one_to_one=locally_one_to_one, budget=budget)
        if f is not None:
            return r, f
    return None


def refine_generator(f: DigitalMap, sub: Subdivision, s: int) -> DigitalMap:
    """Turn a generator on the r-th subdivision into one on the (r*s)-th by
    composing with the scale-collapsing floor map; induces the same
    multivalued map."""
    if s < 1:
        raise ValueError("refinement factor must be a positive integer")
    if f.domain != sub.image:
        raise ValueError("the generator must live on the given subdivision")
    fine = subdivide(sub.base, sub.r * s)
    table = {z: f.table[tuple(c // s for c in z)] for z in fine.image}
    return DigitalMap(fine.image, f.codomain, table, _rebase_cu(f.dom_adj, fine.image.dim), f.cod_adj)


def is_multivalued_retraction(
    F: MultiMap, a: DigitalImage, r_max: int, budget: Budget | int | None = None
) -> bool:
    """F retracts its domain onto a: it fixes a pointwise (as singletons) and
    a subdivision generator exists with r <= r_max."""
    if not a.points <= F.domain.points:
        raise ValueError("the retract must be contained in the domain")
    if F.codomain != a:
        return False
    for y in a:
        if F.table[y] != frozenset((y,)):
            return False
    return is_continuous_multimap(F, r_max, budget=budget) is not None


# ---------------------------------------------------------------------------
# inverses of surjections and the shy-map equivalences


def inverse_multimap(f: DigitalMap) -> MultiMap:
    """f^{-1} as a multivalued map; f must be surjective."""
    if not f.is_surjective():
        missed = sorted(f.codomain.points - f.image_points())[0]
        raise ValueError(f"not surjective: {format_point(missed)} has empty preimage")
    fibers: dict[Point, set[Point]] = {y: set() for y in f.codomain}
    for x, y in f.table.items():
        fibers[y].add(x)
    return MultiMap(f.codomain, f.domain, fibers, f.cod_adj, f.dom_adj)


@dataclass(frozen=True)
class ShyReport:
    """Independent evaluation of the four equivalent descriptions of a shy
    map, for a continuous surjection."""

    shy: Verdict
    connected_preimages: Verdict
    inverse_connectivity_preserving: Verdict
    inverse_weak_with_connected_fibers: Verdict

    @property
    def answers(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.shy.ok,
            self.connected_preimages.ok,
            self.inverse_connectivity_preserving.ok,
            self.inverse_weak_with_connected_fibers.ok,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.answers)) == 1


def shy_equivalences(f: DigitalMap) -> ShyReport:
    """Evaluate, each by its own route: shyness; connectedness of preimages
    of all connected codomain subsets; connectivity preservation of the
    inverse; weak continuity of the inverse plus connected fibers."""
    from .maps import is_shy  # deferred to avoid an import cycle in tooling

    if not is_continuous(f):
        raise ValueError("the shy-map equivalences are stated for continuous surjections")
    inv = inverse_multimap(f)  # raises when not surjective

    shy = is_shy(f)

    connected_preimages = Verdict(True)
    for subset in connected_subsets(f.codomain, f.cod_adj):
        pre = [x for x in f.domain if f.table[x] in subset]
        if not is_connected_set(pre, f.dom_adj):
            connected_preimages = Verdict(False, tuple(sorted(subset)))
            break

    inverse_cp = is_connectivity_preserving(inv)

    weak = has_weak_continuity(inv)
    if weak:
        fibers_ok = Verdict(True)
        for y in f.codomain:
            if not is_connected_set(inv.table[y], f.dom_adj):
                fibers_ok = Verdict(False, y)
                break
        weak_with_fibers = fibers_ok
    else:
        weak_with_fibers = Verdict(False, weak.witness)

    return ShyReport(shy, connected_preimages, inverse_cp, weak_with_fibers)


# ---------------------------------------------------------------------------
# products


def product_multimap(Fs: Sequence[MultiMap], kind: str, u: int | None = None) -> MultiMap:
    """Pointwise product: the value set at (x_1,...,x_v) is the Cartesian
    product of the factor value sets, with product adjacencies per kind."""
    if len(Fs) < 2:
        raise ValueError("a product needs at least 2 factors")
    dom = product_image([F.domain for F in Fs])
    cod = product_image([F.codomain for F in Fs])
    dom_adj = product_adjacency(kind, [F.dom_adj for F in Fs], u)
    cod_adj = product_adjacency(kind, [F.cod_adj for F in Fs], u)
    dims = [F.domain.dim for F in Fs]
    table = {}
    for p in dom:
        blocks = split_point(p, dims)
        value_sets = [sorted(Fs[i].table[b]) for i, b in enumerate(blocks)]
        table[p] = frozenset(sum(combo, ()) for combo in iter_product(*value_sets))
    return MultiMap(dom, cod, table, dom_adj, cod_adj)


__all__ = [
    "MultiMap",
    "ShyReport",
    "Subdivision",
    "find_generator",
    "has_strong_continuity",
    "has_weak_continuity",
    "induced_multimap",
    "inverse_multimap",
    "is_connectivity_preserving",
    "is_continuous_multimap",
    "is_multivalued_retraction",
    "multimap_from_map",
    "product_multimap",
    "refine_generator",
    "shy_equivalences",
    "subdivide",
]
