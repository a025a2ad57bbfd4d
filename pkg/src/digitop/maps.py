"""Single-valued maps between digital images and their decision procedures:
continuity, local injectivity, isomorphism, products/projections/injections,
retractions, shyness, approximate fixed points and the AFPP.

Every decision returns a :class:`Verdict` whose witness names the offending
object on failure, so callers can log counterexamples.  The existence
searches (`exists_retraction`, `has_afpp`, ...) are deterministic
backtracking procedures with explicit budgets; running out of budget raises
:class:`digitop.search.SearchBudgetExceeded` and is never conflated with a
definite answer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Sequence

from .adjacency import Adjacency, product_adjacency, product_image, split_point
from .lattice import (
    DigitalImage,
    Point,
    adjacent_pairs,
    components,
    eq_or_adjacent,
    format_point,
    is_connected_set,
    neighbor_table,
    neighborhood,
)
from .search import Budget, as_budget


@dataclass(frozen=True)
class Verdict:
    """Boolean answer plus, on failure, a witness of what went wrong."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


class DigitalMap:
    """A total function table between digital images, with both adjacencies."""

    __slots__ = ("domain", "codomain", "table", "dom_adj", "cod_adj")

    def __init__(
        self,
        domain: DigitalImage,
        codomain: DigitalImage,
        table: Mapping[Point, Point],
        dom_adj: Adjacency,
        cod_adj: Adjacency,
    ):
        if dom_adj.dim != domain.dim:
            raise ValueError("domain adjacency arity does not match the domain")
        if cod_adj.dim != codomain.dim:
            raise ValueError("codomain adjacency arity does not match the codomain")
        tbl = {tuple(k): tuple(v) for k, v in table.items()}
        if set(tbl) != set(domain.points):
            missing = sorted(domain.points - set(tbl))
            extra = sorted(set(tbl) - domain.points)
            raise ValueError(
                f"table is not total on the domain (missing {missing[:3]}, extra {extra[:3]})"
            )
        bad = sorted(v for v in tbl.values() if v not in codomain.points)
        if bad:
            raise ValueError(f"value {format_point(bad[0])} is outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self.table = tbl
        self.dom_adj = dom_adj
        self.cod_adj = cod_adj

    def __call__(self, p: Point) -> Point:
        return self.table[p]

    def values_tuple(self) -> tuple[Point, ...]:
        """Values in domain-sorted order; canonical encoding of the map."""
        return tuple(self.table[p] for p in self.domain.sorted_points)

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.codomain.points)

    def image_points(self) -> frozenset[Point]:
        return frozenset(self.table.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DigitalMap)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.dom_adj == other.dom_adj
            and self.cod_adj == other.cod_adj
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self.dom_adj, self.cod_adj, self.values_tuple()))

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{format_point(p)}->{format_point(self.table[p])}" for p in self.domain.sorted_points[:4]
        )
        more = ", ..." if len(self.domain) > 4 else ""
        return f"DigitalMap{{{entries}{more}}}"


def identity_map(img: DigitalImage, adj: Adjacency) -> DigitalMap:
    return DigitalMap(img, img, {p: p for p in img}, adj, adj)


def constant_map(
    domain: DigitalImage, dom_adj: Adjacency, codomain: DigitalImage, cod_adj: Adjacency, value: Point
) -> DigitalMap:
    value = tuple(value)
    if value not in codomain:
        raise ValueError(f"constant value {format_point(value)} is outside the codomain")
    return DigitalMap(domain, codomain, {p: value for p in domain}, dom_adj, cod_adj)


def compose(g: DigitalMap, f: DigitalMap) -> DigitalMap:
    """g after f; f's codomain must be g's domain, with the same adjacency."""
    if f.codomain != g.domain or f.cod_adj != g.dom_adj:
        raise ValueError("compose needs matching middle image and adjacency")
    return DigitalMap(
        f.domain, g.codomain, {p: g.table[f.table[p]] for p in f.domain}, f.dom_adj, g.cod_adj
    )


def inverse_map(f: DigitalMap) -> DigitalMap:
    if not (f.is_injective() and f.is_surjective()):
        raise ValueError("only bijections have an inverse map")
    return DigitalMap(
        f.codomain, f.domain, {v: p for p, v in f.table.items()}, f.cod_adj, f.dom_adj
    )


# ---------------------------------------------------------------------------
# continuity and local injectivity


def is_continuous(f: DigitalMap) -> Verdict:
    """Adjacent points must land on equal or adjacent values; witness is the
    violating domain pair."""
    table = f.table
    cod = f.cod_adj
    for p, q in adjacent_pairs(f.domain, f.dom_adj):
        fp, fq = table[p], table[q]
        if fp != fq and not cod.adjacent(fp, fq):
            return Verdict(False, (p, q))
    return Verdict(True)


def is_locally_one_to_one(f: DigitalMap) -> Verdict:
    """Injectivity on every closed neighborhood of the domain."""
    nbrs = neighbor_table(f.domain, f.dom_adj)
    table = f.table
    for x in f.domain:
        seen: dict[Point, Point] = {table[x]: x}
        for y in nbrs[x]:
            v = table[y]
            if v in seen and seen[v] != y:
                return Verdict(False, (x, seen[v], y))
            seen[v] = y
    return Verdict(True)


# ---------------------------------------------------------------------------
# products, projections, injections, permutations


def product_map(fs: Sequence[DigitalMap], kind: str, u: int | None = None) -> DigitalMap:
    """Coordinatewise product of the maps, with the requested product
    adjacency (kind in NP/T/X/L) on both sides."""
    if len(fs) < 2:
        raise ValueError("a product map needs at least 2 factors")
    dom = product_image([f.domain for f in fs])
    cod = product_image([f.codomain for f in fs])
    dom_adj = product_adjacency(kind, [f.dom_adj for f in fs], u)
    cod_adj = product_adjacency(kind, [f.cod_adj for f in fs], u)
    dims = [f.domain.dim for f in fs]
    table = {}
    for p in dom:
        blocks = split_point(p, dims)
        table[p] = sum((fs[i].table[b] for i, b in enumerate(blocks)), ())
    return DigitalMap(dom, cod, table, dom_adj, cod_adj)


def projection(prod: DigitalImage, prod_adj: Adjacency, i: int) -> DigitalMap:
    """i-th coordinate projection out of an image carrying a product adjacency."""
    factor_adjs = prod_adj.factors
    if not factor_adjs:
        raise ValueError("projection needs a product adjacency")
    if not 0 <= i < len(factor_adjs):
        raise ValueError(f"factor index {i} out of range")
    dims = [a.dim for a in factor_adjs]
    table = {p: split_point(p, dims)[i] for p in prod}
    cod = DigitalImage(table.values())
    return DigitalMap(prod, cod, table, prod_adj, factor_adjs[i])


def injection(
    factors: Sequence[tuple[DigitalImage, Adjacency]],
    kind: str,
    i: int,
    basepoints: Sequence[Point | None],
    u: int | None = None,
) -> DigitalMap:
    """Embed factor i into the product at the slice through the basepoints.

    ``basepoints[j]`` must be a point of factor j for j != i (the i-th entry
    is ignored).
    """
    if not 0 <= i < len(factors):
        raise ValueError(f"factor index {i} out of range")
    if len(basepoints) != len(factors):
        raise ValueError("one basepoint slot per factor is required")
    base: list[Point | None] = []
    for j, ((img, _), bp) in enumerate(zip(factors, basepoints)):
        if j == i:
            base.append(None)
            continue
        if bp is None or tuple(bp) not in img:
            raise ValueError(f"basepoint for factor {j} must be a point of that factor")
        base.append(tuple(bp))
    prod = product_image([img for img, _ in factors])
    prod_adj = product_adjacency(kind, [adj for _, adj in factors], u)
    xi, adj_i = factors[i]
    table = {}
    for x in xi:
        blocks = [x if j == i else base[j] for j in range(len(factors))]
        table[x] = sum(blocks, ())
    return DigitalMap(xi, prod, table, adj_i, prod_adj)


def coordinate_permutation_map(
    factors: Sequence[tuple[DigitalImage, Adjacency]],
    sigma: Sequence[int],
    kind: str,
    u: int | None = None,
) -> DigitalMap:
    """The shuffle (x_1,...,x_v) -> (x_sigma(1),...,x_sigma(v)) between the
    product in given order and the product in sigma order."""
    v = len(factors)
    if sorted(sigma) != list(range(v)):
        raise ValueError("sigma must be a permutation of the factor indices")
    dom = product_image([img for img, _ in factors])
    dom_adj = product_adjacency(kind, [adj for _, adj in factors], u)
    cod = product_image([factors[sigma[j]][0] for j in range(v)])
    cod_adj = product_adjacency(kind, [factors[sigma[j]][1] for j in range(v)], u)
    dims = [img.dim for img, _ in factors]
    table = {}
    for p in dom:
        blocks = split_point(p, dims)
        table[p] = sum((blocks[sigma[j]] for j in range(v)), ())
    return DigitalMap(dom, cod, table, dom_adj, cod_adj)


# ---------------------------------------------------------------------------
# isomorphisms


def is_isomorphism(f: DigitalMap) -> Verdict:
    """Bijective, continuous, with continuous inverse.

    The inverse is checked directly on the inverted table.
    """
    if not f.is_injective():
        values: dict[Point, Point] = {}
        for p in f.domain:
            v = f.table[p]
            if v in values:
                return Verdict(False, ("not injective", values[v], p))
            values[v] = p
    if not f.is_surjective():
        missed = sorted(f.codomain.points - f.image_points())[0]
        return Verdict(False, ("not surjective", missed))
    forward = is_continuous(f)
    if not forward:
        return Verdict(False, ("not continuous", forward.witness))
    backward = is_continuous(inverse_map(f))
    if not backward:
        return Verdict(False, ("inverse not continuous", backward.witness))
    return Verdict(True)


def exists_isomorphism(
    x: DigitalImage, adj_x: Adjacency, y: DigitalImage, adj_y: Adjacency,
    budget: Budget | int | None = None,
) -> DigitalMap | None:
    """Search all bijections for an isomorphism; None when there is none.

    Backtracking in sorted point order, pruning pairs that already break
    continuity in either direction, so the witness is deterministic.
    """
    if len(x) != len(y):
        return None
    budget = as_budget(budget, "isomorphism search")
    xs = x.sorted_points
    ys = y.sorted_points
    x_nbrs = neighbor_table(x, adj_x)
    assignment: dict[Point, Point] = {}
    used: set[Point] = set()

    def extend(i: int) -> DigitalMap | None:
        if i == len(xs):
            f = DigitalMap(x, y, assignment, adj_x, adj_y)
            return f if is_isomorphism(f) else None
        p = xs[i]
        for v in ys:
            if v in used:
                continue
            budget.charge()
            ok = True
            for q in x_nbrs[p]:
                if q in assignment:
                    # adjacency must be preserved both ways for a bijection
                    if not adj_y.adjacent(v, assignment[q]):
                        ok = False
                        break
            if not ok:
                continue
            # non-neighbors must not become adjacent (inverse continuity)
            for q, w in assignment.items():
                if q not in x_nbrs[p] and adj_y.adjacent(v, w):
                    ok = False
                    break
            if not ok:
                continue
            assignment[p] = v
            used.add(v)
            found = extend(i + 1)
            if found is not None:
                return found
            del assignment[p]
            used.remove(v)
        return None

    return extend(0)


# ---------------------------------------------------------------------------
# retractions


def is_retraction(r: DigitalMap, subset: DigitalImage) -> Verdict:
    """Continuous self-restriction of the domain fixing the subset pointwise."""
    if not subset.points <= r.domain.points:
        raise ValueError("the subset must be contained in the domain")
    if r.codomain != subset:
        return Verdict(False, ("codomain is not the subset", None))
    for a in subset:
        if r.table[a] != a:
            return Verdict(False, ("moves a subset point", a))
    cont = is_continuous(r)
    if not cont:
        return Verdict(False, ("not continuous", cont.witness))
    return Verdict(True)


def exists_retraction(
    x: DigitalImage, a: DigitalImage, adj: Adjacency, budget: Budget | int | None = None
) -> DigitalMap | None:
    """Search for a retraction of x onto a, or None when none exists.

    Free points are assigned in order of breadth-first distance from the
    fixed set (ties lexicographic), candidate values in sorted order, and any
    partial assignment that already violates continuity is pruned; the
    returned witness is therefore deterministic.
    """
    if not a.points <= x.points:
        raise ValueError("the subset must be contained in the image")
    budget = as_budget(budget, "retraction search")
    nbrs = neighbor_table(x, adj)

    dist: dict[Point, int] = {p: 0 for p in a}
    queue = deque(a.sorted_points)
    while queue:
        p = queue.popleft()
        for q in nbrs[p]:
            if q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    free = sorted((p for p in x if p not in a.points), key=lambda p: (dist.get(p, len(x) + 1), p))

    assignment: dict[Point, Point] = {p: p for p in a}
    values = a.sorted_points

    def extend(i: int) -> DigitalMap | None:
        if i == len(free):
            return DigitalMap(x, a, assignment, adj, adj)
        p = free[i]
        for v in values:
            budget.charge()
            ok = True
            for q in nbrs[p]:
                if q in assignment and not eq_or_adjacent(adj, v, assignment[q]):
                    ok = False
                    break
            if not ok:
                continue
            assignment[p] = v
            found = extend(i + 1)
            if found is not None:
                return found
            del assignment[p]
        return None

    return extend(0)


# ---------------------------------------------------------------------------
# shy maps


def is_shy(f: DigitalMap) -> Verdict:
    """Continuous surjection with connected point preimages and connected
    preimages of adjacent codomain pairs."""
    cont = is_continuous(f)
    if not cont:
        return Verdict(False, ("not continuous", cont.witness))
    if not f.is_surjective():
        missed = sorted(f.codomain.points - f.image_points())[0]
        return Verdict(False, ("not surjective", missed))
    fibers: dict[Point, list[Point]] = {y: [] for y in f.codomain}
    for p in f.domain:
        fibers[f.table[p]].append(p)
    for y in f.codomain:
        if not is_connected_set(fibers[y], f.dom_adj):
            return Verdict(False, ("disconnected fiber", y))
    for y0, y1 in adjacent_pairs(f.codomain, f.cod_adj):
        if not is_connected_set(fibers[y0] + fibers[y1], f.dom_adj):
            return Verdict(False, ("disconnected pair preimage", (y0, y1)))
    return Verdict(True)


# ---------------------------------------------------------------------------
# approximate fixed points


def approximate_fixed_point(f: DigitalMap) -> Point | None:
    """Least point x with f(x) equal or adjacent to x, for a self-map."""
    if f.domain != f.codomain or f.dom_adj != f.cod_adj:
        raise ValueError("approximate fixed points are defined for self-maps")
    for x in f.domain:
        if eq_or_adjacent(f.dom_adj, x, f.table[x]):
            return x
    return None


def has_afpp(img: DigitalImage, adj: Adjacency, budget: Budget | int | None = None) -> Verdict:
    """Does every continuous self-map admit an approximate fixed point?

    Searches directly for a continuous self-map avoiding every closed
    neighborhood (any such map is a counterexample witness); candidate values
    per point exclude the closed neighborhood up front.  True means the
    search space was exhausted.
    """
    budget = as_budget(budget, "AFPP search")
    pts = img.sorted_points
    nbrs = neighbor_table(img, adj)
    candidates = {
        x: tuple(v for v in pts if v != x and v not in nbrs[x]) for x in pts
    }
    assignment: dict[Point, Point] = {}

    def extend(i: int) -> DigitalMap | None:
        if i == len(pts):
            return DigitalMap(img, img, assignment, adj, adj)
        x = pts[i]
        for v in candidates[x]:
            budget.charge()
            ok = True
            for q in nbrs[x]:
                if q in assignment and not eq_or_adjacent(adj, v, assignment[q]):
                    ok = False
                    break
            if not ok:
                continue
            assignment[x] = v
            found = extend(i + 1)
            if found is not None:
                return found
            del assignment[x]
        return None

    witness = extend(0)
    if witness is None:
        return Verdict(True)
    return Verdict(False, witness)


# ---------------------------------------------------------------------------
# map enumeration (shared by homotopy search and the theorem checks)


def all_maps(
    x: DigitalImage, dom_adj: Adjacency, y: DigitalImage, cod_adj: Adjacency
) -> Iterator[DigitalMap]:
    """Every map x -> y, in lexicographic order of value tuples."""
    pts = x.sorted_points
    values = y.sorted_points

    def extend(i: int, acc: dict[Point, Point]) -> Iterator[DigitalMap]:
        if i == len(pts):
            yield DigitalMap(x, y, dict(acc), dom_adj, cod_adj)
            return
        for v in values:
            acc[pts[i]] = v
            yield from extend(i + 1, acc)
        del acc[pts[i]]

    yield from extend(0, {})


def continuous_maps(
    x: DigitalImage,
    dom_adj: Adjacency,
    y: DigitalImage,
    cod_adj: Adjacency,
    candidates: Callable[[Point], Sequence[Point]] | None = None,
    budget: Budget | int | None = None,
) -> Iterator[DigitalMap]:
    """Continuous maps x -> y in lexicographic order, by pruned backtracking.

    ``candidates`` can restrict the allowed values per point (e.g. to pin a
    basepoint); it must yield sorted values.
    """
    budget = as_budget(budget, "continuous map enumeration")
    pts = x.sorted_points
    nbrs = neighbor_table(x, dom_adj)
    if candidates is None:
        fixed = y.sorted_points
        candidates = lambda _: fixed  # noqa: E731 - tiny local default
    assignment: dict[Point, Point] = {}

    def extend(i: int) -> Iterator[DigitalMap]:
        if i == len(pts):
            yield DigitalMap(x, y, dict(assignment), dom_adj, cod_adj)
            return
        p = pts[i]
        for v in candidates(p):
            budget.charge()
            ok = True
            for q in nbrs[p]:
                if q in assignment and not eq_or_adjacent(cod_adj, v, assignment[q]):
                    ok = False
                    break
            if not ok:
                continue
            assignment[p] = v
            yield from extend(i + 1)
            del assignment[p]

    yield from extend(0)


__all__ = [
    "DigitalMap",
    "Verdict",
    "all_maps",
    "approximate_fixed_point",
    "compose",
    "constant_map",
    "continuous_maps",
    "coordinate_permutation_map",
    "exists_isomorphism",
    "exists_retraction",
    "has_afpp",
    "identity_map",
    "injection",
    "inverse_map",
    "is_continuous",
    "is_isomorphism",
    "is_locally_one_to_one",
    "is_retraction",
    "is_shy",
    "product_map",
    "projection",
]
