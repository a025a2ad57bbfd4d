"""Digital homotopies: witness tables, homotopy decision, homotopy equivalence.

A homotopy of length m between maps f, g : X -> Y is a table
F : X x {0..m} -> Y whose time slices F_t are continuous maps and whose
per-point tracks F_x step through equal-or-adjacent values, with F_0 = f and
F_m = g.  Central reduction: such tables are exactly the walks of length m in
the graph whose vertices are the continuous maps X -> Y and whose edges join
maps that are pointwise equal-or-adjacent.  Each vertex on a walk is a
continuous slice and each edge supplies the track condition, and conversely
the slices of any valid table form such a walk.  Homotopy is therefore
decided exactly by breadth-first search in that graph, generating neighbor
maps lazily from the frontier, and the witness returned is a shortest one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .adjacency import Adjacency, product_adjacency, product_image, split_point
from .lattice import DigitalImage, Point, adjacent_pairs, eq_or_adjacent, neighbor_table
from .maps import DigitalMap, Verdict, compose, identity_map, is_continuous, product_map
from .search import Budget, as_budget


class HomotopyWitness:
    """A table on X x {0..m} certifying a homotopy between f and g.

    m = 0 is accepted and means f = g (a single-slice table).
    """

    __slots__ = ("f", "g", "m", "table")

    def __init__(self, f: DigitalMap, g: DigitalMap, m: int, table: Mapping[tuple[Point, int], Point]):
        if m < 0:
            raise ValueError("homotopy length must be nonnegative")
        _require_compatible(f, g)
        expect = {(p, t) for p in f.domain.points for t in range(m + 1)}
        tbl = {(tuple(p), int(t)): tuple(v) for (p, t), v in table.items()}
        if set(tbl) != expect:
            raise ValueError("witness table is not total on domain x {0..m}")
        self.f = f
        self.g = g
        self.m = m
        self.table = tbl

    def slice(self, t: int) -> DigitalMap:
        """The time-t slice as a map X -> Y."""
        return DigitalMap(
            self.f.domain,
            self.f.codomain,
            {p: self.table[(p, t)] for p in self.f.domain},
            self.f.dom_adj,
            self.f.cod_adj,
        )

    def __repr__(self) -> str:
        return f"HomotopyWitness(m={self.m}, |X|={len(self.f.domain)})"


def _require_compatible(f: DigitalMap, g: DigitalMap) -> None:
    if (
        f.domain != g.domain
        or f.codomain != g.codomain
        or f.dom_adj != g.dom_adj
        or f.cod_adj != g.cod_adj
    ):
        raise ValueError("maps must share domain, codomain and adjacencies")


def is_homotopy(w: HomotopyWitness) -> Verdict:
    """Check the three homotopy conditions; the witness of failure names the
    failing boundary point, track step (x, t) or slice pair (x, x', t)."""
    f, g, m, table = w.f, w.g, w.m, w.table
    for p in f.domain:
        if table[(p, 0)] != f.table[p]:
            return Verdict(False, ("boundary", p, 0))
        if table[(p, m)] != g.table[p]:
            return Verdict(False, ("boundary", p, m))
    cod = f.cod_adj
    for p in f.domain:
        for t in range(m):
            if not eq_or_adjacent(cod, table[(p, t)], table[(p, t + 1)]):
                return Verdict(False, ("track", p, t))
    pairs = adjacent_pairs(f.domain, f.dom_adj)
    for t in range(m + 1):
        for p, q in pairs:
            if not eq_or_adjacent(cod, table[(p, t)], table[(q, t)]):
                return Verdict(False, ("slice", p, q, t))
    return Verdict(True)


def holds_fixed(w: HomotopyWitness, x0: Point) -> bool:
    """True when the witness keeps x0 at its initial value for every t."""
    x0 = tuple(x0)
    return all(w.table[(x0, t)] == w.table[(x0, 0)] for t in range(w.m + 1))


# ---------------------------------------------------------------------------
# homotopy decision by search in the map graph


def _neighbor_maps(
    values: tuple[Point, ...],
    pts: tuple[Point, ...],
    nbr_idx: tuple[tuple[int, ...], ...],
    options: dict[Point, tuple[Point, ...]],
    cod_adj: Adjacency,
    budget: Budget,
    pin: tuple[int, Point] | None = None,
):
    """Continuous maps pointwise equal-or-adjacent to ``values``, in
    lexicographic order of value tuples; pruned backtracking.  ``pin`` fixes
    one position to one value (the pointed case)."""
    n = len(pts)
    acc: list[Point] = []

    def extend(i: int):
        if i == n:
            budget.charge()
            yield tuple(acc)
            return
        here = options[values[i]]
        if pin is not None and pin[0] == i:
            here = (pin[1],)
        for v in here:
            ok = True
            for j in nbr_idx[i]:
                if j < i and not eq_or_adjacent(cod_adj, v, acc[j]):
                    ok = False
                    break
            if not ok:
                continue
            acc.append(v)
            yield from extend(i + 1)
            acc.pop()

    yield from extend(0)


def are_homotopic(
    f: DigitalMap,
    g: DigitalMap,
    pointed_at: Point | None = None,
    budget: Budget | int | None = None,
) -> HomotopyWitness | None:
    """Shortest homotopy between f and g, or None if there is none.

    Both maps must be continuous.  The pointed variant restricts the search
    to maps sending the basepoint to f's value there.  The budget counts
    generated map-graph vertices.
    """
    _require_compatible(f, g)
    for name, h in (("f", f), ("g", g)):
        if not is_continuous(h):
            raise ValueError(f"{name} is not continuous; homotopy is defined for continuous maps")
    budget = as_budget(budget, "homotopy search")
    x, y = f.domain, f.codomain
    pts = x.sorted_points
    index = {p: i for i, p in enumerate(pts)}
    nbrs = neighbor_table(x, f.dom_adj)
    nbr_idx = tuple(tuple(index[q] for q in nbrs[p]) for p in pts)
    cod_nbrs = neighbor_table(y, f.cod_adj)
    options = {v: tuple(sorted((v,) + cod_nbrs[v])) for v in y.sorted_points}

    start = f.values_tuple()
    goal = g.values_tuple()
    pin = None
    if pointed_at is not None:
        pointed_at = tuple(pointed_at)
        if pointed_at not in x:
            raise ValueError("basepoint must be a point of the domain")
        if f.table[pointed_at] != g.table[pointed_at]:
            raise ValueError("a pointed homotopy needs f and g to agree at the basepoint")
        pin = (index[pointed_at], f.table[pointed_at])

    def expand(values: tuple[Point, ...]):
        yield from _neighbor_maps(values, pts, nbr_idx, options, f.cod_adj, budget, pin)

    if start == goal:
        return HomotopyWitness(f, g, 0, {(p, 0): f.table[p] for p in x})

    parent: dict[tuple[Point, ...], tuple[Point, ...]] = {start: start}
    queue = deque([start])
    found = False
    while queue and not found:
        current = queue.popleft()
        for nxt in expand(current):
            if nxt in parent:
                continue
            parent[nxt] = current
            if nxt == goal:
                found = True
                break
            queue.append(nxt)
    if not found:
        return None
    chain = [goal]
    while chain[-1] != start:
        chain.append(parent[chain[-1]])
    chain.reverse()
    table = {(p, t): vals[index[p]] for t, vals in enumerate(chain) for p in pts}
    return HomotopyWitness(f, g, len(chain) - 1, table)


# ---------------------------------------------------------------------------
# homotopy equivalence


@dataclass(frozen=True)
class HomotopyEquivalence:
    """Certificate that two images have the same homotopy type."""

    there: DigitalMap          # X -> Y
    back: DigitalMap           # Y -> X
    on_x: HomotopyWitness      # back o there ~ identity on X
    on_y: HomotopyWitness      # there o back ~ identity on Y


def homotopy_equivalent(
    x: DigitalImage,
    adj_x: Adjacency,
    y: DigitalImage,
    adj_y: Adjacency,
    pointed: tuple[Point, Point] | None = None,
    budget: Budget | int | None = None,
) -> HomotopyEquivalence | None:
    """Search continuous maps both ways whose round trips are homotopic to
    the identities; the pointed variant holds the basepoints fixed.

    Exhaustive over continuous map pairs (in lexicographic order), so None is
    a definite answer within the budget.
    """
    from .maps import continuous_maps  # local import to keep module load light

    budget = as_budget(budget, "homotopy equivalence search")
    id_x = identity_map(x, adj_x)
    id_y = identity_map(y, adj_y)
    x0 = y0 = None
    if pointed is not None:
        x0, y0 = tuple(pointed[0]), tuple(pointed[1])
        if x0 not in x or y0 not in y:
            raise ValueError("basepoints must belong to their images")

    for there in continuous_maps(x, adj_x, y, adj_y, budget=budget):
        if x0 is not None and there.table[x0] != y0:
            continue
        for back in continuous_maps(y, adj_y, x, adj_x, budget=budget):
            if y0 is not None and back.table[y0] != x0:
                continue
            w_x = are_homotopic(compose(back, there), id_x, pointed_at=x0, budget=budget)
            if w_x is None:
                continue
            w_y = are_homotopic(compose(there, back), id_y, pointed_at=y0, budget=budget)
            if w_y is None:
                continue
            return HomotopyEquivalence(there, back, w_x, w_y)
    return None


# ---------------------------------------------------------------------------
# explicit constructions


def staged_product_homotopy(witnesses: Sequence[HomotopyWitness]) -> HomotopyWitness:
    """Product homotopy under the Cartesian product adjacency, executing the
    factor homotopies one coordinate at a time.

    Stage j runs factor j's homotopy while earlier factors already show their
    final maps and later factors still show their initial maps.
    """
    if len(witnesses) < 2:
        raise ValueError("need at least 2 factor homotopies")
    fs = [w.f for w in witnesses]
    gs = [w.g for w in witnesses]
    f = product_map(fs, "X")
    g = product_map(gs, "X")
    dims = [w.f.domain.dim for w in witnesses]
    offsets = [0]
    for w in witnesses:
        offsets.append(offsets[-1] + w.m)
    total = offsets[-1]

    table: dict[tuple[Point, int], Point] = {}
    for p in f.domain:
        blocks = split_point(p, dims)
        for t in range(total + 1):
            out = []
            for j, w in enumerate(witnesses):
                local = min(max(t - offsets[j], 0), w.m)
                out.append(w.table[(blocks[j], local)])
            table[(p, t)] = sum(out, ())
    return HomotopyWitness(f, g, total, table)


def neighbor_shift(img: DigitalImage, adj: Adjacency, budget: Budget | int | None = None) -> DigitalMap | None:
    """A continuous self-map sending every point to a strict neighbor, or
    None when the image admits none (e.g. when some point is isolated)."""
    budget = as_budget(budget, "neighbor shift search")
    pts = img.sorted_points
    nbrs = neighbor_table(img, adj)
    assignment: dict[Point, Point] = {}

    def extend(i: int) -> DigitalMap | None:
        if i == len(pts):
            return DigitalMap(img, img, assignment, adj, adj)
        p = pts[i]
        for v in nbrs[p]:
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


def lex_collapse_homotopy(
    factors: Sequence[tuple[DigitalImage, Adjacency]],
    basepoints: Sequence[Point],
) -> HomotopyWitness:
    """Two-move homotopy from the identity of a lexicographic product onto
    the slice through factor k, the first factor with more than one point.

    Move 1 shifts coordinate k to a neighbor while snapping every later
    coordinate to its basepoint (legal in one lexicographic step because
    trailing coordinates are unconstrained); move 2 shifts coordinate k back.
    Requires factor k to admit a continuous neighbor shift, which holds for
    every connected factor used here.
    """
    if len(factors) < 2:
        raise ValueError("need at least 2 factors")
    k = next((i for i, (img, _) in enumerate(factors) if len(img) > 1), None)
    if k is None:
        raise ValueError("all factors are singletons; the product is a point")
    base = [tuple(b) for b in basepoints]
    for j, (img, _) in enumerate(factors):
        if base[j] not in img:
            raise ValueError(f"basepoint for factor {j} must be a point of that factor")
    img_k, adj_k = factors[k]
    shift = neighbor_shift(img_k, adj_k)
    if shift is None:
        raise ValueError("factor k admits no continuous neighbor shift")

    prod = product_image([img for img, _ in factors])
    prod_adj = product_adjacency("L", [adj for _, adj in factors])
    dims = [img.dim for img, _ in factors]
    identity = identity_map(prod, prod_adj)
    table: dict[tuple[Point, int], Point] = {}
    target = {}
    for p in prod:
        blocks = split_point(p, dims)
        snapped = [base[j] if j > k else blocks[j] for j in range(len(factors))]
        shifted = list(snapped)
        shifted[k] = shift.table[blocks[k]]
        table[(p, 0)] = p
        table[(p, 1)] = sum(shifted, ())
        table[(p, 2)] = sum(snapped, ())
        target[p] = table[(p, 2)]
    g = DigitalMap(prod, prod, target, prod_adj, prod_adj)
    return HomotopyWitness(identity, g, 2, table)


__all__ = [
    "HomotopyEquivalence",
    "HomotopyWitness",
    "are_homotopic",
    "holds_fixed",
    "homotopy_equivalent",
    "is_homotopy",
    "lex_collapse_homotopy",
    "neighbor_shift",
    "staged_product_homotopy",
]
