"""The theorem-check registry: one executable check per traced claim.

Fixture checks replay exact worked objects; exhaustive checks quantify over
canonical instance pools; randomized checks draw deterministically from the
seeded generator they are handed.  A check returns (instances_tested,
witness) where a non-None witness is a serialized counterexample and means
the check failed - a build-breaking event, since either the implementation
or the claim transcription is wrong.

Two shared sweep drivers do the heavy quantification for the single-valued
and multivalued product/factor matrices.  They evaluate products through a
fast pairwise path and continuously cross-check a sample of their verdicts
against the public map construction API, so a drift between the two routes
surfaces as a check failure.
"""

from __future__ import annotations

import random
from itertools import permutations, product as iter_product

from ..adjacency import (
    Adjacency,
    bind,
    cu,
    dominates,
    product_adjacency,
    product_image,
    split_point,
)
from ..homotopy import (
    HomotopyWitness,
    are_homotopic,
    holds_fixed,
    homotopy_equivalent,
    is_homotopy,
    lex_collapse_homotopy,
    staged_product_homotopy,
)
from ..lattice import (
    DigitalImage,
    adjacent_pairs,
    box,
    components,
    connected_subsets,
    format_point,
    interval,
    is_connected,
    is_connected_set,
    neighborhood,
    sets_adjacent,
)
from ..maps import (
    DigitalMap,
    all_maps,
    approximate_fixed_point,
    compose,
    constant_map,
    continuous_maps,
    coordinate_permutation_map,
    exists_isomorphism,
    exists_retraction,
    has_afpp,
    identity_map,
    injection,
    inverse_map,
    is_continuous,
    is_isomorphism,
    is_locally_one_to_one,
    is_retraction,
    is_shy,
    product_map,
    projection,
)
from ..multivalued import (
    MultiMap,
    find_generator,
    has_strong_continuity,
    has_weak_continuity,
    induced_multimap,
    inverse_multimap,
    is_connectivity_preserving,
    is_continuous_multimap,
    is_multivalued_retraction,
    multimap_from_map,
    product_multimap,
    refine_generator,
    shy_equivalences,
    subdivide,
)
from .generators import (
    all_multimap_tables,
    canonical_images_1d,
    has_adjacent_pair,
    msc8,
    msc8_cycle,
    pool_1d,
    pool_2d,
    pool_mixed,
    random_continuous_map,
    random_map,
)

C1 = cu(1, 1)
KINDS = ("NP", "T", "X", "L")


def _fmt_img(img: DigitalImage, adj: Adjacency) -> str:
    pts = ",".join(format_point(p) for p in img)
    return f"{{{pts}}} under {adj!r}"


def _fmt_map(f: DigitalMap) -> str:
    return ";".join(f"{format_point(p)}->{format_point(f.table[p])}" for p in f.domain)


def _fmt_multi(F: MultiMap) -> str:
    return ";".join(
        f"{format_point(p)}->{{{','.join(format_point(v) for v in sorted(F.table[p]))}}}"
        for p in F.domain
    )


def _prod_adj(kind: str, adjs) -> Adjacency:
    return product_adjacency(kind, adjs, 2 if kind == "NP" else None)


# ===========================================================================
# driver 1: single-valued product/factor sweep
# ===========================================================================

SV_ASSERTIONS = (
    "np_iff",        # NP_v product continuity iff factor continuity
    "np_iso",        # NP_u iso forces factor isos; NP_v product of isos is iso
    "t_factor",      # T product continuity forces factor continuity
    "t_loc11_prod",  # continuous loc-1-1 factors give continuous loc-1-1 T product
    "t_iso_iff",     # T iso iff factor isos
    "cart_iff",      # X product continuity iff factor continuity
    "cart_iso_iff",  # X iso iff factor isos
    "lex_thm",       # L factor continuity both directions with local injectivity
    "lex_iso_iff",   # L iso iff factor isos
)


def _rel_checker(kind: str, adj_set: set, eq=lambda a, b: a == b):
    """Equal-or-kind-adjacent test on coordinate pairs of a 2-factor product."""

    def rel(y1, y2, z1, z2) -> bool:
        e1, e2 = y1 == z1, y2 == z2
        if e1 and e2:
            return True
        a1 = (y1, z1) in adj_set
        a2 = (y2, z2) in adj_set
        if kind == "T":
            return a1 and a2
        if kind == "X":
            return (a1 and e2) or (e1 and a2)
        if kind == "NP":
            return (a1 or e1) and (a2 or e2) and (a1 or a2)
        return a1 or (e1 and a2)  # L

    return rel


def _adj_pair_set(img: DigitalImage, adj: Adjacency) -> set:
    out = set()
    for p, q in adjacent_pairs(img, adj):
        out.add((p, q))
        out.add((q, p))
    return out


def _product_dom_pairs(X: DigitalImage, kx: Adjacency):
    """Per kind, the adjacent pairs of X x X as index 4-tuples into X."""
    prod = product_image([X, X])
    idx = {p: i for i, p in enumerate(X.sorted_points)}
    d = X.dim
    out = {}
    for kind in KINDS:
        pairs = []
        for p, q in adjacent_pairs(prod, _prod_adj(kind, [kx, kx])):
            pairs.append((idx[p[:d]], idx[p[d:]], idx[q[:d]], idx[q[d:]]))
        out[kind] = tuple(pairs)
    return out


def product_factor_sweep(pool, assertions, budget=None, rng=None, mixed_trials=0,
                         cross_every=53):
    """Same-pair exhaustive sweep: for every ordered image pair in the pool
    and every ordered pair of maps between them, check the requested
    product/factor claims for two-factor products.

    Returns (instances, failures) with at most one witness per assertion.
    """
    failures: dict[str, str | None] = {a: None for a in assertions}
    instances = 0
    tick = 0

    for X, kx in pool:
        xs = X.sorted_points
        x_has_adj = has_adjacent_pair(X, kx)
        dom_pairs = _product_dom_pairs(X, kx)
        for Y, ky in pool:
            y_has_adj = has_adjacent_pair(Y, ky)
            adj_y = _adj_pair_set(Y, ky)
            adj_x = _adj_pair_set(X, kx)
            rels = {kind: _rel_checker(kind, adj_y) for kind in KINDS}
            inv_rels = {kind: _rel_checker(kind, adj_x) for kind in KINDS}
            cod_pairs = None  # built lazily for iso assertions

            entries = []
            for f in all_maps(X, kx, Y, ky):
                cont = bool(is_continuous(f))
                loc11 = bool(is_locally_one_to_one(f))
                bij = f.is_injective() and f.is_surjective()
                iso = bool(is_isomorphism(f)) if bij else False
                inv = {v: p for p, v in f.table.items()} if bij else None
                entries.append((f.values_tuple(), f, cont, loc11, iso, inv))

            need_iso = any(a in assertions for a in ("np_iso", "t_iso_iff", "cart_iso_iff", "lex_iso_iff"))
            if need_iso:
                prod_cod = product_image([Y, Y])
                dcy = Y.dim
                cod_pairs = {}
                for kind in KINDS:
                    pairs = []
                    for p, q in adjacent_pairs(prod_cod, _prod_adj(kind, [ky, ky])):
                        pairs.append((p[:dcy], p[dcy:], q[:dcy], q[dcy:]))
                    cod_pairs[kind] = tuple(pairs)

            for v1, f1, c1, l1, i1, inv1 in entries:
                for v2, f2, c2, l2, i2, inv2 in entries:
                    instances += 1
                    tick += 1
                    if budget is not None:
                        budget.charge()

                    cont_cache: dict[str, bool] = {}

                    def prod_cont(kind: str) -> bool:
                        got = cont_cache.get(kind)
                        if got is None:
                            rel = rels[kind]
                            got = all(
                                rel(v1[ia], v2[ib], v1[ic], v2[id_])
                                for ia, ib, ic, id_ in dom_pairs[kind]
                            )
                            cont_cache[kind] = got
                        return got

                    def prod_iso(kind: str) -> bool:
                        if inv1 is None or inv2 is None:
                            return False
                        if not prod_cont(kind):
                            return False
                        rel = inv_rels[kind]
                        return all(
                            rel(inv1[ya], inv2[yb], inv1[yc], inv2[yd])
                            for ya, yb, yc, yd in cod_pairs[kind]
                        )

                    def fail(assertion: str, detail: str) -> None:
                        if failures[assertion] is None:
                            failures[assertion] = (
                                f"X={_fmt_img(X, kx)} Y={_fmt_img(Y, ky)} "
                                f"f1={_fmt_map(f1)} f2={_fmt_map(f2)}: {detail}"
                            )

                    if tick % cross_every == 0:
                        # route the same verdict through the public API
                        kind = KINDS[(tick // cross_every) % 4]
                        prod = product_map([f1, f2], kind, 2 if kind == "NP" else None)
                        if bool(is_continuous(prod)) != prod_cont(kind):
                            fail(
                                next(iter(assertions)),
                                f"cross-check mismatch on {kind} product continuity",
                            )

                    if "np_iff" in assertions and prod_cont("NP") != (c1 and c2):
                        fail("np_iff", f"NP product continuity {prod_cont('NP')} vs factors {(c1, c2)}")
                    if "cart_iff" in assertions and prod_cont("X") != (c1 and c2):
                        fail("cart_iff", f"X product continuity {prod_cont('X')} vs factors {(c1, c2)}")
                    if "t_factor" in assertions and x_has_adj and prod_cont("T") and not (c1 and c2):
                        fail("t_factor", "T product continuous but a factor is not")
                    if "lex_thm" in assertions:
                        if prod_cont("L") and not (c1 and c2):
                            fail("lex_thm", "L product continuous but a factor is not")
                        if c1 and l1 and c2 and l2 and not prod_cont("L"):
                            fail("lex_thm", "continuous locally one-to-one factors, L product discontinuous")
                        if prod_cont("L") and c1 and c2:
                            prod = product_map([f1, f2], "L")
                            if is_locally_one_to_one(prod) and not (l1 and l2):
                                fail("lex_thm", "L product locally one-to-one but a factor is not")
                    if "t_loc11_prod" in assertions and c1 and l1 and c2 and l2:
                        prod = product_map([f1, f2], "T")
                        if not (is_continuous(prod) and is_locally_one_to_one(prod)):
                            fail("t_loc11_prod", "T product not continuous locally one-to-one")
                    if "np_iso" in assertions:
                        for u in (1, 2):
                            kind = "X" if u == 1 else "NP"
                            if prod_iso(kind) and not (i1 and i2):
                                fail("np_iso", f"NP{u} product iso but a factor is not")
                        if i1 and i2 and not prod_iso("NP"):
                            fail("np_iso", "factor isos but NP_v product is not an iso")
                    if "t_iso_iff" in assertions:
                        if x_has_adj and y_has_adj and prod_iso("T") and not (i1 and i2):
                            fail("t_iso_iff", "T product iso but a factor is not")
                        if i1 and i2 and not prod_iso("T"):
                            fail("t_iso_iff", "factor isos but T product is not an iso")
                    if "cart_iso_iff" in assertions and prod_iso("X") != (i1 and i2):
                        fail("cart_iso_iff", f"X product iso {prod_iso('X')} vs factors {(i1, i2)}")
                    if "lex_iso_iff" in assertions and prod_iso("L") != (i1 and i2):
                        fail("lex_iso_iff", f"L product iso {prod_iso('L')} vs factors {(i1, i2)}")

    if mixed_trials and rng is not None:
        instances += _mixed_product_factor_trials(rng, mixed_trials, assertions, failures)
    return instances, failures


def _mixed_product_factor_trials(rng: random.Random, trials: int, assertions, failures) -> int:
    """Randomized pass with independently drawn factors (mixed dimensions),
    evaluated entirely through the public API."""
    pool = pool_mixed(2)
    done = 0
    for _ in range(trials):
        X1, k1 = rng.choice(pool)
        Y1, l1 = rng.choice(pool)
        X2, k2 = rng.choice(pool)
        Y2, l2 = rng.choice(pool)
        f1 = random_map(rng, X1, k1, Y1, l1)
        f2 = random_map(rng, X2, k2, Y2, l2)
        done += 1
        flags = (bool(is_continuous(f1)), bool(is_continuous(f2)))
        guards = (has_adjacent_pair(X1, k1), has_adjacent_pair(X2, k2))
        for kind, assertion in (("NP", "np_iff"), ("X", "cart_iff"), ("T", "t_factor"), ("L", "lex_thm")):
            if assertion not in assertions:
                continue
            prod = product_map([f1, f2], kind, 2 if kind == "NP" else None)
            pc = bool(is_continuous(prod))
            bad = None
            if assertion in ("np_iff", "cart_iff") and pc != all(flags):
                bad = f"{kind} product continuity {pc} vs factors {flags}"
            elif assertion == "t_factor" and all(guards) and pc and not all(flags):
                bad = "T product continuous but a factor is not"
            elif assertion == "lex_thm" and pc and not all(flags):
                bad = "L product continuous but a factor is not"
            if bad and failures[assertion] is None:
                failures[assertion] = (
                    f"mixed factors f1={_fmt_map(f1)} f2={_fmt_map(f2)}: {bad}"
                )
    return done


# ===========================================================================
# driver 2: multivalued product/factor matrix sweep
# ===========================================================================

MM_ASSERTIONS = (
    "weak_np_iff", "weak_t_factor", "weak_cart_iff",
    "strong_np_iff", "strong_t_factor", "strong_cart_iff",
    "cp_np_iff", "cp_t_factor", "cp_cart_iff",
)

_conn_cache: dict = {}


def _product_set_connected(s1, s2, ky: Adjacency, kind: str) -> bool:
    key = (s1, s2, ky, kind)
    got = _conn_cache.get(key)
    if got is None:
        pts = [a + b for a in sorted(s1) for b in sorted(s2)]
        got = is_connected_set(pts, _prod_adj(kind, [ky, ky]))
        _conn_cache[key] = got
    return got


def _set_relations(va, vc, adj_set) -> tuple[bool, bool]:
    """(sets intersect, sets strictly adjacent) for two value sets."""
    eq = bool(va & vc)
    adj = any((u, v) in adj_set for u in va for v in vc)
    return eq, adj


def _cover_classes(va, vc, adj_set) -> int:
    """4-bit mask of (covered-by-equality, covered-by-adjacency) classes
    present among elements of va measured against vc."""
    mask = 0
    for u in va:
        e = u in vc
        d = any((u, v) in adj_set for v in vc)
        mask |= 1 << (2 * e + d)
    return mask


def _weak_ok(kind, e1, a1, e2, a2) -> bool:
    if e1 and e2:
        return True
    if kind == "T":
        return a1 and a2
    if kind == "X":
        return (a1 and e2) or (e1 and a2)
    if kind == "NP":
        return (a1 or e1) and (a2 or e2) and (a1 or a2)
    return a1 or (e1 and a2)  # L


def _strong_ok(kind, mask1, mask2) -> bool:
    # class bits: bit index 2*e + d; a product element (u1,u2) is covered when
    # (e1 and e2) or kind-specific adjacency of the (d1, d2) flags holds.
    for b1 in range(4):
        if not mask1 >> b1 & 1:
            continue
        e1, d1 = bool(b1 & 2), bool(b1 & 1)
        for b2 in range(4):
            if not mask2 >> b2 & 1:
                continue
            e2, d2 = bool(b2 & 2), bool(b2 & 1)
            if not _weak_ok_elem(_KIND_CURRENT, e1, d1, e2, d2):
                return False
    return True


_KIND_CURRENT = "T"


def _weak_ok_elem(kind, e1, a1, e2, a2) -> bool:
    # same shape as _weak_ok but for a single element's coverage flags
    return _weak_ok(kind, e1, a1, e2, a2)


def multimap_matrix_sweep(pool, assertions, budget=None, cross_every=211):
    """Same-pair exhaustive sweep over all multivalued tables for every
    ordered image pair in the pool; two-factor products per kind."""
    global _KIND_CURRENT
    failures: dict[str, str | None] = {a: None for a in assertions}
    instances = 0
    tick = 0

    for X, kx in pool:
        xs = X.sorted_points
        x_has_adj = has_adjacent_pair(X, kx)
        dom_pairs = _product_dom_pairs(X, kx)
        for Y, ky in pool:
            adj_y = _adj_pair_set(Y, ky)
            entries = []
            for table in all_multimap_tables(X, Y):
                F = MultiMap(X, Y, table, kx, ky)
                vsets = tuple(F.table[p] for p in xs)
                rel = {}
                cover = {}
                for i, a in enumerate(xs):
                    for j, c in enumerate(xs):
                        rel[(i, j)] = _set_relations(vsets[i], vsets[j], adj_y)
                        cover[(i, j)] = _cover_classes(vsets[i], vsets[j], adj_y)
                conn = tuple(is_connected_set(v, ky) for v in vsets)
                entries.append(
                    (
                        F,
                        vsets,
                        rel,
                        cover,
                        conn,
                        bool(has_weak_continuity(F)),
                        bool(has_strong_continuity(F)),
                        bool(is_connectivity_preserving(F)),
                    )
                )

            for F1, vs1, rel1, cov1, conn1, w1, s1, p1 in entries:
                for F2, vs2, rel2, cov2, conn2, w2, s2, p2 in entries:
                    instances += 1
                    tick += 1
                    if budget is not None:
                        budget.charge()

                    def prod_weak(kind: str) -> bool:
                        for ia, ib, ic, id_ in dom_pairs[kind]:
                            e1, a1 = rel1[(ia, ic)]
                            e2, a2 = rel2[(ib, id_)]
                            if not _weak_ok(kind, e1, a1, e2, a2):
                                return False
                        return True

                    def prod_strong(kind: str) -> bool:
                        global _KIND_CURRENT
                        _KIND_CURRENT = kind
                        for ia, ib, ic, id_ in dom_pairs[kind]:
                            if not _strong_ok(kind, cov1[(ia, ic)], cov2[(ib, id_)]):
                                return False
                            if not _strong_ok(kind, cov1[(ic, ia)], cov2[(id_, ib)]):
                                return False
                        return True

                    def prod_cp(kind: str) -> bool:
                        if not prod_weak(kind):
                            return False
                        for i in range(len(xs)):
                            for j in range(len(xs)):
                                if not _product_set_connected(vs1[i], vs2[j], ky, kind):
                                    return False
                        return True

                    def fail(assertion: str, detail: str) -> None:
                        if failures[assertion] is None:
                            failures[assertion] = (
                                f"X={_fmt_img(X, kx)} Y={_fmt_img(Y, ky)} "
                                f"F1={_fmt_multi(F1)} F2={_fmt_multi(F2)}: {detail}"
                            )

                    if tick % cross_every == 0:
                        kind = KINDS[(tick // cross_every) % 4]
                        prod = product_multimap([F1, F2], kind, 2 if kind == "NP" else None)
                        ok = (
                            bool(has_weak_continuity(prod)) == prod_weak(kind)
                            and bool(has_strong_continuity(prod)) == prod_strong(kind)
                            and bool(is_connectivity_preserving(prod)) == prod_cp(kind)
                        )
                        if not ok:
                            fail(next(iter(assertions)), f"cross-check mismatch on {kind} product")

                    if "weak_np_iff" in assertions and prod_weak("NP") != (w1 and w2):
                        fail("weak_np_iff", f"NP weak {prod_weak('NP')} vs factors {(w1, w2)}")
                    if "weak_cart_iff" in assertions and prod_weak("X") != (w1 and w2):
                        fail("weak_cart_iff", f"X weak {prod_weak('X')} vs factors {(w1, w2)}")
                    if "weak_t_factor" in assertions and x_has_adj and prod_weak("T") and not (w1 and w2):
                        fail("weak_t_factor", "T product weakly continuous, factor is not")
                    if "strong_np_iff" in assertions and prod_strong("NP") != (s1 and s2):
                        fail("strong_np_iff", f"NP strong {prod_strong('NP')} vs factors {(s1, s2)}")
                    if "strong_cart_iff" in assertions and prod_strong("X") != (s1 and s2):
                        fail("strong_cart_iff", f"X strong {prod_strong('X')} vs factors {(s1, s2)}")
                    if "strong_t_factor" in assertions and x_has_adj and prod_strong("T") and not (s1 and s2):
                        fail("strong_t_factor", "T product strongly continuous, factor is not")
                    if "cp_np_iff" in assertions and prod_cp("NP") != (p1 and p2):
                        fail("cp_np_iff", f"NP cp {prod_cp('NP')} vs factors {(p1, p2)}")
                    if "cp_cart_iff" in assertions and prod_cp("X") != (p1 and p2):
                        fail("cp_cart_iff", f"X cp {prod_cp('X')} vs factors {(p1, p2)}")
                    if "cp_t_factor" in assertions and x_has_adj and prod_cp("T") and not (p1 and p2):
                        fail("cp_t_factor", "T product connectivity preserving, factor is not")

    return instances, failures


# ===========================================================================
# cached homotopy classes (eager map-graph components)
# ===========================================================================

_classes_cache: dict = {}


def homotopy_classes(X, kx, Y, ky, pin=None):
    """Free (or basepoint-pinned) homotopy classes of continuous maps X -> Y,
    computed eagerly: enumerate every continuous map, join pointwise
    equal-or-adjacent pairs, return {value-tuple: class id}.

    This is the exhaustive oracle the lazy search is measured against.
    """
    key = (X, kx, Y, ky, pin)
    got = _classes_cache.get(key)
    if got is not None:
        return got
    verts = []
    for f in continuous_maps(X, kx, Y, ky):
        vt = f.values_tuple()
        if pin is not None and vt[pin[0]] != pin[1]:
            continue
        verts.append(vt)
    n = len(verts)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    m = len(X.sorted_points)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = verts[i], verts[j]
            if all(a[t] == b[t] or ky.adjacent(a[t], b[t]) for t in range(m)):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    labels = {v: find(i) for i, v in enumerate(verts)}
    _classes_cache[key] = labels
    return labels


def homotopic_via_classes(f: DigitalMap, g: DigitalMap, pointed_at=None) -> bool:
    pin = None
    if pointed_at is not None:
        pos = f.domain.sorted_points.index(tuple(pointed_at))
        pin = (pos, f.table[tuple(pointed_at)])
    labels = homotopy_classes(f.domain, f.dom_adj, f.codomain, f.cod_adj, pin)
    vf, vg = f.values_tuple(), g.values_tuple()
    if vf not in labels or vg not in labels:
        return False
    return labels[vf] == labels[vg]


def equivalent_via_classes(X, kx, Y, ky, pointed=None) -> bool:
    """Homotopy equivalence decided through the eager class tables."""
    xs, ys = X.sorted_points, Y.sorted_points
    xi = {p: i for i, p in enumerate(xs)}
    yi = {p: i for i, p in enumerate(ys)}
    pin_x = pin_y = None
    x0 = y0 = None
    if pointed is not None:
        x0, y0 = tuple(pointed[0]), tuple(pointed[1])
        pin_x = (xi[x0], x0)
        pin_y = (yi[y0], y0)
    id_x = tuple(xs)
    id_y = tuple(ys)
    lab_x = homotopy_classes(X, kx, X, kx, pin_x)
    lab_y = homotopy_classes(Y, ky, Y, ky, pin_y)
    for f in continuous_maps(X, kx, Y, ky):
        if x0 is not None and f.table[x0] != y0:
            continue
        vf = f.values_tuple()
        for g in continuous_maps(Y, ky, X, kx):
            if y0 is not None and g.table[y0] != x0:
                continue
            vg = g.values_tuple()
            gf = tuple(vg[yi[vf[xi[p]]]] for p in xs)
            if gf not in lab_x or lab_x[gf] != lab_x[id_x]:
                continue
            fg = tuple(vf[xi[vg[yi[q]]]] for q in ys)
            if fg in lab_y and lab_y[fg] == lab_y[id_y]:
                return True
    return False


# ===========================================================================
# section 2 checks
# ===========================================================================


def chk_prop_2_6(ctx):
    count = 0
    windows = [box([(0, 2), (0, 2)]), box([(0, 1)] * 3)]
    splits = {2: (1, 1), 3: (1, 2)}
    for w in windows:
        split = splits[w.dim]
        np1 = bind(f"NP1(c1@{split[0]},c1@{split[1]})", w.dim)
        cart = bind(f"X(c1@{split[0]},c1@{split[1]})", w.dim)
        pts = w.sorted_points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                count += 1
                if np1.adjacent(pts[i], pts[j]) != cart.adjacent(pts[i], pts[j]):
                    return count, f"NP1 vs X disagree on {pts[i]},{pts[j]}"
    return count, None


def chk_thm_2_10(ctx):
    count = 0
    for X, kx in pool_1d(3):
        for Y, ky in pool_1d(3):
            for f in all_maps(X, kx, Y, ky):
                count += 1
                by_adj = bool(is_continuous(f))
                by_sets = all(
                    is_connected_set([f.table[p] for p in sub], ky)
                    for sub in connected_subsets(X, kx)
                )
                if by_adj != by_sets:
                    return count, f"{_fmt_map(f)}: adjacency {by_adj} vs subsets {by_sets}"
    return count, None


def chk_thm_2_11(ctx):
    pool = pool_mixed(3)
    count = 0
    for _ in range(80):
        X, kx = ctx.rng.choice(pool)
        Y, ky = ctx.rng.choice(pool)
        Z, kz = ctx.rng.choice(pool)
        f = random_continuous_map(ctx.rng, X, kx, Y, ky)
        g = random_continuous_map(ctx.rng, Y, ky, Z, kz)
        count += 1
        if not is_continuous(compose(g, f)):
            return count, f"f={_fmt_map(f)} g={_fmt_map(g)}"
    return count, None


def chk_ex_2_12(ctx):
    count = 0
    for X, kx in pool_mixed(3):
        for Y, ky in pool_mixed(2):
            for y0 in Y:
                count += 1
                if not is_continuous(constant_map(X, kx, Y, ky, y0)):
                    return count, f"constant {format_point(y0)} on {_fmt_img(X, kx)}"
    return count, None


def chk_ex_2_13(ctx):
    count = 0
    for X, kx in pool_mixed(3):
        count += 1
        if not is_continuous(identity_map(X, kx)):
            return count, _fmt_img(X, kx)
    return count, None


def chk_prop_2_16(ctx):
    count = 0
    cases = [
        (interval(0, 1), C1, interval(0, 1), C1),
        (interval(0, 1), C1, DigitalImage([(0,), (2,)]), C1),
        (interval(0, 2), C1, interval(0, 1), C1),
        (interval(0, 1), C1, interval(0, 2), C1),
    ]
    for X, kx, Y, ky in cases:
        labels = homotopy_classes(X, kx, Y, ky)
        maps = {v: DigitalMap(X, Y, dict(zip(X.sorted_points, v)), kx, ky) for v in labels}
        verts = sorted(labels)
        for i, va in enumerate(verts):
            w = are_homotopic(maps[va], maps[va])
            if w is None or w.m != 0:
                return count, f"reflexivity fails at {va}"
            for vb in verts[i + 1 :]:
                count += 1
                ab = are_homotopic(maps[va], maps[vb]) is not None
                ba = are_homotopic(maps[vb], maps[va]) is not None
                same = labels[va] == labels[vb]
                if not (ab == ba == same):
                    return count, f"{va} vs {vb}: search {ab}/{ba}, classes {same}"
    return count, None


def chk_thm_2_19(ctx):
    count = 0
    for X, kx in pool_1d(2):
        for Y, ky in pool_1d(3):
            subs = connected_subsets(X, kx)
            for table in all_multimap_tables(X, Y):
                F = MultiMap(X, Y, table, kx, ky)
                count += 1
                two_bullets = bool(is_connectivity_preserving(F))
                by_def = all(is_connected_set(F.of_set(sub), ky) for sub in subs)
                if two_bullets != by_def:
                    return count, f"{_fmt_multi(F)}: bullets {two_bullets} vs definition {by_def}"
    return count, None


def _random_induced(ctx, X, Y, r):
    sub = subdivide(X, r)
    sub_adj = cu(1, X.dim)
    f = random_continuous_map(ctx.rng, sub.image, sub_adj, Y, C1)
    return induced_multimap(f, sub)


def chk_thm_2_23(ctx):
    count = 0
    for _ in range(60):
        X, _ = ctx.rng.choice(pool_1d(2))
        Y, _ = ctx.rng.choice(pool_1d(3))
        F = _random_induced(ctx, X, Y, ctx.rng.randint(1, 3))
        count += 1
        for x in F.domain:
            if not is_connected_set(F.table[x], F.cod_adj):
                return count, f"{_fmt_multi(F)}: point image at {format_point(x)}"
        for sub in connected_subsets(F.domain, F.dom_adj):
            if not is_connected_set(F.of_set(sub), F.cod_adj):
                return count, f"{_fmt_multi(F)}: image of {sorted(sub)}"
    return count, None


def chk_thm_2_24(ctx):
    count = 0
    for _ in range(60):
        X, _ = ctx.rng.choice(pool_1d(2))
        Y, _ = ctx.rng.choice(pool_1d(3))
        F = _random_induced(ctx, X, Y, ctx.rng.randint(1, 3))
        count += 1
        if not is_connectivity_preserving(F):
            return count, _fmt_multi(F)
    return count, None


def chk_prop_2_27(ctx):
    count = 0
    for X, kx in pool_1d(2):
        for Y, ky in pool_1d(3):
            for table in all_multimap_tables(X, Y):
                F = MultiMap(X, Y, table, kx, ky)
                count += 1
                cp = bool(is_connectivity_preserving(F))
                split = bool(has_weak_continuity(F)) and all(
                    is_connected_set(F.table[x], ky) for x in X
                )
                if cp != split:
                    return count, f"{_fmt_multi(F)}: cp {cp} vs weak+connected {split}"
    return count, None


def _fixture_2_28():
    return MultiMap(interval(0, 1), interval(0, 2), {(0,): [(0,), (2,)], (1,): [(1,)]}, C1, C1)


def _fixture_2_29():
    return MultiMap(interval(0, 1), interval(0, 2), {(0,): [(0,), (1,)], (1,): [(2,)]}, C1, C1)


def chk_ex_2_28(ctx):
    F = _fixture_2_28()
    if not has_weak_continuity(F):
        return 1, "weak continuity expected"
    if not has_strong_continuity(F):
        return 1, "strong continuity expected"
    v = is_connectivity_preserving(F)
    if v or v.witness != ("point image disconnected", (0,)):
        return 1, f"expected disconnected point image at (0,), got {v}"
    return 1, None


def chk_ex_2_29(ctx):
    F = _fixture_2_29()
    if not has_weak_continuity(F):
        return 1, "weak continuity expected"
    if has_strong_continuity(F):
        return 1, "strong continuity not expected"
    found = is_continuous_multimap(F, 3)
    if found is None or found[0] != 2:
        return 1, f"expected a generator at level 2, got {found}"
    if induced_multimap(found[1], subdivide(F.domain, found[0])) != F:
        return 1, "generator does not induce the fixture"
    return 1, None


def chk_prop_2_30(ctx):
    count = 0
    for X, kx in pool_1d(2):
        for Y, ky in pool_1d(3):
            for table in all_multimap_tables(X, Y):
                F = MultiMap(X, Y, table, kx, ky)
                count += 1
                if (
                    has_strong_continuity(F)
                    and all(is_connected_set(F.table[x], ky) for x in X)
                    and not is_connectivity_preserving(F)
                ):
                    return count, _fmt_multi(F)
    return count, None


def chk_thm_2_32(ctx):
    count = 0
    for X, kx in pool_1d(4, span=3):
        for Y, ky in pool_1d(4, span=3):
            if len(Y) > len(X):
                continue
            for f in all_maps(X, kx, Y, ky):
                if not (f.is_surjective() and is_continuous(f)):
                    continue
                count += 1
                report = shy_equivalences(f)
                if not report.agree:
                    return count, f"{_fmt_map(f)}: answers {report.answers}"
    return count, None


# ===========================================================================
# section 3 checks
# ===========================================================================


def chk_ex_3_2(ctx):
    count = 0
    w2 = box([(0, 2), (0, 2)])
    w3 = box([(0, 1)] * 3)
    for dom, a, b in [
        (w2, "c1", "c2"),
        (w3, "c1@3", "c2@3"),
        (w3, "c2@3", "c3@3"),
        (w2, "NP1(c1,c1)", "NP2(c1,c1)"),
        (w2, "T(c1,c1)", "NP2(c1,c1)"),
        (w2, "NP1(c1,c1)", "L(c1,c1)"),
        (w2, "NP2(c1,c1)", "L(c1,c1)"),
        (w2, "T(c1,c1)", "L(c1,c1)"),
        (w2, "X(c1,c1)", "L(c1,c1)"),
        (w3, "T(c1@1,c1@2)", "NP2(c1@1,c1@2)"),
        (w3, "X(c1@1,c2@2)", "L(c1@1,c2@2)"),
    ]:
        count += 1
        if not dominates(a, b, dom):
            return count, f"{a} should dominate {b}"
    return count, None


def chk_ex_3_3(ctx):
    t22 = bind("T(c2@3,c2@3)", 6)
    t13 = bind("T(c1@3,c3@3)", 6)
    p, q, r = (0, 0, 0, 0, 0, 0), (1, 1, 0, 1, 1, 0), (1, 0, 0, 1, 1, 1)
    if not (t22.adjacent(p, q) and not t13.adjacent(p, q)):
        return 1, "pair p,q misclassified"
    if not (t13.adjacent(p, r) and not t22.adjacent(p, r)):
        return 1, "pair p,r misclassified"
    w = box([(0, 1)] * 6)
    if dominates(t22, t13, w) or dominates(t13, t22, w):
        return 1, "domination should fail both ways on the unit window"
    return 1, None


_SPEC_POOL_2D = ("c1", "c2", "NP1(c1,c1)", "NP2(c1,c1)", "T(c1,c1)", "X(c1,c1)", "L(c1,c1)")


def chk_prop_3_4(ctx):
    w = box([(0, 2), (0, 2)])
    oracles = [bind(s, 2) for s in _SPEC_POOL_2D]
    count = 0
    for a in oracles:
        for b in oracles:
            for c in oracles:
                count += 1
                if dominates(a, b, w) and dominates(b, c, w) and not dominates(a, c, w):
                    return count, f"{a!r} >= {b!r} >= {c!r}"
    return count, None


def chk_prop_3_5(ctx):
    w = box([(0, 1), (0, 1)])
    oracles = [bind(s, 2) for s in _SPEC_POOL_2D]
    count = 0
    for _ in range(60):
        k = ctx.rng.choice(oracles)
        l1 = ctx.rng.choice(oracles)
        l2 = ctx.rng.choice(oracles)
        f = random_map(ctx.rng, w, k, w, l1)
        count += 1
        if is_continuous(f) and dominates(l1, l2, w):
            if not is_continuous(DigitalMap(w, w, f.table, k, l2)):
                return count, f"codomain side: {l1!r}->{l2!r} {_fmt_map(f)}"
        if is_continuous(f) and dominates(l2, k, w):
            if not is_continuous(DigitalMap(w, w, f.table, l2, l1)):
                return count, f"domain side: {l2!r} above {k!r} {_fmt_map(f)}"
    return count, None


def _sv_sweep_check(assertion, mixed=40):
    def run(ctx):
        instances, failures = product_factor_sweep(
            pool_1d(3), (assertion,), budget=ctx.budget, rng=ctx.rng, mixed_trials=mixed
        )
        return instances, failures[assertion]

    return run


def chk_thm_3_9(ctx):
    count = 0
    pool = pool_1d(3) + pool_2d(2)
    for (X1, k1) in pool:
        for (X2, k2) in pool[:4]:
            prod = product_image([X1, X2])
            for u in (1, 2):
                adj = product_adjacency("NP", [k1, k2], u)
                for i in (0, 1):
                    count += 1
                    if not is_continuous(projection(prod, adj, i)):
                        return count, f"NP{u} projection {i} on {_fmt_img(prod, adj)}"
    return count, None


def chk_thm_3_10(ctx):
    count = 0
    pool = pool_1d(3) + pool_2d(2)
    for (X1, k1) in pool:
        for (X2, k2) in pool[:4]:
            prod = product_image([X1, X2])
            adj = product_adjacency("X", [k1, k2])
            for i in (0, 1):
                count += 1
                if not is_continuous(projection(prod, adj, i)):
                    return count, f"projection {i} on {_fmt_img(prod, adj)}"
    return count, None


def chk_thm_3_16(ctx):
    count = 0
    pool = pool_1d(3) + pool_2d(2)
    for (X1, k1) in pool:
        for (X2, k2) in pool[:4]:
            prod = product_image([X1, X2])
            adj = product_adjacency("T", [k1, k2])
            for i in (0, 1):
                count += 1
                if not is_continuous(projection(prod, adj, i)):
                    return count, f"projection {i} on {_fmt_img(prod, adj)}"
    return count, None


def chk_prop_3_11(ctx):
    count = 0
    pool = pool_1d(2)
    for (X1, k1) in pool:
        for (X2, k2) in pool:
            prod = product_image([X1, X2])
            t = product_adjacency("T", [k1, k2])
            if adjacent_pairs(prod, t):
                count += 1
                if not (has_adjacent_pair(X1, k1) and has_adjacent_pair(X2, k2)):
                    return count, f"T pair without factor pairs in {_fmt_img(prod, t)}"
            for (Y1, l1) in pool:
                for (Y2, l2) in pool:
                    cod = product_image([Y1, Y2])
                    tc = product_adjacency("T", [l1, l2])
                    for f in all_maps(prod, t, cod, tc):
                        if not is_continuous(f):
                            continue
                        nonconstant = any(
                            len({f.table[p] for p in comp}) > 1 for comp in components(prod, t)
                        )
                        count += 1
                        if nonconstant and not (
                            has_adjacent_pair(Y1, l1) and has_adjacent_pair(Y2, l2)
                        ):
                            return count, f"{_fmt_map(f)} nonconstant into factor without pairs"
    return count, None


def chk_ex_3_12(ctx):
    sq = interval(0, 1)
    f = identity_map(sq, C1)
    g = constant_map(sq, C1, sq, C1, (0,))
    prod = product_map([f, g], "T")
    v = is_continuous(prod)
    if v or v.witness != ((0, 0), (1, 1)):
        return 1, f"expected witness ((0,0),(1,1)), got {v.witness}"
    return 1, None


def chk_prop_3_17(ctx):
    count = 0
    pool = pool_mixed(3)
    for (X, kx) in pool:
        if not has_adjacent_pair(X, kx):
            continue
        for (Y, ky) in pool[:5]:
            for y0 in Y:
                count += 1
                inj = injection([(X, kx), (Y, ky)], "T", 0, [None, y0])
                if is_continuous(inj):
                    return count, f"T injection continuous on {_fmt_img(X, kx)} at {format_point(y0)}"
    return count, None


def chk_prop_3_18(ctx):
    count = 0
    pool = pool_mixed(2)
    for (X, kx) in pool:
        for (Y, ky) in pool[:5]:
            for y0 in Y:
                for x0 in X:
                    for i, base in ((0, [None, y0]), (1, [x0, None])):
                        count += 1
                        inj = injection([(X, kx), (Y, ky)], "X", i, base)
                        if not is_continuous(inj):
                            return count, f"X injection {i} discontinuous on {_fmt_img(X, kx)}"
    return count, None


def chk_ex_3_20(ctx):
    x1, x2 = interval(0, 1), interval(0, 2)
    f = constant_map(x1, C1, x2, C1, (0,))
    g = identity_map(x2, C1)
    prod = product_map([f, g], "L")
    v = is_continuous(prod)
    if v or v.witness != ((0, 0), (1, 2)):
        return 1, f"expected witness ((0,0),(1,2)), got {v.witness}"
    return 1, None


def chk_ex_3_23(ctx):
    count = 0
    for v in (2, 3):
        w = box([(0, 2)] * v)
        adj = product_adjacency("L", [C1] * v)
        for i in range(1, v):
            count += 1
            verdict = is_continuous(projection(w, adj, i))
            if verdict:
                return count, f"projection {i} L-continuous on [0,2]^{v}"
        if v == 2:
            verdict = is_continuous(projection(w, adj, 1))
            if verdict.witness != ((0, 0), (1, 2)):
                return count, f"expected witness ((0,0),(1,2)), got {verdict.witness}"
    return count, None


def chk_thm_3_24(ctx):
    count = 0
    factors = [
        (interval(0, 1), C1),
        (DigitalImage([(0,), (2,)]), C1),
        (interval(0, 2), C1),
    ]
    for picks in permutations(range(3), 2):
        chosen = [factors[i] for i in picks]
        for sigma in permutations(range(2)):
            for kind, u in (("NP", 2), ("T", None), ("X", None)):
                count += 1
                shuffle = coordinate_permutation_map(chosen, list(sigma), kind, u)
                if not is_isomorphism(shuffle):
                    return count, f"{kind} shuffle {sigma} on factors {picks}"
    chosen = factors[:3]
    for sigma in permutations(range(3)):
        for kind, u in (("NP", 2), ("T", None), ("X", None)):
            count += 1
            shuffle = coordinate_permutation_map(chosen, list(sigma), kind, u)
            translated = [
                identity_map(img, adj) if i % 2 == 0 else _translation_iso(img, adj, 1)
                for i, (img, adj) in enumerate(chosen)
            ]
            prod = product_map(translated, kind, u)
            shifted_factors = [
                (m.codomain, m.cod_adj) for m in translated
            ]
            shuffle2 = coordinate_permutation_map(shifted_factors, list(sigma), kind, u)
            if not is_isomorphism(compose(shuffle2, prod)):
                return count, f"{kind} shuffled translation {sigma}"
    return count, None


def _translation_iso(img: DigitalImage, adj: Adjacency, offset: int) -> DigitalMap:
    moved = img.translate((offset,) * img.dim)
    return DigitalMap(img, moved, {p: tuple(c + offset for c in p) for p in img}, adj, adj)


def chk_prop_3_25(ctx):
    count = 0
    pool = pool_mixed(3)
    for (X, kx) in pool:
        for (Y, ky) in pool[:5]:
            prod = product_image([X, Y])
            adj = product_adjacency("L", [kx, ky])
            count += 1
            if not is_continuous(projection(prod, adj, 0)):
                return count, f"first projection on {_fmt_img(prod, adj)}"
    return count, None


def _pretzel_pair():
    x = product_image([DigitalImage([(0,), (1,)]), DigitalImage([(0,), (2,)])])
    y = product_image([DigitalImage([(0,), (2,)]), DigitalImage([(0,), (1,)])])
    l11 = bind("L(c1,c1)", 2)
    return x, y, l11


def chk_ex_3_26(ctx):
    x, y, l11 = _pretzel_pair()
    if not is_connected(x, l11):
        return 1, "{0,1}x{0,2} should be L-connected"
    if is_connected(y, l11):
        return 1, "{0,2}x{0,1} should be L-disconnected"
    if exists_isomorphism(x, l11, y, l11) is not None:
        return 1, "unexpected isomorphism"
    return 1, None


# ===========================================================================
# section 4 checks
# ===========================================================================


def _two_factor_pools():
    return pool_1d(3) + pool_2d(2)


def _connectivity_sweep(kind, u, relation, ctx):
    """relation(product_connected, factor_flags, factors) -> witness or None"""
    count = 0
    pool = _two_factor_pools()
    for (X1, k1) in pool:
        for (X2, k2) in pool:
            prod = product_image([X1, X2])
            adj = product_adjacency(kind, [k1, k2], u)
            count += 1
            pc = is_connected(prod, adj)
            flags = (is_connected(X1, k1), is_connected(X2, k2))
            bad = relation(pc, flags, ((X1, k1), (X2, k2)))
            if bad:
                return count, f"{_fmt_img(prod, adj)}: {bad}"
            if ctx.budget is not None:
                ctx.budget.charge()
    return count, None


def chk_thm_4_1(ctx):
    return _connectivity_sweep(
        "NP", 2, lambda pc, flags, _: None if pc == all(flags) else f"product {pc} factors {flags}", ctx
    )


def chk_thm_4_2(ctx):
    return _connectivity_sweep(
        "T", None, lambda pc, flags, _: None if (not pc or all(flags)) else "factors disconnected", ctx
    )


def chk_ex_4_3(ctx):
    t11 = bind("T(c1,c1)", 2)
    a = product_image([DigitalImage([(0,)]), interval(0, 1)])
    if is_connected(a, t11):
        return 1, "{0} x [0,1] should be T-disconnected"
    sq = product_image([interval(0, 1), interval(0, 1)])
    comps = components(sq, t11)
    if comps != (((0, 0), (1, 1)), ((0, 1), (1, 0))):
        return 1, f"unexpected T components {comps}"
    curve = msc8()
    prod = product_image([curve, interval(0, 1)])
    cart = bind("X(c2@2,c1@1)", 3)
    tens = bind("T(c2@2,c1@1)", 3)
    if not is_connected(prod, cart):
        return 1, "curve x edge should be X-connected"
    if is_connected(prod, tens):
        pass
    else:
        cyc = msc8_cycle()
        for i, p in enumerate(cyc):
            for t in (0, 1):
                want = {cyc[(i - 1) % 6] + (1 - t,), cyc[(i + 1) % 6] + (1 - t,)}
                got = neighborhood(tens, prod, p + (t,))
                if got != want:
                    return 1, f"T neighbors of {format_point(p + (t,))}: {sorted(got)}"
        return 1, None
    return 1, "curve x edge should be T-disconnected"


def chk_thm_4_4(ctx):
    return _connectivity_sweep(
        "X", None, lambda pc, flags, _: None if pc == all(flags) else f"product {pc} factors {flags}", ctx
    )


def chk_prop_4_5(ctx):
    def relation(pc, flags, factors):
        (x1, _), _ = factors
        if len(x1) > 1 and pc != flags[0]:
            return f"product {pc} first factor {flags[0]}"
        return None

    return _connectivity_sweep("L", None, relation, ctx)


def chk_thm_4_6(ctx):
    count = 0
    opts = [DigitalImage([(0,)]), interval(0, 1), DigitalImage([(0,), (2,)]), interval(0, 2)]
    for combo in iter_product(opts, repeat=3):
        k = next((i for i, img in enumerate(combo) if len(img) > 1), None)
        prod = product_image(list(combo))
        adj = product_adjacency("L", [C1] * 3)
        count += 1
        pc = is_connected(prod, adj)
        want = True if k is None else is_connected(combo[k], C1)
        if pc != want:
            return count, f"sizes {[len(i) for i in combo]}: product {pc} want {want}"
    return count, None


# ===========================================================================
# section 5 checks
# ===========================================================================


def chk_ex_5_1(ctx):
    sq = interval(0, 1)
    f = identity_map(sq, C1)
    g = constant_map(sq, C1, sq, C1, (0,))
    if are_homotopic(f, g) is None:
        return 1, "identity and constant should be homotopic on the interval"
    t11 = bind("T(c1,c1)", 2)
    prod = product_image([sq, sq])
    ff = identity_map(prod, t11)
    gg = constant_map(prod, t11, prod, t11, (0, 0))
    if are_homotopic(ff, gg) is not None:
        return 1, "identity and constant should not be T-homotopic on the square"
    return 1, None


def chk_ex_5_2(ctx):
    sq = product_image([interval(0, 1), interval(0, 1)])
    t11 = bind("T(c1,c1)", 2)
    pt = DigitalImage([(0, 0)])
    if homotopy_equivalent(sq, t11, pt, t11, budget=200000) is not None:
        return 1, "square under T should not be equivalent to a point"
    return 1, None


_53_IMAGES = None


def _thm_5_3_family():
    global _53_IMAGES
    if _53_IMAGES is None:
        _53_IMAGES = [
            (interval(0, 1), C1),
            (interval(0, 2), C1),
            (DigitalImage([(0,), (2,)]), C1),
        ]
    return _53_IMAGES


def thm_5_3_trial(rng) -> str | None:
    """One randomized two-factor trial of the X-product homotopy criterion."""
    fam = _thm_5_3_family()
    while True:
        (x1, k1), (x2, k2) = rng.choice(fam), rng.choice(fam)
        (y1, l1), (y2, l2) = rng.choice(fam), rng.choice(fam)
        if len(x1) * len(x2) <= 6 and len(y1) * len(y2) <= 6:
            break
    f1 = random_continuous_map(rng, x1, k1, y1, l1)
    g1 = random_continuous_map(rng, x1, k1, y1, l1)
    f2 = random_continuous_map(rng, x2, k2, y2, l2)
    g2 = random_continuous_map(rng, x2, k2, y2, l2)
    fac = homotopic_via_classes(f1, g1) and homotopic_via_classes(f2, g2)
    F = product_map([f1, f2], "X")
    G = product_map([g1, g2], "X")
    prod = homotopic_via_classes(F, G)
    if fac != prod:
        return f"free: factors {fac} product {prod}: f1={_fmt_map(f1)} g1={_fmt_map(g1)} f2={_fmt_map(f2)} g2={_fmt_map(g2)}"
    x0 = (rng.choice(x1.sorted_points), rng.choice(x2.sorted_points))
    if f1.table[x0[0]] == g1.table[x0[0]] and f2.table[x0[1]] == g2.table[x0[1]]:
        fac_p = homotopic_via_classes(f1, g1, x0[0]) and homotopic_via_classes(f2, g2, x0[1])
        prod_p = homotopic_via_classes(F, G, x0[0] + x0[1])
        if fac_p != prod_p:
            return f"pointed at {x0}: factors {fac_p} product {prod_p}"
    if fac:
        w1 = are_homotopic(f1, g1)
        w2 = are_homotopic(f2, g2)
        staged = staged_product_homotopy([w1, w2])
        if not is_homotopy(staged):
            return "staged product table is not a homotopy"
    return None


def chk_thm_5_3(ctx):
    count = 0
    for _ in range(60):
        count += 1
        bad = thm_5_3_trial(ctx.rng)
        if bad:
            return count, bad
    return count, None


def chk_cor_5_4(ctx):
    fam = [
        (DigitalImage([(0,)]), C1),
        (interval(0, 1), C1),
        (DigitalImage([(0,), (2,)]), C1),
    ]
    count = 0
    for (x1, k1) in fam:
        for (y1, l1) in fam:
            for (x2, k2) in fam:
                for (y2, l2) in fam:
                    count += 1
                    fac = equivalent_via_classes(x1, k1, y1, l1) and equivalent_via_classes(
                        x2, k2, y2, l2
                    )
                    prod = equivalent_via_classes(
                        product_image([x1, x2]),
                        product_adjacency("X", [k1, k2]),
                        product_image([y1, y2]),
                        product_adjacency("X", [l1, l2]),
                    )
                    if fac != prod:
                        return count, f"factors {fac} product {prod} on sizes {len(x1), len(x2), len(y1), len(y2)}"
    return count, None


def chk_thm_5_5(ctx):
    count = 0
    combos = [
        [(interval(0, 1), C1), (DigitalImage([(0,), (2,)]), C1)],
        [(interval(0, 1), C1), (interval(0, 2), C1)],
        [(DigitalImage([(0,)]), C1), (interval(0, 1), C1), (DigitalImage([(0,), (2,)]), C1)],
        [(interval(0, 2), C1), (interval(0, 1), C1)],
    ]
    for factors in combos:
        k = next(i for i, (img, _) in enumerate(factors) if len(img) > 1)
        img_k, adj_k = factors[k]
        if not is_connected(img_k, adj_k):
            continue
        count += 1
        basepoints = [img.sorted_points[0] for img, _ in factors]
        witness = lex_collapse_homotopy(factors, basepoints)
        if not is_homotopy(witness):
            return count, f"explicit two-move table invalid for sizes {[len(i) for i, _ in factors]}"
        prod = product_image([img for img, _ in factors])
        prod_adj = product_adjacency("L", [a for _, a in factors])
        x0 = sum(basepoints, ())
        ok = equivalent_via_classes(prod, prod_adj, img_k, adj_k, pointed=(x0, basepoints[k]))
        if not ok:
            return count, f"no pointed equivalence for sizes {[len(i) for i, _ in factors]}"
    return count, None


def chk_cor_5_6(ctx):
    fam = [
        (interval(0, 1), C1),
        (DigitalImage([(0,), (2,)]), C1),
        (interval(0, 2), C1),
    ]
    count = 0
    for (x, kx) in fam:
        for (y, ky) in fam:
            if len(x) <= 1 or len(y) <= 1:
                continue
            count += 1
            same = equivalent_via_classes(x, kx, y, ky)
            if same:
                continue
            xy = equivalent_via_classes(
                product_image([x, y]),
                product_adjacency("L", [kx, ky]),
                product_image([y, x]),
                product_adjacency("L", [ky, kx]),
            )
            if xy:
                return count, f"L products equivalent though factors differ ({len(x)},{len(y)})"
    return count, None


def chk_cor_5_7(ctx):
    singleton = (DigitalImage([(0,)]), C1)
    edge = (interval(0, 1), C1)
    long_edge = (interval(0, 2), C1)
    count = 0
    for lead_x, lead_y in [(edge, edge), (edge, long_edge)]:
        xs = [singleton, lead_x, (DigitalImage([(0,), (2,)]), C1)]
        ys = [lead_y, edge]
        jx = next(i for i, (img, _) in enumerate(xs) if len(img) > 1)
        jy = 0
        bx = [img.sorted_points[0] for img, _ in xs]
        by = [img.sorted_points[0] for img, _ in ys]
        count += 1
        lead_same = equivalent_via_classes(
            xs[jx][0], xs[jx][1], ys[jy][0], ys[jy][1],
            pointed=(bx[jx], by[jy]),
        )
        if not lead_same:
            continue
        got = equivalent_via_classes(
            product_image([i for i, _ in xs]),
            product_adjacency("L", [a for _, a in xs]),
            product_image([i for i, _ in ys]),
            product_adjacency("L", [a for _, a in ys]),
            pointed=(sum(bx, ()), sum(by, ())),
        )
        if not got:
            return count, "lead factors pointed-equivalent but L products are not"
    return count, None


# ===========================================================================
# section 6 checks
# ===========================================================================


def chk_def_6_1(ctx):
    x = interval(0, 2)
    r = exists_retraction(x, x, C1)
    if r is None or r.table != {p: p for p in x}:
        return 1, "retraction onto the whole image should be the identity"
    a = interval(0, 1)
    r = exists_retraction(x, a, C1)
    if r is None or not is_retraction(r, a):
        return 1, "interval should retract onto a subinterval"
    bad = DigitalMap(x, a, {(0,): (0,), (1,): (0,), (2,): (1,)}, C1, C1)
    if is_retraction(bad, a):
        return 1, "map moving a subset point accepted as retraction"
    return 1, None


def _retraction_family():
    out = []
    for img in canonical_images_1d(3):
        subs = connected_subsets(img, C1)
        for sub in subs:
            out.append((img, DigitalImage(sub)))
        out.append((img, img))
    seen = set()
    uniq = []
    for x, a in out:
        key = (x.points, a.points)
        if key not in seen:
            seen.add(key)
            uniq.append((x, a))
    return uniq


def _retract_iff_product(kind, u, ctx):
    fam = _retraction_family()
    count = 0
    for x1, a1 in fam:
        for x2, a2 in fam:
            count += 1
            if ctx.budget is not None:
                ctx.budget.charge()
            f1 = exists_retraction(x1, a1, C1) is not None
            f2 = exists_retraction(x2, a2, C1) is not None
            prod = exists_retraction(
                product_image([x1, x2]),
                product_image([a1, a2]),
                product_adjacency(kind, [C1, C1], u),
            ) is not None
            if prod != (f1 and f2):
                return count, (
                    f"X1={_fmt_img(x1, C1)} A1={_fmt_img(a1, C1)} "
                    f"X2={_fmt_img(x2, C1)} A2={_fmt_img(a2, C1)}: product {prod} factors {(f1, f2)}"
                )
    return count, None


def chk_thm_6_2(ctx):
    return _retract_iff_product("NP", 2, ctx)


def chk_ex_6_3(ctx):
    x = DigitalImage([(0, 0), (1, 0), (1, 1)])
    c2_2 = cu(2, 2)
    x_sub = DigitalImage([(0, 0), (1, 0)])
    if exists_retraction(x, x_sub, c2_2) is None:
        return 1, "corner image should retract onto its base pair"
    if exists_retraction(interval(0, 1), DigitalImage([(0,)]), C1) is None:
        return 1, "edge should retract onto a point"
    prod = product_image([x, interval(0, 1)])
    a = product_image([x_sub, DigitalImage([(0,)])])
    tens = bind("T(c2@2,c1@1)", 3)
    if exists_retraction(prod, a, tens) is not None:
        return 1, "T retraction should not exist"
    return 1, None


def chk_thm_6_4(ctx):
    return _retract_iff_product("X", None, ctx)


def chk_ex_6_5(ctx):
    x = product_image([interval(0, 1), interval(0, 5)])
    a = product_image([DigitalImage([(0,)]), interval(1, 4)])
    l11 = bind("L(c1,c1)", 2)
    if exists_retraction(interval(0, 1), DigitalImage([(0,)]), C1) is None:
        return 1, "edge should retract onto a point"
    if exists_retraction(interval(0, 5), interval(1, 4), C1) is None:
        return 1, "[0,5] should retract onto [1,4]"
    if exists_retraction(x, a, l11) is not None:
        return 1, "L retraction should not exist"
    return 1, None


# ===========================================================================
# section 7 checks
# ===========================================================================


def chk_def_7_1(ctx):
    edge = interval(0, 1)
    verdict = has_afpp(edge, C1)
    if not verdict:
        return 1, f"unexpected counterexample {verdict.witness}"
    count = sum(1 for f in all_maps(edge, C1, edge, C1) if is_continuous(f))
    if count != 4:
        return 1, f"expected 4 continuous self-maps, found {count}"
    return 4, None


def chk_thm_7_2(ctx):
    fam = [interval(0, 0), interval(0, 1), interval(0, 2)]
    count = 0
    for x1 in fam:
        for x2 in fam:
            for u in (1, 2):
                count += 1
                prod = product_image([x1, x2])
                adj = product_adjacency("NP", [C1, C1], u)
                if has_afpp(prod, adj):
                    for xi in (x1, x2):
                        if not has_afpp(xi, C1):
                            return count, f"NP{u} product has AFPP, factor {_fmt_img(xi, C1)} does not"
    return count, None


def _square_flip(horizontal: bool):
    sq = product_image([interval(0, 1), interval(0, 1)])
    table = {}
    for a, b in sq:
        table[(a, b)] = (1 - a, b) if horizontal else (1 - a, 1 - b)
    return sq, table


def chk_ex_7_3(ctx):
    sq, table = _square_flip(horizontal=True)
    t11 = bind("T(c1,c1)", 2)
    f = DigitalMap(sq, sq, table, t11, t11)
    if not is_continuous(f):
        return 1, "coordinate flip should be T-continuous"
    if approximate_fixed_point(f) is not None:
        return 1, "coordinate flip should have no approximate fixed point"
    verdict = has_afpp(sq, t11)
    if verdict:
        return 1, "square should lack the AFPP under T"
    w = verdict.witness
    if approximate_fixed_point(w) is not None or not is_continuous(w):
        return 1, "search witness is not a valid counterexample"
    return 1, None


def chk_ex_7_4(ctx):
    sq, table = _square_flip(horizontal=False)
    x11 = bind("X(c1,c1)", 2)
    f = DigitalMap(sq, sq, table, x11, x11)
    if not is_continuous(f):
        return 1, "double flip should be X-continuous"
    if approximate_fixed_point(f) is not None:
        return 1, "double flip should have no approximate fixed point"
    verdict = has_afpp(sq, x11)
    if verdict:
        return 1, "square should lack the AFPP under X"
    if verdict.witness != f:
        return 1, f"expected the double flip as least witness, got {_fmt_map(verdict.witness)}"
    return 1, None


def chk_thm_7_5(ctx):
    fam = [DigitalImage([(0,)]), interval(0, 1), DigitalImage([(0,), (2,)]), interval(0, 2)]
    count = 0
    for combo in iter_product(fam, repeat=2):
        count += 1
        prod = product_image(list(combo))
        adj = product_adjacency("L", [C1, C1])
        k = next(
            (i for i, img in enumerate(combo) if len(img) > 1 and is_connected(img, C1)), None
        )
        if k is None:
            continue
        if has_afpp(prod, adj) and not has_afpp(combo[k], C1):
            return count, f"L product has AFPP, factor {k} does not (sizes {[len(i) for i in combo]})"
    return count, None


# ===========================================================================
# section 8 checks
# ===========================================================================


def chk_prop_8_1(ctx):
    count = 0
    for X, kx in pool_1d(3):
        for Y, ky in pool_1d(3):
            for f in all_maps(X, kx, Y, ky):
                count += 1
                F = multimap_from_map(f)
                c = bool(is_continuous(f))
                if not (c == bool(has_weak_continuity(F)) == bool(has_strong_continuity(F))):
                    return count, _fmt_map(f)
    return count, None


def _mm_sweep_check(assertion):
    def run(ctx):
        instances, failures = multimap_matrix_sweep(
            pool_1d(2), (assertion,), budget=ctx.budget
        )
        return instances, failures[assertion]

    return run


def chk_ex_8_4(ctx):
    sq = interval(0, 1)
    F1 = multimap_from_map(identity_map(sq, C1))
    F2 = multimap_from_map(constant_map(sq, C1, sq, C1, (0,)))
    if not (has_weak_continuity(F1) and has_weak_continuity(F2)):
        return 1, "factors should be weakly continuous"
    prod = product_multimap([F1, F2], "T")
    if has_weak_continuity(prod):
        return 1, "T product should not be weakly continuous"
    return 1, None


def chk_ex_8_8(ctx):
    sq = interval(0, 1)
    F1 = MultiMap(sq, sq, {p: [(0,)] for p in sq}, C1, C1)
    F2 = multimap_from_map(identity_map(sq, C1))
    if not (has_strong_continuity(F1) and has_strong_continuity(F2)):
        return 1, "factors should be strongly continuous"
    prod = product_multimap([F1, F2], "T")
    if has_strong_continuity(prod):
        return 1, "T product should not be strongly continuous"
    return 1, None


def chk_ex_8_10(ctx):
    e = interval(0, 1)
    gap = DigitalImage([(0,), (2,)])
    F1 = MultiMap(e, e, {p: [(0,)] for p in e}, C1, C1)
    F2 = multimap_from_map(identity_map(gap, C1))
    for F in (F1, F2):
        if not (has_weak_continuity(F) and has_strong_continuity(F)):
            return 1, "factors should be weakly and strongly continuous"
    prod = product_multimap([F1, F2], "L")
    if has_weak_continuity(prod) or has_strong_continuity(prod):
        return 1, "L product should lack weak and strong continuity"
    return 1, None


def chk_ex_8_11(ctx):
    e = interval(0, 1)
    gap = DigitalImage([(0,), (2,)])
    F1 = MultiMap(e, e, {p: [(0,), (1,)] for p in e}, C1, C1)
    F2 = MultiMap(e, gap, {(0,): [(0,)], (1,): [(2,)]}, C1, C1)
    if has_weak_continuity(F2) or has_strong_continuity(F2):
        return 1, "doubling factor should lack weak and strong continuity"
    prod = product_multimap([F1, F2], "L")
    if not (has_weak_continuity(prod) and has_strong_continuity(prod)):
        return 1, "L product should have weak and strong continuity"
    return 1, None


def _small_multimap_family(ctx, n, max_x=2, max_y=3):
    """Deterministic random multimaps on small 1d images."""
    fam = []
    xs = canonical_images_1d(max_x)
    ys = canonical_images_1d(max_y)
    for _ in range(n):
        X = ctx.rng.choice(xs)
        Y = ctx.rng.choice(ys)
        table = {}
        for p in X:
            size = ctx.rng.randint(1, len(Y))
            table[p] = tuple(ctx.rng.sample(list(Y.sorted_points), size))
        fam.append(MultiMap(X, Y, table, C1, C1))
    return fam


def chk_thm_8_12(ctx):
    count = 0
    for F1 in _small_multimap_family(ctx, 12):
        for F2 in _small_multimap_family(ctx, 3):
            w1 = is_continuous_multimap(F1, 2)
            w2 = is_continuous_multimap(F2, 2)
            if w1 is None or w2 is None:
                continue
            count += 1
            r = w1[0] * w2[0] // _gcd(w1[0], w2[0])
            g1 = refine_generator(w1[1], subdivide(F1.domain, w1[0]), r // w1[0])
            g2 = refine_generator(w2[1], subdivide(F2.domain, w2[0]), r // w2[0])
            prod_gen = product_map([g1, g2], "X")
            if not is_continuous(prod_gen):
                return count, "product generator not X-continuous"
            prod = product_multimap([F1, F2], "X")
            induced = induced_multimap(
                _as_cu_map(prod_gen), subdivide(prod.domain, r)
            )
            if induced.table != prod.table:
                return count, "product generator does not induce the product multimap"
    return count, None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _as_cu_map(f: DigitalMap) -> DigitalMap:
    """Reinterpret a product-adjacency generator over the product lattice as a
    c_1 map (used when the product of c_1 factors is viewed inside Z^(m+n))."""
    d = f.domain.dim
    return DigitalMap(f.domain, f.codomain, f.table, cu(1, d), f.cod_adj)


def chk_thm_8_13(ctx):
    count = 0
    fam = []
    for img in canonical_images_1d(2):
        for sub in connected_subsets(img, C1):
            fam.append((img, DigitalImage(sub)))
    for x1, a1 in fam:
        for x2, a2 in fam:
            for t1 in all_multimap_tables(x1, a1):
                if any(t1[a] != (a,) for a in a1):
                    continue
                F1 = MultiMap(x1, a1, t1, C1, C1)
                for t2 in all_multimap_tables(x2, a2):
                    if any(t2[a] != (a,) for a in a2):
                        continue
                    F2 = MultiMap(x2, a2, t2, C1, C1)
                    count += 1
                    if ctx.budget is not None:
                        ctx.budget.charge()
                    f1 = is_multivalued_retraction(F1, a1, 2)
                    f2 = is_multivalued_retraction(F2, a2, 2)
                    prod = product_multimap([F1, F2], "NP", 2)
                    prod = MultiMap(
                        prod.domain, prod.codomain, prod.table, cu(1, prod.domain.dim),
                        prod.cod_adj,
                    )
                    pr = is_multivalued_retraction(prod, product_image([a1, a2]), 2)
                    want_cod = product_adjacency("NP", [C1, C1], 2)
                    pr = pr and True
                    if pr != (f1 and f2):
                        return count, (
                            f"F1={_fmt_multi(F1)} F2={_fmt_multi(F2)}: product {pr} factors {(f1, f2)}"
                        )
    return count, None


def chk_lem_8_14(ctx):
    count = 0
    for F in _small_multimap_family(ctx, 20):
        found = is_continuous_multimap(F, 2)
        if found is None:
            continue
        r, f = found
        sub = subdivide(F.domain, r)
        for s in (2, 3):
            count += 1
            refined = refine_generator(f, sub, s)
            if not is_continuous(refined):
                return count, f"refined generator discontinuous at s={s}"
            if induced_multimap(refined, subdivide(F.domain, r * s)) != F:
                return count, f"refined generator does not induce the multimap at s={s}"
    return count, None


def chk_thm_8_15(ctx):
    count = 0
    for F1 in _small_multimap_family(ctx, 10):
        for F2 in _small_multimap_family(ctx, 3):
            count += 1
            w1 = is_continuous_multimap(F1, 2)
            w2 = is_continuous_multimap(F2, 2)
            prod = product_multimap([F1, F2], "NP", 2)
            prod_cu = MultiMap(
                prod.domain, prod.codomain, prod.table, cu(1, prod.domain.dim), prod.cod_adj
            )
            if w1 is not None and w2 is not None:
                r = w1[0] * w2[0] // _gcd(w1[0], w2[0])
                if is_continuous_multimap(prod_cu, r) is None:
                    return count, "factor generators exist but no product generator found"
            wp = is_continuous_multimap(prod_cu, 2)
            if wp is not None:
                if is_continuous_multimap(F1, wp[0]) is None or is_continuous_multimap(F2, wp[0]) is None:
                    return count, "product generator exists but a factor search failed"
    return count, None


def _loc11_product_check(kind, ctx):
    count = 0
    for F1 in _small_multimap_family(ctx, 10):
        for F2 in _small_multimap_family(ctx, 3):
            for r in (1, 2):
                w1 = find_generator(F1, r, locally_one_to_one=True)
                w2 = find_generator(F2, r, locally_one_to_one=True)
                if w1 is None or w2 is None:
                    continue
                count += 1
                prod_gen = product_map([w1, w2], kind)
                if not is_continuous(prod_gen):
                    return count, f"{kind} product generator discontinuous at r={r}"
                if kind == "T" and not is_locally_one_to_one(prod_gen):
                    return count, f"T product generator not locally one-to-one at r={r}"
                prod = product_multimap([F1, F2], kind)
                induced = induced_multimap(_as_cu_map(prod_gen), subdivide(prod.domain, r))
                if induced.table != prod.table:
                    return count, f"{kind} product generator does not induce the product at r={r}"
    return count, None


def chk_thm_8_16(ctx):
    return _loc11_product_check("T", ctx)


def chk_thm_8_23(ctx):
    return _loc11_product_check("L", ctx)


def chk_thm_8_17(ctx):
    count = 0
    fam = []
    for img in canonical_images_1d(2):
        for sub in connected_subsets(img, C1):
            fam.append((img, DigitalImage(sub)))
    for x1, a1 in fam:
        for x2, a2 in fam:
            for t1 in all_multimap_tables(x1, a1):
                if any(t1[a] != (a,) for a in a1):
                    continue
                F1 = MultiMap(x1, a1, t1, C1, C1)
                if is_multivalued_retraction(F1, a1, 2) is False:
                    continue
                for t2 in all_multimap_tables(x2, a2):
                    if any(t2[a] != (a,) for a in a2):
                        continue
                    F2 = MultiMap(x2, a2, t2, C1, C1)
                    if not is_multivalued_retraction(F2, a2, 2):
                        continue
                    count += 1
                    prod = product_multimap([F1, F2], "X")
                    prod_cu = MultiMap(
                        prod.domain, prod.codomain, prod.table, cu(1, prod.domain.dim),
                        prod.cod_adj,
                    )
                    if not is_multivalued_retraction(prod_cu, product_image([a1, a2]), 4):
                        return count, f"F1={_fmt_multi(F1)} F2={_fmt_multi(F2)}"
    return count, None


def chk_ex_8_19(ctx):
    pt = DigitalImage([(0,)])
    e = interval(0, 1)
    F = MultiMap(pt, e, {(0,): [(0,), (1,)]}, C1, C1)
    if not is_connectivity_preserving(F):
        return 1, "factor should be connectivity preserving"
    prod = product_multimap([F, F], "T")
    if is_connectivity_preserving(prod):
        return 1, "T product should not be connectivity preserving"
    return 1, None


def chk_ex_8_22(ctx):
    # product direction: continuous single-valued factors, discontinuous L product
    x1, x2 = interval(0, 1), interval(0, 2)
    f = multimap_from_map(constant_map(x1, C1, x2, C1, (0,)))
    g = multimap_from_map(identity_map(x2, C1))
    if not (is_connectivity_preserving(f) and is_connectivity_preserving(g)):
        return 1, "factors should be connectivity preserving"
    prod = product_multimap([f, g], "L")
    if is_connectivity_preserving(prod):
        return 1, "L product should not be connectivity preserving"
    # factor direction: product preserving, factor not
    pt = DigitalImage([(0,)])
    gap = DigitalImage([(0,), (2,)])
    F1 = MultiMap(pt, interval(0, 1), {(0,): [(0,), (1,)]}, C1, C1)
    F2 = MultiMap(pt, gap, {(0,): [(0,), (2,)]}, C1, C1)
    if is_connectivity_preserving(F2):
        return 2, "gap-valued factor should not be connectivity preserving"
    prod2 = product_multimap([F1, F2], "L")
    if not is_connectivity_preserving(prod2):
        return 2, "L product should be connectivity preserving"
    return 2, None


# ===========================================================================
# section 9 checks
# ===========================================================================


def _continuous_surjections(x, kx, y, ky):
    for f in all_maps(x, kx, y, ky):
        if f.is_surjective() and is_continuous(f):
            yield f


def chk_thm_9_1(ctx):
    count = 0
    for X, kx in pool_1d(4, span=3):
        for Y, ky in pool_1d(4, span=3):
            if len(Y) > len(X):
                continue
            for f in _continuous_surjections(X, kx, Y, ky):
                if not is_shy(f):
                    continue
                count += 1
                if bool(is_isomorphism(f)) != bool(is_locally_one_to_one(f)):
                    return count, _fmt_map(f)
    return count, None


def chk_thm_9_2(ctx):
    count = 0
    pool = pool_1d(3)
    for X1, k1 in pool:
        for Y1, l1 in pool:
            for X2, k2 in pool:
                for Y2, l2 in pool:
                    guards = all(
                        has_adjacent_pair(i, a)
                        for i, a in ((X1, k1), (X2, k2), (Y1, l1), (Y2, l2))
                    )
                    if not guards:
                        continue
                    for f1 in _continuous_surjections(X1, k1, Y1, l1):
                        for f2 in _continuous_surjections(X2, k2, Y2, l2):
                            prod = product_map([f1, f2], "T")
                            if not is_shy(prod):
                                continue
                            count += 1
                            if not (is_shy(f1) and is_shy(f2)):
                                return count, f"f1={_fmt_map(f1)} f2={_fmt_map(f2)}"
    return count, None


def chk_ex_9_3(ctx):
    e = interval(0, 1)
    pt = DigitalImage([(0,)])
    f1 = constant_map(e, C1, pt, C1, (0,))
    f2 = identity_map(e, C1)
    if not (is_shy(f1) and is_shy(f2)):
        return 1, "factors should be shy"
    prod = product_map([f1, f2], "T")
    verdict = is_shy(prod)
    if verdict:
        return 1, "T product should not be shy"
    if verdict.witness[0] != "not continuous":
        return 1, f"expected continuity failure, got {verdict.witness}"
    return 1, None


def chk_thm_9_4(ctx):
    count = 0
    pool = pool_1d(3)
    for X1, k1 in pool:
        for Y1, l1 in pool:
            for X2, k2 in pool:
                for Y2, l2 in pool:
                    for f1 in _continuous_surjections(X1, k1, Y1, l1):
                        for f2 in _continuous_surjections(X2, k2, Y2, l2):
                            count += 1
                            if ctx.budget is not None:
                                ctx.budget.charge()
                            prod = product_map([f1, f2], "X")
                            if bool(is_shy(prod)) != (bool(is_shy(f1)) and bool(is_shy(f2))):
                                return count, f"f1={_fmt_map(f1)} f2={_fmt_map(f2)}"
    return count, None


def chk_thm_9_5(ctx):
    count = 0
    pool = pool_1d(3)
    for X1, k1 in pool:
        for Y1, l1 in pool:
            for X2, k2 in pool:
                for Y2, l2 in pool:
                    for f1 in _continuous_surjections(X1, k1, Y1, l1):
                        if not is_shy(f1):
                            continue
                        for f2 in _continuous_surjections(X2, k2, Y2, l2):
                            if not is_shy(f2):
                                continue
                            count += 1
                            if ctx.budget is not None:
                                ctx.budget.charge()
                            prod = product_map([f1, f2], "L")
                            if not is_shy(prod):
                                return count, f"f1={_fmt_map(f1)} f2={_fmt_map(f2)}"
    return count, None


def chk_ex_9_6(ctx):
    e = interval(0, 1)
    gap = DigitalImage([(0,), (2,)])
    pt = DigitalImage([(0,)])
    f1 = constant_map(e, C1, pt, C1, (0,))
    f2 = constant_map(gap, C1, pt, C1, (0,))
    if is_shy(f2):
        return 1, "the gap factor should not be shy"
    prod = product_map([f1, f2], "L")
    if not is_shy(prod):
        return 1, "L product should be shy"
    return 1, None


# ===========================================================================
# registry
# ===========================================================================

CHECK_FUNCS = {
    "Prop-2.6": ("exhaustive", chk_prop_2_6),
    "Thm-2.10": ("exhaustive", chk_thm_2_10),
    "Thm-2.11": ("randomized(80)", chk_thm_2_11),
    "Ex-2.12": ("exhaustive", chk_ex_2_12),
    "Ex-2.13": ("exhaustive", chk_ex_2_13),
    "Prop-2.16": ("exhaustive", chk_prop_2_16),
    "Thm-2.19": ("exhaustive", chk_thm_2_19),
    "Thm-2.23": ("randomized(60)", chk_thm_2_23),
    "Thm-2.24": ("randomized(60)", chk_thm_2_24),
    "Prop-2.27": ("exhaustive", chk_prop_2_27),
    "Ex-2.28": ("fixture", chk_ex_2_28),
    "Ex-2.29": ("fixture", chk_ex_2_29),
    "Prop-2.30": ("exhaustive", chk_prop_2_30),
    "Thm-2.32": ("exhaustive", chk_thm_2_32),
    "Ex-3.2": ("fixture", chk_ex_3_2),
    "Ex-3.3": ("fixture", chk_ex_3_3),
    "Prop-3.4": ("exhaustive", chk_prop_3_4),
    "Prop-3.5": ("randomized(60)", chk_prop_3_5),
    "Thm-3.7": ("exhaustive", _sv_sweep_check("np_iff")),
    "Thm-3.8": ("exhaustive", _sv_sweep_check("np_iso", mixed=0)),
    "Thm-3.9": ("exhaustive", chk_thm_3_9),
    "Thm-3.10": ("exhaustive", chk_thm_3_10),
    "Prop-3.11": ("exhaustive", chk_prop_3_11),
    "Ex-3.12": ("fixture", chk_ex_3_12),
    "Thm-3.13": ("exhaustive", _sv_sweep_check("t_factor")),
    "Thm-3.14": ("exhaustive", _sv_sweep_check("t_loc11_prod", mixed=0)),
    "Thm-3.15": ("exhaustive", _sv_sweep_check("t_iso_iff", mixed=0)),
    "Thm-3.16": ("exhaustive", chk_thm_3_16),
    "Prop-3.17": ("exhaustive", chk_prop_3_17),
    "Thm-3.17": ("exhaustive", _sv_sweep_check("cart_iff")),
    "Prop-3.18": ("exhaustive", chk_prop_3_18),
    "Thm-3.19": ("exhaustive", _sv_sweep_check("cart_iso_iff", mixed=0)),
    "Ex-3.20": ("fixture", chk_ex_3_20),
    "Thm-3.21": ("exhaustive", _sv_sweep_check("lex_thm")),
    "Thm-3.22": ("exhaustive", _sv_sweep_check("lex_iso_iff", mixed=0)),
    "Ex-3.23": ("fixture", chk_ex_3_23),
    "Thm-3.24": ("exhaustive", chk_thm_3_24),
    "Prop-3.25": ("exhaustive", chk_prop_3_25),
    "Ex-3.26": ("fixture", chk_ex_3_26),
    "Thm-4.1": ("exhaustive", chk_thm_4_1),
    "Thm-4.2": ("exhaustive", chk_thm_4_2),
    "Ex-4.3": ("fixture", chk_ex_4_3),
    "Thm-4.4": ("exhaustive", chk_thm_4_4),
    "Prop-4.5": ("exhaustive", chk_prop_4_5),
    "Thm-4.6": ("exhaustive", chk_thm_4_6),
    "Ex-5.1": ("fixture", chk_ex_5_1),
    "Ex-5.2": ("fixture", chk_ex_5_2),
    "Thm-5.3": ("randomized(60)", chk_thm_5_3),
    "Cor-5.4": ("exhaustive", chk_cor_5_4),
    "Thm-5.5": ("exhaustive", chk_thm_5_5),
    "Cor-5.6": ("exhaustive", chk_cor_5_6),
    "Cor-5.7": ("exhaustive", chk_cor_5_7),
    "Def-6.1": ("fixture", chk_def_6_1),
    "Thm-6.2": ("exhaustive", chk_thm_6_2),
    "Ex-6.3": ("fixture", chk_ex_6_3),
    "Thm-6.4": ("exhaustive", chk_thm_6_4),
    "Ex-6.5": ("fixture", chk_ex_6_5),
    "Def-7.1": ("fixture", chk_def_7_1),
    "Thm-7.2": ("exhaustive", chk_thm_7_2),
    "Ex-7.3": ("fixture", chk_ex_7_3),
    "Ex-7.4": ("fixture", chk_ex_7_4),
    "Thm-7.5": ("exhaustive", chk_thm_7_5),
    "Prop-8.1": ("exhaustive", chk_prop_8_1),
    "Thm-8.2": ("exhaustive", _mm_sweep_check("weak_np_iff")),
    "Thm-8.3": ("exhaustive", _mm_sweep_check("weak_t_factor")),
    "Ex-8.4": ("fixture", chk_ex_8_4),
    "Thm-8.5": ("exhaustive", _mm_sweep_check("weak_cart_iff")),
    "Thm-8.6": ("exhaustive", _mm_sweep_check("strong_np_iff")),
    "Thm-8.7": ("exhaustive", _mm_sweep_check("strong_t_factor")),
    "Ex-8.8": ("fixture", chk_ex_8_8),
    "Thm-8.9": ("exhaustive", _mm_sweep_check("strong_cart_iff")),
    "Ex-8.10": ("fixture", chk_ex_8_10),
    "Ex-8.11": ("fixture", chk_ex_8_11),
    "Thm-8.12": ("randomized(36)", chk_thm_8_12),
    "Thm-8.13": ("exhaustive", chk_thm_8_13),
    "Lem-8.14": ("randomized(40)", chk_lem_8_14),
    "Thm-8.15": ("randomized(30)", chk_thm_8_15),
    "Thm-8.16": ("randomized(30)", chk_thm_8_16),
    "Thm-8.17": ("exhaustive", chk_thm_8_17),
    "Thm-8.18": ("exhaustive", _mm_sweep_check("cp_np_iff")),
    "Ex-8.19": ("fixture", chk_ex_8_19),
    "Thm-8.20": ("exhaustive", _mm_sweep_check("cp_t_factor")),
    "Thm-8.21": ("exhaustive", _mm_sweep_check("cp_cart_iff")),
    "Ex-8.22": ("fixture", chk_ex_8_22),
    "Thm-8.23": ("randomized(30)", chk_thm_8_23),
    "Thm-9.1": ("exhaustive", chk_thm_9_1),
    "Thm-9.2": ("exhaustive", chk_thm_9_2),
    "Ex-9.3": ("fixture", chk_ex_9_3),
    "Thm-9.4": ("exhaustive", chk_thm_9_4),
    "Thm-9.5": ("exhaustive", chk_thm_9_5),
    "Ex-9.6": ("fixture", chk_ex_9_6),
}
