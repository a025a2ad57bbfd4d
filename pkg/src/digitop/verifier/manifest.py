"""Check ids and the claims they trace, plus the coverage contract.

Each entry maps a check id to the claim it certifies.  The claim wording is
self-contained: "NP_u" is the normal product adjacency (1..u blocks move,
rest equal), "T" the tensor product (all blocks move), "X" the Cartesian
product (exactly one block moves), "L" the lexicographic adjacency (first
moving block decides; trailing blocks free).  REQUIRED_ANCHORS is the set of
claim numbers the registry must cover; the registry-vs-manifest test
enforces both directions.
"""

from __future__ import annotations

MANIFEST: dict[str, tuple[str, str]] = {
    # --- section 2: basic notions -----------------------------------------
    "Prop-2.6": ("2.6", "NP_1 and the Cartesian product adjacency agree on every point pair"),
    "Thm-2.10": ("2.10", "adjacency-wise continuity is equivalent to preserving connectedness of subsets"),
    "Thm-2.11": ("2.11", "composition of continuous maps is continuous"),
    "Ex-2.12": ("2.12", "constant maps are continuous"),
    "Ex-2.13": ("2.13", "identity maps are continuous"),
    "Prop-2.16": ("2.16", "homotopy is an equivalence relation on continuous maps"),
    "Thm-2.19": ("2.19", "connectivity preservation = connected point images + adjacent images of adjacent points"),
    "Thm-2.23": ("2.23", "subdivision-continuous multimaps have connected point images and preserve connected sets"),
    "Thm-2.24": ("2.24", "subdivision-continuous multimaps are connectivity preserving"),
    "Prop-2.27": ("2.27", "connectivity preserving = weak continuity + connected point images"),
    "Ex-2.28": ("2.28", "F(0)={0,2}, F(1)={1}: weakly and strongly continuous but not connectivity preserving"),
    "Ex-2.29": ("2.29", "F(0)={0,1}, F(1)={2}: weakly but not strongly continuous; induced at subdivision level 2"),
    "Prop-2.30": ("2.30", "strong continuity + connected point images imply connectivity preservation"),
    "Thm-2.32": ("2.32", "four equivalent descriptions of shy maps agree on every continuous surjection"),
    # --- section 3: domination; continuity on products ---------------------
    "Ex-3.2": ("3.2", "domination ladder: c_u over c_v (u<=v); NP_u over NP_v; T over NP_v; NP_u, T, X over L"),
    "Ex-3.3": ("3.3", "on Z^6 = Z^3 x Z^3 neither of T(c2,c2), T(c1,c3) dominates the other"),
    "Prop-3.4": ("3.4", "domination is transitive on a fixed domain"),
    "Prop-3.5": ("3.5", "continuity is monotone under domination on either side"),
    "Thm-3.7": ("3.7", "NP_v product map continuous iff every factor is continuous"),
    "Thm-3.8": ("3.8", "NP_u product isomorphism forces factor isomorphisms; NP_v products of isomorphisms are isomorphisms"),
    "Thm-3.9": ("3.9", "projections are continuous under NP_u"),
    "Thm-3.10": ("3.10", "projections are continuous under the Cartesian product adjacency"),
    "Prop-3.11": ("3.11", "tensor-adjacent pairs force adjacent pairs in every factor; nonconstant continuous images force them in every codomain factor"),
    "Ex-3.12": ("3.12", "identity x constant on the unit square is not T-continuous (witness (0,0),(1,1))"),
    "Thm-3.13": ("3.13", "T product map continuous implies factors continuous (factors with adjacent pairs)"),
    "Thm-3.14": ("3.14", "continuous locally one-to-one factors give a continuous locally one-to-one T product"),
    "Thm-3.15": ("3.15", "T product isomorphism iff factor isomorphisms (factors with adjacent pairs)"),
    "Thm-3.16": ("3.16", "projections are continuous under T"),
    "Prop-3.17": ("3.17", "the slice injection x -> (x, y0) is never T-continuous when the factor has an adjacent pair"),
    "Thm-3.17": ("3.17", "Cartesian product map continuous iff every factor is continuous"),
    "Prop-3.18": ("3.18", "slice injections are continuous under the Cartesian product adjacency"),
    "Thm-3.19": ("3.19", "Cartesian product isomorphism iff factor isomorphisms"),
    "Ex-3.20": ("3.20", "constant x identity is not L-continuous (witness (0,0),(1,2))"),
    "Thm-3.21": ("3.21", "L product continuity forces factor continuity (and local injectivity passes down); continuous locally one-to-one factors give L-continuous products"),
    "Thm-3.22": ("3.22", "L product isomorphism iff factor isomorphisms"),
    "Ex-3.23": ("3.23", "projections past the first coordinate are not L-continuous on [0,2]^v"),
    "Thm-3.24": ("3.24", "coordinate permutations compose with factor isomorphisms to product isomorphisms under NP_u, T, X"),
    "Prop-3.25": ("3.25", "the first projection is L-continuous"),
    "Ex-3.26": ("3.26", "{0,1}x{0,2} is L-connected, {0,2}x{0,1} is not; the two are non-isomorphic"),
    # --- section 4: connectedness ------------------------------------------
    "Thm-4.1": ("4.1", "NP_v product connected iff every factor connected"),
    "Thm-4.2": ("4.2", "T product connected implies every factor connected"),
    "Ex-4.3": ("4.3", "unit square splits into two T components; the 6-point closed curve times an edge is X-connected but T-disconnected with the two-neighbor formula"),
    "Thm-4.4": ("4.4", "Cartesian product connected iff every factor connected"),
    "Prop-4.5": ("4.5", "two-factor L product with |first| > 1 connected iff the first factor is"),
    "Thm-4.6": ("4.6", "L product connected iff factor k is connected, k the first factor with more than one point"),
    # --- section 5: homotopy ------------------------------------------------
    "Ex-5.1": ("5.1", "homotopic factors with a non-homotopic T product (identity vs constant on the unit square)"),
    "Ex-5.2": ("5.2", "homotopy-equivalent factors with non-equivalent T products (unit square vs point)"),
    "Thm-5.3": ("5.3", "X product maps homotopic iff factors homotopic, pointed included"),
    "Cor-5.4": ("5.4", "X products homotopy equivalent iff factors are, pointed included"),
    "Thm-5.5": ("5.5", "L product collapses onto factor k (first with more than one point, taken connected) with the same pointed homotopy type"),
    "Cor-5.6": ("5.6", "factors of different homotopy types give L products of different homotopy types in the two orders"),
    "Cor-5.7": ("5.7", "same pointed type of the leading non-singleton factors gives the same pointed type of the L products"),
    # --- section 6: retractions ---------------------------------------------
    "Def-6.1": ("6.1", "retraction basics: identity retracts, codomain must be the fixed subset"),
    "Thm-6.2": ("6.2", "factor retracts iff NP_v product retract"),
    "Ex-6.3": ("6.3", "factor retracts whose T product is not a retract (3-point corner times edge)"),
    "Thm-6.4": ("6.4", "factor retracts iff X product retract"),
    "Ex-6.5": ("6.5", "factor retracts whose L product is not a retract ([0,1]x[0,5] onto {0}x[1,4])"),
    # --- section 7: approximate fixed points ---------------------------------
    "Def-7.1": ("7.1", "the unit interval has the approximate fixed point property (all 4 self-maps)"),
    "Thm-7.2": ("7.2", "NP_u product with the approximate fixed point property forces it on every factor"),
    "Ex-7.3": ("7.3", "(a,b) -> (1-a,b) is T-continuous on the unit square with no approximate fixed point"),
    "Ex-7.4": ("7.4", "(a,b) -> (1-a,1-b) is X-continuous on the unit square with no approximate fixed point"),
    "Thm-7.5": ("7.5", "L product with the approximate fixed point property forces it on the first connected non-singleton factor"),
    # --- section 8: multivalued maps -----------------------------------------
    "Prop-8.1": ("8.1", "for single-valued maps: continuity = weak continuity = strong continuity"),
    "Thm-8.2": ("8.2", "NP_v product weakly continuous iff factors weakly continuous"),
    "Thm-8.3": ("8.3", "T product weakly continuous implies factors weakly continuous (factors with adjacent pairs)"),
    "Ex-8.4": ("8.4", "weakly continuous factors with a T product that is not weakly continuous"),
    "Thm-8.5": ("8.5", "X product weakly continuous iff factors weakly continuous"),
    "Thm-8.6": ("8.6", "NP_v product strongly continuous iff factors strongly continuous"),
    "Thm-8.7": ("8.7", "T product strongly continuous implies factors strongly continuous (factors with adjacent pairs)"),
    "Ex-8.8": ("8.8", "strongly continuous factors with a T product that is not strongly continuous"),
    "Thm-8.9": ("8.9", "X product strongly continuous iff factors strongly continuous"),
    "Ex-8.10": ("8.10", "weak/strong continuity of factors does not pass to L products"),
    "Ex-8.11": ("8.11", "weak/strong continuity of an L product does not pass to factors"),
    "Thm-8.12": ("8.12", "subdivision-continuous factors give a subdivision-continuous X product"),
    "Thm-8.13": ("8.13", "factor multivalued retractions iff NP_v product multivalued retraction"),
    "Lem-8.14": ("8.14", "a generator at subdivision level r refines to every multiple of r"),
    "Thm-8.15": ("8.15", "NP_v product subdivision-continuous iff factors are"),
    "Thm-8.16": ("8.16", "locally one-to-one generators at a common level give a T-continuous product with a locally one-to-one generator"),
    "Thm-8.17": ("8.17", "products of multivalued retractions are X multivalued retractions"),
    "Thm-8.18": ("8.18", "NP_v product connectivity preserving iff factors are"),
    "Ex-8.19": ("8.19", "connectivity preserving factors with a T product that is not connectivity preserving"),
    "Thm-8.20": ("8.20", "T product connectivity preserving implies factors are (factors with adjacent pairs)"),
    "Thm-8.21": ("8.21", "X product connectivity preserving iff factors are"),
    "Ex-8.22": ("8.22", "connectivity preservation passes neither way through L products (two explicit families)"),
    "Thm-8.23": ("8.23", "locally one-to-one generators at a common level give an L-continuous product"),
    # --- section 9: shy maps ---------------------------------------------------
    "Thm-9.1": ("9.1", "a shy map is an isomorphism iff it is locally one-to-one"),
    "Thm-9.2": ("9.2", "T product shy implies factors shy (factors with adjacent pairs on both sides)"),
    "Ex-9.3": ("9.3", "shy factors with a T product that is not shy"),
    "Thm-9.4": ("9.4", "X product shy iff factors shy"),
    "Thm-9.5": ("9.5", "shy factors give a shy L product"),
    "Ex-9.6": ("9.6", "a shy L product with a non-shy factor"),
}

# Claim numbers the registry must cover (one check may cover several ids that
# share a number, and extra checks beyond the contract are allowed).
REQUIRED_ANCHORS: frozenset[str] = frozenset(
    ["2.6", "2.10", "2.11", "2.12", "2.13", "2.16", "2.19", "2.23", "2.24",
     "2.27", "2.28", "2.29", "2.30", "2.32"]
    + ["3.2", "3.3", "3.4", "3.5"]
    + [f"3.{i}" for i in range(7, 27)]
    + [f"4.{i}" for i in range(1, 7)]
    + [f"5.{i}" for i in range(1, 7)]
    + ["6.1", "6.2", "6.3"]
    + [f"7.{i}" for i in range(1, 6)]
    + [f"8.{i}" for i in range(2, 24)]
    + [f"9.{i}" for i in range(1, 6)]
)
