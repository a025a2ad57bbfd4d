"""Adjacency expressions: c_u families and four product adjacencies.

An adjacency is described by an expression tree over

    c<u>[@<n>]            a c_u family, optionally pinned to dimension n
    NP<u>(e, ..., e)      normal product: 1..u factor blocks adjacent, rest equal
    T(e, ..., e)          tensor product: every factor block adjacent
    X(e, ..., e)          Cartesian product: exactly one block adjacent, rest equal
    L(e, ..., e)          lexicographic: first block adjacent, or a prefix of
                          blocks equal followed by an adjacent block; trailing
                          blocks are unconstrained

The textual grammar is exactly

    spec := cu | head '(' spec (',' spec)+ ')'
    head := 'NP' digits | 'T' | 'X' | 'L'
    cu   := 'c' digits ('@' digits)?

with whitespace insignificant between tokens.  An expression is *bound*
against a concrete lattice dimension before evaluation; unannotated c_u
leaves take their dimension from the binding, which must be unambiguous
(either implied uniquely by the arity constraints or given as an explicit
per-factor split).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Callable, Iterable, Iterator, Sequence, Union

from .lattice import DigitalImage, Point

AdjacencySpec = Union["Cu", "ProductSpec"]

_HEADS = {"NP", "T", "X", "L"}


@dataclass(frozen=True)
class Cu:
    """The c_u adjacency; ``dim`` pins the lattice dimension it consumes."""

    u: int
    dim: int | None = None

    def __post_init__(self):
        if self.u < 1:
            raise ValueError(f"c_u needs u >= 1, got u={self.u}")
        if self.dim is not None and self.dim < self.u:
            raise ValueError(f"c{self.u} needs dimension >= {self.u}, got {self.dim}")

    def __str__(self) -> str:
        return print_adjacency(self)


@dataclass(frozen=True)
class ProductSpec:
    """A product node; ``u`` is set exactly for the NP kind."""

    kind: str
    u: int | None
    factors: tuple[AdjacencySpec, ...]

    def __post_init__(self):
        if self.kind not in _HEADS:
            raise ValueError(f"unknown product kind {self.kind!r}")
        if len(self.factors) < 2:
            raise ValueError(f"{self.kind} needs at least 2 factors, got {len(self.factors)}")
        if self.kind == "NP":
            if self.u is None or not 1 <= self.u <= len(self.factors):
                raise ValueError(
                    f"NP{self.u} over {len(self.factors)} factors violates 1 <= u <= factor count"
                )
        elif self.u is not None:
            raise ValueError(f"{self.kind} takes no u parameter")

    def __str__(self) -> str:
        return print_adjacency(self)


def NP(u: int, *factors: AdjacencySpec) -> ProductSpec:
    return ProductSpec("NP", u, tuple(factors))


def Tensor(*factors: AdjacencySpec) -> ProductSpec:
    return ProductSpec("T", None, tuple(factors))


def Cartesian(*factors: AdjacencySpec) -> ProductSpec:
    return ProductSpec("X", None, tuple(factors))


def Lex(*factors: AdjacencySpec) -> ProductSpec:
    return ProductSpec("L", None, tuple(factors))


# ---------------------------------------------------------------------------
# printing and parsing


def print_adjacency(spec: AdjacencySpec) -> str:
    """Canonical text form: no whitespace, annotations kept."""
    if isinstance(spec, Cu):
        return f"c{spec.u}" + (f"@{spec.dim}" if spec.dim is not None else "")
    head = f"NP{spec.u}" if spec.kind == "NP" else spec.kind
    return head + "(" + ",".join(print_adjacency(f) for f in spec.factors) + ")"


class AdjacencySyntaxError(ValueError):
    """Parse failure with a 1-based offset and the tokens that would fit."""

    def __init__(self, message: str, position: int, expected: Sequence[str] = ()):
        self.position = position
        self.expected = tuple(expected)
        suffix = f" (expected {' or '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {position}{suffix}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, expected: Sequence[str] = ()):
        raise AdjacencySyntaxError(message, self.pos + 1, expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            self.error(f"expected {token!r}", (token,))
        self.pos += len(token)

    def digits(self, what: str) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error(f"expected digits for {what}", ("digits",))
        return int(self.text[start : self.pos])

    def spec(self) -> AdjacencySpec:
        self.skip_ws()
        start = self.pos
        ch = self.peek()
        if ch == "c":
            self.pos += 1
            u = self.digits("u")
            dim = None
            if self.peek() == "@":
                self.pos += 1
                dim = self.digits("dimension")
            try:
                return Cu(u, dim)
            except ValueError as exc:
                raise AdjacencySyntaxError(str(exc), start + 1) from None
        if ch == "N":
            self.take("NP")
            u = self.digits("u")
            return self.args("NP", u, start)
        if ch in ("T", "X", "L"):
            self.pos += 1
            return self.args(ch, None, start)
        self.error("expected an adjacency expression", ("c<u>", "NP<u>(", "T(", "X(", "L("))

    def args(self, kind: str, u: int | None, start: int) -> ProductSpec:
        self.take("(")
        factors = [self.spec()]
        self.skip_ws()
        while self.peek() == ",":
            self.pos += 1
            factors.append(self.spec())
            self.skip_ws()
        self.take(")")
        try:
            return ProductSpec(kind, u, tuple(factors))
        except ValueError as exc:
            raise AdjacencySyntaxError(str(exc), start + 1) from None


def parse_adjacency(text: str) -> AdjacencySpec:
    """Parse the grammar above; round-trips with :func:`print_adjacency`."""
    parser = _Parser(text)
    spec = parser.spec()
    parser.skip_ws()
    if parser.pos < len(text):
        parser.error("trailing input after expression")
    return spec


# ---------------------------------------------------------------------------
# binding a spec to a concrete dimension


def min_arity(spec: AdjacencySpec) -> int:
    if isinstance(spec, Cu):
        return spec.dim if spec.dim is not None else spec.u
    return sum(min_arity(f) for f in spec.factors)


def fixed_arity(spec: AdjacencySpec) -> int | None:
    """The dimension the spec consumes, when fully determined by annotations."""
    if isinstance(spec, Cu):
        return spec.dim
    parts = [fixed_arity(f) for f in spec.factors]
    return None if any(a is None for a in parts) else sum(parts)


def _bindings(spec: AdjacencySpec, dim: int) -> Iterator[AdjacencySpec]:
    """All fully annotated variants of the spec consuming exactly ``dim``."""
    if isinstance(spec, Cu):
        if spec.dim is not None:
            if spec.dim == dim:
                yield spec
        elif spec.u <= dim:
            yield Cu(spec.u, dim)
        return
    mins = [min_arity(f) for f in spec.factors]
    fixes = [fixed_arity(f) for f in spec.factors]

    def split(i: int, remaining: int, chosen: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(mins):
            if remaining == 0:
                yield tuple(chosen)
            return
        tail_min = sum(mins[i + 1 :])
        if fixes[i] is not None:
            options: Iterable[int] = (fixes[i],)
        else:
            options = range(mins[i], remaining - tail_min + 1)
        for d in options:
            if mins[i] <= d <= remaining - tail_min:
                chosen.append(d)
                yield from split(i + 1, remaining - d, chosen)
                chosen.pop()

    for dims in split(0, dim, []):
        for combo in iter_product(*(_bindings(f, d) for f, d in zip(spec.factors, dims))):
            yield ProductSpec(spec.kind, spec.u, combo)


class AdjacencyBindError(ValueError):
    pass


def bind(
    spec: AdjacencySpec | str,
    dim: int,
    split: Sequence[int] | None = None,
) -> "Adjacency":
    """Resolve every c_u leaf to a concrete dimension and compile an oracle.

    Unannotated specs are accepted only when the dimension split is uniquely
    determined; otherwise the split must be given explicitly (it applies to
    the top-level factors) or the leaves must carry ``@`` annotations.
    """
    if isinstance(spec, str):
        spec = parse_adjacency(spec)
    if dim < 1:
        raise AdjacencyBindError(f"dimension must be positive, got {dim}")
    if split is not None:
        if isinstance(spec, Cu):
            raise AdjacencyBindError("a split applies only to product expressions")
        if len(split) != len(spec.factors):
            raise AdjacencyBindError(
                f"split names {len(split)} factors but the expression has {len(spec.factors)}"
            )
        if sum(split) != dim:
            raise AdjacencyBindError(f"split {list(split)} does not sum to dimension {dim}")
        bound_factors = []
        for factor, d in zip(spec.factors, split):
            bound_factors.append(bind(factor, d).spec)
        return Adjacency(ProductSpec(spec.kind, spec.u, tuple(bound_factors)))
    found = []
    for candidate in _bindings(spec, dim):
        found.append(candidate)
        if len(found) > 1:
            raise AdjacencyBindError(
                f"ambiguous dimension split for {print_adjacency(spec)} on dimension {dim}; "
                f"annotate factors with @<n> or provide an explicit split"
            )
    if not found:
        raise AdjacencyBindError(
            f"{print_adjacency(spec)} cannot consume dimension {dim}"
        )
    return Adjacency(found[0])


# ---------------------------------------------------------------------------
# compiled oracles

_Pred = Callable[[Point, Point], bool]


def _compile(spec: AdjacencySpec, offset: int) -> _Pred:
    if isinstance(spec, Cu):
        u = spec.u
        rng = range(offset, offset + spec.dim)

        def cu_pred(p: Point, q: Point) -> bool:
            moved = 0
            for i in rng:
                d = p[i] - q[i]
                if d:
                    if d != 1 and d != -1:
                        return False
                    moved += 1
                    if moved > u:
                        return False
            return moved >= 1

        return cu_pred

    parts: list[tuple[_Pred, range]] = []
    at = offset
    for factor in spec.factors:
        width = fixed_arity(factor)
        parts.append((_compile(factor, at), range(at, at + width)))
        at += width

    if spec.kind == "T":

        def tensor_pred(p: Point, q: Point) -> bool:
            return all(pred(p, q) for pred, _ in parts)

        return tensor_pred

    if spec.kind == "L":

        def lex_pred(p: Point, q: Point) -> bool:
            for pred, rng in parts:
                if pred(p, q):
                    return True
                if any(p[i] != q[i] for i in rng):
                    return False
            return False

        return lex_pred

    # NP(u) and Cartesian (= NP(1)): 1..u blocks adjacent, the rest equal.
    u = 1 if spec.kind == "X" else spec.u

    def np_pred(p: Point, q: Point) -> bool:
        moved = 0
        for pred, rng in parts:
            if all(p[i] == q[i] for i in rng):
                continue
            if not pred(p, q):
                return False
            moved += 1
            if moved > u:
                return False
        return moved >= 1

    return np_pred


class Adjacency:
    """Evaluation oracle for a fully bound adjacency expression.

    Symmetric and irreflexive by construction for every well-formed spec.
    """

    __slots__ = ("spec", "dim", "_pred")

    def __init__(self, spec: AdjacencySpec):
        arity = fixed_arity(spec)
        if arity is None:
            raise AdjacencyBindError(
                f"{print_adjacency(spec)} is not fully bound; use bind()"
            )
        self.spec = spec
        self.dim = arity
        self._pred = _compile(spec, 0)

    def adjacent(self, p: Point, q: Point) -> bool:
        if len(p) != self.dim or len(q) != self.dim:
            raise ValueError(
                f"points of dimension {len(p)}/{len(q)} against arity {self.dim}"
            )
        if p == q:
            return False
        return self._pred(p, q)

    @property
    def factors(self) -> tuple["Adjacency", ...]:
        """Bound oracles of the top-level factors (empty for c_u leaves)."""
        if isinstance(self.spec, Cu):
            return ()
        return tuple(Adjacency(f) for f in self.spec.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Adjacency) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"Adjacency({print_adjacency(self.spec)})"


def cu(u: int, dim: int) -> Adjacency:
    """Bound c_u oracle on Z^dim."""
    return Adjacency(Cu(u, dim))


def product_adjacency(kind: str, factor_adjs: Sequence[Adjacency], u: int | None = None) -> Adjacency:
    """Product oracle over already-bound factor oracles; no inference needed."""
    spec = ProductSpec(kind, u if kind == "NP" else None, tuple(a.spec for a in factor_adjs))
    return Adjacency(spec)


def adjacent(spec: AdjacencySpec | str | Adjacency, p: Sequence[int], q: Sequence[int]) -> bool:
    """Evaluate a spec on a point pair, binding it to the points' dimension."""
    p, q = tuple(p), tuple(q)
    if len(p) != len(q):
        raise ValueError(f"dimension mismatch: {len(p)} vs {len(q)}")
    oracle = spec if isinstance(spec, Adjacency) else bind(spec, len(p))
    return oracle.adjacent(p, q)


# ---------------------------------------------------------------------------
# product images and domination


def product_image(factors: Sequence[DigitalImage]) -> DigitalImage:
    """All coordinate concatenations of points of the factors."""
    if len(factors) < 2:
        raise ValueError("a product needs at least 2 factors")
    points = [()]
    for factor in factors:
        points = [p + q for p in points for q in factor.sorted_points]
    return DigitalImage(points)


def split_point(p: Point, dims: Sequence[int]) -> tuple[Point, ...]:
    if sum(dims) != len(p):
        raise ValueError(f"cannot split a {len(p)}-dimensional point as {list(dims)}")
    blocks = []
    at = 0
    for d in dims:
        blocks.append(p[at : at + d])
        at += d
    return tuple(blocks)


def dominates(a: Adjacency | AdjacencySpec | str, b: Adjacency | AdjacencySpec | str,
              domain: DigitalImage) -> bool:
    """True iff on the given domain every a-adjacent pair is b-adjacent.

    Domination is checked relative to an explicit finite domain:
    lexicographic adjacency reaches arbitrarily far in trailing coordinates,
    so no fixed difference window could decide it globally.
    """
    oa = a if isinstance(a, Adjacency) else bind(a, domain.dim)
    ob = b if isinstance(b, Adjacency) else bind(b, domain.dim)
    if oa.dim != domain.dim or ob.dim != domain.dim:
        raise ValueError("adjacency arity does not match the domain dimension")
    pts = domain.sorted_points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if oa.adjacent(pts[i], pts[j]) and not ob.adjacent(pts[i], pts[j]):
                return False
    return True
