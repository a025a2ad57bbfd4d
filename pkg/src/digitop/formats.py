"""Text formats for images, maps, multivalued maps, homotopy witnesses, DOT.

Image files:      ``dim <n>`` header, optional ``adj <spec>`` and
                  ``split <n1> <n2> ...`` headers, then one point per line as
                  space-separated integers.  ``#`` starts a comment.
Map files:        ``map`` header, ``dom <image-file>``, ``cod <image-file>``,
                  ``dom_adj <spec>``, ``cod_adj <spec>``, then lines
                  ``x1 ... xn -> y1 ... ym``.
Multimap files:   ``multimap`` header, same fields, but value lines read
                  ``x1 ... xn -> { y ... ; y ... ; ... }``.
Witness files:    ``homotopy m=<m>`` header then lines
                  ``t x1 ... xn -> y1 ... ym``.

Paths named inside map files are resolved relative to the map file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .adjacency import (
    Adjacency,
    AdjacencyBindError,
    AdjacencySpec,
    bind,
    parse_adjacency,
    print_adjacency,
)
from .homotopy import HomotopyWitness
from .lattice import DigitalImage, Point, adjacent_pairs, format_point
from .maps import DigitalMap
from .multivalued import MultiMap


class FormatError(ValueError):
    """File content error, annotated with path and 1-based line number."""

    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


def _content_lines(path: str) -> list[tuple[int, str]]:
    with open(path, "r", encoding="utf-8") as handle:
        raw = handle.read().splitlines()
    out = []
    for i, line in enumerate(raw, start=1):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            out.append((i, stripped))
    return out


@dataclass(frozen=True)
class LoadedImage:
    image: DigitalImage
    adj_spec: AdjacencySpec | None
    split: tuple[int, ...] | None

    def oracle(self, override: AdjacencySpec | str | None = None) -> Adjacency:
        spec = override if override is not None else self.adj_spec
        if spec is None:
            raise AdjacencyBindError("no adjacency given and none declared in the image file")
        try:
            return bind(spec, self.image.dim)
        except AdjacencyBindError:
            if self.split is not None:
                return bind(spec, self.image.dim, split=self.split)
            raise


def load_image(path: str) -> LoadedImage:
    lines = _content_lines(path)
    if not lines or not lines[0][1].startswith("dim "):
        lineno = lines[0][0] if lines else 1
        raise FormatError(path, lineno, "expected a 'dim <n>' header")
    lineno, header = lines[0]
    try:
        dim = int(header.split()[1])
    except (IndexError, ValueError):
        raise FormatError(path, lineno, "malformed 'dim' header") from None
    adj_spec = None
    split = None
    points = []
    for lineno, line in lines[1:]:
        fields = line.split()
        if fields[0] == "adj":
            try:
                adj_spec = parse_adjacency(line[len("adj") :].strip())
            except ValueError as exc:
                raise FormatError(path, lineno, str(exc)) from None
            continue
        if fields[0] == "split":
            try:
                split = tuple(int(f) for f in fields[1:])
            except ValueError:
                raise FormatError(path, lineno, "split entries must be integers") from None
            if sum(split) != dim:
                raise FormatError(path, lineno, f"split {list(split)} does not sum to dim {dim}")
            continue
        try:
            point = tuple(int(f) for f in fields)
        except ValueError:
            raise FormatError(path, lineno, f"not an integer point: {line!r}") from None
        if len(point) != dim:
            raise FormatError(path, lineno, f"point has {len(point)} coordinates, expected {dim}")
        points.append(point)
    if not points:
        raise FormatError(path, lines[-1][0], "image file lists no points")
    return LoadedImage(DigitalImage(points), adj_spec, split)


def save_image(
    path: str,
    image: DigitalImage,
    adj_spec: AdjacencySpec | str | None = None,
    split: tuple[int, ...] | None = None,
) -> None:
    lines = [f"dim {image.dim}"]
    if adj_spec is not None:
        spec = parse_adjacency(adj_spec) if isinstance(adj_spec, str) else adj_spec
        lines.append(f"adj {print_adjacency(spec)}")
    if split is not None:
        lines.append("split " + " ".join(str(s) for s in split))
    for p in image:
        lines.append(" ".join(str(c) for c in p))
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def _parse_point(fields: list[str], path: str, lineno: int) -> Point:
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise FormatError(path, lineno, f"not an integer point: {' '.join(fields)!r}") from None


def _load_map_header(path: str, kind: str):
    lines = _content_lines(path)
    if not lines or lines[0][1] != kind:
        lineno = lines[0][0] if lines else 1
        raise FormatError(path, lineno, f"expected a {kind!r} header")
    fields = {}
    body_start = 1
    for lineno, line in lines[1:]:
        key = line.split(None, 1)[0]
        if key in ("dom", "cod", "dom_adj", "cod_adj"):
            if key in fields:
                raise FormatError(path, lineno, f"duplicate {key!r} line")
            fields[key] = (lineno, line[len(key) :].strip())
            body_start += 1
        else:
            break
    for key in ("dom", "cod", "dom_adj", "cod_adj"):
        if key not in fields:
            raise FormatError(path, lines[0][0], f"missing {key!r} line")
    base = os.path.dirname(os.path.abspath(path))
    dom = load_image(os.path.join(base, fields["dom"][1]))
    cod = load_image(os.path.join(base, fields["cod"][1]))

    def oracle(which: str, loaded: LoadedImage) -> Adjacency:
        lineno, text = fields[which]
        try:
            return loaded.oracle(parse_adjacency(text))
        except ValueError as exc:
            raise FormatError(path, lineno, str(exc)) from None

    dom_adj = oracle("dom_adj", dom)
    cod_adj = oracle("cod_adj", cod)
    return lines[body_start:], dom.image, cod.image, dom_adj, cod_adj


def load_map(path: str) -> DigitalMap:
    body, dom, cod, dom_adj, cod_adj = _load_map_header(path, "map")
    table = {}
    for lineno, line in body:
        if "->" not in line:
            raise FormatError(path, lineno, "expected 'x ... -> y ...'")
        left, right = line.split("->", 1)
        x = _parse_point(left.split(), path, lineno)
        y = _parse_point(right.split(), path, lineno)
        if x in table:
            raise FormatError(path, lineno, f"duplicate entry for {format_point(x)}")
        table[x] = y
    try:
        return DigitalMap(dom, cod, table, dom_adj, cod_adj)
    except ValueError as exc:
        raise FormatError(path, body[-1][0] if body else 1, str(exc)) from None


def save_map(path: str, f: DigitalMap, dom_file: str, cod_file: str) -> None:
    lines = [
        "map",
        f"dom {dom_file}",
        f"cod {cod_file}",
        f"dom_adj {print_adjacency(f.dom_adj.spec)}",
        f"cod_adj {print_adjacency(f.cod_adj.spec)}",
    ]
    for x in f.domain:
        lines.append(
            " ".join(str(c) for c in x) + " -> " + " ".join(str(c) for c in f.table[x])
        )
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def load_multimap(path: str) -> MultiMap:
    body, dom, cod, dom_adj, cod_adj = _load_map_header(path, "multimap")
    table = {}
    for lineno, line in body:
        if "->" not in line:
            raise FormatError(path, lineno, "expected 'x ... -> { y ; ... }'")
        left, right = line.split("->", 1)
        x = _parse_point(left.split(), path, lineno)
        right = right.strip()
        if not (right.startswith("{") and right.endswith("}")):
            raise FormatError(path, lineno, "value set must be wrapped in { }")
        values = []
        for chunk in right[1:-1].split(";"):
            chunk = chunk.strip()
            if chunk:
                values.append(_parse_point(chunk.split(), path, lineno))
        if not values:
            raise FormatError(path, lineno, f"empty value set for {format_point(x)}")
        if x in table:
            raise FormatError(path, lineno, f"duplicate entry for {format_point(x)}")
        table[x] = values
    try:
        return MultiMap(dom, cod, table, dom_adj, cod_adj)
    except ValueError as exc:
        raise FormatError(path, body[-1][0] if body else 1, str(exc)) from None


def save_multimap(path: str, F: MultiMap, dom_file: str, cod_file: str) -> None:
    lines = [
        "multimap",
        f"dom {dom_file}",
        f"cod {cod_file}",
        f"dom_adj {print_adjacency(F.dom_adj.spec)}",
        f"cod_adj {print_adjacency(F.cod_adj.spec)}",
    ]
    for x in F.domain:
        values = " ; ".join(" ".join(str(c) for c in v) for v in sorted(F.table[x]))
        lines.append(" ".join(str(c) for c in x) + " -> { " + values + " }")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def save_witness(path: str, w: HomotopyWitness) -> None:
    lines = [f"homotopy m={w.m}"]
    for t in range(w.m + 1):
        for x in w.f.domain:
            lines.append(
                f"{t} "
                + " ".join(str(c) for c in x)
                + " -> "
                + " ".join(str(c) for c in w.table[(x, t)])
            )
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def load_witness(path: str, f: DigitalMap, g: DigitalMap) -> HomotopyWitness:
    lines = _content_lines(path)
    if not lines or not lines[0][1].startswith("homotopy m="):
        lineno = lines[0][0] if lines else 1
        raise FormatError(path, lineno, "expected a 'homotopy m=<m>' header")
    lineno, header = lines[0]
    try:
        m = int(header.split("=", 1)[1])
    except ValueError:
        raise FormatError(path, lineno, "malformed homotopy header") from None
    table = {}
    for lineno, line in lines[1:]:
        if "->" not in line:
            raise FormatError(path, lineno, "expected 't x ... -> y ...'")
        left, right = line.split("->", 1)
        fields = left.split()
        try:
            t = int(fields[0])
        except (IndexError, ValueError):
            raise FormatError(path, lineno, "line must start with the time step") from None
        x = _parse_point(fields[1:], path, lineno)
        y = _parse_point(right.split(), path, lineno)
        table[(x, t)] = y
    try:
        return HomotopyWitness(f, g, m, table)
    except ValueError as exc:
        raise FormatError(path, lines[-1][0], str(exc)) from None


def to_dot(image: DigitalImage, adj: Adjacency) -> str:
    """Undirected DOT graph; nodes labeled (x1,...,xn), no layout hints."""
    lines = ["graph {"]
    for p in image:
        lines.append(f'  "{format_point(p)}";')
    for p, q in adjacent_pairs(image, adj):
        lines.append(f'  "{format_point(p)}" -- "{format_point(q)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
