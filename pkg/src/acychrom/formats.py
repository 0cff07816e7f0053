"""Line-oriented text formats: ``.trn``, ``.dg``, ``.ug`` and ``.ord``.

    TRN <n>        then n rows over {0,1,-}; row i col j is '1' iff i -> j
    DG <n> <m>     then m lines "u v" for edge u -> v
    UG <n> <m>     then m lines "u v" with u < v
    ORD <n>        then one line with a permutation of 0..n-1
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .core import LinearOrder, OrientedGraph, Tournament, UndirectedGraph
from .errors import AntisymmetryViolation, FormatError, NotAPermutation

GraphObject = Union[Tournament, OrientedGraph, UndirectedGraph, LinearOrder]

KINDS = {"TRN": "tournament", "DG": "digraph", "UG": "undirected", "ORD": "order"}


def _int(token: str, what: str) -> int:
    if not token.isdigit():
        raise FormatError(f"{what}: expected a non-negative integer, got {token!r}")
    return int(token)


def _header(lines: list[str], tag: str, arity: int) -> list[int]:
    if not lines:
        raise FormatError("empty input")
    parts = lines[0].split()
    if not parts or parts[0] != tag or len(parts) != arity + 1:
        raise FormatError(f"bad header {lines[0]!r}, expected {tag} with {arity} field(s)")
    return [_int(p, "header") for p in parts[1:]]


def _body(lines: list[str], count: int) -> list[str]:
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != count:
        raise FormatError(f"expected {count} body line(s), got {len(body)}")
    return body


def _edge_lines(body: list[str], n: int) -> list[tuple[int, int]]:
    edges = []
    for k, line in enumerate(body, start=2):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {k}: expected 'u v', got {line!r}")
        u, v = (_int(p, f"line {k}") for p in parts)
        if u >= n or v >= n:
            raise FormatError(f"line {k}: vertex out of range 0..{n - 1}")
        edges.append((u, v))
    return edges


def detect_kind(text: str) -> str:
    head = text.split(None, 1)[0] if text.strip() else ""
    if head not in KINDS:
        raise FormatError(f"unknown header tag {head!r}")
    return KINDS[head]


def parse_graph_file(text: str, kind: str | None = None) -> GraphObject:
    """Parse and validate one object; ``kind=None`` detects it from the header."""
    kind = kind or detect_kind(text)
    lines = text.split("\n")
    if kind == "tournament":
        return _parse_trn(lines)
    if kind == "digraph":
        (n, m) = _header(lines, "DG", 2)
        edges = _edge_lines(_body(lines, m), n)
        seen = set()
        for u, v in edges:
            if u == v:
                raise AntisymmetryViolation(f"self-loop at {u}")
            if (u, v) in seen:
                raise FormatError(f"duplicate edge {u} {v}")
            if (v, u) in seen:
                raise AntisymmetryViolation(f"antiparallel edges {u} {v}")
            seen.add((u, v))
        return OrientedGraph.from_edges(n, edges)
    if kind == "undirected":
        (n, m) = _header(lines, "UG", 2)
        edges = _edge_lines(_body(lines, m), n)
        for u, v in edges:
            if not u < v:
                raise FormatError(f"undirected edge {u} {v} must satisfy u < v")
        return UndirectedGraph.from_edges(n, edges)
    if kind == "order":
        (n,) = _header(lines, "ORD", 1)
        body = _body(lines, 1 if n else 0)
        ids = [_int(t, "order") for t in body[0].split()] if n else []
        if len(ids) != n:
            raise NotAPermutation(f"expected {n} ids, got {len(ids)}")
        return LinearOrder(tuple(ids))
    raise ValueError(f"unknown kind {kind!r}")


def _parse_trn(lines: list[str]) -> Tournament:
    (n,) = _header(lines, "TRN", 1)
    rows = _body(lines, n)
    out = [0] * n
    for i, row in enumerate(rows):
        if len(row) != n:
            raise FormatError(f"row {i} has length {len(row)}, expected {n}")
        for j, ch in enumerate(row):
            if i == j:
                if ch != "-":
                    raise AntisymmetryViolation(f"diagonal entry ({i},{i}) must be '-'")
            elif ch == "1":
                out[i] |= 1 << j
            elif ch == "-":
                raise AntisymmetryViolation(f"off-diagonal '-' at ({i},{j})")
            elif ch != "0":
                raise FormatError(f"bad character {ch!r} at ({i},{j})")
    return Tournament(n, tuple(out))


def serialize_graph_file(obj: GraphObject) -> str:
    if isinstance(obj, Tournament):
        rows = []
        for i in range(obj.n):
            rows.append("".join("-" if i == j else "1" if obj.out[i] >> j & 1 else "0" for j in range(obj.n)))
        return f"TRN {obj.n}\n" + "".join(r + "\n" for r in rows)
    if isinstance(obj, OrientedGraph):
        edges = obj.edges()
        return f"DG {obj.n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges)
    if isinstance(obj, UndirectedGraph):
        edges = obj.edges()
        return f"UG {obj.n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges)
    if isinstance(obj, LinearOrder):
        body = " ".join(map(str, obj.order)) + "\n" if len(obj) else ""
        return f"ORD {len(obj)}\n" + body
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def read_graph_file(path: str | Path, kind: str | None = None) -> GraphObject:
    return parse_graph_file(Path(path).read_text(encoding="ascii"), kind)


def write_graph_file(path: str | Path, obj: GraphObject) -> None:
    Path(path).write_text(serialize_graph_file(obj), encoding="ascii", newline="\n")

