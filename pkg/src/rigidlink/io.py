"""Reading and writing graph documents.

Two equivalent formats are accepted:

* line-oriented text::

      # two triangles sharing an edge
      n 4
      kind graph          (optional; "multigraph" allows repeated pairs)
      names a b c d       (optional; one unique name per vertex)
      0 1
      1 2
      ...

* a JSON object ``{"kind": ..., "n": ..., "edges": [[u, v], ...], "names": [...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidArgumentError, ParseError
from .graph import Graph, Multigraph, norm_edge

KINDS = ("graph", "multigraph")


@dataclass(frozen=True)
class GraphDocument:
    kind: str
    n: int
    edges: tuple[tuple[int, int], ...]
    names: tuple[str, ...] | None = field(default=None)

    def canonical(self) -> GraphDocument:
        """Edges as sorted pairs; for simple graphs also in sorted order."""
        edges = tuple(norm_edge(u, v) for u, v in self.edges)
        if self.kind == "graph":
            edges = tuple(sorted(edges))
        return GraphDocument(self.kind, self.n, edges, self.names)

    def to_graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def to_multigraph(self) -> Multigraph:
        return Multigraph(self.n, self.edges)

    def vertex(self, token: str | int) -> int:
        """Resolve a vertex given by name or by integer id."""
        if self.names is not None and str(token) in self.names:
            return self.names.index(str(token))
        try:
            v = int(token)
        except (TypeError, ValueError):
            raise InvalidArgumentError(f"unknown vertex {token!r}") from None
        if not 0 <= v < self.n:
            raise InvalidArgumentError(f"vertex {v} is not in 0..{self.n - 1}")
        return v

    def name(self, v: int) -> str | int:
        return self.names[v] if self.names is not None else v

    def to_json(self) -> str:
        doc = {"kind": self.kind, "n": self.n, "edges": [list(e) for e in self.edges]}
        if self.names is not None:
            doc["names"] = list(self.names)
        return json.dumps(doc, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"n {self.n}", f"kind {self.kind}"]
        if self.names is not None:
            lines.append("names " + " ".join(self.names))
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def _validate(kind, n, edges, names, where=lambda i: (1, 1)) -> GraphDocument:
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", *where(None))
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("n must be a non-negative integer", *where(None))
    seen = set()
    for i, (u, v) in enumerate(edges):
        if u == v:
            raise ParseError(f"loop at vertex {u}", *where(i))
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", *where(i))
        e = norm_edge(u, v)
        if kind == "graph" and e in seen:
            raise ParseError(f"parallel edge {e} in a simple graph", *where(i))
        seen.add(e)
    if names is not None:
        names = tuple(str(x) for x in names)
        if len(names) != n or len(set(names)) != n:
            raise ParseError("names must list n unique vertex names", *where(None))
    return GraphDocument(kind, n, tuple(edges), names)


def _parse_json(text: str) -> GraphDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", 1, 1)
    raw = doc.get("edges", [])
    edges = []
    for e in raw if isinstance(raw, list) else [None]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"edge {e!r} is not a pair of integers", 1, 1)
        edges.append((e[0], e[1]))
    return _validate(doc.get("kind", "graph"), doc.get("n"), edges, doc.get("names"))


def _parse_text(text: str) -> GraphDocument:
    n = None
    kind = "graph"
    names = None
    edges = []
    where = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        tokens = body.split()
        if not tokens:
            continue
        col = body.index(tokens[0]) + 1
        head = tokens[0]
        if head == "n":
            if n is not None or edges or len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError("malformed 'n <count>' header", lineno, col)
            n = int(tokens[1])
        elif head == "kind":
            if len(tokens) != 2:
                raise ParseError("malformed 'kind' line", lineno, col)
            kind = tokens[1]
            if kind not in KINDS:
                raise ParseError(f"unknown kind {kind!r}", lineno, body.index(kind, col) + 1)
        elif head == "names":
            names = tokens[1:]
        else:
            if n is None:
                raise ParseError("edge before the 'n <count>' header", lineno, col)
            if len(tokens) != 2:
                raise ParseError("expected 'u v'", lineno, col)
            pair = []
            for tok in tokens:
                if not tok.lstrip("-").isdigit():
                    raise ParseError(f"{tok!r} is not a vertex id", lineno, body.index(tok) + 1)
                pair.append(int(tok))
            edges.append(tuple(pair))
            where.append((lineno, col))
    if n is None:
        raise ParseError("missing 'n <count>' header", 1, 1)
    return _validate(kind, n, edges, names, lambda i: where[i] if i is not None else (1, 1))


def parse_document(text: str) -> GraphDocument:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def load(path: str | Path) -> GraphDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", 0, 0) from None
    return parse_document(text)
