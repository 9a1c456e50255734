"""Undirected simple graphs on dense integer ids, plus forest utilities.

Vertices are ``0..n-1``. Graphs are immutable once built; every function here
is pure.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable


class GraphError(ValueError):
    """Structural problem with a graph (self-loop, duplicate edge, bad id)."""


class ParseError(GraphError):
    """Malformed edge-list text."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class UnsupportedInput(GraphError):
    """Operation is only defined for a restricted class of graphs."""


class Graph:
    """An undirected simple graph with vertices ``0..n-1``.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> sorted(g.neighbors(1))
    [0, 2]
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e[0]}-{e[1]}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[tuple[int, int]] = frozenset(seen)
        self._adj = tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


_HEADER = re.compile(r"^n\s+(\d+)$")
_EDGE = re.compile(r"^(\d+)\s+(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list interchange format.

    One edge ``u v`` per line, ``#`` starts a comment, and an optional
    ``n <count>`` line raises the vertex count above ``1 + max id``.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    declared = 0
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            declared = max(declared, int(m.group(1)))
            continue
        m = _EDGE.match(line)
        if not m:
            raise ParseError(lineno, f"expected two nonnegative integers, got {raw.strip()!r}")
        u, v = int(m.group(1)), int(m.group(2))
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphError(f"line {lineno}: duplicate edge {e[0]}-{e[1]}")
        seen.add(e)
        edges.append(e)
        max_id = max(max_id, u, v)
    n = max(declared, max_id + 1)
    if n == 0:
        raise ParseError(0, "no vertices: empty edge list")
    return Graph(n, edges)


def format_edge_list(g: Graph, header: bool | None = None) -> str:
    """Serialize ``g``; the ``n`` header is written whenever it is needed to
    round-trip isolated trailing vertices (or when ``header`` forces it)."""
    max_id = max((v for e in g.edges for v in e), default=-1)
    if header is None:
        header = max_id + 1 != g.n
    lines = [f"n {g.n}"] if header else []
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def components(g: Graph) -> list[list[int]]:
    comp: list[list[int]] = []
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        part = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    part.append(w)
                    queue.append(w)
        comp.append(part)
    return comp


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    return len(g.edges) == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    """Trees need at least two vertices; a lone vertex is a forest only."""
    return g.n >= 2 and len(g.edges) == g.n - 1 and is_connected(g)


def leaves(g: Graph) -> set[int]:
    return {v for v in range(g.n) if g.degree(v) == 1}


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``; returns it with the old->new id map.

    New ids preserve the relative order of the old ones.
    """
    kept = sorted(set(keep))
    remap = {old: new for new, old in enumerate(kept)}
    edges = [(remap[u], remap[v]) for u, v in g.edges if u in remap and v in remap]
    return Graph(len(kept), edges), remap


def delete_closed_neighborhood(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """``G - N[v]`` together with the old->new id map of surviving vertices."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    gone = g.neighbors(v) | {v}
    return induced_subgraph(g, (u for u in range(g.n) if u not in gone))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``u`` renamed to ``perm[u]``."""
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges))


# -- canonical forms ------------------------------------------------------


def tree_centers(g: Graph, vertices: list[int] | None = None) -> list[int]:
    """Center(s) of a tree component by repeated leaf stripping."""
    verts = list(range(g.n)) if vertices is None else vertices
    if len(verts) <= 2:
        return sorted(verts)
    deg = {v: g.degree(v) for v in verts}
    layer = [v for v in verts if deg[v] <= 1]
    remaining = len(verts)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for w in g.neighbors(u):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(g: Graph, root: int, blocked: int = -1) -> str:
    # Iterative postorder to stay clear of the recursion limit on long paths.
    parent = {root: blocked}
    order = [root]
    for u in order:
        for w in g.neighbors(u):
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    code: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(code.pop(w) for w in g.neighbors(u) if w != parent[u])
        code[u] = "(" + "".join(kids) + ")"
    return code[root]


def _tree_code(g: Graph, comp: list[int]) -> str:
    centers = tree_centers(g, comp)
    if len(centers) == 1:
        return _rooted_code(g, centers[0])
    a, b = centers
    # Root at the central edge: unordered pair of the two half-trees.
    halves = sorted((_rooted_code(g, a, b), _rooted_code(g, b, a)))
    return "[" + "".join(halves) + "]"


def canonical_code(g: Graph) -> bytes:
    """AHU canonical code: equal for two forests iff they are isomorphic."""
    if not is_forest(g):
        raise UnsupportedInput("canonical_code is defined for forests only")
    codes = sorted(_tree_code(g, comp) for comp in components(g))
    return "".join(codes).encode("ascii")


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism by trying every bijection; tiny graphs only (test oracle)."""
    from itertools import permutations

    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    return any(relabel(g, list(p)).edges == h.edges for p in permutations(range(g.n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves_: int) -> Graph:
    return Graph(leaves_ + 1, ((0, i) for i in range(1, leaves_ + 1)))


def edgeless_graph(n: int) -> Graph:
    return Graph(n)

