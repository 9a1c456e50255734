"""Exact independent-set counting: size vectors, star tables, mu, verdicts.

All counts are Python ints. Forests go through the DP kernels in
:mod:`treestars.kernels`; anything with a cycle falls back to enumeration
under a hard vertex cap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .graph import Graph, GraphError, delete_closed_neighborhood, is_forest, is_tree, leaves

BRUTE_FORCE_CAP = 25
MU_CAP_FOREST = 40
MU_CAP_GENERAL = 25


class CapExceeded(ValueError):
    """Refusal to run an exponential routine above its vertex cap."""


class NotATree(GraphError):
    pass


def _csr(g: Graph) -> tuple[list[int], list[int]]:
    indptr = [0]
    indices: list[int] = []
    for v in range(g.n):
        indices.extend(sorted(g.neighbors(v)))
        indptr.append(len(indices))
    return indptr, indices


def brute_force_independence_counts(g: Graph, cap: int = BRUTE_FORCE_CAP) -> list[int]:
    """Counts of independent sets by size, by explicit enumeration."""
    if g.n > cap:
        raise CapExceeded(f"brute-force enumeration capped at n <= {cap}, got n={g.n}")
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    counts = [0] * (g.n + 1)

    # ``avail`` holds the vertices above the last pick that are still free.
    def walk(start: int, avail: int, size: int) -> None:
        counts[size] += 1
        for v in range(start, g.n):
            if avail >> v & 1:
                walk(v + 1, avail & ~nbr[v], size + 1)

    walk(0, (1 << g.n) - 1, 0)
    return counts


def independence_counts(g: Graph) -> list[int]:
    """``counts[s]`` = number of independent ``s``-sets, for ``s = 0..n``."""
    if not is_forest(g):
        return brute_force_independence_counts(g)
    return kernels.forest_counts(*_csr(g))


def star_count(g: Graph, v: int, r: int) -> int:
    """Number of independent ``r``-sets containing ``v`` (0 for ``r = 0``)."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    if r <= 0:
        return 0
    rest, _ = delete_closed_neighborhood(g, v)
    counts = independence_counts(rest)
    return counts[r - 1] if r - 1 < len(counts) else 0


def star_matrix(g: Graph) -> list[list[int]]:
    """``m[v][r]`` = star count at ``v`` for size ``r``, ``r = 0..n``."""
    if is_forest(g):
        return kernels.star_matrix(*_csr(g))
    rows = []
    for v in range(g.n):
        rest, _ = delete_closed_neighborhood(g, v)
        counts = independence_counts(rest)
        rows.append([0] + counts + [0] * (g.n - len(counts)))
    return rows


@dataclass(frozen=True)
class StarTable:
    r: int
    counts: dict[int, int]

    def to_json(self) -> dict:
        return {"r": self.r, "counts": {str(v): str(c) for v, c in sorted(self.counts.items())}}


def star_table(g: Graph, r: int) -> StarTable:
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if r == 0:
        return StarTable(0, {v: 0 for v in range(g.n)})
    if r > g.n:
        return StarTable(r, {v: 0 for v in range(g.n)})
    m = star_matrix(g)
    return StarTable(r, {v: m[v][r] for v in range(g.n)})


def max_nonempty_star_size(g: Graph, v: int) -> int:
    """Largest ``s`` with a nonempty star at ``v``: one plus alpha(G - N[v])."""
    rest, _ = delete_closed_neighborhood(g, v)
    counts = independence_counts(rest)
    return max(s for s, c in enumerate(counts) if c) + 1


def mu(g: Graph) -> int:
    """Size of a smallest maximal independent set (independent domination).

    Branch and bound: take an undominated vertex with the fewest free
    vertices in its closed neighborhood and branch on which of them joins.
    Every maximal independent set meets every closed neighborhood.
    """
    cap = MU_CAP_FOREST if is_forest(g) else MU_CAP_GENERAL
    if g.n > cap:
        raise CapExceeded(f"exact mu capped at n <= {cap} for this graph class, got n={g.n}")
    if g.n == 0:
        return 0
    closed = [1 << v for v in range(g.n)]
    for u, v in g.edges:
        closed[u] |= 1 << v
        closed[v] |= 1 << u
    maxdeg1 = 1 + max(g.degree(v) for v in range(g.n))
    best = g.n

    def search(dominated: int, size: int) -> None:
        nonlocal best
        free = ~dominated & ((1 << g.n) - 1)
        if not free:
            best = min(best, size)
            return
        # each new member dominates at most maxdeg1 vertices
        if size + -(-free.bit_count() // maxdeg1) >= best:
            return
        pivot_opts = None
        u = free
        while u:
            low = u & -u
            v = low.bit_length() - 1
            opts = closed[v] & free
            if pivot_opts is None or opts.bit_count() < pivot_opts.bit_count():
                pivot_opts = opts
                if opts.bit_count() == 1:
                    break
            u ^= low
        while pivot_opts:
            low = pivot_opts & -pivot_opts
            w = low.bit_length() - 1
            search(dominated | closed[w], size + 1)
            pivot_opts ^= low

    search(0, 0)
    return best


@dataclass(frozen=True)
class ConjectureVerdict:
    r: int
    holds: bool
    max_count: int
    argmax_vertices: frozenset[int]
    witness_leaf: int | None
    leaf_max: int = field(default=0)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "holds": self.holds,
            "max_count": str(self.max_count),
            "argmax_vertices": sorted(self.argmax_vertices),
            "witness_leaf": self.witness_leaf,
            "leaf_max": str(self.leaf_max),
        }


def _verdict_from_row(r: int, column: list[int], leafset: set[int]) -> ConjectureVerdict:
    top = max(column)
    argmax = frozenset(v for v, c in enumerate(column) if c == top)
    hits = sorted(argmax & leafset)
    return ConjectureVerdict(
        r=r,
        holds=bool(hits),
        max_count=top,
        argmax_vertices=argmax,
        witness_leaf=hits[0] if hits else None,
        leaf_max=max(column[z] for z in leafset),
    )


def verdicts_from_matrix(m: list[list[int]], leafset: set[int], rs: Iterable[int]) -> list[ConjectureVerdict]:
    out = []
    for r in rs:
        column = [row[r] if r < len(row) else 0 for row in m]
        out.append(_verdict_from_row(r, column, leafset))
    return out


def conjecture_verdicts(g: Graph, rs: Iterable[int]) -> list[ConjectureVerdict]:
    """Verdicts for several ``r`` sharing one star-matrix computation."""
    if not is_tree(g):
        raise NotATree("conjecture_verdict requires a tree")
    rs = list(rs)
    if any(r < 1 for r in rs):
        raise ValueError("r must be >= 1")
    return verdicts_from_matrix(star_matrix(g), leaves(g), rs)


def conjecture_verdict(g: Graph, r: int) -> ConjectureVerdict:
    """Does some leaf attain the maximum star size among independent r-sets?"""
    return conjecture_verdicts(g, [r])[0]


def counts_to_json(counts: list[int]) -> str:
    return json.dumps([str(c) for c in counts])
