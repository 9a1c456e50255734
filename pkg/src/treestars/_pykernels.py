"""Pure-Python forest DP kernels (exact, arbitrary precision).

Same contract as the compiled ``_ckernels`` module. Graphs arrive in CSR form
(``indptr``, ``indices``); the caller guarantees the alive part is a forest.
"""

from __future__ import annotations

from typing import Sequence


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def forest_counts(
    indptr: Sequence[int], indices: Sequence[int], alive: Sequence[int] | None = None
) -> list[int]:
    """Independent-set counts by size on the alive part of a forest.

    Returns a list of length ``n + 1`` (trailing zeros past the independence
    number).
    """
    n = len(indptr) - 1
    if alive is None:
        alive = [1] * n
    total = [1]
    visited = [False] * n
    parent = [-1] * n
    inc: list[list[int] | None] = [None] * n
    exc: list[list[int] | None] = [None] * n
    for root in range(n):
        if not alive[root] or visited[root]:
            continue
        visited[root] = True
        order = [root]
        parent[root] = -1
        for u in order:
            for t in range(indptr[u], indptr[u + 1]):
                w = indices[t]
                if alive[w] and not visited[w]:
                    visited[w] = True
                    parent[w] = u
                    order.append(w)
        for u in reversed(order):
            iu = [0, 1]
            eu = [1]
            for t in range(indptr[u], indptr[u + 1]):
                c = indices[t]
                if alive[c] and parent[c] == u and c != parent[u]:
                    ic, ec = inc[c], exc[c]
                    iu = _convolve(iu, ec)
                    eu = _convolve(eu, _add(ic, ec))
                    inc[c] = exc[c] = None
            inc[u], exc[u] = iu, eu
        total = _convolve(total, _add(inc[root], exc[root]))
        inc[root] = exc[root] = None
    return total + [0] * (n + 1 - len(total))


def star_matrix(indptr: Sequence[int], indices: Sequence[int]) -> list[list[int]]:
    """Row ``v``, column ``r``: number of independent ``r``-sets containing ``v``.

    Uses ``|I(v, r)| = N_{r-1}(G - N[v])``; column 0 is zero.
    """
    n = len(indptr) - 1
    rows = []
    for v in range(n):
        alive = [1] * n
        alive[v] = 0
        for t in range(indptr[v], indptr[v + 1]):
            alive[indices[t]] = 0
        counts = forest_counts(indptr, indices, alive)
        rows.append([0] + counts[:n])
    return rows
