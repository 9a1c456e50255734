"""Independent oracles for the test suite. Nothing here calls the DP."""

from collections import Counter
from functools import lru_cache


def tk_edges(k):
    y = [2 + i for i in range(1, 2 * k + 1)]
    z = [2 * k + 2 + i for i in range(1, 2 * k + 1)]
    edges = [(0, 1), (0, 2)]
    edges += [(1, y[i]) for i in range(k)] + [(2, y[i]) for i in range(k, 2 * k)]
    edges += [(y[i], z[i]) for i in range(2 * k)]
    return 4 * k + 3, edges, y, z


def independent_masks(n, edges):
    """Every independent set of the graph as a bitmask (explicit enumeration)."""
    nbr = [0] * n
    for u, v in edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    out = []
    stack = [(0, 0, (1 << n) - 1)]
    while stack:
        start, mask, avail = stack.pop()
        out.append(mask)
        for v in range(start, n):
            if avail >> v & 1:
                stack.append((v + 1, mask | 1 << v, avail & ~nbr[v] & ~(1 << v)))
    return out


@lru_cache(maxsize=None)
def tk_families(k):
    """Per size r, the number of independent r-sets of T_k in each proof family."""
    n, edges, y, z = tk_edges(k)
    bit = lambda v: 1 << v  # noqa: E731
    x0, x1, x2, y1, z1 = bit(0), bit(1), bit(2), bit(y[0]), bit(z[0])
    y_first = sum(bit(v) for v in y[1:k])
    y_second = sum(bit(v) for v in y[k:])
    table = {}
    for m in independent_masks(n, edges):
        r = m.bit_count()
        c = table.setdefault(r, Counter())
        has = lambda b: bool(m & b)  # noqa: E731
        if has(x0):
            c["star_x0"] += 1
        if has(z1):
            c["star_z1"] += 1
        if has(x0) and has(z1):
            c["e"] += 1
        if has(x0) and has(y1):
            c["a1"] += 1
            if m & y_first and m & y_second:
                c["c"] += 1
        if has(x0) and not has(y1) and not has(z1):
            c["a2"] += 1
        if has(z1) and not has(x0):
            key = {(True, False): "b1", (False, True): "b2", (True, True): "b3", (False, False): "b4"}
            c[key[has(x1), has(x2)]] += 1
    return table
