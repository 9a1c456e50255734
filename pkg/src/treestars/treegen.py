"""Free-tree enumeration and the counterexample search over it.

Trees come from canonical level sequences rooted at a center (the
Wright-Richmond-Odlyzko-McKay successor scheme over Beyer-Hedetniemi rooted
tree generation), so each isomorphism class appears exactly once.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator

from . import kernels
from .counting import verdicts_from_matrix
from .graph import Graph, canonical_code, format_edge_list

FREE_TREE_CAP = 18

# Internally depths are 0-based (root at depth 0); LevelSequence is 1-based.


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor of a rooted level sequence."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """(first subtree of the root, re-rooted; the tree without it)."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    return [d - 1 for d in seq[1:m]], [0] + seq[m:]


def _canonical_or_jump(seq: list[int]) -> list[int] | None:
    """Return ``seq`` if it encodes a free tree rooted at its center in
    canonical position, otherwise the next candidate worth examining."""
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return seq
    p = len(left)
    nxt = _next_rooted(seq, p)
    if nxt is not None and seq[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences (root depth 1) of the free trees on ``n`` vertices."""
    if not 2 <= n <= FREE_TREE_CAP:
        raise ValueError(f"free tree enumeration needs 2 <= n <= {FREE_TREE_CAP}, got {n}")
    # Path on n vertices rooted at its center.
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _canonical_or_jump(seq)
        if seq is None:
            break
        yield tuple(d + 1 for d in seq)
        seq = _next_rooted(seq)


def level_sequence_to_graph(seq: Iterable[int]) -> Graph:
    """Tree on preorder ids; each vertex attaches to the last vertex one level up."""
    edges = []
    stack: list[int] = []
    for i, d in enumerate(seq):
        while stack and len(stack) >= d:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph(i + 1, edges)


def free_trees(n: int) -> Iterator[Graph]:
    """Each isomorphism class of trees on ``n`` vertices, exactly once."""
    for seq in level_sequences(n):
        yield level_sequence_to_graph(seq)


# -- Pruefer oracle -------------------------------------------------------


def pruefer_decode(seq: list[int], n: int) -> Graph:
    """Labelled tree on ``0..n-1`` from a Pruefer sequence of length ``n - 2``."""
    import heapq

    degree = [1] * n
    for v in seq:
        degree[v] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for v in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Graph(n, edges)


def _multiset_perms(counts: list[int], labels: list[int], length: int) -> Iterator[list[int]]:
    out: list[int] = []

    def rec() -> Iterator[list[int]]:
        if len(out) == length:
            yield list(out)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                out.append(labels[i])
                yield from rec()
                out.pop()
                counts[i] += 1

    return rec()


def _nonincreasing(total: int, parts: int, cap: int) -> Iterator[list[int]]:
    if parts == 0:
        if total == 0:
            yield []
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _nonincreasing(total - first, parts - 1, first):
            yield [first] + rest


def pruefer_sequences(n: int, reduced: bool = True) -> Iterator[list[int]]:
    """Pruefer sequences covering every isomorphism class of ``n``-vertex trees.

    With ``reduced``, labels 0 and 1 are leaves and the occurrence counts of
    labels ``2..n-1`` are nonincreasing. Every class has such a labelling
    (put two leaves first, order the rest by degree), so coverage is complete.
    """
    if n < 2:
        raise ValueError("trees need n >= 2")
    if n == 2:
        yield []
        return
    if not reduced:
        from itertools import product

        for seq in product(range(n), repeat=n - 2):
            yield list(seq)
        return
    labels = list(range(2, n))
    for counts in _nonincreasing(n - 2, n - 2, n - 2):
        yield from _multiset_perms(list(counts), labels, n - 2)


def pruefer_tree_classes(n: int, reduced: bool = True) -> dict[bytes, Graph]:
    """One representative per canonical code among all decoded sequences."""
    classes: dict[bytes, Graph] = {}
    for seq in pruefer_sequences(n, reduced):
        g = pruefer_decode(seq, n)
        classes.setdefault(canonical_code(g), g)
    return classes


# -- search ---------------------------------------------------------------


@dataclass
class SearchReport:
    n_range: list[int]
    r_range: list[int]
    trees_examined: dict[int, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        d = {
            "n_range": self.n_range,
            "r_range": self.r_range,
            "trees_examined": {str(n): c for n, c in sorted(self.trees_examined.items())},
            "total_trees": sum(self.trees_examined.values()),
            "counterexamples": self.counterexamples,
        }
        if timing:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d


def level_sequence_csr(seq: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """CSR adjacency of the tree encoded by ``seq``, without building a Graph."""
    n = len(seq)
    nbrs: list[list[int]] = [[] for _ in range(n)]
    stack: list[int] = []
    for i, d in enumerate(seq):
        del stack[d - 1 :]
        if stack:
            nbrs[stack[-1]].append(i)
            nbrs[i].append(stack[-1])
        stack.append(i)
    indptr = [0]
    indices: list[int] = []
    for row in nbrs:
        indices.extend(sorted(row))
        indptr.append(len(indices))
    return indptr, indices


def _check_batch(args: tuple[int, int, list[tuple[int, ...]], list[int]]) -> list[dict]:
    n, start, seqs, rs = args
    found = []
    for offset, seq in enumerate(seqs):
        indptr, indices = level_sequence_csr(seq)
        leafset = {v for v in range(n) if indptr[v + 1] - indptr[v] == 1}
        m = kernels.star_matrix(indptr, indices)
        g = None
        for v in verdicts_from_matrix(m, leafset, rs):
            if not v.holds:
                g = g or level_sequence_to_graph(seq)
                found.append(
                    {
                        "n": n,
                        "index": start + offset,
                        "r": v.r,
                        "edges": format_edge_list(g),
                        "canonical_code": canonical_code(g).decode(),
                        "max_count": str(v.max_count),
                        "argmax_vertices": sorted(v.argmax_vertices),
                        "max_leaf_count": str(v.leaf_max),
                    }
                )
    return found


def _batches(n: int, rs: list[int], size: int) -> Iterator[tuple[int, int, list[tuple[int, ...]], list[int]]]:
    it = level_sequences(n)
    start = 0
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield n, start, chunk, rs
        start += len(chunk)


def search_counterexamples(
    n_range: Iterable[int],
    r_range: Iterable[int],
    workers: int = 1,
    batch_size: int = 256,
) -> SearchReport:
    """Trees on which no leaf attains the maximum star size, for each ``r``.

    Output order is by ``n``, then generation order, then ``r``, whatever
    the worker count.
    """
    ns = list(n_range)
    rs = sorted(set(r_range))
    for n in ns:
        if not 2 <= n <= FREE_TREE_CAP:
            raise ValueError(f"n must lie in [2, {FREE_TREE_CAP}], got {n}")
    if not rs or rs[0] < 1:
        raise ValueError("r range must be nonempty with r >= 1")
    report = SearchReport(n_range=ns, r_range=rs)
    t0 = time.perf_counter()
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in ns:
            jobs = list(_batches(n, rs, batch_size))
            report.trees_examined[n] = sum(len(j[2]) for j in jobs)
            results = pool.map(_check_batch, jobs) if pool else map(_check_batch, jobs)
            for found in results:
                report.counterexamples.extend(found)
    finally:
        if pool:
            pool.shutdown()
    report.elapsed = time.perf_counter() - t0
    return report


def verify_hk_small(n_max: int, r_max: int = 4, workers: int = 1) -> SearchReport:
    """Exhaustive check of the leaf-star property for ``r <= r_max`` on all
    trees with up to ``n_max`` vertices. A correct run has no counterexamples."""
    return search_counterexamples(range(2, n_max + 1), range(1, r_max + 1), workers=workers)
