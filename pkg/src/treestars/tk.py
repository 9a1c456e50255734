"""The counterexample trees ``T_k`` and the bookkeeping behind them.

``T_k`` has a root ``x0`` joined to ``x1`` and ``x2``; ``x1`` carries the
pendant paths ``y_i - z_i`` for ``i <= k`` and ``x2`` those for ``i > k``.
Ids are fixed: ``x0, x1, x2 = 0, 1, 2``, ``y_i = 2 + i``, ``z_i = 2k + 2 + i``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .counting import MU_CAP_FOREST, independence_counts, max_nonempty_star_size, mu, star_count, star_matrix
from .graph import Graph, induced_subgraph, is_tree, leaves


@dataclass(frozen=True)
class TkLabels:
    k: int
    x0: int
    x1: int
    x2: int
    y: tuple[int, ...]
    z: tuple[int, ...]

    def to_json(self) -> dict:
        d = asdict(self)
        d["y"], d["z"] = list(self.y), list(self.z)
        return d


def construct_tk(k: int) -> tuple[Graph, TkLabels]:
    if k < 1:
        raise ValueError(f"T_k needs k >= 1, got {k}")
    y = tuple(2 + i for i in range(1, 2 * k + 1))
    z = tuple(2 * k + 2 + i for i in range(1, 2 * k + 1))
    edges = [(0, 1), (0, 2)]
    edges += [(1, y[i]) for i in range(k)]
    edges += [(2, y[i]) for i in range(k, 2 * k)]
    edges += [(y[i], z[i]) for i in range(2 * k)]
    return Graph(4 * k + 3, edges), TkLabels(k, 0, 1, 2, y, z)


def binom(n: int, t: int) -> int:
    """Binomial coefficient, zero whenever ``t < 0`` or ``t > n``."""
    if t < 0 or n < 0 or t > n:
        return 0
    return comb(n, t)


def formula_a(k: int, r: int) -> int:
    """Signed gap ``|A1'| - (|B1'| + |B2'| + |B3'|)`` in closed form.

    Counts the independent ``(r-2)``-sets of the pendant paths off ``y1`` that
    use ``y``-vertices under both ``x1`` and ``x2``, minus two binomials.
    """
    total = 0
    for i in range(1, k):
        for j in range(1, k + 1):
            total += binom(k - 1, i) * binom(k, j) * binom(2 * k - 1 - i - j, r - 2 - i - j)
    return total - binom(2 * k - 1, r - 2) - binom(2 * k - 1, r - 3)


def formula_a_top(k: int) -> int:
    """``formula_a(k, 2k+1)`` with both sums collapsed to powers of two."""
    return (2 ** (k - 1) - 1) * (2**k - 1) - 2 * k


def single_term_bound(k: int, r: int) -> int:
    """Lower bound on ``formula_a`` keeping only the ``i = j = 1`` term."""
    return (k - 1) * k * binom(2 * k - 3, r - 4) - binom(2 * k - 1, r - 2) - binom(2 * k - 1, r - 3)


@dataclass(frozen=True)
class Decomposition:
    k: int
    r: int
    e: int
    a1: int
    a2: int
    b1: int
    b2: int
    b3: int
    b4: int
    c: int
    star_x0: int
    star_z1: int

    @property
    def gap(self) -> int:
        return self.star_x0 - self.star_z1

    def identities(self) -> dict[str, bool]:
        return {
            "x0_split": self.star_x0 == self.e + self.a1 + self.a2,
            "z1_split": self.star_z1 == self.e + self.b1 + self.b2 + self.b3 + self.b4,
            "a2_eq_b4": self.a2 == self.b4,
            "gap_eq_formula": self.a1 - (self.b1 + self.b2 + self.b3) == formula_a(self.k, self.r),
        }

    def to_json(self) -> dict:
        d = {key: (str(v) if key not in ("k", "r") else v) for key, v in asdict(self).items()}
        d["gap"] = str(self.gap)
        d["identities"] = self.identities()
        return d


def _count_fixed(g: Graph, r: int, inside: set[int], outside: set[int] = frozenset()) -> int:
    """Independent ``r``-sets containing all of ``inside`` and none of ``outside``.

    Reduces to the ``(r - |inside|)``-sets of the forest left after removing
    ``outside`` and the closed neighborhoods of ``inside``.
    """
    need = r - len(inside)
    if need < 0:
        return 0
    if any(w in inside for v in inside for w in g.neighbors(v)):
        return 0
    gone = set(outside) | inside
    for v in inside:
        gone |= g.neighbors(v)
    rest, _ = induced_subgraph(g, (u for u in range(g.n) if u not in gone))
    counts = independence_counts(rest)
    return counts[need] if need < len(counts) else 0


def decompose_star(k: int, r: int) -> Decomposition:
    """Split the stars at ``x0`` and ``z1`` of ``T_k`` into the proof's families."""
    if not 1 <= r <= 2 * k + 1:
        raise ValueError(f"r must lie in [1, {2 * k + 1}] for k={k}, got {r}")
    g, lab = construct_tk(k)
    x0, x1, x2 = lab.x0, lab.x1, lab.x2
    y1, z1 = lab.y[0], lab.z[0]

    # C: (r-2)-sets on Y' u Z' meeting both Y1 and Y2, by inclusion-exclusion
    # over the forests that forbid the Y1 block, the Y2 block, or both.
    y_rest = set(lab.y[1:])
    z_rest = set(lab.z[1:])
    y_first = set(lab.y[1:k])
    y_second = set(lab.y[k:])

    def n_on(vertices: set[int]) -> int:
        if r - 2 < 0:
            return 0
        sub, _ = induced_subgraph(g, vertices)
        counts = independence_counts(sub)
        return counts[r - 2] if r - 2 < len(counts) else 0

    c = (
        n_on(y_rest | z_rest)
        - n_on(y_second | z_rest)
        - n_on(y_first | z_rest)
        + n_on(z_rest)
    )
    return Decomposition(
        k=k,
        r=r,
        e=_count_fixed(g, r, {x0, z1}),
        a1=_count_fixed(g, r, {x0, y1}),
        a2=_count_fixed(g, r, {x0}, {y1, z1}),
        b1=_count_fixed(g, r, {z1, x1}, {x0, x2}),
        b2=_count_fixed(g, r, {z1, x2}, {x0, x1}),
        b3=_count_fixed(g, r, {z1, x1, x2}, {x0}),
        b4=_count_fixed(g, r, {z1}, {x0, x1, x2}),
        c=c,
        star_x0=star_count(g, x0, r),
        star_z1=star_count(g, z1, r),
    )


def default_r_range(k: int) -> range:
    """Sizes where ``x0`` strictly beats every leaf; empty below ``k = 3``."""
    return range(5, 2 * k + 2) if k >= 3 else range(0)


def verify_theorem(
    k: int, r_range: range | list[int] | None = None, with_mu: bool | None = None
) -> dict:
    """Check the tree/leaf clause, the largest star size at ``x0``, and the
    strict domination of every leaf star by the ``x0`` star over ``r_range``.

    Failures are recorded in the report, never raised. ``mu`` is included
    by default whenever the tree is small enough for the exact search.
    """
    g, lab = construct_tk(k)
    if with_mu is None:
        with_mu = g.n <= MU_CAP_FOREST
    rs = list(default_r_range(k) if r_range is None else r_range)
    leafset = leaves(g)
    clause_a = {
        "is_tree": is_tree(g),
        "leaves": sorted(leafset),
        "expected_leaves": list(lab.z),
    }
    clause_a["pass"] = clause_a["is_tree"] and leafset == set(lab.z)

    s = max_nonempty_star_size(g, lab.x0)
    clause_b = {"max_star_size_x0": s, "expected": 2 * k + 1, "pass": s == 2 * k + 1}

    m = star_matrix(g)
    entries = []
    for r in rs:
        x0_count = m[lab.x0][r] if r <= g.n else 0
        leaf_counts = {z: (m[z][r] if r <= g.n else 0) for z in lab.z}
        entries.append(
            {
                "r": r,
                "star_x0": str(x0_count),
                "max_leaf_star": str(max(leaf_counts.values())),
                "leaf_stars_equal": len(set(leaf_counts.values())) == 1,
                "gap": str(x0_count - max(leaf_counts.values())),
                "pass": all(c < x0_count for c in leaf_counts.values()),
            }
        )
    clause_c = {
        "r_range": rs,
        "vacuous": not rs,
        "entries": entries,
        "pass": all(e["pass"] for e in entries),
    }
    report = {"k": k, "a": clause_a, "b": clause_b, "c": clause_c}
    if with_mu:
        mu_val = mu(g)
        report["mu"] = {
            "value": mu_val,
            "expected": 2 * k + 1,
            "pass": mu_val == 2 * k + 1,
            "ht_premise_r": [r for r in rs if mu_val >= 2 * r],
        }
    report["pass"] = all(report[key]["pass"] for key in ("a", "b", "c") + (("mu",) if with_mu else ()))
    return report
