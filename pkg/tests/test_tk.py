from math import comb

import pytest

from treestars.counting import star_count
from treestars.graph import canonical_code, is_tree, leaves, path_graph
from treestars.tk import (
    binom,
    construct_tk,
    decompose_star,
    formula_a,
    formula_a_top,
    single_term_bound,
    verify_theorem,
)

from oracles import tk_families

FIELDS = ("e", "a1", "a2", "b1", "b2", "b3", "b4", "c", "star_x0", "star_z1")


def test_construct_t1_is_p7():
    g, lab = construct_tk(1)
    assert g.n == 7
    walk = [lab.z[0], lab.y[0], lab.x1, lab.x0, lab.x2, lab.y[1], lab.z[1]]
    assert all((min(a, b), max(a, b)) in g.edges for a, b in zip(walk, walk[1:]))
    assert canonical_code(g) == canonical_code(path_graph(7))


def test_construct_t3_labels():
    g, lab = construct_tk(3)
    assert (g.n, len(g.edges)) == (15, 14)
    assert (lab.x0, lab.x1, lab.x2) == (0, 1, 2)
    assert lab.y == tuple(range(3, 9))
    assert lab.z == tuple(range(9, 15))
    assert leaves(g) == set(range(9, 15))


@pytest.mark.parametrize("k", range(1, 9))
def test_construct_tk_shape(k):
    g, lab = construct_tk(k)
    assert g.n == 4 * k + 3 and len(g.edges) == 4 * k + 2
    assert is_tree(g)
    assert leaves(g) == set(lab.z)
    expected = {(0, 1), (0, 2)}
    expected |= {(1, 2 + i) for i in range(1, k + 1)}
    expected |= {(2, 2 + i) for i in range(k + 1, 2 * k + 1)}
    expected |= {(2 + i, 2 * k + 2 + i) for i in range(1, 2 * k + 1)}
    assert g.edges == expected


def test_construct_rejects_k0():
    with pytest.raises(ValueError):
        construct_tk(0)


def test_binom_convention():
    assert binom(5, -1) == 0 and binom(5, 6) == 0 and binom(-1, 0) == 0
    assert binom(5, 2) == 10


def formula_a_by_hand(k, r):
    """Term-by-term evaluation with explicit zero guards, kept separate from the module."""
    def c(n, t):
        return comb(n, t) if 0 <= t <= n else 0

    s = 0
    for i in range(1, k):
        for j in range(1, k + 1):
            s += c(k - 1, i) * c(k, j) * c(2 * k - 1 - i - j, r - 2 - i - j)
    return s - c(2 * k - 1, r - 2) - c(2 * k - 1, r - 3)


def test_formula_a_examples():
    assert formula_a(3, 5) == 7
    assert formula_a(3, 7) == 15 == 3 * 7 - 6
    assert formula_a(3, 2) == -1
    for k in range(1, 9):
        for r in range(0, 2 * k + 3):
            assert formula_a(k, r) == formula_a_by_hand(k, r)


def test_formula_a_top_examples():
    assert formula_a_top(3) == 15 == formula_a(3, 7)
    assert formula_a_top(1) == -2
    assert formula_a_top(5) == formula_a(5, 11)
    for k in range(1, 13):
        assert formula_a_top(k) == formula_a(k, 2 * k + 1)


def test_positivity_sweep():
    for k in range(3, 13):
        for r in range(5, 2 * k + 2):
            assert formula_a(k, r) > 0, (k, r)


def test_positivity_fails_outside_range():
    # the strict inequality genuinely needs k >= 3 and r >= 5
    assert formula_a(2, 5) < 0
    assert all(formula_a(k, 4) < 0 for k in range(3, 13))


def test_single_term_bound():
    for k in range(3, 13):
        for r in range(6, 2 * k + 1):
            assert formula_a(k, r) >= single_term_bound(k, r)


@pytest.mark.parametrize("k", range(1, 5))
def test_decomposition_matches_family_enumeration(k):
    families = tk_families(k)
    for r in range(1, 2 * k + 2):
        d = decompose_star(k, r)
        expected = families.get(r, {})
        for f in FIELDS:
            assert getattr(d, f) == expected.get(f, 0), (k, r, f)
        assert all(d.identities().values())


def test_decompose_examples():
    d = decompose_star(3, 5)
    assert d.gap == 7
    assert d.star_x0 == 240 and d.star_z1 == 233
    d1 = decompose_star(1, 2)
    assert d1.star_x0 == star_count(path_graph(7), 3, 2)
    assert all(d1.identities().values())


def test_decompose_rejects_out_of_range():
    with pytest.raises(ValueError):
        decompose_star(3, 0)
    with pytest.raises(ValueError):
        decompose_star(3, 8)


def test_decompose_json_counts_are_strings():
    payload = decompose_star(3, 5).to_json()
    assert payload["gap"] == "7" and payload["a1"] == str(decompose_star(3, 5).a1)
    assert payload["identities"]["a2_eq_b4"] is True


@pytest.mark.parametrize("k", range(1, 7))
def test_gap_identity(k):
    g, lab = construct_tk(k)
    for r in range(3, 2 * k + 2):
        gap = star_count(g, lab.x0, r) - star_count(g, lab.z[0], r)
        assert gap == formula_a(k, r)


@pytest.mark.parametrize("k", range(1, 7))
def test_leaf_symmetry(k):
    g, lab = construct_tk(k)
    for r in range(1, 2 * k + 2):
        values = {star_count(g, z, r) for z in lab.z}
        assert len(values) == 1


def test_verify_theorem_k3():
    rep = verify_theorem(3)
    assert rep["pass"]
    assert rep["c"]["r_range"] == [5, 6, 7]
    assert [e["gap"] for e in rep["c"]["entries"]] == ["7", "26", "15"]


def test_verify_theorem_k5_ht_premise():
    rep = verify_theorem(5, [5])
    assert rep["pass"]
    assert rep["mu"]["value"] == 11
    assert rep["mu"]["ht_premise_r"] == [5]


def test_verify_theorem_k1_vacuous():
    rep = verify_theorem(1)
    assert rep["a"]["pass"] and rep["b"]["pass"]
    assert rep["c"]["vacuous"] and rep["c"]["pass"]


def test_verify_theorem_reports_failure_instead_of_raising():
    rep = verify_theorem(2, [5])
    assert not rep["c"]["pass"] and not rep["pass"]
    assert rep["c"]["entries"][0]["gap"] == "-1"


def test_verify_theorem_skips_mu_beyond_cap():
    rep = verify_theorem(10)
    assert "mu" not in rep
    assert rep["pass"]
