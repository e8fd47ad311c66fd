import itertools
import random
from fractions import Fraction

import pytest

from combench.designs import (AvoidArray, NotBasesError, ThreeTournament,
                              avoid_latin, avoidance_scan, count_magic,
                              cyclic_base_ordering, dom_3tournament, dom_scan,
                              ehrhart_check, ehrhart_polynomial,
                              graphic_independence, pair_condition_check,
                              positive_fraction, realize_path_system,
                              sym_ramsey_check, verify_avoidance,
                              verify_cyclic_ordering)


def test_avoid_latin_basics():
    blank = AvoidArray([[0] * 4 for _ in range(4)])
    sq = avoid_latin(blank)
    assert verify_avoidance(blank, sq)
    tiny = AvoidArray([[1, 0], [0, 0]])
    assert not tiny.multiplicities_ok()  # cap is n-2 = 0
    sq = avoid_latin(tiny)
    assert sq is not None and verify_avoidance(tiny, sq)


def test_avoid_latin_unavoidable_without_cap():
    # every Latin square row contains each symbol, so an all-1 array is
    # unavoidable at any order; the n-2 multiplicity cap rules this out
    for n in (2, 3):
        full = AvoidArray([[1] * n for _ in range(n)])
        assert not full.multiplicities_ok()
        assert avoid_latin(full) is None
    diag = AvoidArray([[1 if i == j else 0 for j in range(3)]
                       for i in range(3)])
    sq = avoid_latin(diag)
    assert sq is not None and verify_avoidance(diag, sq)


def test_avoidance_scan_exhaustive_n3():
    res = avoidance_scan(3, "exhaustive")
    assert res["counterexample"] is None
    assert res["checked"] > 0


def test_avoidance_scan_random_n5():
    res = avoidance_scan(5, "random", budget=3000, seed=11)
    assert res["counterexample"] is None
    res2 = avoidance_scan(5, "random", budget=3000, seed=11)
    assert res2["checked"] == res["checked"]


def test_cyclic_base_ordering_trees():
    indep = graphic_independence(4)
    t1 = [(0, 1), (1, 2), (2, 3)]
    t2 = [(0, 2), (1, 3), (0, 3)]
    order = cyclic_base_ordering([t1, t2], indep)
    assert order is not None and verify_cyclic_ordering(order, 3, indep)
    block = cyclic_base_ordering([t1, t2], indep, block_mode=True)
    assert block is not None and verify_cyclic_ordering(block, 3, indep)
    assert set(block[:3]) in (set(t1), set(t2))
    single = cyclic_base_ordering([t1], indep)
    assert single is not None and verify_cyclic_ordering(single, 3, indep)


def test_cyclic_base_ordering_generic_oracle():
    # uniform matroid rank 2 on 4 elements: every window works
    indep = lambda elems: len(set(elems)) == len(list(elems)) <= 2
    order = cyclic_base_ordering([[0, 1], [2, 3]], indep)
    assert order is not None and verify_cyclic_ordering(order, 2, indep)


def test_cyclic_base_ordering_rejects_bad_input():
    indep = graphic_independence(4)
    with pytest.raises(NotBasesError):
        cyclic_base_ordering([[(0, 1), (1, 2)], [(0, 1), (2, 3)]], indep)
    with pytest.raises(NotBasesError):
        cyclic_base_ordering([[(0, 1), (1, 2), (0, 2)]], indep)  # a cycle


def test_three_tournament_domination():
    roots = {t: (1 if 1 in t else t[0])
             for t in itertools.combinations(range(5), 3)}
    t3 = ThreeTournament(5, roots)
    d, mask = dom_3tournament(t3)
    assert d == 1 and mask == 2
    assert pair_condition_check(t3)
    rng = random.Random(5)
    t3r = ThreeTournament.random(6, rng)
    d, mask = dom_3tournament(t3r)
    assert d >= 1
    from combench.designs import _dominates

    assert _dominates(t3r, mask)
    if d > 1:
        for combo in itertools.combinations(range(6), d - 1):
            assert not _dominates(t3r, sum(1 << v for v in combo))


def test_dom_scan_deterministic():
    a = dom_scan(5, 30, seed=3)
    b = dom_scan(5, 30, seed=3)
    assert a[0] == b[0]


def test_pair_condition_violation():
    # rotate roots so some 4-set has all distinct roots
    roots = {}
    for t in itertools.combinations(range(4), 3):
        missing = next(v for v in range(4) if v not in t)
        roots[t] = t[missing % 3]
    t3 = ThreeTournament(4, roots)
    result = pair_condition_check(t3)
    all_roots = [t3.roots[t] for t in itertools.combinations(range(4), 3)]
    assert result == (len(set(all_roots)) < 4)


def test_count_magic_small():
    for k in range(8):
        assert count_magic(2, k) == k + 1
    assert count_magic(3, 0) == 1
    assert count_magic(3, 1) == 6      # permutation matrices
    assert count_magic(3, 3) == 55     # classical Birkhoff value


def test_count_magic_brute_oracle():
    def brute(n, k):
        count = 0
        for rows in itertools.product(
                [c for c in itertools.product(range(k + 1), repeat=n)
                 if sum(c) == k], repeat=n):
            if all(sum(r[j] for r in rows) == k for j in range(n)):
                count += 1
        return count

    for k in range(5):
        assert count_magic(3, k) == brute(3, k)


def test_positive_fraction():
    for k in range(2, 9):
        assert positive_fraction(2, k) == Fraction(k - 1, k + 1)
    for k in range(2):
        assert positive_fraction(3, k) == 0  # P(n,k) = 0 for k < n
    vals = [positive_fraction(3, k) for k in range(3, 10)]
    assert vals == sorted(vals)  # monotone within the table


def test_ehrhart_reciprocity():
    assert ehrhart_check(2, 12)
    assert ehrhart_check(3, 12)
    h2 = ehrhart_polynomial(2)
    assert h2(5) == 6
    assert -h2(-5) == count_magic(2, 3)  # (-1)^{n+1} H(-k) = interior


def test_realize_path_system():
    got = realize_path_system(["a", "b"], [["a", "b"]])
    assert got is not None
    g, mapping = got
    assert g.n == 3 and g.edge_count() == 2
    got = realize_path_system(["a", "b", "c"], [["a", "b"], ["b", "c"],
                                                ["a", "c"]])
    assert got is not None
    g, mapping = got
    # replay: each sequence is a simple path in order
    for seq in (["a", "b"], ["b", "c"], ["a", "c"]):
        edges = [mapping[lab] for lab in seq]
        assert all(set(edges[i]) & set(edges[i + 1])
                   for i in range(len(edges) - 1))
    assert realize_path_system(["a", "b"], [["a", "a"]]) is None
    assert realize_path_system(["a"], [["a"]]) is not None


def test_realize_path_system_impossible():
    # two length-2 paths sharing both edges in opposite order force a
    # repeated vertex, which stays realizable; an actual failure needs a
    # conflict, e.g. three mutually-through paths on two edges
    got = realize_path_system(["a", "b", "c"],
                              [["a", "b", "c"], ["b", "a", "c"]])
    assert got is None


def test_sym_ramsey():
    assert sym_ramsey_check(2, 2, 2) is False
    assert sym_ramsey_check(3, 1, 2) is True
    assert sym_ramsey_check(3, 2, 2) is True
    from combench.structure import TooLargeError

    with pytest.raises(TooLargeError):
        sym_ramsey_check(5, 2, 2)
