from collections import Counter
from itertools import permutations, product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partition_strategy
from rsfusion.tableaux import (
    Partition,
    Permutation,
    StandardTableau,
    addable_cells,
    b_stat,
    compositions,
    conjugate,
    content_exponents,
    from_word,
    hook_content_dim,
    hooks,
    kostka,
    length,
    longest_element,
    longest_word,
    partitions,
    reduced_word,
    semistandard_tableaux,
    standard_tableaux,
)


# --- independent oracles -----------------------------------------------------

def brute_partitions(m):
    """Every sorted multiset of positive parts summing to m, via compositions."""
    seen = set()
    for k in range(1, m + 1):
        for comp in product(range(1, m + 1), repeat=k):
            if sum(comp) == m:
                seen.add(tuple(sorted(comp, reverse=True)))
    return seen


def diagram(lam):
    return {(i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1)}


def brute_hook(lam, cell):
    i, j = cell
    d = diagram(lam)
    arm = sum(1 for (a, b) in d if a == i and b > j)
    leg = sum(1 for (a, b) in d if b == j and a > i)
    return arm + leg + 1


def brute_standard_count(lam):
    cells = sorted(diagram(lam))
    m = len(cells)
    count = 0
    for perm in permutations(range(1, m + 1)):
        fill = dict(zip(cells, perm))
        if all(fill[(i, j)] < fill[(i, j + 1)] for (i, j) in cells if (i, j + 1) in fill) and \
           all(fill[(i, j)] < fill[(i + 1, j)] for (i, j) in cells if (i + 1, j) in fill):
            count += 1
    return count


def brute_kostka(lam, mu):
    cells = sorted(diagram(lam))
    n = len(mu)
    count = 0
    for vals in product(range(1, n + 1), repeat=len(cells)):
        fill = dict(zip(cells, vals))
        if Counter(vals) != Counter({k + 1: c for k, c in enumerate(mu) if c}):
            continue
        if all(fill[(i, j)] <= fill[(i, j + 1)] for (i, j) in cells if (i, j + 1) in fill) and \
           all(fill[(i, j)] < fill[(i + 1, j)] for (i, j) in cells if (i + 1, j) in fill):
            count += 1
    return count


# --- partitions -----------------------------------------------------------------

def test_partitions_small():
    assert [p.parts for p in partitions(1)] == [(1,)]
    assert [p.parts for p in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]


@pytest.mark.parametrize("m", range(1, 8))
def test_partitions_match_brute_force(m):
    got = [p.parts for p in partitions(m)]
    assert len(got) == len(set(got))
    assert set(got) == brute_partitions(m)
    assert got == sorted(got, reverse=True)


def test_partitions_of_five():
    assert len(partitions(5)) == len(brute_partitions(5)) == 7


def test_partition_validation_and_text():
    assert Partition.parse("2,1") == Partition((2, 1))
    assert str(Partition((4, 2, 1))) == "4,2,1"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition.parse("2,x")


# --- shape statistics -------------------------------------------------------

def test_conjugate_examples():
    assert conjugate((2, 1)).parts == (2, 1)
    assert conjugate((3,)).parts == (1, 1, 1)
    transposed = {(j, i) for (i, j) in diagram((4, 2, 1))}
    rows = Counter(i for i, _ in transposed)
    assert conjugate((4, 2, 1)).parts == tuple(rows[i] for i in sorted(rows)) == (3, 2, 1, 1)


@given(partition_strategy(max_m=10))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)).parts == lam


def test_hooks_examples():
    assert hooks((1,)) == {(1, 1): 1}
    assert hooks((2, 1)) == {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    assert hooks((2, 2)) == {(1, 1): 3, (1, 2): 2, (2, 1): 2, (2, 2): 1}


@given(partition_strategy(max_m=9))
def test_hooks_match_arm_leg_count(lam):
    assert hooks(lam) == {c: brute_hook(lam, c) for c in diagram(lam)}


def test_b_stat():
    assert b_stat((4,)) == 0
    assert b_stat((1, 1)) == 1
    assert b_stat((2, 1)) == 1
    assert b_stat((1, 1, 1)) == comb(3, 2)


def test_addable_cells():
    assert addable_cells((2, 1)) == [(1, 3), (2, 2), (3, 1)]
    assert addable_cells(()) == [(1, 1)]
    assert addable_cells((3, 3)) == [(1, 4), (3, 1)]


@given(partition_strategy(max_m=9))
def test_addable_cells_keep_a_diagram(lam):
    for i, j in addable_cells(lam):
        d = diagram(lam) | {(i, j)}
        rows = Counter(a for a, _ in d)
        parts = tuple(rows[a] for a in sorted(rows))
        Partition(parts)  # weakly decreasing
        assert diagram(parts) == d


# --- tableaux -----------------------------------------------------------------

def test_standard_tableaux_examples():
    assert len(standard_tableaux((4,))) == 1
    two_one = standard_tableaux((2, 1))
    assert [str(t) for t in two_one] == ["1,2;3", "1,3;2"]
    assert (0, -1, 1) in [t.content_exponents for t in two_one]
    assert len(standard_tableaux((2, 2))) == factorial(4) // (3 * 2 * 2 * 1) == 2


@pytest.mark.parametrize("m", range(1, 7))
def test_hook_length_formula(m):
    total = 0
    for lam in partitions(m):
        f = len(standard_tableaux(lam))
        prod_h = 1
        for h in hooks(lam).values():
            prod_h *= h
        assert f * prod_h == factorial(m)
        total += f * f
    assert total == factorial(m)


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 1), (2, 1, 1), (3, 2)])
def test_standard_count_brute_force(lam):
    assert len(standard_tableaux(lam)) == brute_standard_count(lam)


def test_content_exponents_examples():
    assert content_exponents("1,2") == (0, 1)
    assert content_exponents("1,3;2") == (0, -1, 1)
    assert content_exponents("1;2;3") == (0, -1, -2)


@given(partition_strategy(max_m=7), st.data())
def test_tableau_invariants(lam, data):
    T = data.draw(st.sampled_from(standard_tableaux(lam)))
    c = T.content_exponents
    assert c[0] == 0
    assert T.remove_max().shape.weight == T.m - 1 if T.m > 1 else True
    # equal exponents exactly along a diagonal
    for a in range(1, T.m + 1):
        for b in range(a + 1, T.m + 1):
            (i1, j1), (i2, j2) = T.cell_of(a), T.cell_of(b)
            assert (c[a - 1] == c[b - 1]) == (j1 - i1 == j2 - i2)


def test_tableau_text_and_validation():
    T = StandardTableau.parse("1,3;2")
    assert str(T) == "1,3;2" and T.shape == Partition((2, 1))
    with pytest.raises(ValueError):
        StandardTableau.parse("2,1;3")
    with pytest.raises(ValueError):
        StandardTableau.parse("1,2;2")
    with pytest.raises(ValueError):
        StandardTableau.parse("1,a")


# --- semistandard counts ------------------------------------------------------

def test_hook_content_examples():
    assert hook_content_dim((1, 1, 1), 3) == 1
    assert hook_content_dim((2, 1), 3) == len(semistandard_tableaux((2, 1), 3)) == 8
    assert hook_content_dim((1, 1, 1), 2) == 0


def test_kostka_examples():
    for lam in [(3,), (2, 1), (2, 2), (3, 1, 1)]:
        assert kostka(lam, lam) == 1
    assert kostka((2, 1), (1, 1, 1)) == brute_kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2, 0)) == 0


@given(partition_strategy(max_m=5), st.integers(1, 4))
def test_hook_content_equals_kostka_sum(lam, n):
    m = sum(lam)
    assert hook_content_dim(lam, n) == sum(kostka(lam, mu) for mu in compositions(m, n))
    assert hook_content_dim(lam, n) == len(semistandard_tableaux(lam, n))


@given(partition_strategy(max_m=5), st.integers(1, 3))
def test_kostka_brute_force(lam, n):
    for mu in compositions(sum(lam), n):
        assert kostka(lam, mu) == brute_kostka(lam, mu)


# --- permutations -------------------------------------------------------------

def test_longest_element_examples():
    assert longest_element(1) == (1,) and reduced_word(longest_element(1)) == ()
    assert longest_word(2) == (1,)
    assert longest_word(3) == (1, 2, 1)
    assert str(longest_element(3)) == "321"
    assert from_word((1, 2, 1), 3) == from_word((2, 1, 2), 3) == (3, 2, 1)


@pytest.mark.parametrize("k", range(1, 7))
def test_longest_element_properties(k):
    w = longest_element(k)
    assert tuple(w) == tuple(range(k, 0, -1))
    assert length(w) == k * (k - 1) // 2 == len(longest_word(k))
    assert from_word(longest_word(k), k) == w


@given(st.permutations(range(1, 7)))
def test_reduced_word_spells_permutation(p):
    p = Permutation(p)
    assert len(p.reduced_word) == p.length
    assert from_word(p.reduced_word, 6) == p
