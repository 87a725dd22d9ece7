from math import comb

import pytest
from hypothesis import given, strategies as st

from bvgroups.errors import AddressError, CaretError
from bvgroups.trees import (Forest, LeafAddress, Tree, all_trees, base_depth, base_leaves, base_tree,
                            forest_lcm, lcm, spine)


def fuss_catalan(n, d):
    return comb(n * d, d) // ((n - 1) * d + 1)


@st.composite
def trees(draw, n=None, max_carets=6):
    n = draw(st.integers(2, 4)) if n is None else n
    t = Tree(n)
    for _ in range(draw(st.integers(0, max_carets))):
        leaves = t.leaves()
        t = t.expand(leaves[draw(st.integers(0, len(leaves) - 1))])
    return t


def test_base_tree_sizes():
    assert base_leaves(2) == base_tree(2).leaf_count == 6
    for n in (3, 4, 5):
        assert base_tree(n).leaf_count == base_leaves(n) == 4 * n - 3
        assert base_tree(n).carets == base_depth(n) == 4
    assert base_depth(2) == 5


def test_expansion_words():
    t = Tree.from_expansions(2, "", "0", "1", "00", "01")
    assert t == base_tree(2)
    assert t.leaves() == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0), (1, 1)]
    assert t.final_carets() == [(0, 0), (0, 1), (1,)]


@pytest.mark.parametrize("n,d", [(2, 0), (2, 3), (2, 5), (3, 2), (3, 3), (4, 2)])
def test_tree_counts_match_fuss_catalan(n, d):
    assert len(all_trees(n, d)) == fuss_catalan(n, d)
    assert len(set(all_trees(n, d))) == len(all_trees(n, d))


def test_spine():
    s = spine(3, 3)
    assert s.leaves()[-3:] == [(2, 2, 0), (2, 2, 1), (2, 2, 2)]
    assert s.final_carets() == [(2, 2)]


def test_bad_addresses():
    t = Tree.caret(2)
    with pytest.raises(AddressError):
        t.expand(())
    with pytest.raises(CaretError):
        base_tree(2).reduce_caret((0,))


@given(trees())
def test_reduce_undoes_expand(t):
    for i, leaf in enumerate(t.leaves(), 1):
        e = t.expand(leaf)
        assert e.reduce_caret(leaf) == t
        assert e.position(leaf) == i
        assert e.leaf_count == t.leaf_count + t.n - 1


@given(st.integers(2, 3).flatmap(lambda n: st.tuples(trees(n), trees(n))))
def test_lcm_is_least_common_expansion(pair):
    a, b = pair
    c = lcm(a, b)
    assert c.contains(a) and c.contains(b)
    # removing any final caret of c that is not in both breaks containment
    for w in c.final_carets():
        smaller = c.reduce_caret(w)
        assert not (smaller.contains(a) and smaller.contains(b))


def test_forest_positions():
    f = Forest.of(Tree.caret(2), Tree(2), Tree.caret(2))
    assert f.leaf_count == 5
    assert [f.position(a) for a in f.leaves()] == [1, 2, 3, 4, 5]
    assert f.address(3) == LeafAddress(2, ())
    assert [p for _, p in f.final_carets()] == [1, 4]
    g = f.expand_at(3)
    assert forest_lcm(f, g) == g
