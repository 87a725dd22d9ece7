import itertools
import random

import pytest
from hypothesis import given, strategies as st

from bvgroups import braids
from bvgroups.braids import BraidWord
from bvgroups.errors import RangeError, StrandError
from bvgroups.trees import Tree
from oracles import braid_equal_oracle, permutation_oracle


@st.composite
def words(draw, strands=None, max_len=12):
    l = draw(st.integers(2, 6)) if strands is None else strands
    letters = draw(st.lists(st.integers(1, l - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return BraidWord(l, tuple(letters))


def test_permutation_example():
    # strand starting at i ends at perm[i-1]; checked against the swap oracle
    w = BraidWord(5, (3, 2, -1, -4, -3))
    assert braids.permutation(w) == (2, 4, 5, 1, 3)
    assert permutation_oracle(5, w.letters) == (2, 4, 5, 1, 3)


def test_letters_validated():
    with pytest.raises(RangeError):
        BraidWord(3, (3,))
    with pytest.raises(RangeError):
        BraidWord(3, (0,))


@given(words())
def test_permutation_matches_oracle(w):
    assert braids.permutation(w) == permutation_oracle(w.strands, w.letters)


@given(st.integers(2, 5).flatmap(lambda l: st.tuples(words(l), words(l))))
def test_equal_matches_free_group_action(pair):
    u, v = pair
    assert braids.equal(u, v) == braid_equal_oracle(u, v)


@given(words())
def test_word_times_inverse_is_trivial(w):
    assert braids.is_trivial(w * braids.inverse(w))
    assert braids.equal(braids.normal_form_word(w), w)
    assert braids.equal(braids.shorten(w), w)
    assert len(braids.shorten(w)) <= len(w)


@given(words())
def test_normal_form_is_a_class_invariant(w):
    rng = random.Random(len(w.letters))
    # insert a random relator; normal form must not change
    l = w.strands
    if l < 3:
        return
    i = rng.randint(1, l - 2)
    pos = rng.randint(0, len(w.letters))
    rel = (i, i + 1, i, -(i + 1), -i, -(i + 1))
    v = BraidWord(l, w.letters[:pos] + rel + w.letters[pos:])
    assert braids.normal_form(v) == braids.normal_form(w)


def test_delta_squared_is_central():
    d = braids.simple_braid(4, (4, 3, 2, 1))
    d2 = d * d
    for i in range(1, 4):
        s = BraidWord(4, (i,))
        assert braids.equal(d2 * s, s * d2)
    assert not braids.is_trivial(d2)


@given(words(max_len=8), st.integers(2, 3))
def test_cable_round_trip(w, n):
    l = w.strands
    inner = BraidWord(n, tuple(random.Random(len(w)).choice((1, -1)) for _ in range(3 if n > 1 else 0)))
    for k in range(1, l + 1):
        c = braids.cable_strand(w, k, n, inner)
        assert c.strands == l + n - 1
        got_inner, outer = braids.extract_cable(c, k, n)
        assert braids.equal(got_inner, inner)
        assert braids.equal(outer, w)


def test_extract_rejects_non_tubes():
    # sigma_1 on three strands: strands 1,2 cross a third inside the block 2..3
    with pytest.raises(braids.NotACable):
        braids.extract_cable(BraidWord(3, (1,)), 2, 2)


def test_delete_strands():
    w = BraidWord(4, (1, 2, 3))
    assert braids.permutation(w) == (4, 1, 2, 3)
    kept = braids.delete_strands(w, [2, 3, 4])
    assert braids.is_trivial(kept)


def test_ribbon_examples():
    r0 = Tree.from_expansions(2, "", "0")
    r1 = Tree.from_expansions(2, "", "1")
    assert str(braids.ribbon(r0, "0", r1, "1")) == "s2 s1"
    assert braids.ribbon(r0, "0", r0, "0").letters == ()
    with pytest.raises(StrandError):
        braids.ribbon(r0, "0", Tree.caret(2), "")


def test_simple_braids_are_simple():
    for perm in itertools.permutations(range(1, 5)):
        b = braids.simple_braid(4, perm)
        assert braids.is_simple(b)
        assert braids.permutation(b) == perm
        inv = sum(1 for a in range(4) for c in range(a + 1, 4) if perm[a] > perm[c])
        assert len(b) == inv
