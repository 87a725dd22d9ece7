import pytest
from hypothesis import given, strategies as st

from bvgroups import elements as el
from bvgroups import generators as G
from bvgroups.braids import BraidWord
from bvgroups.errors import ValidationError
from bvgroups.trees import Forest, Tree

SPECS = [el.identity_spec(2), el.braid_spec(2), el.braid_spec(3), el.identity_spec(3)]


def rand(spec, seed, r=1, depth=3):
    return el.random_element(spec, r, depth, seed=seed)


specs = st.sampled_from(SPECS)
seeds = st.integers(0, 10_000)


@given(specs, seeds, seeds, seeds)
def test_associative(spec, a, b, c):
    u, v, w = rand(spec, a), rand(spec, b), rand(spec, c)
    assert el.equal((u * v) * w, u * (v * w))


@given(specs, seeds)
def test_inverse_and_identity(spec, a):
    v = rand(spec, a)
    one = el.identity(spec)
    assert el.is_identity(v * v.inverse())
    assert el.is_identity(v.inverse() * v)
    assert el.equal(one * v, v) and el.equal(v * one, v)


@given(specs, seeds, st.integers(1, 3))
def test_multi_root_group_laws(spec, a, r):
    v = rand(spec, a, r=r)
    assert v.r == r
    assert el.is_identity(v * v.inverse())


@given(specs, seeds, st.data())
def test_expansion_preserves_the_element(spec, a, data):
    v = rand(spec, a)
    i = data.draw(st.integers(1, v.l))
    e = el.expand_at_range_leaf(v, i)
    assert e.l == v.l + spec.n - 1
    assert el.equal(e, v)
    assert el.same_reduced(el.reduce(e), el.reduce(v))
    j = data.draw(st.integers(1, v.l))
    assert el.equal(el.expand_at_domain_leaf(v, j), v)


@given(specs, seeds)
def test_reduced_form_is_irreducible(spec, a):
    v = el.reduce(rand(spec, a))
    assert el.reduce_once(v) is None
    assert el.depth(v) <= el.depth(rand(spec, a))


@given(specs, seeds)
def test_simplify_keeps_the_element(spec, a):
    v = rand(spec, a)
    s = el.simplify(v)
    assert len(s.braid) <= len(v.braid)
    assert el.equal(s, v)


def test_power():
    s = el.braid_spec(2)
    x0 = G.x_element(s, 0)
    assert el.is_identity(el.power(x0, 0))
    assert el.equal(el.power(x0, 3), x0 * x0 * x0)
    assert el.equal(el.power(x0, -2), x0.inverse() * x0.inverse())
    assert not el.is_identity(el.power(x0, 5))


def test_labels_are_checked_in_the_subgroup():
    s = el.braid_spec(3)
    t = Tree.caret(3)
    # s1 s2 s1 = s2 s1 s2 as labels, so these two elements agree
    a = el.from_trees(s, t, labels=[(("s1", 1), ("s2", 1), ("s1", 1)), (), ()])
    b = el.from_trees(s, t, labels=[(("s2", 1), ("s1", 1), ("s2", 1)), (), ()])
    assert el.equal(a, b)
    c = el.from_trees(s, t, labels=[(("s2", 1),), (), ()])
    assert not el.equal(a, c)


def test_trivial_labels_reduce_away():
    s = el.braid_spec(2)
    v = el.from_trees(s, Tree.caret(2), labels=[(("s1", 1), ("s1", -1)), ()])
    assert el.is_identity(v)


def test_validation():
    s = el.identity_spec(2)
    t = Tree.caret(2)
    with pytest.raises(ValidationError):
        el.from_trees(s, t, braid=BraidWord(3, ()))
    with pytest.raises(ValidationError):
        el.from_trees(s, t, labels=[(), (), ()])
    with pytest.raises(ValidationError):
        el.from_trees(s, t, labels=[(("s1", 1),), ()])
    with pytest.raises(ValidationError):
        el.Element(s, Forest.of(t), BraidWord(2, ()), ((), ()), Forest.of(Tree(2), Tree(2)))


def test_braid_changes_element():
    s = el.identity_spec(2)
    h = el.from_trees(s, Tree.caret(2), braid=BraidWord(2, (1,)))
    assert not el.is_identity(h)
    assert not el.is_identity(h * h)
    assert not el.equal(h, h.inverse())
