import pytest
from hypothesis import given, strategies as st

from bvgroups import diagrams as D
from bvgroups import elements as el
from bvgroups.diagrams import Cross, Diagram, Merge, Split, White
from bvgroups.errors import NotAnElement
from bvgroups.trees import Tree

B2, B3, ID2 = el.braid_spec(2), el.braid_spec(3), el.identity_spec(2)
specs = st.sampled_from([B2, B3, ID2])
seeds = st.integers(0, 100_000)


def test_widths_and_counts():
    d = Diagram(B2, 1, (Split(1), Cross(1), White(2, (("s1", 1),)), Merge(1)))
    assert d.widths() == [1, 2, 2, 2, 1]
    assert d.counts() == {"split": 1, "merge": 1, "white": 1, "cross": 1}
    assert d.measure() == 2
    assert d.dump() == "S1 X1 W2[s1] M1"


def test_split_then_merge_cancels():
    d = Diagram(B2, 1, (Split(1), Merge(1)))
    nf = D.normal_form(d)
    assert nf.slices == ()


@given(specs, seeds)
def test_element_diagram_round_trip(spec, seed):
    v = el.random_element(spec, 1, 3, seed=seed)
    d = D.from_element(v)
    assert D.is_layered(d)
    assert el.equal(D.to_element(d), v)
    assert el.equal(D.to_element(d, normalize=False), v)


@given(specs, seeds)
def test_normal_form_is_reduced_shape(spec, seed):
    d = D.random_diagram(spec, seed, max_slices=10)
    nf = D.normal_form(d)
    assert D.enabled_moves(nf) == []
    assert D.path_shape_violations(nf) == []
    assert nf.measure() <= d.measure()


@given(specs, seeds)
def test_normal_form_matches_element_reduction(spec, seed):
    d = D.random_diagram(spec, seed, max_slices=10)
    v = D.to_element(d)
    assert el.same_reduced(D.to_element(D.from_element(el.reduce(v))), el.reduce(v))


@given(specs, seeds)
def test_every_move_reaches_the_same_normal_form(spec, seed):
    d = D.random_diagram(spec, seed, max_slices=9)
    forms = [D.normal_form(D.apply_move(d, m)) for m in D.enabled_moves(d)]
    for f in forms[1:]:
        assert D.diagram_equal(f, forms[0])


def test_local_confluence_report():
    rep = D.check_local_confluence(seed=1, count=40, size_bound=10)
    assert rep.ok, rep.summary()
    assert rep.diagrams == 40 and rep.move_pairs > 0


def test_label_equality_is_up_to_the_subgroup():
    a = Diagram(B3, 1, (Split(1), White(1, (("s1", 1), ("s2", 1), ("s1", 1)))))
    b = Diagram(B3, 1, (Split(1), White(1, (("s2", 1), ("s1", 1), ("s2", 1)))))
    c = Diagram(B3, 1, (Split(1), White(1, (("s1", 1),))))
    assert D.diagram_equal(a, b)
    assert not D.diagram_equal(a, c)


def test_far_commuting_slices_are_equal():
    a = Diagram(ID2, 2, (Split(1), Split(3)))
    b = Diagram(ID2, 2, (Split(2), Split(1)))
    assert D.diagram_equal(a, b)


def test_non_element_shape():
    d = Diagram(ID2, 1, (Split(1),))
    with pytest.raises(NotAnElement):
        D.to_element(d)


def test_element_diagram_slices():
    v = el.from_trees(B2, Tree.caret(2), labels=[(), (("s1", -1),)])
    d = D.from_element(v)
    assert d.dump() == "S1 W2[S1] M1"
