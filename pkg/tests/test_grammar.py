import pytest
from hypothesis import given, strategies as st

from bvgroups import elements as el
from bvgroups.errors import ParseError
from bvgroups.grammar import (format_element, format_forest, format_subgroup, parse_element, parse_forest,
                              parse_subgroup)
from bvgroups.trees import Forest, Tree


def test_format_known_element():
    v = el.from_trees(el.braid_spec(2), Tree.caret(2), labels=[(("s1", 1),), ()])
    assert format_element(v) == "bv{n=2, r=1, H=B2; domain: (. .); braid: ; labels: [s1, -]; range: (. .)}"


@given(st.sampled_from([el.identity_spec(2), el.braid_spec(2), el.braid_spec(3)]),
       st.integers(0, 10_000), st.integers(1, 3))
def test_round_trip(spec, seed, r):
    v = el.random_element(spec, r, 3, seed=seed)
    w = parse_element(format_element(v))
    assert w == v


def test_forest_round_trip():
    f = Forest.of(Tree.caret(3), Tree(3), Tree.from_expansions(3, "", "2"))
    assert parse_forest(format_forest(f), 3) == f


def test_error_position():
    text = "bv{n=2, r=1, H=B2; domain: (. . .); braid: ; labels: [-, -, -]; range: (. . .)}"
    with pytest.raises(ParseError) as e:
        parse_element(text)
    assert str(e.value) == "line 1, column 28: caret with 3 children, expected 2"


@pytest.mark.parametrize("text", [
    "",
    "bv{n=2, r=1, H=Q; domain: (. .); braid: ; labels: [-, -]; range: (. .)}",
    "bv{n=2, r=1, H=B2; domain: (. .); braid: s2; labels: [-, -]; range: (. .)}",
    "bv{n=2, r=1, H=B2; domain: (. .); braid: ; labels: [s7, -]; range: (. .)}",
    "bv{n=2, r=2, H=B2; domain: (. .); braid: ; labels: [-, -]; range: (. .)}",
    "bv{n=2, r=1, H=B2; range: (. .); braid: ; labels: [-, -]; domain: (. .)}",
])
def test_rejects_bad_input(text):
    with pytest.raises((ParseError, ValueError)):
        parse_element(text)


def test_subgroup_file():
    spec = parse_subgroup("# pure braids\na = s1 s1\nb = s2 s2\n", "P", 3)
    assert spec.names() == ["a", "b"]
    assert parse_subgroup(format_subgroup(spec), "P", 3) == spec
    v = parse_element("bv{n=3, r=1, H=P; domain: (. . .); braid: ; labels: [a b^-1, -, b]; range: (. . .)}", {"P": spec})
    assert v.labels[0] == (("a", 1), ("b", -1))
    with pytest.raises(ParseError):
        parse_subgroup("a s1\n", "P", 3)
