import xml.etree.ElementTree as ET

from hypothesis import given, strategies as st

from bvgroups import elements as el
from bvgroups.diagrams import Cross, Diagram, Split, White
from bvgroups.render import render_svg

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg.split("\n", 1)[1])


@given(st.integers(0, 10_000))
def test_render_is_valid_and_deterministic(seed):
    v = el.random_element(el.braid_spec(2), 1, 3, seed=seed)
    a, b = render_svg(v, title="v"), render_svg(v, title="v")
    assert a == b
    root = parse(a)
    assert root.tag == NS + "svg"
    assert root.find(NS + "title").text == "v"


def test_render_elements_drawn():
    d = Diagram(el.braid_spec(2), 1, (Split(1), Cross(1), White(2, (("s1", -1),))))
    root = parse(render_svg(d))
    circles = root.findall(NS + "circle")
    assert [c.get("class") for c in circles] == ["split", "white"]
    assert root.find(NS + "text").text == "S1"
    # two wires for a split fan, one stem, one over-strand and two halves of the under-strand,
    # plus one straight wire beside the white
    assert len(root.findall(NS + "line")) == 3 + 3 + 2
    assert root.get("height") == str(2 * 20 + 3 * 40)


def test_empty_diagram():
    root = parse(render_svg(Diagram(el.identity_spec(2), 2, ())))
    assert len(root.findall(NS + "line")) == 2
