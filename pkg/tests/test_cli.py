import json

import pytest

from bvgroups import elements as el
from bvgroups.cli import main
from bvgroups.grammar import format_element, parse_element

X0 = "bv{n=2, r=1, H=B2; domain: (. (. .)); braid: ; labels: [-, -, -]; range: ((. .) .)}"
G1 = "bv{n=2, r=1, H=B2; domain: (. .); braid: ; labels: [s1, -]; range: (. .)}"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text + "\n")
        return str(p)
    return write


def test_compose_and_inverse(files, capsys):
    a, b = files("a.bv", X0), files("b.bv", G1)
    assert main(["compose", a, b]) == 0
    prod = parse_element(capsys.readouterr().out.strip())
    assert el.equal(prod, parse_element(X0) * parse_element(G1))
    assert main(["inverse", a, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["domain"] == "((. .) .)" and data["range"] == "(. (. .))"


def test_equal_exit_codes(files, capsys):
    a = files("a.bv", X0)
    b = files("b.bv", format_element(el.expand_at_range_leaf(parse_element(X0), 2)))
    c = files("c.bv", G1)
    assert main(["equal", a, b]) == 0
    assert main(["equal", a, c]) == 1
    assert capsys.readouterr().out.split() == ["true", "false"]


def test_input_errors(files, capsys):
    bad = files("bad.bv", "bv{n=2, r=1, H=B2; domain: (. . .); braid: ; labels: [-, -, -]; range: (. . .)}")
    assert main(["reduce", bad]) == 2
    assert "column 28" in capsys.readouterr().err
    assert main(["reduce", "/nonexistent.bv"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["evaluate", "x_9", "--n", "2"]) == 2


def test_decompose_verify(files, capsys):
    v = el.random_element(el.braid_spec(2), 1, 3, seed=11)
    p = files("v.bv", format_element(v))
    assert main(["decompose", p, "--verify", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verified"] is True and data["set"] == "standard"
    assert main(["evaluate", data["word"] or "x_0 x_0^-1", "--n", "2", "--H", "B2"]) == 0
    assert el.equal(parse_element(capsys.readouterr().out.strip()), v)


def test_subgroup_file(files, capsys):
    h = files("P.txt", "a = s1 s1\n")
    v = files("v.bv", "bv{n=2, r=1, H=P; domain: (. .); braid: s1; labels: [a, -]; range: (. .)}")
    assert main(["reduce", v, "--H", h, "--n", "2"]) == 0
    assert "H=P" in capsys.readouterr().out
    assert main(["decompose", v, "--H", h, "--n", "2", "--verify"]) == 0


def test_render_and_random(files, tmp_path, capsys):
    assert main(["random", "--n", "3", "--H", "B3", "--seed", "4", "--depth", "2"]) == 0
    p = files("r.bv", capsys.readouterr().out.strip())
    out = tmp_path / "r.svg"
    assert main(["render", p, "--out", str(out), "--reduce"]) == 0
    assert out.read_text().startswith("<?xml")


def test_confluence_and_selftest(capsys):
    assert main(["confluence", "--count", "20", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["counterexamples"] == 0
    assert main(["selftest", "--quick", "--only", "1,9"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2 and all(l.startswith("[PASS]") for l in lines)
