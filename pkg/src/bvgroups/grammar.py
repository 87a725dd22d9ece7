"""Text forms: trees, forests, braid words, labels, elements, subgroup files.

Element grammar::

    bv{n=<n>, r=<r>, H=<name>; domain: <forest>; braid: <word>; labels: [<w>, ...]; range: <forest>}

Trees are ``.`` (leaf) or ``(t1 ... tn)``; a forest is whitespace-separated
trees.  Braid tokens are ``s<k>`` and ``S<k>``.  A label is a space-separated
word in generator names, ``name^-1`` for inverses (``S<k>`` is accepted for
``s<k>^-1``), and ``-`` for the empty word.
"""

from __future__ import annotations

import re
from typing import Dict, Optional

from .braids import BraidWord
from .elements import Element, LabelWord, SubgroupSpec, braid_spec, identity_spec
from .errors import ParseError
from .trees import Forest, Tree, format_shape

_HEADER = re.compile(r"\s*bv\s*\{\s*n\s*=\s*(\d+)\s*,\s*r\s*=\s*(\d+)\s*,\s*H\s*=\s*([A-Za-z_][\w.-]*)\s*;")
_FIELD = re.compile(r"\s*(domain|braid|labels|range)\s*:")


# ---------------------------------------------------------------------------
# formatting


def format_tree(t: Tree) -> str:
    return format_shape(t.shape)


def format_forest(f: Forest) -> str:
    return " ".join(format_tree(t) for t in f.trees)


def format_braid(u: BraidWord) -> str:
    return str(u)


def format_label(label: LabelWord, spec: Optional[SubgroupSpec] = None) -> str:
    if not label:
        return "-"
    out = []
    for g, e in label:
        if e > 0:
            out.append(g)
        elif re.fullmatch(r"s\d+", g):
            out.append("S" + g[1:])
        else:
            out.append(g + "^-1")
    return " ".join(out)


def format_element(v: Element) -> str:
    labels = ", ".join(format_label(x, v.spec) for x in v.labels)
    return (
        f"bv{{n={v.n}, r={v.r}, H={v.spec.name}; domain: {format_forest(v.domain)}; "
        f"braid: {format_braid(v.braid)}; labels: [{labels}]; range: {format_forest(v.range)}}}"
    )


# ---------------------------------------------------------------------------
# parsing


def _parse_shape(text: str, i: int, n: int, full: str, base: int):
    while i < len(text) and text[i].isspace():
        i += 1
    if i >= len(text):
        raise ParseError("expected a tree", full, base + i)
    if text[i] == ".":
        return None, i + 1
    if text[i] != "(":
        raise ParseError(f"unexpected {text[i]!r} in tree", full, base + i)
    start = i
    i += 1
    kids = []
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i >= len(text):
            raise ParseError("unclosed caret", full, base + start)
        if text[i] == ")":
            i += 1
            break
        kid, i = _parse_shape(text, i, n, full, base)
        kids.append(kid)
    if len(kids) != n:
        raise ParseError(f"caret with {len(kids)} children, expected {n}", full, base + start)
    return tuple(kids), i


def parse_forest(text: str, n: int, _full: Optional[str] = None, _base: int = 0) -> Forest:
    full = text if _full is None else _full
    trees = []
    i = 0
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i >= len(text):
            break
        shape, i = _parse_shape(text, i, n, full, _base)
        trees.append(Tree(n, shape))
    if not trees:
        raise ParseError("empty forest", full, _base)
    return Forest(n, tuple(trees))


def parse_tree(text: str, n: int) -> Tree:
    f = parse_forest(text, n)
    if f.r != 1:
        raise ParseError("expected a single tree", text, 0)
    return f.trees[0]


def parse_braid(text: str, strands: int, _full: Optional[str] = None, _base: int = 0) -> BraidWord:
    full = text if _full is None else _full
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        mm = re.fullmatch(r"([sS])(\d+)", tok)
        if not mm:
            raise ParseError(f"bad braid token {tok!r}", full, _base + m.start())
        k = int(mm.group(2))
        if not 1 <= k < strands:
            raise ParseError(f"generator {tok} out of range for {strands} strands", full, _base + m.start())
        letters.append(k if mm.group(1) == "s" else -k)
    return BraidWord(strands, tuple(letters))


def parse_label(text: str, spec: SubgroupSpec, _full: Optional[str] = None, _base: int = 0) -> LabelWord:
    full = text if _full is None else _full
    out = []
    toks = list(re.finditer(r"\S+", text))
    if len(toks) == 1 and toks[0].group() == "-":
        return ()
    for m in toks:
        tok = m.group()
        name, e = tok, 1
        if tok.endswith("^-1"):
            name, e = tok[:-3], -1
        elif re.fullmatch(r"S\d+", tok) and ("s" + tok[1:]) in spec.gens and tok not in spec.gens:
            name, e = "s" + tok[1:], -1
        if name not in spec.gens:
            raise ParseError(f"unknown generator {name!r} for H={spec.name}", full, _base + m.start())
        out.append((name, e))
    return tuple(out)


def builtin_spec(name: str, n: int) -> Optional[SubgroupSpec]:
    if name == "Id":
        return identity_spec(n)
    if name == f"B{n}" or name == "Bn":
        return braid_spec(n)
    return None


def parse_element(text: str, specs: Optional[Dict[str, SubgroupSpec]] = None) -> Element:
    m = _HEADER.match(text)
    if not m:
        raise ParseError("expected 'bv{n=<n>, r=<r>, H=<name>;'", text, 0)
    n, r, hname = int(m.group(1)), int(m.group(2)), m.group(3)
    spec = (specs or {}).get(hname) or builtin_spec(hname, n)
    if spec is None:
        raise ParseError(f"unknown subgroup {hname!r}", text, m.start(3))
    if spec.n != n:
        raise ParseError(f"subgroup {hname} acts on {spec.n} strands, not {n}", text, m.start(3))
    i = m.end()
    end = text.rfind("}")
    if end < i or text[end + 1 :].strip():
        raise ParseError("expected closing '}'", text, len(text))
    fields: Dict[str, tuple] = {}
    body = text[i:end]
    # fields are ';'-separated and appear in a fixed order
    pos = 0
    for expected in ("domain", "braid", "labels", "range"):
        fm = _FIELD.match(body, pos)
        if not fm or fm.group(1) != expected:
            raise ParseError(f"expected field {expected!r}", text, i + pos)
        stop = body.find(";", fm.end()) if expected != "range" else len(body)
        if stop < 0:
            raise ParseError("expected ';'", text, i + len(body))
        fields[expected] = (body[fm.end() : stop], i + fm.end())
        pos = stop + 1
    dom = parse_forest(fields["domain"][0], n, text, fields["domain"][1])
    ran = parse_forest(fields["range"][0], n, text, fields["range"][1])
    if dom.r != r:
        raise ParseError(f"domain has {dom.r} roots, header says r={r}", text, fields["domain"][1])
    braid = parse_braid(fields["braid"][0], dom.leaf_count, text, fields["braid"][1])
    ltext, lbase = fields["labels"]
    lm = re.fullmatch(r"\s*\[(.*)\]\s*", ltext, re.S)
    if not lm:
        raise ParseError("labels must be a bracketed list", text, lbase)
    inner_base = lbase + lm.start(1)
    labels = []
    if lm.group(1).strip():
        off = 0
        for part in lm.group(1).split(","):
            labels.append(parse_label(part, spec, text, inner_base + off))
            off += len(part) + 1
    return Element(spec, dom, braid, tuple(labels), ran)


def parse_subgroup(text: str, name: str, n: int) -> SubgroupSpec:
    """Read ``name = <braid word>`` lines; ``#`` starts a comment."""
    gens = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'name = word' on line {lineno}", text, text.find(line))
        g, word = (x.strip() for x in line.split("=", 1))
        if not re.fullmatch(r"[A-Za-z_]\w*", g):
            raise ParseError(f"bad generator name {g!r}", text, text.find(line))
        gens[g] = parse_braid(word, n)
    return SubgroupSpec(name, n, gens)


def format_subgroup(spec: SubgroupSpec) -> str:
    return "".join(f"{g} = {w}\n" for g, w in spec.gens.items())
