"""Finite generating sets of BV_n(H) and decomposition into generator words.

Generator names:

* ``x_0 .. x_{n-1}``   the standard generators of F_n;
* ``e_<tree>``         (T, Id, Id, T(n)) for a tree T with m(n) leaves, the
                       tree written compactly, e.g. ``e_(((..).)(..))``;
* ``h_1 .. h_{m-1}``   (T(n), sigma_i, Id, T(n));
* ``g_<s>``            (R, Id, {s, Id, ...}, R) for each generator s of H.

Words are straight-line programs: an item is a letter or a nested word with
an exponent, so long words built by substitution stay small in memory and
evaluate with memoization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import braids
from . import elements as el
from .braids import BraidWord
from .elements import Element, LabelWord, SubgroupSpec
from .errors import DepthError, RangeError, SubgroupError, ValidationError
from .trees import Forest, Tree, base_depth, base_leaves, base_tree, format_shape, spine


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True, eq=False)
class GeneratorWord:
    items: tuple = ()  # (name, +-1) or (GeneratorWord, +-1)

    @classmethod
    def letter(cls, name: str, exp: int = 1) -> "GeneratorWord":
        return cls(((name, exp),))

    @classmethod
    def of(cls, *parts: Union["GeneratorWord", str, Tuple[str, int]]) -> "GeneratorWord":
        items = []
        for p in parts:
            if isinstance(p, GeneratorWord):
                if len(p.items) == 1:
                    items.append(p.items[0])
                elif p.items:
                    items.append((p, 1))
            elif isinstance(p, str):
                items.append((p, 1))
            else:
                items.append(tuple(p))
        return cls(tuple(items))

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(tuple((x, -e) for x, e in reversed(self.items)))

    def __mul__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord.of(self, other)

    def __pow__(self, k: int) -> "GeneratorWord":
        return GeneratorWord(((self, 1 if k > 0 else -1),) * abs(k)) if k else GeneratorWord()

    def flat(self) -> tuple:
        """The literal word as a tuple of (name, +-1), freely reduced."""
        out: list = []
        _flatten(self, 1, out)
        return tuple(out)

    def letters(self) -> set:
        """Names used anywhere in the word."""
        seen: set = set()
        out: set = set()

        def walk(w):
            if id(w) in seen:
                return
            seen.add(id(w))
            for x, _ in w.items:
                if isinstance(x, GeneratorWord):
                    walk(x)
                else:
                    out.add(x)

        walk(self)
        return out

    def __len__(self) -> int:
        return len(self.flat())

    def __str__(self) -> str:
        return " ".join(x if e > 0 else f"{x}^-1" for x, e in self.flat())

    def __repr__(self) -> str:
        s = str(self)
        return f"GeneratorWord({s[:80] + '...' if len(s) > 80 else s})"


def _flatten(w: GeneratorWord, sign: int, out: list) -> None:
    items = w.items if sign > 0 else tuple((x, -e) for x, e in reversed(w.items))
    for x, e in items:
        if isinstance(x, GeneratorWord):
            _flatten(x, e, out)
        elif out and out[-1] == (x, -e):
            out.pop()
        else:
            out.append((x, e))


def parse_word(text: str) -> GeneratorWord:
    items = []
    for tok in text.split():
        if tok.endswith("^-1"):
            items.append((tok[:-3], -1))
        else:
            items.append((tok, 1))
    return GeneratorWord(tuple(items))


# ---------------------------------------------------------------------------
# named elements


def _tree(n: int, *words) -> Tree:
    return Tree.from_expansions(n, "", *words)


def _f_element(spec: SubgroupSpec, a: Tree, b: Tree) -> Element:
    return el.from_trees(spec, a, range_=b)


def x_element(spec: SubgroupSpec, k: int) -> Element:
    """x_k of the infinite family: the caret at child ``i`` of spine node ``q`` rotated onto the spine."""
    n = spec.n
    q, i = divmod(k, n - 1)
    top = (n - 1,) * q
    dom = spine(n, q + 2)
    ran = spine(n, q + 1).expand(top + (i,))
    return _f_element(spec, dom, ran)


def h_element(spec: SubgroupSpec, i: int, tree: Optional[Tree] = None, braid: Optional[BraidWord] = None) -> Element:
    t = base_tree(spec.n) if tree is None else tree
    b = BraidWord(t.leaf_count, (i,)) if braid is None else braid
    return el.from_trees(spec, t, b)


def label_element(spec: SubgroupSpec, tree: Tree, placed: Dict[int, LabelWord], braid: Optional[BraidWord] = None) -> Element:
    """Element over ``tree`` x ``tree`` with labels at the given 1-based positions."""
    labels = [()] * tree.leaf_count
    for p, lab in placed.items():
        labels[p - 1] = tuple(lab)
    return el.from_trees(spec, tree, braid, labels)


def g_element(spec: SubgroupSpec, s: str, exp: int = 1) -> Element:
    if s not in spec.gens:
        raise SubgroupError(f"{s!r} is not a generator of {spec.name}")
    return label_element(spec, Tree.caret(spec.n), {1: ((s, exp),)})


def tree_name(t: Tree) -> str:
    return format_shape(t.shape, "")


def e_name(t: Tree) -> str:
    return "e_" + tree_name(t)


def _parse_compact(text: str, n: int) -> Tree:
    from .grammar import parse_tree

    spaced = text.replace("(", " ( ").replace(")", " ) ").replace(".", " . ")
    return parse_tree(spaced, n)


class GeneratorTable:
    """Resolves generator names of BV_n(H) to elements.

    ``extra`` holds additional named elements (used for conjugated sets).
    """

    def __init__(self, n: int, spec: Optional[SubgroupSpec] = None):
        if n < 2:
            raise RangeError("n must be at least 2")
        self.n = n
        self.spec = el.braid_spec(n) if spec is None else spec
        if self.spec.n != n:
            raise ValidationError("spec", f"acts on {self.spec.n} strands, expected {n}")
        self.base = base_tree(n)
        self.m = base_leaves(n)
        self.depth = base_depth(n)
        self.extra: Dict[str, Element] = {}
        self._cache: Dict[str, Element] = {}

    # -- names
    def x_names(self) -> list[str]:
        return [f"x_{i}" for i in range(self.n)]

    def h_names(self) -> list[str]:
        return [f"h_{i}" for i in range(1, self.m)]

    def g_names(self) -> list[str]:
        return [f"g_{s}" for s in self.spec.names()]

    def e_names(self) -> list[str]:
        from .trees import all_trees

        return [e_name(t) for t in all_trees(self.n, self.depth)]

    def standard_names(self) -> list[str]:
        """The 2n-element set: x_*, h_{m-1} and one g per generator of H."""
        return self.x_names() + [f"h_{self.m - 1}"] + self.g_names()

    def braided_names(self) -> list[str]:
        """Generators of BV_n (trivial labels): x_*, h_1..h_{n-1}, h_{m-1}."""
        return self.x_names() + [f"h_{i}" for i in range(1, self.n)] + [f"h_{self.m - 1}"]

    # -- resolution
    def element(self, name: str) -> Element:
        if name in self.extra:
            return self.extra[name]
        if name in self._cache:
            return self._cache[name]
        v = self._resolve(name)
        self._cache[name] = v
        return v

    def __contains__(self, name: str) -> bool:
        try:
            self.element(name)
        except (KeyError, ValueError, SubgroupError, RangeError):
            return False
        return True

    def _resolve(self, name: str) -> Element:
        kind, _, rest = name.partition("_")
        if kind == "x" and rest.isdigit() and int(rest) < self.n:
            return x_element(self.spec, int(rest))
        if kind == "h" and rest.isdigit() and 1 <= int(rest) < self.m:
            return h_element(self.spec, int(rest))
        if kind == "g" and rest in self.spec.gens:
            return g_element(self.spec, rest)
        if kind == "e" and rest:
            t = _parse_compact(rest, self.n)
            if t.leaf_count != self.m:
                raise KeyError(f"{name}: tree has {t.leaf_count} leaves, expected {self.m}")
            return _f_element(self.spec, t, self.base)
        raise KeyError(f"unknown generator {name!r}")


def standard_table(n: int, spec: Optional[SubgroupSpec] = None) -> GeneratorTable:
    return GeneratorTable(n, spec)


# ---------------------------------------------------------------------------
# evaluation


def evaluate(w: GeneratorWord, table: GeneratorTable, r: int = 1) -> Element:
    """Left-to-right product; nested words are evaluated once each."""
    memo: Dict[int, Element] = {}
    letters: Dict[str, Element] = {}

    def letter(name: str) -> Element:
        if name not in letters:
            letters[name] = el.simplify(el.reduce(table.element(name)))
        return letters[name]

    def ev(word: GeneratorWord) -> Element:
        key = id(word)
        if key in memo:
            return memo[key]
        acc = el.identity(table.spec, r)
        for x, e in word.items:
            f = ev(x) if isinstance(x, GeneratorWord) else letter(x)
            if e < 0:
                f = el.inverse(f)
            acc = el.simplify(el.reduce(el.compose(acc, f)))
        memo[key] = acc
        return acc

    return ev(w)


def evaluate_flat(w: GeneratorWord, table: GeneratorTable, r: int = 1) -> Element:
    """Reference evaluation letter by letter (no sharing)."""
    acc = el.identity(table.spec, r)
    for x, e in w.flat():
        f = table.element(x)
        acc = el.reduce(el.compose(acc, f if e > 0 else el.inverse(f)))
    return acc


# ---------------------------------------------------------------------------
# F_n: trivial braid and labels


def _subtrees_at(t: Tree, template: Tree) -> list:
    """Shapes of ``t`` hanging below each leaf of ``template`` (in leaf order)."""
    from .trees import _subshape

    return [_subshape(t.shape, w) for w in template.leaves()]


def _attach(template: Tree, subs: Sequence) -> Tree:
    from .trees import _replace

    shape = template.shape
    for w, s in reversed(list(zip(template.leaves(), subs))):
        shape = _replace(shape, w, s)
    return Tree(template.n, shape)


def _rotation_site(t: Tree) -> Optional[Tuple[int, int]]:
    """Shallowest spine node ``q`` with an internal child ``i < n-1``."""
    n = t.n
    shape, q = t.shape, 0
    while shape is not None:
        for i in range(n - 1):
            if shape[i] is not None:
                return q, i
        shape, q = shape[n - 1], q + 1
    return None


def _x_power_word(n: int, k: int) -> GeneratorWord:
    """x_k for k >= n, via x_k = x_0 x_{k-(n-1)} x_0^-1 (checked in the tests)."""
    if k < n:
        return GeneratorWord.letter(f"x_{k}")
    q = (k - 1) // (n - 1)
    base = k - q * (n - 1)
    x0 = GeneratorWord.letter("x_0")
    return GeneratorWord.of(x0 ** q, GeneratorWord.letter(f"x_{base}"), x0 ** (-q))


def _to_spine_word(t: Tree) -> Tuple[GeneratorWord, Tree]:
    """Word for (t, Id, S) where S is the spine with the same leaves."""
    n = t.n
    parts = []
    while True:
        site = _rotation_site(t)
        if site is None:
            return GeneratorWord.of(*parts), t
        q, i = site
        top = (n - 1,) * q
        src = spine(n, q + 1).expand(top + (i,)) if q + 1 >= 1 else None
        dst = spine(n, q + 2)
        t = _attach(dst, _subtrees_at(t, src))
        parts.append(_x_power_word(n, q * (n - 1) + i).inverse())


def decompose_F(v: Element, table: Optional[GeneratorTable] = None) -> GeneratorWord:
    """Word over x_0..x_{n-1} for an element of F_n (r = 1)."""
    if v.r != 1:
        raise ValidationError("r", "F_n decomposition is implemented for r = 1")
    if not braids.is_trivial(v.braid) or any(not v.spec.label_trivial(x) for x in v.labels):
        raise ValidationError("braid", "element is not in F_n")
    v = el.reduce(v)
    if not braids.is_trivial(v.braid):
        raise ValidationError("braid", "element is not in F_n")
    a, b = v.domain.trees[0], v.range.trees[0]
    if a.carets == 0:
        return GeneratorWord()
    wa, sa = _to_spine_word(a)
    wb, sb = _to_spine_word(b)
    assert sa == sb
    return GeneratorWord.of(wa, wb.inverse())


# ---------------------------------------------------------------------------
# trees with exactly three final carets


@lru_cache(maxsize=None)
def _build(n: int, size: int, req: tuple, k: int):
    """Shape over ``size`` leaves with exactly ``k`` final carets, one at each
    relative block start in ``req``; ``False`` if impossible."""
    if size == 1:
        return None if (not req and k == 0) else False
    if k < 1:
        return False
    if size == n:
        return (None,) * n if (k == 1 and req in ((), (0,))) else False
    carets = (size - 1) // (n - 1) - 1  # carets left for the children
    for split in _compositions(carets, n):
        sizes = [1 + a * (n - 1) for a in split]
        starts = list(itertools.accumulate([0] + sizes[:-1]))
        parts: list[list[int]] = [[] for _ in range(n)]
        ok = True
        for r in req:
            for c in range(n):
                if starts[c] <= r and r + n <= starts[c] + sizes[c]:
                    parts[c].append(r - starts[c])
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        internal = [c for c in range(n) if sizes[c] > 1]
        if len(internal) > k:
            continue
        for dist in _compositions(k - len(internal), len(internal)) if internal else [()]:
            if not internal and k:
                break
            kids = []
            for c in range(n):
                kc = 0
                if sizes[c] > 1:
                    kc = 1 + dist[internal.index(c)]
                s = _build(n, sizes[c], tuple(parts[c]), kc)
                if s is False:
                    break
                kids.append(s)
            else:
                return tuple(kids)
    return False


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def aligned_tree(n: int, depth: int, blocks: Iterable[int], finals: int = 3) -> Optional[Tree]:
    """A tree of the given depth with exactly ``finals`` final carets, having
    final carets whose leaf blocks start at the given 1-based positions."""
    req = tuple(sorted(set(p - 1 for p in blocks)))
    shape = _build(n, 1 + depth * (n - 1), req, finals)
    return None if shape is False else Tree(n, shape)


def default_three_caret_tree(n: int, depth: int) -> Tree:
    """T(n) with its last leaf expanded until the depth is reached."""
    t = base_tree(n)
    while t.carets < depth:
        t = t.expand(t.leaves()[-1])
    return t


# ---------------------------------------------------------------------------
# decomposition


def _key(v: Element) -> tuple:
    return (
        v.domain,
        v.range,
        braids.normal_form(v.braid),
        tuple(braids.normal_form(v.spec.artin(x)) for x in v.labels),
    )


def _gamma(l: int, j: int) -> BraidWord:
    """Braid taking the strand at position ``j`` to position 1."""
    return BraidWord(l, tuple(range(j - 1, 0, -1)))


def _single_tree(v: Element) -> Tuple[Tree, Tree]:
    if v.r != 1:
        raise ValidationError("r", "decomposition is implemented for r = 1")
    return v.domain.trees[0], v.range.trees[0]


def _strip_labels(v: Element) -> Tuple[Element, list]:
    """Split v into its label-free part and single-letter label factors.

    Returns (u, [(position, letter), ...]) with v = u * prod(label factors).
    """
    u = Element(v.spec, v.domain, v.braid, ((),) * v.l, v.range)
    letters = [(j, g) for j, lab in enumerate(v.labels, 1) for g in lab]
    return u, letters


def decompose_step(v: Element) -> List[Element]:
    """One peeling step: v as a product of elements of smaller depth."""
    n = v.n
    d = v.depth
    if d <= base_depth(n):
        raise DepthError(f"depth {d} is at most depth(T(n)) = {base_depth(n)}")
    t1, t2 = _single_tree(v)
    u, letters = _strip_labels(v)
    factors = _peel(u)
    if letters:
        s = spine(n, d)
        for j, (name, e) in letters:
            gam = _gamma(v.l, j)
            factors += _peel(el.from_trees(v.spec, t2, gam, None, s))
            factors.append(g_element(v.spec, name, e))
            factors += _peel(el.from_trees(v.spec, s, braids.inverse(gam), None, t2))
    return factors


def _choose_t3(t1: Tree, t2: Tree) -> Tuple[Tree, BraidWord, BraidWord]:
    n, d = t1.n, t1.carets
    l = t1.leaf_count
    c1s = [t1.position(w) for w in t1.final_carets()]
    c2s = [t2.position(w) for w in t2.final_carets()]
    for p1 in c1s:
        for p2 in c2s:
            if p1 != p2 and abs(p1 - p2) < n:
                continue
            t3 = aligned_tree(n, d, {p1, p2})
            if t3 is not None:
                return t3, BraidWord.identity(l), BraidWord.identity(l)
    t3 = default_three_caret_tree(n, d)
    c3 = t3.final_carets()
    r1 = braids.ribbon(t1, t1.final_carets()[0], t3, c3[0])
    r2 = braids.ribbon(t3, c3[1], t2, t2.final_carets()[0])
    return t3, r1, r2


def _peel(u: Element) -> List[Element]:
    """Ribbon peeling of a label-free element through a 3-final-caret tree."""
    t1, t2 = _single_tree(u)
    if t1.carets <= base_depth(u.n):
        return [u]
    t3, r1, r2 = _choose_t3(t1, t2)
    spec = u.spec
    out = [el.from_trees(spec, t1, r1, None, t3)]
    middle = braids.inverse(r1) * u.braid * braids.inverse(r2)
    for x in middle.free_reduced().letters:
        out.append(el.from_trees(spec, t3, BraidWord(middle.strands, (x,))))
    out.append(el.from_trees(spec, t3, r2, None, t2))
    return out


def _h_word(b: BraidWord) -> GeneratorWord:
    return GeneratorWord(tuple((f"h_{abs(x)}", 1 if x > 0 else -1) for x in b.letters))


def _e(t: Tree, base: Tree, exp: int = 1) -> GeneratorWord:
    if t == base:
        return GeneratorWord()
    return GeneratorWord.letter(e_name(t), exp)


def _expand_to_depth(v: Element, depth: int, base: Optional[Tree] = None) -> Element:
    if base is not None and v.depth < depth and base.contains(v.domain.trees[0]):
        return el.expand_domain_to(v, Forest.of(base))
    while v.depth < depth:
        v = el.expand_at_range_leaf(v, v.l)
    return v


def _as_g_letter(v: Element) -> Optional[GeneratorWord]:
    t1, t2 = _single_tree(v)
    if t1 != Tree.caret(v.n) or t2 != t1 or not braids.is_trivial(v.braid):
        return None
    if any(v.labels[1:]) or len(v.labels[0]) != 1:
        return None
    name, e = v.labels[0][0]
    return GeneratorWord.letter(f"g_{name}", e)


class Decomposer:
    """Decomposes elements of BV_n(H) (r = 1) into words over e, h and g."""

    def __init__(self, table: GeneratorTable):
        self.table = table
        self.n = table.n
        self.base = table.base
        self.depth = table.depth
        self._memo: Dict[tuple, GeneratorWord] = {}
        self._label_memo: Dict[Tuple[int, str, int], GeneratorWord] = {}

    def decompose(self, v: Element) -> GeneratorWord:
        if v.r == 1 and v.depth <= self.depth:
            # already shallow: no reduction, so generators map to themselves
            key = ("raw",) + _key(v)
            if key not in self._memo:
                self._memo[key] = self._base_case(v)
            return self._memo[key]
        v = el.reduce(v)
        key = _key(v)
        if key not in self._memo:
            if v.depth > self.depth:
                parts = [self.decompose(f) for f in decompose_step(v)]
                self._memo[key] = GeneratorWord.of(*parts)
            else:
                self._memo[key] = self._base_case(v)
        return self._memo[key]

    def _label_factor(self, j: int, name: str, e: int) -> GeneratorWord:
        """(T(n), Id, {letter at j}, T(n)) by conjugating g along the spine."""
        key = (j, name, e)
        if key not in self._label_memo:
            s = spine(self.n, self.depth)
            gam = _h_word(_gamma(self.table.m, j))
            core = GeneratorWord.of(_e(s, self.base, -1), GeneratorWord.letter(f"g_{name}", e), _e(s, self.base))
            self._label_memo[key] = GeneratorWord.of(gam, core, gam.inverse())
        return self._label_memo[key]

    def _base_case(self, v: Element) -> GeneratorWord:
        g = _as_g_letter(v)
        if g is not None:
            return g
        v = _expand_to_depth(v, self.depth, self.base)
        a, b = _single_tree(v)
        parts = [_e(a, self.base), _h_word(v.braid)]
        for j, lab in enumerate(v.labels, 1):
            for name, e in lab:
                parts.append(self._label_factor(j, name, e))
        parts.append(_e(b, self.base, -1))
        return GeneratorWord.of(*parts)


def decompose(v: Element, table: GeneratorTable) -> GeneratorWord:
    return Decomposer(table).decompose(v)


# ---------------------------------------------------------------------------
# rewriting h letters into small sets


def _caret_c(n: int) -> tuple:
    """Address of the rightmost final caret of T(n)."""
    return (1,) if n == 2 else (2,)


def shift_trees(n: int) -> dict:
    t = base_tree(n)
    c = _caret_c(n)
    cut = t.reduce_caret(c)
    if n == 2:
        t1, t2 = cut.expand((0, 0, 0)), cut.expand((0, 0, 1))
    else:
        t1, t2 = cut.expand((0, 0)), cut.expand((0, 1))
    tp = t if n <= 3 else cut.expand((n - 1,))
    last = tp.final_carets()[-1]
    cut2 = tp.reduce_caret(last)
    tpp = cut2.expand(cut2.leaves()[0])
    return {"T": t, "T1": t1, "T2": t2, "Tp": tp, "Tpp": tpp}


class HRewriter:
    """Words for h_i in smaller generating sets, each checked with ``equal``.

    ``parabolic`` is the set I of indices i with sigma_i in X (labels allowed);
    ``None`` means all of 1..n-1.
    """

    def __init__(self, table: GeneratorTable, parabolic: Optional[Iterable[int]] = None, verify: bool = True):
        self.table = table
        self.n = table.n
        self.m = table.m
        self.base = table.base
        self.I = set(range(1, self.n)) if parabolic is None else set(parabolic)
        self.verify = verify
        self.spine = spine(self.n, table.depth)
        self._words: Dict[str, GeneratorWord] = {}
        self.checked: Dict[str, bool] = {}
        self.trees = shift_trees(self.n)
        self.rho_copies: Dict[int, int] = {}  # k -> trailing copies of r'_k

    def _spec_name(self, i: int) -> str:
        name = f"s{i}"
        if name not in self.table.spec.gens or not braids.equal(self.table.spec.gens[name], BraidWord(self.n, (i,))):
            raise SubgroupError(f"H has no generator s{i} = sigma_{i}")
        return name

    def _check(self, key: str, word: GeneratorWord, target: Element) -> GeneratorWord:
        if self.verify:
            ok = el.equal(evaluate(word, self.table), target)
            self.checked[key] = ok
            if not ok:
                raise AssertionError(f"rewrite for {key} does not evaluate to its target")
        return word

    # -- label-moving elements
    def v_elem(self, i: int) -> Element:
        s = self._spec_name(i)
        return label_element(self.table.spec, self.base, {p: ((s, 1),) for p in range(1, self.n + 1)},
                             BraidWord(self.m, (i,)))

    def w_elem(self, i: int, k: int) -> Element:
        return label_element(self.table.spec, self.base, {k + 1: ((self._spec_name(i), 1),)})

    def z_elem(self, i: int) -> Element:
        s = self._spec_name(i)
        return label_element(self.table.spec, self.base, {j + 1: ((s, 1),) for j in range(i + 1, self.n)},
                             BraidWord(self.m, (i,)))

    def conj_elem(self, i: int) -> Element:
        """(T(n), s_i s_{i+1} s_i^-1, nu, T(n)): s_i at 0-based i-1, s_i^-1 at i+1; equals z_i h_{i+1} z_i^-1."""
        s = self._spec_name(i)
        return label_element(self.table.spec, self.base, {i: ((s, 1),), i + 2: ((s, -1),)},
                             BraidWord(self.m, (i, i + 1, -i)))

    def r_rep(self, k: int, copies: int) -> Element:
        """(T(n), r_k, rho_k, T(n)): labels r'_1..r'_k from position 3, then ``copies`` more r'_k."""
        spec = self.table.spec
        labels: Dict[int, LabelWord] = {}

        def rp(p: int) -> LabelWord:
            return tuple((self._spec_name(q), 1) for q in range(p, 0, -1) if q in self.I)

        for p in range(1, k + 1):
            labels[p + 2] = rp(p)
        for c in range(copies):
            labels[k + 3 + c] = rp(k)
        braid = BraidWord(self.m, tuple(range(k, 0, -1)))
        return label_element(spec, self.base, {p: lab for p, lab in labels.items() if lab}, braid)

    # -- words
    def _memo(self, key: str, build) -> GeneratorWord:
        if key not in self._words:
            self._words[key] = build()
        return self._words[key]

    def v_word(self, i: int) -> GeneratorWord:
        def build():
            g = GeneratorWord.letter(f"g_{self._spec_name(i)}")
            if self.n == 2:
                # T(2) expands its first leaf twice; the block of the first caret is
                # then the x_0-conjugate of the depth-one label element
                x0 = decompose(x_element(self.table.spec, 0), self.table)
                word = GeneratorWord.of(x0.inverse(), g, x0)
            else:
                word = g
            return self._check(f"v_{i}", word, self.v_elem(i))

        return self._memo(f"v_{i}", build)

    def w_word(self, i: int, k: int) -> GeneratorWord:
        def build():
            if k == 0:
                s = self.spine
                word = GeneratorWord.of(_e(s, self.base, -1), GeneratorWord.letter(f"g_{self._spec_name(i)}"),
                                        _e(s, self.base))
            elif k == i:
                xi = GeneratorWord.of(self.v_word(i), self.w_word(i, i - 1).inverse())
                word = GeneratorWord.of(self.v_word(i), xi.inverse())
            else:
                r = self.r_word(k)
                word = GeneratorWord.of(r, self.w_word(i, 0), r.inverse())
            return self._check(f"w_{i}^({k})", word, self.w_elem(i, k))

        return self._memo(f"w_{i}^({k})", build)

    def zp_word(self, q: int) -> GeneratorWord:
        return self.z_word(q) if q in self.I else GeneratorWord.letter(f"h_{q}")

    def r_word(self, k: int) -> GeneratorWord:
        def build():
            word = GeneratorWord.of(*[self.zp_word(q) for q in range(k, 0, -1)])
            if self.verify:
                val = evaluate(word, self.table)
                for copies in range(0, self.n - k):
                    if el.equal(val, self.r_rep(k, copies)):
                        self.rho_copies[k] = copies
                        break
                self.checked[f"r({k})"] = k in self.rho_copies
            return word

        return self._memo(f"r({k})", build)

    def z_word(self, i: int) -> GeneratorWord:
        def build():
            ws = [self.w_word(i, k).inverse() for k in range(0, i + 1)]
            word = GeneratorWord.of(self.v_word(i), *ws)
            return self._check(f"z_{i}", word, self.z_elem(i))

        return self._memo(f"z_{i}", build)

    def h_small(self, i: int) -> GeneratorWord:
        """h_i for i in I, over e, g and h_j with j not in I."""
        if not 1 <= i < self.n:
            raise RangeError(f"h_{i} is not one of h_1..h_{self.n - 1}")
        if i not in self.I:
            return GeneratorWord.letter(f"h_{i}")

        def build():
            if i == self.n - 1:
                word = self.z_word(i)
            else:
                hn = self.h_small(i + 1)
                w = self.w_word(i, i - 1)
                z = self.z_word(i)
                word = GeneratorWord.of(hn, w, z, hn, z.inverse(), w.inverse(), hn.inverse())
            return self._check(f"h_{i}", word, h_element(self.table.spec, i))

        return self._memo(f"h_{i}", build)

    def h_large(self, i: int) -> GeneratorWord:
        """h_i for n <= i <= m-2 over h_1..h_{n-1}, h_{m-1} and e."""
        n, m = self.n, self.m
        if not n <= i <= m - 2:
            raise RangeError(f"h_{i} is not one of h_{n}..h_{m - 2}")

        def build():
            tr = self.trees
            if i == n:
                tail = [GeneratorWord.letter(f"h_{j}", -1) for j in range(1, n)]
                word = GeneratorWord.of(_e(tr["T1"], self.base, -1), "h_1", _e(tr["T2"], self.base), *tail)
            else:
                conj = GeneratorWord.of(_e(tr["Tpp"], self.base, -1), _e(tr["Tp"], self.base))
                inner = self.h_large(i - n + 1) if i - n + 1 >= n else GeneratorWord.letter(f"h_{i - n + 1}")
                word = GeneratorWord.of(conj, inner, conj.inverse())
            return self._check(f"h_{i}", word, h_element(self.table.spec, i))

        return self._memo(f"H_{i}", build)


# ---------------------------------------------------------------------------
# rewriting into the small generating sets


class Rewriter:
    """Substitutes generator letters by words, sharing substituted blocks."""

    def __init__(self, rules, recursive: bool = True):
        self.rules = rules  # name -> GeneratorWord or None (keep)
        self.recursive = recursive
        self._memo: Dict[int, tuple] = {}
        self._letters: Dict[str, GeneratorWord] = {}

    def letter(self, name: str) -> GeneratorWord:
        if name not in self._letters:
            rep = self.rules(name)
            if rep is None:
                rep = GeneratorWord.letter(name)
            elif self.recursive:
                rep = self(rep)
            self._letters[name] = rep
        return self._letters[name]

    def __call__(self, w: GeneratorWord) -> GeneratorWord:
        hit = self._memo.get(id(w))
        if hit is not None and hit[0] is w:
            return hit[1]
        items = []
        for x, e in w.items:
            sub = self(x) if isinstance(x, GeneratorWord) else self.letter(x)
            if len(sub.items) == 1 and not isinstance(sub.items[0][0], GeneratorWord):
                items.append((sub.items[0][0], sub.items[0][1] * e))
            elif sub.items:
                items.append((sub, e))
        out = GeneratorWord(tuple(items))
        self._memo[id(w)] = (w, out)  # keep w alive so its id stays unique
        return out


def _e_rule(table: GeneratorTable):
    cache: Dict[str, GeneratorWord] = {}

    def rule(name: str) -> Optional[GeneratorWord]:
        if name.startswith("e_"):
            if name not in cache:
                cache[name] = decompose_F(table.element(name))
            return cache[name]
        return None

    return rule


def generating_set_rewriter(table: GeneratorTable, mode: str = "standard",
                            parabolic: Optional[Iterable[int]] = None, verify: bool = True) -> Tuple[Rewriter, HRewriter]:
    """Rewriter onto one of the small sets.

    ``standard``: x_*, h_{m-1}, g_* (needs every s_i = sigma_i in H);
    ``braided``:  x_*, h_1..h_{n-1}, h_{m-1};
    ``parabolic``: x_*, h_i (i not in I), h_{m-1}, g_{s_i} (i in I).
    """
    n, m = table.n, table.m
    if mode == "standard":
        small = set(range(1, n))
    elif mode == "braided":
        small = set()
    elif mode == "parabolic":
        small = set(parabolic or ())
    else:
        raise ValueError(f"unknown mode {mode!r}")
    hwords = HRewriter(table, small, verify=verify)
    e_rule = _e_rule(table)

    def rule(name: str):
        if name.startswith("e_"):
            return e_rule(name)
        if name.startswith("h_"):
            i = int(name[2:])
            if n <= i <= m - 2:
                return hwords.h_large(i)
            if i < n and i in small:
                return hwords.h_small(i)
        return None

    return Rewriter(rule), hwords


def decompose_to_generators(v: Element, table: GeneratorTable, mode: str = "standard",
                            parabolic: Optional[Iterable[int]] = None) -> GeneratorWord:
    rw, _ = generating_set_rewriter(table, mode, parabolic, verify=False)
    return rw(decompose(v, table))


# ---------------------------------------------------------------------------
# parabolic subgroups


def parabolic_spec(n: int, X: Iterable[int], alpha: Optional[BraidWord] = None) -> SubgroupSpec:
    """alpha^-1 A_X alpha with generators ``s<i>`` (alpha trivial) or ``c<i>``."""
    X = sorted(set(X))
    for i in X:
        if not 1 <= i < n:
            raise ValidationError("X", f"sigma_{i} is not an Artin generator of B_{n}")
    if alpha is None or not alpha.letters:
        return SubgroupSpec("A{" + ",".join(map(str, X)) + "}", n, {f"s{i}": BraidWord(n, (i,)) for i in X})
    gens = {f"c{i}": braids.inverse(alpha) * BraidWord(n, (i,)) * alpha for i in X}
    return SubgroupSpec("A{" + ",".join(map(str, X)) + "}^" + str(alpha).replace(" ", ""), n, gens)


def parabolic_table(n: int, X: Iterable[int], alpha: Optional[BraidWord] = None) -> Tuple[GeneratorTable, list[str]]:
    """The 2n-element generating set of BV_n(alpha^-1 A_X alpha).

    Returns the table and the member names.  For nontrivial alpha, members
    are conjugates by h_alpha = (T(n), alpha, Id, T(n)); the label generators
    are (R, Id, {alpha^-1 s alpha, Id, ...}, R) conjugated by h_alpha.
    """
    X = sorted(set(X))
    spec = parabolic_spec(n, X, alpha)
    table = GeneratorTable(n, spec)
    plain = [f"x_{i}" for i in range(n)] + [f"h_{i}" for i in range(1, n) if i not in X] + [f"h_{table.m - 1}"]
    if alpha is None or not alpha.letters:
        return table, plain + [f"g_s{i}" for i in X]
    ha = h_alpha(spec, alpha)
    hai = el.inverse(ha)
    names = []
    for name in plain:
        conj = f"{name}^a"
        table.extra[conj] = el.reduce(hai * table.element(name) * ha)
        names.append(conj)
    for i in X:
        conj = f"g_c{i}^a"
        table.extra[conj] = el.reduce(hai * g_element(spec, f"c{i}") * ha)
        names.append(conj)
    return table, names


def h_alpha(spec: SubgroupSpec, alpha: BraidWord) -> Element:
    """(T(n), alpha, Id, T(n)) with alpha acting on the first n strands."""
    t = base_tree(spec.n)
    return el.from_trees(spec, t, BraidWord(t.leaf_count, alpha.letters))


def parabolic_rewrite(n: int, X: Iterable[int], i: int, alpha: Optional[BraidWord] = None) -> Tuple[GeneratorTable, GeneratorWord, Element]:
    """Word over the parabolic set for h_i with sigma_i in X, and its target.

    For alpha trivial this is the small-set rewrite over e, h_j (j not in
    X) and g, pushed onto x_* by the F_n decomposition.  Otherwise the same
    word has e and h letters conjugated by h_alpha and g letters by
    g_alpha h_alpha; the target is h_alpha^-1 h_i h_alpha.
    """
    X = sorted(set(X))
    if i not in X:
        raise ValidationError("i", f"sigma_{i} is not in X")
    plain = GeneratorTable(n, parabolic_spec(n, X))
    rw, _ = generating_set_rewriter(plain, "parabolic", X)
    word = rw(GeneratorWord.letter(f"h_{i}"))
    table, _ = parabolic_table(n, X, alpha)
    if alpha is None or not alpha.letters:
        return table, word, h_element(table.spec, i)

    def rename(name: str) -> GeneratorWord:
        if name.startswith("g_s"):
            return GeneratorWord.letter("g_c" + name[3:] + "^a")
        return GeneratorWord.letter(name + "^a")

    ha = h_alpha(table.spec, alpha)
    target = el.inverse(ha) * h_element(table.spec, i) * ha
    return table, Rewriter(rename, recursive=False)(word), target
