"""Braided strand diagrams as layered wiring diagrams.

A diagram is a sequence of slices acting on a row of wires, read top to
bottom.  ``Split(p)`` turns wire ``p`` into ``n`` wires, ``Merge(p)`` does the
reverse, ``White(p, h)`` puts a labelled vertex on wire ``p`` and
``Cross(p, s)`` crosses wires ``p`` and ``p + 1`` (``s = +1``: ``p`` passes
over).  Slices with disjoint supports commute; equality is taken modulo those
exchanges, so the underlying object is the planar event graph.

Moves (all oriented so that splits rise, merges sink, and whites gather
between the braid and the merges):

1. split, a tube braid carrying whites, merge  ->  one strand with a white
2. merge, whites, split  ->  braid of the label, cloned whites
3. white above a crossing  ->  white below it, on the same strand
4. two whites on one wire  ->  one white with the concatenated label
5. crossing above a split / merge above a crossing  ->  cabled crossings
6. merge above a white / white above a split  ->  label pushed through
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import braids
from .braids import BraidWord
from .elements import Element, LabelWord, SubgroupSpec, braid_spec, label_reduce
from .errors import MoveError, NotAnElement, ValidationError
from .trees import Forest, LeafAddress, Tree


@dataclass(frozen=True)
class Split:
    p: int


@dataclass(frozen=True)
class Merge:
    p: int


@dataclass(frozen=True)
class White:
    p: int
    label: LabelWord


@dataclass(frozen=True)
class Cross:
    p: int
    sign: int = 1


Slice = Union[Split, Merge, White, Cross]


def _moved(s: Slice, p: int) -> Slice:
    if isinstance(s, Split):
        return Split(p)
    if isinstance(s, Merge):
        return Merge(p)
    if isinstance(s, White):
        return White(p, s.label)
    return Cross(p, s.sign)


@dataclass(frozen=True)
class Diagram:
    spec: SubgroupSpec
    sources: int
    slices: Tuple[Slice, ...] = ()

    def __post_init__(self):
        _graph(self)  # validates wire bookkeeping

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def sinks(self) -> int:
        return self.widths()[-1]

    def widths(self) -> list[int]:
        w = [self.sources]
        for s in self.slices:
            if isinstance(s, Split):
                w.append(w[-1] + self.n - 1)
            elif isinstance(s, Merge):
                w.append(w[-1] - self.n + 1)
            else:
                w.append(w[-1])
        return w

    def counts(self) -> dict:
        out = {"split": 0, "merge": 0, "white": 0, "cross": 0}
        for s in self.slices:
            out[type(s).__name__.lower()] += 1
        return out

    def measure(self) -> int:
        c = self.counts()
        return c["split"] + c["merge"]

    def __len__(self) -> int:
        return len(self.slices)

    def dump(self) -> str:
        from .grammar import format_label

        out = []
        for s in self.slices:
            if isinstance(s, White):
                out.append(f"W{s.p}[{format_label(s.label)}]")
            elif isinstance(s, Cross):
                out.append(f"{'X' if s.sign > 0 else 'x'}{s.p}")
            else:
                out.append(f"{type(s).__name__[0]}{s.p}")
        return " ".join(out)


# ---------------------------------------------------------------------------
# event graph


@dataclass
class _Graph:
    ins: List[tuple]
    outs: List[tuple]
    sources: tuple
    anc: List[int] = field(default_factory=list)  # bitsets over event indices
    desc: List[int] = field(default_factory=list)
    consumer: Dict[int, int] = field(default_factory=dict)
    producer: Dict[int, int] = field(default_factory=dict)


def _graph(d: Diagram) -> _Graph:
    n = d.n
    front = list(range(d.sources))
    nxt = d.sources
    ins, outs = [], []
    for k, s in enumerate(d.slices):
        p = s.p - 1
        span = n if isinstance(s, Merge) else 2 if isinstance(s, Cross) else 1
        if p < 0 or p + span > len(front):
            raise ValidationError("slices", f"slice {k} ({s}) out of range for {len(front)} wires")
        if isinstance(s, Cross) and s.sign not in (1, -1):
            raise ValidationError("slices", f"slice {k} has sign {s.sign}")
        i = tuple(front[p : p + span])
        if isinstance(s, Split):
            o = tuple(range(nxt, nxt + n))
        elif isinstance(s, Cross):
            o = (nxt, nxt + 1)
        else:
            o = (nxt,)
        nxt += len(o)
        front[p : p + span] = o
        ins.append(i)
        outs.append(o)
    g = _Graph(ins, outs, tuple(range(d.sources)))
    for k, (i, o) in enumerate(zip(ins, outs)):
        for w in i:
            g.consumer[w] = k
        for w in o:
            g.producer[w] = k
    m = len(ins)
    g.anc = [0] * m
    for k in range(m):
        a = 0
        for w in ins[k]:
            j = g.producer.get(w)
            if j is not None:
                a |= (1 << j) | g.anc[j]
        g.anc[k] = a
    g.desc = [0] * m
    for k in range(m - 1, -1, -1):
        dd = 0
        for w in outs[k]:
            j = g.consumer.get(w)
            if j is not None:
                dd |= (1 << j) | g.desc[j]
        g.desc[k] = dd
    return g


def _linearize(d: Diagram, g: _Graph, order: Sequence[int]) -> Tuple[Slice, ...]:
    front = list(g.sources)
    out = []
    for k in order:
        i = g.ins[k]
        idx = front.index(i[0])
        if tuple(front[idx : idx + len(i)]) != i:
            raise MoveError("reordering broke planarity")
        out.append(_moved(d.slices[k], idx + 1))
        front[idx : idx + len(i)] = g.outs[k]
    return tuple(out)


def _canonical_order(d: Diagram, g: _Graph) -> list[int]:
    """Leftmost-available-first linearization; invariant under far commutation."""
    front = list(g.sources)
    done = [False] * len(d.slices)
    order = []
    for _ in range(len(d.slices)):
        best, best_pos = None, None
        for k in range(len(d.slices)):
            if done[k]:
                continue
            i = g.ins[k]
            try:
                idx = front.index(i[0])
            except ValueError:
                continue
            if tuple(front[idx : idx + len(i)]) != i:
                continue
            if best_pos is None or idx < best_pos:
                best, best_pos = k, idx
        done[best] = True
        order.append(best)
        i = g.ins[best]
        front[best_pos : best_pos + len(i)] = g.outs[best]
    return order


def canonical(d: Diagram) -> Diagram:
    g = _graph(d)
    return Diagram(d.spec, d.sources, _linearize(d, g, _canonical_order(d, g)))


def _make_contiguous(d: Diagram, g: _Graph, pattern: Sequence[int]) -> Tuple[Tuple[Slice, ...], int]:
    """Reorder so the convex event set ``pattern`` is contiguous; return (slices, start)."""
    pset = set(pattern)
    lo, hi = min(pset), max(pset)
    pmask = 0
    for k in pset:
        pmask |= 1 << k
    before, after = [], []
    for k in range(lo + 1, hi):
        if k in pset:
            continue
        if g.desc[k] & pmask:
            if g.anc[k] & pmask:
                raise MoveError("pattern is not convex")
            before.append(k)
        else:
            after.append(k)
    order = list(range(lo)) + before + sorted(pset) + after + list(range(hi + 1, len(d.slices)))
    return _linearize(d, g, order), lo + len(before)


# ---------------------------------------------------------------------------
# moves


@dataclass(frozen=True)
class MoveInstance:
    kind: str  # "1".."6" with a/b suffix for moves 5 and 6
    sites: Tuple[int, ...]  # slice indices in the diagram the move was found in


def _label_trivial(spec: SubgroupSpec, h: LabelWord) -> bool:
    return spec.label_trivial(h)


def _label_crosses(spec: SubgroupSpec, h: LabelWord, p: int) -> list[Slice]:
    return [Cross(abs(x) + p - 1, 1 if x > 0 else -1) for x in spec.artin(h).letters]


def _clone_whites(spec: SubgroupSpec, h: LabelWord, p: int) -> list[Slice]:
    if _label_trivial(spec, h):
        return []
    return [White(p + k, h) for k in range(spec.n)]


def _rewrite_1(spec: SubgroupSpec, seg: Sequence[Slice]) -> list[Slice]:
    n = spec.n
    s, body, m = seg[0], seg[1:-1], seg[-1]
    if not (isinstance(s, Split) and isinstance(m, Merge)):
        raise MoveError("move 1 needs a split and a merge")
    width = max([s.p + n - 1, m.p + n - 1] + [x.p + (1 if isinstance(x, Cross) else 0) for x in body])
    front = list(range(width))
    whites: Dict[int, LabelWord] = {}
    letters = []
    for x in body:
        if isinstance(x, Cross):
            letters.append(x.sign * x.p)
            front[x.p - 1], front[x.p] = front[x.p], front[x.p - 1]
        elif isinstance(x, White):
            whites[front[x.p - 1]] = whites.get(front[x.p - 1], ()) + x.label
        else:
            raise MoveError("move 1 region may only contain crossings and whites")
    tube = list(range(s.p - 1, s.p - 1 + n))
    if sorted(front.index(t) for t in tube) != list(range(m.p - 1, m.p - 1 + n)):
        raise MoveError("split outputs do not reach the merge inputs")
    braid = BraidWord(width, tuple(letters))
    try:
        inner, outer = braids.extract_cable(braid, s.p, n)
    except braids.NotACable as e:
        raise MoveError(f"split strands do not form a tube: {e}") from None
    for t in tube:
        if not braids.equal(spec.artin(whites.get(t, ())), inner):
            raise MoveError("white labels on the tube do not match its inner braid")
    out: list[Slice] = [Cross(abs(x), 1 if x > 0 else -1) for x in outer.letters]
    h = whites.get(tube[0], ())
    if not _label_trivial(spec, h):
        out.append(White(m.p, label_reduce(h)))
    for strand, lab in sorted(whites.items()):
        if strand in tube:
            continue
        f = front.index(strand) + 1
        if f > m.p:
            f -= n - 1
        out.append(White(f, lab))
    return out


def _rewrite_2(spec: SubgroupSpec, seg: Sequence[Slice]) -> list[Slice]:
    m, whites, s = seg[0], seg[1:-1], seg[-1]
    if not (isinstance(m, Merge) and isinstance(s, Split) and all(isinstance(w, White) for w in whites)):
        raise MoveError("move 2 needs merge, whites, split")
    h: LabelWord = label_reduce(sum((w.label for w in whites), ()))
    return _label_crosses(spec, h, m.p) + _clone_whites(spec, h, m.p)


def _rewrite_3(spec: SubgroupSpec, seg: Sequence[Slice]) -> list[Slice]:
    w, c = seg
    if not (isinstance(w, White) and isinstance(c, Cross)):
        raise MoveError("move 3 needs a white above a crossing")
    if c.p == w.p:
        q = w.p + 1
    elif c.p == w.p - 1:
        q = w.p - 1
    else:
        raise MoveError("crossing does not touch the white's wire")
    return [c, White(q, w.label)]


def _rewrite_4(spec: SubgroupSpec, seg: Sequence[Slice]) -> list[Slice]:
    a, b = seg
    if not (isinstance(a, White) and isinstance(b, White) and a.p == b.p):
        raise MoveError("move 4 needs two whites on one wire")
    h = label_reduce(a.label + b.label)
    return [] if _label_trivial(spec, h) else [White(a.p, h)]


def _rewrite_5(spec: SubgroupSpec, seg: Sequence[Slice]) -> list[Slice]:
    n = spec.n
    a, b = seg
    if isinstance(a, Cross) and isinstance(b, Split):
        p, sgn = a.p, a.sign
        if b.p == p + 1:
            return [Split(p)] + [Cross(j, sgn) for j in range(p + n - 1, p - 1, -1)]
        if b.p == p:
            return [Split(p + 1)] + [Cross(j, sgn) for j in range(p, p + n)]
        raise MoveError("split does not touch the crossing")
    if isinstance(a, Merge) and isinstance(b, Cross):
        p, sgn = a.p, b.sign
        if b.p == p:
            return [Cross(j, sgn) for j in range(p + n - 1, p - 1, -1)] + [Merge(p + 1)]
        if b.p == p - 1:
            return [Cross(j, sgn) for j in range(p - 1, p + n - 1)] + [Merge(p - 1)]
        raise MoveError("crossing does not touch the merge")
    raise MoveError("move 5 needs crossing-split or merge-crossing")


def _rewrite_6(spec: SubgroupSpec, seg: Sequence[Slice]) -> list[Slice]:
    a, b = seg
    if isinstance(a, Merge) and isinstance(b, White) and a.p == b.p:
        return _label_crosses(spec, b.label, a.p) + _clone_whites(spec, b.label, a.p) + [Merge(a.p)]
    if isinstance(a, White) and isinstance(b, Split) and a.p == b.p:
        return [Split(a.p)] + _label_crosses(spec, a.label, a.p) + _clone_whites(spec, a.label, a.p)
    raise MoveError("move 6 needs merge-white or white-split on one wire")


Rewrite = Callable[[SubgroupSpec, Sequence[Slice]], List[Slice]]

MOVE_TABLE: Dict[str, Rewrite] = {
    "1": _rewrite_1,
    "2": _rewrite_2,
    "3": _rewrite_3,
    "4": _rewrite_4,
    "5": _rewrite_5,
    "6": _rewrite_6,
}


def _clean(spec: SubgroupSpec, slices: Sequence[Slice]) -> tuple:
    return tuple(s for s in slices if not (isinstance(s, White) and _label_trivial(spec, s.label)))


def apply_move(d: Diagram, m: MoveInstance, table: Optional[Dict[str, Rewrite]] = None) -> Diagram:
    table = MOVE_TABLE if table is None else table
    g = _graph(d)
    if any(not 0 <= k < len(d.slices) for k in m.sites):
        raise MoveError("move site out of range")
    slices, start = _make_contiguous(d, g, m.sites)
    seg = slices[start : start + len(m.sites)]
    new = table[m.kind](d.spec, seg)
    out = slices[:start] + tuple(new) + slices[start + len(m.sites) :]
    return Diagram(d.spec, d.sources, _clean(d.spec, out))


def _next_event(g: _Graph, k: int, which: int = 0) -> Optional[int]:
    return g.consumer.get(g.outs[k][which])


def enabled_moves(d: Diagram, first_only: bool = False) -> list[MoveInstance]:
    g = _graph(d)
    sl = d.slices
    out: list[MoveInstance] = []

    def add(kind, sites):
        out.append(MoveInstance(kind, tuple(sites)))
        return first_only

    for k, s in enumerate(sl):
        if isinstance(s, White):
            j = _next_event(g, k)
            if j is None:
                continue
            t = sl[j]
            if isinstance(t, Cross) and add("3", (k, j)):
                return out
            if isinstance(t, White) and add("4", (k, j)):
                return out
            if isinstance(t, Split) and add("6", (k, j)):
                return out
        elif isinstance(s, Cross):
            for which in (0, 1):
                j = _next_event(g, k, which)
                if j is not None and isinstance(sl[j], Split) and add("5", (k, j)):
                    return out
        elif isinstance(s, Merge):
            j = _next_event(g, k)
            if j is None:
                continue
            t = sl[j]
            if isinstance(t, Cross) and add("5", (k, j)):
                return out
            if isinstance(t, White) and add("6", (k, j)):
                return out
            chain = [k]
            while j is not None and isinstance(sl[j], White):
                chain.append(j)
                j = _next_event(g, j)
            if j is not None and isinstance(sl[j], Split) and add("2", chain + [j]):
                return out
    for k, s in enumerate(sl):
        if not isinstance(s, Split):
            continue
        for j, t in enumerate(sl):
            if not isinstance(t, Merge) or not (g.desc[k] >> j) & 1:
                continue
            region = [i for i in range(k + 1, j) if (g.desc[k] >> i) & 1 and (g.anc[j] >> i) & 1]
            if any(not isinstance(sl[i], (Cross, White)) for i in region):
                continue
            sites = [k] + region + [j]
            if _move1_ok(d, g, sites) and add("1", sites):
                return out
    return out


def _move1_ok(d: Diagram, g: _Graph, sites: Sequence[int]) -> bool:
    try:
        slices, start = _make_contiguous(d, g, sites)
        _rewrite_1(d.spec, slices[start : start + len(sites)])
    except MoveError:
        return False
    return True


class NormalizationError(RuntimeError):
    pass


def normal_form(d: Diagram, max_steps: int = 20_000, check_measure: bool = True,
                table: Optional[Dict[str, Rewrite]] = None) -> Diagram:
    d = Diagram(d.spec, d.sources, _clean(d.spec, d.slices))
    for _ in range(max_steps):
        moves = enabled_moves(d, first_only=True)
        if not moves:
            return d
        nxt = apply_move(d, moves[0], table)
        if check_measure:
            assert_measure(d, nxt, moves[0])
        d = nxt
    raise NormalizationError(f"no normal form within {max_steps} steps")


def assert_measure(before: Diagram, after: Diagram, m: MoveInstance) -> None:
    a, b = before.measure(), after.measure()
    if m.kind in ("1", "2"):
        ok = b < a
    else:
        ok = b <= a
    if not ok:
        raise AssertionError(f"move {m.kind} changed #split+#merge from {a} to {b}")


# ---------------------------------------------------------------------------
# layered shape, equality, conversion


_LAYER = {Split: 0, Cross: 1, White: 2, Merge: 3}


def is_layered(d: Diagram) -> bool:
    g = _graph(d)
    for k, s in enumerate(d.slices):
        for w in g.ins[k]:
            j = g.producer.get(w)
            if j is not None and _LAYER[type(d.slices[j])] > _LAYER[type(s)]:
                return False
    return True


@dataclass(frozen=True)
class Layers:
    domain: Forest
    braid: BraidWord
    labels: Tuple[LabelWord, ...]
    range: Forest


def _forest_from_splits(n: int, roots: int, splits: Sequence[int]) -> Forest:
    front = [LeafAddress(i, ()) for i in range(1, roots + 1)]
    f = Forest.trivial(n, roots)
    for p in splits:
        a = front[p - 1]
        f = f.expand(a)
        front[p - 1 : p] = [LeafAddress(a.root, a.word + (c,)) for c in range(n)]
    return f


def layers(d: Diagram) -> Layers:
    """Cut a layered diagram into (domain forest, braid, labels, range forest)."""
    if not is_layered(d):
        raise NotAnElement("diagram is not split/cross/white/merge layered")
    g = _graph(d)
    order = sorted(range(len(d.slices)), key=lambda k: (_LAYER[type(d.slices[k])], k))
    sl = _linearize(d, g, order)
    n = d.n
    splits = [s.p for s in sl if isinstance(s, Split)]
    merges = [s.p for s in sl if isinstance(s, Merge)]
    domain = _forest_from_splits(n, d.sources, splits)
    rng = _forest_from_splits(n, d.sinks, list(reversed(merges)))
    l = domain.leaf_count
    letters = tuple(s.sign * s.p for s in sl if isinstance(s, Cross))
    labels: list[LabelWord] = [()] * l
    for s in sl:
        if isinstance(s, White):
            labels[s.p - 1] = labels[s.p - 1] + s.label
    return Layers(domain, BraidWord(l, letters), tuple(labels), rng)


def _label_key(spec: SubgroupSpec, h: LabelWord):
    return braids.normal_form(spec.artin(h))


def diagram_equal(d1: Diagram, d2: Diagram) -> bool:
    """Equality modulo far commutation, braid-equal labels and, between
    layered diagrams, braid-equal crossing layers."""
    if d1.spec != d2.spec or d1.sources != d2.sources:
        return False
    d1 = Diagram(d1.spec, d1.sources, _clean(d1.spec, d1.slices))
    d2 = Diagram(d2.spec, d2.sources, _clean(d2.spec, d2.slices))
    if d1.sinks != d2.sinks:
        return False
    if is_layered(d1) and is_layered(d2):
        a, b = layers(d1), layers(d2)
        return (
            a.domain == b.domain
            and a.range == b.range
            and braids.equal(a.braid, b.braid)
            and all(d1.spec.label_equal(x, y) for x, y in zip(a.labels, b.labels))
        )
    return _syntactic_key(d1) == _syntactic_key(d2)


def _syntactic_key(d: Diagram) -> tuple:
    key = []
    for s in canonical(d).slices:
        if isinstance(s, White):
            key.append(("W", s.p, _label_key(d.spec, s.label)))
        elif isinstance(s, Cross):
            key.append(("X", s.p, s.sign))
        else:
            key.append((type(s).__name__, s.p))
    return tuple(key)


def _split_positions(f: Forest) -> list[int]:
    """Preorder split positions that grow the trivial forest into ``f``."""
    out = []
    front = [LeafAddress(i, ()) for i in range(1, f.r + 1)]
    stack = list(reversed(front))
    while stack:
        a = stack.pop()
        t = f.trees[a.root - 1]
        if t.is_leaf(a.word):
            continue
        p = front.index(a)
        out.append(p + 1)
        kids = [LeafAddress(a.root, a.word + (c,)) for c in range(f.n)]
        front[p : p + 1] = kids
        stack.extend(reversed(kids))
    return out


def from_element(v: Element) -> Diagram:
    slices: list[Slice] = [Split(p) for p in _split_positions(v.domain)]
    slices += [Cross(abs(x), 1 if x > 0 else -1) for x in v.braid.letters]
    slices += [White(i, lab) for i, lab in enumerate(v.labels, 1) if lab]
    slices += [Merge(p) for p in reversed(_split_positions(v.range))]
    return Diagram(v.spec, v.r, tuple(slices))


def to_element(d: Diagram, normalize: bool = True) -> Element:
    nf = normal_form(d) if normalize else d
    if nf.sources != nf.sinks:
        raise NotAnElement(f"{nf.sources} sources but {nf.sinks} sinks")
    lay = layers(nf)
    return Element(d.spec, lay.domain, lay.braid, lay.labels, lay.range)


def path_shape_violations(d: Diagram) -> list[str]:
    """Reduced-shape checks: layering and at most one white on each path."""
    out = []
    if not is_layered(d):
        out.append("not layered")
    g = _graph(d)
    whites = [k for k, s in enumerate(d.slices) if isinstance(s, White)]
    for k in whites:
        if any((g.desc[k] >> j) & 1 for j in whites):
            out.append(f"two whites on one path at slice {k}")
    for k, s in enumerate(d.slices):
        if isinstance(s, Merge) and any(isinstance(d.slices[j], Split) for j in range(len(d.slices)) if (g.desc[k] >> j) & 1):
            out.append(f"merge before split at slice {k}")
    return out


# ---------------------------------------------------------------------------
# random diagrams and confluence


def _random_label(spec: SubgroupSpec, rng: random.Random) -> LabelWord:
    names = spec.names()
    while True:
        h = tuple((rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(1, 2 if spec.n > 2 else 1)))
        h = label_reduce(h)
        if h and not _label_trivial(spec, h):
            return h


def random_diagram(spec: SubgroupSpec, seed: int, max_slices: int = 12, sources: int = 1,
                   sinks: Optional[int] = None, fuzz: bool = False) -> Diagram:
    """A random diagram with ``sources`` inputs.

    By default the output has as many sinks as sources (element-shaped); with
    ``fuzz`` the sink count is whatever the random walk produced.
    """
    rng = random.Random(seed)
    n = spec.n
    target = sources if sinks is None else sinks
    for _ in range(1000):
        width = sources
        slices: list[Slice] = []
        length = rng.randint(0, max_slices)
        for _ in range(length):
            kinds = ["split"]
            if width >= n:
                kinds.append("merge")
            if width >= 2:
                kinds += ["cross", "cross"]
            if spec.gens:
                kinds.append("white")
            kind = rng.choice(kinds)
            if kind == "split":
                slices.append(Split(rng.randint(1, width)))
                width += n - 1
            elif kind == "merge":
                slices.append(Merge(rng.randint(1, width - n + 1)))
                width -= n - 1
            elif kind == "cross":
                slices.append(Cross(rng.randint(1, width - 1), rng.choice((1, -1))))
            else:
                slices.append(White(rng.randint(1, width), _random_label(spec, rng)))
        if not fuzz:
            while width > target and width - target >= n - 1:
                slices.append(Merge(rng.randint(1, width - n + 1)))
                width -= n - 1
            while width < target:
                slices.append(Split(rng.randint(1, width)))
                width += n - 1
            if width != target or len(slices) > max_slices:
                continue
        return Diagram(spec, sources, tuple(slices))
    raise RuntimeError("could not build a diagram within the slice budget")


@dataclass
class ConfluenceReport:
    diagrams: int = 0
    move_pairs: int = 0
    rewrite_steps: int = 0
    counterexamples: list = field(default_factory=list)
    measure_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.measure_violations

    def summary(self) -> str:
        return (f"{self.diagrams} diagrams, {self.move_pairs} move pairs, "
                f"{len(self.counterexamples)} counterexamples, {len(self.measure_violations)} measure violations")


def _nf_counted(d: Diagram, report: ConfluenceReport, table) -> Diagram:
    for _ in range(20_000):
        moves = enabled_moves(d, first_only=True)
        if not moves:
            return d
        nxt = apply_move(d, moves[0], table)
        report.rewrite_steps += 1
        try:
            assert_measure(d, nxt, moves[0])
        except AssertionError as e:
            report.measure_violations.append((d.dump(), str(e)))
        d = nxt
    raise NormalizationError("normalization did not terminate")


def check_local_confluence(seed: int, count: int, size_bound: int = 12, spec: Optional[SubgroupSpec] = None,
                           table: Optional[Dict[str, Rewrite]] = None, fuzz: bool = False) -> ConfluenceReport:
    """For each random diagram, every enabled move must lead to the same normal form."""
    spec = braid_spec(2) if spec is None else spec
    table = MOVE_TABLE if table is None else table
    rng = random.Random(seed)
    report = ConfluenceReport()
    for _ in range(count):
        s = rng.randrange(2**32)
        d = random_diagram(spec, s, size_bound, sources=rng.choice((1, 1, 2)), fuzz=fuzz)
        report.diagrams += 1
        results = []
        for m in enabled_moves(d):
            try:
                one = apply_move(d, m, table)
            except MoveError as e:
                report.counterexamples.append((d.dump(), m, f"move failed: {e}"))
                continue
            try:
                assert_measure(d, one, m)
            except AssertionError as e:
                report.measure_violations.append((d.dump(), str(e)))
            results.append((m, _nf_counted(one, report, table)))
        for i, (m1, a) in enumerate(results):
            for m2, b in results[i + 1 :]:
                report.move_pairs += 1
                if not diagram_equal(a, b):
                    report.counterexamples.append((d.dump(), (m1, m2), a.dump(), b.dump()))
    return report
