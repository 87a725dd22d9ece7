"""Elements of BV_{n,r}(H) as quadruples (domain, braid, labels, range).

Labels are words in the named generators of H and are indexed by range-leaf
position: label ``i`` sits on the strand that ends at range leaf ``i``, below
the braid.  Expanding a leaf clones its strand into a cable whose inner braid
is the label.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from . import braids
from .braids import BraidWord
from .errors import RangeError, SubgroupError, ValidationError
from .trees import Forest, LeafAddress, Tree

Letter = Tuple[str, int]
LabelWord = Tuple[Letter, ...]


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup H of B_n given by named generators bound to braid words."""

    name: str
    n: int
    gens: Dict[str, BraidWord] = field(default_factory=dict, hash=False, compare=True)

    def __post_init__(self):
        for g, w in self.gens.items():
            if w.strands != self.n:
                raise SubgroupError(f"generator {g} has {w.strands} strands, expected {self.n}")

    def __hash__(self):
        return hash((self.name, self.n, tuple(sorted((k, v.letters) for k, v in self.gens.items()))))

    def artin(self, label: LabelWord) -> BraidWord:
        letters: list[int] = []
        for g, e in label:
            if g not in self.gens:
                raise SubgroupError(f"unknown generator {g!r} for {self.name}")
            w = self.gens[g]
            letters.extend(w.letters if e > 0 else braids.inverse(w).letters)
        return BraidWord(self.n, tuple(letters))

    def label_equal(self, a: LabelWord, b: LabelWord) -> bool:
        return braids.equal(self.artin(a), self.artin(b))

    def label_trivial(self, a: LabelWord) -> bool:
        return not a or braids.is_trivial(self.artin(a))

    def names(self) -> list[str]:
        return list(self.gens)


def identity_spec(n: int) -> SubgroupSpec:
    return SubgroupSpec("Id", n, {})


def braid_spec(n: int) -> SubgroupSpec:
    """H = B_n with generators ``s1 .. s<n-1>``."""
    return SubgroupSpec(f"B{n}", n, {f"s{i}": BraidWord(n, (i,)) for i in range(1, n)})


def label_inverse(a: LabelWord) -> LabelWord:
    return tuple((g, -e) for g, e in reversed(a))


def label_reduce(a: LabelWord) -> LabelWord:
    out: list[Letter] = []
    for g, e in a:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class Element:
    spec: SubgroupSpec
    domain: Forest
    braid: BraidWord
    labels: Tuple[LabelWord, ...]
    range: Forest

    def __post_init__(self):
        n = self.spec.n
        if self.domain.n != n:
            raise ValidationError("domain", f"arity {self.domain.n}, expected {n}")
        if self.range.n != n:
            raise ValidationError("range", f"arity {self.range.n}, expected {n}")
        if self.domain.r != self.range.r:
            raise ValidationError("range", f"{self.range.r} roots but domain has {self.domain.r}")
        l = self.domain.leaf_count
        if self.range.leaf_count != l:
            raise ValidationError("range", f"{self.range.leaf_count} leaves but domain has {l}")
        if self.braid.strands != l:
            raise ValidationError("braid", f"{self.braid.strands} strands but {l} leaves")
        if len(self.labels) != l:
            raise ValidationError("labels", f"{len(self.labels)} labels but {l} leaves")
        for lab in self.labels:
            for g, e in lab:
                if g not in self.spec.gens or e not in (1, -1):
                    raise ValidationError("labels", f"bad label letter {g}^{e}")

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def r(self) -> int:
        return self.domain.r

    @property
    def l(self) -> int:
        return self.braid.strands

    @property
    def depth(self) -> int:
        return self.domain.carets

    def __mul__(self, other: "Element") -> "Element":
        return compose(self, other)

    def inverse(self) -> "Element":
        return inverse(self)

    def __str__(self) -> str:
        from .grammar import format_element

        return format_element(self)


def make(domain: Forest, braid: BraidWord, labels: Sequence[LabelWord], range_: Forest, spec: SubgroupSpec) -> Element:
    return Element(spec, domain, braid, tuple(tuple(x) for x in labels), range_)


def identity(spec: SubgroupSpec, r: int = 1) -> Element:
    f = Forest.trivial(spec.n, r)
    return Element(spec, f, BraidWord.identity(r), ((),) * r, f)


def from_trees(spec: SubgroupSpec, domain: Tree, braid: Optional[BraidWord] = None,
               labels: Optional[Sequence[LabelWord]] = None, range_: Optional[Tree] = None) -> Element:
    """Convenience constructor for r = 1 (missing pieces default to trivial)."""
    range_ = domain if range_ is None else range_
    l = domain.leaf_count
    braid = BraidWord.identity(l) if braid is None else braid
    labels = ((),) * l if labels is None else tuple(labels)
    return Element(spec, Forest.of(domain), braid, labels, Forest.of(range_))


def depth(v: Element) -> int:
    return v.domain.carets


def _inverse_perm(perm: tuple) -> tuple:
    out = [0] * len(perm)
    for i, x in enumerate(perm, 1):
        out[x - 1] = i
    return tuple(out)


def expand_at_range_leaf(v: Element, i: int) -> Element:
    """Clone the strand ending at range leaf ``i`` into a cable of ``n`` strands."""
    if not 1 <= i <= v.l:
        raise RangeError(f"range position {i} out of range 1..{v.l}")
    n = v.n
    j = _inverse_perm(braids.permutation(v.braid))[i - 1]
    label = v.labels[i - 1]
    braid = braids.cable_strand(v.braid, j, n, v.spec.artin(label))
    labels = v.labels[: i - 1] + (label,) * n + v.labels[i:]
    return Element(v.spec, v.domain.expand_at(j), braid, labels, v.range.expand_at(i))


def expand_at_domain_leaf(v: Element, j: int) -> Element:
    if not 1 <= j <= v.l:
        raise RangeError(f"domain position {j} out of range 1..{v.l}")
    return expand_at_range_leaf(v, braids.permutation(v.braid)[j - 1])


def _try_reduce(v: Element, daddr: LeafAddress, p: int) -> Optional[Element]:
    n = v.n
    perm = braids.permutation(v.braid)
    image = sorted(perm[p - 1 : p - 1 + n])
    q = image[0]
    if image != list(range(q, q + n)):
        return None
    raddr = v.range.address(q)
    if raddr.word[-1:] != (0,):
        return None
    caddr = LeafAddress(raddr.root, raddr.word[:-1])
    if not v.range.trees[caddr.root - 1].is_final_caret(caddr.word):
        return None
    try:
        inner, outer = braids.extract_cable(v.braid, p, n)
    except braids.NotACable:
        return None
    block = v.labels[q - 1 : q - 1 + n]
    for lab in block:
        if not braids.equal(v.spec.artin(lab), inner):
            return None
    labels = v.labels[: q - 1] + (block[0],) + v.labels[q - 1 + n :]
    return Element(v.spec, v.domain.reduce_caret(daddr), outer, labels, v.range.reduce_caret(caddr))


def reduce_once(v: Element) -> Optional[Element]:
    """Remove the leftmost reducible caret pair, or return None if ``v`` is reduced."""
    for daddr, p in v.domain.final_carets():
        out = _try_reduce(v, daddr, p)
        if out is not None:
            return out
    return None


def simplify(v: Element) -> Element:
    """Same element with a shorter braid word (does not reduce carets)."""
    b = braids.shorten(v.braid)
    return v if b == v.braid else Element(v.spec, v.domain, b, v.labels, v.range)


def reduce(v: Element) -> Element:
    while True:
        nxt = reduce_once(v)
        if nxt is None:
            return v
        v = nxt


def _check_compatible(v: Element, w: Element) -> None:
    if v.spec != w.spec:
        raise ValidationError("spec", f"{v.spec.name} vs {w.spec.name}")
    if v.r != w.r:
        raise ValidationError("r", f"{v.r} vs {w.r}")


def expand_range_to(v: Element, target: Forest) -> Element:
    """Expand range leaves of ``v`` until its range equals ``target``."""
    while v.range != target:
        for pos, addr in enumerate(v.range.leaves(), 1):
            t = target.trees[addr.root - 1]
            if not t.is_leaf(addr.word):
                v = expand_at_range_leaf(v, pos)
                break
        else:
            raise ValidationError("range", "target does not contain the range forest")
    return v


def expand_domain_to(v: Element, target: Forest) -> Element:
    while v.domain != target:
        for pos, addr in enumerate(v.domain.leaves(), 1):
            t = target.trees[addr.root - 1]
            if not t.is_leaf(addr.word):
                v = expand_at_domain_leaf(v, pos)
                break
        else:
            raise ValidationError("domain", "target does not contain the domain forest")
    return v


def compose(v: Element, w: Element) -> Element:
    """The product ``v w`` (``v`` first)."""
    _check_compatible(v, w)
    from .trees import forest_lcm

    common = forest_lcm(v.range, w.domain)
    v = expand_range_to(v, common)
    w = expand_domain_to(w, common)
    pinv = _inverse_perm(braids.permutation(w.braid))
    labels = tuple(label_reduce(v.labels[pinv[i] - 1] + w.labels[i]) for i in range(w.l))
    return Element(v.spec, v.domain, v.braid * w.braid, labels, w.range)


def inverse(v: Element) -> Element:
    perm = braids.permutation(v.braid)
    labels = tuple(label_inverse(v.labels[perm[j] - 1]) for j in range(v.l))
    return Element(v.spec, v.range, braids.inverse(v.braid), labels, v.domain)


def power(v: Element, k: int) -> Element:
    out = identity(v.spec, v.r)
    base = v if k >= 0 else inverse(v)
    for _ in range(abs(k)):
        out = compose(out, base)
    return out


def same_reduced(a: Element, b: Element) -> bool:
    """Compare two already-reduced elements."""
    if a.domain != b.domain or a.range != b.range:
        return False
    if not braids.equal(a.braid, b.braid):
        return False
    return all(a.spec.label_equal(x, y) for x, y in zip(a.labels, b.labels))


def equal(v: Element, w: Element) -> bool:
    _check_compatible(v, w)
    return same_reduced(reduce(v), reduce(w))


def is_identity(v: Element) -> bool:
    return equal(v, identity(v.spec, v.r))


def random_forest(n: int, r: int, carets: int, rng: random.Random) -> Forest:
    f = Forest.trivial(n, r)
    for _ in range(carets):
        f = f.expand_at(rng.randint(1, f.leaf_count))
    return f


def random_label(spec: SubgroupSpec, rng: random.Random, max_len: int = 2) -> LabelWord:
    names = spec.names()
    if not names:
        return ()
    return label_reduce(tuple((rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))))


def random_element(spec: SubgroupSpec, r: int = 1, max_depth: int = 3, seed: int = 0,
                   braid_len: Optional[int] = None, label_len: int = 2) -> Element:
    """A random (unreduced) element; deterministic in ``seed``."""
    rng = random.Random(seed)
    d = rng.randint(0, max_depth)
    dom = random_forest(spec.n, r, d, rng)
    ran = random_forest(spec.n, r, d, rng)
    l = dom.leaf_count
    k = rng.randint(0, l + 2) if braid_len is None else braid_len
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, l - 1) for _ in range(k)) if l > 1 else ()
    labels = tuple(random_label(spec, rng, label_len) for _ in range(l))
    return Element(spec, dom, BraidWord(l, letters), labels, ran)
