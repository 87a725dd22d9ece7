"""Full finite n-ary trees and forests.

A tree shape is ``None`` for a leaf or a tuple of exactly ``n`` child shapes
for a caret.  Leaves are addressed by words over ``{0, ..., n-1}`` (tuples of
ints), read from the root.  Leaf order is always derived from the shape.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from .errors import AddressError, ArityError, CaretError, RangeError

Shape = Optional[tuple]
Word = Tuple[int, ...]


def _check_shape(shape: Shape, n: int) -> None:
    if shape is None:
        return
    if not isinstance(shape, tuple) or len(shape) != n:
        raise ArityError(f"caret with {len(shape) if isinstance(shape, tuple) else '?'} children in a {n}-ary tree")
    for child in shape:
        _check_shape(child, n)


def _carets(shape: Shape) -> int:
    if shape is None:
        return 0
    return 1 + sum(_carets(c) for c in shape)


def _leaf_words(shape: Shape, prefix: Word = ()) -> Iterator[Word]:
    if shape is None:
        yield prefix
        return
    for i, child in enumerate(shape):
        yield from _leaf_words(child, prefix + (i,))


def _subshape(shape: Shape, word: Word) -> Shape:
    for letter in word:
        if shape is None:
            raise AddressError(f"address {word_str(word)} runs past a leaf")
        shape = shape[letter]
    return shape


def _replace(shape: Shape, word: Word, new: Shape) -> Shape:
    if not word:
        return new
    if shape is None:
        raise AddressError("address runs past a leaf")
    head, rest = word[0], word[1:]
    return shape[:head] + (_replace(shape[head], rest, new),) + shape[head + 1:]


def _lcm(a: Shape, b: Shape) -> Shape:
    if a is None:
        return b
    if b is None:
        return a
    return tuple(_lcm(x, y) for x, y in zip(a, b))


def _contains(big: Shape, small: Shape) -> bool:
    if small is None:
        return True
    if big is None:
        return False
    return all(_contains(x, y) for x, y in zip(big, small))


def word_str(word: Word) -> str:
    return "".join(str(i) for i in word) or "ε"


@dataclass(frozen=True)
class Tree:
    """An immutable full n-ary tree."""

    n: int
    shape: Shape = None

    def __post_init__(self):
        if self.n < 2:
            raise ArityError("arity must be at least 2")
        _check_shape(self.shape, self.n)

    @classmethod
    def caret(cls, n: int) -> "Tree":
        return cls(n, (None,) * n)

    @classmethod
    def from_expansions(cls, n: int, *words) -> "Tree":
        """Build ``R[w1][w2]...`` style trees from the trivial tree.

        Words may be given as strings of digits (``"00"``) or int tuples.
        """
        t = cls(n)
        for w in words:
            t = t.expand(as_word(w))
        return t

    @property
    def carets(self) -> int:
        return _carets(self.shape)

    depth = carets

    @property
    def leaf_count(self) -> int:
        return 1 + self.carets * (self.n - 1)

    def leaves(self) -> list[Word]:
        return list(_leaf_words(self.shape))

    def is_leaf(self, word: Word) -> bool:
        try:
            return _subshape(self.shape, tuple(word)) is None
        except (AddressError, IndexError):
            return False

    def expand(self, word: Word) -> "Tree":
        word = tuple(word)
        if not self.is_leaf(word):
            raise AddressError(f"{word_str(word)} is not a leaf")
        return Tree(self.n, _replace(self.shape, word, (None,) * self.n))

    def is_final_caret(self, word: Word) -> bool:
        try:
            sub = _subshape(self.shape, tuple(word))
        except (AddressError, IndexError):
            return False
        return sub is not None and all(c is None for c in sub)

    def reduce_caret(self, word: Word) -> "Tree":
        word = tuple(word)
        if not self.is_final_caret(word):
            raise CaretError(f"{word_str(word)} is not a final caret")
        return Tree(self.n, _replace(self.shape, word, None))

    def final_carets(self) -> list[Word]:
        """Prefixes ``w`` of the final carets, in left-to-right order."""
        out = []
        for leaf in self.leaves():
            if leaf and leaf[-1] == 0 and self.is_final_caret(leaf[:-1]):
                out.append(leaf[:-1])
        return out

    def position(self, word: Word) -> int:
        """1-based position of a leaf, or of the first leaf below a node."""
        word = tuple(word)
        for i, leaf in enumerate(self.leaves(), 1):
            if leaf[: len(word)] == word:
                return i
        raise AddressError(f"{word_str(word)} is not in the tree")

    def contains(self, other: "Tree") -> bool:
        return self.n == other.n and _contains(self.shape, other.shape)

    def __str__(self) -> str:
        return format_shape(self.shape)


def format_shape(shape: Shape, sep: str = " ") -> str:
    if shape is None:
        return "."
    return "(" + sep.join(format_shape(c, sep) for c in shape) + ")"


def as_word(w) -> Word:
    if isinstance(w, str):
        return tuple(int(c) for c in w)
    return tuple(w)


def lcm(t1: Tree, t2: Tree) -> Tree:
    if t1.n != t2.n:
        raise ArityError(f"arity mismatch {t1.n} != {t2.n}")
    return Tree(t1.n, _lcm(t1.shape, t2.shape))


def spine(n: int, d: int) -> Tree:
    """The tree whose ``d`` carets all sit on the rightmost branch."""
    if d < 1:
        raise RangeError("spine depth must be at least 1")
    shape: Shape = None
    for _ in range(d):
        shape = (None,) * (n - 1) + (shape,)
    return Tree(n, shape)


def base_tree(n: int) -> Tree:
    """T(n): ``R[0][1][00][01]`` for n = 2 and ``R[0][1][2]`` otherwise."""
    if n == 2:
        return Tree.from_expansions(2, "", "0", "1", "00", "01")
    return Tree.from_expansions(n, "", "0", "1", "2")


def base_leaves(n: int) -> int:
    """m(n), the number of leaves of T(n)."""
    return 6 if n == 2 else 4 * n - 3


def base_depth(n: int) -> int:
    return 5 if n == 2 else 4


@lru_cache(maxsize=None)
def _all_shapes(n: int, carets: int) -> tuple:
    if carets == 0:
        return (None,)
    out = []
    # split the remaining carets among n children
    for split in _compositions(carets - 1, n):
        for kids in itertools.product(*(_all_shapes(n, k) for k in split)):
            out.append(tuple(kids))
    return tuple(out)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def all_trees(n: int, carets: int) -> list[Tree]:
    return [Tree(n, s) for s in _all_shapes(n, carets)]


@dataclass(frozen=True)
class LeafAddress:
    root: int  # 1-based
    word: Word = ()

    def __str__(self) -> str:
        return f"{self.root}:{word_str(self.word)}"


@dataclass(frozen=True)
class Forest:
    """An ordered sequence of ``r >= 1`` trees of the same arity."""

    n: int
    trees: Tuple[Tree, ...]

    def __post_init__(self):
        if not self.trees:
            raise RangeError("a forest needs at least one tree")
        for t in self.trees:
            if t.n != self.n:
                raise ArityError("all trees of a forest share one arity")

    @classmethod
    def trivial(cls, n: int, r: int = 1) -> "Forest":
        return cls(n, tuple(Tree(n) for _ in range(r)))

    @classmethod
    def of(cls, *trees: Tree) -> "Forest":
        return cls(trees[0].n, tuple(trees))

    @property
    def r(self) -> int:
        return len(self.trees)

    @property
    def carets(self) -> int:
        return sum(t.carets for t in self.trees)

    @property
    def leaf_count(self) -> int:
        return self.r + self.carets * (self.n - 1)

    def leaves(self) -> list[LeafAddress]:
        return [LeafAddress(i, w) for i, t in enumerate(self.trees, 1) for w in t.leaves()]

    def offset(self, root: int) -> int:
        """Number of leaves before tree ``root`` (1-based)."""
        return sum(t.leaf_count for t in self.trees[: root - 1])

    def position(self, addr: LeafAddress) -> int:
        self._check_root(addr.root)
        return self.offset(addr.root) + self.trees[addr.root - 1].position(addr.word)

    def address(self, position: int) -> LeafAddress:
        if not 1 <= position <= self.leaf_count:
            raise RangeError(f"leaf position {position} out of range 1..{self.leaf_count}")
        for i, t in enumerate(self.trees, 1):
            if position <= t.leaf_count:
                return LeafAddress(i, t.leaves()[position - 1])
            position -= t.leaf_count
        raise AssertionError("unreachable")

    def _check_root(self, root: int) -> None:
        if not 1 <= root <= self.r:
            raise AddressError(f"root {root} out of range 1..{self.r}")

    def _with(self, root: int, tree: Tree) -> "Forest":
        trees = list(self.trees)
        trees[root - 1] = tree
        return Forest(self.n, tuple(trees))

    def expand(self, addr: LeafAddress) -> "Forest":
        self._check_root(addr.root)
        return self._with(addr.root, self.trees[addr.root - 1].expand(addr.word))

    def reduce_caret(self, addr: LeafAddress) -> "Forest":
        self._check_root(addr.root)
        return self._with(addr.root, self.trees[addr.root - 1].reduce_caret(addr.word))

    def expand_at(self, position: int) -> "Forest":
        return self.expand(self.address(position))

    def final_carets(self) -> list[tuple[LeafAddress, int]]:
        """Final carets as (prefix address, 1-based position of first leaf)."""
        out = []
        for i, t in enumerate(self.trees, 1):
            base = self.offset(i)
            for w in t.final_carets():
                out.append((LeafAddress(i, w), base + t.position(w)))
        return out

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.trees)


def forest_lcm(f1: Forest, f2: Forest) -> Forest:
    if f1.r != f2.r:
        raise RangeError("forests have different numbers of roots")
    return Forest(f1.n, tuple(lcm(a, b) for a, b in zip(f1.trees, f2.trees)))


t_n = base_tree
