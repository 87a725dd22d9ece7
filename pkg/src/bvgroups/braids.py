"""Braid words in Artin generators and the braid word problem.

Conventions, fixed once for the whole package:

* a word is read top to bottom; ``u * v`` stacks ``u`` above ``v``;
* letter ``+i`` is sigma_i (the strand at position ``i`` passes over the one
  at ``i + 1``), letter ``-i`` is its inverse;
* positions are 1-based; ``permutation(u)[i - 1]`` is the bottom position of
  the strand that starts at position ``i``.

Equality is decided with the left-greedy (Garside) normal form
``Delta^p A_1 ... A_k`` whose simple factors are stored as permutations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotACable, RangeError, StrandError

Perm = tuple  # 0-based images


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 1:
            raise StrandError("a braid needs at least one strand")
        if self.letters and (0 in self.letters or max(self.letters) >= self.strands
                             or -min(self.letters) >= self.strands):
            bad = next(x for x in self.letters if x == 0 or abs(x) >= self.strands)
            raise RangeError(f"letter {bad} out of range for {self.strands} strands")

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    @classmethod
    def of(cls, strands: int, *letters: int) -> "BraidWord":
        return cls(strands, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def inverse(self) -> "BraidWord":
        return inverse(self)

    def permutation(self) -> tuple:
        return permutation(self)

    def is_trivial(self) -> bool:
        return is_trivial(self)

    def shifted(self, offset: int, strands: int) -> "BraidWord":
        """The same word acting on positions ``offset+1 ..`` of a wider braid."""
        return BraidWord(strands, tuple(x + offset if x > 0 else x - offset for x in self.letters))

    def free_reduced(self) -> "BraidWord":
        out: list[int] = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return BraidWord(self.strands, tuple(out))

    def __str__(self) -> str:
        return " ".join(f"s{x}" if x > 0 else f"S{-x}" for x in self.letters)


def _check_same(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise StrandError(f"strand mismatch: {u.strands} vs {v.strands}")


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_same(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-x for x in reversed(u.letters)))


def permutation(u: BraidWord) -> tuple:
    """1-based images: strand starting at ``i`` ends at ``permutation(u)[i-1]``."""
    at = list(range(u.strands))  # at[pos] = strand currently at pos
    for x in u.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    ends = [0] * u.strands
    for pos, strand in enumerate(at):
        ends[strand] = pos + 1
    return tuple(ends)


# ---------------------------------------------------------------------------
# Garside normal form.  Simple braids are permutations p with p[i] the bottom
# position of the strand starting at i (0-based).


def _compose_perm(a: Perm, b: Perm) -> Perm:
    """Simple ``a`` stacked above ``b`` (only meaningful when the product is simple)."""
    return tuple(b[x] for x in a)


def _inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _delta(l: int) -> Perm:
    return tuple(range(l - 1, -1, -1))


def _tau(p: Perm) -> Perm:
    l = len(p)
    return tuple(l - 1 - p[l - 1 - i] for i in range(l))


def _right_complement(p: Perm) -> Perm:
    """The simple ``c`` with ``p * c == Delta``."""
    l = len(p)
    pinv = _inv(p)
    return tuple(l - 1 - pinv[j] for j in range(l))


def _left_gcd(a: Perm, b: Perm) -> Perm:
    """Greatest common left divisor of two simple braids, by peeling crossings."""
    l = len(a)
    a, b = list(a), list(b)
    dinv = list(range(l))  # dinv[pos] = start of the strand of d ending at pos
    stack = [k for k in range(l - 1) if a[k] > a[k + 1] and b[k] > b[k + 1]]
    while stack:
        k = stack.pop()
        if not (a[k] > a[k + 1] and b[k] > b[k + 1]):
            continue
        a[k], a[k + 1] = a[k + 1], a[k]
        b[k], b[k + 1] = b[k + 1], b[k]
        dinv[k], dinv[k + 1] = dinv[k + 1], dinv[k]
        for j in (k - 1, k + 1):
            if 0 <= j < l - 1 and a[j] > a[j + 1] and b[j] > b[j + 1]:
                stack.append(j)
    return _inv(tuple(dinv))


def _weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Make the pair ``(a, b)`` left-weighted without changing the product."""
    d = _left_gcd(_right_complement(a), b)
    if d == tuple(range(len(a))):
        return a, b
    # b = d * b'  =>  b'[j] = b[d^{-1}[j]]
    return _compose_perm(a, d), tuple(b[x] for x in _inv(d))


class _NF:
    __slots__ = ("l", "p", "factors")

    def __init__(self, l: int):
        self.l = l
        self.p = 0
        self.factors: list[Perm] = []

    def append(self, x: Perm) -> None:
        ident = tuple(range(self.l))
        delta = _delta(self.l)
        f = self.factors
        f.append(x)
        j = len(f) - 1
        while j > 0:
            a, b = _weight(f[j - 1], f[j])
            if (a, b) == (f[j - 1], f[j]):
                break
            f[j - 1], f[j] = a, b
            j -= 1
        self._tidy(ident, delta)

    def _tidy(self, ident: Perm, delta: Perm) -> None:
        f = self.factors
        if ident in f:
            rest = [x for x in f if x != ident]
            self.factors = []
            for x in rest:
                self.append(x)
            return
        while f and f[0] == delta:
            f.pop(0)
            self.p += 1

    def append_delta_inverse(self) -> None:
        self.p -= 1
        self.factors = [_tau(x) for x in self.factors]


def _sigma(l: int, i: int) -> Perm:
    p = list(range(l))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


@lru_cache(maxsize=200_000)
def _normal_form(strands: int, letters: tuple) -> tuple:
    nf = _NF(strands)
    delta = _delta(strands)
    for x in letters:
        if x > 0:
            nf.append(_sigma(strands, x))
        else:
            # sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1})
            s = _sigma(strands, -x)
            nf.append_delta_inverse()
            nf.append(tuple(s[y] for y in delta))
    return (strands, nf.p, tuple(nf.factors))


def normal_form(u: BraidWord) -> tuple:
    """Hashable canonical key ``(strands, p, factors)`` of the braid ``u``."""
    return _normal_form(u.strands, u.free_reduced().letters)


def is_trivial(u: BraidWord) -> bool:
    if any(i + 1 != x for i, x in enumerate(permutation(u))):
        return False
    _, p, factors = normal_form(u)
    return p == 0 and not factors


def equal(u: BraidWord, v: BraidWord) -> bool:
    _check_same(u, v)
    if permutation(u) != permutation(v):
        return False
    return normal_form(u) == normal_form(v)


def simple_word(p: Perm) -> tuple:
    """A positive word (1-based letters) for the simple braid with permutation ``p``."""
    # bubble sort the bottom positions; each swap of an inverted pair is one crossing
    order = list(p)  # order[pos] = final position of the strand now at pos
    letters = []
    changed = True
    while changed:
        changed = False
        for k in range(len(order) - 1):
            if order[k] > order[k + 1]:
                order[k], order[k + 1] = order[k + 1], order[k]
                letters.append(k + 1)
                changed = True
    return tuple(letters)


def normal_form_word(u: BraidWord) -> BraidWord:
    """A canonical word for the braid of ``u``: Delta^p followed by the simple factors."""
    l, p, factors = normal_form(u)
    dword = simple_word(_delta(l))
    letters: list[int] = []
    if p >= 0:
        letters.extend(dword * p)
    else:
        letters.extend(tuple(-x for x in reversed(dword)) * (-p))
    for f in factors:
        letters.extend(simple_word(f))
    return BraidWord(l, tuple(letters))


def shorten(u: BraidWord) -> BraidWord:
    """The shorter of the free reduction and the normal-form word."""
    a = u.free_reduced()
    if len(a) <= 2:
        return a
    b = normal_form_word(a)
    return b if len(b) < len(a) else a


# ---------------------------------------------------------------------------
# Geometric word operations


def delete_strands(u: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Keep only the strands starting at the given 1-based positions."""
    keep = set(keep)
    if not keep or any(not 1 <= k <= u.strands for k in keep):
        raise RangeError("keep must be a nonempty subset of the strand positions")
    at = list(range(1, u.strands + 1))  # strand ids (start positions) by position
    letters = []
    for x in u.letters:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        if a in keep and b in keep:
            j = sum(1 for s in at[:i] if s in keep) + 1
            letters.append(j if x > 0 else -j)
        at[i], at[i + 1] = b, a
    return BraidWord(len(keep), tuple(letters))


def cable_strand(u: BraidWord, k: int, n: int, inner: BraidWord | None = None) -> BraidWord:
    """Replace the strand starting at ``k`` by ``n`` parallel strands.

    Each crossing with the cabled strand becomes a block of ``n`` crossings of
    the same sign; ``inner`` acts on the cable at the bottom of the braid.
    """
    if not 1 <= k <= u.strands:
        raise RangeError(f"strand {k} out of range 1..{u.strands}")
    if n < 1:
        raise RangeError("cable width must be positive")
    if inner is None:
        inner = BraidWord.identity(n)
    if inner.strands != n:
        raise StrandError(f"inner braid has {inner.strands} strands, expected {n}")
    width = u.strands + n - 1
    c = k  # current position of the cable (in the old braid)
    out: list[int] = []
    for x in u.letters:
        i, sign = abs(x), (1 if x > 0 else -1)
        if i == c:
            # cable at i crosses the strand at i + 1, which moves left across it
            out.extend(sign * j for j in range(i + n - 1, i - 1, -1))
            c = i + 1
        elif i + 1 == c:
            # strand at i crosses the cable at i + 1 moving right
            out.extend(sign * j for j in range(i, i + n))
            c = i
        elif i < c:
            out.append(x)
        else:
            out.append(sign * (i + n - 1))
    out.extend(inner.shifted(c - 1, width).letters)
    return BraidWord(width, tuple(out))


def extract_cable(u: BraidWord, p: int, n: int) -> tuple[BraidWord, BraidWord]:
    """Split ``u`` into (inner braid of the block ``p..p+n-1``, outer braid).

    Raises NotACable unless the block's strands form a tube, i.e. ``u`` equals
    ``cable_strand(outer, p, n, inner)``.
    """
    l = u.strands
    if n < 1 or p < 1 or p + n - 1 > l:
        raise RangeError("block out of range")
    perm = permutation(u)
    image = sorted(perm[p - 1 : p - 1 + n])
    if image != list(range(image[0], image[0] + n)):
        raise NotACable("block is not mapped onto consecutive positions")
    if n == 1:
        return BraidWord.identity(1), u
    block = range(p, p + n)
    inner = delete_strands(u, block)
    outer = delete_strands(u, [s for s in range(1, l + 1) if s not in block or s == p])
    if not equal(u, cable_strand(outer, p, n, inner)):
        raise NotACable("block strands do not form a tube")
    return inner, outer


def is_simple(u: BraidWord) -> bool:
    if any(x < 0 for x in u.letters):
        return False
    at = list(range(u.strands))
    seen = set()
    for x in u.letters:
        i = x - 1
        pair = frozenset((at[i], at[i + 1]))
        if pair in seen:
            return False
        seen.add(pair)
        at[i], at[i + 1] = at[i + 1], at[i]
    return True


def simple_braid(strands: int, perm1: Sequence[int]) -> BraidWord:
    """The simple braid realizing a 1-based permutation."""
    return BraidWord(strands, simple_word(tuple(x - 1 for x in perm1)))


def block_ribbon(l: int, p: int, q: int, n: int) -> BraidWord:
    """Minimal simple braid carrying the block ``p..p+n-1`` onto ``q..q+n-1`` untwisted."""
    if not (1 <= p <= l - n + 1 and 1 <= q <= l - n + 1):
        raise RangeError("block out of range")
    others = [s for s in range(1, l + 1) if not p <= s < p + n]
    targets = [s for s in range(1, l + 1) if not q <= s < q + n]
    perm = [0] * l
    for j in range(n):
        perm[p + j - 1] = q + j
    for s, t in zip(others, targets):
        perm[s - 1] = t
    return simple_braid(l, perm)


def all_permutations(l: int):
    return itertools.permutations(range(1, l + 1))


def _caret_block(t, c) -> int:
    """First-leaf position of the final caret ``c`` (a prefix word or LeafAddress)."""
    from .trees import Forest, LeafAddress, as_word

    if isinstance(t, Forest):
        addr = c if isinstance(c, LeafAddress) else LeafAddress(1, as_word(c))
        if not t.trees[addr.root - 1].is_final_caret(addr.word):
            raise RangeError(f"{addr} is not a final caret")
        return t.position(addr)
    c = as_word(c)
    if not t.is_final_caret(c):
        raise RangeError(f"{c} is not a final caret")
    return t.position(c)


def ribbon(t, c, t2, c2) -> BraidWord:
    """The shortest simple braid carrying caret ``c`` of ``t`` onto caret ``c2`` of ``t2``.

    The caret's leaves travel as an untwisted tube; every other strand keeps
    its relative order, so each strand crosses the tube at most once.
    """
    if t.leaf_count != t2.leaf_count:
        raise StrandError(f"leaf counts differ: {t.leaf_count} vs {t2.leaf_count}")
    return block_ribbon(t.leaf_count, _caret_block(t, c), _caret_block(t2, c2), t.n)
