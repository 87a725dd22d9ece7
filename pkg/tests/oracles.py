"""Independent reference implementations used only by the tests."""

from __future__ import annotations


def _reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _artin_letter(letter):
    """Images of the free generators 1..l under sigma_{|letter|}^{+-1}."""
    i = abs(letter)
    if letter > 0:
        return {i: (i, i + 1, -i), i + 1: (i,)}
    return {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)}


def _apply(images, word):
    out = []
    for x in word:
        img = images.get(abs(x), (abs(x),))
        out.extend(img if x > 0 else tuple(-y for y in reversed(img)))
    return _reduce(out)


def artin_action(strands, letters):
    """Action of a braid word on the free group of rank ``strands`` (faithful)."""
    images = {j: (j,) for j in range(1, strands + 1)}
    for letter in letters:
        step = _artin_letter(letter)
        images = {j: _apply(step, w) for j, w in images.items()}
    return tuple(images[j] for j in range(1, strands + 1))


def braid_equal_oracle(u, v):
    return u.strands == v.strands and artin_action(u.strands, u.letters) == artin_action(v.strands, v.letters)


def permutation_oracle(strands, letters):
    """Track strand labels through swaps; returns 1-based end positions."""
    line = list(range(1, strands + 1))
    for x in letters:
        i = abs(x) - 1
        line[i], line[i + 1] = line[i + 1], line[i]
    return tuple(line.index(s) + 1 for s in range(1, strands + 1))
