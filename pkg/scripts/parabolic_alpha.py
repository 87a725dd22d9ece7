"""Does conjugating the untwisted parabolic rewrite letter by letter give the
twisted one?

For each X, alpha and sigma_i in X, the word for h_i over the untwisted set is
taken and every letter conjugated.  Four conventions are tried: left or right
conjugation by h_alpha, and labels conjugated by alpha or by alpha^-1.  All of
it is evaluated inside BV_n(B_n) so that any label is expressible.  Alphas
commuting with sigma_i are included as a control.
"""

import argparse
from dataclasses import dataclass

from bvgroups import braids
from bvgroups import elements as el
from bvgroups import generators as G
from bvgroups.acceptance import random_alphas
from bvgroups.braids import BraidWord


@dataclass
class Config:
    n: int = 3
    alphas: int = 2
    seed: int = 8


def _label(w: BraidWord):
    return tuple((f"s{abs(x)}", 1 if x > 0 else -1) for x in w.letters)


def twisted_holds(n, X, i, alpha, left: bool, label_by_inverse: bool) -> bool:
    plain = G.GeneratorTable(n, G.parabolic_spec(n, X))
    rw, _ = G.generating_set_rewriter(plain, "parabolic", X)
    word = rw(G.GeneratorWord.letter(f"h_{i}"))
    spec = el.braid_spec(n)
    full = G.GeneratorTable(n, spec)
    table = G.GeneratorTable(n, spec)
    ha = G.h_alpha(spec, alpha)
    a, b = (el.inverse(ha), ha) if left else (ha, el.inverse(ha))
    beta = braids.inverse(alpha) if label_by_inverse else alpha
    for name in word.letters():
        if name.startswith("g_s"):
            c = braids.inverse(beta) * BraidWord(n, (int(name[3:]),)) * beta
            table.extra[name] = el.reduce(a * G.label_element(spec, G._tree(n), {1: _label(c)}) * b)
        else:
            table.extra[name] = el.reduce(a * full.element(name) * b)
    return el.equal(G.evaluate(word, table), a * G.h_element(spec, i) * b)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--alphas", type=int, default=Config.alphas)
    p.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(p.parse_args()))
    n = cfg.n

    alphas = random_alphas(n, cfg.alphas, cfg.seed)
    if n >= 4:
        alphas.append(BraidWord(n, (n - 1, n - 1)))  # commutes with sigma_1
    subsets = [[i for i in range(1, n) if mask >> (i - 1) & 1] for mask in range(1, 2 ** (n - 1))]
    print("conventions: L/R = h_alpha on the left/right of the inverse; a/A = labels by alpha/alpha^-1")
    for X in subsets:
        for alpha in alphas:
            for i in X:
                res = {f"{'L' if l else 'R'}{'A' if inv else 'a'}": twisted_holds(n, X, i, alpha, l, inv)
                       for l in (True, False) for inv in (False, True)}
                commutes = braids.equal(alpha * BraidWord(n, (i,)), BraidWord(n, (i,)) * alpha)
                flags = " ".join(f"{k}:{'ok' if v else '--'}" for k, v in res.items())
                print(f"X={X} alpha={alpha} i={i} commutes={commutes!s:<5} {flags}")


if __name__ == "__main__":
    main()
