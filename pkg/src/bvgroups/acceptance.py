"""The acceptance criteria as callable checks.

Shared by ``tests/test_acceptance.py`` and the ``selftest`` command.  Every
check is deterministic (fixed seeds) and returns a ``CriterionResult``.
``quick=True`` runs the same checks with smaller counts.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import braids, diagrams
from . import elements as el
from . import generators as G
from .braids import BraidWord
from .trees import all_trees, base_leaves


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] criterion {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _scale(quick: bool, full: int, small: int) -> int:
    return small if quick else full


# ---------------------------------------------------------------------------
# 1. braid kernel


_RELATORS_CACHE: Dict[int, list] = {}


def _relators(l: int) -> list:
    if l not in _RELATORS_CACHE:
        rels = []
        for i in range(1, l):
            for j in range(i + 1, l):
                if j - i == 1:
                    rels.append((i, j, i, -j, -i, -j))
                else:
                    rels.append((i, j, -i, -j))
        _RELATORS_CACHE[l] = rels
    return _RELATORS_CACHE[l]


def random_trivial_word(l: int, rng: random.Random, steps: int = 6) -> BraidWord:
    """Relator insertions, cancelling pairs and cyclic conjugates at random places."""
    w: list = []
    rels = _relators(l)
    for _ in range(steps):
        pos = rng.randint(0, len(w))
        if rels and rng.random() < 0.6:
            r = list(rng.choice(rels))
            k = rng.randrange(len(r))
            r = r[k:] + r[:k]
            if rng.random() < 0.5:
                r = [-x for x in reversed(r)]
            ins = r
        else:
            x = rng.choice([1, -1]) * rng.randint(1, l - 1)
            ins = [x, -x]
        w[pos:pos] = ins
    return BraidWord(l, tuple(w))


def criterion_1(quick: bool = False) -> CriterionResult:
    fails = []
    for l in range(2, 7):
        for i in range(1, l):
            for j in range(1, l):
                if abs(i - j) == 1:
                    if not braids.equal(BraidWord(l, (i, j, i)), BraidWord(l, (j, i, j))):
                        fails.append(("braid relation", l, i, j))
                    if braids.equal(BraidWord(l, (i, j)), BraidWord(l, (j, i))):
                        fails.append(("adjacent generators commute", l, i, j))
                elif abs(i - j) >= 2:
                    if not braids.equal(BraidWord(l, (i, j)), BraidWord(l, (j, i))):
                        fails.append(("far commutation", l, i, j))
            if braids.is_trivial(BraidWord(l, (i, i))):
                fails.append(("sigma^2 trivial", l, i))
    rng = random.Random(101)
    count = _scale(quick, 1000, 150)
    for _ in range(count):
        l = rng.randint(2, 6)
        w = random_trivial_word(l, rng, rng.randint(1, 8))
        if not braids.is_trivial(w):
            fails.append(("trivial word reported nontrivial", w))
    made = 0
    while made < count:
        l = rng.randint(2, 6)
        w = BraidWord(l, tuple(rng.choice([1, -1]) * rng.randint(1, l - 1) for _ in range(rng.randint(1, 14))))
        if braids.permutation(w) == tuple(range(1, l + 1)):
            continue
        made += 1
        if braids.is_trivial(w):
            fails.append(("nontrivial permutation reported trivial", w))
    return CriterionResult(1, "braid kernel soundness", not fails,
                           f"relations l<=6, {count} trivial + {count} nontrivial words, {len(fails)} failures",
                           failures=fails)


# ---------------------------------------------------------------------------
# 2, 3, 5. elements and diagrams


def parameter_grid():
    for n in (2, 3):
        for r in (1, 2):
            for spec in (el.identity_spec(n), el.braid_spec(n)):
                yield n, r, spec


def criterion_2(quick: bool = False) -> CriterionResult:
    per = _scale(quick, 200, 20)
    fails = []
    total = 0
    for n, r, spec in parameter_grid():
        for seed in range(per):
            a, b, c = (el.random_element(spec, r, 3, seed=1000 * seed + k) for k in range(3))
            total += 1
            e = el.identity(spec, r)
            if not el.equal((a * b) * c, a * (b * c)):
                fails.append(("assoc", n, r, spec.name, seed))
            if not (el.equal(a * e, a) and el.equal(e * a, a)):
                fails.append(("identity", n, r, spec.name, seed))
            if not (el.is_identity(a * a.inverse()) and el.is_identity(a.inverse() * a)):
                fails.append(("inverse", n, r, spec.name, seed))
    return CriterionResult(2, "group axioms", not fails,
                           f"{total} triples over n in {{2,3}}, r in {{1,2}}, H in {{Id,B_n}}, {len(fails)} failures",
                           failures=fails)


def _random_expansions(v: el.Element, rng: random.Random, k: int) -> el.Element:
    for _ in range(k):
        v = el.expand_at_range_leaf(v, rng.randint(1, v.l))
    return v


def criterion_3(quick: bool = False) -> CriterionResult:
    count = _scale(quick, 200, 25)
    fails = []
    grid = list(parameter_grid())
    for seed in range(count):
        n, r, spec = grid[seed % len(grid)]
        v = el.random_element(spec, r, 3, seed=seed + 5000)
        rng = random.Random(seed)
        a = el.reduce(_random_expansions(v, rng, rng.randint(0, 5)))
        b = el.reduce(_random_expansions(v, rng, rng.randint(0, 5)))
        if not el.same_reduced(a, b):
            fails.append(seed)
    return CriterionResult(3, "unique reduced form", not fails,
                           f"{count} elements, two expansion sequences each, {len(fails)} mismatches", failures=fails)


def criterion_4(quick: bool = False) -> CriterionResult:
    count = _scale(quick, 500, 60)
    rep = diagrams.check_local_confluence(seed=7, count=count, size_bound=12, spec=el.braid_spec(2))
    ok = not rep.counterexamples and not rep.measure_violations
    return CriterionResult(4, "local confluence", ok,
                           f"{rep.diagrams} diagrams, {rep.move_pairs} move pairs, {rep.rewrite_steps} steps, "
                           f"{len(rep.counterexamples)} counterexamples, {len(rep.measure_violations)} measure violations",
                           failures=rep.counterexamples + rep.measure_violations)


def criterion_5(quick: bool = False) -> CriterionResult:
    count = _scale(quick, 200, 25)
    fails = []
    grid = list(parameter_grid())
    for seed in range(count):
        n, r, spec = grid[seed % len(grid)]
        # products and expansions so that the diagram has real work to do
        rng = random.Random(seed)
        v = el.random_element(spec, r, 3, seed=seed + 9000) * el.random_element(spec, r, 2, seed=seed + 9500)
        v = _random_expansions(v, rng, rng.randint(0, 3))
        nf = diagrams.normal_form(diagrams.from_element(v))
        bad = diagrams.path_shape_violations(nf)
        if bad:
            fails.append((seed, bad))
        back = diagrams.to_element(nf, normalize=False)
        if not el.equal(back, v):
            fails.append((seed, "round trip"))
        elif not el.same_reduced(back, el.reduce(v)):
            fails.append((seed, "normal form is not the reduced element"))
    return CriterionResult(5, "diagram/element round trip", not fails,
                           f"{count} elements, {len(fails)} violations", failures=fails)


# ---------------------------------------------------------------------------
# 6, 7, 8. generators


def criterion_6(quick: bool = False) -> CriterionResult:
    count = _scale(quick, 100, 12)
    fails = []
    notes = []
    for n in (2, 3):
        spec = el.braid_spec(n)
        table = G.GeneratorTable(n, spec)
        names = set(table.standard_names())
        if len(names) != 2 * n:
            fails.append(("set size", n, len(names)))
        dec = G.Decomposer(table)
        rw, _ = G.generating_set_rewriter(table, "standard")
        for seed in range(count):
            v = el.reduce(el.random_element(spec, 1, 6, seed=seed))
            w = rw(dec.decompose(v))
            if not w.letters() <= names:
                fails.append(("letters", n, seed, sorted(w.letters() - names)))
            elif not el.equal(G.evaluate(w, table), v):
                fails.append(("evaluate", n, seed))
        notes.append(f"n={n}: {sorted(names)}")
    spec = el.identity_spec(2)
    table = G.GeneratorTable(2, spec)
    names = set(table.braided_names())
    if names != {"x_0", "x_1", "h_1", "h_5"}:
        fails.append(("BV_2 set", sorted(names)))
    rw, _ = G.generating_set_rewriter(table, "braided")
    dec = G.Decomposer(table)
    for seed in range(count):
        v = el.reduce(el.random_element(spec, 1, 6, seed=seed))
        w = rw(dec.decompose(v))
        if not w.letters() <= names or not el.equal(G.evaluate(w, table), v):
            fails.append(("BV_2", seed))
    return CriterionResult(6, "2n generators", not fails,
                           f"{count} elements each for n=2,3 (H=B_n) and n=2 (H=Id); {len(fails)} failures",
                           failures=fails)


def criterion_7(quick: bool = False) -> CriterionResult:
    fails = []
    checks = 0

    def check(tag, ok):
        nonlocal checks
        checks += 1
        if not ok:
            fails.append(tag)

    for n in (3, 4):
        spec = el.braid_spec(n)
        table = G.GeneratorTable(n, spec)
        lr = G.HRewriter(table)
        for i in range(1, n):
            check(("v=g", n, i), el.equal(lr.v_elem(i), G.g_element(spec, f"s{i}")))
            check(("h small", n, i), el.equal(G.evaluate(lr.h_small(i), table), G.h_element(spec, i)))
            if i < n - 1:
                z = lr.z_elem(i)
                check(("z h z^-1", n, i), el.equal(z * G.h_element(spec, i + 1) * z.inverse(), lr.conj_elem(i)))
        for k, copies in lr.rho_copies.items():
            check(("rho count", n, k), copies == n - k - 2)
    for n in (2, 3, 4):
        spec = el.braid_spec(n)
        table = G.GeneratorTable(n, spec)
        lr = G.HRewriter(table)
        tr = lr.trees
        m = table.m
        h1 = el.from_trees(spec, tr["T1"], BraidWord(m, tuple(range(n, 0, -1))), None, tr["T2"])
        check(("h_1 via T1,T2", n), el.equal(h1, G.h_element(spec, 1)))
        for i in range(n, m - 1):
            check(("h large", n, i), el.equal(G.evaluate(lr.h_large(i), table), G.h_element(spec, i)))
        for i in range(2, m - n):
            a = el.from_trees(spec, tr["Tp"], BraidWord(m, (i,)))
            b = el.from_trees(spec, tr["Tpp"], BraidWord(m, (i + n - 1,)))
            check(("shift", n, i), el.equal(a, b))
    # the figure instance: sigma_8 over T'(4) corresponds to h_11
    spec = el.braid_spec(4)
    table = G.GeneratorTable(4, spec)
    tr = G.shift_trees(4)
    h8 = el.from_trees(spec, tr["Tp"], BraidWord(13, (8,)))
    conj = el.inverse(G.evaluate(G.GeneratorWord.letter(G.e_name(tr["Tpp"])), table)) * \
        G.evaluate(G.GeneratorWord.letter(G.e_name(tr["Tp"])), table)
    check(("sigma_8 -> h_11",), el.equal(conj * G.h_element(spec, 8) * conj.inverse(), G.h_element(spec, 11)))
    check(("T' sigma_8 = T'' sigma_11",), el.equal(h8, el.from_trees(spec, tr["Tpp"], BraidWord(13, (11,)))))
    # parabolic rewrites, n = 3, proper subsets
    for X in ([], [1], [2]):
        for i in X:
            t, w, target = G.parabolic_rewrite(3, X, i)
            check(("parabolic", tuple(X), i), el.equal(G.evaluate(w, t), target))
            _, names = G.parabolic_table(3, X)
            check(("parabolic letters", tuple(X), i), w.letters() <= set(names))
    return CriterionResult(7, "rewrite identities", not fails, f"{checks} identities, {len(fails)} failures",
                           failures=fails)


def random_alphas(n: int = 3, count: int = 2, seed: int = 8) -> List[BraidWord]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(3))).free_reduced()
        if len(a) == 3:
            out.append(a)
    return out


def criterion_8(quick: bool = False) -> CriterionResult:
    n = 3
    fails = []
    checks = 0
    subsets = [[], [1], [2], [1, 2]]
    for X in subsets:
        for alpha in [None] + random_alphas(n):
            table, names = G.parabolic_table(n, X, alpha)
            checks += 1
            if len(set(names)) != 2 * n:
                fails.append(("size", X, str(alpha), len(names)))
            for name in names:
                v = table.element(name)
                for lab in v.labels:
                    if any(g not in table.spec.gens for g, _ in lab):
                        fails.append(("label", X, str(alpha), name))
            for i in X:
                checks += 1
                t, w, target = G.parabolic_rewrite(n, X, i, alpha)
                if not w.letters() <= set(names):
                    fails.append(("letters", X, str(alpha), i))
                elif not el.equal(G.evaluate(w, t), target):
                    fails.append(("rewrite", X, str(alpha) if alpha else "e", i))
    return CriterionResult(8, "parabolic generating sets", not fails,
                           f"{checks} checks over 4 subsets x (trivial + 2 random alpha), {len(fails)} failures",
                           failures=fails)


# ---------------------------------------------------------------------------
# 9. ribbons


def brute_force_ribbons(l: int, p: int, q: int, n: int) -> list:
    """All shortest simple braids moving block p..p+n-1 onto q..q+n-1 in order."""
    best, found = None, []
    for perm in itertools.permutations(range(1, l + 1)):
        if any(perm[p - 1 + j] != q + j for j in range(n)):
            continue
        length = sum(1 for a in range(l) for b in range(a + 1, l) if perm[a] > perm[b])
        if best is None or length < best:
            best, found = length, [perm]
        elif length == best:
            found.append(perm)
    return [braids.simple_braid(l, perm) for perm in found]


def _trees_up_to(leaves: int):
    for n in range(2, leaves + 1):
        d = 1
        while 1 + d * (n - 1) <= leaves:
            yield from all_trees(n, d)
            d += 1


def criterion_9(quick: bool = False) -> CriterionResult:
    fails = []
    pairs = 0
    cache: Dict[tuple, list] = {}
    trees = list(_trees_up_to(6))
    for t in trees:
        for t2 in trees:
            if t2.n != t.n or t2.leaf_count != t.leaf_count:
                continue
            for c in t.final_carets():
                for c2 in t2.final_carets():
                    pairs += 1
                    r = braids.ribbon(t, c, t2, c2)
                    key = (t.leaf_count, t.position(c), t2.position(c2), t.n)
                    if key not in cache:
                        cache[key] = brute_force_ribbons(*key)
                    best = cache[key]
                    if len(r) != len(best[0]) or not any(braids.equal(r, b) for b in best) \
                            or not braids.is_simple(r):
                        fails.append((str(t), c, str(t2), c2))
    return CriterionResult(9, "ribbon minimality", not fails,
                           f"{pairs} caret pairs over trees with <= 6 leaves, {len(fails)} mismatches",
                           failures=fails)


# ---------------------------------------------------------------------------
# 10. command line


def criterion_10(quick: bool = False) -> CriterionResult:
    import io
    import os
    import tempfile
    from contextlib import redirect_stderr, redirect_stdout

    from . import cli
    from .grammar import format_element, parse_element

    fails = []
    count = _scale(quick, 100, 15)
    grid = list(parameter_grid())
    for seed in range(count):
        n, r, spec = grid[seed % len(grid)]
        v = el.random_element(spec, r, 3, seed=seed + 300)
        text = format_element(v)
        back = parse_element(text)
        if format_element(back) != text or not el.equal(back, v):
            fails.append(("round trip", seed))

    def run(*argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = cli.main(list(argv))
        return code, out.getvalue()

    with tempfile.TemporaryDirectory() as tmp:
        spec = el.braid_spec(2)
        a = el.random_element(spec, 1, 2, seed=1)
        b = a * G.g_element(spec, "s1")
        pa, pb, bad = (os.path.join(tmp, x) for x in ("a.bv", "b.bv", "bad.bv"))
        for path, v in ((pa, a), (pb, b)):
            with open(path, "w") as fh:
                fh.write(format_element(v) + "\n")
        with open(bad, "w") as fh:
            fh.write("bv{n=2, r=1, H=B2; domain: (. . .); braid: ; labels: [-]; range: .}\n")
        expect = [
            (("equal", pa, pa), 0, "true"),
            (("equal", pa, pb), 1, "false"),
            (("reduce", bad), 2, None),
            (("compose", pa, os.path.join(tmp, "missing.bv")), 2, None),
            (("frobnicate",), 2, None),
            (("decompose", "--verify", pb), 0, None),
        ]
        for argv, code, text in expect:
            got, out = run(*argv)
            if got != code or (text is not None and out.strip() != text):
                fails.append(("exit code", argv[0], got, code))
        if not quick:
            got, out = run("selftest", "--quick")
            if got != 0:
                failed = [ln for ln in out.splitlines() if ln.startswith("[FAIL]")]
                fails.append(("selftest", got, failed))
    return CriterionResult(10, "command line contract", not fails,
                           f"{count} grammar round trips, exit codes, selftest; {len(fails)} failures",
                           failures=fails)


CRITERIA: Dict[int, Callable[..., CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run(number: int, quick: bool = False) -> CriterionResult:
    start = time.perf_counter()
    res = CRITERIA[number](quick)
    res.seconds = time.perf_counter() - start
    return res


def run_all(quick: bool = False, only: Optional[List[int]] = None) -> List[CriterionResult]:
    return [run(k, quick) for k in (only or sorted(CRITERIA))]
