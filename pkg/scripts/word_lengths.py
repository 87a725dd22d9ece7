"""Length of decomposition words as the depth of random elements grows.

Reports the raw word (over x, h, e, g letters) and the word after rewriting
onto the 2n-element set, both as literal (flattened) lengths.
"""

import argparse
import statistics
import time
from dataclasses import dataclass

from bvgroups import elements as el
from bvgroups import generators as G


@dataclass
class Config:
    n: int = 2
    samples: int = 20
    max_depth: int = 6
    seed: int = 0
    verify: bool = False


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--max-depth", type=int, default=Config.max_depth)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--verify", action="store_true")
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(p.parse_args()).items()})

    spec = el.braid_spec(cfg.n)
    table = G.GeneratorTable(cfg.n, spec)
    rw, _ = G.generating_set_rewriter(table, "standard", verify=False)
    print(f"n={cfg.n}, H={spec.name}, {cfg.samples} samples per depth")
    print(f"{'depth':>5} {'raw med':>8} {'raw max':>8} {'2n med':>8} {'2n max':>8} {'secs':>6}")
    for depth in range(1, cfg.max_depth + 1):
        t = time.perf_counter()
        raw, small = [], []
        for s in range(cfg.samples):
            v = el.random_element(spec, 1, depth, seed=cfg.seed + 1000 * depth + s)
            w = G.decompose(v, table)
            w2 = rw(w)
            raw.append(len(w))
            small.append(len(w2))
            if cfg.verify:
                assert el.equal(G.evaluate(w2, table), v), f"depth {depth} sample {s}"
        print(f"{depth:>5} {statistics.median(raw):>8.0f} {max(raw):>8} {statistics.median(small):>8.0f} "
              f"{max(small):>8} {time.perf_counter() - t:>6.1f}")


if __name__ == "__main__":
    main()
