"""Local confluence of the diagram moves on random diagrams, per subgroup."""

import argparse
import time
from dataclasses import dataclass

from bvgroups import diagrams as D
from bvgroups import elements as el


@dataclass
class Config:
    count: int = 300
    max_slices: int = 12
    seed: int = 0
    fuzz: bool = False  # also try diagrams whose sink count is unconstrained


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=Config.count)
    p.add_argument("--max-slices", type=int, default=Config.max_slices)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--fuzz", action="store_true")
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(p.parse_args()).items()})

    print(f"{'H':<6} {'diagrams':>8} {'pairs':>7} {'steps':>8} {'bad':>4} {'secs':>6}")
    for spec in (el.identity_spec(2), el.braid_spec(2), el.identity_spec(3), el.braid_spec(3)):
        t = time.perf_counter()
        rep = D.check_local_confluence(cfg.seed, cfg.count, cfg.max_slices, spec, fuzz=cfg.fuzz)
        bad = len(rep.counterexamples) + len(rep.measure_violations)
        print(f"{spec.name + '/' + str(spec.n):<6} {rep.diagrams:>8} {rep.move_pairs:>7} {rep.rewrite_steps:>8} "
              f"{bad:>4} {time.perf_counter() - t:>6.1f}")
        for c in rep.counterexamples[:3]:
            print("   ", c)


if __name__ == "__main__":
    main()
