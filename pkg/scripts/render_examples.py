"""Write SVG drawings of the generators and of a few random elements."""

import argparse
import os
from dataclasses import dataclass

from bvgroups import diagrams as D
from bvgroups import elements as el
from bvgroups import generators as G
from bvgroups.render import render_svg


@dataclass
class Config:
    n: int = 2
    out: str = "figures"
    random: int = 3
    seed: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--out", default=Config.out)
    p.add_argument("--random", type=int, default=Config.random)
    p.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(p.parse_args()))

    os.makedirs(cfg.out, exist_ok=True)
    spec = el.braid_spec(cfg.n)
    table = G.GeneratorTable(cfg.n, spec)
    items = [(name, table.element(name)) for name in table.standard_names()]
    for k in range(cfg.random):
        v = el.random_element(spec, 1, 3, seed=cfg.seed + k)
        items.append((f"random{k}", v))
        items.append((f"random{k}_reduced", D.to_element(D.from_element(v))))
    for name, v in items:
        path = os.path.join(cfg.out, f"{name}.svg")
        with open(path, "w") as fh:
            fh.write(render_svg(v, title=name))
        print(path)


if __name__ == "__main__":
    main()
