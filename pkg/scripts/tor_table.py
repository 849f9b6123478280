"""Tor and Ext dimensions of the trivial module over a grid of fields."""

import argparse
from dataclasses import dataclass, field

from heckehom.homalg import ext, tor
from heckehom.scalars import parse_field


@dataclass
class Config:
    n_max: int = 4
    d_max: int = 3
    fields: list[str] = field(default_factory=lambda: [
        "gf:p=2,q=1", "gf:p=3,q=1", "cyclotomic:l=2", "cyclotomic:l=3", "rational:q=2"])


def main(cfg: Config) -> None:
    for desc in cfg.fields:
        F = parse_field(desc)
        for n in range(1, cfg.n_max + 1):
            T, E = tor(n, F, cfg.d_max).dims, ext(n, F, cfg.d_max).dims
            mark = "" if T == E else "  (Tor != Ext)"
            print(f"{desc:<16} n={n}  Tor={T}  Ext={E}{mark}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--dmax", type=int, default=Config.d_max)
    p.add_argument("--field", action="append", dest="fields")
    a = p.parse_args()
    main(Config(a.n_max, a.dmax, a.fields or Config().fields))
