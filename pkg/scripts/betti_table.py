"""Betti numbers of D(n) over several fields, as a plain-text table."""

import argparse
from dataclasses import dataclass, field

from heckehom.complexes import homology_dims
from heckehom.dcomplex import build_D
from heckehom.scalars import parse_field


@dataclass
class Config:
    n_max: int = 5
    fields: list[str] = field(default_factory=lambda: [
        "generic", "rational:q=1", "gf:p=2,q=1", "cyclotomic:l=2", "cyclotomic:l=3"])


def main(cfg: Config) -> None:
    for desc in cfg.fields:
        F = parse_field(desc)
        print(f"# {desc}")
        for n in range(0, cfg.n_max + 1):
            betti = [b for _, b in homology_dims(build_D(n, F).complex)]
            print(f"n={n}: " + " ".join(f"{b:>4}" for b in betti))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--field", action="append", dest="fields")
    a = p.parse_args()
    main(Config(a.n_max, a.fields or Config().fields))
