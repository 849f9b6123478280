"""
Stabilization maps Tor_d(H_{n-1}) -> Tor_d(H_n): dimensions, image rank, and the
largest degree through which the map is observed to be an isomorphism, next to
the guaranteed range d <= (n-1)/2.
"""

import argparse
from dataclasses import dataclass, field

from heckehom.homalg import stabilization_map
from heckehom.scalars import parse_field


@dataclass
class Config:
    n_max: int = 4
    d_max: int = 3
    fields: list[str] = field(default_factory=lambda: [
        "gf:p=2,q=1", "gf:p=3,q=1", "cyclotomic:l=2", "cyclotomic:l=3", "cyclotomic:l=4"])


def main(cfg: Config) -> None:
    print(f"{'field':<16}{'n':>3}  {'d':>2}  small  big  image  iso")
    for desc in cfg.fields:
        F = parse_field(desc)
        for n in range(1, cfg.n_max + 1):
            S = stabilization_map(n, F, cfg.d_max)
            last = max([d for d in range(cfg.d_max + 1)
                        if all(S.tor_iso(e) for e in range(d + 1))], default=-1)
            for d in range(cfg.d_max + 1):
                flag = "yes" if S.tor_iso(d) else "no"
                print(f"{desc:<16}{n:>3}  {d:>2}  {S.tor_small[d]:>5}  {S.tor_big[d]:>3}"
                      f"  {S.tor_image[d]:>5}  {flag}")
            print(f"{'':<16}{n:>3}  observed iso through d={last}, "
                  f"guaranteed through d={(n - 1) // 2}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--dmax", type=int, default=Config.d_max)
    p.add_argument("--field", action="append", dest="fields")
    a = p.parse_args()
    main(Config(a.n_max, a.dmax, a.fields or Config().fields))
