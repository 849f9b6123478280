"""Count boundary entries of D(n) over Q(q) that are not a single signed power of q."""

import argparse
from dataclasses import dataclass

from heckehom.dcomplex import boundary_entries_check


@dataclass
class Config:
    n_max: int = 5


def main(cfg: Config) -> None:
    for n in range(1, cfg.n_max + 1):
        c = boundary_entries_check(n)["signed-monomial-entries"].payload
        ex = c["counterexample"][0]["entry"] if c["counterexample"] else "-"
        print(f"n={n}: {c['non_monomial']}/{c['entries']} non-monomial entries, e.g. {ex}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    main(Config(p.parse_args().n_max))
