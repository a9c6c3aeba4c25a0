"""Kernel dimensions for the standard modules of the classical algebras."""
import argparse
import sys
from dataclasses import dataclass

from dirac_kernels.cli import JobSpec, run


@dataclass
class Config:
    max_rank: int = 5
    families: str = "ABCD"


def main(cfg: Config) -> int:
    worst = 0
    for family in cfg.families:
        out, code = run(JobSpec("dims-table", "", {"family": family, "max_rank": cfg.max_rank, "min_rank": 2},
                                "markdown"))
        sys.stdout.write(out.decode() + "\n")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=Config.max_rank)
    p.add_argument("--families", default=Config.families)
    a = p.parse_args()
    sys.exit(main(Config(a.max_rank, a.families.upper())))
