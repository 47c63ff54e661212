"""Track the degree-0 presentation as the module size bound grows.

For a group monoid the reported free rank climbs and then stabilizes at the
number of subgroup conjugacy classes; the bound |G| + 3 used by the
acceptance checks sits past the stabilization point for every library group
of order at most 12.  For a non-group monoid the presentation stays a
bounded approximation and this script shows how it evolves instead.

Usage: python3 scripts/g0_convergence.py [--group NAME] [--max-bound B]
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from f1gtheory.burnside import build_burnside
from f1gtheory.groups import build_group
from f1gtheory.gtheory import g0_presentation
from f1gtheory.modules import group_monoid


@dataclass(frozen=True)
class ConvergenceConfig:
    group: str = "S3"
    max_bound: int = 0  # 0 means |G| + 3


def run(config: ConvergenceConfig) -> int:
    group = build_group(name=config.group)
    ring = build_burnside(group)
    monoid = group_monoid(group)
    top = config.max_bound or group.order + 3
    print(f"group {config.group}, Burnside rank {ring.rank}, "
          f"bounds 1..{top}")
    print(f"{'bound':>5} {'generators':>10} {'relations':>9} "
          f"{'free rank':>9} {'torsion':>8} {'stability':>22} {'time':>7}")
    for bound in range(1, top + 1):
        t0 = time.time()
        p = g0_presentation(monoid, bound)
        torsion = "+".join(str(d) for d in p.result.torsion) or "-"
        print(f"{bound:>5} {len(p.generators):>10} {len(p.relations):>9} "
              f"{p.result.free_rank:>9} {torsion:>8} {p.stability:>22} "
              f"{time.time() - t0:>6.2f}s")
    return 0


def parse_args(argv=None) -> ConvergenceConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--group", default="S3")
    parser.add_argument("--max-bound", type=int, default=0)
    args = parser.parse_args(argv)
    return ConvergenceConfig(args.group, args.max_bound)


if __name__ == "__main__":
    sys.exit(run(parse_args()))
