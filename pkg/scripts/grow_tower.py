"""Koszulity and global dimension along the tower lambda, lambda + l_Psi, ...

    python3 scripts/grow_tower.py --type B3 --xi "2*theta-alpha2" --steps 3
"""
import argparse
import json
from dataclasses import asdict, dataclass

from liekoszul.cli import parse_weight
from liekoszul.koszul import grow
from liekoszul.psi import compute_psi
from liekoszul.rootsys import LieType, build_root_system


@dataclass
class TowerConfig:
    lie_type: str = "B3"
    xi: str = "2*theta-alpha2"
    start: str = "zero"
    steps: int = 3


def run(cfg: TowerConfig) -> dict:
    rs = build_root_system(LieType.parse(cfg.lie_type))
    psi = compute_psi(rs, parse_weight(rs, cfg.xi))
    reports = grow(psi, parse_weight(rs, cfg.start), cfg.steps)
    return {"config": asdict(cfg),
            "psi": [list(b) for b in psi.roots],
            "tower": [{"lambda": list(r.slice.top), "size": len(r.slice), "koszul": r.koszul_ok,
                       "duality": r.duality_ok, "gldim": r.gldim} for r in reports]}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", dest="lie_type", default=TowerConfig.lie_type)
    ap.add_argument("--xi", default=TowerConfig.xi)
    ap.add_argument("--start", default=TowerConfig.start)
    ap.add_argument("--steps", type=int, default=TowerConfig.steps)
    print(json.dumps(run(TowerConfig(**vars(ap.parse_args()))), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
