"""Search for weights attaining the global-dimension bound across several (type, xi) pairs."""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from liekoszul.cli import parse_weight
from liekoszul.koszul import find_attaining_weight
from liekoszul.psi import compute_psi, is_positive
from liekoszul.rootsys import LieType, build_root_system

DEFAULT_CASES = [("A1", "omega1"), ("A2", "rho"), ("A3", "rho"), ("B2", "rho"), ("B3", "2*theta-alpha2"),
                 ("C3", "omega3"), ("G2", "rho"), ("G2", "omega1")]


@dataclass
class SurveyConfig:
    bound: int = 6
    cases: list = field(default_factory=lambda: list(DEFAULT_CASES))


def survey(cfg: SurveyConfig) -> list[dict]:
    rows = []
    for lt, xi in cfg.cases:
        rs = build_root_system(LieType.parse(lt))
        psi = compute_psi(rs, parse_weight(rs, xi))
        row = {"type": lt, "xi": list(psi.xi), "psi_size": len(psi)}
        if not is_positive(psi):
            rows.append({**row, "skipped": "Psi not positive"})
            continue
        t0 = time.perf_counter()
        mu = find_attaining_weight(psi, cfg.bound)
        rows.append({**row, "mu": None if mu is None else list(mu),
                     "seconds": round(time.perf_counter() - t0, 3)})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=SurveyConfig.bound)
    cfg = SurveyConfig(bound=ap.parse_args().bound)
    print(json.dumps({"config": asdict(cfg), "rows": survey(cfg)}, indent=2))


if __name__ == "__main__":
    main()
