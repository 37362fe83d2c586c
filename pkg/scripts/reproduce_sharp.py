"""Build the sharp (K_3, K_{1,3}) graph on 13 vertices, verify it and audit it."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from cocrit import PairParams, audit_structure, build_t3, enumerate_critical, verify_cocritical


@dataclass
class Config:
    k: int = 3
    n: int = 13


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=Config.k)
    ap.add_argument("--n", type=int, default=Config.n)
    cfg = Config(**vars(ap.parse_args()))
    p = PairParams(3, cfg.k)

    t0 = time.perf_counter()
    g, sigma, plan = build_t3(cfg.k, cfg.n)
    rep = verify_cocritical(g, p)
    en = enumerate_critical(g, p)
    audit = audit_structure(g, p)
    out = {
        "config": asdict(cfg),
        "edges": g.num_edges,
        "verdict": rep.verdict.value,
        "non_edges_checked": len(rep.nonedges),
        "critical_colorings": len(en.colorings),
        "unique_is_sigma": en.complete and en.colorings == [sigma],
        "audit": audit.checks(),
        "seconds": round(time.perf_counter() - t0, 3),
    }
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
