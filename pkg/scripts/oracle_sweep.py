"""Random sweep: every Stable certificate is checked against the destabilizer search.

A nonzero ``violations`` count means a certificate claimed stability while the
search found a strict numerical destabilizer.
"""
from __future__ import annotations

import argparse
import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from k3stab import (
    Assumption,
    MukaiVector,
    SearchBounds,
    StabilityPoint,
    SurfaceContext,
    Verdict,
    VerificationStatus,
    certify,
    in_V_X,
    lambda_,
    self_pairing,
    verify_certificate,
)

FLAGS = (Assumption.GIESEKER_STABLE, Assumption.MU_STABLE_LOCALLY_FREE)


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 0
    trials: int = 400
    degrees: tuple[int, ...] = (1, 2, 3)
    max_vector_rank: int = 6
    max_search_rank: int = 10
    max_den: int = 4


def _sample(rng: random.Random, cfg: SweepConfig):
    d = rng.choice(cfg.degrees)
    r = rng.randint(1, cfg.max_vector_rank)
    n = rng.randint(-2 * r, 2 * r)
    # s chosen so that v^2 lands in {-2, 0, 2, ...}
    s = (d * n * n + 1) // r - rng.randint(0, 2)
    x = Fraction(rng.randint(-4 * cfg.max_den, 4 * cfg.max_den), rng.randint(1, cfg.max_den))
    y = Fraction(rng.randint(1, 6 * cfg.max_den), rng.randint(1, cfg.max_den))
    return SurfaceContext(d), MukaiVector(r, n, s), StabilityPoint(x, y)


def run(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    tally = {"trials": 0, "stable": 0, "verified": 0, "unconfirmed": 0, "violations": 0}
    bounds = SearchBounds(cfg.max_search_rank)
    while tally["trials"] < cfg.trials:
        ctx, v, sigma = _sample(rng, cfg)
        if self_pairing(v, ctx) < -2 or lambda_(v, sigma) == 0 or not in_V_X(sigma, ctx):
            continue
        tally["trials"] += 1
        cert = certify(v, sigma, ctx, FLAGS)
        if cert.verdict is not Verdict.STABLE:
            continue
        tally["stable"] += 1
        status = verify_certificate(v, sigma, cert, ctx, bounds).status
        if status is VerificationStatus.VERIFIED:
            tally["verified"] += 1
        elif status is VerificationStatus.UNCONFIRMED:
            tally["unconfirmed"] += 1
        else:
            tally["violations"] += 1
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--trials", type=int, default=SweepConfig.trials)
    ap.add_argument("--max-search-rank", type=int, default=SweepConfig.max_search_rank)
    args = ap.parse_args()
    cfg = SweepConfig(seed=args.seed, trials=args.trials, max_search_rank=args.max_search_rank)
    print(json.dumps({"config": asdict(cfg), "result": run(cfg)}, indent=2))


if __name__ == "__main__":
    main()
