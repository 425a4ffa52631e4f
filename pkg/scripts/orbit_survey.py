"""Survey of orbit structure: how many of N random level-1 parameters are generic,
how many distinct canonical forms appear, and how long reduction takes per quiver.

    python scripts/orbit_survey.py --samples 200 --seed 0 --quivers A3 D4 E6
"""
import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from sramorita.mckay import quiver_from_name
from sramorita.roots import classify_parameter
from sramorita.weyl import canonical_form


@dataclass
class SurveyConfig:
    quivers: List[str] = field(default_factory=lambda: ["A3", "A4", "D4", "E6"])
    samples: int = 200
    seed: int = 0
    max_denominator: int = 4
    spread: int = 3


def random_level_one(rng, Q, cfg: SurveyConfig):
    tail = [Fraction(rng.randint(-cfg.spread * cfg.max_denominator, cfg.spread * cfg.max_denominator),
                     rng.randint(1, cfg.max_denominator)) for _ in range(Q.n - 1)]
    return (1 - sum(d * x for d, x in zip(Q.delta[1:], tail)),) + tuple(tail)


def survey(cfg: SurveyConfig):
    rng = random.Random(cfg.seed)
    rows = []
    for name in cfg.quivers:
        Q = quiver_from_name(name)
        forms, generic, steps = Counter(), 0, 0
        start = time.perf_counter()
        for _ in range(cfg.samples):
            lam = random_level_one(rng, Q, cfg)
            value, word = canonical_form(Q, lam)
            forms[value] += 1
            generic += classify_parameter(Q, lam).generic
            steps += len(word)
        rows.append((name, cfg.samples, generic, len(forms), steps / cfg.samples,
                     time.perf_counter() - start))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quivers", nargs="+", default=SurveyConfig().quivers)
    ap.add_argument("--samples", type=int, default=SurveyConfig.samples)
    ap.add_argument("--seed", type=int, default=SurveyConfig.seed)
    ap.add_argument("--max-denominator", type=int, default=SurveyConfig.max_denominator)
    args = ap.parse_args()
    cfg = SurveyConfig(args.quivers, args.samples, args.seed, args.max_denominator)
    print(f"{'quiver':>6} {'samples':>7} {'generic':>7} {'orbits':>6} {'word len':>8} {'secs':>6}")
    for name, n, gen, orbits, length, secs in survey(cfg):
        print(f"{name:>6} {n:>7} {gen:>7} {orbits:>6} {length:>8.1f} {secs:>6.2f}")


if __name__ == "__main__":
    main()
