"""Tabulate Cherednik verdicts and witness primes over a grid of parameters a/l.

For each n and each pair (c, c') with c = a/l and c' = c + k or -c + k, print
the verdict, the witness prime and the images; every certificate is re-verified.

    python scripts/cherednik_certificates.py --n 3 4 --denominators 5 7 11 --shifts -2 1 3
"""
import argparse
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import List

from sramorita.cherednik import cherednik_decide, verify_certificate


@dataclass
class GridConfig:
    ns: List[int] = field(default_factory=lambda: [2, 3, 4])
    denominators: List[int] = field(default_factory=lambda: [5, 7, 11])
    shifts: List[int] = field(default_factory=lambda: [-2, 1, 3])
    numerators: int = 4


def grid(cfg: GridConfig):
    for n in cfg.ns:
        for l in cfg.denominators:
            for a in range(1, cfg.numerators + 1):
                if gcd(a, l) != 1:
                    continue
                c = Fraction(a, l)
                for k in cfg.shifts:
                    for c2 in (c + k, -c + k):
                        yield n, c, c2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", nargs="+", type=int, default=GridConfig().ns)
    ap.add_argument("--denominators", nargs="+", type=int, default=GridConfig().denominators)
    ap.add_argument("--shifts", nargs="+", type=int, default=GridConfig().shifts)
    args = ap.parse_args()
    cfg = GridConfig(args.n, args.denominators, args.shifts)
    tally = {}
    print(f"{'n':>2} {'c':>6} {'c2':>7} {'status':>18} {'p':>8} {'images':>12}")
    for n, c, c2 in grid(cfg):
        v = cherednik_decide(n, c, c2)
        tally[v.status] = tally.get(v.status, 0) + 1
        if v.certificate is None:
            print(f"{n:>2} {str(c):>6} {str(c2):>7} {v.status:>18}")
            continue
        cert = v.certificate
        assert verify_certificate(cert)
        print(f"{n:>2} {str(c):>6} {str(c2):>7} {v.status:>18} {cert.p:>8} {str(cert.images):>12}")
    print("totals:", ", ".join(f"{k}={v}" for k, v in sorted(tally.items())))


if __name__ == "__main__":
    main()
