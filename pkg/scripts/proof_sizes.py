"""Proof-size growth of the pipeline on random implicational tautologies.

Prints one CSV row per formula: degree, PC lines, IPC lines, seconds.

    python scripts/proof_sizes.py --n 50 --max-cond 12 --seed 1
"""

import argparse
import csv
import random
import sys
import time
from dataclasses import dataclass

from hilbert_ipc.corpus import uniform_formula
from hilbert_ipc.formula import degree, to_text
from hilbert_ipc.prover import is_tautology, prove_pc
from hilbert_ipc.transpile import pc_to_ipc


@dataclass(frozen=True)
class Config:
    n: int = 50
    max_cond: int = 12
    seed: int = 1
    names: tuple = ("p", "q", "r", "s")


def run(cfg: Config, out=sys.stdout):
    rng = random.Random(cfg.seed)
    w = csv.writer(out)
    w.writerow(["formula", "degree", "pc_lines", "ipc_lines", "seconds"])
    done = 0
    while done < cfg.n:
        f = uniform_formula(rng, cfg.max_cond, cfg.names)
        if is_tautology(f) is not True:
            continue
        t0 = time.perf_counter()
        pc = prove_pc(f)
        ipc = pc_to_ipc(pc, f)
        w.writerow([to_text(f), degree(f), len(pc), len(ipc), f"{time.perf_counter() - t0:.4f}"])
        done += 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--max-cond", type=int, default=Config.max_cond)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    run(Config(n=a.n, max_cond=a.max_cond, seed=a.seed))


if __name__ == "__main__":
    main()
