"""Peirce's law end to end: classical PC proof, IPC proof, and back.

    python scripts/demo_peirce.py [--out DIR]
"""

import argparse
from pathlib import Path

from hilbert_ipc import format_proof, parse
from hilbert_ipc.derive import peirce_in_pc
from hilbert_ipc.kernel import check, justification_kinds
from hilbert_ipc.transpile import ipc_to_pc, pc_to_ipc


def summary(label, p):
    kinds = justification_kinds(p)
    row = " ".join(f"{k}={kinds[k]}" for k in sorted(kinds))
    print(f"{label:<10} {p.system.value:<4} {len(p):>6} lines  {'Accepted' if check(p) else check(p)}  {row}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, help="write the three proofs into this directory")
    args = ap.parse_args()

    z = parse("((p -> q) -> p) -> p")
    classical = peirce_in_pc(parse("p"), parse("q"))
    intuit = pc_to_ipc(classical, z)
    back = ipc_to_pc(intuit)
    for label, p in (("pc", classical), ("ipc", intuit), ("pc-again", back)):
        summary(label, p)
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"peirce_{label}.proof").write_text(format_proof(p))


if __name__ == "__main__":
    main()
