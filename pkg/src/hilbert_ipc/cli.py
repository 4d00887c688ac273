"""Command-line entry point: ``hilbert-ipc check|transpile|prove|translate``.

Exit status: 0 success, 1 semantic failure (proof rejected, not a
tautology), 2 input error (unreadable file, parse error, precondition).
Proofs go to stdout or ``--out``; statistics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .formula import ParseError, in_L, parse, to_text
from .kernel import (
    Proof,
    ProofError,
    ProofFormatError,
    Rejected,
    SystemId,
    check,
    format_proof,
    justification_kinds,
    parse_proof,
)

OK, FAILED, BAD_INPUT = 0, 1, 2


def _verdict_text(v) -> str:
    if not isinstance(v, Rejected):
        return "Accepted"
    if v.line is None:
        return f"Rejected hypotheses: {v.reason.value}"
    return f"Rejected line {v.line + 1}: {v.reason.value}"


def _read_proof(path: str) -> Proof:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_proof(text)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _stats(label: str, p: Proof, histogram: bool) -> None:
    print(f"{label} lines: {len(p)}", file=sys.stderr)
    if histogram:
        kinds = justification_kinds(p)
        row = " ".join(f"{k}={kinds[k]}" for k in sorted(kinds))
        print(f"{label} justifications: {row}", file=sys.stderr)


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_check(args) -> int:
    status = OK
    many = len(args.paths) > 1
    for path in args.paths:
        prefix = f"{path}: " if many else ""
        try:
            p = _read_proof(path)
        except (OSError, ProofFormatError) as e:
            print(f"{prefix}error: {e}")
            status = max(status, BAD_INPUT)
            continue
        if args.system:
            p = Proof(SystemId(args.system), p.hypotheses, p.lines)
        v = check(p)
        print(prefix + _verdict_text(v))
        if not v:
            status = max(status, FAILED)
    return status


def cmd_transpile(args) -> int:
    from .transpile import ipc_to_pc, pc_to_ipc

    try:
        p = _read_proof(args.path)
    except (OSError, ProofFormatError) as e:
        _err(str(e))
        return BAD_INPUT
    want = SystemId.PC if args.direction == "pc-to-ipc" else SystemId.IPC
    if p.system is not want:
        _err(f"{args.direction} needs a {want} proof, file declares {p.system}")
        return BAD_INPUT
    v = check(p)
    if not v:
        _err(f"input proof {_verdict_text(v)}")
        return FAILED
    if want is SystemId.PC:
        if p.hypotheses:
            _err("pc-to-ipc needs a proof without hypotheses")
            return BAD_INPUT
        if not in_L(p.conclusion):
            _err(f"conclusion not in L: {to_text(p.conclusion)}")
            return BAD_INPUT
        out = pc_to_ipc(p, p.conclusion)
    else:
        out = ipc_to_pc(p)
    v = check(out)
    if not v:  # pragma: no cover - would be a compiler bug
        _err(f"internal error, output {_verdict_text(v)}")
        return FAILED
    _stats("input", p, args.stats)
    _stats("output", out, args.stats)
    _write(format_proof(out), args.out)
    return OK


def cmd_prove(args) -> int:
    from .prover import NotATautology, TooManyVariables, prove_ipc, prove_pc

    try:
        f = parse(args.formula)
    except ParseError as e:
        _err(str(e))
        return BAD_INPUT
    system = SystemId(args.system)
    if system is SystemId.IPC and not in_L(f):
        _err(f"not an IPC formula (contains F): {to_text(f)}")
        return BAD_INPUT
    try:
        p = prove_ipc(f) if system is SystemId.IPC else prove_pc(f)
    except NotATautology as e:
        row = ", ".join(f"{k}: {'true' if v else 'false'}" for k, v in e.valuation.items())
        print(f"not a tautology; counter-valuation {{{row}}}")
        return FAILED
    except TooManyVariables as e:
        _err(str(e))
        return BAD_INPUT
    _stats("output", p, args.stats)
    _write(format_proof(p), args.out)
    return OK


def cmd_translate(args) -> int:
    from .qtrans import QContext, phi

    try:
        f = parse(args.formula)
        q = parse(args.q)
    except ParseError as e:
        _err(str(e))
        return BAD_INPUT
    if not in_L(q):
        _err(f"Q must not contain F: {to_text(q)}")
        return BAD_INPUT
    print(to_text(phi(QContext(q), f)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hilbert-ipc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check proof files")
    c.add_argument("paths", nargs="+", metavar="PATH", help="proof file(s), '-' for stdin")
    c.add_argument("--system", choices=["PC", "IPC"], help="override the file's system header")
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("transpile", help="compile a proof between PC and IPC")
    t.add_argument("path", metavar="PATH")
    t.add_argument("--direction", choices=["pc-to-ipc", "ipc-to-pc"], required=True)
    t.add_argument("--out", help="output file (default stdout)")
    t.add_argument("--stats", action="store_true", help="also print a justification histogram")
    t.set_defaults(func=cmd_transpile)

    p = sub.add_parser("prove", help="synthesize a proof of a tautology")
    p.add_argument("formula")
    p.add_argument("--system", choices=["PC", "IPC"], default="IPC")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_prove)

    r = sub.add_parser("translate", help="print phi(FORMULA) relative to Q")
    r.add_argument("formula")
    r.add_argument("q")
    r.set_defaults(func=cmd_translate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ProofError as e:
        _err(str(e))
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
