"""Hilbert-style proofs in classical PC and implicational IPC, and a compiler between them."""

from .formula import F, Falsum, Formula, Implies, ParseError, Var, degree, in_L, neg, parse, to_text
from .kernel import Proof, SystemId, check, format_proof, parse_proof

__all__ = [
    "F", "Falsum", "Formula", "Implies", "ParseError", "Var",
    "degree", "in_L", "neg", "parse", "to_text",
    "Proof", "SystemId", "check", "format_proof", "parse_proof",
]
