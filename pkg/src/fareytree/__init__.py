"""Generalized Farey sequences, terminal pairs of L-shapes, Young ranking
tables, and a verifier for the trees built from them."""

from .errors import BreakpointError, DomainError, GuardError, NotInSetError
from .exact_rational import INFINITY, ZERO, ExtendedRational, make, mediant, parse
from .farey import FareySequence, FareyVertex, farey_intervals, farey_sequence, v_map
from .terminal import LShape, TerminalPair, check_E, decompress, enumerate_E_lshapes, in_E, u_map
from .tree import (
    LeveledTree,
    VerificationReport,
    build_tree,
    export,
    load_json,
    verify,
    verify_corollary2,
    verify_isomorphism,
    verify_theorem1,
)
from .young import (
    RankingTable,
    delta,
    delta_one_sided,
    phi_map,
    ranking_table,
    suranyi_inverse,
    suranyi_table,
    suranyi_terminal,
    young_terminal_pairs,
)

__version__ = "0.1.0"

__all__ = [
    "BreakpointError",
    "DomainError",
    "GuardError",
    "NotInSetError",
    "ExtendedRational",
    "INFINITY",
    "ZERO",
    "make",
    "mediant",
    "parse",
    "FareySequence",
    "FareyVertex",
    "farey_sequence",
    "farey_intervals",
    "v_map",
    "LShape",
    "TerminalPair",
    "check_E",
    "in_E",
    "u_map",
    "decompress",
    "enumerate_E_lshapes",
    "RankingTable",
    "ranking_table",
    "delta",
    "delta_one_sided",
    "suranyi_table",
    "suranyi_terminal",
    "suranyi_inverse",
    "young_terminal_pairs",
    "phi_map",
    "LeveledTree",
    "VerificationReport",
    "build_tree",
    "verify",
    "verify_theorem1",
    "verify_isomorphism",
    "verify_corollary2",
    "export",
    "load_json",
]
