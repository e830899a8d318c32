"""Noncommutative Groebner data, chain combinatorics, and resolution
differentials for augmented associative algebras, in exact arithmetic."""

from .chains import (Chain, ChainGraph, ObstructionSet, antichain_from_oim,
                     bracket_prefix, bracket_tail, build_chain_graph,
                     enumerate_chains, enumerate_prechains, identity_chain,
                     is_chain_top_down, is_prechain, obstructions,
                     oim_from_antichain, split_chain)
from .errors import (AnickError, BoundExceeded, InvalidPresentation,
                     NonTermination, NotAnAntichain, NotAnOim, NotGroebner,
                     NotInKernel, NotMinimal, ZeroElement, ZeroPolynomial)
from .fields import GF, QQ, FpElement, PrimeField, RationalField
from .free_algebra import (Alphabet, FreeAlgebra, MonomialOrder, Polynomial,
                           find_subword, words_up_to_weight)
from .groebner import (CheckReport, NormalWordAutomaton, Overlap,
                       Presentation, RewriteSystem, check_groebner, complete,
                       leading_monomials_oracle, overlaps)
from .resolution import ModuleElement, ResolutionEngine, TensorTerm
from .wordops import BACKEND as WORDOPS_BACKEND

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "AnickError", "BoundExceeded", "Chain", "ChainGraph",
    "CheckReport", "FpElement", "FreeAlgebra", "GF", "InvalidPresentation",
    "ModuleElement", "MonomialOrder", "NonTermination", "NormalWordAutomaton",
    "NotAnAntichain", "NotAnOim", "NotGroebner", "NotInKernel", "NotMinimal",
    "ObstructionSet", "Overlap", "Polynomial", "Presentation", "PrimeField",
    "QQ", "RationalField", "ResolutionEngine", "RewriteSystem", "TensorTerm",
    "WORDOPS_BACKEND", "ZeroElement", "ZeroPolynomial", "antichain_from_oim",
    "bracket_prefix", "bracket_tail", "build_chain_graph", "check_groebner",
    "complete", "enumerate_chains", "enumerate_prechains", "find_subword",
    "identity_chain", "is_chain_top_down", "is_prechain",
    "leading_monomials_oracle", "obstructions", "oim_from_antichain",
    "overlaps", "split_chain", "words_up_to_weight",
]
