"""Strong Bruhat order on S_n read intrinsically on Lehmer codes."""

from .composition import Composition, c_entry, c_matrix, decode, dual
from .permutation import Permutation, Transposition, encode, length
from .poset import CoverWitness, check_cover, hasse, leq_A, lower_covers, upper_covers

__all__ = [
    "Composition", "CoverWitness", "Permutation", "Transposition",
    "c_entry", "c_matrix", "check_cover", "decode", "dual", "encode",
    "hasse", "length", "leq_A", "lower_covers", "upper_covers",
]
