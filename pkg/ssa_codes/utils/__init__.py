"""
Utils Module
DNA primitives and input validation
"""
from .dna import (
    ALPHABET,
    DnaSeq,
    DnaSymbol,
    all_sequences,
    complement,
    dna_rep,
    int_of_dna_rep,
    revcomp,
    substring,
)
from .validators import content_lines, parse_dna_lines, parse_range, require_positive

__all__ = [
    'ALPHABET',
    'DnaSeq',
    'DnaSymbol',
    'all_sequences',
    'complement',
    'dna_rep',
    'int_of_dna_rep',
    'revcomp',
    'substring',
    'content_lines',
    'parse_dna_lines',
    'parse_range',
    'require_positive',
]
