"""
Services Module
The SSA oracle and the three code constructions
"""
from .base import BaseCodec
from .block_code import BlockCodec
from .composition_code import CompositionCodec
from .replacement_codec import ReplacementCodec

__all__ = [
    'BaseCodec',
    'BlockCodec',
    'CompositionCodec',
    'ReplacementCodec',
]
