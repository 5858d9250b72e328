"""
CLI Module
Sub-command implementations and byte payload handling
"""
from .commands import build_codec, run_check, run_codec, run_table
from .payload import pack_bytes, unpack_dna

__all__ = [
    'build_codec',
    'run_check',
    'run_codec',
    'run_table',
    'pack_bytes',
    'unpack_dna',
]
