"""
Byte Payloads
Bytes <-> DNA packing (four symbols per byte) and the framing used by ``--bytes``
"""
from math import log2
from typing import List

from ssa_codes.errors import NotACodewordError, ParameterError
from ssa_codes.utils.dna import DnaSeq, dna_rep, int_of_dna_rep

SYMBOLS_PER_BYTE = 4
HEADER_WIDTH = 2
MAX_FRAME_BYTES = 4 ** HEADER_WIDTH - 1


def pack_bytes(data: bytes) -> DnaSeq:
    """
    Big-endian 2-bit groups of every byte, 0 -> A, 1 -> T, 2 -> C, 3 -> G

    >>> str(pack_bytes(b"\\x1b"))
    'ATCG'
    """
    digits = bytearray()
    for byte in data:
        digits.extend((byte >> 6, (byte >> 4) & 3, (byte >> 2) & 3, byte & 3))
    return DnaSeq.from_digits(digits)


def unpack_dna(x: DnaSeq) -> bytes:
    if len(x) % SYMBOLS_PER_BYTE:
        raise ParameterError(f"packed DNA length must be a multiple of 4, got {len(x)}")
    d = x.digits
    return bytes(
        (d[i] << 6) | (d[i + 1] << 4) | (d[i + 2] << 2) | d[i + 3]
        for i in range(0, len(d), SYMBOLS_PER_BYTE)
    )


# ============================================
# Replacement scheme framing
# ============================================

def frame_bytes(data: bytes, message_length: int) -> List[DnaSeq]:
    """
    Split ``data`` into messages of ``message_length`` symbols: a 2-symbol
    byte count, the packed chunk, then A padding
    """
    per_frame = min(MAX_FRAME_BYTES, (message_length - HEADER_WIDTH) // SYMBOLS_PER_BYTE)
    if per_frame < 1:
        raise ParameterError(f"messages of {message_length} symbols cannot carry a byte")
    frames = []
    for start in range(0, len(data), per_frame):
        chunk = data[start:start + per_frame]
        body = dna_rep(len(chunk), HEADER_WIDTH) + pack_bytes(chunk)
        frames.append(body + DnaSeq("A") * (message_length - len(body)))
    return frames


def unframe_bytes(message: DnaSeq) -> bytes:
    size = int_of_dna_rep(message[:HEADER_WIDTH])
    end = HEADER_WIDTH + SYMBOLS_PER_BYTE * size
    if len(message) < HEADER_WIDTH or end > len(message):
        raise NotACodewordError(f"frame announces {size} bytes but holds fewer")
    return unpack_dna(message[HEADER_WIDTH:end])


# ============================================
# Composition scheme chunking
# ============================================

def chunk_width(count: int) -> int:
    """Whole bytes that always fit below ``count``"""
    width = int(log2(count)) // 8 if count > 0 else 0
    # log2 of a huge int may round up across a power of two
    while width and 256 ** width > count:
        width -= 1
    return width


def chunk_ranks(data: bytes, count: int) -> List[int]:
    """
    Ranks for the composition scheme: the total byte length first, then
    big-endian chunks of ``chunk_width(count)`` bytes, the last one zero-padded
    """
    width = chunk_width(count)
    if width < 1:
        raise ParameterError(f"a codebook of {count} words cannot carry a whole byte")
    if len(data) >= count:
        raise ParameterError("payload too long for the length header")
    ranks = [len(data)]
    for start in range(0, len(data), width):
        chunk = data[start:start + width].ljust(width, b"\x00")
        ranks.append(int.from_bytes(chunk, "big"))
    return ranks


def join_ranks(ranks: List[int], count: int) -> bytes:
    width = chunk_width(count)
    if not ranks:
        return b""
    if width < 1:
        raise ParameterError(f"a codebook of {count} words cannot carry a whole byte")
    size, chunks = ranks[0], ranks[1:]
    if len(chunks) != -(-size // width):
        raise NotACodewordError(f"length header announces {size} bytes in {len(chunks)} chunks")
    if any(rank >= 256 ** width for rank in chunks):
        raise NotACodewordError("rank outside the byte chunk range")
    data = b"".join(rank.to_bytes(width, "big") for rank in chunks)
    return data[:size]
