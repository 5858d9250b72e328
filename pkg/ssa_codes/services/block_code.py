"""
Block Concatenation Codes
Compatible block sets (t = ceil(m/3)), the fixed five-block codebook, and the concatenation codec
"""
from math import ceil, log2
from typing import Dict, List, Optional, Sequence, Set, Tuple

from pydantic import ValidationError

from ssa_codes.config import get_settings
from ssa_codes.errors import (
    BudgetExceededError,
    NotACodewordError,
    ParameterError,
    SequenceParseError,
)
from ssa_codes.logger import ssa_logger
from ssa_codes.models import BlockMethod, BlockSet
from ssa_codes.services.base import BaseCodec
from ssa_codes.utils.dna import DnaSeq, all_sequences, revcomp_digits


def window_parameter(m: int) -> int:
    return ceil(m / 3)


def _windows(digits: bytes, t: int) -> Set[bytes]:
    return {digits[i:i + t] for i in range(len(digits) - t + 1)}


def _rc_windows(digits: bytes, t: int) -> Set[bytes]:
    return {revcomp_digits(w) for w in _windows(digits, t)}


def blocks_compatible(x1: DnaSeq, x2: DnaSeq, t: int) -> bool:
    """
    True iff no length-t window of ``x1`` is the reverse complement of a
    length-t window of ``x2``. Symmetric; ``x1 == x2`` checks a block against itself.
    """
    if len(x1) != len(x2):
        raise ParameterError("blocks must have the same length")
    if t < 1 or t > len(x1):
        raise ParameterError(f"t={t} must lie in 1..{len(x1)}")
    return _windows(x1.digits, t).isdisjoint(_rc_windows(x2.digits, t))


def _self_compatible_blocks(m: int, t: int) -> List[DnaSeq]:
    return [b for b in all_sequences(m) if blocks_compatible(b, b, t)]


def _exact_search(m: int, t: int) -> Tuple[DnaSeq, ...]:
    """
    Maximum clique of the compatibility graph by branch and bound.

    A family of blocks is pairwise compatible exactly when the union of its
    t-windows holds no word together with its reverse complement. Every
    maximum clique is therefore the set of blocks surviving one orientation
    choice per RC pair of t-words, so the search branches on those
    orientations and bounds by the number of blocks still alive.
    """
    candidates = _self_compatible_blocks(m, t)
    block_windows = {b: _windows(b.digits, t) for b in candidates}

    pairs: List[Tuple[bytes, bytes]] = []
    for word in all_sequences(t):
        rc = revcomp_digits(word.digits)
        if word.digits < rc:
            pairs.append((word.digits, rc))

    best: List[Tuple[DnaSeq, ...]] = [()]
    visited = [0]

    def better(found: Tuple[DnaSeq, ...]) -> bool:
        current = best[0]
        if len(found) != len(current):
            return len(found) > len(current)
        return found < current

    def branch(depth: int, alive: List[DnaSeq]) -> None:
        visited[0] += 1
        # bound: survivors can only shrink further down
        if len(alive) < len(best[0]):
            return
        if depth == len(pairs):
            found = tuple(alive)
            if better(found):
                best[0] = found
            return
        word, rc = pairs[depth]
        keep_word = [b for b in alive if rc not in block_windows[b]]
        keep_rc = [b for b in alive if word not in block_windows[b]]
        options = sorted([keep_word, keep_rc], key=lambda kept: -len(kept))
        for kept in options:
            branch(depth + 1, kept)

    branch(0, candidates)
    ssa_logger.debug(
        f"exact block search m={m} t={t}: {len(candidates)} self-compatible blocks, "
        f"{visited[0]} nodes, clique size {len(best[0])}"
    )
    return best[0]


def _greedy_search(m: int, t: int) -> Tuple[DnaSeq, ...]:
    """Scan blocks in lexicographic order and keep each one compatible with everything kept"""
    chosen: List[DnaSeq] = []
    forbidden: Set[bytes] = set()  # reverse complements of every kept window
    for block in all_sequences(m):
        windows = _windows(block.digits, t)
        rc_windows = {revcomp_digits(w) for w in windows}
        if not windows.isdisjoint(rc_windows) or not windows.isdisjoint(forbidden):
            continue
        chosen.append(block)
        forbidden |= rc_windows
    return tuple(chosen)


def build_block_set(m: int, method: str = "exact") -> BlockSet:
    """Search for a compatible block set of block length ``m``"""
    if m < 1:
        raise ParameterError(f"block length must be positive, got {m}")
    try:
        method = BlockMethod(method)
    except ValueError:
        raise ParameterError(f"unknown search method: {method}")

    settings = get_settings()
    t = window_parameter(m)
    if method is BlockMethod.EXACT:
        if m > settings.exact_search_max_m:
            ssa_logger.warning(f"exact block search refused for m={m}")
            raise BudgetExceededError(
                f"exact search needs 4^m <= 4^{settings.exact_search_max_m}, got m={m}"
            )
        blocks = _exact_search(m, t)
    elif method is BlockMethod.GREEDY:
        if m > settings.greedy_search_max_m:
            raise BudgetExceededError(
                f"greedy search limited to m <= {settings.greedy_search_max_m}, got m={m}"
            )
        blocks = _greedy_search(m, t)
    else:
        raise ParameterError("fixed block sets are not searched")

    ssa_logger.debug(f"block set m={m} method={method.value}: {len(blocks)} blocks")
    return BlockSet(m=m, t=t, blocks=blocks, method=method)


def benerjee_set() -> BlockSet:
    """
    The five-block codebook {AA, CC, AC, CA, TC}; concatenations of its
    blocks are 3-SSA. Blocks keep the order in which the codebook is
    usually listed, so index 1 is CC.
    """
    blocks = tuple(DnaSeq(b) for b in ("AA", "CC", "AC", "CA", "TC"))
    return BlockSet(m=2, t=window_parameter(2), blocks=blocks, method=BlockMethod.FIXED)


def block_encode(message: Sequence[int], block_set: BlockSet) -> DnaSeq:
    """Concatenate the indexed blocks"""
    size = block_set.size
    parts = []
    for idx in message:
        if not 0 <= idx < size:
            raise ParameterError(f"block index {idx} out of range 0..{size - 1}")
        parts.append(block_set.blocks[idx].digits)
    return DnaSeq.from_digits(b"".join(parts))


def block_decode(x: DnaSeq, block_set: BlockSet) -> List[int]:
    """Split into blocks and look each one up"""
    m = block_set.m
    if len(x) % m:
        raise NotACodewordError(f"length {len(x)} is not a multiple of the block length {m}")
    lookup: Dict[bytes, int] = {b.digits: idx for idx, b in enumerate(block_set.blocks)}
    message = []
    digits = x.digits
    for start in range(0, len(digits), m):
        idx = lookup.get(digits[start:start + m])
        if idx is None:
            raise NotACodewordError(f"chunk {x[start:start + m]} at {start} is not a block")
        message.append(idx)
    return message


def block_code_rate(block_set: BlockSet) -> float:
    """log2 |S| / m in bits/nt"""
    return log2(block_set.size) / block_set.m


def block_code_size(block_set: BlockSet, k: int) -> int:
    """Number of codewords of length k*m"""
    if k < 0:
        raise ParameterError("k must be non-negative")
    return block_set.size ** k


def serialize_block_set(block_set: BlockSet) -> str:
    lines = [f"{block_set.m} {block_set.t} {block_set.size} {block_set.method.value}"]
    lines.extend(b.text for b in block_set.blocks)
    return "\n".join(lines) + "\n"


def parse_block_set(text: str) -> BlockSet:
    """Read the plain-text form produced by :func:`serialize_block_set`"""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise SequenceParseError("empty block set file")
    header = lines[0].split()
    if len(header) != 4:
        raise SequenceParseError(f"bad block set header: {lines[0]!r}")
    try:
        m, t, size = (int(v) for v in header[:3])
    except ValueError:
        raise SequenceParseError(f"bad block set header: {lines[0]!r}")
    blocks = tuple(DnaSeq(line) for line in lines[1:])
    if len(blocks) != size:
        raise SequenceParseError(f"header announces {size} blocks, file holds {len(blocks)}")
    try:
        return BlockSet(m=m, t=t, blocks=blocks, method=header[3])
    except ValidationError as e:
        raise SequenceParseError(f"invalid block set: {e.errors()[0]['msg']}")


class BlockCodec(BaseCodec):
    """Concatenation codec over a fixed or searched block set"""

    def __init__(self, block_set: Optional[BlockSet] = None):
        super().__init__()
        self.block_set = block_set or benerjee_set()

    @property
    def name(self) -> str:
        return "block"

    def encode(self, message: Sequence[int]) -> DnaSeq:
        return block_encode(message, self.block_set)

    def decode(self, codeword: DnaSeq) -> List[int]:
        return block_decode(codeword, self.block_set)

    def parse_message(self, line: str) -> List[int]:
        fields = line.replace(",", " ").split()
        try:
            return [int(f) for f in fields]
        except ValueError:
            raise SequenceParseError(f"block indices must be integers: {line!r}")

    def format_message(self, message: Sequence[int]) -> str:
        return ",".join(str(i) for i in message)
