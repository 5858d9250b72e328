"""
Input Validators
Parsing and validation of command-line inputs before any codec runs
"""
from typing import Iterable, Iterator, List, Optional

from ssa_codes.errors import ParameterError, SequenceParseError
from ssa_codes.logger import ssa_logger
from ssa_codes.utils.dna import DnaSeq


def parse_range(text: str, default: Optional[range] = None) -> range:
    """
    Inclusive integer range written ``A:B`` (or a single ``A``)

    Args:
        text: the flag value, may be empty
        default: returned when ``text`` is empty

    Returns:
        range covering A..B
    """
    if not text:
        if default is None:
            raise ParameterError("a range A:B is required")
        return default
    lo_text, sep, hi_text = text.partition(":")
    try:
        lo = int(lo_text)
        hi = int(hi_text) if sep else lo
    except ValueError:
        ssa_logger.warning(f"❌ Bad range value: {text!r}")
        raise ParameterError(f"range must look like A:B, got {text!r}")
    if lo > hi:
        raise ParameterError(f"empty range {text!r}")
    return range(lo, hi + 1)


def content_lines(lines: Iterable[str]) -> Iterator[str]:
    """Strip line endings and skip blank lines"""
    for line in lines:
        line = line.strip()
        if line:
            yield line


def parse_dna_lines(lines: Iterable[str]) -> List[DnaSeq]:
    """One sequence per non-blank line; the line number is reported on failure"""
    sequences = []
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            sequences.append(DnaSeq(line))
        except SequenceParseError as e:
            ssa_logger.warning(f"❌ Line {number} is not DNA text")
            raise SequenceParseError(f"line {number}: {e}")
    return sequences


def require_positive(value: Optional[int], flag: str) -> int:
    if value is None:
        raise ParameterError(f"{flag} is required")
    if value < 1:
        raise ParameterError(f"{flag} must be positive, got {value}")
    return value
