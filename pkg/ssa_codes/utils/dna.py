"""
DNA Core
Alphabet, immutable sequences, Watson-Crick operations and the integer <-> DNA radix mapping
"""
from enum import IntEnum
from functools import total_ordering
from itertools import product
from typing import Iterable, Iterator, Union, overload

from ssa_codes.errors import SequenceParseError, ParameterError


class DnaSymbol(IntEnum):
    """
    One nucleotide. The integer value is the quaternary digit of the
    DNA-representation (0 -> A, 1 -> T, 2 -> C, 3 -> G), which also fixes
    the total order A < T < C < G.
    """
    A = 0
    T = 1
    C = 2
    G = 3

    @property
    def complement(self) -> "DnaSymbol":
        # A<->T and C<->G differ in the low bit only
        return DnaSymbol(self.value ^ 1)

    def __str__(self) -> str:
        return self.name


ALPHABET = "ATCG"

_TEXT_TO_DIGIT = bytes.maketrans(b"ATCG", b"\x00\x01\x02\x03")
_DIGIT_TO_TEXT = bytes.maketrans(b"\x00\x01\x02\x03", b"ATCG")
_COMPLEMENT_DIGITS = bytes.maketrans(b"\x00\x01\x02\x03", b"\x01\x00\x03\x02")
_VALID_DIGITS = b"\x00\x01\x02\x03"


@total_ordering
class DnaSeq:
    """
    Immutable sequence over {A, T, C, G}.

    Symbols are held as one 2-bit digit value per byte (the same digit
    mapping as the DNA-representation), so windows slice to hashable
    ``bytes`` and reverse complements are a reversal plus a table lookup.
    Ordering is lexicographic under A < T < C < G.
    """

    __slots__ = ("_digits",)

    def __init__(self, text: str = ""):
        if text.endswith("\n"):
            text = text[:-1]
        try:
            raw = text.encode("ascii")
        except UnicodeEncodeError:
            raise SequenceParseError(f"non-ASCII character in DNA text: {text!r}")
        bad = raw.translate(None, ALPHABET.encode())
        if bad:
            raise SequenceParseError(
                f"invalid DNA symbol {chr(bad[0])!r}; expected one of A, T, C, G"
            )
        self._digits = raw.translate(_TEXT_TO_DIGIT)

    @classmethod
    def from_digits(cls, digits: Union[bytes, bytearray, Iterable[int]]) -> "DnaSeq":
        """Build from digit values 0..3 (no text parsing)"""
        data = bytes(digits)
        if data.translate(None, _VALID_DIGITS):
            raise SequenceParseError("digit values must lie in 0..3")
        seq = object.__new__(cls)
        seq._digits = data
        return seq

    @classmethod
    def _trusted(cls, digits: bytes) -> "DnaSeq":
        seq = object.__new__(cls)
        seq._digits = digits
        return seq

    @classmethod
    def from_symbols(cls, symbols: Iterable[DnaSymbol]) -> "DnaSeq":
        return cls.from_digits(int(s) for s in symbols)

    @property
    def digits(self) -> bytes:
        return self._digits

    @property
    def text(self) -> str:
        return self._digits.translate(_DIGIT_TO_TEXT).decode("ascii")

    def count(self, symbol: DnaSymbol) -> int:
        return self._digits.count(int(symbol))

    def __len__(self) -> int:
        return len(self._digits)

    @overload
    def __getitem__(self, index: int) -> DnaSymbol: ...

    @overload
    def __getitem__(self, index: slice) -> "DnaSeq": ...

    def __getitem__(self, index):
        if isinstance(index, slice):
            return DnaSeq._trusted(self._digits[index])
        return DnaSymbol(self._digits[index])

    def __iter__(self) -> Iterator[DnaSymbol]:
        return (DnaSymbol(d) for d in self._digits)

    def __add__(self, other: "DnaSeq") -> "DnaSeq":
        if not isinstance(other, DnaSeq):
            return NotImplemented
        return DnaSeq._trusted(self._digits + other._digits)

    def __mul__(self, times: int) -> "DnaSeq":
        return DnaSeq._trusted(self._digits * times)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DnaSeq):
            return NotImplemented
        return self._digits == other._digits

    def __lt__(self, other: "DnaSeq") -> bool:
        if not isinstance(other, DnaSeq):
            return NotImplemented
        return self._digits < other._digits

    def __hash__(self) -> int:
        return hash(self._digits)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"DnaSeq({self.text!r})"


def complement(s: DnaSymbol) -> DnaSymbol:
    """Watson-Crick partner: A <-> T, C <-> G"""
    return DnaSymbol(s).complement


def revcomp_digits(digits: bytes) -> bytes:
    return digits[::-1].translate(_COMPLEMENT_DIGITS)


def revcomp(x: DnaSeq) -> DnaSeq:
    """Reverse the sequence, then complement every symbol"""
    return DnaSeq._trusted(revcomp_digits(x.digits))


def substring(x: DnaSeq, i: int, length: int) -> DnaSeq:
    """The ``length`` consecutive symbols of ``x`` starting at 0-based index ``i``"""
    if i < 0 or length < 0 or i + length > len(x):
        raise SequenceParseError(
            f"window ({i}, {length}) out of bounds for a sequence of length {len(x)}"
        )
    return x[i:i + length]


def dna_rep(value: int, width: int) -> DnaSeq:
    """
    Fixed-width big-endian base-4 digits of ``value`` mapped 0->A, 1->T, 2->C, 3->G.

    >>> str(dna_rep(100, 4))
    'TCTA'
    """
    if width < 1:
        raise ParameterError(f"width must be positive, got {width}")
    if value < 0 or value >= 4 ** width:
        raise ParameterError(f"{value} does not fit in {width} quaternary digits")
    digits = bytearray(width)
    for pos in range(width - 1, -1, -1):
        value, digits[pos] = divmod(value, 4)
    return DnaSeq._trusted(bytes(digits))


def int_of_dna_rep(x: DnaSeq) -> int:
    """Inverse of :func:`dna_rep`; total on every sequence"""
    value = 0
    for d in x.digits:
        value = value * 4 + d
    return value


def all_sequences(n: int) -> Iterator[DnaSeq]:
    """Every sequence of length ``n`` in lexicographic order"""
    for digits in product(range(4), repeat=n):
        yield DnaSeq._trusted(bytes(digits))
