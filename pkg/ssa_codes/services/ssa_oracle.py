"""
SSA Oracle
Ground-truth checks for the m-SSA property, period-2 runs and the anti-RC capacity bound
"""
from bisect import bisect_left
from collections import defaultdict
from functools import lru_cache
from math import log2
from typing import Dict, List, NamedTuple, Optional

from ssa_codes.config import get_settings
from ssa_codes.errors import BudgetExceededError, ParameterError
from ssa_codes.logger import ssa_logger
from ssa_codes.models import AntiRcSet, CapacityBound, RcPairWitness
from ssa_codes.utils.dna import DnaSeq, DnaSymbol, all_sequences, revcomp, revcomp_digits


class Period2Run(NamedTuple):
    i: int
    j: int
    a: DnaSymbol
    b: DnaSymbol


def _check_window(length: int) -> None:
    if length < 1:
        raise ParameterError(f"window length must be positive, got {length}")


def find_rc_pair_quadratic(x: DnaSeq, length: int) -> Optional[RcPairWitness]:
    """All-pairs reference scan; returns the lexicographically first (p, q)"""
    _check_window(length)
    d = x.digits
    size = len(d)
    for p in range(size - 2 * length + 1):
        target = revcomp_digits(d[p:p + length])
        for q in range(p + length, size - length + 1):
            if d[q:q + length] == target:
                return RcPairWitness(p=p, q=q, length=length)
    return None


def find_rc_pair_indexed(x: DnaSeq, length: int) -> Optional[RcPairWitness]:
    """
    Window-index scan. Every window is filed under its content with its
    start positions in increasing order; for each p the first partner at or
    after p + length is found by bisection.
    """
    _check_window(length)
    d = x.digits
    size = len(d)
    if size < 2 * length:
        return None

    index: Dict[bytes, List[int]] = defaultdict(list)
    for pos in range(size - length + 1):
        index[d[pos:pos + length]].append(pos)

    for p in range(size - 2 * length + 1):
        positions = index.get(revcomp_digits(d[p:p + length]))
        if not positions:
            continue
        idx = bisect_left(positions, p + length)
        if idx < len(positions):
            return RcPairWitness(p=p, q=positions[idx], length=length)
    return None


def find_rc_pair(x: DnaSeq, length: int, method: str = "indexed") -> Optional[RcPairWitness]:
    """
    First non-overlapping pair of windows of ``length`` symbols where the
    earlier window is the reverse complement of the later one.
    """
    if method == "indexed":
        return find_rc_pair_indexed(x, length)
    if method == "quadratic":
        return find_rc_pair_quadratic(x, length)
    raise ParameterError(f"unknown scan method: {method}")


def is_m_ssa(x: DnaSeq, m: int) -> bool:
    """
    True iff ``x`` has no reverse-complement pair of stem length >= m.
    Looking at length exactly m is enough: a longer pair contains one of
    length m (prefix of y against suffix of z).
    """
    _check_window(m)
    if 2 * m > len(x):
        return True
    return find_rc_pair_indexed(x, m) is None


def naive_is_m_ssa(x: DnaSeq, m: int) -> bool:
    """The definition as written: every stem length k >= m, every non-overlapping pair"""
    _check_window(m)
    size = len(x)
    for k in range(m, size // 2 + 1):
        for p in range(size - 2 * k + 1):
            for q in range(p + k, size - k + 1):
                if x[p:p + k] == revcomp(x[q:q + k]):
                    return False
    return True


def find_period2_run(x: DnaSeq, length: int) -> Optional[Period2Run]:
    """
    Earliest-starting substring of the form (ab)^t with 2t >= ``length``,
    extended to the longest even length available at that start. ``a == b``
    is allowed, so homopolymers count as well.
    """
    if length < 2:
        raise ParameterError(f"run length threshold must be at least 2, got {length}")
    d = x.digits
    size = len(d)
    if size < 2:
        return None

    # tail[k]: how many consecutive positions from k on repeat the symbol two places back
    tail = [0] * (size + 1)
    for k in range(size - 1, 1, -1):
        if d[k] == d[k - 2]:
            tail[k] = tail[k + 1] + 1

    for i in range(size - 1):
        stretch = 2 + tail[i + 2]
        even = stretch - stretch % 2
        if even >= length:
            return Period2Run(i, i + even - 1, DnaSymbol(d[i]), DnaSymbol(d[i + 1]))
    return None


def _check_exhaustive_m(m: int) -> None:
    _check_window(m)
    limit = get_settings().anti_rc_max_m
    if m > limit:
        ssa_logger.warning(f"anti-RC set for m={m} refused (limit {limit})")
        raise BudgetExceededError(f"m={m} is outside the exhaustive regime (m <= {limit})")


@lru_cache(maxsize=None)
def _max_anti_rc_set(m: int) -> AntiRcSet:
    members = []
    for word in all_sequences(m):
        # keep the smaller word of every RC pair; self-RC words never qualify
        if word < revcomp(word):
            members.append(word)
    return AntiRcSet(m=m, members=tuple(members))


def max_anti_rc_set(m: int) -> AntiRcSet:
    """Maximum set of length-m words containing no word together with its reverse complement"""
    _check_exhaustive_m(m)
    return _max_anti_rc_set(m)


def anti_rc_size_formula(m: int) -> int:
    """(4^m - s) / 2 with s = 4^(m/2) self-RC words for even m, none for odd m"""
    self_rc = 4 ** (m // 2) if m % 2 == 0 else 0
    return (4 ** m - self_rc) // 2


def capacity_upper_bound(m: int) -> CapacityBound:
    """Capacity upper bound from the maximum anti-RC set, with the trivial 4^m/2 bound"""
    anti_rc = max_anti_rc_set(m)
    return CapacityBound(
        m=m,
        set_size=anti_rc.size,
        bound=log2(anti_rc.size) / m,
        trivial_bound=(2 * m - 1) / m,
    )


def count_ssa_sequences(n: int, m: int) -> int:
    """Number of length-n m-SSA sequences, by exhaustive enumeration"""
    _check_window(m)
    limit = get_settings().ssa_count_max_n
    if n < 0 or n > limit:
        raise BudgetExceededError(f"n={n} is outside the exhaustive census regime (n <= {limit})")
    return sum(1 for x in all_sequences(n) if is_m_ssa(x, m))


def empirical_rate(n: int, m: int) -> float:
    """log2 of the m-SSA census over n, the finite-length view of the capacity"""
    if n < 1:
        raise ParameterError("n must be positive")
    return log2(count_ssa_sequences(n, m)) / n
