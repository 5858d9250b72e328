"""
Symbol-Composition Codes
Every length-m window holds an A and no window holds a T (k = 1), counted exactly and
coded by lexicographic rank; a brute-force counter covers general k.
"""
from math import log2
from typing import Dict, Iterator, List, NamedTuple, Tuple

from ssa_codes.config import get_settings
from ssa_codes.errors import (
    BudgetExceededError,
    NotACodewordError,
    ParameterError,
    SequenceParseError,
)
from ssa_codes.logger import ssa_logger
from ssa_codes.models import CharRoot, CountTable
from ssa_codes.services.base import BaseCodec
from ssa_codes.utils.dna import DnaSeq, DnaSymbol

# k = 1 codewords never contain T; the order below is the lexicographic one
CODE_ALPHABET: Tuple[DnaSymbol, ...] = (DnaSymbol.A, DnaSymbol.C, DnaSymbol.G)

_A = int(DnaSymbol.A)
_T = int(DnaSymbol.T)

_tables: Dict[int, CountTable] = {}


def _check_m(m: int) -> None:
    if m < 1:
        raise ParameterError(f"window length must be positive, got {m}")


def is_member(x: DnaSeq, m: int, k: int = 1) -> bool:
    """
    Every length-m window carries at least k A's and at most k-1 T's.
    Strings shorter than m only have to respect the T budget.
    """
    _check_m(m)
    if not 1 <= k <= m:
        raise ParameterError(f"k={k} must lie in 1..{m}")
    d = x.digits
    if len(d) < m:
        return d.count(_T) <= k - 1

    a_count = d[:m].count(_A)
    t_count = d[:m].count(_T)
    for start in range(len(d) - m + 1):
        if start:
            leaving, entering = d[start - 1], d[start + m - 1]
            a_count += (entering == _A) - (leaving == _A)
            t_count += (entering == _T) - (leaving == _T)
        if a_count < k or t_count > k - 1:
            return False
    return True


def _build_table(m: int, n_max: int) -> CountTable:
    counts = [3 ** i for i in range(min(m, n_max + 1))]
    for n in range(m, n_max + 1):
        counts.append(sum(2 ** j * counts[n - j - 1] for j in range(m)))

    # completions[r][l]: valid continuations of length l after a trailing non-A run of r
    completions = [[1] * (n_max + 1) for _ in range(m)]
    for length in range(1, n_max + 1):
        for r in range(m):
            total = completions[0][length - 1]
            if r < m - 1:
                total += 2 * completions[r + 1][length - 1]
            completions[r][length] = total

    return CountTable(
        m=m,
        counts=tuple(counts),
        completions=tuple(tuple(row) for row in completions),
    )


def count_table(m: int, n: int) -> CountTable:
    """Cached table for window ``m`` covering at least lengths 0..n; grows on demand"""
    _check_m(m)
    if n < 0:
        raise ParameterError(f"length must be non-negative, got {n}")
    table = _tables.get(m)
    if table is None or table.n_max < n:
        n_max = max(n, 2 * table.n_max if table else 64)
        ssa_logger.debug(f"building count table m={m} up to n={n_max}")
        table = _build_table(m, n_max)
        _tables[m] = table
    return table


def count(n: int, m: int) -> int:
    """Number of composition codewords of length n (k = 1)"""
    return count_table(m, n).counts[n]


def _next_state(run: int, symbol: DnaSymbol, m: int) -> int:
    """Trailing non-A run after appending ``symbol``, or -1 if a window would lose its A"""
    if symbol is DnaSymbol.A:
        return 0
    return run + 1 if run + 1 <= m - 1 else -1


def rank(x: DnaSeq, m: int) -> int:
    """Position of ``x`` among the codewords of its length in the order A < C < G"""
    if not is_member(x, m, 1):
        raise ParameterError(f"{x} is not a composition codeword for m = {m}")
    n = len(x)
    completions = count_table(m, n).completions
    run = 0
    position = 0
    for pos, symbol in enumerate(x):
        remaining = n - pos - 1
        for smaller in CODE_ALPHABET:
            if smaller is symbol:
                break
            state = _next_state(run, smaller, m)
            if state >= 0:
                position += completions[state][remaining]
        run = _next_state(run, symbol, m)
    return position


def unrank(idx: int, n: int, m: int) -> DnaSeq:
    """The idx-th codeword of length n; inverse of :func:`rank`"""
    table = count_table(m, n)
    total = table.counts[n]
    if not 0 <= idx < total:
        raise ParameterError(f"index {idx} out of range 0..{total - 1} for n = {n}, m = {m}")
    completions = table.completions
    run = 0
    out = bytearray()
    for pos in range(n):
        remaining = n - pos - 1
        for symbol in CODE_ALPHABET:
            state = _next_state(run, symbol, m)
            if state < 0:
                continue
            block = completions[state][remaining]
            if idx < block:
                out.append(int(symbol))
                run = state
                break
            idx -= block
    return DnaSeq.from_digits(out)


def members(n: int, m: int) -> Iterator[DnaSeq]:
    """Every codeword of length n in lexicographic order"""
    for idx in range(count(n, m)):
        yield unrank(idx, n, m)


def _char_poly(x: float, m: int) -> float:
    return x ** m - sum(2 ** j * x ** (m - 1 - j) for j in range(m))


def char_root(m: int) -> CharRoot:
    """
    Largest real root of x^m - sum_j 2^j x^(m-1-j), the growth rate of the
    counting recurrence. The polynomial is negative at 2 and equals 2^m at 3,
    so bisection on [2 - eps, 3] converges to it. The reported residual is
    |p(lambda)| divided by the sum of the absolute values of its terms.
    """
    if m < 2:
        raise ParameterError(f"char_root needs m >= 2, got {m}")
    settings = get_settings()
    lo, hi = 2.0 - 1e-12, 3.0
    for _ in range(settings.root_max_iterations):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if _char_poly(mid, m) <= 0:
            lo = mid
        else:
            hi = mid
    lam = lo if abs(_char_poly(lo, m)) <= abs(_char_poly(hi, m)) else hi
    scale = lam ** m + sum(2 ** j * lam ** (m - 1 - j) for j in range(m))
    residual = abs(_char_poly(lam, m)) / scale
    if residual > settings.root_tolerance:
        ssa_logger.warning(f"char_root m={m}: residual {residual:.3e} above tolerance")
    return CharRoot(m=m, lam=lam, rate=log2(lam), residual=residual)


def brute_count(n: int, m: int, k: int) -> int:
    """
    Codewords of length n for general k, counted by enumerating all 4^n
    words and pruning prefixes that already break a window
    """
    _check_m(m)
    if not 1 <= k <= m:
        raise ParameterError(f"k={k} must lie in 1..{m}")
    limit = get_settings().brute_count_max_n
    if n < 0 or n > limit:
        ssa_logger.warning(f"brute_count refused for n={n}")
        raise BudgetExceededError(f"brute_count is limited to n <= {limit}, got {n}")

    prefix = bytearray()

    def prefix_ok() -> bool:
        if len(prefix) < m:
            return prefix.count(_T) <= k - 1
        window = prefix[-m:]
        return window.count(_A) >= k and window.count(_T) <= k - 1

    def extend() -> int:
        if len(prefix) == n:
            return 1
        found = 0
        for digit in range(4):
            prefix.append(digit)
            if prefix_ok():
                found += extend()
            prefix.pop()
        return found

    return extend()


def rate_convergence(m: int, n: int) -> float:
    """count(n+1, m) / count(n, m); tends to the characteristic root"""
    if n < m:
        raise ParameterError(f"rate_convergence needs n >= m, got n={n}, m={m}")
    return count(n + 1, m) / count(n, m)


def rate_at(n: int, m: int) -> float:
    if n < 1:
        raise ParameterError("n must be positive")
    return log2(count(n, m)) / n


class CompositionRow(NamedTuple):
    m: int
    n: int
    count: int
    rate: float
    lam: float


def composition_rows(m_values: range, n: int) -> List[CompositionRow]:
    """One row per window length: finite-length count and rate next to the asymptotic root"""
    rows = []
    for m in m_values:
        root = char_root(m)
        rows.append(CompositionRow(m=m, n=n, count=count(n, m), rate=rate_at(n, m), lam=root.lam))
    return rows


class CompositionCodec(BaseCodec):
    """Enumerative codec: message = rank in [0, count(n, m))"""

    def __init__(self, n: int, m: int):
        super().__init__()
        if n < 1:
            raise ParameterError("codeword length must be positive")
        _check_m(m)
        self.n = n
        self.m = m

    @property
    def name(self) -> str:
        return "composition"

    @property
    def size(self) -> int:
        return count(self.n, self.m)

    def encode(self, message: int) -> DnaSeq:
        return unrank(message, self.n, self.m)

    def decode(self, codeword: DnaSeq) -> int:
        if len(codeword) != self.n:
            raise NotACodewordError(f"expected {self.n} symbols, got {len(codeword)}")
        if not is_member(codeword, self.m, 1):
            raise NotACodewordError(
                f"{codeword} is not a composition codeword for n = {self.n}, m = {self.m}"
            )
        return rank(codeword, self.m)

    def parse_message(self, line: str) -> int:
        try:
            return int(line.strip())
        except ValueError:
            raise SequenceParseError(f"rank must be a decimal integer: {line!r}")

    def format_message(self, message: int) -> str:
        return str(message)
