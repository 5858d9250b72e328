"""
CLI Commands
Verification, codec pipelines, tables and codebook search behind the ``ssa-codes`` sub-commands
"""
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Union

from ssa_codes.config import get_settings
from ssa_codes.errors import BudgetExceededError, ParameterError
from ssa_codes.logger import ssa_logger
from ssa_codes.models import RcPairWitness
from ssa_codes.services.base import BaseCodec
from ssa_codes.services.block_code import (
    BlockCodec,
    benerjee_set,
    block_code_rate,
    build_block_set,
    parse_block_set,
)
from ssa_codes.services.composition_code import CompositionCodec, char_root, count, rate_at
from ssa_codes.services.replacement_codec import ReplacementCodec, encode_with_report
from ssa_codes.services.ssa_oracle import capacity_upper_bound, find_rc_pair
from ssa_codes.utils.dna import DnaSeq
from ssa_codes.utils.validators import content_lines, parse_dna_lines, require_positive
from ssa_codes.cli.payload import chunk_ranks, frame_bytes, join_ranks, unframe_bytes

SCHEMES = ("replacement", "composition", "block")

# Exit statuses that are not errors
EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1


# ============================================
# check
# ============================================

class CheckResult(NamedTuple):
    status: int
    witness: Optional[RcPairWitness]


def run_check(seq: DnaSeq, m: int, emit_witness: bool = False) -> CheckResult:
    """Status 0 if ``seq`` is m-SSA, 1 otherwise; the witness is kept on request"""
    require_positive(m, "--m")
    witness = find_rc_pair(seq, m) if 2 * m <= len(seq) else None
    if witness is None:
        return CheckResult(EXIT_OK, None)
    return CheckResult(EXIT_PROPERTY_FAILED, witness if emit_witness else None)


def format_check(result: CheckResult, fmt: str) -> str:
    holds = result.status == EXIT_OK
    w = result.witness
    if fmt == "rows":
        line = f"m_ssa={'true' if holds else 'false'}"
        if w is not None:
            line += f" p={w.p} q={w.q} length={w.length}"
        return line
    line = "m-SSA" if holds else "not m-SSA"
    if w is not None:
        line += f"  p={w.p} q={w.q} length={w.length}"
    return line


# ============================================
# encode / decode
# ============================================

def build_codec(
    scheme: str,
    n: Optional[int] = None,
    m: Optional[int] = None,
    set_file: Optional[str] = None,
) -> BaseCodec:
    """Instantiate the codec selected by ``--scheme``"""
    if scheme == "replacement":
        return ReplacementCodec(require_positive(n, "--n"))
    if scheme == "composition":
        return CompositionCodec(require_positive(n, "--n"), require_positive(m, "--m"))
    if scheme == "block":
        if set_file:
            return BlockCodec(parse_block_set(Path(set_file).read_text(encoding="utf-8")))
        return BlockCodec(benerjee_set())
    raise ParameterError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")


def _encode_lines(codec: BaseCodec, messages: Sequence[Any], trace: bool) -> List[str]:
    codewords = []
    for number, message in enumerate(messages, start=1):
        if trace and isinstance(codec, ReplacementCodec):
            report = encode_with_report(message, codec.params)
            for step in report.steps:
                t = step.trigger
                ssa_logger.info(
                    f"[trace] message {number}: {t.kind.value} i={t.i} j={t.j} k={t.k} "
                    f"length {step.length_before} -> {step.length_after}"
                )
            ssa_logger.info(
                f"[trace] message {number}: core {report.core_length}, "
                f"suffix {report.suffix_length}"
            )
            codewords.append(report.codeword.text)
        else:
            codewords.append(codec.encode(message).text)
    return codewords


def _byte_messages(codec: BaseCodec, data: bytes) -> List[Any]:
    if isinstance(codec, ReplacementCodec):
        return frame_bytes(data, codec.params.message_length)
    if isinstance(codec, CompositionCodec):
        return chunk_ranks(data, codec.size)
    raise ParameterError("--bytes is supported for the replacement and composition schemes")


def _join_byte_messages(codec: BaseCodec, messages: List[Any]) -> bytes:
    if isinstance(codec, ReplacementCodec):
        return b"".join(unframe_bytes(message) for message in messages)
    if isinstance(codec, CompositionCodec):
        return join_ranks(messages, codec.size)
    raise ParameterError("--bytes is supported for the replacement and composition schemes")


def run_codec(
    mode: str,
    codec: BaseCodec,
    payload: Union[str, bytes],
    as_bytes: bool = False,
    trace: bool = False,
) -> Union[str, bytes]:
    """
    Run one encode or decode pass over a whole payload

    Args:
        mode: "encode" or "decode"
        codec: codec built by :func:`build_codec`
        payload: message text (one message per line), raw bytes with
            ``as_bytes`` on encode, or codeword text on decode
        as_bytes: frame raw bytes instead of text messages
        trace: log every replacement step (replacement scheme only)

    Returns:
        codeword text for encode; message text, or bytes with ``as_bytes``, for decode
    """
    if mode == "encode":
        if as_bytes:
            data = payload if isinstance(payload, bytes) else payload.encode("utf-8")
            messages = _byte_messages(codec, data)
        else:
            text = payload.decode("utf-8") if isinstance(payload, bytes) else payload
            messages = [codec.parse_message(line) for line in content_lines(text.splitlines())]
        codewords = _encode_lines(codec, messages, trace)
        codec.log_debug(f"encoded {len(codewords)} messages")
        return "".join(f"{word}\n" for word in codewords)

    if mode == "decode":
        text = payload.decode("utf-8") if isinstance(payload, bytes) else payload
        decoded = [codec.decode(word) for word in parse_dna_lines(text.splitlines())]
        codec.log_debug(f"decoded {len(decoded)} codewords")
        if as_bytes:
            return _join_byte_messages(codec, decoded)
        return "".join(f"{codec.format_message(message)}\n" for message in decoded)

    raise ParameterError(f"unknown codec mode {mode!r}")


# ============================================
# tables
# ============================================

class Table(NamedTuple):
    columns: List[str]
    rows: List[Dict[str, Any]]


def rate_rows(m: int) -> List[Dict[str, Any]]:
    """Every rate known for window length ``m``, next to the anti-RC capacity bound"""
    settings = get_settings()
    if m > settings.anti_rc_max_m:
        raise BudgetExceededError(f"rate rows need m <= {settings.anti_rc_max_m}, got {m}")
    bound = capacity_upper_bound(m)
    rows = []
    if m >= 2:
        root = char_root(m)
        rows.append({"scheme": "composition", "m": m, "size_or_lambda": root.lam,
                     "rate": root.rate, "bound": bound.bound})
    if m <= settings.exact_search_max_m:
        block_set = build_block_set(m, "exact")
        rows.append({"scheme": "block-exact", "m": m, "size_or_lambda": block_set.size,
                     "rate": block_code_rate(block_set), "bound": bound.bound})
    if m == 2:
        # two-symbol blocks whose concatenations are 3-SSA
        fixed = benerjee_set()
        rows.append({"scheme": "benerjee", "m": m, "size_or_lambda": fixed.size,
                     "rate": block_code_rate(fixed), "bound": capacity_upper_bound(3).bound})
    rows.append({"scheme": "trivial", "m": m, "size_or_lambda": 4 ** m // 2,
                 "rate": bound.trivial_bound, "bound": bound.bound})
    return rows


def run_table(kind: str, m_range: range, n_range: range) -> Table:
    """Rates per window length, or exact codebook counts per (m, n)"""
    if kind == "rates":
        rows = []
        for m in m_range:
            require_positive(m, "--m-range")
            rows.extend(rate_rows(m))
        return Table(["scheme", "m", "size_or_lambda", "rate", "bound"], rows)

    if kind == "counts":
        limit = get_settings().table_max_n
        if n_range.stop - 1 > limit:
            raise BudgetExceededError(f"counts tables are limited to n <= {limit}")
        rows = []
        for m in m_range:
            require_positive(m, "--m-range")
            for n in n_range:
                require_positive(n, "--n-range")
                rows.append({"m": m, "n": n, "count": count(n, m), "rate": rate_at(n, m)})
        return Table(["m", "n", "count", "rate"], rows)

    raise ParameterError(f"unknown table {kind!r}; expected rates or counts")


# log2(5)/2 = 1.160964... must print as 1.1609.., never 1.1610
FLOAT_DIGITS = 6


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.{FLOAT_DIGITS}f}"
    return str(value)


def format_table(table: Table, fmt: str) -> str:
    """Aligned text with a header line, or one ``key=value`` row per line"""
    cells = [[_cell(row[c]) for c in table.columns] for row in table.rows]
    if fmt == "rows":
        return "".join(
            " ".join(f"{c}={v}" for c, v in zip(table.columns, line)) + "\n" for line in cells
        )
    widths = [max([len(c)] + [len(line[i]) for line in cells]) for i, c in enumerate(table.columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(table.columns, widths)).rstrip()]
    for line in cells:
        lines.append("  ".join(v.rjust(w) for v, w in zip(line, widths)).rstrip())
    return "\n".join(lines) + "\n"


def format_fields(fields: Dict[str, Any], fmt: str) -> str:
    """Single-record output used by count, rate and unrank"""
    if fmt == "rows":
        return " ".join(f"{k}={_cell(v)}" for k, v in fields.items()) + "\n"
    return "".join(f"{k}: {_cell(v)}\n" for k, v in fields.items())
