"""
Sequence Replacement Codec
One redundant symbol: prepend A, replace reverse-complement pairs and period-2 runs by
fixed-width pointers until none is left, then pad back to n with (AC)*.
"""
from typing import List, Optional

from ssa_codes.errors import NotACodewordError, ParameterError
from ssa_codes.logger import ssa_logger
from ssa_codes.models import (
    NO_TRIGGER,
    CodecParams,
    EncodeReport,
    ReplacementStep,
    Trigger,
    TriggerKind,
)
from ssa_codes.services.base import BaseCodec
from ssa_codes.services.ssa_oracle import find_period2_run, find_rc_pair, is_m_ssa
from ssa_codes.utils.dna import DnaSeq, DnaSymbol, dna_rep, int_of_dna_rep, revcomp

PREPEND = DnaSeq("A")
TYPE_ONE_MARK = DnaSeq("T")
TYPE_TWO_MARK = DnaSeq("C")


def validate_params(n: int) -> CodecParams:
    """Codec parameters for codeword length n = 4^p, p >= 3"""
    if n <= 16:
        raise ParameterError(f"codeword length must exceed 16, got {n}")
    p = 0
    size = 1
    while size < n:
        size *= 4
        p += 1
    if size != n:
        raise ParameterError(f"codeword length must be a power of 4, got {n}")
    mprime = 3 * p + 2
    return CodecParams(n=n, p=p, mprime=mprime, m_guarantee=2 * mprime)


def scan_trigger(
    c: DnaSeq,
    params: Optional[CodecParams] = None,
    threshold: Optional[int] = None,
) -> Trigger:
    """
    First forbidden pattern of ``c``: a reverse-complement pair of windows
    of the threshold length, or a period-2 run at least that long.
    Whichever starts first wins; a tie goes to the pair.
    """
    if threshold is None:
        if params is None:
            raise ParameterError("scan_trigger needs params or an explicit threshold")
        threshold = params.mprime

    pair = find_rc_pair(c, threshold)
    run = find_period2_run(c, threshold) if threshold >= 2 else None

    if pair is not None and (run is None or pair.p <= run.i):
        return Trigger(
            kind=TriggerKind.RC_PAIR,
            i=pair.p,
            j=pair.p + threshold - 1,
            k=pair.q,
        )
    if run is not None:
        return Trigger(kind=TriggerKind.RUN, i=run.i, j=run.j, a=run.a, b=run.b)
    return NO_TRIGGER


def _rep(index: int, params: CodecParams) -> DnaSeq:
    assert 0 <= index < params.n, f"index {index} does not fit a width-{params.p} pointer"
    return dna_rep(index, params.p)


def type_one_pointer(trigger: Trigger, params: CodecParams) -> DnaSeq:
    """T || rep(i) || rep(j) || rep(k), 1 + 3p symbols"""
    indices = _rep(trigger.i, params) + _rep(trigger.j, params) + _rep(trigger.k, params)
    return TYPE_ONE_MARK + indices


def type_two_pointer(trigger: Trigger, params: CodecParams) -> DnaSeq:
    """C || a || b || rep(i) || rep(j), 3 + 2p symbols"""
    symbols = DnaSeq.from_symbols((trigger.a, trigger.b))
    return TYPE_TWO_MARK + symbols + _rep(trigger.i, params) + _rep(trigger.j, params)


def extension_suffix(length: int) -> DnaSeq:
    """(AC)^(length/2), with a closing A when length is odd"""
    if length < 0:
        raise ParameterError("suffix length must be non-negative")
    suffix = DnaSeq("AC") * (length // 2)
    if length % 2:
        suffix = suffix + PREPEND
    return suffix


def _replace_once(c: DnaSeq, trigger: Trigger, params: CodecParams) -> DnaSeq:
    if trigger.kind is TriggerKind.RC_PAIR:
        end = trigger.k + params.mprime
        return type_one_pointer(trigger, params) + c[:trigger.k] + c[end:]
    return type_two_pointer(trigger, params) + c[:trigger.i] + c[trigger.j + 1:]


def encode_with_report(x: DnaSeq, params: CodecParams) -> EncodeReport:
    """Encode ``x`` and keep the list of replacements that were applied"""
    if len(x) != params.message_length:
        raise ParameterError(
            f"message must have {params.message_length} symbols, got {len(x)}"
        )
    c = PREPEND + x
    if is_m_ssa(c, params.m_guarantee):
        return EncodeReport(codeword=c, steps=[], core_length=len(c), suffix_length=0)

    steps: List[ReplacementStep] = []
    for _ in range(params.n):
        trigger = scan_trigger(c, params)
        if trigger.kind is TriggerKind.NONE:
            break
        replaced = _replace_once(c, trigger, params)
        ssa_logger.debug(
            f"{trigger.kind.value} replacement i={trigger.i} j={trigger.j} "
            f"k={trigger.k}: {len(c)} -> {len(replaced)}"
        )
        steps.append(
            ReplacementStep(trigger=trigger, length_before=len(c), length_after=len(replaced))
        )
        c = replaced
    else:
        raise RuntimeError(f"replacement loop did not settle within {params.n} steps")

    core_length = len(c)
    suffix_length = params.n - core_length
    codeword = c + extension_suffix(suffix_length)
    ssa_logger.debug(
        f"encoded with {len(steps)} replacements, core {core_length}, suffix {suffix_length}"
    )
    return EncodeReport(
        codeword=codeword,
        steps=steps,
        core_length=core_length,
        suffix_length=suffix_length,
    )


def encode(x: DnaSeq, params: CodecParams) -> DnaSeq:
    """Map n-1 message symbols to an n-symbol codeword free of stems of length 6p + 4"""
    return encode_with_report(x, params).codeword


def _undo_type_one(c: DnaSeq, params: CodecParams) -> DnaSeq:
    width = params.p
    head = params.type_one_pointer_length
    if len(c) < head:
        raise NotACodewordError("truncated type-I pointer")
    i = int_of_dna_rep(c[1:1 + width])
    j = int_of_dna_rep(c[1 + width:1 + 2 * width])
    k = int_of_dna_rep(c[1 + 2 * width:head])
    rest = c[head:]
    if not i <= j < k <= len(rest) or j - i + 1 != params.mprime:
        raise NotACodewordError(f"inconsistent type-I pointer (i={i}, j={j}, k={k})")
    return rest[:k] + revcomp(rest[i:j + 1]) + rest[k:]


def _undo_type_two(c: DnaSeq, params: CodecParams) -> DnaSeq:
    width = params.p
    head = params.type_two_pointer_length
    if len(c) < head:
        raise NotACodewordError("truncated type-II pointer")
    pattern = c[1:3]
    i = int_of_dna_rep(c[3:3 + width])
    j = int_of_dna_rep(c[3 + width:head])
    rest = c[head:]
    span = j - i + 1
    if i > j or span % 2 or span < params.mprime or i > len(rest):
        raise NotACodewordError(f"inconsistent type-II pointer (i={i}, j={j})")
    return rest[:i] + pattern * (span // 2) + rest[i:]


def decode(c: DnaSeq, params: CodecParams) -> DnaSeq:
    """Unwind the pointers in reverse order, then drop the leading A"""
    if len(c) != params.n:
        raise NotACodewordError(f"codeword must have {params.n} symbols, got {len(c)}")

    for _ in range(params.n):
        first = c[0]
        if first is DnaSymbol.A:
            message = c[1:params.n]
            if len(message) != params.message_length:
                raise NotACodewordError("too few symbols left after unwinding")
            return message
        if first is DnaSymbol.T:
            c = _undo_type_one(c, params)
        elif first is DnaSymbol.C:
            c = _undo_type_two(c, params)
        else:
            raise NotACodewordError(f"no encoder phase emits a leading {first}")
    raise NotACodewordError(f"pointer chain longer than {params.n} steps")


class ReplacementCodec(BaseCodec):
    """n - 1 message symbols <-> n-symbol codewords"""

    def __init__(self, n: int):
        super().__init__()
        self.params = validate_params(n)

    @property
    def name(self) -> str:
        return "replacement"

    def encode(self, message: DnaSeq) -> DnaSeq:
        report = encode_with_report(message, self.params)
        if report.steps:
            self.log_debug(f"{len(report.steps)} replacements, suffix {report.suffix_length}")
        return report.codeword

    def decode(self, codeword: DnaSeq) -> DnaSeq:
        return decode(codeword, self.params)

    def parse_message(self, line: str) -> DnaSeq:
        message = DnaSeq(line.strip())
        if len(message) != self.params.message_length:
            raise ParameterError(
                f"message lines must have {self.params.message_length} symbols, got {len(message)}"
            )
        return message

    def format_message(self, message: DnaSeq) -> str:
        return message.text
