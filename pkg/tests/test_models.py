import pytest
from pydantic import ValidationError

from ssa_codes.config import get_settings
from ssa_codes.errors import (
    BudgetExceededError,
    CliErrorHandler,
    ErrorType,
    NotACodewordError,
    ParameterError,
    SequenceParseError,
    log_error_details,
)
from ssa_codes.models import (
    BlockMethod,
    BlockSet,
    CodecParams,
    CountTable,
    RcPairWitness,
    Trigger,
    TriggerKind,
)
from ssa_codes.services.composition_code import count_table
from ssa_codes.utils.dna import DnaSeq
from ssa_codes.utils.validators import content_lines, parse_dna_lines, parse_range, require_positive


# ============================================
# Models
# ============================================

def test_witness_must_not_overlap():
    with pytest.raises(ValidationError):
        RcPairWitness(p=0, q=1, length=2)


def test_witness_holds_in():
    witness = RcPairWitness(p=0, q=2, length=2)
    assert witness.holds_in(DnaSeq("ACGT"))
    assert not witness.holds_in(DnaSeq("ACAC"))


def test_codec_params_consistency():
    with pytest.raises(ValidationError):
        CodecParams(n=64, p=3, mprime=12, m_guarantee=24)
    with pytest.raises(ValidationError):
        CodecParams(n=128, p=3, mprime=11, m_guarantee=22)


def test_trigger_shapes():
    with pytest.raises(ValidationError):
        Trigger(kind=TriggerKind.RC_PAIR, i=0, j=3)
    with pytest.raises(ValidationError):
        Trigger(kind=TriggerKind.RC_PAIR, i=0, j=4, k=4)
    with pytest.raises(ValidationError):
        Trigger(kind=TriggerKind.RUN, i=0, j=2, a=0, b=1)


def test_block_set_rejects_incompatible_blocks():
    with pytest.raises(ValidationError):
        BlockSet(m=2, t=1, method=BlockMethod.EXACT, blocks=(DnaSeq("AA"), DnaSeq("TT")))


def test_count_table_checks_recurrences():
    good = count_table(2, 5)
    assert CountTable(m=2, counts=good.counts, completions=good.completions) == good

    counts = good.counts[:-1] + (good.counts[-1] + 1,)
    with pytest.raises(ValidationError):
        CountTable(m=2, counts=counts, completions=good.completions)

    first = good.completions[0]
    completions = (first[:-1] + (first[-1] + 1,),) + good.completions[1:]
    with pytest.raises(ValidationError):
        CountTable(m=2, counts=good.counts, completions=completions)


# ============================================
# Validators
# ============================================

@pytest.mark.parametrize("text, expected", [
    ("2:4", range(2, 5)),
    ("3", range(3, 4)),
    ("", range(1, 2)),
])
def test_parse_range(text, expected):
    assert parse_range(text, range(1, 2)) == expected


@pytest.mark.parametrize("text", ["4:2", "a:b", "1:x"])
def test_parse_range_rejects(text):
    with pytest.raises(ParameterError):
        parse_range(text)


def test_parse_range_requires_value_without_default():
    with pytest.raises(ParameterError):
        parse_range("")


def test_content_lines():
    assert list(content_lines(["ACGT\n", "  \n", " AA "])) == ["ACGT", "AA"]


def test_parse_dna_lines_reports_line_number():
    assert parse_dna_lines(["AC", "", "GT"]) == [DnaSeq("AC"), DnaSeq("GT")]
    with pytest.raises(SequenceParseError, match="line 3"):
        parse_dna_lines(["AC", "", "GX"])


def test_require_positive():
    assert require_positive(3, "--n") == 3
    with pytest.raises(ParameterError):
        require_positive(None, "--n")
    with pytest.raises(ParameterError):
        require_positive(0, "--n")


# ============================================
# Errors and settings
# ============================================

@pytest.mark.parametrize("error, error_type, status", [
    (NotACodewordError("x"), ErrorType.NOT_A_CODEWORD, 3),
    (BudgetExceededError("x"), ErrorType.BUDGET, 2),
    (SequenceParseError("x"), ErrorType.PARSE, 2),
    (ParameterError("x"), ErrorType.USAGE, 2),
    (FileNotFoundError("x"), ErrorType.USAGE, 2),
    (RuntimeError("x"), ErrorType.UNKNOWN, 2),
])
def test_error_classification(error, error_type, status):
    handler = CliErrorHandler()
    assert handler.classify_error(error) is error_type
    assert handler.get_exit_status(error_type) == status
    assert log_error_details(error) == status


def test_settings_from_environment(override_settings):
    override_settings(exact_search_max_m=4, default_format="rows")
    settings = get_settings()
    assert settings.exact_search_max_m == 4
    assert settings.default_format == "rows"
