import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from ssa_codes.errors import BudgetExceededError, ParameterError
from ssa_codes.models import RcPairWitness
from ssa_codes.services.ssa_oracle import (
    anti_rc_size_formula,
    capacity_upper_bound,
    count_ssa_sequences,
    empirical_rate,
    find_period2_run,
    find_rc_pair,
    find_rc_pair_indexed,
    find_rc_pair_quadratic,
    is_m_ssa,
    max_anti_rc_set,
    naive_is_m_ssa,
)
from ssa_codes.services.composition_code import count
from ssa_codes.utils.dna import DnaSeq, DnaSymbol, all_sequences, revcomp
from tests.helpers import random_dna


# ============================================
# find_rc_pair
# ============================================

@pytest.mark.parametrize("method", ["indexed", "quadratic"])
def test_find_rc_pair_examples(method):
    assert find_rc_pair(DnaSeq("ACGT"), 2, method) == RcPairWitness(p=0, q=2, length=2)
    assert find_rc_pair(DnaSeq("AACC"), 2, method) is None
    assert find_rc_pair(DnaSeq("ACG"), 2, method) is None


def test_find_rc_pair_is_lexicographically_first():
    "Smallest p first, then smallest q"
    x = DnaSeq("AATTTT")
    assert find_rc_pair(x, 1) == RcPairWitness(p=0, q=2, length=1)
    assert find_rc_pair(x, 2) == RcPairWitness(p=0, q=2, length=2)


def test_find_rc_pair_rejects_bad_length():
    with pytest.raises(ParameterError):
        find_rc_pair(DnaSeq("ACGT"), 0)
    with pytest.raises(ParameterError):
        find_rc_pair(DnaSeq("ACGT"), 2, "suffix-tree")


def test_witness_holds_in_sequence():
    x = DnaSeq("ATACCGGTAT")
    witness = find_rc_pair(x, 5)
    assert witness == RcPairWitness(p=0, q=5, length=5)
    assert witness.holds_in(x)


@pytest.mark.slow
def test_quadratic_and_indexed_agree(rng):
    "Both scanners return the identical witness"
    for _ in range(10_000):
        x = random_dna(rng, rng.randint(0, 4096))
        length = rng.randint(1, 7)
        assert find_rc_pair_quadratic(x, length) == find_rc_pair_indexed(x, length)


@given(st.text(alphabet="AC", max_size=40), st.integers(min_value=1, max_value=6))
def test_no_pair_without_complements(text, length):
    "A and C have no complement among A and C"
    assert find_rc_pair_indexed(DnaSeq(text), length) is None


# ============================================
# is_m_ssa
# ============================================

@pytest.mark.parametrize("text, m, expected", [
    ("ATACCGGTAT", 5, False),
    ("AAAA", 2, True),
    ("ACGT", 9, True),
    ("ACCGGT", 3, False),
    ("ACCGGT", 4, True),
    ("ACCGGT", 2, False),
])
def test_is_m_ssa_examples(text, m, expected):
    assert is_m_ssa(DnaSeq(text), m) is expected


@pytest.mark.slow
def test_is_m_ssa_matches_definition_exhaustively():
    "Length exactly m is enough: agrees with the all-k check on every word up to length 8"
    for n in range(0, 9):
        for x in all_sequences(n):
            for m in range(1, 5):
                assert is_m_ssa(x, m) == naive_is_m_ssa(x, m), (x, m)


@pytest.mark.slow
def test_ssa_is_monotone_in_m():
    "m-SSA implies m'-SSA for every m' > m"
    for n in range(0, 9):
        for x in all_sequences(n):
            verdicts = [is_m_ssa(x, m) for m in range(1, 6)]
            for smaller, larger in zip(verdicts, verdicts[1:]):
                assert not smaller or larger, x


@settings(max_examples=200)
@given(st.text(alphabet="ATCG", max_size=80), st.integers(1, 6), st.integers(1, 6))
def test_ssa_monotone_random(text, m, extra):
    x = DnaSeq(text)
    if is_m_ssa(x, m):
        assert is_m_ssa(x, m + extra)


# ============================================
# find_period2_run
# ============================================

@pytest.mark.parametrize("text, length, expected", [
    ("ACACAC", 4, (0, 5, DnaSymbol.A, DnaSymbol.C)),
    ("AAAAA", 4, (0, 3, DnaSymbol.A, DnaSymbol.A)),
    ("GTACACA", 4, (2, 5, DnaSymbol.A, DnaSymbol.C)),
])
def test_find_period2_run(text, length, expected):
    assert tuple(find_period2_run(DnaSeq(text), length)) == expected


def test_find_period2_run_absent():
    assert find_period2_run(DnaSeq("ACGT"), 4) is None
    assert find_period2_run(DnaSeq(""), 2) is None


def test_find_period2_run_earliest_start():
    "The earliest start wins even over a longer later run"
    run = find_period2_run(DnaSeq("GGGGTCTCTCTCTC"), 4)
    assert (run.i, run.j) == (0, 3)


def test_find_period2_run_threshold():
    with pytest.raises(ParameterError):
        find_period2_run(DnaSeq("AAAA"), 1)


@given(st.text(alphabet="ATCG", max_size=60), st.integers(2, 8))
def test_period2_run_shape(text, length):
    x = DnaSeq(text)
    run = find_period2_run(x, length)
    if run is None:
        return
    span = run.j - run.i + 1
    assert span % 2 == 0 and span >= length
    pattern = DnaSeq.from_symbols((run.a, run.b))
    assert x[run.i:run.j + 1] == pattern * (span // 2)


# ============================================
# anti-RC sets and capacity
# ============================================

@pytest.mark.parametrize("m, size", [(1, 2), (2, 6), (3, 32)])
def test_max_anti_rc_set_sizes(m, size):
    anti_rc = max_anti_rc_set(m)
    assert anti_rc.size == size
    assert anti_rc_size_formula(m) == size


@pytest.mark.parametrize("m", range(1, 7))
def test_max_anti_rc_set_invariant(m):
    anti_rc = max_anti_rc_set(m)
    members = set(anti_rc.members)
    assert all(revcomp(word) not in members for word in members)
    assert anti_rc.size == anti_rc_size_formula(m)
    assert 2 * anti_rc.size <= 4 ** m


def test_max_anti_rc_set_picks_smaller_word():
    assert max_anti_rc_set(1).members == (DnaSeq("A"), DnaSeq("C"))


def test_capacity_upper_bound_values():
    bound_2 = capacity_upper_bound(2)
    assert bound_2.trivial_bound == pytest.approx(1.5)
    assert bound_2.bound == pytest.approx(1.2925, abs=1e-4)
    assert capacity_upper_bound(3).bound == pytest.approx(5 / 3, abs=1e-4)


def test_anti_rc_budget(override_settings):
    override_settings(anti_rc_max_m=4)
    with pytest.raises(BudgetExceededError):
        max_anti_rc_set(5)


def test_ssa_census():
    assert count_ssa_sequences(1, 1) == 4
    assert count_ssa_sequences(2, 1) == 12
    assert count_ssa_sequences(3, 2) == 64


@pytest.mark.slow
def test_ssa_census_contains_composition_code():
    "Every composition codeword is m-SSA, so the census is at least the codebook size"
    assert count_ssa_sequences(8, 3) >= count(8, 3)
    assert 0 < empirical_rate(8, 3) <= 2


def test_ssa_census_budget(override_settings):
    override_settings(ssa_count_max_n=4)
    with pytest.raises(BudgetExceededError):
        count_ssa_sequences(5, 2)
