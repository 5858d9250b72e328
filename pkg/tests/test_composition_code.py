from itertools import product
from math import log2

import pytest

from ssa_codes.errors import BudgetExceededError, NotACodewordError, ParameterError
from ssa_codes.services.composition_code import (
    CompositionCodec,
    brute_count,
    char_root,
    composition_rows,
    count,
    count_table,
    is_member,
    members,
    rank,
    rate_at,
    rate_convergence,
    unrank,
)
from ssa_codes.services.ssa_oracle import is_m_ssa
from ssa_codes.utils.dna import DnaSeq


def _members_by_filter(n: int, m: int):
    """Independent enumeration: every word over {A, C, G} in order, filtered"""
    words = (DnaSeq("".join(w)) for w in product("ACG", repeat=n))
    return [w for w in words if is_member(w, m, 1)]


# ============================================
# Membership and counting
# ============================================

@pytest.mark.parametrize("text, m, k, expected", [
    ("ACGACG", 3, 1, True),
    ("ACCG", 3, 1, False),
    ("CC", 3, 1, True),
    ("ACT", 3, 1, False),
    ("AATAAT", 3, 2, True),
    ("AATTAA", 3, 2, False),
    ("T", 3, 2, True),
])
def test_is_member(text, m, k, expected):
    assert is_member(DnaSeq(text), m, k) is expected


def test_is_member_rejects_bad_k():
    with pytest.raises(ParameterError):
        is_member(DnaSeq("AAA"), 3, 4)
    with pytest.raises(ParameterError):
        is_member(DnaSeq("AAA"), 3, 0)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 3), (2, 9), (3, 19), (4, 49)])
def test_count_m3(n, expected):
    assert count(n, 3) == expected


def test_count_recurrence():
    "c[n] = sum_j 2^j c[n-j-1] for n >= m"
    for m in (2, 3, 4, 5):
        for n in range(m, 40):
            assert count(n, m) == sum(2 ** j * count(n - j - 1, m) for j in range(m))


def test_count_table_views_agree():
    "f[0][n] = c[n] up to n = 512"
    table = count_table(3, 512)
    assert table.n_max >= 512
    assert all(table.completions[0][n] == table.counts[n] for n in range(513))


def test_count_is_exact_for_large_n():
    big = count(2000, 3)
    assert isinstance(big, int)
    assert big == count(1999, 3) + 2 * count(1998, 3) + 4 * count(1997, 3)


@pytest.mark.parametrize("n, m, k, expected", [
    (3, 3, 1, 19),
    (1, 2, 1, 3),
    (4, 3, 3, 1),
])
def test_brute_count_examples(n, m, k, expected):
    assert brute_count(n, m, k) == expected


@pytest.mark.parametrize("n, m, k", [(4, 3, 2), (5, 3, 2), (5, 4, 2), (4, 2, 2)])
def test_brute_count_matches_window_checker(n, m, k):
    words = (DnaSeq("".join(w)) for w in product("ATCG", repeat=n))
    assert brute_count(n, m, k) == sum(1 for w in words if is_member(w, m, k))


@pytest.mark.slow
@pytest.mark.parametrize("m", [2, 3, 4])
def test_count_matches_brute_force(m):
    for n in range(0, 13):
        assert count(n, m) == brute_count(n, m, 1), n


def test_brute_count_budget(override_settings):
    override_settings(brute_count_max_n=6)
    with pytest.raises(BudgetExceededError):
        brute_count(7, 3, 1)


# ============================================
# Enumerative codec
# ============================================

def test_rank_unrank_examples():
    assert rank(DnaSeq("AAA"), 3) == 0
    assert unrank(0, 3, 3) == DnaSeq("AAA")
    last = _members_by_filter(3, 3)[-1]
    assert rank(last, 3) == 18
    assert unrank(18, 3, 3) == last


def test_unrank_range():
    with pytest.raises(ParameterError):
        unrank(count(3, 3), 3, 3)
    with pytest.raises(ParameterError):
        unrank(-1, 3, 3)


def test_rank_rejects_non_members():
    with pytest.raises(ParameterError):
        rank(DnaSeq("CCC"), 3)
    with pytest.raises(ParameterError):
        rank(DnaSeq("ATA"), 3)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_members_match_filtered_enumeration(m):
    "unrank walks the codebook in lexicographic order"
    for n in range(0, 8):
        assert list(members(n, m)) == _members_by_filter(n, m)


@pytest.mark.slow
def test_rank_unrank_exhaustive():
    for n in range(0, 9):
        previous = None
        for idx in range(count(n, 3)):
            word = unrank(idx, n, 3)
            assert rank(word, 3) == idx
            if previous is not None:
                assert previous < word
            previous = word


@pytest.mark.slow
def test_rank_unrank_random_long(rng):
    total = count(64, 3)
    for _ in range(10_000):
        idx = rng.randrange(total)
        assert rank(unrank(idx, 64, 3), 3) == idx


@pytest.mark.slow
@pytest.mark.parametrize("m", [3, 4])
def test_members_are_m_ssa(m):
    "No T, and every window keeps an A: no window can pair with another"
    for n in range(0, 13):
        for word in members(n, m):
            assert is_m_ssa(word, m), word


def test_composition_codec_round_trip():
    codec = CompositionCodec(n=10, m=3)
    for idx in (0, 1, 17, codec.size - 1):
        assert codec.decode(codec.encode(idx)) == idx


def test_composition_codec_rejects_foreign_words():
    codec = CompositionCodec(n=4, m=3)
    with pytest.raises(NotACodewordError):
        codec.decode(DnaSeq("ACCC"))
    with pytest.raises(NotACodewordError):
        codec.decode(DnaSeq("AAA"))


# ============================================
# Rates
# ============================================

def test_char_root_m3():
    root = char_root(3)
    assert root.lam == pytest.approx(2.4675, abs=1e-3)
    assert root.rate == pytest.approx(1.3031, abs=1e-3)
    assert root.residual <= 1e-9


def test_char_root_m2_is_two():
    root = char_root(2)
    assert root.lam == pytest.approx(2.0, abs=1e-9)
    assert root.rate == pytest.approx(1.0, abs=1e-9)


def test_char_root_increases_with_m():
    roots = [char_root(m).lam for m in range(2, 9)]
    assert roots == sorted(roots)
    assert len(set(roots)) == len(roots)
    assert all(2 - 1e-9 <= lam < 3 for lam in roots)


def test_char_root_residual_stays_small_for_long_windows():
    roots = [char_root(m) for m in range(2, 31)]
    assert all(root.residual <= 1e-9 for root in roots)
    lams = [root.lam for root in roots]
    assert all(a < b < 3 for a, b in zip(lams, lams[1:]))


def test_char_root_domain():
    with pytest.raises(ParameterError):
        char_root(1)


def test_rate_convergence():
    assert rate_convergence(3, 200) == pytest.approx(char_root(3).lam, abs=1e-6)
    assert rate_convergence(2, 50) == pytest.approx(2.0, abs=1e-9)
    assert rate_convergence(3, 3) == pytest.approx(49 / 19)
    with pytest.raises(ParameterError):
        rate_convergence(3, 2)


def test_rate_at():
    assert rate_at(3, 3) == pytest.approx(log2(19) / 3)
    assert rate_at(400, 3) == pytest.approx(char_root(3).rate, abs=1e-2)


def test_composition_rows():
    rows = composition_rows(range(2, 5), 10)
    assert [row.m for row in rows] == [2, 3, 4]
    assert rows[1].count == count(10, 3)
    assert rows[1].lam == pytest.approx(2.4675, abs=1e-3)
