from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from residuum.congrua import (
    Coverage,
    SMALL_CASE_TABLES,
    ap_to_unit_triple,
    congruum_triple,
    construct_mod20,
    construct_mod24,
    coverage_status,
    sweep_congrua,
)
from residuum.errors import (
    BadParameters,
    BadPrimeForm,
    DividesTerm,
    FiveExcluded,
    NonResidueDifference,
    NotCovered,
)
from residuum.fp import FieldElement, legendre, make_context, primes_up_to
from residuum.residue import consecutive_triples, triple_from_member


def test_congruum_examples():
    assert congruum_triple(2, 1) == congruum_triple(2, 1)
    p21 = congruum_triple(2, 1)
    assert (p21.x, p21.y, p21.z, p21.d) == (7, 5, 1, 24)
    p54 = congruum_triple(5, 4)
    assert (p54.x, p54.y, p54.z, p54.d) == (49, 41, 31, 720)
    p32 = congruum_triple(3, 2)
    assert (p32.x, p32.y, p32.z, p32.d) == (17, 13, 7, 120)
    assert 289 - 169 == 169 - 49 == 120


def test_congruum_bad_parameters():
    with pytest.raises(BadParameters):
        congruum_triple(1, 1)
    with pytest.raises(BadParameters):
        congruum_triple(3, 0)
    with pytest.raises(BadParameters):
        congruum_triple(2, 5)


def test_congruum_primitive_flag():
    assert congruum_triple(2, 1).primitive
    assert not congruum_triple(4, 2).primitive  # shared factor
    assert not congruum_triple(3, 1).primitive  # same parity


@settings(max_examples=400, deadline=None)
@given(m=st.integers(2, 20), n=st.integers(1, 19))
def test_congruum_progression_exact(m, n):
    if n >= m:
        return
    prog = congruum_triple(m, n)
    assert prog.x ** 2 - prog.y ** 2 == prog.d
    assert prog.y ** 2 - prog.z ** 2 == prog.d
    assert prog.x > prog.y > prog.z >= 1


def test_ap_to_unit_triple_f61():
    t = ap_to_unit_triple(congruum_triple(5, 4), make_context(61))
    assert t.squares() == (49, 48, 47)


def test_ap_to_unit_triple_f97():
    ctx = make_context(97)
    t = ap_to_unit_triple(congruum_triple(2, 1), ctx)
    assert t.alpha * t.alpha - t.beta * t.beta == 1
    assert t.beta * t.beta - t.gamma * t.gamma == 1
    assert t.squares()[2] in {n.value for n in consecutive_triples(ctx)}


def test_ap_to_unit_triple_f13_rejects():
    ctx = make_context(13)
    # 13 divides none of 49, 41, 31; 720 = 5 (mod 13) and Euler says non-residue
    assert (49 * 41 * 31) % 13 != 0
    assert legendre(FieldElement(720, ctx)) == -1
    with pytest.raises(NonResidueDifference):
        ap_to_unit_triple(congruum_triple(5, 4), ctx)


def test_ap_to_unit_triple_divides_term():
    with pytest.raises(DividesTerm):
        ap_to_unit_triple(congruum_triple(5, 4), make_context(41))


def test_ap_to_unit_triple_needs_1_mod_4():
    with pytest.raises(BadPrimeForm):
        ap_to_unit_triple(congruum_triple(2, 1), make_context(7))


def test_construct_mod20():
    assert construct_mod20(make_context(61)).squares() == (49, 48, 47)
    t29 = construct_mod20(make_context(29))
    assert t29 == triple_from_member(make_context(29), 4)
    with pytest.raises(NotCovered):
        construct_mod20(make_context(37))  # 37 = 17 (mod 20)


def test_construct_mod20_41_from_table():
    t = construct_mod20(make_context(41))
    assert t.squares()[2] == 8


def test_construct_mod24():
    ctx73 = make_context(73)
    t = construct_mod24(ctx73)
    assert t.alpha * t.alpha - t.beta * t.beta == 1
    with pytest.raises(FiveExcluded):
        construct_mod24(make_context(5))
    # 29 = 5 (mod 24): confirm 24 is a residue first, then construct
    ctx29 = make_context(29)
    assert legendre(FieldElement(24, ctx29)) == 1
    t29 = construct_mod24(ctx29)
    assert t29.squares()[2] in {n.value for n in consecutive_triples(ctx29)}
    with pytest.raises(NotCovered):
        construct_mod24(make_context(13))  # 13 (mod 24)


def test_five_excluded_is_a_not_covered():
    assert issubclass(FiveExcluded, NotCovered)


def test_difference_residue_matches_reduced_form():
    # 720 = 5 * 12^2, so its character equals that of 5 wherever p > 3
    for p in primes_up_to(500):
        if p <= 5:
            continue
        ctx = make_context(p)
        assert legendre(FieldElement(720, ctx)) == legendre(FieldElement(5, ctx))


def test_five_is_residue_iff_pm1_mod_10():
    for p in primes_up_to(1000):
        if p < 7:
            continue
        ctx = make_context(p)
        assert (legendre(FieldElement(5, ctx)) == 1) == (p % 10 in (1, 9))


def test_coverage_examples():
    assert coverage_status(113).status is Coverage.UNCOVERED_BUT_NONEMPTY
    assert coverage_status(13).status is Coverage.EXCLUDED_5_13_17
    assert coverage_status(61).status is Coverage.COVERED_MOD20
    assert coverage_status(29).status is Coverage.COVERED_BOTH
    assert coverage_status(41).status is Coverage.COVERED_MOD20
    assert coverage_status(37).status is Coverage.SMALL_CASE_TABLE
    assert coverage_status(73).status is Coverage.COVERED_MOD24
    with pytest.raises(BadPrimeForm):
        coverage_status(7)


def test_coverage_statuses_partition():
    for p in primes_up_to(500):
        if p % 4 != 1:
            continue
        status = coverage_status(p).status
        if p in (5, 13, 17):
            assert status is Coverage.EXCLUDED_5_13_17
        elif p % 20 in (1, 9) and p % 24 in (1, 5):
            assert status is Coverage.COVERED_BOTH
        elif p % 20 in (1, 9):
            assert status is Coverage.COVERED_MOD20
        elif p % 24 in (1, 5):
            assert status is Coverage.COVERED_MOD24
        elif p in SMALL_CASE_TABLES:
            assert status is Coverage.SMALL_CASE_TABLE
        else:
            assert status is Coverage.UNCOVERED_BUT_NONEMPTY


def test_small_case_tables_are_true_run_sets():
    for p, members in SMALL_CASE_TABLES.items():
        ctx = make_context(p)
        assert tuple(n.value for n in consecutive_triples(ctx)) == members


def test_constructions_cover_what_they_claim():
    for p in primes_up_to(500):
        if p % 4 != 1:
            continue
        ctx = make_context(p)
        runs = {n.value for n in consecutive_triples(ctx)}
        if p % 20 in (1, 9):
            assert construct_mod20(ctx).squares()[2] in runs
        if p % 24 in (1, 5) and p != 5:
            assert construct_mod24(ctx).squares()[2] in runs


def test_uncovered_list_matches_expected():
    uncovered = [
        p
        for p in primes_up_to(499)
        if p % 4 == 1
        and p > 17
        and coverage_status(p).status is Coverage.UNCOVERED_BUT_NONEMPTY
    ]
    assert uncovered == [113, 137, 157, 233, 257, 277, 353, 373, 397]


def test_sweep_congrua_finds_candidates_for_uncovered_prime():
    ctx = make_context(113)
    found = sweep_congrua(ctx)
    assert found, "some small progression should map into F_113"
    runs = {n.value for n in consecutive_triples(ctx)}
    for m, n, t in found:
        assert gcd(m, n) == 1 and (m - n) % 2 == 1
        assert t.squares()[2] in runs
