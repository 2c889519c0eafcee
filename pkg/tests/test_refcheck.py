"""Brute-force cross-checks: separator search and direct iopti minimization."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modhier.basis import mod_iopti
from modhier.lang import (
    Alphabet,
    compile_regex,
    disjoint,
    equivalent,
    included,
    is_empty,
    parse_regex,
)
from modhier.rating import RatingMap
from modhier.refcheck import (
    SeparatorCandidate,
    block_language,
    brute_iopti_mod,
    candidate_language,
    mod_iopti_bound,
    pol_mod_separator_search,
    verify_separator,
)
from modhier.semiring import TableSemiring, power_semiring

from gen import CyclicMonoid, random_dfa, random_rating_map

A = Alphabet.of("a")
AB = Alphabet.of("ab")


def fs(*xs):
    return frozenset(xs)


def lang(text, alphabet=AB):
    return compile_regex(parse_regex(text, alphabet), alphabet)


# ---------------------------------------------------------------------------
# Candidate denotations


def test_candidate_empty_union_denotes_empty():
    assert is_empty(candidate_language(SeparatorCandidate(3, ()), AB))


def test_candidate_blank_marker_denotes_block():
    denoted = candidate_language(SeparatorCandidate(2, ("",)), A)
    assert equivalent(denoted, lang("(aa)*", A))


def test_candidate_single_marker():
    denoted = candidate_language(SeparatorCandidate(1, ("a",)), AB)
    assert equivalent(denoted, lang("(a|b)*a(a|b)*"))


def test_candidate_marker_inside_blocks():
    denoted = candidate_language(SeparatorCandidate(2, ("b",)), AB)
    assert equivalent(denoted, lang("((a|b)(a|b))*b((a|b)(a|b))*"))


def test_candidate_two_letter_marker_word():
    denoted = candidate_language(SeparatorCandidate(2, ("ab",)), AB)
    pattern = "((a|b)(a|b))*a((a|b)(a|b))*b((a|b)(a|b))*"
    assert equivalent(denoted, lang(pattern))


def test_candidate_union_of_products():
    denoted = candidate_language(SeparatorCandidate(2, ("", "a")), A)
    assert equivalent(denoted, lang("(aa)*|(aa)*a(aa)*", A))


def test_candidate_rejects_bad_modulus():
    with pytest.raises(ValueError):
        SeparatorCandidate(0, ())


def test_block_language_matches_regex():
    assert equivalent(block_language(AB, 3), lang("((a|b)(a|b)(a|b))*"))


# ---------------------------------------------------------------------------
# Separator verification and search


def test_verify_separator_accepts_true_separator():
    assert verify_separator(lang("(aa)*", A), lang("(aaaa)*", A), lang("a(aa)*", A))


def test_verify_separator_rejects_non_disjoint():
    assert not verify_separator(lang("a*", A), lang("(aa)*", A), lang("a(aa)*", A))


def test_verify_separator_rejects_non_covering():
    assert not verify_separator(lang("aa", A), lang("(aa)*", A), lang("a(aa)*", A))


def test_search_finds_parity_block():
    found = pol_mod_separator_search(
        lang("(aa)*", A), lang("a(aa)*", A), dmax=2, nmax=2, union_bound=1
    )
    assert found == SeparatorCandidate(2, ("",))


def test_search_finds_marked_letter():
    found = pol_mod_separator_search(
        lang("(a|b)*a(a|b)*"), lang("b*"), dmax=1, nmax=1, union_bound=1
    )
    assert found == SeparatorCandidate(1, ("a",))


def test_search_exhausts_on_inseparable_pair():
    found = pol_mod_separator_search(
        lang("a*"), lang("(a|b)*b(a|b)*"), dmax=4, nmax=3, union_bound=2
    )
    assert found is None


def test_search_empty_left_language_uses_empty_union():
    found = pol_mod_separator_search(lang("0"), lang("a*"), dmax=3, nmax=2, union_bound=2)
    assert found == SeparatorCandidate(1, ())


def test_search_rejects_mixed_alphabets():
    with pytest.raises(ValueError):
        pol_mod_separator_search(lang("a*", A), lang("a*"), dmax=1, nmax=1, union_bound=1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_search_results_always_verify(seed):
    rng = random.Random(seed)
    l1 = random_dfa(rng, AB)
    l2 = random_dfa(rng, AB)
    found = pol_mod_separator_search(l1, l2, dmax=2, nmax=2, union_bound=2)
    if found is not None:
        denoted = candidate_language(found, AB)
        assert included(l1, denoted)
        assert disjoint(denoted, l2)


# ---------------------------------------------------------------------------
# Direct iopti minimization


def test_block_values_for_parity():
    rho = RatingMap(A, power_semiring(CyclicMonoid(2)), {"a": fs(1)})
    from modhier.rating import eval_regular

    assert eval_regular(rho, block_language(A, 1)) == fs(0, 1)
    assert eval_regular(rho, block_language(A, 2)) == fs(0)
    assert brute_iopti_mod(rho, 2) == fs(0)


def test_brute_iopti_trivial_semiring():
    trivial = TableSemiring([[0]], [[0]], zero=0, one=0)
    rho = RatingMap(A, trivial, {"a": 0})
    assert brute_iopti_mod(rho, 1) == trivial.one


def test_brute_iopti_mod_three():
    rho = RatingMap(A, power_semiring(CyclicMonoid(3)), {"a": fs(1)})
    assert brute_iopti_mod(rho, 3) == fs(0)


def test_mod_iopti_bound_fixtures():
    parity = RatingMap(A, power_semiring(CyclicMonoid(2)), {"a": fs(1)})
    three = RatingMap(A, power_semiring(CyclicMonoid(3)), {"a": fs(1)})
    trivial = TableSemiring([[0]], [[0]], zero=0, one=0)
    flat = RatingMap(A, trivial, {"a": 0})
    assert mod_iopti_bound(parity) == 2
    assert mod_iopti_bound(three) == 3
    assert mod_iopti_bound(flat) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_brute_iopti_matches_mod_iopti(seed):
    rho = random_rating_map(random.Random(seed), AB)
    bound = mod_iopti_bound(rho)
    assert brute_iopti_mod(rho, bound) == mod_iopti(rho)
