"""Regex parsing, DFA compilation, regular ops, transition monoids."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modhier.errors import BudgetExceededError, RegexSyntaxError
from modhier.lang import (
    Alphabet,
    Alt,
    Empty,
    Eps,
    Not,
    Plus,
    Seq,
    Star,
    Sym,
    compile_regex,
    complement,
    disjoint,
    equivalent,
    included,
    intersect,
    is_empty,
    minimize,
    parse_regex,
    short_words,
    transition_monoid,
    union,
)

A1 = Alphabet.of("a")
A2 = Alphabet.of("ab")


def lang(text, alphabet=A2):
    return compile_regex(parse_regex(text, alphabet), alphabet)


# -- parsing ----------------------------------------------------------------


def test_parse_concat_star():
    assert parse_regex("a(ab)*", A2) == Seq(Sym("a"), Star(Seq(Sym("a"), Sym("b"))))


def test_parse_complement_of_empty():
    assert parse_regex("~0", A1) == Not(Empty())


def test_parse_precedence():
    # union lowest, complement binds the following item with its postfix
    assert parse_regex("a|b a", A2) == Alt(Sym("a"), Seq(Sym("b"), Sym("a")))
    assert parse_regex("~a*", A1) == Not(Star(Sym("a")))
    assert parse_regex("~ab", A2) == Seq(Not(Sym("a")), Sym("b"))
    assert parse_regex("a+", A1) == Plus(Sym("a"))
    assert parse_regex("e|a", A1) == Alt(Eps(), Sym("a"))


def test_parse_errors():
    with pytest.raises(RegexSyntaxError):
        parse_regex("a(", A2)
    with pytest.raises(RegexSyntaxError):
        parse_regex("a)", A2)
    with pytest.raises(RegexSyntaxError):
        parse_regex("", A2)
    with pytest.raises(RegexSyntaxError):
        parse_regex("a|", A2)
    with pytest.raises(RegexSyntaxError):
        parse_regex("c", A2)  # letter outside alphabet


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet.of("")
    with pytest.raises(ValueError):
        Alphabet.of("aa")
    with pytest.raises(ValueError):
        Alphabet.of("ae")  # e is grammar syntax
    with pytest.raises(ValueError):
        Alphabet.of("aB")


# -- compilation ------------------------------------------------------------


def test_compile_even_length_unary():
    d = lang("(aa)*", A1)
    assert d.num_states == 2
    assert d.initial == 0
    assert d.accepting == frozenset({0})
    assert d.transitions == ((1,), (0,))


def test_compile_empty_language():
    d = lang("0", A1)
    assert d.num_states == 1
    assert d.accepting == frozenset()


def test_compile_single_letter_choice():
    d = lang("a|b")
    # canonical minimal form: initial, accept, sink
    assert d.num_states == 3
    assert d.accepting == frozenset({1})
    assert d.transitions == ((1, 1), (2, 2), (2, 2))


def test_compile_membership_samples():
    d = lang("a(ab)*")
    assert d.accepts("a")
    assert d.accepts("aab")
    assert d.accepts("aabab")
    assert not d.accepts("")
    assert not d.accepts("ab")
    assert not d.accepts("aaba")


def test_compile_plus_vs_star():
    star = lang("(ab)*")
    plus = lang("(ab)+")
    assert star.accepts("")
    assert not plus.accepts("")
    assert plus.accepts("ab") and plus.accepts("abab")
    assert equivalent(plus, lang("ab(ab)*"))


def test_compile_boolean_ops():
    assert equivalent(lang("~0"), lang("(a|b)*"))
    assert equivalent(lang("~(~a)"), lang("a"))
    assert equivalent(lang("a* & ~e"), lang("a+", A2))
    assert equivalent(lang("~((a|b)*b(a|b)*)"), lang("a*"))


def test_compile_budget():
    with pytest.raises(BudgetExceededError):
        compile_regex(parse_regex("(a|b)(a|b)(a|b)(a|b)(a|b)", A2), A2, max_states=4)


def test_minimize_idempotent_and_canonical():
    for text in ["(ab)*", "a(ab)*", "~(a*)", "(a|b)*b(a|b)*"]:
        d = lang(text)
        assert minimize(d) == d
    # equal languages compile to structurally equal DFAs
    assert lang("a+") == lang("aa*")
    assert lang("~0") == lang("(a|b)*")


# -- regular ops ------------------------------------------------------------


def test_regular_ops_examples():
    even, odd = lang("(aa)*", A1), lang("a(aa)*", A1)
    assert disjoint(even, odd)
    assert included(lang("a*"), lang("~((a|b)*b(a|b)*)"))
    assert is_empty(intersect(lang("a*"), lang("(a|b)*b(a|b)*")))
    assert not disjoint(lang("a*"), lang("a|b"))
    assert equivalent(union(even, odd), lang("a*", A1))
    assert is_empty(intersect(even, complement(even), max_states=64))


def test_short_words():
    assert short_words(lang("(ab)*"), 4) == ["", "ab", "abab"]
    assert short_words(lang("a|b"), 2) == ["a", "b"]
    assert short_words(lang("0", A1), 3) == []


# -- transition monoids -----------------------------------------------------


def test_monoid_of_even_unary():
    m = transition_monoid([lang("(aa)*", A1)])
    assert m.size == 2
    assert m.mult(1, 1) == 0
    assert m.accept_sets == (frozenset({0}),)
    assert m.word_for == ("", "a")


def test_monoid_of_full_language():
    m = transition_monoid([lang("~0", A1)])
    assert m.size == 1
    assert m.accept_sets == (frozenset({0}),)


def test_monoid_of_ab_star():
    # hand closure: 1, a, b, aa (the zero), ab, ba
    m = transition_monoid([lang("(ab)*")])
    assert m.size == 6
    assert m.word_for == ("", "a", "b", "aa", "ab", "ba")
    assert m.accept_sets == (frozenset({0, 4}),)
    zero = 3
    assert all(m.mult(zero, i) == zero and m.mult(i, zero) == zero for i in m.elements())
    ab, ba = 4, 5
    assert m.mult(ab, ab) == ab
    assert m.mult(ab, 1) == 1  # (ab)a collapses to a
    assert m.mult(ba, 2) == 2


def test_monoid_two_languages():
    m = transition_monoid([lang("a*"), lang("(a|b)*b(a|b)*")])
    assert len(m.accept_sets) == 2
    assert m.image_of_word("aa") in m.accept_sets[0]
    assert m.image_of_word("aba") in m.accept_sets[1]
    assert m.image_of_word("aba") not in m.accept_sets[0]
    m.validate()


def test_monoid_budget():
    with pytest.raises(BudgetExceededError):
        transition_monoid([lang("(ab)*")], max_elements=3)


@settings(max_examples=1000, deadline=None)
@given(st.text(alphabet="ab", max_size=12))
def test_morphism_agrees_with_dfas(word):
    dfas = [lang("a(ab)*"), lang("(a|b)*b"), lang("~((a|b)*aa(a|b)*)")]
    m = transition_monoid(dfas)
    image = m.image_of_word(word)
    for dfa, accept in zip(dfas, m.accept_sets):
        assert dfa.accepts(word) == (image in accept)


def test_monoid_laws_exhaustive():
    for texts in [["(ab)*"], ["a(ab)*", "(a|b)*b"], ["(a|b)*aa(a|b)*"]]:
        m = transition_monoid([lang(t) for t in texts])
        assert m.size <= 200
        m.validate(assoc_limit=200)


def test_monoid_size_sanity_bound():
    dfas = [lang("a(ab)*"), lang("(a|b)*b")]
    m = transition_monoid(dfas)
    product_states = dfas[0].num_states * dfas[1].num_states
    assert m.size <= product_states**product_states
