"""Rating maps given by letter images, and their evaluation.

A rating map assigns every regular language a value in a finite
idempotent semiring; the nice multiplicative ones used here are
determined by their letter images (empty word to the unit, words to
products, languages to sums of word values). Also builds the canonical
covering map of a transition monoid and the two auxiliary maps the
level-1 and level-3/2 fixpoints filter against.
"""

from __future__ import annotations

from typing import Iterable

from .errors import BudgetExceededError
from .lang import Alphabet, Dfa, MonoidMorphism
from .semiring import (
    AntichainSemiring,
    MultMonoid,
    PairSpace,
    PowerSemiring,
    ProductMonoid,
    Semiring,
)

DEFAULT_VALUE_BUDGET = 20000
DEFAULT_PAIR_BUDGET = 100000


class RatingMap:
    """A nice multiplicative rating map stored as its letter-image table."""

    def __init__(self, alphabet: Alphabet, semiring: Semiring, letter_image: dict):
        missing = [a for a in alphabet if a not in letter_image]
        if missing:
            raise ValueError(f"letter image missing for {missing}")
        self.alphabet = alphabet
        self.semiring = semiring
        self.letter_image = {a: letter_image[a] for a in alphabet}

    def __repr__(self) -> str:
        return f"RatingMap({self.alphabet.letters}, {self.letter_image})"


def eval_word(rho: RatingMap, word: str):
    """Image of a single word: the product of its letter images."""
    value = rho.semiring.one
    for a in word:
        value = rho.semiring.mul(value, rho.letter_image[a])
    return value


def eval_regular(rho: RatingMap, dfa: Dfa, max_pairs: int = DEFAULT_PAIR_BUDGET):
    """Sum of rho over a regular language.

    Saturates the reachable (DFA state, semiring value) pairs and adds
    up the values seen at accepting states. Idempotent addition makes
    the sum over distinct pairs equal the sum over all words. No
    antichain pruning here: the result must be the exact sum.
    """
    if dfa.alphabet != rho.alphabet:
        raise ValueError("language and rating map use different alphabets")
    semiring = rho.semiring
    start = (dfa.initial, semiring.one)
    seen = {start}
    todo = [start]
    while todo:
        state, value = todo.pop()
        row = dfa.transitions[state]
        for j, letter in enumerate(dfa.alphabet):
            nxt = (row[j], semiring.mul(value, rho.letter_image[letter]))
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_pairs:
                    raise BudgetExceededError("evaluation pair", max_pairs)
                todo.append(nxt)
    return semiring.sum(value for state, value in seen if state in dfa.accepting)


def value_automaton(rho: RatingMap, max_values: int = DEFAULT_VALUE_BUDGET):
    """Reachable word images of rho with their right-multiplication graph.

    Returns (values, transitions): values[0] is the unit, and
    transitions[i][j] is the index of values[i] * rho(letter j). A DFA
    over this graph with accepting set {i} recognizes the preimage of
    values[i] under the word-level map.
    """
    semiring = rho.semiring
    values = [semiring.one]
    index = {semiring.one: 0}
    transitions: list[tuple[int, ...]] = []
    i = 0
    while i < len(values):
        value = values[i]
        row = []
        for letter in rho.alphabet:
            nxt = semiring.mul(value, rho.letter_image[letter])
            at = index.get(nxt)
            if at is None:
                at = len(values)
                index[nxt] = at
                values.append(nxt)
                if len(values) > max_values:
                    raise BudgetExceededError("rating value", max_values)
            row.append(at)
        transitions.append(tuple(row))
        i += 1
    return values, tuple(transitions)


def image_values(rho: RatingMap, max_values: int = DEFAULT_VALUE_BUDGET) -> frozenset:
    """The set of word images rho(w), w ranging over all words."""
    values, _ = value_automaton(rho, max_values)
    return frozenset(values)


def canonical_covering_map(morphism: MonoidMorphism) -> RatingMap:
    """The covering map of a transition monoid: a maps to {alpha(a)}.

    Its language values are the image sets alpha(K) in 2^M, so a value
    meets accept set F_i exactly when K intersects the i-th language.
    """
    semiring = PowerSemiring(morphism)
    images = {a: frozenset({m}) for a, m in morphism.letter_image.items()}
    return RatingMap(morphism.alphabet, semiring, images)


def _inner_canon(inner, items: Iterable) -> frozenset:
    if isinstance(inner, AntichainSemiring):
        return inner.normal(items)
    return frozenset(items)


def aux_bpol_map(rho: RatingMap, s_values: Iterable, inner=None) -> RatingMap:
    """The auxiliary map a -> {(rho(a), S.{rho(a)}.S)} into 2^(R x 2^R).

    S is a set of semiring values. With the default exact inner
    semiring the second coordinates are literal subsets of R; passing
    an AntichainSemiring over R's multiplicative order prunes them to
    maxima, which is sound for consumers that only read the result
    through downward closure.
    """
    semiring = rho.semiring
    if inner is None:
        inner = PowerSemiring(MultMonoid(semiring))
    s_value = _inner_canon(inner, s_values)
    outer = PowerSemiring(ProductMonoid(MultMonoid(semiring), MultMonoid(inner)))
    images = {}
    for letter in rho.alphabet:
        r = rho.letter_image[letter]
        wrapped = inner.mul(inner.mul(s_value, _inner_canon(inner, [r])), s_value)
        images[letter] = frozenset({(r, wrapped)})
    return RatingMap(rho.alphabet, outer, images)


def aux_pbpol_map(
    morphism: MonoidMorphism, rho: RatingMap, s_pairs: Iterable, inner=None
) -> RatingMap:
    """The auxiliary map a -> {(rho(a), S.{(alpha(a), rho(a))}.S)}.

    S is a set of monoid-value pairs; values land in 2^(R x 2^(M x R)).
    The inner semiring is exact by default, antichain-pruned on request
    (same soundness condition as aux_bpol_map).
    """
    semiring = rho.semiring
    if inner is None:
        inner = PowerSemiring(ProductMonoid(morphism, MultMonoid(semiring)))
    s_value = _inner_canon(inner, s_pairs)
    outer = PowerSemiring(ProductMonoid(MultMonoid(semiring), MultMonoid(inner)))
    images = {}
    for letter in rho.alphabet:
        r = rho.letter_image[letter]
        marked = _inner_canon(inner, [(morphism.letter_image[letter], r)])
        wrapped = inner.mul(inner.mul(s_value, marked), s_value)
        images[letter] = frozenset({(r, wrapped)})
    return RatingMap(rho.alphabet, outer, images)


def antichain_inner_for_bpol(semiring: Semiring) -> AntichainSemiring:
    """Pruned inner semiring for aux_bpol_map values."""
    return AntichainSemiring(MultMonoid(semiring))


def antichain_inner_for_pbpol(morphism: MonoidMorphism, semiring: Semiring) -> AntichainSemiring:
    """Pruned inner semiring for aux_pbpol_map values."""
    return AntichainSemiring(PairSpace(morphism, semiring))
