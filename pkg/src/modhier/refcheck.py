"""Independent brute-force checkers for the decision engines.

Everything here answers questions the engines also answer, but by a
different route: explicit separator verification with exact language
operations, a bounded search for separators shaped like unions of
marked products of length-residue languages, and a direct minimum
over the block languages (A^d)* for the basis approximation. Tests
cross-check the engines against these; verdict assembly uses the
search for best-effort witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lang import (
    Alphabet,
    Dfa,
    Regex,
    Alt,
    Empty,
    Seq,
    Star,
    Sym,
    compile_regex,
    disjoint,
    included,
    short_words,
)
from .rating import RatingMap, eval_regular


@dataclass(frozen=True)
class SeparatorCandidate:
    """A union of marked products of length-residue blocks.

    Each marker word a1...an contributes the product
    (A^d)* a1 (A^d)* ... an (A^d)*; the candidate denotes the union
    over all marker words. No marker words at all denotes the empty
    language; the empty marker word contributes (A^d)* itself.
    """

    modulus: int
    markers: tuple[str, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be at least 1")


def _any_letter(alphabet: Alphabet) -> Regex:
    expr: Regex = Sym(alphabet.letters[0])
    for letter in alphabet.letters[1:]:
        expr = Alt(expr, Sym(letter))
    return expr


def _block(alphabet: Alphabet, modulus: int) -> Regex:
    """(A^d)*: words whose length is divisible by d."""
    step: Regex = _any_letter(alphabet)
    body = step
    for _ in range(modulus - 1):
        body = Seq(body, step)
    return Star(body)


def candidate_language(
    candidate: SeparatorCandidate, alphabet: Alphabet, max_states: int = 4096
) -> Dfa:
    """Compile a candidate's denotation over the given alphabet."""
    block = _block(alphabet, candidate.modulus)
    total: Regex = Empty()
    for word in candidate.markers:
        product: Regex = block
        for letter in word:
            product = Seq(Seq(product, Sym(letter)), block)
        total = Alt(total, product)
    return compile_regex(total, alphabet, max_states=max_states)


def verify_separator(k: Dfa, l1: Dfa, l2: Dfa) -> bool:
    """Exact check that k contains l1 and avoids l2."""
    return included(l1, k) and disjoint(k, l2)


def pol_mod_separator_search(
    l1: Dfa,
    l2: Dfa,
    dmax: int,
    nmax: int,
    union_bound: int,
    max_states: int = 4096,
) -> SeparatorCandidate | None:
    """Bounded search for a marked-product separator of l1 from l2.

    Tries moduli d <= dmax; marker words are members of l1 of length
    <= nmax, combined into unions of at most union_bound products.
    Returns the first candidate (by increasing d, then union size,
    then length-lexicographic marker combination) whose denotation
    verifies, or None when the space is exhausted. A hit certifies
    separability at level 1/2; exhaustion certifies nothing.
    """
    if l1.alphabet != l2.alphabet:
        raise ValueError("separation inputs use different alphabets")
    pool = short_words(l1, nmax)
    for d in range(1, dmax + 1):
        for size in range(0, union_bound + 1):
            for markers in combinations(pool, size):
                candidate = SeparatorCandidate(d, markers)
                denoted = candidate_language(candidate, l1.alphabet, max_states)
                if verify_separator(denoted, l1, l2):
                    return candidate
    return None


def block_language(alphabet: Alphabet, modulus: int, max_states: int = 4096) -> Dfa:
    """The language (A^d)* of lengths divisible by the modulus."""
    return compile_regex(_block(alphabet, modulus), alphabet, max_states)


def mod_iopti_bound(rho: RatingMap) -> int:
    """Modulus whose block language realizes the basis approximation.

    The exponent at which the powers of the summed letter image become
    idempotent: the least multiple of the power cycle's period that
    falls inside the cycle.
    """
    semiring = rho.semiring
    s = semiring.sum(rho.letter_image[a] for a in rho.alphabet)
    powers = [None, s]
    seen = {s: 1}
    current = s
    while True:
        current = semiring.mul(current, s)
        if current in seen:
            start = seen[current]
            period = len(powers) - start
            return ((max(start, 1) + period - 1) // period) * period
        seen[current] = len(powers)
        powers.append(current)


def brute_iopti_mod(rho: RatingMap, dmax: int):
    """Basis approximation by direct minimization over block languages.

    Evaluates rho on (A^d)* for every d <= dmax and returns the unique
    order-minimal value. Every length-residue language containing the
    empty word contains a block language, so once dmax reaches
    mod_iopti_bound(rho) the minimum is the true approximation.
    """
    semiring = rho.semiring
    values = []
    for d in range(1, dmax + 1):
        block = block_language(rho.alphabet, d)
        values.append(eval_regular(rho, block))
    for value in values:
        if all(semiring.leq(value, other) for other in values):
            return value
    raise ValueError("no order-minimal block value below the given bound")
