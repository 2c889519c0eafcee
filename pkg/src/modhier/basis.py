"""Basis oracles: length-residue separation and epsilon-approximation values.

A basis oracle answers two questions about its language class: the
best value a rating map can give a class language containing the empty
word (iopti), and whether two regular languages are separable inside
the class. The length-residue class (Boolean combinations of "length
congruent to k mod m") is implemented in full; its iopti has a closed
formula and its separation reduces to arithmetic on eventually
periodic length sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import UnsupportedError
from .lang import Alphabet, Dfa
from .rating import RatingMap, value_automaton
from .semiring import omega_power


@dataclass(frozen=True)
class LengthProfile:
    """Eventually periodic description of a regular language's length set.

    Lengths below the threshold are listed explicitly; from the
    threshold on, membership depends only on the residue mod period.
    """

    threshold: int
    period: int
    initial: frozenset
    residues: frozenset

    def accepts_length(self, n: int) -> bool:
        if n < self.threshold:
            return n in self.initial
        return n % self.period in self.residues


def length_profile(dfa: Dfa) -> LengthProfile:
    """Profile the set {|w| : w accepted} via the subset sequence.

    S_n is the set of states reachable by some length-n word; the
    sequence of subsets repeats, and a length is accepted exactly when
    its subset meets the accepting states.
    """
    width = len(dfa.alphabet)
    current = frozenset({dfa.initial})
    seen = {current: 0}
    sets = [current]
    while True:
        nxt = frozenset(dfa.transitions[q][j] for q in current for j in range(width))
        if nxt in seen:
            threshold = seen[nxt]
            period = len(sets) - threshold
            break
        seen[nxt] = len(sets)
        sets.append(nxt)
        current = nxt
    accepted = [bool(s & dfa.accepting) for s in sets]
    initial = frozenset(n for n in range(threshold) if accepted[n])
    residues = frozenset(n % period for n in range(threshold, threshold + period) if accepted[n])
    return LengthProfile(threshold, period, initial, residues)


@dataclass(frozen=True)
class SeparationAnswer:
    """Separation verdict with the witness modulus when one exists."""

    separable: bool
    modulus: int | None = None

    def __bool__(self) -> bool:
        return self.separable


def mod_separable(l1: Dfa, l2: Dfa) -> SeparationAnswer:
    """Can a union of length-residue classes contain l1 and avoid l2?

    Such a separator sees only lengths, so the answer depends on the
    two length sets alone. Normalized to a common threshold t and
    period p, separation holds exactly when the tail residues are
    disjoint, no length below t is in both sets, and no length below t
    in one set is congruent mod p to a tail residue of the other; the
    classes of l1's lengths mod the smallest positive multiple of p
    that is >= t then form a separator, and of no smaller structure.
    """
    if l1.alphabet != l2.alphabet:
        raise ValueError("separation inputs use different alphabets")
    first, second = length_profile(l1), length_profile(l2)
    t = max(first.threshold, second.threshold)
    p = lcm(first.period, second.period)
    init1 = frozenset(n for n in range(t) if first.accepts_length(n))
    init2 = frozenset(n for n in range(t) if second.accepts_length(n))
    res1 = frozenset(n % p for n in range(t, t + p) if first.accepts_length(n))
    res2 = frozenset(n % p for n in range(t, t + p) if second.accepts_length(n))
    if res1 & res2:
        return SeparationAnswer(False)
    if init1 & init2:
        return SeparationAnswer(False)
    if any(n % p in res2 for n in init1) or any(n % p in res1 for n in init2):
        return SeparationAnswer(False)
    return SeparationAnswer(True, p * max(1, -(-t // p)))


def mod_iopti(rho: RatingMap):
    """Best value of a length-residue language containing the empty word.

    Closed formula: omega-power of the summed letter images, plus the
    unit. The omega-power term is the image of (A^d)* for a suitable d,
    and adding the unit keeps the empty word's contribution explicit.
    """
    semiring = rho.semiring
    total = semiring.sum(rho.letter_image[a] for a in rho.alphabet)
    return semiring.add(omega_power(semiring, total), semiring.one)


def _epsilon_language(alphabet: Alphabet) -> Dfa:
    width = len(alphabet)
    return Dfa(alphabet, ((1,) * width, (1,) * width), 0, frozenset({0}))


def generic_iopti(rho: RatingMap, separates, max_values: int = 20000):
    """Oracle-backed iopti: sum the values inseparable from the empty word.

    Sums every reachable word image r whose preimage language is not
    separable from {empty word} by the basis; unreachable values have
    empty preimages and never contribute. Agrees with any closed
    formula for the same basis.
    """
    values, transitions = value_automaton(rho, max_values)
    eps = _epsilon_language(rho.alphabet)
    semiring = rho.semiring
    total = semiring.zero
    for i, value in enumerate(values):
        preimage = Dfa(rho.alphabet, transitions, 0, frozenset({i}))
        if not separates(eps, preimage):
            total = semiring.add(total, value)
    return total


class BasisOracle:
    """Behavioral contract shared by every basis."""

    name = "abstract"

    def iopti(self, rho: RatingMap):
        raise NotImplementedError

    def separates(self, l1: Dfa, l2: Dfa) -> SeparationAnswer:
        raise NotImplementedError


class ModOracle(BasisOracle):
    """Length-residue basis: closed-formula iopti, arithmetic separation."""

    name = "mod"

    def iopti(self, rho: RatingMap):
        return mod_iopti(rho)

    def separates(self, l1: Dfa, l2: Dfa) -> SeparationAnswer:
        return mod_separable(l1, l2)


RESERVED_BASES = ("gr", "amod")


def mod_cover_oracle() -> BasisOracle:
    return ModOracle()


def oracle_for(name: str) -> BasisOracle:
    if name == "mod":
        return ModOracle()
    if name in RESERVED_BASES:
        raise UnsupportedError(f"basis {name!r} is reserved but not implemented")
    raise UnsupportedError(f"unknown basis {name!r}")
