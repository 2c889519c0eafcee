"""Verdicts for separation, covering, and membership queries.

The three public operations reduce to each other: membership of L is
separability of L from its complement, and separability of L1 from L2
above level zero is coverability of L1 against the single constraint
L2. Coverability itself is read off the imprints computed by the
fixpoint engines: a query is not coverable exactly when the imprint
contains an obstruction meeting the accepting sets of every input
language at once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .basis import BasisOracle
from .engines import (
    bpol_iopti,
    bpol_opti,
    pbpol_iopti,
    pbpol_pointed_imprint,
    pol_imprint,
)
from .errors import UnsupportedError
from .lang import DEFAULT_MONOID_BUDGET, Dfa, complement, transition_monoid
from .rating import canonical_covering_map
from .refcheck import pol_mod_separator_search
from .semiring import DEFAULT_ANTICHAIN_BUDGET

LEVELS = ("0", "1/2", "1", "3/2")
COVER_LEVELS = ("1/2", "1", "3/2")

# Bounds for the best-effort separator search attached to positive
# level-1/2 verdicts. Deliberately small: the witness is optional and
# exhaustion is not reported.
SEARCH_DMAX = 4
SEARCH_NMAX = 2
SEARCH_UNION_BOUND = 2


@dataclass(frozen=True)
class Verdict:
    """Outcome of one query.

    `witness`, when present, is independently checkable: a modulus for
    level-zero separation, a blocking imprint element for negative
    covering answers, or an explicit separator candidate for positive
    level-1/2 answers when the bounded search finds one.
    """

    kind: str
    level: str
    answer: bool
    witness: Optional[dict] = None
    stats: Optional[dict] = None


def _check_level(level: str) -> None:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; expected one of {', '.join(LEVELS)}")


def _pointed_blocking(maximal, accept_sets):
    """Least pointed element whose value meets every constraint set.

    A pointed pair (s, t) with s accepted by the target and t meeting
    the accepting set of every constraint witnesses an uncoverable
    query. It suffices to scan maximal elements: the pair ordering
    fixes s and grows t, and the blocking condition survives growth.
    """
    target = accept_sets[0]
    rest = accept_sets[1:]
    for s, t in sorted(maximal, key=lambda pair: (pair[0], tuple(sorted(pair[1])))):
        if s in target and all(t & f for f in rest):
            return s, t
    return None


def _plain_blocking(maximal, accept_sets):
    """Same obstruction scan for unpointed imprints at level one."""
    target = accept_sets[0]
    rest = accept_sets[1:]
    for t in sorted(maximal, key=lambda value: tuple(sorted(value))):
        if t & target and all(t & f for f in rest):
            return t
    return None


def coverable(
    level: str,
    target: Dfa,
    constraints: list[Dfa],
    oracle: BasisOracle,
    max_monoid: int = DEFAULT_MONOID_BUDGET,
    max_antichain: int = DEFAULT_ANTICHAIN_BUDGET,
    want_witness: bool = False,
) -> Verdict:
    """Decide whether some partition of A* separates the target from
    each constraint, with pieces taken at the given level.

    The target is coverable iff no imprint element is accepted by it
    while meeting every constraint; the negative witness is that
    element. Covering below level 1/2 is not defined for this basis.
    """
    _check_level(level)
    if level not in COVER_LEVELS:
        raise UnsupportedError(f"covering is not supported at level {level}")
    if not constraints:
        raise ValueError("covering needs at least one constraint language")
    if any(c.alphabet != target.alphabet for c in constraints):
        raise ValueError("covering inputs use different alphabets")

    started = time.perf_counter()
    morphism = transition_monoid([target] + list(constraints), max_elements=max_monoid)
    rho = canonical_covering_map(morphism)
    witness = None

    if level == "1":
        iopti = bpol_iopti(rho, oracle, max_antichain=max_antichain)
        opti = bpol_opti(rho, iopti, max_antichain=max_antichain)
        blocking = _plain_blocking(opti.maximal, morphism.accept_sets)
        answer = blocking is None
        iterations = iopti.passes + opti.passes
        antichain = len(opti.maximal)
        if want_witness and blocking is not None:
            witness = {"blocking": {"image": sorted(blocking)}}
    else:
        if level == "1/2":
            imprint = pol_imprint(morphism, rho, oracle, max_antichain=max_antichain)
            iterations = imprint.passes
        else:
            iopti = pbpol_iopti(morphism, rho, oracle, max_antichain=max_antichain)
            imprint = pbpol_pointed_imprint(morphism, rho, iopti, max_antichain=max_antichain)
            iterations = iopti.passes + imprint.passes
        blocking = _pointed_blocking(imprint.maximal, morphism.accept_sets)
        answer = blocking is None
        antichain = len(imprint.maximal)
        if want_witness and blocking is not None:
            s, t = blocking
            witness = {
                "blocking": {
                    "element": s,
                    "word": morphism.word_for[s],
                    "image": sorted(t),
                }
            }

    if want_witness and answer and level == "1/2" and len(constraints) == 1:
        found = pol_mod_separator_search(
            target,
            constraints[0],
            dmax=SEARCH_DMAX,
            nmax=SEARCH_NMAX,
            union_bound=SEARCH_UNION_BOUND,
        )
        if found is not None:
            witness = {
                "separator": {"modulus": found.modulus, "markers": list(found.markers)}
            }

    stats = {
        "monoid": morphism.size,
        "iterations": iterations,
        "antichain": antichain,
        "ms": round((time.perf_counter() - started) * 1000, 3),
    }
    return Verdict("cover", level, answer, witness, stats)


def separable(
    level: str,
    l1: Dfa,
    l2: Dfa,
    oracle: BasisOracle,
    max_monoid: int = DEFAULT_MONOID_BUDGET,
    max_antichain: int = DEFAULT_ANTICHAIN_BUDGET,
    want_witness: bool = False,
) -> Verdict:
    """Decide whether some level language contains l1 and avoids l2."""
    _check_level(level)
    if l1.alphabet != l2.alphabet:
        raise ValueError("separation inputs use different alphabets")
    if level == "0":
        started = time.perf_counter()
        answer = oracle.separates(l1, l2)
        witness = None
        if want_witness and answer.separable and answer.modulus is not None:
            witness = {"modulus": answer.modulus}
        stats = {"ms": round((time.perf_counter() - started) * 1000, 3)}
        return Verdict("separate", level, bool(answer), witness, stats)
    inner = coverable(
        level,
        l1,
        [l2],
        oracle,
        max_monoid=max_monoid,
        max_antichain=max_antichain,
        want_witness=want_witness,
    )
    return Verdict("separate", level, inner.answer, inner.witness, inner.stats)


def member(
    level: str,
    language: Dfa,
    oracle: BasisOracle,
    max_monoid: int = DEFAULT_MONOID_BUDGET,
    max_antichain: int = DEFAULT_ANTICHAIN_BUDGET,
    want_witness: bool = False,
) -> Verdict:
    """Decide whether the language itself lies at the given level.

    A regular language is a level language exactly when it is separable
    from its complement (the separator then equals the language).
    """
    inner = separable(
        level,
        language,
        complement(language),
        oracle,
        max_monoid=max_monoid,
        max_antichain=max_antichain,
        want_witness=want_witness,
    )
    return Verdict("member", level, inner.answer, inner.witness, inner.stats)
