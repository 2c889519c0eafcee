"""The three fixpoint engines behind the level deciders.

Each engine computes an optimal imprint: the downward-closed set of
semiring values (or monoid-value pairs) that every cover built from
the corresponding language class must hit. Level 1/2 is a least
fixpoint seeded by letters and the basis approximation; level 1 is a
greatest fixpoint filtered through an auxiliary rating map; level 3/2
is a least fixpoint whose rules are re-evaluated against its own
auxiliary map as the set grows. All state is kept as antichains of
maximal elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .basis import BasisOracle
from .errors import BudgetExceededError
from .lang import MonoidMorphism
from .rating import (
    RatingMap,
    antichain_inner_for_bpol,
    antichain_inner_for_pbpol,
    aux_bpol_map,
    aux_pbpol_map,
    image_values,
)
from .semiring import (
    DEFAULT_ANTICHAIN_BUDGET,
    Antichain,
    MultMonoid,
    PairSpace,
    Semiring,
    add_closure,
    antichain_of,
)

DEFAULT_ITERATION_BUDGET = 10000


@dataclass(frozen=True)
class Imprint:
    """Downward-closed subset of a semiring, as the antichain of its maxima."""

    semiring: Semiring = field(compare=False)
    maximal: frozenset = frozenset()
    passes: int = field(default=0, compare=False)

    def __contains__(self, value) -> bool:
        return any(self.semiring.leq(value, m) for m in self.maximal)

    def to_set(self, budget: int = DEFAULT_ANTICHAIN_BUDGET) -> frozenset:
        out: set = set()
        for m in self.maximal:
            for value in self.semiring.iter_below(m):
                out.add(value)
                if len(out) > budget:
                    raise BudgetExceededError("imprint materialization", budget)
        return frozenset(out)


@dataclass(frozen=True)
class PointedImprint:
    """Downward-closed subset of monoid-value pairs (closure moves values only)."""

    space: PairSpace = field(compare=False)
    maximal: frozenset = frozenset()
    passes: int = field(default=0, compare=False)

    def __contains__(self, pair) -> bool:
        return any(self.space.leq(pair, m) for m in self.maximal)

    def to_set(self, budget: int = DEFAULT_ANTICHAIN_BUDGET) -> frozenset:
        out: set = set()
        for m in self.maximal:
            for pair in self.space.iter_below(m):
                out.add(pair)
                if len(out) > budget:
                    raise BudgetExceededError("imprint materialization", budget)
        return frozenset(out)

    def unpointed(self) -> Imprint:
        """Forget the monoid coordinate, keeping the value downset."""
        semiring = self.space.semiring
        values = antichain_of(semiring.leq, {r for _, r in self.maximal})
        return Imprint(semiring, values, self.passes)


def _close_products(space, acc: Antichain):
    """Saturate an antichain under the space's product; pass-based."""
    changed_any = False
    passes = 0
    while True:
        passes += 1
        changed = False
        snapshot = list(acc)
        for x in snapshot:
            for y in snapshot:
                if acc.add(space.mult(x, y)):
                    changed = True
        if not changed:
            return changed_any, passes
        changed_any = True


# ---------------------------------------------------------------------------
# Level 1/2


def pol_imprint(
    morphism: MonoidMorphism,
    rho: RatingMap,
    oracle: BasisOracle,
    max_antichain: int = DEFAULT_ANTICHAIN_BUDGET,
) -> PointedImprint:
    """Least pair set for level 1/2: the pointed imprint of marked products.

    Seeded with the unit pair, the letter pairs, and the basis
    approximation attached to the unit; closed under downward closure
    (implicit in the antichain) and componentwise product. Seeding
    the unit and letters generates every word pair because the result
    is product-closed.
    """
    if morphism.alphabet != rho.alphabet:
        raise ValueError("morphism and rating map use different alphabets")
    space = PairSpace(morphism, rho.semiring)
    acc = Antichain(space.leq, budget=max_antichain)
    acc.add((morphism.unit, rho.semiring.one))
    for letter in rho.alphabet:
        acc.add((morphism.letter_image[letter], rho.letter_image[letter]))
    acc.add((morphism.unit, oracle.iopti(rho)))
    _, passes = _close_products(space, acc)
    return PointedImprint(space, acc.freeze(), passes)


# ---------------------------------------------------------------------------
# Level 1


def admissible_totals(semiring: Semiring, pairs) -> frozenset:
    """Sums realizable by pair families whose total sits below every chosen set.

    A total t = r_1 + ... + r_k over pairs (r_i, U_i) counts when t
    lies in the downset of each chosen U_i. Families are reduced to
    subsets: addition is commutative and idempotent, so a family's sum
    equals its support's sum, and the side condition only depends on
    the support and the total. Hence t qualifies exactly when t is an
    additive combination of the pairs that tolerate it.
    """
    pairs = list(pairs)
    if not pairs:
        return frozenset()
    totals = add_closure(semiring, [r for r, _ in pairs])
    valid = []
    for t in totals:
        support = [r for r, u in pairs if any(semiring.leq(t, v) for v in u)]
        if support and t in add_closure(semiring, support):
            valid.append(t)
    return frozenset(valid)


def _bpol_iopti_antichain(rho, oracle, max_antichain, max_iterations):
    """Greatest-fixpoint filter with the set kept as an antichain of maxima.

    Requires meets: the filtered set is an intersection of downsets,
    whose maxima are the pairwise meets of the operands' maxima.
    """
    semiring = rho.semiring
    inner = antichain_inner_for_bpol(semiring)
    maxima = frozenset({semiring.top()})
    iterations = 0
    while True:
        iterations += 1
        if iterations > max_iterations:
            raise BudgetExceededError("iteration", max_iterations)
        eta = aux_bpol_map(rho, maxima, inner=inner)
        valid = admissible_totals(semiring, oracle.iopti(eta))
        meets = {semiring.meet(m, t) for m in maxima for t in valid}
        new_maxima = antichain_of(semiring.leq, meets)
        if len(new_maxima) > max_antichain:
            raise BudgetExceededError("antichain", max_antichain)
        if new_maxima == maxima:
            return Imprint(semiring, maxima, iterations)
        maxima = new_maxima


def _bpol_iopti_enumerated(rho, oracle, max_iterations):
    """Greatest-fixpoint filter over an explicitly enumerated carrier."""
    semiring = rho.semiring
    current = set(semiring.elements())
    iterations = 0
    while True:
        iterations += 1
        if iterations > max_iterations:
            raise BudgetExceededError("iteration", max_iterations)
        eta = aux_bpol_map(rho, frozenset(current))
        valid = admissible_totals(semiring, oracle.iopti(eta))
        survivors = {s for s in current if any(semiring.leq(s, t) for t in valid)}
        if survivors == current:
            return Imprint(semiring, antichain_of(semiring.leq, current), iterations)
        current = survivors


def bpol_iopti(
    rho: RatingMap,
    oracle: BasisOracle,
    max_antichain: int = DEFAULT_ANTICHAIN_BUDGET,
    max_iterations: int = DEFAULT_ITERATION_BUDGET,
) -> Imprint:
    """Greatest value set for level 1: survivors of the auxiliary-map filter.

    Starting from the full semiring, repeatedly keep the values s
    admitting a family of auxiliary-approximation pairs whose sum
    dominates s and lies in every chosen pair's set; the descending
    sequence stabilizes on the answer. The filter condition is
    downward closed in s, so the set is a downset throughout.
    """
    if rho.semiring.has_meets:
        return _bpol_iopti_antichain(rho, oracle, max_antichain, max_iterations)
    return _bpol_iopti_enumerated(rho, oracle, max_iterations)


def bpol_opti(
    rho: RatingMap,
    iopti: Imprint,
    max_antichain: int = DEFAULT_ANTICHAIN_BUDGET,
) -> Imprint:
    """Full level-1 imprint over all words: close iopti with the word images.

    Least superset of the level-1 approximation containing every
    reachable word image, closed under downward closure and product.
    """
    space = MultMonoid(rho.semiring)
    acc = Antichain(space.leq, budget=max_antichain)
    for value in iopti.maximal:
        acc.add(value)
    for value in image_values(rho):
        acc.add(value)
    _, passes = _close_products(space, acc)
    return Imprint(rho.semiring, acc.freeze(), passes)


# ---------------------------------------------------------------------------
# Level 3/2


def _downset_pairs(space: PairSpace, maxima, budget: int):
    """Materialize the downset of an antichain of pairs, budget-capped."""
    out: set = set()
    for m in maxima:
        for pair in space.iter_below(m):
            out.add(pair)
            if len(out) > budget:
                raise BudgetExceededError("downset materialization", budget)
    return out


def pbpol_iopti(
    morphism: MonoidMorphism,
    rho: RatingMap,
    oracle: BasisOracle,
    max_antichain: int = DEFAULT_ANTICHAIN_BUDGET,
    max_iterations: int = DEFAULT_ITERATION_BUDGET,
) -> PointedImprint:
    """Least pair set for level 3/2, saturated against its own auxiliary map.

    From the empty set, repeatedly: rebuild the auxiliary map from the
    current set, take the basis approximation of it, and apply its
    pairs (r, T) by absorbing T and, for every multiplicatively
    idempotent pair (e, f) below T, adding (e, f * (1 + r) * f); close
    under product. Every rule is monotone in the set, so this chaotic
    iteration reaches the least fixpoint regardless of order.
    """
    if morphism.alphabet != rho.alphabet:
        raise ValueError("morphism and rating map use different alphabets")
    semiring = rho.semiring
    space = PairSpace(morphism, semiring)
    inner = antichain_inner_for_pbpol(morphism, semiring)
    acc = Antichain(space.leq, budget=max_antichain)
    iterations = 0
    while True:
        iterations += 1
        if iterations > max_iterations:
            raise BudgetExceededError("iteration", max_iterations)
        eta = aux_pbpol_map(morphism, rho, acc.freeze(), inner=inner)
        changed = False
        for r, t_value in oracle.iopti(eta):
            for pair in t_value:
                if acc.add(pair):
                    changed = True
            for candidate in _downset_pairs(space, t_value, max_antichain):
                if space.mult(candidate, candidate) != candidate:
                    continue
                e, f = candidate
                image = semiring.mul(semiring.mul(f, semiring.add(semiring.one, r)), f)
                if acc.add((e, image)):
                    changed = True
        closed_changed, _ = _close_products(space, acc)
        if not (changed or closed_changed):
            return PointedImprint(space, acc.freeze(), iterations)


def pbpol_pointed_imprint(
    morphism: MonoidMorphism,
    rho: RatingMap,
    iopti: PointedImprint,
    max_antichain: int = DEFAULT_ANTICHAIN_BUDGET,
) -> PointedImprint:
    """Full level-3/2 pointed imprint: close iopti with unit and letter pairs."""
    space = iopti.space
    acc = Antichain(space.leq, budget=max_antichain)
    for pair in iopti.maximal:
        acc.add(pair)
    acc.add((morphism.unit, rho.semiring.one))
    for letter in rho.alphabet:
        acc.add((morphism.letter_image[letter], rho.letter_image[letter]))
    _, passes = _close_products(space, acc)
    return PointedImprint(space, acc.freeze(), passes)
