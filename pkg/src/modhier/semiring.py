"""Finite idempotent semirings and the order machinery the engines run in.

Elements are opaque hashable values. The canonical order r <= s iff
r + s = s underlies everything: downward-closed sets are stored as
antichains of their maximal elements, and the power-semiring carriers
the fixpoints live in are virtual (sets handled directly, never an
enumerated carrier).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .errors import BudgetExceededError

DEFAULT_ANTICHAIN_BUDGET = 50000


class Semiring:
    """Interface: add/mul/zero/one plus the canonical order."""

    zero: object
    one: object
    has_meets = False

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def leq(self, x, y) -> bool:
        return self.add(x, y) == y

    def meet(self, x, y):
        """Greatest lower bound, or None when the order is not known to have one."""
        return None

    def elements(self) -> Iterable:
        raise NotImplementedError("carrier is virtual")

    def iter_below(self, x) -> Iterator:
        """All elements <= x (materializes a principal downset)."""
        return (r for r in self.elements() if self.leq(r, x))

    def sum(self, items) -> object:
        total = self.zero
        for x in items:
            total = self.add(total, x)
        return total


class TableSemiring(Semiring):
    """Explicit small semiring given by operation tables; axioms checked."""

    def __init__(self, add_table, mul_table, zero: int, one: int, check: bool = True):
        self._add = tuple(tuple(row) for row in add_table)
        self._mul = tuple(tuple(row) for row in mul_table)
        self.zero = zero
        self.one = one
        n = len(self._add)
        if check:
            self._check_axioms(n)
        # order as a bit of precomputation; carriers here are small
        self._leq = tuple(
            tuple(self._add[r][s] == s for s in range(n)) for r in range(n)
        )

    def _check_axioms(self, n: int) -> None:
        rng = range(n)
        a, m = self._add, self._mul
        for x in rng:
            if a[x][x] != x:
                raise ValueError(f"addition not idempotent at {x}")
            if a[self.zero][x] != x or a[x][self.zero] != x:
                raise ValueError(f"zero not neutral at {x}")
            if m[self.one][x] != x or m[x][self.one] != x:
                raise ValueError(f"one not neutral at {x}")
            if m[self.zero][x] != self.zero or m[x][self.zero] != self.zero:
                raise ValueError(f"zero not annihilating at {x}")
            for y in rng:
                if a[x][y] != a[y][x]:
                    raise ValueError(f"addition not commutative at ({x},{y})")
                for z in rng:
                    if a[a[x][y]][z] != a[x][a[y][z]]:
                        raise ValueError(f"addition not associative at ({x},{y},{z})")
                    if m[m[x][y]][z] != m[x][m[y][z]]:
                        raise ValueError(f"multiplication not associative at ({x},{y},{z})")
                    if m[x][a[y][z]] != a[m[x][y]][m[x][z]]:
                        raise ValueError(f"left distributivity fails at ({x},{y},{z})")
                    if m[a[y][z]][x] != a[m[y][x]][m[z][x]]:
                        raise ValueError(f"right distributivity fails at ({x},{y},{z})")

    def add(self, x, y):
        return self._add[x][y]

    def mul(self, x, y):
        return self._mul[x][y]

    def leq(self, x, y) -> bool:
        return self._leq[x][y]

    def elements(self) -> range:
        return range(len(self._add))


# ---------------------------------------------------------------------------
# Multiplicative spaces: the shared duck type is unit / mult / leq (order
# optional for plain monoids), used both to build power semirings and to
# order the pairs the pointed imprints live on.


class MultMonoid:
    """A semiring viewed through its multiplication (and canonical order)."""

    def __init__(self, semiring: Semiring):
        self.semiring = semiring
        self.unit = semiring.one

    def mult(self, x, y):
        return self.semiring.mul(x, y)

    def leq(self, x, y) -> bool:
        return self.semiring.leq(x, y)

    def elements(self) -> Iterable:
        return self.semiring.elements()

    def iter_below(self, x) -> Iterator:
        return self.semiring.iter_below(x)


class ProductMonoid:
    """Componentwise product of two monoids; elements are pairs."""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        self.unit = (first.unit, second.unit)

    def mult(self, x, y):
        return (self.first.mult(x[0], y[0]), self.second.mult(x[1], y[1]))

    def elements(self) -> Iterator:
        return ((a, b) for a in self.first.elements() for b in self.second.elements())


class PairSpace:
    """M x R with componentwise product, ordered within equal monoid parts.

    (s, r) <= (s', r') iff s = s' and r <= r' in the semiring: downward
    closure only ever moves the semiring coordinate.
    """

    def __init__(self, monoid, semiring: Semiring):
        self.monoid = monoid
        self.semiring = semiring
        self.unit = (monoid.unit, semiring.one)

    def mult(self, x, y):
        return (self.monoid.mult(x[0], y[0]), self.semiring.mul(x[1], y[1]))

    def leq(self, x, y) -> bool:
        return x[0] == y[0] and self.semiring.leq(x[1], y[1])

    def iter_below(self, x) -> Iterator:
        s, r = x
        return ((s, v) for v in self.semiring.iter_below(r))


class PowerSemiring(Semiring):
    """2^M for a finite monoid M: union as addition, elementwise product.

    Elements are frozensets of monoid elements. The carrier is virtual;
    `elements()` materializes it only for small monoids.
    """

    has_meets = True

    def __init__(self, monoid, max_carrier_bits: int = 16):
        self.monoid = monoid
        self.max_carrier_bits = max_carrier_bits
        self.zero = frozenset()
        self.one = frozenset({monoid.unit})

    def add(self, x, y):
        return x | y

    def mul(self, x, y):
        mult = self.monoid.mult
        return frozenset(mult(a, b) for a in x for b in y)

    def leq(self, x, y) -> bool:
        return x <= y

    def meet(self, x, y):
        return x & y

    def elements(self) -> Iterator[frozenset]:
        base = list(self.monoid.elements())
        if len(base) > self.max_carrier_bits:
            raise BudgetExceededError("power-semiring carrier", 2**self.max_carrier_bits)
        return self.iter_below(frozenset(base))

    def top(self) -> frozenset:
        return frozenset(self.monoid.elements())

    def iter_below(self, x) -> Iterator[frozenset]:
        base = sorted(x, key=repr)
        for k in range(len(base) + 1):
            for combo in combinations(base, k):
                yield frozenset(combo)


class AntichainSemiring(Semiring):
    """Sets over an ordered multiplicative space, kept as antichains.

    An element is the antichain of maxima of a downward-closed subset of
    the space; two exact sets with the same downward closure collapse to
    the same value here. Sound wherever consumers only read values
    through downward closure, because the space's product is monotone:
    maxima of a product of downsets are products of maxima.
    """

    def __init__(self, space):
        self.space = space
        self.zero = frozenset()
        self.one = frozenset({space.unit})

    def normal(self, items: Iterable) -> frozenset:
        return antichain_of(self.space.leq, items)

    def add(self, x, y):
        return self.normal(set(x) | set(y))

    def mul(self, x, y):
        mult = self.space.mult
        return self.normal({mult(a, b) for a in x for b in y})

    def leq(self, x, y) -> bool:
        space_leq = self.space.leq
        return all(any(space_leq(a, b) for b in y) for a in x)

    def contains_below(self, x, value) -> bool:
        """Is `value` in the downward closure `x` denotes?"""
        return any(self.space.leq(value, m) for m in x)


# ---------------------------------------------------------------------------
# Order utilities


def leq(semiring: Semiring, r, s) -> bool:
    return semiring.leq(r, s)


def omega_power(semiring: Semiring, s):
    """The unique idempotent among the positive powers of s.

    Successive powers with cycle detection: once s^j = s^i (i < j), the
    cycle has period c = j - i and its idempotent sits at the least
    multiple of c that is >= max(i, 1).
    """
    powers = [None, s]
    seen = {s: 1}
    current = s
    while True:
        current = semiring.mul(current, s)
        exponent = len(powers)
        if current in seen:
            start = seen[current]
            period = exponent - start
            k = ((max(start, 1) + period - 1) // period) * period
            result = powers[k]
            assert semiring.mul(result, result) == result
            return result
        seen[current] = exponent
        powers.append(current)


def antichain_of(space_leq: Callable, items: Iterable) -> frozenset:
    """Maxima of `items` under the given order."""
    maxima: list = []
    for x in items:
        if any(space_leq(x, m) for m in maxima):
            continue
        maxima = [m for m in maxima if not space_leq(m, x)]
        maxima.append(x)
    return frozenset(maxima)


@dataclass(frozen=True)
class DownSet:
    """Downward-closed set given by the antichain of its maxima."""

    space: object = field(compare=False)
    maximal: frozenset

    def __contains__(self, item) -> bool:
        return any(self.space.leq(item, m) for m in self.maximal)

    def __iter__(self):
        return iter(self.maximal)

    def to_set(self, budget: int = DEFAULT_ANTICHAIN_BUDGET) -> frozenset:
        """Materialize the full downset (fixtures and small cross-checks)."""
        out: set = set()
        for m in self.maximal:
            for x in self.space.iter_below(m):
                out.add(x)
                if len(out) > budget:
                    raise BudgetExceededError("downset materialization", budget)
        return frozenset(out)


def downclose(space, xs: Iterable) -> DownSet:
    return DownSet(space, antichain_of(space.leq, xs))


class Antichain:
    """Mutable antichain accumulator used by the saturation loops."""

    def __init__(self, space_leq: Callable, items: Iterable = (), budget: int = DEFAULT_ANTICHAIN_BUDGET):
        self.leq = space_leq
        self.budget = budget
        self._items: list = []
        for x in items:
            self.add(x)

    def add(self, x) -> bool:
        """Insert x; returns True if it was not already dominated."""
        if any(self.leq(x, m) for m in self._items):
            return False
        self._items = [m for m in self._items if not self.leq(m, x)]
        self._items.append(x)
        if len(self._items) > self.budget:
            raise BudgetExceededError("antichain", self.budget)
        return True

    def dominates(self, x) -> bool:
        return any(self.leq(x, m) for m in self._items)

    def __iter__(self):
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def freeze(self) -> frozenset:
        return frozenset(self._items)


def add_closure(semiring: Semiring, xs: Iterable) -> frozenset:
    """All sums of non-empty subsets of xs.

    Since addition is commutative and idempotent, closing under binary
    sums reaches every subset sum.
    """
    todo = list(dict.fromkeys(xs))
    if not todo:
        raise ValueError("add_closure needs a non-empty collection")
    closed = set(todo)
    while todo:
        x = todo.pop()
        for y in list(closed):
            s = semiring.add(x, y)
            if s not in closed:
                closed.add(s)
                todo.append(s)
    return frozenset(closed)


def power_semiring(monoid) -> PowerSemiring:
    """2^M; accepts any finite monoid (e.g. a morphism or MultMonoid)."""
    return PowerSemiring(monoid)


def pair_space(monoid, semiring: Semiring) -> PairSpace:
    return PairSpace(monoid, semiring)


def pair_semiring(monoid, semiring: Semiring) -> PowerSemiring:
    """2^{M x R} with union and elementwise componentwise product."""
    return PowerSemiring(ProductMonoid(monoid, MultMonoid(semiring)))
