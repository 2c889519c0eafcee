"""Order, closure, and construction tests for the semiring layer."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modhier.errors import BudgetExceededError
from modhier.semiring import (
    Antichain,
    AntichainSemiring,
    PowerSemiring,
    TableSemiring,
    add_closure,
    antichain_of,
    downclose,
    leq,
    omega_power,
    pair_semiring,
    pair_space,
    power_semiring,
)

from gen import CyclicMonoid, materialize, random_monoid, random_subset


def fs(*xs):
    return frozenset(xs)


@pytest.fixture
def parity_power():
    return power_semiring(CyclicMonoid(2))


# ---------------------------------------------------------------------------
# Canonical order


def test_leq_is_inclusion_in_power_semirings(parity_power):
    assert leq(parity_power, fs(0), fs(0, 1))
    assert leq(parity_power, fs(), fs(1))
    assert not leq(parity_power, fs(0), fs(1))


def test_power_semiring_operations(parity_power):
    assert parity_power.mul(fs(1), fs(1)) == fs(0)
    assert parity_power.mul(fs(0, 1), fs(1)) == fs(0, 1)
    assert parity_power.one == fs(0)
    assert parity_power.zero == fs()
    assert set(parity_power.elements()) == {fs(), fs(0), fs(1), fs(0, 1)}


# ---------------------------------------------------------------------------
# Omega powers


def test_omega_power_of_odd_residue(parity_power):
    assert omega_power(parity_power, fs(1)) == fs(0)


def test_omega_power_fixes_idempotents(parity_power):
    for e in (fs(), fs(0), fs(0, 1)):
        assert parity_power.mul(e, e) == e
        assert omega_power(parity_power, e) == e


def test_omega_power_mod_three():
    r3 = power_semiring(CyclicMonoid(3))
    assert omega_power(r3, fs(1)) == fs(0)
    assert omega_power(r3, fs(1, 2)) == fs(0, 1, 2)


def test_omega_power_longer_cycle():
    r4 = power_semiring(CyclicMonoid(4))
    assert omega_power(r4, fs(1)) == fs(0)
    assert omega_power(r4, fs(2)) == fs(0)


# ---------------------------------------------------------------------------
# Downward closure


def test_downclose_keeps_incomparable_maxima(parity_power):
    d = downclose(parity_power, [fs(0), fs(1)])
    assert d.maximal == {fs(0), fs(1)}
    assert d.to_set() == {fs(), fs(0), fs(1)}
    assert fs(0) in d
    assert fs(0, 1) not in d


def test_downclose_empty_and_top(parity_power):
    assert downclose(parity_power, []).maximal == frozenset()
    assert downclose(parity_power, []).to_set() == frozenset()
    top = downclose(parity_power, [fs(0, 1)])
    assert top.to_set() == {fs(), fs(0), fs(1), fs(0, 1)}


def test_downclose_prunes_dominated(parity_power):
    d = downclose(parity_power, [fs(0), fs(0, 1), fs()])
    assert d.maximal == {fs(0, 1)}


def test_downclose_idempotent_on_fixture(parity_power):
    d = downclose(parity_power, [fs(0), fs(1), fs()])
    again = downclose(parity_power, d.maximal)
    assert again.maximal == d.maximal


# ---------------------------------------------------------------------------
# Additive closure


def test_add_closure_examples(parity_power):
    assert add_closure(parity_power, [fs(0), fs(1)]) == {fs(0), fs(1), fs(0, 1)}
    assert add_closure(parity_power, [fs(0)]) == {fs(0)}
    assert add_closure(parity_power, [fs(0), fs(0, 1)]) == {fs(0), fs(0, 1)}


def test_add_closure_rejects_empty(parity_power):
    with pytest.raises(ValueError):
        add_closure(parity_power, [])


# ---------------------------------------------------------------------------
# Pair spaces and pair semirings


def test_pair_space_product_and_order(parity_power):
    space = pair_space(CyclicMonoid(2), parity_power)
    assert space.mult((0, fs(0)), (1, fs(1))) == (1, fs(1))
    assert space.unit == (0, fs(0))
    assert space.leq((1, fs(0)), (1, fs(0, 1)))
    assert not space.leq((0, fs(0)), (1, fs(0, 1)))


def test_pair_space_downclose_moves_second_coordinate(parity_power):
    space = pair_space(CyclicMonoid(2), parity_power)
    d = downclose(space, [(1, fs(0, 1))])
    assert d.to_set() == {(1, fs()), (1, fs(0)), (1, fs(1)), (1, fs(0, 1))}


def test_pair_semiring_lifts_componentwise(parity_power):
    ps = pair_semiring(CyclicMonoid(2), parity_power)
    assert ps.one == fs((0, fs(0)))
    assert ps.mul(fs((0, fs(0))), fs((1, fs(1)))) == fs((1, fs(1)))
    assert ps.add(fs((0, fs(0))), fs((1, fs(1)))) == fs((0, fs(0)), (1, fs(1)))


# ---------------------------------------------------------------------------
# Explicit tables and axiom checking


def test_materialized_power_semiring_passes_axioms(parity_power):
    table = materialize(parity_power)
    assert len(list(table.elements())) == 4
    elems = list(parity_power.elements())
    for x in table.elements():
        for y in table.elements():
            assert elems[table.add(x, y)] == parity_power.add(elems[x], elems[y])
            assert elems[table.mul(x, y)] == parity_power.mul(elems[x], elems[y])


def test_table_semiring_rejects_broken_idempotence():
    # Boolean semiring with addition corrupted at (1,1).
    with pytest.raises(ValueError, match="idempotent"):
        TableSemiring([[0, 1], [1, 0]], [[0, 0], [0, 1]], zero=0, one=1)


def test_table_semiring_rejects_broken_distributivity():
    # Force x*(y+z) != x*y + x*z by misplacing a product.
    add = [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    with pytest.raises(ValueError):
        TableSemiring(add, mul, zero=0, one=1)


# ---------------------------------------------------------------------------
# Antichains


def test_antichain_of_keeps_maxima(parity_power):
    assert antichain_of(parity_power.leq, [fs(), fs(0), fs(0, 1)]) == {fs(0, 1)}
    assert antichain_of(parity_power.leq, [fs(0), fs(1)]) == {fs(0), fs(1)}


def test_antichain_accumulator(parity_power):
    acc = Antichain(parity_power.leq)
    assert acc.add(fs(0))
    assert not acc.add(fs())
    assert acc.add(fs(0, 1))
    assert set(acc) == {fs(0, 1)}
    assert acc.dominates(fs(1))
    assert acc.freeze() == fs(fs(0, 1))


def test_antichain_budget():
    incomparable = lambda x, y: x == y
    acc = Antichain(incomparable, budget=2)
    acc.add(1)
    acc.add(2)
    with pytest.raises(BudgetExceededError):
        acc.add(3)


def test_antichain_semiring_normalizes(parity_power):
    ac = AntichainSemiring(pair_space(CyclicMonoid(2), parity_power))
    x = fs((1, fs(0)))
    y = fs((1, fs(0, 1)))
    assert ac.add(x, y) == y
    assert ac.mul(ac.one, x) == x
    assert ac.leq(x, y)
    assert not ac.leq(y, x)
    assert ac.contains_below(y, (1, fs(1)))
    assert not ac.contains_below(x, (1, fs(1)))


# ---------------------------------------------------------------------------
# Randomized properties over materialized power semirings


def table_from_seed(seed: int, max_size: int = 4) -> TableSemiring:
    rng = random.Random(seed)
    return materialize(PowerSemiring(random_monoid(rng, max_size=max_size)))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_random_power_semirings_satisfy_axioms(seed):
    table = table_from_seed(seed)
    assert 2 <= len(list(table.elements())) <= 16


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_leq_is_a_partial_order(seed):
    table = table_from_seed(seed, max_size=3)
    elems = list(table.elements())
    for x in elems:
        assert table.leq(x, x)
        for y in elems:
            if table.leq(x, y) and table.leq(y, x):
                assert x == y
            for z in elems:
                if table.leq(x, y) and table.leq(y, z):
                    assert table.leq(x, z)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_omega_power_is_idempotent_everywhere(seed):
    table = table_from_seed(seed)
    for s in table.elements():
        e = omega_power(table, s)
        assert table.mul(e, e) == e


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_operations_are_monotone(seed):
    table = table_from_seed(seed, max_size=3)
    elems = list(table.elements())
    pairs = [(x, y) for x in elems for y in elems if table.leq(x, y)]
    for x, y in pairs:
        for z in elems:
            assert table.leq(table.mul(x, z), table.mul(y, z))
            assert table.leq(table.mul(z, x), table.mul(z, y))
            assert table.leq(table.add(x, z), table.add(y, z))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_downclose_matches_brute_force(seed):
    rng = random.Random(seed)
    table = table_from_seed(seed, max_size=3)
    elems = list(table.elements())
    xs = random_subset(rng, elems)
    d = downclose(table, xs)
    brute = {r for r in elems if any(table.leq(r, x) for x in xs)}
    assert d.to_set() == brute
    for r in elems:
        assert (r in d) == (r in brute)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_add_closure_is_closed_and_dominating(seed):
    rng = random.Random(seed)
    table = table_from_seed(seed, max_size=3)
    elems = list(table.elements())
    xs = random_subset(rng, elems) or frozenset({table.zero})
    closed = add_closure(table, xs)
    for x in closed:
        assert any(table.leq(base, x) for base in xs)
        for y in closed:
            assert table.add(x, y) in closed
