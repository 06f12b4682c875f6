import random
from collections import Counter
from itertools import product
from math import prod

import pytest

from concordia.algebra import (
    FinAbGroup,
    Subgroup,
    canonicalize,
    element_order,
    enumerate_subgroups_of_order,
    generating_rank,
    invariant_factors,
    primary_part,
)
from concordia.exceptions import InvalidArgumentError, InvalidGroupError, ResourceLimitError


def _random_orders(rng, max_order=2 ** 10):
    while True:
        orders = [rng.randint(2, 16) for _ in range(rng.randint(0, 3))]
        if prod(orders) <= max_order:
            return orders


def test_canonicalize_regroups_coprime_factors():
    assert canonicalize([25, 23, 25, 23]).canonical_invariants == (575, 575)


def test_canonicalize_drops_trivial_summands():
    group = canonicalize([1])
    assert group.cyclic_orders == ()
    assert group.canonical_invariants == ()
    assert group.order == 1


def test_canonicalize_keeps_divisibility_chain():
    assert canonicalize([2, 4]).canonical_invariants == (2, 4)


def test_invariant_factors_of_mixed_primes():
    assert invariant_factors([6, 10]) == (2, 30)
    assert invariant_factors([4, 6, 9]) == (6, 36)


@pytest.mark.parametrize("orders", [[0], [-3], [4, 0]])
def test_canonicalize_rejects_nonpositive_orders(orders):
    with pytest.raises(InvalidGroupError):
        canonicalize(orders)


def test_group_rejects_nonpositive_orders():
    with pytest.raises(InvalidGroupError):
        FinAbGroup((4, 0))


def test_generating_rank():
    assert generating_rank(canonicalize([25, 23, 25, 23])) == 2
    assert generating_rank(FinAbGroup(())) == 0
    assert generating_rank(FinAbGroup((25, 25))) == 2


def test_primary_part_of_kstar_homology():
    group, _ = primary_part(FinAbGroup((575, 575)), 5)
    assert group.canonical_invariants == (25, 25)


def test_primary_part_without_torsion_is_trivial():
    group, _ = primary_part(FinAbGroup((575, 575)), 7)
    assert group.order == 1
    assert group.canonical_invariants == ()


def test_primary_part_embedding():
    group, embed = primary_part(FinAbGroup((12,)), 2)
    assert group.cyclic_orders == (4,)
    assert embed((1,)) == (3,)
    assert element_order(FinAbGroup((12,)), (3,)) == 4


def test_primary_part_requires_prime():
    with pytest.raises(InvalidArgumentError):
        primary_part(FinAbGroup((12,)), 4)


def test_element_order():
    group = FinAbGroup((25, 23))
    assert element_order(group, (5, 0)) == 5
    assert element_order(group, (0, 0)) == 1
    assert element_order(group, (10, 1)) == 115


def test_socle_lists_elements_of_order_p():
    assert list(FinAbGroup((25, 23)).socle(5)) == [(0, 0), (5, 0), (10, 0), (15, 0), (20, 0)]


def test_subgroups_of_klein_four_group():
    subgroups = list(enumerate_subgroups_of_order(FinAbGroup((2, 2)), 2))
    assert len(subgroups) == 3
    assert {s.elements for s in subgroups} == {((0, 0), (0, 1)), ((0, 0), (1, 0)), ((0, 0), (1, 1))}


def test_subgroups_of_trivial_group():
    subgroups = list(enumerate_subgroups_of_order(FinAbGroup(()), 1))
    assert len(subgroups) == 1
    assert subgroups[0].elements == ((),)


def test_subgroups_of_order_nine_match_brute_force():
    group = FinAbGroup((9, 9))
    elements = list(group.elements())
    brute_force = {Subgroup.generated_by(group, [a, b]).elements for a, b in product(elements, repeat=2)}
    expected = sorted(elements for elements in brute_force if len(elements) == 9)

    subgroups = list(enumerate_subgroups_of_order(group, 9))
    assert [s.elements for s in subgroups] == expected
    assert len(subgroups) == 13


def test_subgroups_of_non_divisor_order():
    assert list(enumerate_subgroups_of_order(FinAbGroup((9, 9)), 5)) == []


def test_subgroup_enumeration_respects_oracle_bound():
    with pytest.raises(ResourceLimitError):
        list(enumerate_subgroups_of_order(FinAbGroup((9, 9)), 9, bound=80))


def test_subgroups_are_closed_and_sorted():
    group = FinAbGroup((2, 4, 3))
    for k in (1, 2, 3, 4, 6, 8, 12, 24):
        subgroups = list(enumerate_subgroups_of_order(group, k))
        assert subgroups == sorted(subgroups, key=lambda s: s.elements)
        assert len({s.elements for s in subgroups}) == len(subgroups)
        for subgroup in subgroups:
            assert subgroup.order == k
            assert group.zero in subgroup
            for a, b in product(subgroup, repeat=2):
                assert group.add(a, b) in subgroup
            for a in subgroup:
                assert group.negate(a) in subgroup


def test_subgroup_helpers():
    group = FinAbGroup((9, 9))
    socle = Subgroup.generated_by(group, [(3, 0), (0, 3)])
    assert socle.order == 9
    assert socle.elementary_rank(3) == 2

    diagonal = Subgroup.generated_by(group, [(1, 1)])
    assert diagonal.order == 9
    assert diagonal.elementary_rank(3) == 1
    assert diagonal.generators == ((1, 1),)
    assert diagonal.extend((3, 0)).order == 27

    whole = Subgroup.whole(FinAbGroup((4, 2)))
    assert Subgroup.generated_by(whole.ambient, whole.generators) == whole
    assert len(whole.generators) == 2


@pytest.mark.parametrize("seed", range(5))
def test_canonical_form_decides_isomorphism(seed):
    rng = random.Random(seed)

    def element_orders(group):
        return Counter(group.element_order(x) for x in group.elements())

    for _ in range(20):
        orders = _random_orders(rng)
        if rng.random() < 0.5:
            other = _random_orders(rng)
        else:
            other = rng.sample(orders, len(orders))
        g, h = canonicalize(orders), canonicalize(other)
        assert (g.canonical_invariants == h.canonical_invariants) == (element_orders(g) == element_orders(h))
        assert prod(g.canonical_invariants) == g.order
        chain = g.canonical_invariants
        assert all(b % a == 0 for a, b in zip(chain, chain[1:]))


@pytest.mark.parametrize("seed", range(5))
def test_primary_rank_is_at_most_rank(seed):
    rng = random.Random(seed)
    for _ in range(20):
        group = canonicalize(_random_orders(rng))
        for p in (2, 3, 5, 7, 11, 13):
            assert generating_rank(primary_part(group, p)[0]) <= generating_rank(group)


@pytest.mark.parametrize("seed", range(3))
def test_element_order_counts_add_up(seed):
    rng = random.Random(seed)
    for _ in range(10):
        group = canonicalize(_random_orders(rng))
        counts = Counter(group.element_order(x) for x in group.elements())
        assert sum(counts.values()) == group.order
        assert all(group.order % d == 0 and group.exponent % d == 0 for d in counts)
