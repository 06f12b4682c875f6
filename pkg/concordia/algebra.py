import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, lcm, prod
from typing import Callable, Iterable, Iterator, Optional, Sequence, Tuple

from sympy import factorint, isprime

from concordia.exceptions import InvalidArgumentError, InvalidGroupError, ResourceLimitError
from concordia.types import oracle_bound

logger = logging.getLogger(__name__)

GroupElement = Tuple[int, ...]


def invariant_factors(orders: Sequence[int]) -> Tuple[int, ...]:
    """Regroup the cyclic orders into the invariant-factor chain d_1 | d_2 | ... | d_m.

    For every prime the p-power parts of all orders are collected and sorted; the largest powers of all primes multiply
    into the largest invariant factor, the second largest ones into the next factor, and so on.
    """
    prime_powers = defaultdict(list)
    for d in orders:
        for p, e in factorint(d).items():
            prime_powers[int(p)].append(int(p) ** int(e))

    length = max((len(powers) for powers in prime_powers.values()), default=0)
    factors = [1] * length
    for powers in prime_powers.values():
        for idx, power in enumerate(sorted(powers, reverse=True)):
            factors[idx] *= power
    return tuple(reversed(factors))


@dataclass(frozen=True)
class FinAbGroup:
    """The group Z/d_1 + ... + Z/d_k.

    Summands of order 1 are allowed so that coordinates can stay aligned with an external indexing (e.g. one coordinate
    per surgery piece); they never show up in the canonical invariants.
    """

    cyclic_orders: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(d) for d in self.cyclic_orders))
        if any(d <= 0 for d in self.cyclic_orders):
            raise InvalidGroupError(f"Cyclic orders have to be positive, got {list(self.cyclic_orders)}")

    @cached_property
    def canonical_invariants(self) -> Tuple[int, ...]:
        return invariant_factors(self.cyclic_orders)

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders)

    @property
    def zero(self) -> GroupElement:
        return (0,) * len(self.cyclic_orders)

    def is_isomorphic(self, other: "FinAbGroup") -> bool:
        return self.canonical_invariants == other.canonical_invariants

    def is_element(self, x) -> bool:
        return len(x) == len(self.cyclic_orders) and all(0 <= c < d for c, d in zip(x, self.cyclic_orders))

    def reduce(self, coords: Iterable[int]) -> GroupElement:
        return tuple(c % d for c, d in zip(coords, self.cyclic_orders))

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.cyclic_orders))

    def negate(self, x: GroupElement) -> GroupElement:
        return tuple(-a % d for a, d in zip(x, self.cyclic_orders))

    def scale(self, c: int, x: GroupElement) -> GroupElement:
        return tuple(c * a % d for a, d in zip(x, self.cyclic_orders))

    def element_order(self, x: GroupElement) -> int:
        return lcm(*(d // gcd(d, a) for a, d in zip(x, self.cyclic_orders)))

    def elements(self) -> Iterator[GroupElement]:
        """Iterate over all elements in lexicographic order."""
        return product(*(range(d) for d in self.cyclic_orders))

    def socle(self, p: int) -> Iterator[GroupElement]:
        """Iterate over the elements of order dividing p in lexicographic order, without visiting the whole group."""
        return product(*(range(0, d, d // p) if d % p == 0 else (0,) for d in self.cyclic_orders))

    def require_oracle_scale(self, bound: Optional[int] = None):
        bound = oracle_bound(bound)
        if self.order > bound:
            raise ResourceLimitError(f"Group of order {self.order} exceeds the oracle bound {bound}")


class PrimaryEmbedding:
    """The inclusion of the p-primary part G_p into G, scaling the coordinate of each Z/d_j by d_j / p^{v_p(d_j)}."""

    def __init__(self, ambient: FinAbGroup, coordinates: Tuple[int, ...], scales: Tuple[int, ...]):
        self.ambient = ambient
        self.coordinates = coordinates
        self.scales = scales

    def __call__(self, x: GroupElement) -> GroupElement:
        coords = [0] * len(self.ambient.cyclic_orders)
        for value, idx, scale in zip(x, self.coordinates, self.scales):
            coords[idx] = value * scale
        return self.ambient.reduce(coords)


def canonicalize(orders: Sequence[int]) -> FinAbGroup:
    """Build the group Z/d_1 + ... + Z/d_k, dropping summands of order 1."""
    if any(d <= 0 for d in orders):
        raise InvalidGroupError(f"Cyclic orders have to be positive, got {list(orders)}")
    return FinAbGroup(tuple(d for d in orders if d != 1))


def generating_rank(group: FinAbGroup) -> int:
    """The minimal number of generators, i.e. the number of invariant factors."""
    return len(group.canonical_invariants)


def primary_part(group: FinAbGroup, p: int) -> Tuple[FinAbGroup, PrimaryEmbedding]:
    """Return the p-primary part G_p together with its embedding into G.

    The coordinates of G_p are the p-power parts of the cyclic summands of G (in the order of G's summands); its
    canonical invariants give the invariant-factor form.
    """
    if not isprime(p):
        raise InvalidArgumentError(f"{p} is not a prime")

    orders, coordinates, scales = [], [], []
    for idx, d in enumerate(group.cyclic_orders):
        power = 1
        while d % (power * p) == 0:
            power *= p
        if power > 1:
            orders.append(power)
            coordinates.append(idx)
            scales.append(d // power)
    return FinAbGroup(tuple(orders)), PrimaryEmbedding(group, tuple(coordinates), tuple(scales))


def element_order(group: FinAbGroup, g: GroupElement) -> int:
    return group.element_order(g)


def _span_with(ambient: FinAbGroup, members: frozenset, x: GroupElement) -> frozenset:
    """Return H + <x> for the subgroup H given by its element set: the union of the cosets H + c*x before c*x enters H."""
    result = set(members)
    step = x
    while step not in members:
        result.update(ambient.add(h, step) for h in members)
        step = ambient.add(step, x)
    return frozenset(result)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup, represented by its full sorted element set."""

    ambient: FinAbGroup
    elements: Tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    @classmethod
    def trivial(cls, ambient: FinAbGroup) -> "Subgroup":
        return cls(ambient, (ambient.zero,))

    @classmethod
    def whole(cls, ambient: FinAbGroup, bound: Optional[int] = None) -> "Subgroup":
        ambient.require_oracle_scale(bound)
        return cls(ambient, tuple(ambient.elements()))

    @classmethod
    def generated_by(cls, ambient: FinAbGroup, generators: Iterable[GroupElement]) -> "Subgroup":
        members = frozenset({ambient.zero})
        for g in generators:
            members = _span_with(ambient, members, ambient.reduce(g))
        return cls(ambient, tuple(members))

    @cached_property
    def members(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.members

    def extend(self, x: GroupElement) -> "Subgroup":
        """Return H + <x>."""
        return Subgroup(self.ambient, tuple(_span_with(self.ambient, self.members, x)))

    @cached_property
    def generators(self) -> Tuple[GroupElement, ...]:
        """A small generating set, picked greedily among the elements of largest order."""
        gens = []
        span = frozenset({self.ambient.zero})
        for x in sorted(self.elements, key=lambda x: (-self.ambient.element_order(x), x)):
            if len(span) == self.order:
                break
            if x not in span:
                gens.append(x)
                span = _span_with(self.ambient, span, x)
        return tuple(gens)

    def elementary_rank(self, p: int) -> int:
        """The rank s of the largest elementary abelian p-subgroup, i.e. |H[p]| = p^s."""
        count = sum(1 for x in self.elements if all(p * c % d == 0 for c, d in zip(x, self.ambient.cyclic_orders)))
        rank = 0
        while count > 1:
            count //= p
            rank += 1
        return rank


def search_subgroups(
    ambient: FinAbGroup,
    target_order: int,
    candidates: Sequence[GroupElement],
    compatible: Optional[Callable[[Subgroup, GroupElement], bool]] = None,
    admissible: Optional[Callable[[Subgroup], bool]] = None,
) -> Iterator[Subgroup]:
    """Yield every subgroup of the given order that is reachable from {0} by adjoining candidate elements one at a time.

    Each intermediate subgroup has an order dividing the target order. `compatible(H, x)` decides whether x may be
    adjoined to H, and `admissible(H)` whether an intermediate subgroup is kept. Every subgroup is visited once; the
    yield order is the depth-first discovery order.
    """
    start = Subgroup.trivial(ambient)
    stack = [start]
    seen = {start.elements}
    while stack:
        subgroup = stack.pop()
        if subgroup.order == target_order:
            yield subgroup
            continue

        # x and u*x + h (u a unit mod ord(x), h in H) generate the same extension of H
        marked = set()
        for x in candidates:
            if x in subgroup or x in marked:
                continue
            if compatible is not None and not compatible(subgroup, x):
                continue
            order = ambient.element_order(x)
            for u in range(1, order):
                if gcd(u, order) == 1:
                    ux = ambient.scale(u, x)
                    marked.update(ambient.add(h, ux) for h in subgroup)

            child = subgroup.extend(x)
            if target_order % child.order or child.elements in seen:
                continue
            seen.add(child.elements)
            if admissible is not None and not admissible(child):
                continue
            stack.append(child)

    logger.debug("Visited %d subgroups of a group of order %d", len(seen), ambient.order)


def enumerate_subgroups_of_order(group: FinAbGroup, k: int, bound: Optional[int] = None) -> Iterator[Subgroup]:
    """Yield each subgroup of order k exactly once, ordered lexicographically by sorted element sets."""
    group.require_oracle_scale(bound)
    if k < 1 or group.order % k:
        return
    found = list(search_subgroups(group, k, list(group.elements())))
    yield from sorted(found, key=lambda subgroup: subgroup.elements)
