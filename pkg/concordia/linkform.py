import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt, lcm
from typing import Callable, Iterator, Optional, Sequence, Tuple

from sympy import primefactors

from concordia.algebra import FinAbGroup, GroupElement, Subgroup, search_subgroups
from concordia.exceptions import GroupMismatchError, InvalidArgumentError, InvalidFormError

logger = logging.getLogger(__name__)


class QmodZ:
    """An exact element of Q/Z, stored as a reduced fraction numerator/denominator with 0 <= numerator < denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator=0, denominator=1):
        value = Fraction(numerator, denominator) % 1
        self.numerator = value.numerator
        self.denominator = value.denominator

    @classmethod
    def of(cls, value) -> "QmodZ":
        if isinstance(value, QmodZ):
            return value
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other):
        return QmodZ.of(self.as_fraction() + QmodZ.of(other).as_fraction())

    def __sub__(self, other):
        return self + (-QmodZ.of(other))

    def __neg__(self):
        return QmodZ(-self.numerator, self.denominator)

    def __mul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return QmodZ(scalar * self.numerator, self.denominator)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QmodZ.of(other)
        if not isinstance(other, QmodZ):
            return NotImplemented
        return (self.numerator, self.denominator) == (other.numerator, other.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __bool__(self):
        return self.numerator != 0

    def __repr__(self):
        return f"QmodZ({self.numerator}, {self.denominator})"

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class LinkingForm:
    """A symmetric bilinear form on `group` with values in Q/Z, given by its Gram matrix on the cyclic generators."""

    group: FinAbGroup
    gram: Tuple[Tuple[QmodZ, ...], ...]

    def __post_init__(self):
        gram = tuple(tuple(QmodZ.of(entry) for entry in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)

        orders = self.group.cyclic_orders
        if len(gram) != len(orders) or any(len(row) != len(orders) for row in gram):
            raise InvalidFormError(f"Gram matrix has to be {len(orders)}x{len(orders)} to match the group {list(orders)}")
        for i, row in enumerate(gram):
            for j, entry in enumerate(row):
                if entry != gram[j][i]:
                    raise InvalidFormError(f"Gram matrix is not symmetric at ({i}, {j}): {entry} != {gram[j][i]}")
                if orders[i] * entry:
                    raise InvalidFormError(f"Entry {entry} at ({i}, {j}) is not well-defined on Z/{orders[i]}")

    @cached_property
    def _denominator(self) -> int:
        return lcm(*(entry.denominator for row in self.gram for entry in row))

    @cached_property
    def _entries(self) -> Tuple[Tuple[int, int, int], ...]:
        """The nonzero Gram entries as (i, j, a) with gram[i][j] = a / denominator."""
        n = self._denominator
        return tuple(
            (i, j, entry.numerator * (n // entry.denominator))
            for i, row in enumerate(self.gram)
            for j, entry in enumerate(row)
            if entry
        )

    def _pair_numerator(self, x: GroupElement, y: GroupElement) -> int:
        return sum(x[i] * y[j] * a for i, j, a in self._entries) % self._denominator

    def pair(self, x: GroupElement, y: GroupElement) -> QmodZ:
        return QmodZ(self._pair_numerator(x, y), self._denominator)

    def pair_vanishes(self, x: GroupElement, y: GroupElement) -> bool:
        return self._pair_numerator(x, y) == 0

    def negated(self) -> "LinkingForm":
        return LinkingForm(self.group, tuple(tuple(-entry for entry in row) for row in self.gram))


def make_form(group: FinAbGroup, gram: Sequence[Sequence]) -> LinkingForm:
    """Validate and build a linking form; entries may be QmodZ values, fractions or integers."""
    return LinkingForm(group, tuple(tuple(QmodZ.of(entry) for entry in row) for row in gram))


def is_nonsingular(form: LinkingForm) -> bool:
    """Whether x -> form(x, .) is injective.

    A nonzero kernel contains an element of prime order, so it suffices to test the elements of order p for every prime
    p dividing the group order against the cyclic generators.
    """
    group = form.group
    basis = [tuple(int(i == j) for i in range(len(group.cyclic_orders))) for j in range(len(group.cyclic_orders))]
    for p in primefactors(group.order):
        for x in group.socle(p):
            if x == group.zero:
                continue
            if all(form.pair_vanishes(x, e) for e in basis):
                return False
    return True


def compose_forms(parts: Sequence[Tuple[int, LinkingForm]]) -> LinkingForm:
    """The orthogonal direct sum of the given forms, negating each form whose sign is -1."""
    orders, blocks = [], []
    for sign, form in parts:
        if sign not in (1, -1):
            raise InvalidArgumentError(f"Sign has to be +1 or -1, got {sign}")
        orders.extend(form.group.cyclic_orders)
        blocks.append(form if sign == 1 else form.negated())

    gram = [[QmodZ(0)] * len(orders) for _ in orders]
    offset = 0
    for block in blocks:
        size = len(block.group.cyclic_orders)
        for i in range(size):
            for j in range(size):
                gram[offset + i][offset + j] = block.gram[i][j]
        offset += size
    return LinkingForm(FinAbGroup(tuple(orders)), tuple(tuple(row) for row in gram))


def _check_ambient(form: LinkingForm, subgroup: Subgroup):
    if subgroup.ambient != form.group:
        raise GroupMismatchError(
            f"Subgroup of {list(subgroup.ambient.cyclic_orders)} does not live in {list(form.group.cyclic_orders)}"
        )


def orthogonal_complement(form: LinkingForm, subgroup: Subgroup, bound: Optional[int] = None) -> Subgroup:
    """Return {x : form(x, s) = 0 for all s in subgroup}."""
    _check_ambient(form, subgroup)
    form.group.require_oracle_scale(bound)
    gens = subgroup.generators
    return Subgroup(form.group, tuple(x for x in form.group.elements() if all(form.pair_vanishes(x, s) for s in gens)))


def is_metabolizer(form: LinkingForm, subgroup: Subgroup) -> bool:
    """Whether |M|^2 = |G| and the form vanishes on M x M; for nonsingular forms this is equivalent to M = M^perp."""
    _check_ambient(form, subgroup)
    if subgroup.order ** 2 != form.group.order:
        return False
    gens = subgroup.generators
    return all(form.pair_vanishes(a, b) for a in gens for b in gens)


def iter_metabolizers(
    form: LinkingForm,
    admissible_element: Optional[Callable[[GroupElement], bool]] = None,
    bound: Optional[int] = None,
) -> Iterator[Subgroup]:
    """Yield metabolizers in discovery order, growing isotropic subgroups from {0}.

    If `admissible_element` is given, only metabolizers all of whose elements satisfy it are searched for; the condition
    is imposed on every intermediate subgroup, which prunes the search.
    """
    group = form.group
    group.require_oracle_scale(bound)
    root = isqrt(group.order)
    if root * root != group.order:
        return

    good = None
    if admissible_element is not None:
        good = frozenset(x for x in group.elements() if admissible_element(x))
    candidates = [x for x in group.elements() if form.pair_vanishes(x, x) and (good is None or x in good)]
    logger.debug("Searching metabolizers of order %d among %d isotropic elements", root, len(candidates))

    yield from search_subgroups(
        group,
        root,
        candidates,
        compatible=lambda subgroup, x: all(form.pair_vanishes(x, g) for g in subgroup.generators),
        admissible=None if good is None else (lambda subgroup: subgroup.members <= good),
    )


def enumerate_metabolizers(form: LinkingForm, bound: Optional[int] = None) -> Iterator[Subgroup]:
    """Yield every metabolizer exactly once, ordered lexicographically by sorted element sets."""
    yield from sorted(iter_metabolizers(form, bound=bound), key=lambda subgroup: subgroup.elements)


def surgery_linking_form(n: int, sign: int) -> LinkingForm:
    """The linking form of +-S^3_n(K) on Z/n, with form(1, 1) = -sign/n."""
    if n <= 0:
        raise InvalidArgumentError(f"Surgery coefficient has to be positive, got {n}")
    if sign not in (1, -1):
        raise InvalidArgumentError(f"Sign has to be +1 or -1, got {sign}")
    return LinkingForm(FinAbGroup((n,)), ((QmodZ(-sign, n),),))
