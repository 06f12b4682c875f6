"""The correction-term calculus.

Surgery pieces +-S^3_n(K) carry the V-sequence of K; their correction terms follow from the lens-space formula and the
Ni-Wu surgery formula, negate under orientation reversal and add up under connected sums. The Spin^c structure with
label i of S^3_n(K) is identified with the element i of Z/n; i = 0 is the spin structure.
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence, Tuple

from concordia.algebra import FinAbGroup, GroupElement
from concordia.exceptions import GroupMismatchError, InvalidArgumentError, InvalidVSequenceError
from concordia.linkform import LinkingForm, compose_forms, surgery_linking_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VSequence:
    """A nonincreasing, eventually zero sequence V_0, V_1, ... of nonnegative integers.

    Only the entries up to and including the first zero are stored; every later entry is zero. Consecutive entries drop
    by at most one.
    """

    values: Tuple[int, ...] = (0,)

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise InvalidVSequenceError("A V-sequence needs at least one entry")
        if any(v < 0 for v in values):
            raise InvalidVSequenceError(f"V-sequence entries have to be nonnegative, got {list(values)}")
        if values[-1] != 0:
            raise InvalidVSequenceError(f"A V-sequence has to end with 0, got {list(values)}")
        for i, (current, following) in enumerate(zip(values, values[1:])):
            if not current - 1 <= following <= current:
                raise InvalidVSequenceError(f"V-sequence steps from {current} to {following} at index {i + 1}")
        object.__setattr__(self, "values", values[: values.index(0) + 1])

    @classmethod
    def zero(cls) -> "VSequence":
        return cls((0,))

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise InvalidArgumentError(f"V-sequence index has to be nonnegative, got {i}")
        return self.values[i] if i < len(self.values) else 0

    def is_zero(self) -> bool:
        return self.values == (0,)


def vseq_thin(sigma: int) -> VSequence:
    """The V-sequence of a thin knot with signature sigma: V_i = max(ceil(-(sigma + 2i) / 4), 0)."""
    if sigma % 2:
        raise InvalidArgumentError(f"The signature of a knot is even, got {sigma}")

    values = []
    i = 0
    while True:
        v = max(-((sigma + 2 * i) // 4), 0)
        values.append(v)
        if v == 0:
            break
        i += 1
    return VSequence(tuple(values))


def d_lens(n: int, i: int) -> Fraction:
    """The correction term of S^3_n(U) at label i: (n - 2i)^2 / (4n) - 1/4."""
    if n <= 0:
        raise InvalidArgumentError(f"Surgery coefficient has to be positive, got {n}")
    if not 0 <= i < n:
        raise InvalidArgumentError(f"Spin^c label {i} is out of range [0, {n})")
    return Fraction((n - 2 * i) ** 2, 4 * n) - Fraction(1, 4)


@dataclass(frozen=True)
class SurgeryPiece:
    """The oriented 3-manifold sign * S^3_n(K), where vseq is the V-sequence of K."""

    sign: int
    n: int
    vseq: VSequence = field(default_factory=VSequence.zero)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidArgumentError(f"Sign has to be +1 or -1, got {self.sign}")
        if self.n < 1 or self.n % 2 == 0:
            raise InvalidArgumentError(f"Surgery coefficient has to be a positive odd integer, got {self.n}")

    def mirrored(self) -> "SurgeryPiece":
        return replace(self, sign=-self.sign)

    def __str__(self):
        sign = "+" if self.sign == 1 else "-"
        return f"{sign}S^3_{self.n}({list(self.vseq.values)})"


@lru_cache(maxsize=None)
def d_surgery(piece: SurgeryPiece, i: int) -> Fraction:
    d = d_lens(piece.n, i) - 2 * max(piece.vseq[i], piece.vseq[piece.n - i])
    return d if piece.sign == 1 else -d


def dbar_piece(piece: SurgeryPiece, i: int) -> Fraction:
    return d_surgery(piece, i) - d_surgery(piece, 0)


@dataclass(frozen=True)
class CoverDescription:
    """A connected sum of surgery pieces; H_1 is the direct sum of the Z/n_j, with one coordinate per piece."""

    pieces: Tuple[SurgeryPiece, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    @cached_property
    def group(self) -> FinAbGroup:
        return FinAbGroup(tuple(piece.n for piece in self.pieces))

    @cached_property
    def form(self) -> LinkingForm:
        return compose_forms([(piece.sign, surgery_linking_form(piece.n, 1)) for piece in self.pieces])

    def mirrored(self) -> "CoverDescription":
        """The cover with reversed orientation, i.e. the cover of the mirror."""
        return CoverDescription(tuple(piece.mirrored() for piece in self.pieces))

    def repeated(self, n: int) -> "CoverDescription":
        """The cover of the n-fold connected self-sum."""
        if n < 0:
            raise InvalidArgumentError(f"Number of summands has to be nonnegative, got {n}")
        return CoverDescription(self.pieces * n)

    def __add__(self, other: "CoverDescription") -> "CoverDescription":
        return CoverDescription(self.pieces + other.pieces)

    def __len__(self):
        return len(self.pieces)

    def __str__(self):
        return " # ".join(str(piece) for piece in self.pieces) or "S^3"


def _labels(cover: CoverDescription, z: Sequence[int]) -> GroupElement:
    if len(z) != len(cover.pieces):
        raise GroupMismatchError(f"Element {tuple(z)} does not live in {list(cover.group.cyclic_orders)}")
    return cover.group.reduce(z)


def dbar_sum(cover: CoverDescription, z: Sequence[int]) -> Fraction:
    """d-bar of the connected sum at the Spin^c structure labeled z, i.e. the sum of the pieces' d-bar values."""
    return sum((dbar_piece(piece, i) for piece, i in zip(cover.pieces, _labels(cover, z))), Fraction(0))


def d_sum(cover: CoverDescription, z: Sequence[int]) -> Fraction:
    """The correction term of the connected sum at the Spin^c structure labeled z."""
    return sum((d_surgery(piece, i) for piece, i in zip(cover.pieces, _labels(cover, z))), Fraction(0))
