from dataclasses import dataclass, field
from typing import Optional, Tuple

from concordia.exceptions import InvalidArgumentError

Position = Optional[Tuple[int, int]]


class KnotExpr:
    """The base class of all knot-expression nodes."""

    position: Position = None

    def children(self) -> Tuple["KnotExpr", ...]:
        return ()


@dataclass(frozen=True)
class Unknot(KnotExpr):
    position: Position = field(default=None, compare=False, repr=False)

    def __str__(self):
        return "U"


@dataclass(frozen=True)
class TorusKnot(KnotExpr):
    """The (2, q)-torus knot T(2,q) for odd q >= 3."""

    q: int
    position: Position = field(default=None, compare=False, repr=False)

    def __str__(self):
        return f"T(2,{self.q})"


@dataclass(frozen=True)
class Cable(KnotExpr):
    """The (2, q)-cable of the companion, with longitudinal winding 2."""

    q: int
    companion: KnotExpr
    position: Position = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.companion,)

    def __str__(self):
        return f"C(2,{self.q};{self.companion})"


@dataclass(frozen=True)
class Mirror(KnotExpr):
    child: KnotExpr
    position: Position = field(default=None, compare=False, repr=False)

    def children(self):
        return (self.child,)

    def __str__(self):
        if isinstance(self.child, Sum):
            return f"-({self.child})"
        return f"-{self.child}"


@dataclass(frozen=True)
class Sum(KnotExpr):
    """The connected sum of at least two knots."""

    summands: Tuple[KnotExpr, ...]
    position: Position = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if len(self.summands) < 2:
            raise InvalidArgumentError(f"A connected sum needs at least two summands, got {len(self.summands)}")

    def children(self):
        return self.summands

    def __str__(self):
        return " # ".join(f"({summand})" if isinstance(summand, Sum) else str(summand) for summand in self.summands)


@dataclass(frozen=True)
class WhiteheadDouble(KnotExpr):
    """The connected self-sum of `copies` positive Whitehead doubles of the right-handed trefoil; 4 copies print as D."""

    copies: int = 4
    position: Position = field(default=None, compare=False, repr=False)

    def __str__(self):
        return "D" if self.copies == 4 else f"WhD^{self.copies}"


@dataclass(frozen=True)
class ThinClass(KnotExpr):
    """Any thin knot with signature sigma, standing for its nu+ class."""

    sigma: int
    position: Position = field(default=None, compare=False, repr=False)

    def __str__(self):
        return f"thin({self.sigma})"


@dataclass(frozen=True)
class ExplicitV(KnotExpr):
    """A declared V-sequence. As a cable companion J it declares the V-sequence of J # J^r."""

    values: Tuple[int, ...]
    position: Position = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __str__(self):
        return "V[" + ",".join(str(v) for v in self.values) + "]"


@dataclass(frozen=True)
class Kstar(KnotExpr):
    """The knot C(2,25;D) # -C(2,23;D) # -T(2,25) # T(2,23)."""

    position: Position = field(default=None, compare=False, repr=False)

    def expand(self) -> Sum:
        d = WhiteheadDouble(4)
        return Sum((Cable(25, d), Mirror(Cable(23, d)), Mirror(TorusKnot(25)), TorusKnot(23)), position=self.position)

    def __str__(self):
        return "Kstar"


def self_sum(expr: KnotExpr, n: int) -> KnotExpr:
    """The n-fold connected self-sum; the empty sum is the unknot."""
    if n < 0:
        raise InvalidArgumentError(f"Number of summands has to be nonnegative, got {n}")
    if n == 0:
        return Unknot()
    if n == 1:
        return expr
    return Sum((expr,) * n)
