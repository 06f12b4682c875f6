import pytest

from concordia.cover.expressions import (
    Cable,
    ExplicitV,
    Kstar,
    Mirror,
    Sum,
    ThinClass,
    TorusKnot,
    Unknot,
    WhiteheadDouble,
)
from concordia.dcalc import vseq_thin


@pytest.fixture(scope="session")
def gen_expr():
    def function(rng, depth=3):
        """Draw a random knot expression whose nesting depth is at most `depth`."""

        def leaf():
            kind = rng.randrange(7)
            if kind == 0:
                return Unknot()
            if kind == 1:
                return Kstar()
            if kind == 2:
                return TorusKnot(rng.randrange(3, 40, 2))
            if kind == 3:
                return WhiteheadDouble(rng.randint(1, 8))
            if kind == 4:
                return ThinClass(2 * rng.randint(-10, 5))
            if kind == 5:
                return ExplicitV(vseq_thin(-2 * rng.randint(0, 8)).values)
            return TorusKnot(3)

        def node(level):
            if level == 0 or rng.random() < 0.3:
                return leaf()
            kind = rng.randrange(3)
            if kind == 0:
                return Mirror(node(level - 1))
            if kind == 1:
                return Sum(tuple(node(level - 1) for _ in range(rng.randint(2, 3))))
            return Cable(rng.randrange(3, 40, 2), node(level - 1))

        return node(depth)

    return function
