from math import gcd, prod

from concordia.algebra import FinAbGroup
from concordia.dcalc import CoverDescription, SurgeryPiece, VSequence, vseq_thin
from concordia.exceptions import InvalidArgumentError
from concordia.linkform import LinkingForm, QmodZ, compose_forms

MAX_ATTEMPTS = 1000


def lift(value):
    return lambda: value


def choose(rng, generators):
    return lambda: rng.choice(generators)()


def gen_range(rng, start, stop):
    return lambda: rng.randint(start, stop)


def gen_odd(rng, start, stop):
    return lambda: rng.choice([k for k in range(start, stop + 1) if k % 2])


def gen_list(generator, gen_length):
    return lambda: [generator() for _ in range(gen_length())]


def gen_unit(rng, n):
    units = [u for u in range(1, max(n, 2)) if gcd(u, n) == 1]
    return lambda: rng.choice(units)


def gen_cyclic_form(rng, gen_order):
    """A nonsingular form u/n on Z/n for a random unit u."""

    def cyclic_form():
        n = gen_order()
        u = gen_unit(rng, n)()
        return LinkingForm(FinAbGroup((n,)), ((QmodZ(u, n),),))

    return cyclic_form


def gen_hyperbolic_form(rng, gen_order):
    """The hyperbolic form on Z/n + Z/n, which pairs the two generators to 1/n."""

    def hyperbolic_form():
        n = gen_order()
        return LinkingForm(FinAbGroup((n, n)), ((QmodZ(0), QmodZ(1, n)), (QmodZ(1, n), QmodZ(0))))

    return hyperbolic_form


def gen_form(rng, gen_block, gen_length, max_order):
    """An orthogonal sum of random blocks, optionally doubled as f + (-f); retried until the order fits max_order."""

    def form():
        for _ in range(MAX_ATTEMPTS):
            blocks = gen_list(gen_block, gen_length)()
            parts = [(1, block) for block in blocks]
            if rng.random() < 0.5:
                parts += [(-1, block) for block in blocks]
            if prod(block.group.order for _, block in parts) <= max_order:
                return compose_forms(parts)
        raise InvalidArgumentError(f"No random form fits into the order bound {max_order}")

    return form


def gen_vseq(rng):
    return choose(rng, [lift(VSequence.zero()), lambda: vseq_thin(-2 * rng.randint(1, 5))])


def gen_piece(rng, gen_n):
    return lambda: SurgeryPiece(rng.choice((1, -1)), gen_n(), gen_vseq(rng)())


def gen_cover(rng, gen_n, gen_length, max_order):
    """A random cover whose group has order at most max_order."""

    def cover():
        for _ in range(MAX_ATTEMPTS):
            pieces = gen_list(gen_piece(rng, gen_n), gen_length)()
            if prod(piece.n for piece in pieces) <= max_order:
                return CoverDescription(tuple(pieces))
        raise InvalidArgumentError(f"No random cover fits into the order bound {max_order}")

    return cover
