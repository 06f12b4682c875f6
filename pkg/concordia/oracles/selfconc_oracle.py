from math import isqrt
from typing import Optional

from concordia.dcalc import CoverDescription
from concordia.obstruct import concordance_metabolizer_test, gzc_lower_bound, qualifying_primes
from concordia.oracles.base import Oracle
from concordia.oracles.generators import gen_cover, gen_odd, gen_range

RANDOM_CASES = 100
MAX_PIECE = 15


class SelfConcordanceOracle(Oracle):
    """Every knot is concordant to itself.

    For random covers c with odd surgery coefficients at most 15, the diagonal metabolizer of c # -c passes the
    concordance test, and the concordance Z-genus bound of c # -c vanishes at every prime where it applies.
    """

    NAME = "selfconc"

    def generate_cases(self, rng, max_order):
        # c # -c has order |H_1(c)|^2
        limit = isqrt(max_order)
        gen = gen_cover(rng, gen_odd(rng, 1, MAX_PIECE), gen_range(rng, 1, 3), limit)
        for _ in range(RANDOM_CASES):
            yield gen()

    def check(self, cover: CoverDescription, max_order: int) -> Optional[str]:
        if not concordance_metabolizer_test(cover, cover, bound=max_order):
            return f"{cover}: no metabolizer of the cover and its mirror has vanishing d"

        doubled = cover + cover.mirrored()
        for p in qualifying_primes(doubled):
            bound = gzc_lower_bound(doubled, p)
            if bound != 0:
                return f"{doubled}: concordance Z-genus bound {bound} at p={p} for a slice knot"
        return None

    def size(self, cover: CoverDescription) -> int:
        return cover.group.order
