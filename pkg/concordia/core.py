import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from sympy import primefactors

from concordia.algebra import GroupElement
from concordia.cover import branched_double_cover, declared_annotations, parse
from concordia.cover.expressions import KnotExpr
from concordia.dcalc import CoverDescription
from concordia.obstruct import (
    GzcBound,
    ObstructionReport,
    dbar_table as tabulate_dbar,
    gz_lower_bound,
    gzc_analysis,
    qualifying_primes,
)
from concordia.types import Config

logger = logging.getLogger(__name__)

COVER_CACHE_SIZE = 128


class Analyzer:
    """The Analyzer class is concordia's core component, that runs the obstruction pipeline and caches the covers."""

    def __init__(self):
        self.config = None
        self._reset_covers()

    def _reset_covers(self):
        self.cover_for = lru_cache(maxsize=COVER_CACHE_SIZE)(self._build_cover)

    def update_config(self, config):
        """Whenever one field of the config changed its value, the Analyzer's state is rebuilt from scratch."""
        if config == self.config:
            return

        self.config = config
        self._reset_covers()

    def _build_cover(self, text: str) -> Tuple[KnotExpr, CoverDescription]:
        """Parse the expression and rewrite it into its branched double cover."""
        expr = parse(text)
        return expr, branched_double_cover(expr)

    def run_report(self, text: str) -> ObstructionReport:
        expr, cover = self.cover_for(text)
        logger.info("Computing bounds for %s", expr)

        primes = self.config.primes or qualifying_primes(cover)
        by_prime = [gzc_analysis(cover, p) for p in primes]
        gzc = max(by_prime, key=lambda bound: (bound.bound, -bound.p), default=GzcBound(None, 0))
        gz = gz_lower_bound(cover)
        annotation = declared_annotations(expr)

        return ObstructionReport(
            knot=str(expr),
            cover=list(cover.pieces),
            homology_invariants=list(cover.group.canonical_invariants),
            gz_lower=gz,
            gzc=gzc,
            gzc_by_prime=by_prime,
            dbar_table=tabulate_dbar(cover, gzc.p) if gzc.p is not None else [],
            annotations=annotation.facts(),
            gz_lower_combined=max(gz, gzc.bound),
            topological_gap_lower=gzc.bound if annotation.topologically_slice else None,
        )


analyzer = Analyzer()


def report(text: str, config: Config = None) -> ObstructionReport:
    """Compute every lower bound on the (concordance) Z-genus of the knot.

    :param text: the knot expression
    :param config: pass a config object to select the primes at which the concordance Z-genus is bounded; by default,
        every prime meeting the obstruction's hypothesis is used and the best bound is reported
    """
    analyzer.update_config(config or Config.from_env())
    return analyzer.run_report(text)


def dbar_table(text: str, prime: Optional[int] = None) -> Tuple[Optional[int], List[Tuple[GroupElement, Fraction]]]:
    """Tabulate d-bar over the elements of order p of H_1 of the branched double cover.

    :param prime: the prime p; by default the smallest prime meeting the obstruction's hypothesis, or else the smallest
        prime dividing the order of H_1
    :return: the prime and the table; the table is empty if H_1 is trivial
    """
    _, cover = analyzer.cover_for(text)
    if prime is None:
        candidates = qualifying_primes(cover) or [int(p) for p in primefactors(cover.group.order)]
        if not candidates:
            return None, []
        prime = candidates[0]
    return prime, tabulate_dbar(cover, prime)
