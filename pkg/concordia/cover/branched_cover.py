import logging
from typing import Tuple

from concordia.algebra import FinAbGroup
from concordia.cover.expressions import (
    Cable,
    ExplicitV,
    KnotExpr,
    Kstar,
    Mirror,
    Sum,
    ThinClass,
    TorusKnot,
    Unknot,
    WhiteheadDouble,
)
from concordia.cover.normalize import nu_plus_normalize, vseq_for
from concordia.dcalc import CoverDescription, SurgeryPiece
from concordia.exceptions import UnsupportedFeatureError
from concordia.linkform import LinkingForm

logger = logging.getLogger(__name__)


def branched_double_cover(expr: KnotExpr) -> CoverDescription:
    """Rewrite a knot expression into a surgery description of its 2-fold branched cover.

    Sigma(T(2,q)) = +S^3_q(U), Sigma(C(2,q;J)) = +S^3_q(J # J^r), mirrors reverse the orientation of every piece, and
    connected sums concatenate.
    """
    if isinstance(expr, Unknot):
        return CoverDescription(())
    if isinstance(expr, TorusKnot):
        return CoverDescription((SurgeryPiece(1, expr.q),))
    if isinstance(expr, Cable):
        return CoverDescription((SurgeryPiece(1, expr.q, vseq_for(nu_plus_normalize(expr.companion))),))
    if isinstance(expr, Mirror):
        return branched_double_cover(expr.child).mirrored()
    if isinstance(expr, Sum):
        cover = CoverDescription(())
        for summand in expr.summands:
            cover = cover + branched_double_cover(summand)
        return cover
    if isinstance(expr, Kstar):
        cover = branched_double_cover(expr.expand())
        logger.debug("Cover of Kstar: %s", cover)
        return cover
    if isinstance(expr, (WhiteheadDouble, ThinClass, ExplicitV)):
        message = f"{expr} is only supported as the companion of a cable"
        if expr.position is None:
            raise UnsupportedFeatureError(message)
        raise UnsupportedFeatureError(message, *expr.position)
    raise UnsupportedFeatureError(f"Unsupported knot expression {expr!r}")


def cover_homology(cover: CoverDescription) -> Tuple[FinAbGroup, LinkingForm]:
    """H_1 of the cover with its linking form."""
    return cover.group, cover.form
