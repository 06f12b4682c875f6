"""nu+ normalization of cable companions.

The branched double cover of the cable C(2,q;J) is q-surgery on J # J^r, so only the V-sequence of J # J^r is needed. The
rule set is minimal and never guesses V-data:

  - J^r is nu+-equivalent to J, so J # J^r is replaced by J # J;
  - a self-sum of c positive Whitehead doubles (unknot summands allowed) has J # J = WhD^2c, which is nu+-equivalent to
    T(2,4c+1) and hence the thin class of signature -4c;
  - a companion V[...] declares the V-sequence of J # J^r directly.

Everything else is refused with a NotNormalizableError.
"""

import logging
from typing import Union

from concordia.cover.expressions import ExplicitV, KnotExpr, Mirror, Sum, ThinClass, Unknot, WhiteheadDouble
from concordia.dcalc import VSequence, vseq_thin
from concordia.exceptions import NotNormalizableError

logger = logging.getLogger(__name__)


def _not_normalizable(message: str, expr: KnotExpr) -> NotNormalizableError:
    if expr.position is None:
        return NotNormalizableError(message)
    return NotNormalizableError(message, *expr.position)


def _strip_double_mirrors(expr: KnotExpr) -> KnotExpr:
    while isinstance(expr, Mirror) and isinstance(expr.child, Mirror):
        expr = expr.child.child
    return expr


def _whitehead_copies(expr: KnotExpr) -> int:
    """The number of Whitehead-double copies in a sum of Whitehead-double blocks and unknots."""
    expr = _strip_double_mirrors(expr)
    if isinstance(expr, Unknot):
        return 0
    if isinstance(expr, WhiteheadDouble):
        return expr.copies
    if isinstance(expr, Sum):
        return sum(_whitehead_copies(summand) for summand in expr.summands)
    raise _not_normalizable(f"No nu+ rule applies to {expr} # ({expr})^r; declare its V-sequence with V[...]", expr)


def nu_plus_normalize(companion: KnotExpr) -> Union[ThinClass, ExplicitV]:
    """Reduce J # J^r for the cable companion J to a single thin class or declared V-sequence."""
    companion = _strip_double_mirrors(companion)
    if isinstance(companion, ExplicitV):
        return companion

    copies = _whitehead_copies(companion)
    normalized = ThinClass(-4 * copies, position=companion.position)
    logger.debug("Normalized %s # (%s)^r to %s", companion, companion, normalized)
    return normalized


def vseq_for(normalized: Union[ThinClass, ExplicitV]) -> VSequence:
    """The V-sequence of a normalized companion sum."""
    if isinstance(normalized, ThinClass):
        return vseq_thin(normalized.sigma)
    if isinstance(normalized, ExplicitV):
        return VSequence(normalized.values)
    raise _not_normalizable(f"{normalized} is not a normalized companion sum", normalized)
