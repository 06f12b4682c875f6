from concordia.cover.expressions import KnotExpr, Kstar, Mirror, Sum, TorusKnot, Unknot, WhiteheadDouble
from concordia.types import Annotation


def declared_annotations(expr: KnotExpr) -> Annotation:
    """Return the declared facts about the knot; nothing is declared for cables, thin classes and V-sequences."""
    if isinstance(expr, Unknot):
        return Annotation(True, "bounds a disk", 0, "bounds a disk")
    if isinstance(expr, TorusKnot):
        return Annotation(
            False,
            f"signature {1 - expr.q} is nonzero",
            (expr.q - 1) // 2,
            f"Seifert surface of genus {(expr.q - 1) // 2}",
        )
    if isinstance(expr, WhiteheadDouble):
        return Annotation(
            True,
            "Whitehead doubles have Alexander polynomial 1",
            expr.copies,
            "one crossing change per Whitehead double unknots it",
        )
    if isinstance(expr, Kstar):
        return Annotation(
            True,
            "the cables are topologically concordant to the torus knots they cancel",
            1,
            "two crossing changes of opposite sign yield a smoothly slice knot",
        )
    if isinstance(expr, Mirror):
        return declared_annotations(expr.child)
    if isinstance(expr, Sum):
        return _sum_annotation([declared_annotations(summand) for summand in expr.summands])
    return Annotation()


def _sum_annotation(parts) -> Annotation:
    annotation = Annotation()
    if all(part.topologically_slice for part in parts):
        annotation.topologically_slice = True
        annotation.slice_source = "every summand is topologically slice"
    if all(part.smooth_genus_upper is not None for part in parts):
        annotation.smooth_genus_upper = sum(part.smooth_genus_upper for part in parts)
        annotation.genus_source = "sum of the summands' genus bounds"
    return annotation
