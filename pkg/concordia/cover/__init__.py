from concordia.cover.annotations import declared_annotations
from concordia.cover.branched_cover import branched_double_cover, cover_homology
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
    self_sum,
)
from concordia.cover.normalize import nu_plus_normalize, vseq_for
from concordia.cover.parser import parse
