import random

import pytest

from concordia.cover import Kstar, Mirror, Sum, branched_double_cover, cover_homology, parse, self_sum
from concordia.dcalc import CoverDescription, SurgeryPiece, VSequence
from concordia.exceptions import NotNormalizableError, UnsupportedFeatureError
from concordia.linkform import is_nonsingular


def test_kstar_cover(kstar_cover):
    assert branched_double_cover(parse("Kstar")) == kstar_cover
    assert branched_double_cover(parse("C(2,25;D) # -C(2,23;D) # -T(2,25) # T(2,23)")) == kstar_cover


def test_kstar_homology(kstar_cover):
    group, form = cover_homology(branched_double_cover(Kstar()))
    assert group.canonical_invariants == (575, 575)
    assert form == kstar_cover.form
    assert is_nonsingular(form)


@pytest.mark.parametrize(
    "text, pieces",
    [
        ("U", ()),
        ("T(2,3)", ((1, 3),)),
        ("-T(2,3)", ((-1, 3),)),
        ("--T(2,7)", ((1, 7),)),
        ("-(T(2,3) # -T(2,5))", ((-1, 3), (1, 5))),
        ("T(2,3) # U # T(2,9)", ((1, 3), (1, 9))),
    ],
)
def test_torus_knot_covers(text, pieces):
    assert branched_double_cover(parse(text)) == CoverDescription(tuple(SurgeryPiece(s, n) for s, n in pieces))


def test_cable_covers():
    assert branched_double_cover(parse("C(2,3;U)")) == CoverDescription((SurgeryPiece(1, 3),))
    assert branched_double_cover(parse("C(2,9;V[2,1,1,0])")).pieces[0].vseq == VSequence((2, 1, 1, 0))
    assert branched_double_cover(parse("-C(2,5;WhD^1)")) == CoverDescription((SurgeryPiece(-1, 5, VSequence((1, 1, 0))),))


def test_self_sums(kstar_cover):
    assert branched_double_cover(self_sum(Kstar(), 3)) == kstar_cover.repeated(3)
    assert branched_double_cover(self_sum(Kstar(), 0)) == CoverDescription()


@pytest.mark.parametrize("text, column", [("D", 1), ("T(2,3) # thin(-4)", 10), ("-V[1,0]", 2)])
def test_bare_companions_are_unsupported(text, column):
    with pytest.raises(UnsupportedFeatureError) as excinfo:
        branched_double_cover(parse(text))
    assert (excinfo.value.line, excinfo.value.column) == (1, column)


def test_cable_over_thin_class_is_refused():
    with pytest.raises(NotNormalizableError) as excinfo:
        branched_double_cover(parse("C(2,3;thin(-4))"))
    assert (excinfo.value.line, excinfo.value.column) == (1, 7)


def test_cover_homology_of_self_sum():
    group, _ = cover_homology(branched_double_cover(parse("Kstar # Kstar")))
    assert group.canonical_invariants == (575, 575, 575, 575)
    group, form = cover_homology(branched_double_cover(parse("U")))
    assert group.order == 1
    assert is_nonsingular(form)


@pytest.mark.parametrize("seed", range(5))
def test_cover_rewrites_are_structural(gen_expr, seed):
    rng = random.Random(seed)
    checked = 0
    for _ in range(100):
        a, b = gen_expr(rng, depth=2), gen_expr(rng, depth=2)
        try:
            cover_a, cover_b = branched_double_cover(a), branched_double_cover(b)
        except (UnsupportedFeatureError, NotNormalizableError):
            continue
        checked += 1
        assert branched_double_cover(Mirror(a)) == cover_a.mirrored()
        assert branched_double_cover(Sum((a, b))) == cover_a + cover_b
        assert cover_a.group.order % 2 == 1
    assert checked > 0
