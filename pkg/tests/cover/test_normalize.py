import pytest

from concordia.cover import ExplicitV, Mirror, Sum, ThinClass, TorusKnot, Unknot, WhiteheadDouble, nu_plus_normalize, parse
from concordia.cover.normalize import vseq_for
from concordia.dcalc import VSequence, vseq_thin
from concordia.exceptions import NotNormalizableError


@pytest.mark.parametrize(
    "companion, sigma",
    [
        ("D", -16),
        ("WhD^1", -4),
        ("D # WhD^2", -24),
        ("D # U # D", -32),
        ("U", 0),
        ("--D", -16),
        ("(D # U) # WhD^3", -28),
    ],
)
def test_whitehead_sums_normalize_to_thin_classes(companion, sigma):
    assert nu_plus_normalize(parse(companion)) == ThinClass(sigma)


def test_explicit_vseq_passes_through():
    companion = ExplicitV((2, 1, 1, 0))
    assert nu_plus_normalize(companion) is companion
    assert nu_plus_normalize(Mirror(Mirror(companion))) is companion
    assert vseq_for(companion) == VSequence((2, 1, 1, 0))


def test_vseq_of_whitehead_double():
    assert vseq_for(nu_plus_normalize(WhiteheadDouble(4))) == vseq_thin(-16)
    assert vseq_for(nu_plus_normalize(Unknot())).is_zero()


@pytest.mark.parametrize("companion", ["T(2,3)", "-D", "thin(-4)", "Kstar", "C(2,3;D)", "D # T(2,3)", "D # V[1,0]"])
def test_companions_without_rule(companion):
    with pytest.raises(NotNormalizableError):
        nu_plus_normalize(parse(companion))


def test_refusal_is_located():
    with pytest.raises(NotNormalizableError) as excinfo:
        nu_plus_normalize(parse("D # T(2,3)"))
    assert (excinfo.value.line, excinfo.value.column) == (1, 5)


def test_refusal_without_position():
    with pytest.raises(NotNormalizableError) as excinfo:
        nu_plus_normalize(Sum((WhiteheadDouble(4), TorusKnot(3))))
    assert excinfo.value.line is None


def test_vseq_for_rejects_unnormalized_companion():
    with pytest.raises(NotNormalizableError):
        vseq_for(Unknot())
