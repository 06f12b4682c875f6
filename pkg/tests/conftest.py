import pytest

from concordia.algebra import FinAbGroup
from concordia.dcalc import CoverDescription, SurgeryPiece, VSequence, vseq_thin
from concordia.linkform import QmodZ, make_form
from concordia.types import ORACLE_BOUND_ENV


@pytest.fixture(autouse=True)
def default_oracle_bound(monkeypatch):
    monkeypatch.delenv(ORACLE_BOUND_ENV, raising=False)


@pytest.fixture(scope="session")
def make_cover():
    def function(*pieces):
        """Build a cover from (sign, n) or (sign, n, sigma) tuples, where sigma selects the thin V-sequence."""
        return CoverDescription(
            tuple(
                SurgeryPiece(piece[0], piece[1], vseq_thin(piece[2]) if len(piece) > 2 else VSequence.zero())
                for piece in pieces
            )
        )

    return function


@pytest.fixture(scope="session")
def kstar_cover(make_cover):
    return make_cover((1, 25, -16), (-1, 23, -16), (-1, 25), (1, 23))


@pytest.fixture(scope="session")
def diagonal_form():
    def function(orders, numerators):
        """The form with gram matrix diag(numerators[i] / orders[i]) on the sum of the Z/orders[i]."""
        size = len(orders)
        gram = [[QmodZ(numerators[i], orders[i]) if i == j else QmodZ(0) for j in range(size)] for i in range(size)]
        return make_form(FinAbGroup(tuple(orders)), gram)

    return function
