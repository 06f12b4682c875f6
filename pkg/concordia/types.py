import os
from dataclasses import dataclass, field
from typing import List, Optional

import pydantic

DEFAULT_ORACLE_BOUND = 2 ** 12
ORACLE_BOUND_ENV = "CONCORDIA_ORACLE_BOUND"


@pydantic.dataclasses.dataclass
class Config:
    """The main config object.

    Fields:
        oracle_bound: the largest group order for which operations materialize full element sets, i.e. subgroup and
            metabolizer enumeration, orthogonal complements and the oracle suites (optional)
        primes: the primes at which the concordance Z-genus obstruction is evaluated; if empty, every prime meeting the
            obstruction's hypothesis is used (optional)
    """

    oracle_bound: Optional[int] = DEFAULT_ORACLE_BOUND
    primes: Optional[List[int]] = field(default_factory=list)

    @pydantic.validator("oracle_bound")
    def positive_oracle_bound(cls, value):
        if value is not None and value < 1:
            raise ValueError(f"The oracle bound has to be positive, got {value}")
        return value

    @classmethod
    def from_env(cls, **kwargs):
        """Create a config, taking the oracle bound from the environment unless it is passed explicitly."""
        if "oracle_bound" not in kwargs and os.environ.get(ORACLE_BOUND_ENV):
            kwargs["oracle_bound"] = int(os.environ[ORACLE_BOUND_ENV])
        return cls(**kwargs)


def oracle_bound(bound: Optional[int] = None) -> int:
    """Resolve the oracle bound: an explicitly given bound wins over the configured one."""
    if bound is not None:
        return bound
    return Config.from_env().oracle_bound or DEFAULT_ORACLE_BOUND


@dataclass
class Token:
    """
    Fields:
        kind: one of `INT`, `NAME`, or the punctuation character itself (e.g. `#`)
        line, column: the position of the token's first character, both starting at 1
    """

    kind: str
    text: str
    start_char: int
    end_char: int
    line: int
    column: int


@dataclass
class Annotation:
    """Facts about a knot that are declared from the literature and carried into reports verbatim, never computed.

    Fields:
        topologically_slice: whether the knot is known to be topologically slice; None if nothing is declared
        smooth_genus_upper: a known upper bound on the smooth 4-genus; None if nothing is declared
    """

    topologically_slice: Optional[bool] = None
    slice_source: str = ""
    smooth_genus_upper: Optional[int] = None
    genus_source: str = ""

    def facts(self) -> List[dict]:
        facts = []
        if self.topologically_slice is not None:
            fact = "topologically slice" if self.topologically_slice else "not topologically slice"
            facts.append({"fact": fact, "source": self.slice_source})
        if self.smooth_genus_upper is not None:
            facts.append({"fact": f"smooth 4-genus <= {self.smooth_genus_upper}", "source": self.genus_source})
        return facts
