import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Iterator, List, Optional, Tuple

from concordia.exceptions import ResourceLimitError
from concordia.types import oracle_bound

logger = logging.getLogger(__name__)


@dataclass
class OracleResult:
    """The outcome of one oracle run.

    Fields:
        failures: (size, description) of every failing case; the size orders the failures so that the smallest one can
            be reported
    """

    suite: str
    seed: int
    cases: int = 0
    failures: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def smallest_failure(self) -> Optional[str]:
        if not self.failures:
            return None
        return min(self.failures)[1]

    def summary(self) -> str:
        if self.passed:
            return f"{self.suite} (seed {self.seed}): {self.cases} cases passed"
        return (
            f"{self.suite} (seed {self.seed}): {len(self.failures)} of {self.cases} cases failed\n"
            f"smallest failing case: {self.smallest_failure}"
        )


class Oracle(ABC):
    """This is the base class for all oracle suites.

    A suite generates cases from a seeded random generator and checks each of them exhaustively. Cases are small enough
    that the checks materialize full element sets; no case exceeds the resolved maximum group order.
    """

    NAME = None

    def run(self, seed: int = 0, max_order: Optional[int] = None) -> OracleResult:
        """Run the suite; the result only depends on the seed and the maximum order.

        :param max_order: the largest group order a case may reach; defaults to the configured oracle bound and must not
            exceed it
        """
        bound = oracle_bound()
        if max_order is None:
            max_order = bound
        if max_order > bound:
            raise ResourceLimitError(f"Maximum order {max_order} exceeds the oracle bound {bound}")

        result = OracleResult(self.NAME, seed)
        for case in self.generate_cases(random.Random(seed), max_order):
            result.cases += 1
            failure = self.check(case, max_order)
            if failure is not None:
                logger.debug("%s case %d failed: %s", self.NAME, result.cases, failure)
                result.failures.append((self.size(case), failure))
        return result

    @abstractmethod
    def generate_cases(self, rng: random.Random, max_order: int) -> Iterator[Any]:
        """Yield the cases of this suite, drawing all randomness from rng."""
        pass

    @abstractmethod
    def check(self, case, max_order: int) -> Optional[str]:
        """Check one case.

        :return: None if the case passes, a description of the case and the failure otherwise
        """
        pass

    @abstractmethod
    def size(self, case) -> int:
        """The size of a case, used to report the smallest failure."""
        pass
