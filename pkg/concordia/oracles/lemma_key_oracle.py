from dataclasses import dataclass
from typing import Optional

from concordia.algebra import FinAbGroup
from concordia.linkform import LinkingForm, QmodZ, compose_forms, make_form
from concordia.obstruct import verify_lemma_key
from concordia.oracles.base import Oracle
from concordia.oracles.generators import choose, gen_cyclic_form, gen_hyperbolic_form, gen_unit, lift

RANDOM_CASES = 4

TRIVIAL_FORM = LinkingForm(FinAbGroup(()), ())


@dataclass
class LemmaCase:
    f1: LinkingForm
    f2: LinkingForm
    p: int

    @property
    def order(self) -> int:
        return self.f1.group.order * self.f2.group.order

    def __str__(self):
        return f"p={self.p}, f1 on {list(self.f1.group.cyclic_orders)}, f2 on {list(self.f2.group.cyclic_orders)}"


def _diagonal_form(orders, numerators) -> LinkingForm:
    size = len(orders)
    gram = [[QmodZ(numerators[i], orders[i]) if i == j else QmodZ(0) for j in range(size)] for i in range(size)]
    return make_form(FinAbGroup(tuple(orders)), gram)


def _gen_doubled_form(rng, gen_order):
    gen_block = gen_cyclic_form(rng, gen_order)

    def doubled_form():
        block = gen_block()
        return compose_forms([(1, block), (-1, block)])

    return doubled_form


def fixed_cases():
    """The instance with (Z/9)^2 against the trivial group, and the one with (Z/4)^4 against (Z/2)^2."""
    yield LemmaCase(_diagonal_form([9, 9], [1, -1]), TRIVIAL_FORM, 3)
    yield LemmaCase(_diagonal_form([4, 4, 4, 4], [1, -1, 1, -1]), _diagonal_form([2, 2], [1, 1]), 2)


class LemmaKeyOracle(Oracle):
    """Every metabolizer of f1 + (-f2) meets H_1(Y_1) in a subgroup containing (Z/p)^(n-m).

    Random instances pair f1 on (Z/p^2)^2n with a form f2 whose p-part has generating rank at most 2m < 2n.
    """

    NAME = "lemma-key"

    def generate_cases(self, rng, max_order):
        for case in fixed_cases():
            if case.order <= max_order:
                yield case

        for _ in range(RANDOM_CASES):
            p = rng.choice((2, 3))
            if p == 3:
                f1 = _diagonal_form([9, 9], [gen_unit(rng, 9)() for _ in range(2)])
                f2 = choose(rng, [lift(TRIVIAL_FORM), _gen_doubled_form(rng, lambda: rng.choice((5, 7)))])()
            else:
                f1 = _diagonal_form([4] * 4, [gen_unit(rng, 4)() for _ in range(4)])
                f2 = choose(
                    rng,
                    [
                        gen_cyclic_form(rng, lift(4)),
                        gen_hyperbolic_form(rng, lift(2)),
                        lambda: compose_forms([(1, gen_cyclic_form(rng, lift(2))()), (1, gen_cyclic_form(rng, lift(2))())]),
                    ],
                )()
            case = LemmaCase(f1, f2, p)
            if case.order <= max_order:
                yield case

    def check(self, case: LemmaCase, max_order: int) -> Optional[str]:
        verdict = verify_lemma_key(case.f1, case.f2, case.p, bound=max_order)
        if verdict.metabolizer_count == 0:
            return f"{case}: f1 + (-f2) has no metabolizer"
        if verdict.passed:
            return None
        generators = list(verdict.counterexample.generators)
        return f"{case}: metabolizer generated by {generators} misses (Z/{case.p})^{verdict.n - verdict.m}"

    def size(self, case: LemmaCase) -> int:
        return case.order
