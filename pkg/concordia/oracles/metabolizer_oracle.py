from math import isqrt
from typing import Optional

from concordia.algebra import enumerate_subgroups_of_order
from concordia.linkform import LinkingForm, enumerate_metabolizers, is_metabolizer, orthogonal_complement
from concordia.oracles.base import Oracle
from concordia.oracles.generators import choose, gen_cyclic_form, gen_form, gen_hyperbolic_form, gen_range

RANDOM_CASES = 20
MAX_FORM_ORDER = 256
BRUTE_FORCE_ORDER = 64


class MetabolizerOracle(Oracle):
    """Enumerated metabolizers of random nonsingular forms satisfy M = M^perp, do not change under negating the form, and
    agree with a brute-force filter over all subgroups of order sqrt|G| on small groups.
    """

    NAME = "metabolizers"

    def generate_cases(self, rng, max_order):
        gen_order = gen_range(rng, 2, 9)
        gen_block = choose(rng, [gen_cyclic_form(rng, gen_order), gen_hyperbolic_form(rng, gen_range(rng, 2, 5))])
        gen = gen_form(rng, gen_block, gen_range(rng, 1, 2), min(max_order, MAX_FORM_ORDER))
        for _ in range(RANDOM_CASES):
            yield gen()

    def check(self, form: LinkingForm, max_order: int) -> Optional[str]:
        orders = list(form.group.cyclic_orders)
        metabolizers = list(enumerate_metabolizers(form, bound=max_order))
        for metabolizer in metabolizers:
            if not is_metabolizer(form, metabolizer) or orthogonal_complement(form, metabolizer, max_order) != metabolizer:
                return f"form on {orders}: {list(metabolizer.generators)} is not its own orthogonal complement"

        if list(enumerate_metabolizers(form.negated(), bound=max_order)) != metabolizers:
            return f"form on {orders}: negating the form changes its metabolizers"

        order = form.group.order
        root = isqrt(order)
        if order <= BRUTE_FORCE_ORDER and root * root == order:
            expected = [s for s in enumerate_subgroups_of_order(form.group, root, max_order) if is_metabolizer(form, s)]
            if expected != metabolizers:
                return f"form on {orders}: found {len(metabolizers)} metabolizers, brute force finds {len(expected)}"
        return None

    def size(self, form: LinkingForm) -> int:
        return form.group.order
