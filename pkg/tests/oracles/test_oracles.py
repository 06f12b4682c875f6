import random
from math import isqrt

import pytest

import concordia.oracles
from concordia.exceptions import ResourceLimitError, UnknownSuiteError
from concordia.linkform import surgery_linking_form
from concordia.obstruct import verify_lemma_key
from concordia.oracles.base import Oracle, OracleResult
from concordia.oracles.lemma_key_oracle import LemmaCase, LemmaKeyOracle, fixed_cases
from concordia.oracles.metabolizer_oracle import MetabolizerOracle
from concordia.oracles.selfconc_oracle import SelfConcordanceOracle


class ParityOracle(Oracle):
    """Fails on every odd case."""

    NAME = "parity"

    def generate_cases(self, rng, max_order):
        for _ in range(10):
            yield rng.randint(1, max_order)

    def check(self, case, max_order):
        return None if case % 2 == 0 else f"{case} is odd"

    def size(self, case):
        return case


def test_load():
    assert concordia.oracles.load("lemma-key") is LemmaKeyOracle
    assert concordia.oracles.load("metabolizers") is MetabolizerOracle
    assert concordia.oracles.load("selfconc") is SelfConcordanceOracle
    with pytest.raises(UnknownSuiteError):
        concordia.oracles.load("nope")


def test_suite_names_match():
    assert [concordia.oracles.load(suite).NAME for suite in concordia.oracles.SUITES] == list(concordia.oracles.SUITES)


def test_failures_report_smallest_case():
    result = ParityOracle().run(seed=3, max_order=1000)
    assert result.cases == 10
    assert not result.passed
    smallest = min(size for size, _ in result.failures)
    assert result.smallest_failure == f"{smallest} is odd"
    assert result.summary().endswith(f"\nsmallest failing case: {smallest} is odd")


def test_runs_are_reproducible():
    assert ParityOracle().run(seed=7, max_order=1000) == ParityOracle().run(seed=7, max_order=1000)


def test_max_order_is_capped_by_oracle_bound():
    with pytest.raises(ResourceLimitError):
        ParityOracle().run(max_order=4097)
    assert ParityOracle().run(max_order=4096).cases == 10


def test_passing_result_summary():
    result = OracleResult("selfconc", 0, cases=100)
    assert result.passed
    assert result.smallest_failure is None
    assert result.summary() == "selfconc (seed 0): 100 cases passed"


@pytest.mark.oracle
def test_fixed_lemma_cases_pass():
    oracle = LemmaKeyOracle()
    cases = list(fixed_cases())
    for case in cases:
        assert oracle.check(case, 4096) is None
    assert [verify_lemma_key(case.f1, case.f2, case.p).metabolizer_count for case in cases] == [3, 39]


@pytest.mark.parametrize("seed", range(8))
def test_lemma_cases_have_square_order(seed):
    for case in LemmaKeyOracle().generate_cases(random.Random(seed), 4096):
        assert isqrt(case.order) ** 2 == case.order, str(case)


def test_lemma_case_without_metabolizer_fails(diagonal_form):
    case = LemmaCase(diagonal_form((9, 9), (1, -1)), surgery_linking_form(5, 1), 3)
    assert LemmaKeyOracle().check(case, 4096) == "p=3, f1 on [9, 9], f2 on [5]: f1 + (-f2) has no metabolizer"


def test_small_bound_skips_large_cases(setup_oracle):
    result = setup_oracle("lemma-key").run(seed=0, max_order=100)
    assert result.passed
    assert result.cases >= 1


@pytest.mark.oracle
@pytest.mark.parametrize("suite", concordia.oracles.SUITES)
def test_suite_passes(setup_oracle, suite):
    result = setup_oracle(suite).run(seed=0)
    assert result.passed, result.summary()
    assert result.cases > 0


@pytest.mark.oracle
@pytest.mark.parametrize("seed", [1, 2])
def test_selfconc_with_other_seeds(setup_oracle, seed):
    result = setup_oracle("selfconc").run(seed=seed, max_order=1024)
    assert result.passed, result.summary()


@pytest.mark.oracle
@pytest.mark.parametrize("suite, seed", [("lemma-key", 7), ("metabolizers", 3)])
def test_suites_with_other_seeds(setup_oracle, suite, seed):
    result = setup_oracle(suite).run(seed=seed, max_order=1024)
    assert result.passed, result.summary()
