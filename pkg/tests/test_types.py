import json

import pytest

from concordia import Config
from concordia.types import DEFAULT_ORACLE_BOUND, ORACLE_BOUND_ENV, Annotation, oracle_bound


def test_minimal_config_from_json():
    config_dict = json.loads("{}")
    config = Config(**config_dict)
    assert config.oracle_bound == DEFAULT_ORACLE_BOUND == 4096
    assert config.primes == []


def test_full_config_from_json():
    config_json = """
    {
        "oracle_bound": 1024,
        "primes": [5, 7]
    }
    """
    config_dict = json.loads(config_json)
    config = Config(**config_dict)
    assert config.oracle_bound == 1024
    assert config.primes == [5, 7]


def test_config_values_are_coerced():
    assert Config(oracle_bound="128").oracle_bound == 128


@pytest.mark.parametrize("bound", [0, -5, "many"])
def test_invalid_oracle_bound(bound):
    with pytest.raises(ValueError):
        Config(oracle_bound=bound)


def test_oracle_bound_from_environment(monkeypatch):
    assert oracle_bound() == 4096
    monkeypatch.setenv(ORACLE_BOUND_ENV, "128")
    assert Config.from_env().oracle_bound == 128
    assert Config.from_env(oracle_bound=64).oracle_bound == 64
    assert oracle_bound() == 128
    assert oracle_bound(7) == 7


def test_annotation_facts():
    assert Annotation().facts() == []
    assert Annotation(False, "signature", 1, "Seifert surface").facts() == [
        {"fact": "not topologically slice", "source": "signature"},
        {"fact": "smooth 4-genus <= 1", "source": "Seifert surface"},
    ]
    assert Annotation(True, "declared").facts() == [{"fact": "topologically slice", "source": "declared"}]
