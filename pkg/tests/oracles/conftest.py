import pytest

import concordia.oracles


@pytest.fixture(scope="session")
def setup_oracle():
    def function(suite: str):
        """Load the oracle suite by name and create an instance of it."""
        oracle_cls = concordia.oracles.load(suite)
        return oracle_cls()

    return function
