from importlib import import_module

from concordia.exceptions import UnknownSuiteError

SUITES = ("lemma-key", "metabolizers", "selfconc")


def load(suite):
    """Dynamically load the requested oracle suite class."""

    if suite == "lemma-key":
        mod = ".lemma_key_oracle"
        cls = "LemmaKeyOracle"
    elif suite == "metabolizers":
        mod = ".metabolizer_oracle"
        cls = "MetabolizerOracle"
    elif suite == "selfconc":
        mod = ".selfconc_oracle"
        cls = "SelfConcordanceOracle"
    else:
        raise UnknownSuiteError(f"Unknown oracle suite {suite}; choose from {', '.join(SUITES)}")

    oracle_cls = getattr(import_module(mod, package="concordia.oracles"), cls)
    return oracle_cls
