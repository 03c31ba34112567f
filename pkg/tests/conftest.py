import json
from pathlib import Path

import pytest

import bilocale_lab as bl

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
CORPUS = FIXTURES / "corpus"
INVALID = FIXTURES / "invalid"


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def corpus_frame(name):
    return bl.frame_from_json(load_json(CORPUS / "frames" / f"{name}.json"))


@pytest.fixture(scope="session")
def chain2():
    return corpus_frame("chain2")


@pytest.fixture(scope="session")
def chain3():
    return corpus_frame("chain3")


@pytest.fixture(scope="session")
def chain4():
    return corpus_frame("chain4")


@pytest.fixture(scope="session")
def boolean4():
    return corpus_frame("boolean4")


@pytest.fixture(scope="session")
def boolean8():
    return corpus_frame("boolean8")


@pytest.fixture(scope="session")
def grid6():
    return corpus_frame("grid6")


@pytest.fixture(scope="session")
def split_bispace():
    """Four points; first topology splits {a}, {b}, second carries their
    co-sets. Boolean as a bilocale but prefit on neither side."""
    return bl.bispace_from_json(load_json(CORPUS / "bispaces" / "boolean_not_prefit.json"))


@pytest.fixture(scope="session")
def all_corpus_frames():
    return {p.stem: bl.frame_from_json(load_json(p)) for p in sorted((CORPUS / "frames").glob("*.json"))}
