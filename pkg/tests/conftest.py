import json
from pathlib import Path

import pytest

from tilegraphs import build_skeleton
from tilegraphs.serialize import basic_data_from_dict

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def load_corpus(name):
    with open(DATA_DIR / f"{name}.json", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def ledrappier():
    return basic_data_from_dict(load_corpus("ledrappier"))


@pytest.fixture(scope="session")
def square():
    return basic_data_from_dict(load_corpus("square"))


@pytest.fixture(scope="session")
def rem3():
    return basic_data_from_dict(load_corpus("rem3"))


@pytest.fixture(scope="session")
def flat():
    return basic_data_from_dict(load_corpus("flat"))


@pytest.fixture(scope="session")
def ledrappier_sk(ledrappier):
    return build_skeleton(ledrappier)


@pytest.fixture(scope="session")
def square_sk(square):
    return build_skeleton(square)


@pytest.fixture(scope="session")
def rem3_sk(rem3):
    return build_skeleton(rem3)


@pytest.fixture(scope="session")
def flat_sk(flat):
    return build_skeleton(flat)
