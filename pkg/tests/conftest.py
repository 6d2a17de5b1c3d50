from __future__ import annotations

import random

import pytest
from hypothesis import settings

from support import all_partitions, rejection_corpus

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def partitions_923():
    # every partition with largest part <= 6 and length <= 6
    return list(all_partitions(6, 6))


@pytest.fixture(scope="session")
def partitions_251():
    return list(all_partitions(5, 5))


@pytest.fixture(scope="session")
def partitions_69():
    return list(all_partitions(4, 4))


@pytest.fixture(scope="session")
def rejection_200():
    return rejection_corpus(200, random.Random(20260825))
