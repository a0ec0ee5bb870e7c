from __future__ import annotations

import pytest

from argnet.evaluation import preset
from argnet.sampledata import add_chain_attack, build_chain, build_software_debate


@pytest.fixture
def scenario_config():
    return preset("scenario-2010")


@pytest.fixture
def chain():
    net, ids = build_chain()
    return net, ids


@pytest.fixture
def attacked_chain():
    net, ids = build_chain()
    ids = add_chain_attack(net, ids)
    return net, ids


@pytest.fixture
def debate():
    net, ids = build_software_debate()
    return net, ids
