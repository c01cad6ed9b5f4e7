import math

import numpy as np
import pytest

from mbehzad.network import Node, SimConfig
from mbehzad.protocol import sense, sense_all, should_transmit
from mbehzad.zoning import Point, RegionId

from helpers import make_state


def _node(sent=False, last=None):
    return Node(0, Point(50, 50), RegionId.M1, 1.0, 1.0, has_sent_before=sent, last_sent_value=last)


def test_sense_degenerate_range():
    cfg = SimConfig(attr_min=7.5, attr_max=7.5)
    rng = np.random.default_rng(0)
    assert {sense(cfg, rng) for _ in range(20)} == {7.5}


def test_sense_is_reproducible():
    cfg = SimConfig()
    a = [sense(cfg, np.random.default_rng(9)) for _ in range(3)]
    b = [sense(cfg, np.random.default_rng(9)) for _ in range(3)]
    assert a == b
    assert sense_all(cfg, np.random.default_rng(4), 5) == sense_all(cfg, np.random.default_rng(4), 5)


def test_sense_mean():
    cfg = SimConfig(attr_min=10.0, attr_max=30.0)
    n = 100_000
    values = np.array(sense_all(cfg, np.random.default_rng(2), n))
    assert values.min() >= 10.0 and values.max() <= 30.0
    sigma = (30.0 - 10.0) / math.sqrt(12) / math.sqrt(n)
    assert abs(values.mean() - 20.0) <= 3 * sigma


@pytest.mark.parametrize("node, value, mode, expected", [
    (_node(), 99.0, "delta", False),
    (_node(True, 150.0), 99.0, "delta", False),
    (_node(), 120.0, "delta", True),
    (_node(True, 118.0), 120.0, "delta", False),
    (_node(True, 114.0), 120.0, "delta", True),
    (_node(True, 125.0), 120.0, "delta", True),  # decreases count too
    (_node(True, 120.0), 120.0, "literal", True),  # literal: value >= ST (ST = 5)
    (_node(), 100.0, "delta", True),  # HT is inclusive
])
def test_should_transmit(node, value, mode, expected):
    cfg = SimConfig(hard_threshold=100, soft_threshold=5, soft_mode=mode)
    assert should_transmit(node, value, cfg) is expected


def test_literal_mode_uses_soft_threshold_as_level():
    cfg = SimConfig(hard_threshold=100, soft_threshold=130, soft_mode="literal")
    assert not should_transmit(_node(True, 120.0), 125.0, cfg)
    assert should_transmit(_node(True, 120.0), 135.0, cfg)


def test_wants_to_send_updates_state():
    cfg = SimConfig(hard_threshold=0.5, soft_threshold=0.0, attr_min=0.0, attr_max=1.0, p_drop=0.0)
    state = make_state([(50, 50)], cfg)
    node = state.nodes[0]
    state.values = [0.4]
    assert not state.wants_to_send(node)
    assert not node.has_sent_before
    state.values = [0.8]
    assert state.wants_to_send(node)
    assert node.has_sent_before and node.last_sent_value == 0.8
