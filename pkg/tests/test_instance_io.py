import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fangvp import ParseError
from fangvp import instance_io
from fangvp.generators import random_fang_instance
from fangvp.instance_io import InstanceFile


def test_fixture_loads(ex1_path, ex1_instance):
    inst = instance_io.load(ex1_path)
    assert inst.variational() == ex1_instance
    assert inst.family.index.labels == ("alpha", "beta")


def test_round_trip_is_byte_stable(ex1_path):
    text = open(ex1_path, encoding="utf-8").read()
    assert instance_io.dumps(instance_io.loads(text)) == text


def test_optional_blocks_round_trip():
    doc = {
        "carrier": {"size": 2, "labels": ["p", "q"]},
        "objective": ["1/2", "0"],
        "relation": [[0, 0], [0, 1], [1, 1]],
        "entourages": [[[0, 0], [1, 1]]],
    }
    inst = instance_io.from_dict(doc)
    assert inst.family is None and inst.relation.rel == ((True, True), (False, True))
    assert instance_io.to_dict(inst) == doc


def test_index_defaults_to_discrete():
    inst = instance_io.from_dict({"carrier": {"size": 1}, "distances": [[["0"]], [["0"]]]})
    assert inst.family.index.leq == ((True, False), (False, True))


@pytest.mark.parametrize("doc, field", [
    ({}, "carrier"),
    ({"carrier": {"size": 0}}, "carrier.size"),
    ({"carrier": {"size": 2}, "colour": 1}, "colour"),
    ({"carrier": {"size": 2}, "objective": ["1"]}, "objective"),
    ({"carrier": {"size": 2}, "objective": ["1", 0.5]}, "objective[1]"),
    ({"carrier": {"size": 2}, "objective": ["1", "1/0"]}, "objective[1]"),
    ({"carrier": {"size": 1}, "distances": [[["-1"]]]}, "distances"),
    ({"carrier": {"size": 2}, "distances": [[["0", "1"], ["1"]]]}, "distances[0][1]"),
    ({"carrier": {"size": 1}, "distances": [[["0"]]], "index": {"size": 2}}, "index.size"),
    ({"carrier": {"size": 2}, "start": 2}, "start"),
    ({"carrier": {"size": 1}, "distances": [[["0"]]], "index": {"size": 1, "leq": [[0, 3]]}}, "index.leq[0][1]"),
    ({"carrier": {"size": 2}, "relation": [[0, 5]]}, "relation[0][1]"),
])
def test_parse_errors_name_the_field(doc, field):
    with pytest.raises(ParseError) as exc:
        instance_io.from_dict(doc)
    assert exc.value.field == field


def test_malformed_json_reports_line():
    with pytest.raises(ParseError) as exc:
        instance_io.loads('{\n  "carrier": {"size": 1},\n  oops\n}')
    assert exc.value.line == 3


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_generated_instances_round_trip(rng):
    inst = InstanceFile.from_variational(random_fang_instance(rng))
    text = instance_io.dumps(inst)
    back = instance_io.loads(text)
    assert back == inst
    assert instance_io.dumps(back) == text
    json.loads(text)
