import json

import pytest

from khtripos.cli import default_model_path
from khtripos.errors import ModelIOError, SchemaError, ValidationError
from khtripos.model import (load_model, model_from_dict, predicate_to_json, space_from_json,
                            space_to_json)
from khtripos.topology import discrete

SIERPINSKI = {"name": "S", "points": ["0", "1"], "opens": [[], [1], [0, 1]]}


def test_single_discrete_space_loads():
    m = model_from_dict({"spaces": [{"name": "X", "points": ["a"]}]})
    assert m.spaces["X"] == discrete(["a"], name="X")
    assert m.maps == {} and m.predicates == {}


def test_bundled_example_loads():
    m = load_model(default_model_path())
    assert set(m.spaces) == {"X", "Y", "Empty", "S"}
    assert m.maps["f"].table == (0, 0, 1)
    assert m.predicates["r"].labels() == ["(a,u)", "(b,v)", "(b,w)"]
    assert m.predicate_sorts["r"] == ("X", "Y")


def test_non_continuous_map_names_the_open():
    # the swap pulls the open {1} back to {0}, which is not open
    data = {"spaces": [SIERPINSKI],
            "maps": [{"name": "k", "dom": "S", "cod": "S", "table": ["1", "0"]}]}
    with pytest.raises(ValidationError) as err:
        model_from_dict(data)
    e = err.value
    assert e.item == "k" and e.invariant == "continuity"
    assert "open ['1'] of S" in str(e)


def test_undeclared_space_is_a_schema_error():
    with pytest.raises(SchemaError):
        model_from_dict({"spaces": [], "maps": [{"name": "f", "dom": "X", "cod": "X",
                                                 "table": []}]})
    with pytest.raises(SchemaError):
        model_from_dict({"predicates": [{"name": "p", "space": ["X"], "extent": []}]})


@pytest.mark.parametrize("data", [
    [],
    {"spaces": [{"name": "X"}]},
    {"spaces": [{"name": "X", "points": ["a"], "extra": 1}]},
    {"spaces": [{"name": "P", "points": []}]},
    {"spaces": [{"name": "forall", "points": []}]},
    {"spaces": [{"name": "X", "points": []}, {"name": "X", "points": []}]},
    {"unknown": []},
])
def test_schema_errors(data):
    with pytest.raises(SchemaError):
        model_from_dict(data)


@pytest.mark.parametrize("data,invariant", [
    ({"spaces": [{"name": "X", "points": ["a", "a"]}]}, "distinct labels"),
    ({"spaces": [{"name": "X", "points": ["a", "b"], "opens": [[], ["a"]]}]}, "topology"),
    ({"spaces": [{"name": "X", "points": ["a"]}],
      "maps": [{"name": "f", "dom": "X", "cod": "X", "table": []}]}, "total"),
    ({"spaces": [{"name": "X", "points": ["a"]}],
      "maps": [{"name": "f", "dom": "X", "cod": "X", "table": {}}]}, "total"),
    ({"spaces": [SIERPINSKI],
      "predicates": [{"name": "p", "space": "S", "extent": ["1"]}]}, "clopen"),
    ({"spaces": [{"name": "X", "points": ["a"]}],
      "predicates": [{"name": "p", "space": ["X", "X"], "extent": [["a"]]}]}, "arity"),
])
def test_validation_errors(data, invariant):
    with pytest.raises(ValidationError) as err:
        model_from_dict(data)
    assert err.value.invariant == invariant


def test_unknown_point_is_a_validation_error():
    with pytest.raises(ValidationError):
        model_from_dict({"spaces": [{"name": "X", "points": ["a"]}],
                         "predicates": [{"name": "p", "space": "X", "extent": ["z"]}]})


def test_points_by_index_and_label_agree():
    base = {"spaces": [{"name": "X", "points": ["a", "b"]}]}
    by_label = model_from_dict({**base, "predicates": [{"name": "p", "space": "X",
                                                        "extent": ["b"]}]})
    by_index = model_from_dict({**base, "predicates": [{"name": "p", "space": "X",
                                                        "extent": [1]}]})
    assert by_label.predicates["p"] == by_index.predicates["p"]


def test_io_errors(tmp_path):
    with pytest.raises(ModelIOError):
        load_model(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SchemaError):
        load_model(bad)


def test_file_round_trip(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"spaces": [SIERPINSKI]}))
    S = load_model(path).spaces["S"]
    assert space_from_json(space_to_json(S)) == S
    assert space_to_json(S)["opens"] == [[], [1], [0, 1]]
    m = load_model(default_model_path())
    assert predicate_to_json(m.predicates["p"]) == {"space": "X", "extent": [0]}
