import json
from fractions import Fraction

import pytest

from Discriminators.core_feature.classes import threshold_class
from Discriminators.core_feature.distribution import Distribution, Sample
from Discriminators.core_feature.hypergraph import Hypergraph
from Discriminators.core_feature.universe import VertexUniverse
from Discriminators.errors import CanonicalFormError, UniverseMismatchError
from Discriminators.instance_io import (
    InstanceFileHandler,
    load_pair,
    parse_class,
    parse_distribution,
    parse_edges,
    parse_probs,
)


def write(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


# ---------- parsing ----------

def test_rational_strings_stay_exact():
    probs = parse_probs(["1/2", "1/4", 0, "1/4"])
    assert probs == (Fraction(1, 2), Fraction(1, 4), Fraction(0), Fraction(1, 4))
    p = parse_distribution({"probs": ["1/2", "1/4", 0, "1/4"]})
    assert p.exact
    assert p.universe == VertexUniverse(4)


def test_any_float_switches_to_float_mode():
    probs = parse_probs(["1/2", 0.25, 0.25])
    assert probs == (0.5, 0.25, 0.25)
    assert not parse_distribution({"probs": ["1/2", 0.25, 0.25]}).exact


def test_unsorted_edge_is_rejected():
    with pytest.raises(CanonicalFormError, match="not sorted"):
        parse_edges([[0, 1], [2, 1]], 2)
    with pytest.raises(CanonicalFormError, match="length"):
        parse_edges([[0, 1, 1]], 2)
    assert parse_edges([[1, 1], [0, 2]], 2) == frozenset({(1, 1), (0, 2)})


def test_parse_class_keeps_order():
    data = {
        "universe": {"size": 3},
        "arity": 1,
        "graphs": [{"edges": [[2]]}, {"edges": []}, {"edges": [[0], [1]]}],
    }
    c = parse_class(data)
    assert [g.vertex_set for g in c] == [frozenset({2}), frozenset(), frozenset({0, 1})]


def test_parse_class_rejects_duplicates():
    data = {"universe": {"size": 2}, "arity": 1, "graphs": [{"edges": [[0]]}, {"edges": [[0]]}]}
    with pytest.raises(ValueError):
        parse_class(data)


def test_labels_are_carried():
    p = parse_distribution({"universe": {"size": 2, "labels": ["a", "b"]}, "probs": [1, 0]})
    assert p.universe.labels == ("a", "b")


# ---------- InstanceFileHandler ----------

def test_save_and_load_distribution(tmp_path):
    p = Distribution.from_weights(VertexUniverse(3), [Fraction(1), Fraction(2), Fraction(3)])
    handler = InstanceFileHandler(tmp_path / "p.json")
    handler.save(p)
    assert json.loads(handler.path.read_text())["probs"] == ["1/6", "1/3", "1/2"]
    assert handler.load_distribution() == p


def test_save_and_load_class(tmp_path):
    c = threshold_class(VertexUniverse(4))
    handler = InstanceFileHandler(tmp_path / "c.json")
    handler.save(c)
    assert handler.load_class() == c


def test_hypergraph_is_saved_with_universe(tmp_path):
    g = Hypergraph(VertexUniverse(3), 2, frozenset({(0, 0), (1, 2)}))
    handler = InstanceFileHandler(tmp_path / "g.json")
    handler.save(g)
    assert json.loads(handler.path.read_text())["universe"] == {"size": 3}
    assert handler.load_hypergraph() == g


def test_sample_uses_given_universe(tmp_path):
    handler = InstanceFileHandler(write(tmp_path / "s.json", {"vertices": [0, 2, 2]}))
    assert handler.load_sample(VertexUniverse(3)) == Sample(VertexUniverse(3), (0, 2, 2))
    with pytest.raises(ValueError, match="needs a universe"):
        handler.load_sample()


def test_save_is_byte_stable(tmp_path):
    c = threshold_class(VertexUniverse(5))
    a = InstanceFileHandler(tmp_path / "a.json").save(c)
    b = InstanceFileHandler(tmp_path / "b.json").save(c)
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().endswith("}\n")


def test_read_rejects_non_objects(tmp_path):
    with pytest.raises(ValueError, match="JSON object"):
        InstanceFileHandler(write(tmp_path / "list.json", [1, 2])).read()
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ValueError, match="not valid JSON"):
        InstanceFileHandler(bad).read()
    with pytest.raises(FileNotFoundError):
        InstanceFileHandler(tmp_path / "missing.json").read()


def test_load_pair_checks_universe(tmp_path):
    write(tmp_path / "p1.json", {"probs": ["1/2", "1/2"]})
    write(tmp_path / "p2.json", {"probs": ["1/3", "1/3", "1/3"]})
    write(tmp_path / "p3.json", {"probs": [1, 0]})
    p1, p3 = load_pair(tmp_path / "p1.json", tmp_path / "p3.json")
    assert p3 == Distribution.point_mass(VertexUniverse(2), 0)
    with pytest.raises(UniverseMismatchError):
        load_pair(tmp_path / "p1.json", tmp_path / "p2.json")
