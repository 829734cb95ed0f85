import json
import logging
from pathlib import Path

from .core_feature.distribution import Distribution, Sample, to_exact
from .core_feature.hypergraph import DistinguishingClass, Hypergraph
from .core_feature.universe import VertexUniverse, ensure_same_universe
from .errors import CanonicalFormError

logger = logging.getLogger(__name__)


def parse_universe(data: dict) -> VertexUniverse:
    return VertexUniverse(int(data["size"]), data.get("labels"))


def parse_probs(values) -> tuple:
    """
    Keeps rational mode when every entry is an int or an "a/b" string; any JSON
    float switches the whole vector to float mode.
    """
    values = list(values)
    if any(isinstance(x, float) for x in values):
        return tuple(float(to_exact(x)) if isinstance(x, str) else float(x) for x in values)
    return tuple(to_exact(x) for x in values)


def parse_distribution(data: dict, universe: VertexUniverse | None = None) -> Distribution:
    probs = parse_probs(data["probs"])
    if "universe" in data:
        universe = parse_universe(data["universe"])
    elif universe is None:
        universe = VertexUniverse(len(probs))
    return Distribution(universe, probs)


def parse_edges(edges, arity: int) -> frozenset:
    """Rejects any stored edge that is not already sorted non-decreasing."""
    out = []
    for edge in edges:
        edge = tuple(int(v) for v in edge)
        if list(edge) != sorted(edge):
            raise CanonicalFormError(f"edge {list(edge)} is not sorted non-decreasing")
        if len(edge) != arity:
            raise CanonicalFormError(f"edge {list(edge)} has length {len(edge)}, expected {arity}")
        out.append(edge)
    return frozenset(out)


def parse_hypergraph(data: dict, universe: VertexUniverse | None = None) -> Hypergraph:
    if "universe" in data:
        universe = parse_universe(data["universe"])
    if universe is None:
        raise ValueError("hypergraph JSON needs a universe")
    arity = int(data["arity"])
    return Hypergraph(universe, arity, parse_edges(data["edges"], arity))


def parse_class(data: dict) -> DistinguishingClass:
    universe = parse_universe(data["universe"])
    arity = int(data["arity"])
    graphs = [Hypergraph(universe, arity, parse_edges(g["edges"], arity)) for g in data["graphs"]]
    return DistinguishingClass(universe, arity, tuple(graphs))


def parse_sample(data: dict, universe: VertexUniverse | None = None) -> Sample:
    if "universe" in data:
        universe = parse_universe(data["universe"])
    if universe is None:
        raise ValueError("sample JSON needs a universe")
    return Sample(universe, tuple(int(v) for v in data["vertices"]))


def dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


class InstanceFileHandler:
    """
    Loads and saves problem instances as JSON files.

    Every writer produces sorted keys, 2-space indentation and a trailing
    newline, so saving the same object twice gives identical bytes. Exact
    probabilities are written as "a/b" strings.

    Attributes:
        path (Path): The file read from or written to.
    """

    def __init__(self, path):
        self.path = Path(path)

    def read(self) -> dict:
        """
        Reads the JSON object stored at `path`.

        Raises:
            FileNotFoundError: If the file is missing.
            ValueError: If the file does not hold a JSON object.
        """
        logger.debug("reading instance file %s", self.path)
        with open(self.path, encoding="utf-8") as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f"{self.path} is not valid JSON: {e}") from e
        if not isinstance(data, dict):
            raise ValueError(f"{self.path} must hold a JSON object")
        return data

    def load_universe(self) -> VertexUniverse:
        return parse_universe(self.read())

    def load_distribution(self, universe: VertexUniverse | None = None) -> Distribution:
        return parse_distribution(self.read(), universe)

    def load_hypergraph(self, universe: VertexUniverse | None = None) -> Hypergraph:
        return parse_hypergraph(self.read(), universe)

    def load_class(self) -> DistinguishingClass:
        return parse_class(self.read())

    def load_sample(self, universe: VertexUniverse | None = None) -> Sample:
        return parse_sample(self.read(), universe)

    def save(self, obj) -> Path:
        """
        Writes any object exposing `to_dict()` (or a plain dict) to `path`.

        Hypergraphs are saved together with their universe so they load standalone.
        """
        payload = obj if isinstance(obj, dict) else obj.to_dict()
        if isinstance(obj, Hypergraph):
            payload = {**payload, "universe": obj.universe.to_dict()}
        self.path.write_text(dump_json(payload), encoding="utf-8")
        logger.info("saved %s to %s", type(obj).__name__, self.path)
        return self.path


def load_pair(path1, path2) -> tuple[Distribution, Distribution]:
    """Loads two distribution files and checks they share a universe."""
    p1 = InstanceFileHandler(path1).load_distribution()
    p2 = InstanceFileHandler(path2).load_distribution()
    ensure_same_universe(p1, p2)
    return p1, p2

