import operator
from dataclasses import dataclass

from ..errors import UniverseMismatchError


@dataclass(frozen=True)
class VertexUniverse:
    """
    A finite vertex set {0, ..., size-1}.

    Attributes:
        size (int): Number of vertices.
        labels (tuple[str, ...] | None): Optional per-vertex metadata, e.g. the
            subset bitmask recorded by the subset constructions.
    """

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        try:
            size = operator.index(self.size)
        except TypeError:
            raise ValueError(f"universe size must be an integer, got {self.size!r}") from None
        if size < 1:
            raise ValueError(f"universe size must be positive, got {size}")
        object.__setattr__(self, "size", size)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
            if len(self.labels) != self.size:
                raise ValueError(
                    f"universe has {self.size} vertices but {len(self.labels)} labels"
                )

    def __contains__(self, vertex) -> bool:
        if isinstance(vertex, bool):
            return False
        try:
            return 0 <= operator.index(vertex) < self.size
        except TypeError:
            return False

    def check_vertex(self, vertex) -> int:
        """Returns the vertex as a plain int; numpy integers are accepted."""
        if isinstance(vertex, bool):
            raise ValueError(f"vertex ids are integers, got {vertex!r}")
        try:
            index = operator.index(vertex)
        except TypeError:
            raise ValueError(f"vertex ids are integers, got {vertex!r}") from None
        if not 0 <= index < self.size:
            raise ValueError(f"vertex {index} is not in a universe of size {self.size}")
        return index

    def to_dict(self) -> dict:
        out = {"size": self.size}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out


def ensure_same_universe(*objects) -> VertexUniverse:
    """
    Checks that every object is defined over the same universe.

    Args:
        *objects: Anything with a `universe` attribute.

    Returns:
        VertexUniverse: The shared universe.

    Raises:
        UniverseMismatchError: If two objects disagree.
    """
    universe = objects[0].universe
    for obj in objects[1:]:
        if obj.universe != universe:
            raise UniverseMismatchError(
                f"universe mismatch: size {universe.size} vs size {obj.universe.size}"
                if obj.universe.size != universe.size
                else "universe mismatch: same size, different labels"
            )
    return universe
