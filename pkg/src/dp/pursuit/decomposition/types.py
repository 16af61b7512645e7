from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional, Tuple

from ..errors import DecompositionError


class Kind(str, Enum):
    BIG_BROTHER = "bb"
    BIG_TWO_BROTHER = "btb"


@dataclass
class Decomposition:
    """Rooted tree of pieces; piece 0 is the root.

    Piece i > 0 hangs below ``parent[i]`` through its gate: the single
    vertex ``big_brother[i]`` for BIG_BROTHER, the vertex or edge
    {small_brother[i], big_brother[i]} for BIG_TWO_BROTHER.
    ``big_brother[i]`` dominates piece i. The root has no small brother.
    """
    kind: Kind
    pieces: List[Tuple[int, ...]]
    big_brother: List[int]
    small_brother: List[Optional[int]]
    parent: List[int]

    def __len__(self):
        return len(self.pieces)

    def gate(self, i: int) -> Tuple[int, ...]:
        return tuple(sorted({self.small_brother[i], self.big_brother[i]}))

    def depth(self, i: int) -> int:
        depth = 0
        while self.parent[i] >= 0:
            i = self.parent[i]
            depth += 1
        return depth

    def path_from_root(self, i: int) -> List[int]:
        path = [i]
        while self.parent[path[-1]] >= 0:
            path.append(self.parent[path[-1]])
        return path[::-1]

    def as_big_two_brother(self) -> "Decomposition":
        return replace(self, kind=Kind.BIG_TWO_BROTHER)

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "pieces": [list(p) for p in self.pieces],
            "big_brother": list(self.big_brother),
            "small_brother": list(self.small_brother),
            "parent": list(self.parent),
        }

    @classmethod
    def from_dict(cls, data) -> "Decomposition":
        try:
            return cls(
                kind=Kind(data["kind"]),
                pieces=[tuple(int(v) for v in p) for p in data["pieces"]],
                big_brother=[int(v) for v in data["big_brother"]],
                small_brother=[None if v is None else int(v)
                               for v in data["small_brother"]],
                parent=[int(p) for p in data["parent"]],
            )
        except (KeyError, TypeError, ValueError) as e:
            raise DecompositionError("malformed decomposition: %s" % e)


def assemble(kind: Kind, root: Tuple[int, ...], root_brother: int,
             peels: List[Tuple[Tuple[int, ...], int, int]]) -> Decomposition:
    """Turn a peel sequence into a rooted decomposition.

    `peels` holds (piece, small brother, big brother) in peel order; the
    last peeled piece hangs closest to the root.
    """
    pieces = [root]
    big, small, parent = [root_brother], [None], [-1]
    for piece, x, y in reversed(peels):
        gate = {x, y}
        parent.append(next(i for i, earlier in enumerate(pieces)
                           if gate <= set(earlier)))
        pieces.append(piece)
        big.append(y)
        small.append(x)
    return Decomposition(kind=kind, pieces=pieces, big_brother=big,
                         small_brother=small, parent=parent)
