# chromapath/embedding.py — oriented path patterns (block notation) and witnessed
# occurrences of them in a host digraph.

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from chromapath.digraph import Arc, Digraph
from chromapath.errors import InputError


class Direction(str, Enum):
    FORWARD = "f"
    BACKWARD = "b"

    def flip(self) -> "Direction":
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


Block = Tuple[Direction, int]


@dataclass(frozen=True)
class BlockPattern:
    """
    An oriented path read along its traversal order as maximal directed blocks.
    "f2,b1" is P+(2,1): two forward arcs, then one backward arc.
    """
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        # the empty pattern is the one-vertex path
        blocks = tuple((Direction(d), int(n)) for d, n in self.blocks)
        for i, (d, n) in enumerate(blocks):
            if n < 1:
                raise InputError(f"block {i + 1} has length {n}; lengths start at 1")
            if i and blocks[i - 1][0] is d:
                raise InputError(f"blocks {i} and {i + 1} share direction {d.value}; directions must alternate")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def parse(cls, spec: str) -> "BlockPattern":
        if not spec.strip():
            raise InputError("a block pattern needs at least one block")
        blocks = []
        for token in spec.replace(" ", "").split(","):
            if len(token) < 2 or token[0] not in "fb" or not token[1:].isdigit():
                raise InputError(f"bad block token {token!r}; expected e.g. f2 or b1")
            blocks.append((Direction(token[0]), int(token[1:])))
        return cls(tuple(blocks))

    @property
    def length(self) -> int:
        return sum(n for _, n in self.blocks)

    def steps(self) -> List[Direction]:
        return [d for d, n in self.blocks for _ in range(n)]

    def reversed(self) -> "BlockPattern":
        # the same path read from its other end
        return BlockPattern(tuple((d.flip(), n) for d, n in reversed(self.blocks)))

    def canonical(self) -> "BlockPattern":
        return min(self, self.reversed(), key=str)

    def __str__(self) -> str:
        return ",".join(f"{d.value}{n}" for d, n in self.blocks)


def two_block(k: int, l: int) -> BlockPattern:
    """P(k,l): k forward arcs then l backward arcs, i.e. two directed paths meeting at their heads."""
    return BlockPattern(((Direction.FORWARD, k), (Direction.BACKWARD, l)))


def directed(length: int) -> BlockPattern:
    return BlockPattern(((Direction.FORWARD, length),) if length else ())


def antidirected(length: int, start: Direction = Direction.BACKWARD) -> BlockPattern:
    blocks, d = [], Direction(start)
    for _ in range(length):
        blocks.append((d, 1))
        d = d.flip()
    return BlockPattern(tuple(blocks))


def p4_pattern() -> BlockPattern:
    # arcs (y,x),(y,z),(v,z),(v,w) read along x,y,z,v,w
    return antidirected(4, Direction.BACKWARD)


def patterns_of_length(total: int) -> List[BlockPattern]:
    """Every oriented path of the given length, one pattern per path up to reversal."""
    found: Dict[str, BlockPattern] = {}

    def compositions(rest: int) -> List[List[int]]:
        if rest == 0:
            return [[]]
        return [[head] + tail for head in range(1, rest + 1) for tail in compositions(rest - head)]

    for parts in compositions(total):
        for start in (Direction.FORWARD, Direction.BACKWARD):
            d, blocks = start, []
            for n in parts:
                blocks.append((d, n))
                d = d.flip()
            pat = BlockPattern(tuple(blocks)).canonical()
            found[str(pat)] = pat
    return [found[key] for key in sorted(found)]


@dataclass(frozen=True)
class PathEmbedding:
    vertices: Tuple[int, ...]
    pattern: BlockPattern

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if len(vs) != self.pattern.length + 1:
            raise InputError(f"pattern {self.pattern} needs {self.pattern.length + 1} vertices, got {len(vs)}")
        object.__setattr__(self, "vertices", vs)

    def arcs(self) -> List[Arc]:
        out = []
        for i, d in enumerate(self.pattern.steps()):
            a, b = self.vertices[i], self.vertices[i + 1]
            out.append((a, b) if d is Direction.FORWARD else (b, a))
        return out

    def reversed(self) -> "PathEmbedding":
        return PathEmbedding(tuple(reversed(self.vertices)), self.pattern.reversed())

    def mapped(self, origin: Sequence[int]) -> "PathEmbedding":
        """Pull the embedding back through a relabeling (origin[local] = host vertex)."""
        return PathEmbedding(tuple(origin[v] for v in self.vertices), self.pattern)

    def to_json(self) -> dict:
        return {"kind": "embedding", "pattern": str(self.pattern), "vertices": list(self.vertices)}


def check_embedding(D: Digraph, emb: PathEmbedding) -> bool:
    """Independent checker: distinct in-range vertices and every implied arc present in D."""
    vs = emb.vertices
    if len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < D.n for v in vs):
        return False
    return all(D.has_arc(x, y) for x, y in emb.arcs())
