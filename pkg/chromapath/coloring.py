# chromapath/coloring.py — exact chromatic number with coloring certificates,
# properness checks and k-critical subdigraphs.

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from chromapath.digraph import Digraph, Induced, induced
from chromapath.errors import InputError, PreconditionError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexColoring:
    """colors maps vertex -> color in 1..k."""
    colors: Mapping[int, int]
    k: int

    def __post_init__(self):
        colors = {int(v): int(c) for v, c in dict(self.colors).items()}
        for v, c in colors.items():
            if not 1 <= c <= self.k:
                raise InputError(f"vertex {v} has color {c} outside 1..{self.k}")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_list(cls, colors: Sequence[int], k: Optional[int] = None) -> "VertexColoring":
        return cls({v: c for v, c in enumerate(colors)}, k if k is not None else max(colors, default=1))

    def color(self, v: int) -> int:
        return self.colors[v]

    def used(self) -> int:
        return len(set(self.colors.values()))

    def classes(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for v in sorted(self.colors):
            out.setdefault(self.colors[v], []).append(v)
        return out

    def as_list(self, n: int) -> List[int]:
        return [self.colors[v] for v in range(n)]

    def to_json(self) -> dict:
        return {"kind": "coloring", "k": self.k,
                "colors": {str(v): c for v, c in sorted(self.colors.items())}}


def is_proper(D: Digraph, c: VertexColoring) -> bool:
    for v in D.vertices():
        if v not in c.colors:
            raise InputError(f"coloring misses vertex {v}")
    return all(c.colors[x] != c.colors[y] for x, y in D.arcs)


# -------------------- Exact solver --------------------

def _k_coloring(adj: List[set], k: int, clique: Sequence[int]) -> Optional[List[int]]:
    """Backtracking k-colorability test in DSATUR order; the clique is precolored 1..|clique|."""
    n = len(adj)
    if len(clique) > k:
        return None
    colors = [0] * n
    sat: List[Dict[int, int]] = [dict() for _ in range(n)]   # neighbour color -> multiplicity

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in adj[v]:
            sat[u][c] = sat[u].get(c, 0) + 1

    def unassign(v: int) -> None:
        c = colors[v]
        colors[v] = 0
        for u in adj[v]:
            sat[u][c] -= 1
            if not sat[u][c]:
                del sat[u][c]

    for i, v in enumerate(clique):
        assign(v, i + 1)
    todo = n - len(clique)

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            cand = (len(sat[v]), len(adj[v]), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def solve(left: int, used: int) -> bool:
        if left == 0:
            return True
        v = pick()
        for c in range(1, min(k, used + 1) + 1):
            if c in sat[v]:
                continue
            assign(v, c)
            if solve(left - 1, max(used, c)):
                return True
            unassign(v)
        return False

    if solve(todo, len(clique)):
        return colors
    return None


def chromatic_number(D: Digraph) -> Tuple[int, VertexColoring]:
    """
    Exact chi of the underlying graph. Greedy DSATUR gives the upper bound,
    a maximum clique the lower bound; binary search in between with exact
    k-colorability tests. Intended for n <= 20.
    """
    if D.n < 1:
        raise PreconditionError("chromatic number needs at least one vertex")
    if not D.arcs:
        return 1, VertexColoring({v: 1 for v in D.vertices()}, 1)
    G = D.underlying_graph()
    greedy = nx.greedy_color(G, strategy="saturation_largest_first")
    best = [greedy[v] + 1 for v in D.vertices()]
    hi = max(best)
    clique = sorted(max(nx.find_cliques(G), key=lambda c: (len(c), sorted(c))))
    lo = len(clique)
    adj = D.underlying_neighbors()
    while lo < hi:
        mid = (lo + hi) // 2
        found = _k_coloring(adj, mid, clique)
        if found is not None:
            hi, best = mid, found
        else:
            lo = mid + 1
    log.debug("chi=%d for n=%d m=%d (clique bound %d)", hi, D.n, D.m, len(clique))
    return hi, VertexColoring.from_list(best, hi)


def chromatic_number_of(D: Digraph, vertices: Iterable[int]) -> int:
    sub = induced(D, vertices).digraph
    return chromatic_number(sub)[0] if sub.n else 0


def k_critical_subdigraph(D: Digraph, k: int) -> Induced:
    """
    Induced subdigraph D' with chi(D') = k and chi(D' - v) < k for every v,
    obtained by dropping vertices in ascending id order while chi stays >= k.
    """
    if D.n < 1 or chromatic_number(D)[0] < k:
        raise PreconditionError(f"digraph is not {k}-chromatic or more")
    keep = list(D.vertices())
    changed = True
    while changed:
        changed = False
        for v in list(keep):
            trial = [u for u in keep if u != v]
            if trial and chromatic_number_of(D, trial) >= k:
                keep = trial
                changed = True
    return induced(D, keep)
