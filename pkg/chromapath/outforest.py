# chromapath/outforest.py — maximal spanning out-forests, levels, elementary improvements,
# Gallai-Roy paths, two-block extraction from a forest arc, canonical colorings.

from __future__ import annotations
import logging
from typing import Dict, Iterable, List, Mapping, Optional

from chromapath.coloring import VertexColoring, chromatic_number
from chromapath.digraph import Arc, Digraph
from chromapath.embedding import PathEmbedding, directed, two_block
from chromapath.errors import InputError, InternalInconsistency, PreconditionError

log = logging.getLogger(__name__)


class OutForest:
    """
    Spanning out-forest of host restricted to a vertex set (all host vertices by
    default). parent[v] is None for roots; level(v) is the order of the forest
    path ending at v, so roots have level 1. Instances are never mutated.
    """

    def __init__(self, host: Digraph, parent: Mapping[int, Optional[int]]):
        self.host = host
        self._parent: Dict[int, Optional[int]] = {int(v): (None if p is None else int(p))
                                                  for v, p in sorted(parent.items())}
        for v, p in self._parent.items():
            if not 0 <= v < host.n:
                raise InputError(f"forest vertex {v} is not a host vertex")
            if p is not None:
                if p not in self._parent:
                    raise InputError(f"parent {p} of {v} is outside the forest")
                if not host.has_arc(p, v):
                    raise InputError(f"forest arc ({p},{v}) is not an arc of the host")
        self._level = self._levels()
        self._children: Dict[int, List[int]] = {v: [] for v in self._parent}
        for v, p in self._parent.items():
            if p is not None:
                self._children[p].append(v)

    def _levels(self) -> Dict[int, int]:
        level: Dict[int, int] = {}
        for v in self._parent:
            chain = []
            u: Optional[int] = v
            while u is not None and u not in level:
                if u in chain:
                    raise InputError(f"forest parents contain a cycle through {u}")
                chain.append(u)
                u = self._parent[u]
            base = 0 if u is None else level[u]
            for w in reversed(chain):
                base += 1
                level[w] = base
        return level

    @classmethod
    def empty(cls, host: Digraph, vertices: Optional[Iterable[int]] = None) -> "OutForest":
        vs = host.vertices() if vertices is None else vertices
        return cls(host, {v: None for v in vs})

    # ---- queries ----

    @property
    def vertices(self) -> List[int]:
        return list(self._parent)

    def parent_of(self, v: int) -> Optional[int]:
        return self._parent[v]

    def level_of(self, v: int) -> int:
        return self._level[v]

    def parents(self) -> Dict[int, Optional[int]]:
        return dict(self._parent)

    def levels(self) -> Dict[int, int]:
        return dict(self._level)

    @property
    def height(self) -> int:
        return max(self._level.values(), default=0)

    def level_classes(self) -> Dict[int, List[int]]:
        classes: Dict[int, List[int]] = {}
        for v in self._parent:
            classes.setdefault(self._level[v], []).append(v)
        return classes

    def path_to(self, v: int) -> List[int]:
        """P_v: the forest path from the root of v's branching down to v."""
        path = [v]
        while self._parent[path[-1]] is not None:
            path.append(self._parent[path[-1]])
        return path[::-1]

    def is_ancestor(self, u: int, v: int) -> bool:
        """u lies on P_v (u == v counts)."""
        while v is not None:
            if v == u:
                return True
            v = self._parent[v]
        return False

    def subtree(self, v: int) -> List[int]:
        """T_v: v and all its forest descendants."""
        out, stack = [], [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self._children[u])
        return sorted(out)

    def forest_arcs(self) -> List[Arc]:
        return [(p, v) for v, p in self._parent.items() if p is not None]

    def restrict(self, vertices: Iterable[int]) -> "OutForest":
        """Drop vertices outside the set; children of dropped vertices become roots."""
        keep = set(vertices)
        return OutForest(self.host, {v: (p if p in keep else None)
                                     for v, p in self._parent.items() if v in keep})

    def to_json(self) -> dict:
        return {"levels": {str(v): self._level[v] for v in self._parent},
                "parents": {str(v): p for v, p in self._parent.items()},
                "height": self.height}


# -------------------- Improvements & closure --------------------

def improvable_arc(F: OutForest) -> Optional[Arc]:
    """First arc (x,y) in ascending order with level(x) >= level(y) and y not on P_x."""
    inside = set(F.vertices)
    for x, y in F.host.sorted_arcs():
        if x in inside and y in inside and F.level_of(x) >= F.level_of(y) and not F.is_ancestor(y, x):
            return (x, y)
    return None


def is_maximal(F: OutForest) -> bool:
    return improvable_arc(F) is None


def elementary_improvement(F: OutForest, arc: Arc) -> OutForest:
    x, y = arc
    if not F.host.has_arc(x, y):
        raise InputError(f"({x},{y}) is not an arc of the host")
    if F.level_of(x) < F.level_of(y) or F.is_ancestor(y, x):
        raise InputError(f"({x},{y}) does not admit an elementary improvement")
    parent = F.parents()
    parent[y] = x
    return OutForest(F.host, parent)


def maximal_closure(D: Digraph,
                    start: Optional[OutForest] = None,
                    vertices: Optional[Iterable[int]] = None) -> OutForest:
    """
    Apply elementary improvements (first improvable arc in scan order) until the
    forest is maximal. Without a start forest the arcless forest on `vertices`
    (all of D by default) is used.
    """
    if start is None:
        F = OutForest.empty(D, vertices)
    else:
        if start.host is not D and start.host != D:
            raise InputError("start forest belongs to a different digraph")
        expected = set(D.vertices()) if vertices is None else set(vertices)
        if expected != set(start.vertices):
            raise InputError("start forest does not span the requested vertex set")
        F = start
    steps = 0
    while True:
        arc = improvable_arc(F)
        if arc is None:
            break
        F = elementary_improvement(F, arc)
        steps += 1
    log.debug("maximal closure after %d improvements, height %d", steps, F.height)
    return F


def gallai_roy_path(D: Digraph) -> PathEmbedding:
    """Forest path to a deepest vertex of a maximal closure; its order is at least chi(D)."""
    if D.n == 0:
        raise PreconditionError("empty digraph has no path")
    F = maximal_closure(D)
    top = min(v for v in F.vertices if F.level_of(v) == F.height)
    path = F.path_to(top)
    return PathEmbedding(tuple(path), directed(len(path) - 1))


def lemma31_path(F: OutForest, arc: Arc, k: int, l: int) -> PathEmbedding:
    """
    Arc v->w from level i to level j of a maximal forest:
      k <= i < j - l  -> last k vertices of P_v, then w, against the last l+1 of P_w;
      k < j <= i - l  -> last k+1 vertices of P_w against the last l of P_v plus w.
    """
    if k < 1 or l < 1:
        raise PreconditionError("block lengths start at 1")
    v, w = arc
    if not F.host.has_arc(v, w):
        raise InputError(f"({v},{w}) is not an arc of the host")
    i, j = F.level_of(v), F.level_of(w)
    pv, pw = F.path_to(v), F.path_to(w)
    if k <= i < j - l:
        left = pv[-k:] + [w]
        right = pw[-(l + 1):]
    elif k < j <= i - l:
        left = pw[-(k + 1):]
        right = pv[-l:] + [w]
    else:
        raise PreconditionError(f"levels i={i}, j={j} satisfy neither k<=i<j-l nor k<j<=i-l for k={k}, l={l}")
    return PathEmbedding(tuple(left + right[::-1][1:]), two_block(k, l))


def canonical_coloring(F: OutForest, k: int, l: int) -> VertexColoring:
    """Levels below k keep their index; level i >= k takes the j in k..k+l with j = i mod (l+1)."""
    if k < 1 or l < 1:
        raise PreconditionError("canonical coloring needs k >= 1 and l >= 1")
    colors = {}
    for v in F.vertices:
        i = F.level_of(v)
        colors[v] = i if i < k else k + (i - k) % (l + 1)
    return VertexColoring(colors, k + l)


def violating_arc(D: Digraph, c: VertexColoring) -> Optional[Arc]:
    for x, y in D.sorted_arcs():
        if x in c.colors and y in c.colors and c.colors[x] == c.colors[y]:
            return (x, y)
    return None


def corollary32_find(D: Digraph, k: int, l: int) -> PathEmbedding:
    """
    chi(D) >= k+l+2 forces a P(k,l): the (k+l+1)-coloring by levels (1..k by
    index, then l+1 colors cyclically) of a maximal closure is improper, and any
    monochromatic arc meets one of the two level conditions of lemma31_path.
    """
    if k < 1 or l < 1:
        raise PreconditionError("block lengths start at 1")
    chi = chromatic_number(D)[0] if D.n else 0
    if chi < k + l + 2:
        raise PreconditionError(f"chi(D) = {chi} < k+l+2 = {k + l + 2}")
    F = maximal_closure(D)
    coloring = canonical_coloring(F, k + 1, l)
    arc = violating_arc(D, coloring)
    if arc is None:
        raise InternalInconsistency(f"{k + l + 1}-coloring by levels is proper on a {chi}-chromatic digraph")
    return lemma31_path(F, arc, k, l)
