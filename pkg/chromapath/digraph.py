# chromapath/digraph.py — digraph container, arc-list/DOT codecs, induced subdigraphs,
# contraction and isomorphism canonical forms.

from __future__ import annotations
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import scipy.sparse as sp

from chromapath.errors import InputError, ParseError

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """
    Vertices are 0..n-1. oriented=True forbids digons (x,y),(y,x);
    oriented=False is the multigraph mode produced by contraction, where
    parallel arcs are already collapsed and digons are allowed.
    """
    n: int
    arcs: FrozenSet[Arc] = frozenset()
    oriented: bool = True
    _out: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _in: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = int(self.n)
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        arcs = frozenset((int(x), int(y)) for x, y in self.arcs)
        for x, y in arcs:
            if not (0 <= x < n and 0 <= y < n):
                raise InputError(f"arc ({x},{y}) has an endpoint outside 0..{n - 1}")
            if x == y:
                raise InputError(f"loop at vertex {x}")
            if self.oriented and (y, x) in arcs:
                raise InputError(f"digon between {min(x, y)} and {max(x, y)} in an oriented digraph")
        out: List[List[int]] = [[] for _ in range(n)]
        inn: List[List[int]] = [[] for _ in range(n)]
        for x, y in sorted(arcs):
            out[x].append(y)
            inn[y].append(x)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_out", tuple(tuple(s) for s in out))
        object.__setattr__(self, "_in", tuple(tuple(sorted(p)) for p in inn))

    # ---- basic queries ----

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def has_arc(self, x: int, y: int) -> bool:
        return (x, y) in self.arcs

    def adjacent(self, x: int, y: int) -> bool:
        return (x, y) in self.arcs or (y, x) in self.arcs

    def out_neighbors(self, v: int) -> Tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> Tuple[int, ...]:
        return self._in[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(set(self._out[v]) | set(self._in[v])))

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def max_out_degree(self) -> int:
        return max((len(s) for s in self._out), default=0)

    def min_out_degree(self) -> int:
        return min((len(s) for s in self._out), default=0)

    def max_in_degree(self) -> int:
        return max((len(p) for p in self._in), default=0)

    def min_in_degree(self) -> int:
        return min((len(p) for p in self._in), default=0)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices()), default=0)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self.vertices()), default=0)

    def underlying_neighbors(self) -> List[set]:
        adj = [set() for _ in range(self.n)]
        for x, y in self.arcs:
            adj[x].add(y)
            adj[y].add(x)
        return adj

    # ---- matrix / library views ----

    def matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.uint8)
        for x, y in self.arcs:
            A[x, y] = 1
        return A

    def adjacency_matrix(self) -> sp.csr_matrix:
        rows, cols = [], []
        for x, y in self.sorted_arcs():
            rows.append(x); cols.append(y)
        data = np.ones(len(rows), dtype=np.int8)
        mat = sp.coo_matrix((data, (rows, cols)), shape=(self.n, self.n), dtype=np.int8)
        return mat.tocsr()

    def to_networkx(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(self.vertices())
        G.add_edges_from(self.sorted_arcs())
        return G

    def underlying_graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices())
        G.add_edges_from(self.sorted_arcs())
        return G


class Induced(NamedTuple):
    digraph: Digraph
    origin: Tuple[int, ...]      # origin[new vertex] = host vertex


class Contraction(NamedTuple):
    digraph: Digraph
    image: Tuple[int, ...]       # image[host vertex] = quotient vertex
    hub: int                     # quotient id of the contracted vertex v_H


# -------------------- Arc-list codec --------------------

def _parse_ints(tokens: Sequence[str], lineno: int, negative: str = "malformed") -> List[int]:
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ParseError("malformed", lineno, f"expected integers, got {' '.join(tokens)!r}")
    if any(v < 0 for v in vals):
        raise ParseError(negative, lineno, "negative values are not allowed")
    return vals


def parse_arclist(text: str) -> Digraph:
    """
    Arc-list format: header "<n> <m>" (optionally followed by "multi"), then m
    lines "<tail> <head>". Lines starting with '#' and blank lines are skipped.
    """
    header: Optional[Tuple[int, int, bool]] = None
    arcs: set = set()
    last = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        tokens = line.split()
        if header is None:
            multi = len(tokens) == 3 and tokens[2] == "multi"
            if len(tokens) != 2 and not multi:
                raise ParseError("malformed", lineno, f"header must be '<n> <m>' or '<n> <m> multi', got {line!r}")
            n, m = _parse_ints(tokens[:2], lineno)
            header = (n, m, multi)
            continue
        if len(tokens) != 2:
            raise ParseError("malformed", lineno, f"arc line must be '<tail> <head>', got {line!r}")
        x, y = _parse_ints(tokens, lineno, negative="out_of_range")
        n, _, multi = header
        if x >= n or y >= n:
            raise ParseError("out_of_range", lineno, f"vertex {max(x, y)} outside 0..{n - 1}")
        if x == y:
            raise ParseError("loop", lineno, f"loop at vertex {x}")
        if (x, y) in arcs:
            raise ParseError("duplicate", lineno, f"duplicate arc {x} {y}")
        if not multi and (y, x) in arcs:
            raise ParseError("digon", lineno, f"digon {x} {y} in an oriented digraph (add 'multi' to the header)")
        arcs.add((x, y))
    if header is None:
        raise ParseError("malformed", 1, "missing '<n> <m>' header")
    n, m, multi = header
    if len(arcs) != m:
        raise ParseError("count", last, f"header announces {m} arcs, found {len(arcs)}")
    return Digraph(n, frozenset(arcs), oriented=not multi)


def to_arclist(D: Digraph) -> str:
    head = f"{D.n} {D.m}" + ("" if D.oriented else " multi")
    lines = [head] + [f"{x} {y}" for x, y in D.sorted_arcs()]
    return "\n".join(lines) + "\n"


def parse_arclists(text: str) -> List[Digraph]:
    """Several arc-lists separated by blank lines (enumeration cache files)."""
    blocks, cur = [], []
    for raw in text.split("\n"):
        if raw.strip():
            cur.append(raw)
        elif cur:
            blocks.append("\n".join(cur)); cur = []
    if cur:
        blocks.append("\n".join(cur))
    return [parse_arclist(b) for b in blocks]


def dump_arclists(digraphs: Iterable[Digraph]) -> str:
    return "\n".join(to_arclist(D) for D in digraphs)


def to_dot(D: Digraph,
           styles: Optional[Dict[Arc, str]] = None,
           labels: Optional[Dict[int, str]] = None) -> str:
    """DOT text; styles maps an arc to a DOT style (solid, dashed, bold)."""
    styles = styles or {}
    lines = ["digraph G {"]
    touched = {v for a in D.arcs for v in a}
    for v in D.vertices():
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        elif v not in touched:
            lines.append(f"  {v};")
    for x, y in D.sorted_arcs():
        style = styles.get((x, y))
        lines.append(f"  {x} -> {y} [style={style}];" if style else f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -------------------- Subdigraphs & contraction --------------------

def _check_vertices(D: Digraph, S: Iterable[int]) -> List[int]:
    vs = sorted(set(int(v) for v in S))
    bad = [v for v in vs if not 0 <= v < D.n]
    if bad:
        raise InputError(f"vertex {bad[0]} outside 0..{D.n - 1}")
    return vs


def induced(D: Digraph, S: Iterable[int]) -> Induced:
    order = _check_vertices(D, S)
    index = {v: i for i, v in enumerate(order)}
    arcs = {(index[x], index[y]) for x, y in D.arcs if x in index and y in index}
    return Induced(Digraph(len(order), frozenset(arcs), D.oriented), tuple(order))


def remove_vertices(D: Digraph, S: Iterable[int]) -> Induced:
    drop = set(_check_vertices(D, S))
    return induced(D, [v for v in D.vertices() if v not in drop])


def contract(D: Digraph, H: Iterable[int], multigraph: bool = False) -> Contraction:
    """
    D/H: H collapses to one vertex v_H placed at the position of min(H).
    Arc directions are preserved; arcs inside H and loops vanish; parallels merge.
    In digraph mode every outside vertex must send all its H-arcs one way.
    """
    hs = _check_vertices(D, H)
    if not hs:
        raise InputError("cannot contract an empty vertex set")
    inside = set(hs)
    if not multigraph:
        for v in D.vertices():
            if v in inside:
                continue
            into = any(h in inside for h in D.out_neighbors(v))
            outof = any(h in inside for h in D.in_neighbors(v))
            if into and outof:
                raise InputError(f"vertex {v} has arcs to and from the contracted set")
    rep = hs[0]
    keep = [v for v in D.vertices() if v not in inside or v == rep]
    index = {v: i for i, v in enumerate(keep)}
    image = tuple(index[rep] if v in inside else index[v] for v in D.vertices())
    arcs = {(image[x], image[y]) for x, y in D.arcs if image[x] != image[y]}
    oriented = D.oriented and not multigraph
    return Contraction(Digraph(len(keep), frozenset(arcs), oriented), image, index[rep])


# -------------------- Tournaments & isomorphism --------------------

def is_tournament(D: Digraph) -> bool:
    for x in D.vertices():
        for y in range(x + 1, D.n):
            if D.has_arc(x, y) == D.has_arc(y, x):
                return False
    return True


def _refine(D: Digraph, partition: List[List[int]]) -> List[List[int]]:
    # split cells by (out, in) neighbour counts per cell until stable; sub-cells
    # are ordered by signature so the result does not depend on labels
    while True:
        cell_of = {v: i for i, cell in enumerate(partition) for v in cell}
        refined: List[List[int]] = []
        for cell in partition:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[tuple, List[int]] = {}
            for v in cell:
                outs = Counter(cell_of[u] for u in D.out_neighbors(v))
                ins = Counter(cell_of[u] for u in D.in_neighbors(v))
                sig = (tuple(sorted(outs.items())), tuple(sorted(ins.items())))
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                refined.append(sorted(groups[sig]))
        if len(refined) == len(partition):
            return refined
        partition = refined


def _find(parent: Dict[int, int], v: int) -> int:
    while parent.setdefault(v, v) != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def canonical_form(D: Digraph) -> bytes:
    """
    Certificate equal for two digraphs exactly when they are isomorphic:
    the lexicographically largest packed adjacency matrix over the leaves of
    an individualization/refinement search. Root branches already covered
    by a discovered automorphism are skipped.
    """
    n = D.n
    header = n.to_bytes(2, "big")
    if n == 0:
        return header
    A = D.matrix()
    best: List[Optional[bytes]] = [None]
    seen: Dict[bytes, List[int]] = {}
    orbits: Dict[int, int] = {}

    def leaf(order: List[int]) -> None:
        key = np.packbits(A[np.ix_(order, order)]).tobytes()
        first = seen.get(key)
        if first is None:
            seen[key] = order
        else:
            # first[i] -> order[i] is an automorphism; merge its orbits
            for a, b in zip(first, order):
                ra, rb = _find(orbits, a), _find(orbits, b)
                if ra != rb:
                    orbits[max(ra, rb)] = min(ra, rb)
        if best[0] is None or key > best[0]:
            best[0] = key

    def search(partition: List[List[int]], depth: int) -> None:
        if all(len(c) == 1 for c in partition):
            leaf([c[0] for c in partition])
            return
        target = min((i for i, c in enumerate(partition) if len(c) > 1),
                     key=lambda i: (len(partition[i]), i))
        tried: List[int] = []
        for v in partition[target]:
            if depth == 0 and any(_find(orbits, v) == _find(orbits, t) for t in tried):
                continue
            tried.append(v)
            rest = [u for u in partition[target] if u != v]
            split = partition[:target] + [[v], rest] + partition[target + 1:]
            search(_refine(D, split), depth + 1)

    search(_refine(D, [list(range(n))]), 0)
    return header + best[0]


def is_isomorphic(D1: Digraph, D2: Digraph) -> bool:
    if D1.n != D2.n or D1.m != D2.m:
        return False
    return canonical_form(D1) == canonical_form(D2)
