# chromapath/circuits.py — strong components, circuit search, k-good circuits,
# handle decompositions, circuit contraction and the longest-circuit check.

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from scipy.sparse import csgraph

from chromapath.coloring import chromatic_number, chromatic_number_of
from chromapath.config import MAX_SCAN_ORDER
from chromapath.digraph import Arc, Contraction, Digraph, contract
from chromapath.errors import InputError, InternalInconsistency, PreconditionError, ScopeError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Circuit:
    """Directed circuit v_0 -> v_1 -> ... -> v_{len-1} -> v_0."""
    vertices: Tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if len(vs) < 2:
            raise InputError("a circuit has at least two vertices")
        if len(set(vs)) != len(vs):
            raise InputError(f"circuit repeats a vertex: {list(vs)}")
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def index(self, v: int) -> int:
        return self.vertices.index(v)

    def arcs(self) -> List[Arc]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def path_to(self, z: int, length: int) -> List[int]:
        """The directed path of `length` arcs along the circuit ending at z."""
        if not 0 <= length < len(self):
            raise InputError(f"a path inside a {len(self)}-circuit has length 0..{len(self) - 1}")
        i = self.index(z)
        return [self.vertices[(i - length + t) % len(self)] for t in range(length + 1)]

    def segment(self, a: int, b: int) -> List[int]:
        """C[a,b]: from a forward along the circuit up to b, both included."""
        i, j = self.index(a), self.index(b)
        return [self.vertices[(i + t) % len(self)] for t in range((j - i) % len(self) + 1)]

    def offset(self, a: int, b: int) -> int:
        """Number of arcs from a forward to b."""
        return (self.index(b) - self.index(a)) % len(self)

    def mapped(self, origin: Sequence[int]) -> "Circuit":
        return Circuit(tuple(origin[v] for v in self.vertices))

    def validate(self, D: Digraph) -> None:
        for v in self.vertices:
            if not 0 <= v < D.n:
                raise InputError(f"circuit vertex {v} outside 0..{D.n - 1}")
        for x, y in self.arcs():
            if not D.has_arc(x, y):
                raise InputError(f"({x},{y}) is not an arc, so {list(self.vertices)} is not a circuit")

    def to_json(self) -> dict:
        return {"kind": "circuit", "length": len(self), "vertices": list(self.vertices)}


# -------------------- Connectivity --------------------

def strong_components(D: Digraph) -> List[List[int]]:
    """Strong components ordered by their smallest vertex."""
    if D.n == 0:
        return []
    _, labels = csgraph.connected_components(D.adjacency_matrix(), directed=True, connection="strong")
    groups: Dict[int, List[int]] = {}
    for v, lab in enumerate(labels):
        groups.setdefault(int(lab), []).append(v)
    return sorted(groups.values(), key=lambda g: g[0])


def is_strongly_connected(D: Digraph) -> bool:
    return D.n >= 1 and len(strong_components(D)) == 1


def _require_strong(D: Digraph) -> None:
    if not is_strongly_connected(D):
        raise PreconditionError("digraph is not strongly connected")


# -------------------- Circuit search --------------------

def _circuit_of_length(D: Digraph, length: int) -> Optional[Circuit]:
    """First circuit of exactly `length` vertices: smallest start vertex, then ascending neighbours."""
    for s in D.vertices():
        path, on_path = [s], {s}

        def extend() -> bool:
            v = path[-1]
            if len(path) == length:
                return D.has_arc(v, s)
            for w in D.out_neighbors(v):
                if w <= s or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                if extend():
                    return True
                path.pop()
                on_path.discard(w)
            return False

        if extend():
            return Circuit(tuple(path))
    return None


def shortest_circuit_at_least(D: Digraph, k: int) -> Optional[Circuit]:
    if k < 2:
        raise PreconditionError(f"circuit length bound must be at least 2, got {k}")
    for length in range(k, D.n + 1):
        found = _circuit_of_length(D, length)
        if found is not None:
            return found
    return None


def longest_circuit(D: Digraph) -> Optional[Circuit]:
    for length in range(D.n, 1, -1):
        found = _circuit_of_length(D, length)
        if found is not None:
            return found
    return None


def k_good_circuit(D: Digraph, k: int) -> Circuit:
    """
    A circuit C with |C| >= k and chi(D[V(C)]) <= k. The shortest circuit of
    length at least k always qualifies in a strongly connected digraph with
    3 <= k <= chi(D); both conditions are rechecked before returning.
    """
    _require_strong(D)
    chi = chromatic_number(D)[0]
    if not 3 <= k <= chi:
        raise PreconditionError(f"k-good circuits need 3 <= k <= chi(D) = {chi}, got k={k}")
    C = shortest_circuit_at_least(D, k)
    if C is None:
        raise InternalInconsistency(f"strongly connected {chi}-chromatic digraph has no circuit of length >= {k}")
    inner = chromatic_number_of(D, C.vertices)
    if len(C) < k or inner > k:
        raise InternalInconsistency(f"shortest circuit of length >= {k} induces chi {inner}")
    log.debug("%d-good circuit of length %d (induced chi %d)", k, len(C), inner)
    return C


# -------------------- Handle decompositions --------------------

@dataclass
class HandleDecomposition:
    """handles[0] is a circuit (closed vertex sequence); later handles are paths given end to end."""
    handles: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def r(self) -> int:
        return len(self.handles)

    @property
    def trivial_count(self) -> int:
        return sum(1 for h in self.handles[1:] if len(h) == 2)

    def handle_arcs(self, i: int) -> List[Arc]:
        h = self.handles[i]
        if i == 0:
            return Circuit(h).arcs()
        return list(zip(h[:-1], h[1:]))

    def to_json(self) -> dict:
        return {"kind": "handles", "r": self.r, "trivial_count": self.trivial_count,
                "handles": [list(h) for h in self.handles]}


def _longest_handle(D: Digraph, covered: set, used: set) -> Optional[Tuple[int, ...]]:
    best: Optional[Tuple[int, ...]] = None

    def grow(path: List[int]) -> None:
        nonlocal best
        v = path[-1]
        for w in D.out_neighbors(v):
            if (v, w) in used:
                continue
            if w in covered:
                if len(path) >= 2 and (best is None or len(path) + 1 > len(best)):
                    best = tuple(path + [w])
            elif w not in path:
                grow(path + [w])

    for u in sorted(covered):
        grow([u])
    return best


def handle_decomposition(D: Digraph) -> HandleDecomposition:
    """
    Greedy ear construction: the longest circuit first, then repeatedly the
    longest handle through uncovered vertices, then every remaining arc as a
    trivial handle in ascending order.
    """
    _require_strong(D)
    if D.n == 1:
        return HandleDecomposition([])
    first = longest_circuit(D)
    handles: List[Tuple[int, ...]] = [first.vertices]
    covered, used = set(first.vertices), set(first.arcs())
    while len(covered) < D.n:
        h = _longest_handle(D, covered, used)
        if h is None:
            raise InternalInconsistency("strongly connected digraph ran out of handles")
        handles.append(h)
        covered.update(h)
        used.update(zip(h[:-1], h[1:]))
    handles.extend(arc for arc in D.sorted_arcs() if arc not in used)
    H = HandleDecomposition(handles)
    log.debug("handle decomposition: r=%d, %d trivial", H.r, H.trivial_count)
    return H


def check_handle_decomposition(D: Digraph, H: HandleDecomposition) -> bool:
    """Independent validator: ear conditions, exact arc cover and r = m - n + 1."""
    if D.n == 1:
        return H.r == 0 and D.m == 0
    if not H.handles:
        return False
    try:
        first = Circuit(H.handles[0])
        first.validate(D)
    except InputError:
        return False
    covered, used = set(first.vertices), set(first.arcs())
    for i in range(1, H.r):
        h = H.handles[i]
        if len(h) < 2 or h[0] not in covered or h[-1] not in covered:
            return False
        inner = h[1:-1]
        if len(set(inner)) != len(inner) or any(v in covered for v in inner):
            return False
        for arc in H.handle_arcs(i):
            if not D.has_arc(*arc) or arc in used:
                return False
            used.add(arc)
        covered.update(h)
    return covered == set(D.vertices()) and used == set(D.arcs) and H.r == D.m - D.n + 1


# -------------------- Contraction & longest-circuit check --------------------

def contract_circuit(D: Digraph, C: Circuit) -> Contraction:
    C.validate(D)
    return contract(D, C.vertices, multigraph=True)


@dataclass(frozen=True)
class BondyCheck:
    chi: int
    longest: int
    circuit: Optional[Circuit]

    @property
    def passed(self) -> bool:
        return self.longest >= self.chi

    def to_json(self) -> dict:
        return {"kind": "bondy", "chi": self.chi, "longest": self.longest, "passed": self.passed,
                "circuit": None if self.circuit is None else list(self.circuit.vertices)}


def verify_bondy(D: Digraph) -> BondyCheck:
    """Exact chi against the exact longest circuit length of a strongly connected digraph."""
    if D.n < 2:
        raise PreconditionError("longest-circuit check needs at least two vertices")
    if D.n > MAX_SCAN_ORDER:
        raise ScopeError(f"exhaustive circuit search is capped at {MAX_SCAN_ORDER} vertices", MAX_SCAN_ORDER)
    _require_strong(D)
    C = longest_circuit(D)
    return BondyCheck(chromatic_number(D)[0], 0 if C is None else len(C), C)
