# chromapath/pathfind.py — brute-force oriented path search, p4 detection and the
# certified two-block finder (a P(k,l) or a proper (k+l)-coloring).

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from chromapath.circuits import Circuit, contract_circuit, is_strongly_connected, k_good_circuit
from chromapath.coloring import VertexColoring, chromatic_number, is_proper
from chromapath.digraph import Digraph, induced
from chromapath.embedding import BlockPattern, Direction, PathEmbedding, check_embedding, p4_pattern, two_block
from chromapath.errors import InternalInconsistency, PreconditionError
from chromapath.outforest import (OutForest, canonical_coloring, lemma31_path, maximal_closure,
                                  violating_arc)

log = logging.getLogger(__name__)


# -------------------- Brute force --------------------

def find_pattern(D: Digraph, pattern: BlockPattern) -> Optional[PathEmbedding]:
    """Lexicographically first embedding of the pattern, by backtracking over vertex sequences."""
    steps = pattern.steps()
    if len(steps) + 1 > D.n:
        return None
    path: List[int] = []
    on_path = set()

    def extend(i: int) -> bool:
        if i == len(steps):
            return True
        v = path[-1]
        nxt = D.out_neighbors(v) if steps[i] is Direction.FORWARD else D.in_neighbors(v)
        for w in nxt:
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            if extend(i + 1):
                return True
            path.pop()
            on_path.discard(w)
        return False

    for s in D.vertices():
        path[:] = [s]
        on_path.clear()
        on_path.add(s)
        if extend(0):
            return PathEmbedding(tuple(path), pattern)
    return None


def find_p4(D: Digraph) -> Optional[PathEmbedding]:
    return find_pattern(D, p4_pattern())


# -------------------- Certified outcome --------------------

@dataclass(frozen=True)
class CertifiedOutcome:
    """Exactly one of embedding / coloring is set."""
    k: int
    l: int
    embedding: Optional[PathEmbedding] = None
    coloring: Optional[VertexColoring] = None
    rule: str = ""

    def __post_init__(self):
        if (self.embedding is None) == (self.coloring is None):
            raise InternalInconsistency("outcome must carry exactly one certificate")

    @property
    def found(self) -> bool:
        return self.embedding is not None

    def validate(self, D: Digraph) -> bool:
        if self.embedding is not None:
            return self.embedding.pattern == two_block(self.k, self.l) and check_embedding(D, self.embedding)
        return self.coloring.k <= self.k + self.l and is_proper(D, self.coloring)

    def to_json(self) -> dict:
        if self.embedding is not None:
            return {"found": True, "certificate": self.embedding.to_json(), "rule": self.rule}
        return {"found": False, "certificate": self.coloring.to_json(), "rule": self.rule}


def _converge(D: Digraph, first: Sequence[int], second: Sequence[int], k: int, l: int) -> PathEmbedding:
    """
    Two directed paths ending at the same vertex and otherwise disjoint: keep k
    arcs of one and l arcs of the other and read them as a P(k,l).
    """
    first, second = list(first), list(second)
    if first[-1] != second[-1]:
        raise InternalInconsistency(f"paths end at {first[-1]} and {second[-1]}")
    for a, b in ((first, second), (second, first)):
        if len(a) >= k + 1 and len(b) >= l + 1:
            left, right = a[-(k + 1):], b[-(l + 1):]
            emb = PathEmbedding(tuple(left + right[::-1][1:]), two_block(k, l))
            if check_embedding(D, emb):
                return emb
    raise InternalInconsistency(f"paths {first} and {second} do not carry a P({k},{l})")


@dataclass
class _Removed:
    circuit: Circuit
    hub: int
    hook: Optional[int]


@dataclass
class _Search:
    """Forest-and-circuit peeling for P(k,l) with k <= l."""
    D: Digraph
    k: int
    l: int
    removed: List[_Removed] = field(default_factory=list)
    owner: Dict[int, int] = field(default_factory=dict)      # circuit vertex -> index in removed
    bad: Dict[int, int] = field(default_factory=dict)        # bad vertex -> index of its circuit
    rule: str = ""

    def found(self, first: Sequence[int], second: Sequence[int], rule: str) -> PathEmbedding:
        log.debug("P(%d,%d) from rule %s", self.k, self.l, rule)
        self.rule = rule
        return _converge(self.D, first, second, self.k, self.l)

    # ---- peeling loop ----

    def peel(self) -> Tuple[Optional[PathEmbedding], OutForest, List[int]]:
        D, k, l = self.D, self.k, self.l
        active = list(D.vertices())
        start: Optional[OutForest] = None
        while True:
            F = maximal_closure(D, start, vertices=active)
            hit = self._check_hooks(F)
            if hit is not None:
                return hit, F, active
            colors = canonical_coloring(F, k, l)
            arc = violating_arc(D, colors)
            if arc is None:
                return None, F, active
            v, w = arc
            i, j = F.level_of(v), F.level_of(w)
            if i < j or j > k:
                self.rule = "forest-arc"
                return lemma31_path(F, (v, w), k, l), F, active
            if i < k + l + 1 or j != k:
                raise InternalInconsistency(f"monochromatic arc ({v},{w}) between levels {i} and {j}")
            ring = Circuit(tuple(F.path_to(v)[k - 1:]))
            C = self._good_circuit(ring)
            at_k = [c for c in C.vertices if F.level_of(c) == k]
            if not at_k:
                c = min(C.vertices, key=lambda x: (F.level_of(x), x))
                return self.found(F.path_to(c), C.path_to(c, l), "circuit-above-level"), F, active
            hub = min(at_k)
            self.owner.update({c: len(self.removed) for c in C.vertices})
            self.removed.append(_Removed(C, hub, F.parent_of(hub)))
            log.debug("removed %d-circuit at hub %d", len(C), hub)
            gone = set(C.vertices)
            active = [x for x in active if x not in gone]
            start = F.restrict(active)

    def _good_circuit(self, ring: Circuit) -> Circuit:
        sub = induced(self.D, ring.vertices)
        if chromatic_number(sub.digraph)[0] <= self.l + 1:
            return ring
        return k_good_circuit(sub.digraph, self.l + 1).mapped(sub.origin)

    def _check_hooks(self, F: OutForest) -> Optional[PathEmbedding]:
        for rec in self.removed:
            if rec.hook is None:
                continue
            depth = F.level_of(rec.hook)
            if depth > self.k - 1:
                return self.found(F.path_to(rec.hook) + [rec.hub], rec.circuit.path_to(rec.hub, self.l), "hook-rose")
            if depth < self.k - 1:
                raise InternalInconsistency(f"hook {rec.hook} dropped to level {depth}")
        return None

    # ---- checks on the final forest ----

    def final_checks(self, F: OutForest, active: List[int]) -> Optional[PathEmbedding]:
        D, k, l = self.D, self.k, self.l
        level = F.levels()

        def full(idx: int, z: int) -> List[int]:
            C = self.removed[idx].circuit
            return C.path_to(z, len(C) - 1)

        for x, y in D.sorted_arcs():
            if x in self.owner and y in self.owner and self.owner[x] != self.owner[y]:
                return self.found(full(self.owner[x], x) + [y], full(self.owner[y], y), "circuit-to-circuit")

        for x, y in D.sorted_arcs():
            if x in level and y in self.owner and level[x] >= k:
                C = self.removed[self.owner[y]].circuit
                return self.found(F.path_to(x) + [y], C.path_to(y, l), "into-circuit")
            if x in self.owner and y in level and level[y] > k:
                return self.found(F.path_to(y), full(self.owner[x], x) + [y], "circuit-to-deep")

        self.bad = {}
        for b in sorted(v for v in active if level[v] == k):
            sources = sorted({self.owner[x] for x in D.in_neighbors(b) if x in self.owner})
            if not sources:
                continue
            if len(sources) > 1:
                x = min(u for u in D.in_neighbors(b) if self.owner.get(u) == sources[0])
                y = min(u for u in D.in_neighbors(b) if self.owner.get(u) == sources[1])
                return self.found(full(sources[0], x) + [b], full(sources[1], y) + [b], "bad-two-circuits")
            idx = sources[0]
            rec = self.removed[idx]
            ins = sorted((u for u in D.in_neighbors(b) if self.owner.get(u) == idx),
                         key=lambda u: rec.circuit.offset(rec.hub, u))
            if len(ins) > l:
                head = [] if rec.hook is None else F.path_to(rec.hook)
                first = head + rec.circuit.segment(rec.hub, ins[0]) + [b]
                second = rec.circuit.segment(ins[1], ins[l]) + [b]
                return self.found(first, second, "bad-many-in")
            self.bad[b] = idx

        for b, idx in self.bad.items():
            C = self.removed[idx].circuit
            v = min(u for u in D.in_neighbors(b) if u in C)
            loop = C.path_to(v, len(C) - 1)
            inside = set(F.subtree(b))
            for x, y in D.sorted_arcs():
                if x in level and y in inside and x not in inside and level[x] >= k:
                    if y == b:
                        raise InternalInconsistency(f"arc ({x},{b}) contradicts forest maximality")
                    return self.found(F.path_to(x) + [y], loop + F.path_to(y)[k - 1:], "enter-subtree")
                if x in inside and y in level and y not in inside and level[y] >= k:
                    if level[y] <= k:
                        raise InternalInconsistency(f"arc ({x},{y}) leaves a subtree into level {level[y]}")
                    return self.found(F.path_to(y), loop + F.path_to(x)[k - 1:] + [y], "leave-subtree")
        return None

    # ---- colouring ----

    def assemble(self, F: OutForest) -> VertexColoring:
        D, k, l = self.D, self.k, self.l
        colors = dict(canonical_coloring(F, k, l).colors)
        for rec in self.removed:
            sub = induced(D, rec.circuit.vertices)
            chi, local = chromatic_number(sub.digraph)
            if chi > l + 1:
                raise InternalInconsistency(f"removed circuit needs {chi} colors")
            for i, v in enumerate(sub.origin):
                colors[v] = k + local.color(i) - 1
        for b, idx in self.bad.items():
            taken = {colors[u] for u in D.in_neighbors(b) if self.owner.get(u) == idx}
            c = min(c for c in range(k, k + l + 1) if c not in taken)
            for v in F.subtree(b):
                colors[v] = k + ((c - k) + F.level_of(v) - k) % (l + 1)
        coloring = VertexColoring(colors, k + l)
        if not is_proper(D, coloring):
            raise InternalInconsistency("assembled coloring is not proper")
        return coloring


def find_two_block_certified(D: Digraph, k: int, l: int) -> CertifiedOutcome:
    """
    Either an embedding of P(k,l) or a proper (k+l)-coloring of D. Whenever
    chi(D) >= k+l+1 the coloring cannot exist, so the embedding is returned.
    """
    if k < 1 or l < 1 or k + l < 3:
        raise PreconditionError(f"need k, l >= 1 and k+l >= 3, got k={k}, l={l}")
    if D.n == 0:
        return CertifiedOutcome(k, l, coloring=VertexColoring({}, k + l), rule="empty")
    lo, hi = min(k, l), max(k, l)
    search = _Search(D, lo, hi)
    emb, F, active = search.peel()
    if emb is None:
        emb = search.final_checks(F, active)
    if emb is None:
        outcome = CertifiedOutcome(k, l, coloring=search.assemble(F), rule="coloring")
    else:
        if k > l:
            emb = emb.reversed()
        outcome = CertifiedOutcome(k, l, embedding=emb, rule=search.rule)
    if not outcome.validate(D):
        raise InternalInconsistency(f"certificate from rule {outcome.rule} does not validate")
    return outcome


# -------------------- Strongly connected route --------------------

def _path_into(Q: Digraph, target: int, length: int) -> Optional[List[int]]:
    """A directed path with `length` arcs ending at target, searched backwards."""
    path = [target]

    def grow() -> bool:
        if len(path) == length + 1:
            return True
        for u in Q.in_neighbors(path[-1]):
            if u in path:
                continue
            path.append(u)
            if grow():
                return True
            path.pop()
        return False

    return path[::-1] if grow() else None


def corollary35_find(D: Digraph, k: int, l: int) -> PathEmbedding:
    """
    Strongly connected D with chi(D) >= k+l+1 >= 4: contract an (l+1)-good
    circuit C (with l >= k), walk k arcs into the contracted vertex and finish
    along C.
    """
    if k < 1 or l < 1 or k + l < 3:
        raise PreconditionError(f"need k, l >= 1 and k+l >= 3, got k={k}, l={l}")
    if not is_strongly_connected(D):
        raise PreconditionError("digraph is not strongly connected")
    chi = chromatic_number(D)[0]
    if chi < k + l + 1:
        raise PreconditionError(f"chi(D) = {chi} < k+l+1 = {k + l + 1}")
    lo, hi = min(k, l), max(k, l)
    C = k_good_circuit(D, hi + 1)
    Q, image, hub = contract_circuit(D, C)
    if chromatic_number(Q)[0] < lo + 1:
        raise InternalInconsistency(f"contracting a {hi + 1}-good circuit left chi below {lo + 1}")
    walk = _path_into(Q, hub, lo)
    if walk is None:
        raise InternalInconsistency(f"no path of length {lo} ends at the contracted vertex")
    back = {image[v]: v for v in D.vertices() if image[v] != hub}
    lifted = [back[q] for q in walk[:-1]]
    entry = min(c for c in C.vertices if D.has_arc(lifted[-1], c))
    emb = _converge(D, lifted + [entry], C.path_to(entry, hi), lo, hi)
    return emb.reversed() if k > l else emb
