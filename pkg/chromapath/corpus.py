# chromapath/corpus.py — named digraph families, fixture corpus, seeded samplers
# and tournament / oriented-graph enumeration with an on-disk cache.

from __future__ import annotations
import logging
from itertools import product
from pathlib import Path
from typing import Dict, Iterable, List, Optional

import numpy as np

from chromapath.config import ART_DIR, MAX_ORIENTED_ORDER, MAX_TOURNAMENT_ORDER
from chromapath.digraph import Digraph, canonical_form, dump_arclists, parse_arclists
from chromapath.errors import PreconditionError, ScopeError

log = logging.getLogger(__name__)


# -------------------- Named families --------------------

def edgeless(n: int) -> Digraph:
    return Digraph(n)


def directed_path(n: int) -> Digraph:
    return Digraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def directed_cycle(n: int) -> Digraph:
    if n < 3:
        raise PreconditionError("an oriented circuit needs at least 3 vertices")
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def build_t5() -> Digraph:
    """The 2-in/2-out regular 5-tournament: i -> i+1 and i -> i+2 (mod 5)."""
    return Digraph(5, frozenset((i, (i + d) % 5) for i in range(5) for d in (1, 2)))


def build_elsahili_example() -> Digraph:
    """T_5 plus a pendant vertex 5 with the single arc 5 -> 0: p4-free although 5-chromatic."""
    return Digraph(6, build_t5().arcs | {(5, 0)})


def theorem21_fixtures() -> List[Digraph]:
    """
    Connected 5-chromatic digraphs with every out-degree >= 2 that are not T_5;
    each must contain p4.
    """
    t5 = build_t5().arcs
    tt5 = transitive_tournament(5).arcs
    return [
        # T_5 with an apex sending two arcs into it
        Digraph(6, t5 | {(5, 0), (5, 1)}),
        # T_5 with a 2-vertex tail: 6 -> 5, both reach into T_5
        Digraph(7, t5 | {(5, 0), (5, 2), (6, 5), (6, 3)}),
        # TT_5 repaired by two extra vertices
        Digraph(7, tt5 | {(3, 5), (4, 5), (4, 6), (5, 6), (5, 0), (6, 0), (6, 1)}),
        # T_5 with an apex that is also dominated
        Digraph(6, t5 | {(5, 1), (5, 3), (0, 5), (2, 5)}),
    ]


# -------------------- Samplers --------------------

def random_digraph(n: int, p: float, rng: np.random.Generator) -> Digraph:
    """Each pair is adjacent with probability p, oriented uniformly."""
    arcs = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                arcs.add((i, j) if rng.random() < 0.5 else (j, i))
    return Digraph(n, frozenset(arcs))


def random_tournament(n: int, rng: np.random.Generator) -> Digraph:
    return random_digraph(n, 1.0, rng)


def random_strong_digraph(n: int, p: float, rng: np.random.Generator) -> Digraph:
    """A random hamiltonian circuit plus randomly oriented extra pairs; strongly connected for n >= 3."""
    if n < 3:
        raise PreconditionError("strongly connected oriented digraphs need at least 3 vertices")
    order = [int(v) for v in rng.permutation(n)]
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in arcs or (j, i) in arcs:
                continue
            if rng.random() < p:
                arcs.add((i, j) if rng.random() < 0.5 else (j, i))
    return Digraph(n, frozenset(arcs))


def sample_digraphs(count: int, lo: int, hi: int, seed: int,
                    strong: bool = False, p_range=(0.35, 0.95)) -> List[Digraph]:
    if hi < lo:
        return []
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(lo, hi + 1))
        p = float(rng.uniform(*p_range))
        out.append(random_strong_digraph(n, p, rng) if strong else random_digraph(n, p, rng))
    return out


# -------------------- Enumeration --------------------

def _extend_classes(previous: Iterable[Digraph], choices: List[tuple], reverse: bool) -> List[Digraph]:
    seen: Dict[bytes, Digraph] = {}
    base = list(previous)
    if reverse:
        base, choices = base[::-1], choices[::-1]
    for D in base:
        v = D.n
        for choice in choices:
            arcs = set(D.arcs)
            for u, c in enumerate(choice):
                if c == 1:
                    arcs.add((u, v))
                elif c == 2:
                    arcs.add((v, u))
            E = Digraph(v + 1, frozenset(arcs))
            key = canonical_form(E)
            if key not in seen:
                seen[key] = E
    return [seen[key] for key in sorted(seen)]


def enumerate_tournaments(n: int, reverse: bool = False) -> List[Digraph]:
    """One tournament per isomorphism class, built by vertex extension and canonical dedupe."""
    if n > MAX_TOURNAMENT_ORDER:
        raise ScopeError(f"tournament enumeration is capped at {MAX_TOURNAMENT_ORDER} vertices", MAX_TOURNAMENT_ORDER)
    if n < 1:
        return []
    classes = [Digraph(1)]
    for size in range(1, n):
        classes = _extend_classes(classes, list(product((1, 2), repeat=size)), reverse)
        log.debug("%d tournament classes on %d vertices", len(classes), size + 1)
    return classes


def enumerate_oriented_graphs(n: int, reverse: bool = False) -> List[Digraph]:
    """One oriented graph per isomorphism class (every vertex pair: no arc, or one direction)."""
    if n > MAX_ORIENTED_ORDER:
        raise ScopeError(f"oriented-graph enumeration is capped at {MAX_ORIENTED_ORDER} vertices", MAX_ORIENTED_ORDER)
    if n < 1:
        return []
    classes = [Digraph(1)]
    for size in range(1, n):
        classes = _extend_classes(classes, list(product((0, 1, 2), repeat=size)), reverse)
        log.debug("%d oriented classes on %d vertices", len(classes), size + 1)
    return classes


_ENUMERATORS = {"tournaments": enumerate_tournaments, "oriented": enumerate_oriented_graphs}


def load_or_enumerate(kind: str, n: int, art_dir: Optional[Path] = ART_DIR) -> List[Digraph]:
    """Cached enumeration: read <art_dir>/<kind>_<n>.txt when present, else build and save it."""
    build = _ENUMERATORS[kind]
    if art_dir is None:
        return build(n)
    path = Path(art_dir) / f"{kind}_{n}.txt"
    if path.exists():
        classes = parse_arclists(path.read_text(encoding="utf-8"))
        log.info("loaded %d %s classes from %s", len(classes), kind, path)
        return classes
    classes = build(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_arclists(classes), encoding="utf-8")
    log.info("saved %d %s classes to %s", len(classes), kind, path)
    return classes
