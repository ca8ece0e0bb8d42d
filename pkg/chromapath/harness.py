# chromapath/harness.py — verification campaigns: each one builds a corpus (enumerated
# classes plus seeded samples), checks every instance and merges a report.

from __future__ import annotations
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

import networkx as nx

from chromapath.circuits import (check_handle_decomposition, handle_decomposition,
                                 is_strongly_connected, k_good_circuit, verify_bondy)
from chromapath.coloring import chromatic_number, chromatic_number_of
from chromapath.config import (ART_DIR, MAX_ORIENTED_ORDER, MAX_SCAN_ORDER, MAX_TOURNAMENT_ORDER,
                              resolve_jobs, resolve_seed)
from chromapath.corpus import (build_elsahili_example, build_t5, load_or_enumerate,
                               sample_digraphs, theorem21_fixtures)
from chromapath.digraph import Digraph, is_isomorphic, parse_arclist, to_arclist
from chromapath.embedding import Direction, antidirected, check_embedding, patterns_of_length, two_block
from chromapath.errors import ChromapathError, PreconditionError, ScopeError
from chromapath.outforest import corollary32_find, gallai_roy_path
from chromapath.pathfind import corollary35_find, find_p4, find_pattern, find_two_block_certified

log = logging.getLogger(__name__)

Finding = Tuple[str, str]          # ("failure" | "observation", detail)
GRUNBAUM_COUNT = "p4-free 5-tournament classes, expected 1"


@dataclass
class VerificationReport:
    campaign: str
    scope: Dict[str, object]
    failures: List[Dict[str, str]] = field(default_factory=list)
    observations: List[Dict[str, str]] = field(default_factory=list)
    elapsed_ms: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        if other.campaign != self.campaign:
            raise PreconditionError(f"cannot merge {other.campaign} into {self.campaign}")
        scope = dict(self.scope)
        scope["orders"] = sorted(set(self.scope.get("orders", [])) | set(other.scope.get("orders", [])))
        for key in ("classes", "samples"):
            scope[key] = int(self.scope.get(key, 0)) + int(other.scope.get(key, 0))
        elapsed = None
        if self.elapsed_ms is not None and other.elapsed_ms is not None:
            elapsed = self.elapsed_ms + other.elapsed_ms
        return VerificationReport(self.campaign, scope, self.failures + other.failures,
                                  self.observations + other.observations, elapsed)

    def to_json(self, timing: bool = True) -> dict:
        return {
            "campaign": self.campaign,
            "scope": self.scope,
            "passed": self.passed,
            "failures": self.failures,
            "observations": self.observations,
            "elapsed_ms": self.elapsed_ms if timing else None,
        }

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)


# -------------------- Per-instance checks --------------------
# Top-level functions so worker processes can pickle them.

def _guard(check: Callable[[Digraph], List[Finding]]) -> Callable[[Digraph], List[Finding]]:
    def run(D: Digraph) -> List[Finding]:
        try:
            return check(D)
        except ChromapathError as e:
            return [("failure", f"{type(e).__name__}: {e}")]
        except Exception as e:
            log.warning("%s crashed on a %d-vertex instance: %r", check.__name__, D.n, e)
            return [("failure", f"unexpected {type(e).__name__}: {e}")]
    run.__name__ = check.__name__
    return run


def check_grunbaum(D: Digraph) -> List[Finding]:
    free = find_p4(D) is None
    is_t5 = is_isomorphic(D, build_t5())
    if free and not is_t5:
        return [("failure", "p4-free 5-tournament not isomorphic to T_5")]
    if is_t5 and not free:
        return [("failure", "T_5 contains p4")]
    return [("observation", "p4-free class isomorphic to T_5")] if free else []


def check_bondy(D: Digraph) -> List[Finding]:
    res = verify_bondy(D)
    if not res.passed:
        return [("failure", f"longest circuit {res.longest} < chi {res.chi}")]
    return []


def check_cor32(D: Digraph) -> List[Finding]:
    chi = chromatic_number(D)[0]
    out = []
    for k in (1, 2):
        for l in (1, 2):
            if chi < k + l + 2:
                continue
            emb = corollary32_find(D, k, l)
            if emb.pattern != two_block(k, l) or not check_embedding(D, emb):
                out.append(("failure", f"invalid P({k},{l}) embedding {list(emb.vertices)}"))
    return out


def check_thm36(D: Digraph) -> List[Finding]:
    chi = chromatic_number(D)[0]
    out = []
    for total in (chi - 1, chi):
        if total < 3:
            continue
        for k in range(1, total):
            l = total - k
            res = find_two_block_certified(D, k, l)
            if not res.validate(D):
                out.append(("failure", f"P({k},{l}) certificate from {res.rule} does not validate"))
                continue
            if chi >= k + l + 1 and not res.found:
                out.append(("failure", f"proper {k + l}-coloring returned for a {chi}-chromatic digraph"))
            brute = find_pattern(D, two_block(k, l))
            if res.found and brute is None:
                out.append(("failure", f"certified P({k},{l}) found but brute force finds none"))
            if chi >= k + l + 1 and brute is None:
                out.append(("failure", f"brute force finds no P({k},{l}) in a {chi}-chromatic digraph"))
    return out


def _has_k5(D: Digraph) -> bool:
    return max((len(c) for c in nx.find_cliques(D.underlying_graph())), default=0) >= 5


def check_conj219(D: Digraph) -> List[Finding]:
    chi = chromatic_number(D)[0]
    if chi != 5 or _has_k5(D):
        return []
    out = []
    p4 = find_pattern(D, antidirected(4, Direction.BACKWARD))
    if p4 is None:
        out.append(("observation", "5-chromatic, no 5-tournament, p4-free"))
        if D.min_out_degree() >= 2:
            out.append(("failure", "qualifying digraph without the antidirected path of length 4"))
    return out


def check_conj38(D: Digraph) -> List[Finding]:
    chi = chromatic_number(D)[0]
    if chi < 2:
        return []
    out = []
    for pattern in patterns_of_length(chi - 1):
        if find_pattern(D, pattern) is None:
            kind = "failure" if chi >= 8 else "observation"
            out.append((kind, f"chi={chi}: pattern {pattern} missing"))
    return out


def check_gallai_roy(D: Digraph) -> List[Finding]:
    emb = gallai_roy_path(D)
    chi = chromatic_number(D)[0]
    if not check_embedding(D, emb):
        return [("failure", f"invalid directed path {list(emb.vertices)}")]
    if len(emb.vertices) < chi:
        return [("failure", f"path order {len(emb.vertices)} < chi {chi}")]
    return []


def check_lemma34(D: Digraph) -> List[Finding]:
    chi = chromatic_number(D)[0]
    out = []
    for k in range(3, chi + 1):
        C = k_good_circuit(D, k)
        C.validate(D)
        inner = chromatic_number_of(D, C.vertices)
        if len(C) < k or inner > k:
            out.append(("failure", f"k={k}: circuit {list(C.vertices)} has length {len(C)}, induced chi {inner}"))
    return out


def check_handles(D: Digraph) -> List[Finding]:
    H = handle_decomposition(D)
    if H.r != D.m - D.n + 1:
        return [("failure", f"r={H.r} but m-n+1={D.m - D.n + 1}")]
    if not check_handle_decomposition(D, H):
        return [("failure", "handle decomposition fails the ear conditions")]
    return []


def check_thm37(D: Digraph) -> List[Finding]:
    chi = chromatic_number(D)[0]
    out = []
    for n in range(4, chi + 1):
        if find_pattern(D, two_block(n - 2, 1)) is None:
            out.append(("failure", f"no P({n - 2},1) although chi={chi}"))
    return out


def check_cor35(D: Digraph) -> List[Finding]:
    chi = chromatic_number(D)[0]
    out = []
    if chi < 4:
        return out
    for k in range(1, chi - 1):
        l = chi - 1 - k
        emb = corollary35_find(D, k, l)
        if emb.pattern != two_block(k, l) or not check_embedding(D, emb):
            out.append(("failure", f"invalid P({k},{l}) embedding {list(emb.vertices)}"))
    return out


def check_elsahili(D: Digraph) -> List[Finding]:
    chi = chromatic_number(D)[0]
    if is_isomorphic(D, build_elsahili_example()):
        out = []
        if find_p4(D) is not None:
            out.append(("failure", "example contains p4"))
        if chi != 5:
            out.append(("failure", f"example has chi {chi}"))
        low = [v for v in D.vertices() if D.out_degree(v) < 2]
        if len(low) != 1:
            out.append(("failure", f"{len(low)} vertices with out-degree below 2"))
        return out
    if chi != 5 or D.min_out_degree() < 2 or not nx.is_connected(D.underlying_graph()):
        return [("failure", "fixture does not meet the hypotheses")]
    if find_p4(D) is None:
        return [("failure", "p4-free digraph meeting the hypotheses")]
    return []


# -------------------- Corpora --------------------

class Scope(NamedTuple):
    digraphs: List[Digraph]
    orders: List[int]
    classes: int
    samples: int


def _classes(kind: str, lo: int, hi: int, cache) -> List[Digraph]:
    out: List[Digraph] = []
    for n in range(lo, hi + 1):
        out.extend(load_or_enumerate(kind, n, cache))
    return out


def _scope(classes: List[Digraph], sampled: List[Digraph]) -> Scope:
    everything = classes + sampled
    return Scope(everything, sorted({D.n for D in everything}), len(classes), len(sampled))


def corpus_grunbaum(max_n, seed, samples, cache) -> Scope:
    return _scope(load_or_enumerate("tournaments", 5, cache), [])


def corpus_bondy(max_n, seed, samples, cache) -> Scope:
    top = min(max_n, MAX_TOURNAMENT_ORDER)
    classes = [D for D in _classes("tournaments", 3, top, cache) if is_strongly_connected(D)]
    return _scope(classes, sample_digraphs(samples, 3, min(max_n, 9), seed, strong=True))


def corpus_cor32(max_n, seed, samples, cache) -> Scope:
    return _scope([], sample_digraphs(samples, 4, max_n, seed, p_range=(0.6, 1.0)))


def corpus_thm36(max_n, seed, samples, cache) -> Scope:
    top = min(max_n, MAX_TOURNAMENT_ORDER)
    return _scope(_classes("tournaments", 4, top, cache), sample_digraphs(samples, 4, max_n, seed))


def corpus_conj219(max_n, seed, samples, cache) -> Scope:
    classes = _classes("oriented", 5, min(max_n, MAX_ORIENTED_ORDER), cache)
    classes += _classes("tournaments", 5, min(max_n, MAX_TOURNAMENT_ORDER), cache)
    return _scope(classes, sample_digraphs(samples, 6, max_n, seed, p_range=(0.5, 0.95)))


def corpus_conj38(max_n, seed, samples, cache) -> Scope:
    classes = _classes("tournaments", 3, min(max_n, MAX_TOURNAMENT_ORDER), cache)
    return _scope(classes, sample_digraphs(samples, 5, max_n, seed, p_range=(0.5, 1.0)))


def corpus_gallai_roy(max_n, seed, samples, cache) -> Scope:
    classes = _classes("oriented", 1, min(max_n, MAX_ORIENTED_ORDER), cache)
    return _scope(classes, sample_digraphs(samples, 6, max_n, seed))


def corpus_lemma34(max_n, seed, samples, cache) -> Scope:
    return _scope([], sample_digraphs(samples, 3, max_n, seed, strong=True))


def corpus_handles(max_n, seed, samples, cache) -> Scope:
    return _scope([], sample_digraphs(samples, 3, max_n, seed, strong=True))


def corpus_thm37(max_n, seed, samples, cache) -> Scope:
    classes = _classes("oriented", 4, min(max_n, MAX_ORIENTED_ORDER), cache)
    classes += _classes("tournaments", 4, min(max_n, MAX_TOURNAMENT_ORDER), cache)
    return _scope(classes, sample_digraphs(samples, 4, max_n, seed, p_range=(0.6, 1.0)))


def corpus_cor35(max_n, seed, samples, cache) -> Scope:
    return _scope([], sample_digraphs(samples, 4, max_n, seed, strong=True, p_range=(0.6, 1.0)))


def corpus_elsahili(max_n, seed, samples, cache) -> Scope:
    return _scope([build_elsahili_example()] + theorem21_fixtures(), [])


class Campaign(NamedTuple):
    name: str
    corpus: Callable[..., Scope]
    check: Callable[[Digraph], List[Finding]]
    max_n: int
    samples: int
    seeded: bool


CAMPAIGNS: Dict[str, Campaign] = {c.name: c for c in [
    Campaign("grunbaum", corpus_grunbaum, check_grunbaum, 5, 0, False),
    Campaign("bondy", corpus_bondy, check_bondy, 9, 200, True),
    Campaign("cor32", corpus_cor32, check_cor32, 10, 300, True),
    Campaign("thm36", corpus_thm36, check_thm36, 10, 1000, True),
    Campaign("conj219", corpus_conj219, check_conj219, 8, 200, True),
    Campaign("conj38", corpus_conj38, check_conj38, 9, 100, True),
    Campaign("gallai_roy", corpus_gallai_roy, check_gallai_roy, 12, 500, True),
    Campaign("lemma34", corpus_lemma34, check_lemma34, 8, 200, True),
    Campaign("handles", corpus_handles, check_handles, 8, 100, True),
    Campaign("thm37", corpus_thm37, check_thm37, 9, 200, True),
    Campaign("cor35", corpus_cor35, check_cor35, 9, 150, True),
    Campaign("elsahili", corpus_elsahili, check_elsahili, 7, 0, False),
]}


# -------------------- Runner --------------------

def check_instance(args: Tuple[str, Digraph]) -> List[Finding]:
    name, D = args
    return _guard(CAMPAIGNS[name].check)(D)


def run_campaign(name: str,
                 max_n: Optional[int] = None,
                 seed: Optional[int] = None,
                 samples: Optional[int] = None,
                 jobs: Optional[int] = None,
                 cache=ART_DIR) -> VerificationReport:
    """
    Run one campaign. With jobs > 1 instances are checked in worker processes;
    results are merged in corpus order so the report does not depend on jobs.
    """
    if name not in CAMPAIGNS:
        raise PreconditionError(f"unknown campaign {name!r}; choose from {', '.join(CAMPAIGNS)}")
    camp = CAMPAIGNS[name]
    max_n = camp.max_n if max_n is None else int(max_n)
    if max_n > MAX_SCAN_ORDER:
        raise ScopeError(f"campaign {name} is capped at {MAX_SCAN_ORDER} vertices, got max_n={max_n}", MAX_SCAN_ORDER)
    samples = camp.samples if samples is None else int(samples)
    seed = resolve_seed(seed)
    jobs = resolve_jobs(jobs)
    t0 = time.perf_counter()

    scope = camp.corpus(max_n, seed, samples, cache)
    log.info("%s: %d instances (%d classes, %d samples)", name, len(scope.digraphs), scope.classes, scope.samples)
    work = [(name, D) for D in scope.digraphs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(check_instance, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [check_instance(w) for w in work]

    report = VerificationReport(name, {
        "orders": scope.orders,
        "classes": scope.classes,
        "samples": scope.samples,
        "seed": seed if camp.seeded else None,
    })
    for D, findings in zip(scope.digraphs, results):
        for kind, detail in findings:
            entry = {"arclist": to_arclist(D), "detail": detail}
            (report.failures if kind == "failure" else report.observations).append(entry)

    if name == "grunbaum":
        free = len(report.observations)
        if free != 1:
            report.failures.append({"arclist": to_arclist(build_t5()), "detail": f"{free} {GRUNBAUM_COUNT}"})

    report.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    log.info("%s: %s, %d failures, %d observations in %d ms", name,
             "pass" if report.passed else "FAIL", len(report.failures), len(report.observations), report.elapsed_ms)
    return report


# Shorthand entry points.
def verify_grunbaum(cache=ART_DIR) -> VerificationReport:
    return run_campaign("grunbaum", cache=cache)


def scan_conjecture_219(max_n_vertices: int, seed: Optional[int] = None,
                        samples: Optional[int] = None, cache=ART_DIR) -> VerificationReport:
    return run_campaign("conj219", max_n=max_n_vertices, seed=seed, samples=samples, cache=cache)


def scan_conjecture_38(max_n_vertices: int, seed: Optional[int] = None,
                       samples: Optional[int] = None, cache=ART_DIR) -> VerificationReport:
    return run_campaign("conj38", max_n=max_n_vertices, seed=seed, samples=samples, cache=cache)


def replay_failure(campaign: str, entry: Dict[str, str], cache=ART_DIR) -> Optional[str]:
    """
    Re-check one stored failure; returns the current failure detail, or None when
    it no longer fails. Campaign-wide failures are re-derived from a fresh run,
    since their witness alone does not fail the per-instance check.
    """
    if campaign == "grunbaum" and entry["detail"].endswith(GRUNBAUM_COUNT):
        fresh = run_campaign("grunbaum", jobs=1, cache=cache)
        still = [f["detail"] for f in fresh.failures if f["detail"].endswith(GRUNBAUM_COUNT)]
        return still[0] if still else None
    D = parse_arclist(entry["arclist"])
    still = [d for kind, d in check_instance((campaign, D)) if kind == "failure"]
    return still[0] if still else None
