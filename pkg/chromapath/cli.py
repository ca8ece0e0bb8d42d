# chromapath/cli.py — command-line entry point: chi, forest, find, circuit, contract, verify
#
# Exit codes: 0 found / pass, 1 not found / fail, 2 usage, 3 input or
# precondition error, 4 internal inconsistency.

from __future__ import annotations
import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO

from chromapath.circuits import (Circuit, contract_circuit, handle_decomposition, k_good_circuit,
                                 shortest_circuit_at_least)
from chromapath.coloring import chromatic_number, k_critical_subdigraph
from chromapath.config import ART_DIR, configure_logging
from chromapath.digraph import Digraph, contract, parse_arclist, to_arclist, to_dot
from chromapath.embedding import BlockPattern, PathEmbedding, p4_pattern
from chromapath.errors import ChromapathError, InputError, InternalInconsistency
from chromapath.harness import CAMPAIGNS, run_campaign
from chromapath.outforest import corollary32_find, maximal_closure
from chromapath.pathfind import corollary35_find, find_pattern, find_two_block_certified
from chromapath.reports import format_text

log = logging.getLogger(__name__)

EXIT_OK, EXIT_MISS, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3, 4


# -------------------- helpers --------------------

def _read_digraph(path: str) -> Digraph:
    if path == "-":
        return parse_arclist(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as f:
            return parse_arclist(f.read())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")


def _csv_vertices(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated vertex ids, got {text!r}")


def _emit(args: argparse.Namespace, payload: dict, dot: Optional[str] = None, text: Optional[str] = None) -> None:
    out: TextIO = sys.stdout
    if args.format == "dot" and dot is not None:
        out.write(dot)
    elif args.format == "text" and text is not None:
        out.write(text.rstrip("\n") + "\n")
    else:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _embedding_dot(D: Digraph, emb: Optional[PathEmbedding]) -> str:
    styles = {arc: "bold" for arc in emb.arcs()} if emb is not None else {}
    return to_dot(D, styles)


# -------------------- subcommands --------------------

def cmd_chi(args: argparse.Namespace) -> int:
    D = _read_digraph(args.input)
    chi, coloring = chromatic_number(D)
    payload = {"chi": chi, "coloring": coloring.to_json()}
    if args.critical is not None:
        crit = k_critical_subdigraph(D, args.critical)
        payload["critical"] = {"k": args.critical, "vertices": list(crit.origin),
                               "arclist": to_arclist(crit.digraph)}
    labels = {v: f"{v}:{coloring.color(v)}" for v in D.vertices()}
    text = f"chi = {chi}\n" + "\n".join(f"{c}: {' '.join(map(str, vs))}" for c, vs in coloring.classes().items())
    _emit(args, payload, dot=to_dot(D, labels=labels), text=text)
    return EXIT_OK


def cmd_forest(args: argparse.Namespace) -> int:
    D = _read_digraph(args.input)
    F = maximal_closure(D)
    payload = {"kind": "forest", **F.to_json()}
    forest = set(F.forest_arcs())
    styles = {arc: ("solid" if arc in forest else "dashed") for arc in D.arcs}
    labels = {v: f"{v}@{F.level_of(v)}" for v in D.vertices()}
    text = "\n".join(f"level {i}: {' '.join(map(str, vs))}" for i, vs in sorted(F.level_classes().items()))
    _emit(args, payload, dot=to_dot(D, styles, labels), text=text)
    return EXIT_OK


def cmd_find(args: argparse.Namespace) -> int:
    D = _read_digraph(args.input)
    if args.two_block is not None:
        k, l = args.two_block
        if args.method == "certified":
            outcome = find_two_block_certified(D, k, l)
            _emit(args, outcome.to_json(), dot=_embedding_dot(D, outcome.embedding),
                  text=f"P({k},{l}): {'found' if outcome.found else 'coloring'} ({outcome.rule})")
            return EXIT_OK if outcome.found else EXIT_MISS
        emb = corollary32_find(D, k, l) if args.method == "cor32" else corollary35_find(D, k, l)
    else:
        pattern = p4_pattern() if args.p4 else BlockPattern.parse(args.pattern)
        emb = find_pattern(D, pattern)
    payload = {"found": emb is not None, "certificate": None if emb is None else emb.to_json()}
    text = "not found" if emb is None else " ".join(map(str, emb.vertices))
    _emit(args, payload, dot=_embedding_dot(D, emb), text=text)
    return EXIT_OK if emb is not None else EXIT_MISS


def cmd_circuit(args: argparse.Namespace) -> int:
    D = _read_digraph(args.input)
    payload: dict = {}
    code = EXIT_OK
    if args.good:
        C: Optional[Circuit] = k_good_circuit(D, args.k)
    else:
        C = shortest_circuit_at_least(D, args.k)
    payload["found"] = C is not None
    payload["circuit"] = None if C is None else C.to_json()
    if C is None:
        code = EXIT_MISS
    if args.handles:
        payload["handles"] = handle_decomposition(D).to_json()
    styles = {arc: "bold" for arc in C.arcs()} if C is not None else {}
    text = "no circuit" if C is None else " -> ".join(map(str, C.vertices))
    _emit(args, payload, dot=to_dot(D, styles), text=text)
    return code


def cmd_contract(args: argparse.Namespace) -> int:
    D = _read_digraph(args.input)
    if args.circuit is not None:
        Q, image, hub = contract_circuit(D, Circuit(tuple(_csv_vertices(args.circuit))))
    else:
        Q, image, hub = contract(D, _csv_vertices(args.set))
    payload = {"kind": "contraction", "hub": hub, "image": list(image), "arclist": to_arclist(Q)}
    _emit(args, payload, dot=to_dot(Q, labels={hub: f"{hub}*"}), text=to_arclist(Q))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_campaign(args.campaign, max_n=args.max_n, seed=args.seed, samples=args.samples,
                          jobs=args.jobs, cache=None if args.no_cache else ART_DIR)
    timing = not args.no_timing
    _emit(args, report.to_json(timing), text=format_text(report, timing))
    return EXIT_OK if report.passed else EXIT_MISS


# -------------------- parser --------------------

class _Parser(argparse.ArgumentParser):
    """Usage errors exit with code 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="chromapath", description="Certifying digraph algorithms: colorings, out-forests, two-block paths.")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="arc-list file, or - for stdin")
        p.add_argument("--format", choices=["json", "dot", "text"], default="json")

    p = sub.add_parser("chi", help="exact chromatic number with a coloring witness")
    common(p)
    p.add_argument("--critical", type=int, metavar="K", help="also extract a K-critical induced subdigraph")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("forest", help="maximal spanning out-forest (levels and parents)")
    common(p)
    p.set_defaults(func=cmd_forest)

    p = sub.add_parser("find", help="search an oriented path")
    common(p)
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--p4", action="store_true", help="antidirected path of length 4")
    what.add_argument("--two-block", nargs=2, type=int, metavar=("K", "L"), help="P(K,L)")
    what.add_argument("--pattern", metavar="SPEC", help='block pattern such as "b1,f2"')
    p.add_argument("--method", choices=["certified", "cor32", "cor35"], default="certified",
                   help="finder for --two-block")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("circuit", help="shortest circuit of length >= K, k-good circuits, handles")
    common(p)
    p.add_argument("--k", type=int, default=3, metavar="K")
    p.add_argument("--good", action="store_true", help="return a K-good circuit")
    p.add_argument("--handles", action="store_true", help="add a handle decomposition")
    p.set_defaults(func=cmd_circuit)

    p = sub.add_parser("contract", help="contract a vertex set or a circuit")
    common(p)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--set", metavar="CSV", help="vertex set, digraph mode")
    which.add_argument("--circuit", metavar="CSV", help="circuit in order, multigraph mode")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("verify", help="run a verification campaign")
    common(p, with_input=False)
    p.add_argument("--campaign", required=True, choices=sorted(CAMPAIGNS))
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as null")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the enumeration cache")
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except InternalInconsistency as e:
        sys.stderr.write(f"internal inconsistency: {e}\n")
        return EXIT_INTERNAL
    except ChromapathError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
