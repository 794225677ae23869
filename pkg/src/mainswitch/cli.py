"""Batch command-line interface.

Subcommands: spectrum, main-profile, find-switching, construct (snr /
multipartite), verify-conjecture, check-cert.  Graph inputs are a graph6
string, @file.g6 (one record per line) or @file.sel (signed edge list).

Exit codes: 0 success, 1 verification failure or an unexpected exception
graph, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .construct import (
    ConstructionResult,
    NoAllMainSwitchingError,
    multipartite_all_main_switching,
    one_per_part_switching,
    snr_all_main_switching,
)
from .exact import main_profile
from .graphs import (
    Graph,
    GraphFormatError,
    MultipartiteParams,
    SignedGraph,
    adjacency_matrix,
    parse_graph6,
    parse_signed_edge_list,
)
from .search import (
    CATALOG_CAP,
    Certificate,
    DisconnectedGraphError,
    find_all_main_switching,
    make_certificate,
    switching_main_counts,
    verify_certificate,
    verify_conjecture,
)
from .spectral import classify_main, eigen_sym

WORKERS_ENV = "MAINSWITCH_WORKERS"


@dataclass(frozen=True)
class Config:
    """Tolerance and execution knobs shared by the subcommands."""

    eigen_tol: float = 1e-12
    group_eps: float | None = None
    main_eps: float | None = None
    max_n: int = CATALOG_CAP
    workers: int = 1
    output: str | None = None

    def __post_init__(self) -> None:
        if self.eigen_tol <= 0:
            raise ValueError("eigen tolerance must be positive")
        for eps in (self.group_eps, self.main_eps):
            if eps is not None and eps <= 0:
                raise ValueError("tolerances must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_inputs(arg: str) -> list[Graph | SignedGraph]:
    if arg.startswith("@"):
        path = arg[1:]
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        if path.endswith(".sel"):
            return [parse_signed_edge_list(text)]
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    return [parse_graph6(arg)]


def _as_search_graph(g: Graph | SignedGraph) -> Graph:
    if isinstance(g, SignedGraph):
        if g.negative:
            raise ValueError("the switching search takes an unsigned graph")
        return g.graph
    return g


def _print_cert(cert: Certificate) -> None:
    print(cert.to_json())


def _parse_blocks(spec: str) -> MultipartiteParams:
    blocks = []
    for item in spec.split(","):
        parts = item.lower().split("x")
        if len(parts) != 2:
            raise ValueError(f"block {item!r} must look like COUNTxSIZE, e.g. 2x3")
        blocks.append((int(parts[0]), int(parts[1])))
    return MultipartiteParams.of(blocks)


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = Config(eigen_tol=args.tol, group_eps=args.group_eps, main_eps=args.main_eps)
    for g in _load_inputs(args.input):
        a = np.array(adjacency_matrix(g), dtype=float)
        es = eigen_sym(a, tol=cfg.eigen_tol)
        report = classify_main(es, group_eps=cfg.group_eps, main_eps=cfg.main_eps)
        if args.json:
            print(json.dumps({
                "n": report.n,
                "groups": [
                    {"value": grp.value, "multiplicity": grp.multiplicity,
                     "is_main": grp.is_main, "main_mass": grp.main_mass}
                    for grp in report.groups
                ],
            }))
        else:
            print(f"n={report.n}")
            print(f"{'value':>20}  {'mult':>4}  {'main':>5}  {'main_mass':>12}")
            for grp in report.groups:
                flag = "yes" if grp.is_main else "no"
                print(f"{grp.value:>20.12f}  {grp.multiplicity:>4}  {flag:>5}  "
                      f"{grp.main_mass:>12.6f}")
    return 0


def _cmd_main_profile(args: argparse.Namespace) -> int:
    for g in _load_inputs(args.input):
        profile = main_profile(adjacency_matrix(g))
        if args.json:
            print(json.dumps({
                "main_count": profile.main_count,
                "distinct_count": profile.distinct_count,
                "all_main": profile.all_main,
            }))
        else:
            print(f"main_count={profile.main_count} "
                  f"distinct_count={profile.distinct_count} "
                  f"all_main={str(profile.all_main).lower()}")
    return 0


def _cmd_find_switching(args: argparse.Namespace) -> int:
    status = 0
    for g in _load_inputs(args.input):
        graph = _as_search_graph(g)
        cert = find_all_main_switching(graph)
        if cert is None:
            if args.json:
                print(json.dumps({
                    "all_main_switching": None,
                    "main_counts": switching_main_counts(graph),
                }))
            else:
                print("NO SWITCHING (exception)")
            status = 1
        else:
            _print_cert(cert)
    return status


def _result_certificate(res: ConstructionResult) -> Certificate:
    return make_certificate(res.graph, res.switching, res.method, res.profile)


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "snr":
        res = snr_all_main_switching(args.n, args.r)
    else:
        params = _parse_blocks(args.blocks)
        if args.one_per_part:
            res = one_per_part_switching(params)
        else:
            res = multipartite_all_main_switching(params)
    _print_cert(_result_certificate(res))
    return 0 if res.verified else 1


def _known_exceptions() -> frozenset[str]:
    from .search import canonical_graph6

    k2 = Graph.from_edges(2, [(1, 2)])
    k4e = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
    return frozenset({canonical_graph6(k2), canonical_graph6(k4e)})


def _is_known_exception(graph6: str) -> bool:
    from .search import canonical_graph6

    g = parse_graph6(graph6)
    if g.n not in (2, 4):
        return False
    return canonical_graph6(g) in _known_exceptions()


def _cmd_verify_conjecture(args: argparse.Namespace) -> int:
    workers = args.workers if args.workers is not None else _default_workers()
    Config(workers=workers, max_n=args.max_n)
    graphs = None
    if args.graph6_file:
        with open(args.graph6_file, "r", encoding="utf-8") as fh:
            graphs = [parse_graph6(line) for line in fh if line.strip()]
    report = verify_conjecture(args.max_n, workers=workers, graphs=graphs)
    if args.certificates:
        with open(args.certificates, "w", encoding="utf-8") as fh:
            for cert in report.certificates:
                fh.write(cert.to_json() + "\n")
    if args.json:
        print(report.to_json())
    else:
        print(report.summary_text())
    if any(not _is_known_exception(e.graph6) for e in report.exceptions):
        return 1
    return 0


def _cmd_check_cert(args: argparse.Namespace) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        lines = [ln for ln in fh if ln.strip()]
    if not lines:
        print("no certificates found", file=sys.stderr)
        return 2
    bad = 0
    for i, line in enumerate(lines, start=1):
        cert = Certificate.from_json_dict(json.loads(line))
        if not verify_certificate(cert):
            print(f"certificate {i}: FAILED re-check ({cert.graph6})", file=sys.stderr)
            bad += 1
    print(f"{len(lines) - bad}/{len(lines)} certificates verified")
    return 1 if bad else 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mainswitch",
        description="Main eigenvalues of signed graphs: spectra, switching "
                    "search, constructions, certificates.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("spectrum", help="float spectrum with per-eigenvalue main flags")
    sp.add_argument("input", help="graph6 string, @file.g6, or @file.sel")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--tol", type=float, default=1e-12, help="eigensolver tolerance")
    sp.add_argument("--group-eps", type=float, default=None)
    sp.add_argument("--main-eps", type=float, default=None)
    sp.set_defaults(fn=_cmd_spectrum)

    mp = sub.add_parser("main-profile", help="exact main/distinct eigenvalue counts")
    mp.add_argument("input")
    mp.add_argument("--json", action="store_true")
    mp.set_defaults(fn=_cmd_main_profile)

    fs = sub.add_parser("find-switching", help="brute-force all-main switching search")
    fs.add_argument("input")
    fs.add_argument("--json", action="store_true")
    fs.set_defaults(fn=_cmd_find_switching)

    co = sub.add_parser("construct", help="constructive all-main switching")
    cosub = co.add_subparsers(dest="family", required=True)
    snr = cosub.add_parser("snr", help="clique with pendant edges")
    snr.add_argument("--n", type=int, required=True)
    snr.add_argument("--r", type=int, required=True)
    snr.set_defaults(fn=_cmd_construct)
    multi = cosub.add_parser("multipartite", help="complete multipartite graph")
    multi.add_argument("--blocks", required=True,
                       help="comma list COUNTxSIZE, e.g. 2x3,1x1")
    multi.add_argument("--one-per-part", action="store_true",
                       help="force the one-vertex-per-part switching "
                            "(single parts of size >= 2 only)")
    multi.set_defaults(fn=_cmd_construct)

    vc = sub.add_parser("verify-conjecture",
                        help="exhaustive catalog verification with certificates")
    vc.add_argument("--max-n", type=int, default=CATALOG_CAP)
    vc.add_argument("--graph6-file", default=None,
                    help="verify these graphs instead of the built-in catalog")
    vc.add_argument("--workers", type=int, default=None,
                    help=f"parallel workers (default ${WORKERS_ENV} or 1)")
    vc.add_argument("--certificates", default=None,
                    help="write newline-delimited certificate JSON here")
    vc.add_argument("--json", action="store_true")
    vc.set_defaults(fn=_cmd_verify_conjecture)

    cc = sub.add_parser("check-cert", help="re-check a certificate file")
    cc.add_argument("file")
    cc.set_defaults(fn=_cmd_check_cert)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NoAllMainSwitchingError as exc:
        print(f"NO SWITCHING (exception): {exc}", file=sys.stderr)
        return 1
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
