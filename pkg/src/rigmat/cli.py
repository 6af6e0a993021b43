"""Command-line interface: independence queries, orientation search,
verification suites, and the kernel benchmark.

JSON goes to stdout and is byte-deterministic for fixed inputs and seed;
wall-clock diagnostics go to stderr.  Exit codes: 0 pass, 1 claim failure,
2 usage error, 3 I/O or cap error.
"""

from __future__ import annotations

import argparse
import json
import sys

from rigmat import bernstein, hconn, laman, matroidlab, verify
from rigmat._fields import is_prime
from rigmat._kernels import BACKEND
from rigmat.graphcore import (
    CapExceeded,
    Graph6Error,
    GraphError,
    emit_graph6,
    read_graph6_lines,
)

EXIT_PASS = 0
EXIT_CLAIM = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _characteristic(value: str) -> int:
    c = int(value)
    if c != 0 and not is_prime(c):
        raise argparse.ArgumentTypeError(f"characteristic must be 0 or prime, got {c}")
    return c


def _read_graphs(path: str):
    if path == "-":
        return read_graph6_lines(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return read_graph6_lines(fh.read())


def _emit(payload: dict, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    else:
        _emit_text(payload)


def _emit_text(payload: dict, indent: str = ""):
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            sys.stdout.write(f"{indent}{key}:\n")
            _emit_text(value, indent + "  ")
        elif isinstance(value, list):
            sys.stdout.write(f"{indent}{key}: ({len(value)} items)\n")
            for item in value:
                if isinstance(item, dict):
                    _emit_text(item, indent + "  ")
                else:
                    sys.stdout.write(f"{indent}  {item}\n")
        else:
            sys.stdout.write(f"{indent}{key}: {value}\n")


def cmd_independence(args) -> int:
    graphs = _read_graphs(args.file)
    rows = []
    for g in graphs:
        if args.matroid == "laman":
            verdict = laman.r_independent(g)
            method = "pebble"
        elif args.matroid == "hconn":
            v = hconn.h_independent(g, args.char, seed=args.seed, trials=args.trials)
            verdict, method = v.independent, v.method
        else:
            dim = args.wedge_dim if args.wedge_dim else max(g.n - 2, 2)
            oracle = matroidlab.build_wedge_oracle(
                g.n, dim, args.char, seed=args.seed, trials=args.trials
            )
            verdict = oracle.indep(g)
            method = "randomized-certified" if verdict else "symbolic"
        rows.append(
            {
                "graph": emit_graph6(g),
                "independent": verdict,
                "method": method,
            }
        )
    _emit(
        {
            "schema": "rigmat-report/1",
            "command": "independence",
            "matroid": args.matroid,
            "char": args.char,
            "results": rows,
        },
        args.format,
    )
    return EXIT_PASS


def cmd_orient(args) -> int:
    graphs = _read_graphs(args.file)
    rows = []
    for g in graphs:
        d = bernstein.find_bernstein_orientation(g)
        row: dict = {"graph": emit_graph6(g)}
        if d is None:
            row["orientation"] = None
            row["note"] = "exhausted all acyclic orientations"
        else:
            row["orientation"] = bernstein.orientation_to_text(d)
            if args.ufp:
                conf = bernstein.ufp_configuration(g, d)
                res = bernstein.verify_ufp(conf)
                row["configuration"] = bernstein.configuration_to_text(conf)
                row["ufp_ok"] = res.passed
                row["recoverable"] = res.recoverable
        rows.append(row)
    _emit(
        {"schema": "rigmat-report/1", "command": "orient", "results": rows},
        args.format,
    )
    return EXIT_PASS


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, args.nmax, args.seed, args.jobs)
    payload = report.to_json_dict()
    _emit(payload, args.format)
    sys.stderr.write(
        f"suite={args.suite} status={report.status} "
        f"instances={report.instances} wall={report.wall_time:.2f}s "
        f"backend={BACKEND}\n"
    )
    return EXIT_PASS if report.status == "pass" else EXIT_CLAIM


def cmd_bench(args) -> int:
    from rigmat import bench

    bench.run(repeat=args.repeat)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigmat",
        description="Rigidity-matroid oracles and verification suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ind = sub.add_parser("independence", help="per-graph independence verdicts")
    p_ind.add_argument("file", help="graph6 file, or - for stdin")
    p_ind.add_argument("--matroid", choices=("laman", "hconn", "wedge"), default="laman")
    p_ind.add_argument("--char", type=_characteristic, default=0)
    p_ind.add_argument("--wedge-dim", type=int, default=0, help="wedge dimension (default n-2)")
    p_ind.add_argument("--seed", type=int, default=0)
    p_ind.add_argument("--trials", type=int, default=3)
    p_ind.add_argument("--format", choices=("json", "text"), default="json")
    p_ind.set_defaults(func=cmd_independence)

    p_or = sub.add_parser("orient", help="search for Bernstein orientations")
    p_or.add_argument("file", help="graph6 file, or - for stdin")
    p_or.add_argument("--ufp", action="store_true", help="emit the forest configuration")
    p_or.add_argument("--format", choices=("json", "text"), default="json")
    p_or.set_defaults(func=cmd_orient)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=sorted(verify.SUITES))
    p_ver.add_argument("--nmax", type=int, default=None)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--format", choices=("json", "text"), default="json")
    p_ver.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="compare compiled and pure kernels")
    p_bench.add_argument("--repeat", type=int, default=3)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except Graph6Error as exc:
        sys.stderr.write(f"graph6 error: {exc}\n")
        return EXIT_IO
    except (OSError, CapExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except GraphError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
