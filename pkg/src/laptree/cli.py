"""Command-line interface.

Subcommands: `gen` writes a family graph as edge-list text, `charpoly`
prints the exact Laplacian characteristic polynomial of any input graph,
`spectrum` prints the closed-form integer spectrum of a family graph,
`tau` counts spanning trees by one or all methods, and `verify` runs the
seeded self-check suites.

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""

import argparse
import json
import sys

from .graphs import (
    Graph,
    GraphParseError,
    ThresholdSequence,
    bipartite_minus_matching,
    complete_graph,
    complete_multipartite,
    laplacian,
    parse_graph,
    serialize_graph,
    threshold_graph,
)
from .spectra import (
    Spectrum,
    spectrum_bipartite_minus_matching,
    spectrum_complete,
    spectrum_multipartite,
    spectrum_threshold_hk,
)
from .treecount import (
    compare_methods,
    tau_bruteforce,
    tau_charpoly,
    tau_cofactor,
    tau_rank_one,
)
from .verify import SUITE_NAMES, run_suite

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2

FAMILY_HELP = (
    "complete N | multipartite N1,N2,... | kxx-minus-matching N | threshold WORD"
)


class CliError(Exception):
    """Bad usage or bad input; maps to exit status 2."""


def _int_arg(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise CliError(f"{what} must be an integer, got {text!r}") from None


def graph_from_family(tokens: list) -> Graph:
    """Build a graph from a family spec like ["complete", "5"]."""
    if len(tokens) != 2:
        raise CliError(f"family spec must be two tokens: {FAMILY_HELP}")
    name, arg = tokens
    if name == "complete":
        return complete_graph(_int_arg(arg, "vertex count"))
    if name == "multipartite":
        parts = tuple(_int_arg(t, "part size") for t in arg.split(","))
        return complete_multipartite(parts)
    if name == "kxx-minus-matching":
        return bipartite_minus_matching(_int_arg(arg, "side size"))
    if name == "threshold":
        return threshold_graph(_threshold_word(arg))
    raise CliError(f"unknown family {name!r}; expected {FAMILY_HELP}")


def spectrum_from_family(tokens: list) -> Spectrum:
    """Closed-form spectrum for a family spec; general graphs are refused
    because their Laplacian eigenvalues need not be integers."""
    if len(tokens) != 2:
        raise CliError(f"family spec must be two tokens: {FAMILY_HELP}")
    name, arg = tokens
    if name == "complete":
        return spectrum_complete(_int_arg(arg, "vertex count"))
    if name == "multipartite":
        parts = tuple(_int_arg(t, "part size") for t in arg.split(","))
        return spectrum_multipartite(parts)
    if name == "kxx-minus-matching":
        return spectrum_bipartite_minus_matching(_int_arg(arg, "side size"))
    if name == "threshold":
        return spectrum_threshold_hk(_threshold_word(arg))
    raise CliError(f"unknown family {name!r}; expected {FAMILY_HELP}")


def _threshold_word(word: str) -> ThresholdSequence:
    try:
        return ThresholdSequence.from_word(word)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _load_graph(args) -> Graph:
    """Resolve the one input source: positional PATH ('-' for stdin) or
    --family."""
    has_path = args.input is not None
    has_family = args.family is not None
    if has_path == has_family:
        raise CliError("give exactly one input: a PATH (or '-' for stdin) or --family")
    if has_family:
        return graph_from_family(args.family.split())
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}") from None
    return parse_graph(text)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cmd_gen(args) -> int:
    g = graph_from_family(args.family)
    if args.format == "json":
        payload = {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}
        _emit(args, _json_text(payload))
    else:
        _emit(args, serialize_graph(g))
    return EXIT_OK


def _cmd_charpoly(args) -> int:
    g = _load_graph(args)
    poly = laplacian(g).char_poly()
    if args.format == "json":
        payload = {
            "n": g.n,
            "coefficients": [str(c) for c in poly.coeffs],
            "pretty": poly.pretty(),
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, (poly.pretty() if args.pretty else poly.text()) + "\n")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    s = spectrum_from_family(args.family)
    if args.format == "json":
        payload = {"n": s.n, "pairs": [[v, m] for v, m in s.pairs]}
        _emit(args, _json_text(payload))
    else:
        _emit(args, s.text() + "\n")
    return EXIT_OK


_TAU_METHODS = {
    "cofactor": tau_cofactor,
    "rankone": tau_rank_one,
    "charpoly": tau_charpoly,
    "bruteforce": tau_bruteforce,
}


def _cmd_tau(args) -> int:
    g = _load_graph(args)
    if args.method == "all":
        report = compare_methods(g)
        if args.format == "json":
            _emit(args, _json_text(report.to_json_dict()))
        else:
            _emit(args, report.to_text())
        return EXIT_OK
    count = _TAU_METHODS[args.method](g)
    if args.format == "json":
        payload = {
            "n": g.n,
            "edges": g.edge_count,
            "method": args.method,
            "count": str(count),
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, f"{count}\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = SUITE_NAMES if args.scope == "all" else (args.scope,)
    results = [run_suite(name, args.seed, args.trials) for name in names]
    all_passed = all(r.passed for r in results)
    if args.format == "json":
        payload = {
            "seed": args.seed,
            "trials": args.trials,
            "suites": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "cases": r.cases,
                    "failure": r.failure,
                }
                for r in results
            ],
            "all_passed": all_passed,
        }
        _emit(args, _json_text(payload))
    else:
        lines = [f"seed {args.seed}  trials {args.trials}"]
        for r in results:
            if r.passed:
                lines.append(f"{r.name}: PASS ({r.cases} cases)")
            else:
                lines.append(f"{r.name}: FAIL (case {r.cases})")
                lines.extend("  " + ln for ln in r.failure.splitlines())
        lines.append("all suites passed" if all_passed else "FAILURES")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAIL


def _add_format(sub, include_output: bool = True) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default: text)")
    if include_output:
        sub.add_argument("-o", "--output", metavar="PATH",
                         help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laptree",
        description="Exact Laplacian characteristic polynomials, integer "
                    "spectra, and spanning-tree counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph as edge-list text")
    p.add_argument("family", nargs=2, metavar=("NAME", "ARG"), help=FAMILY_HELP)
    _add_format(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("charpoly",
                       help="characteristic polynomial of a graph Laplacian")
    p.add_argument("input", nargs="?", metavar="PATH",
                   help="edge-list file, or '-' for stdin")
    p.add_argument("--family", metavar="SPEC",
                   help=f"generate the input instead: {FAMILY_HELP!r}")
    p.add_argument("--pretty", action="store_true",
                   help="print '-2*x + x^2' form instead of raw coefficients")
    _add_format(p)
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("spectrum",
                       help="closed-form integer spectrum of a family graph")
    p.add_argument("family", nargs=2, metavar=("NAME", "ARG"), help=FAMILY_HELP)
    _add_format(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("tau", help="count spanning trees")
    p.add_argument("input", nargs="?", metavar="PATH",
                   help="edge-list file, or '-' for stdin")
    p.add_argument("--family", metavar="SPEC",
                   help=f"generate the input instead: {FAMILY_HELP!r}")
    p.add_argument("--method", default="all",
                   choices=("cofactor", "rankone", "charpoly", "bruteforce", "all"),
                   help="counting method (default: all, with agreement report)")
    _add_format(p)
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("verify", help="run seeded self-check suites")
    p.add_argument("scope", choices=SUITE_NAMES + ("all",),
                   help="thm1: rank-one perturbation identity for char polys; "
                        "eq1: det(L + u v^T) = sum(u) sum(v) tau; "
                        "eq3: closed form for a*I + b*ones; "
                        "families: closed-form spectra vs. exact engine; "
                        "merris-hk: threshold spectra agreement")
    p.add_argument("--seed", type=int, default=1, help="RNG seed (default: 1)")
    p.add_argument("--trials", type=int, default=100,
                   help="trials for randomized suites (default: 100)")
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
