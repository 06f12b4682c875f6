import argparse
import json
import logging
import sys
from typing import List, Optional

import concordia.oracles
from concordia.core import dbar_table, report
from concordia.exceptions import ConcordiaError
from concordia.obstruct import ObstructionReport, format_fraction
from concordia.types import Config

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1; exit code 2 is reserved for unmet hypotheses."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def to_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def format_report(result: ObstructionReport) -> str:
    lines = [
        f"knot: {result.knot}",
        "cover: " + (" # ".join(str(piece) for piece in result.cover) or "S^3"),
        f"H_1 invariants: {result.homology_invariants}",
        f"Z-genus lower bound (generating rank): {result.gz_lower}",
    ]
    for bound in result.gzc_by_prime:
        lines.append(f"concordance Z-genus lower bound at p={bound.p}: {bound.bound} (null rank {bound.null_rank})")
    if not result.gzc_by_prime:
        lines.append("concordance Z-genus lower bound: 0 (no prime meets the hypothesis)")
    lines.append(f"Z-genus lower bound (combined): {result.gz_lower_combined}")
    if result.topological_gap_lower is not None:
        lines.append(f"gap to the topological 4-genus: at least {result.topological_gap_lower}")
    for annotation in result.annotations:
        lines.append(f"declared: {annotation['fact']} ({annotation['source']})")
    return "\n".join(lines) + "\n"


def cmd_report(args) -> int:
    config = Config.from_env(primes=[args.prime] if args.prime is not None else [])
    result = report(args.expr, config)
    document = result.to_document()

    if args.json == "-":
        sys.stdout.write(to_json(document))
        return 0
    if args.json is not None:
        with open(args.json, "w") as f:
            f.write(to_json(document))
    sys.stdout.write(format_report(result))
    return 0


def cmd_dbar(args) -> int:
    prime, table = dbar_table(args.expr, args.prime)
    document = {
        "knot": args.expr,
        "p": prime,
        "dbar_table": [{"element": list(z), "value": format_fraction(value)} for z, value in table],
    }
    sys.stdout.write(to_json(document))
    return 0


def cmd_oracle(args) -> int:
    oracle_cls = concordia.oracles.load(args.suite)
    result = oracle_cls().run(seed=args.seed, max_order=args.max_order)
    print(result.summary())
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="concordia", description="Concordance Z-genus obstructions from 2-fold branched covers.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    report_parser = subparsers.add_parser("report", help="compute all lower bounds for a knot expression")
    report_parser.add_argument("expr", help='the knot expression, e.g. "Kstar # Kstar"')
    report_parser.add_argument("--prime", type=int, help="bound the concordance Z-genus at this prime only")
    report_parser.add_argument("--json", metavar="PATH", help="also write the JSON report to PATH ('-' for stdout only)")
    report_parser.set_defaults(func=cmd_report)

    dbar_parser = subparsers.add_parser("dbar", help="tabulate d-bar over the elements of order p")
    dbar_parser.add_argument("expr")
    dbar_parser.add_argument("--prime", type=int)
    dbar_parser.set_defaults(func=cmd_dbar)

    oracle_parser = subparsers.add_parser("oracle", help=f"run an oracle suite ({', '.join(concordia.oracles.SUITES)})")
    oracle_parser.add_argument("suite")
    oracle_parser.add_argument("--seed", type=int, default=0)
    oracle_parser.add_argument("--max-order", type=int, help="the largest group order of a case")
    oracle_parser.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return args.func(args)
    except ConcordiaError as e:
        print(f"concordia: error: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        print(f"concordia: error: {e}", file=sys.stderr)
        return 1
