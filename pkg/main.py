"""Command-line front end for Sombor index computation and cactus verification."""
import argparse
import sys
from typing import List, Optional, Sequence, Union
from loguru import logger
from src.configurations.config import CliConfig, Config
from src.core.canonical import canonical_form
from src.core.graph_structure import cycle_count
from src.data_processing.load_graph import GraphLoader, format_graph
from src.enumeration.cactus_generator import CactusEnumerator, EnumerationQuery, get_enumerator
from src.enumeration.labeled_oracle import labeled_oracle
from src.extremal.bounds import bound_Phi, bound_Q
from src.extremal.constructions import build_H, build_Hstar
from src.extremal.monotonicity import scan_lemma_claims
from src.invariants.sombor import sombor_index
from src.models.errors import InvalidArgumentError, SomborError
from src.verification.case_partitions import PartitionVerifier
from src.verification.sweep import SWEEP_MODES, sweep
from src.verification.theorem_checks import ExtremalVerifier
from src.visualization.report_export import ReportExporter, format_number

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_int_range(text: str) -> List[int]:
    """'3..9' -> [3..9], '0,2' -> [0, 2], '5' -> [5]."""
    try:
        values: List[int] = []
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                low, high = (int(x) for x in part.split("..", 1))
                values.extend(range(low, high + 1))
            elif part:
                values.append(int(part))
        return sorted(set(values))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, a list 'a,b' or a range 'a..b', got {text!r}")


def parse_t_rule(text: str) -> Union[str, List[int]]:
    """"all", or an integer list/range as accepted by parse_int_range."""
    return "all" if text == "all" else parse_int_range(text)


class SomborToolkit:
    """Runs one subcommand and maps its outcome onto the exit-code contract."""

    def __init__(self, config: CliConfig):
        self.config = config
        self.exporter = ReportExporter()
        self.enumerator = (
            get_enumerator() if config.cap_n is None else CactusEnumerator(config.effective_cap)
        )

    def _emit(self, text: str, output: Optional[str] = None) -> None:
        if output:
            with open(output, "w", encoding="utf-8") as handle:
                handle.write(text)
            logger.info(f"Wrote {output}")
        else:
            sys.stdout.write(text)

    def compute(self, source: str) -> int:
        """Print the Sombor index of every graph in the source."""
        graphs = GraphLoader(self.config.input_format).load(source)
        for g in graphs:
            print(format_number(sombor_index(g).value))
        return EXIT_OK

    def construct(self, family: str, first: int, t: int) -> int:
        """Print H(n,t) or H*(2β,t) and a summary line on stderr."""
        if family == "H":
            g, bound = build_H(first, t), bound_Q(first, t)
        else:
            g, bound = build_Hstar(first, t), bound_Phi(first, t)
        self._emit(format_graph(g, self.config.output_format))
        print(f"n={g.n} m={g.m} t={cycle_count(g)} SO={format_number(sombor_index(g).value)} "
              f"bound={format_number(bound.value)}", file=sys.stderr)
        return EXIT_OK

    def enumerate(self, n: int, t: int, perfect_matching: bool, check_oracle: bool = False) -> int:
        """Print every matching cactus as graph6, optionally checked against the labeled oracle."""
        query = EnumerationQuery(n, t, require_perfect_matching=perfect_matching)
        forms = []
        for g in self.enumerator.enumerate(query):
            sys.stdout.write(format_graph(g, self.config.output_format))
            forms.append(canonical_form(g))
        print(f"count={len(forms)}", file=sys.stderr)
        if not check_oracle:
            return EXIT_OK

        count, oracle_forms = labeled_oracle(query, cap=self.config.effective_oracle_cap)
        agrees = count == len(forms) and oracle_forms == frozenset(forms)
        print(f"oracle={'match' if agrees else 'mismatch'} oracle_count={count}", file=sys.stderr)
        return EXIT_OK if agrees else EXIT_FAILED

    def bound(self, family: str, first: int, t: int) -> int:
        """Print Q(n,t) or Φ(β,t)."""
        value = bound_Q(first, t) if family == "Q" else bound_Phi(first, t)
        print(format_number(value.value))
        return EXIT_OK

    def verify(self, args: argparse.Namespace) -> int:
        """Run one verification mode and return its exit code."""
        tolerance = self.config.effective_tolerance
        mode = args.verify_mode

        if mode == "lemmas":
            reports = scan_lemma_claims()
            self._emit(self.exporter.render(reports, self.config.output_format), args.output)
            return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED

        if mode == "sweep":
            values = args.beta if args.mode in ("pm-cacti", "pm-partitions") else args.n
            if values is None:
                raise InvalidArgumentError(f"sweep mode {args.mode} needs {'--beta' if args.mode.startswith('pm') else '--n'}")
            report = sweep(args.mode, values, args.t if args.t is not None else "all",
                           workers=self.config.workers, tolerance=tolerance, enumerator=self.enumerator)
            self._emit(self.exporter.render(report, self.config.output_format), args.output)
            if report.failed:
                return EXIT_FAILED
            return EXIT_USAGE if report.errors else EXIT_OK

        first = self._single(args.beta if mode == "max-pm-cacti" or
                             (mode == "partitions" and args.family == "pm-cacti") else args.n, mode)
        t = self._single(args.t, mode, name="--t")
        if mode == "max-cacti":
            cell = ExtremalVerifier(self.enumerator, tolerance).verify_max_cacti(first, t)
        elif mode == "max-pm-cacti":
            cell = ExtremalVerifier(self.enumerator, tolerance).verify_max_pm_cacti(first, t)
        elif args.family == "pm-cacti":
            cell = PartitionVerifier(self.enumerator, tolerance).verify_lemma_partitions(first, t)
        else:
            cell = PartitionVerifier(self.enumerator, tolerance).verify_pendant_partitions(first, t)

        self._emit(self.exporter.render(cell, self.config.output_format), args.output)
        if cell.status == "error":
            return EXIT_USAGE
        informative = getattr(cell, "informative", False)
        return EXIT_FAILED if cell.status == "fail" and not informative else EXIT_OK

    @staticmethod
    def _single(values: Optional[Union[str, List[int]]], mode: str, name: str = "size") -> int:
        if values is None or values == "all" or len(values) != 1:
            raise InvalidArgumentError(f"verify {mode} needs a single value for {name}")
        return values[0]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sombor", description="Sombor index of cacti: compute, construct, enumerate, verify")
    parser.add_argument("--log-level", default=Config.LOG_LEVEL, help="loguru level for standard error")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="Sombor index of each input graph")
    compute.add_argument("input", nargs="?", default="-", help="graph file, or '-' for standard input")
    compute.add_argument("--format", default="auto", choices=["auto", "edge-list", "graph6"])

    construct = sub.add_parser("construct", help="build H(n,t) or H*(2β,t)")
    construct.add_argument("family", choices=["H", "Hstar"])
    construct.add_argument("first", type=int, help="n for H, β for Hstar")
    construct.add_argument("t", type=int)
    construct.add_argument("--format", default="graph6", choices=["graph6", "edge-list"])

    enumerate_cmd = sub.add_parser("enumerate", help="stream every cactus in H(n,t)")
    enumerate_cmd.add_argument("--n", type=int, required=True)
    enumerate_cmd.add_argument("--t", type=int, required=True)
    enumerate_cmd.add_argument("--perfect-matching", action="store_true")
    enumerate_cmd.add_argument("--format", default="graph6", choices=["graph6", "edge-list"])
    enumerate_cmd.add_argument("--cap-n", type=int)
    enumerate_cmd.add_argument("--check-oracle", action="store_true", help="cross-check against the labeled brute-force oracle")
    enumerate_cmd.add_argument("--oracle-cap", type=int)

    verify = sub.add_parser("verify", help="check extremal claims by enumeration")
    verify.add_argument("verify_mode", choices=["max-cacti", "max-pm-cacti", "lemmas", "partitions", "sweep"])
    verify.add_argument("--n", type=parse_int_range)
    verify.add_argument("--beta", type=parse_int_range)
    verify.add_argument("--t", type=parse_t_rule)
    verify.add_argument("--family", default="pm-cacti", choices=["pm-cacti", "cacti"])
    verify.add_argument("--mode", default="cacti", choices=list(SWEEP_MODES))
    verify.add_argument("--format", default="json", choices=["json", "table"])
    verify.add_argument("--tolerance", type=float)
    verify.add_argument("--cap-n", type=int)
    verify.add_argument("--workers", type=int, default=Config.SWEEP_WORKERS)
    verify.add_argument("--output", help="write the report here instead of standard output")

    bound = sub.add_parser("bound", help="closed-form Q(n,t) or Φ(β,t)")
    bound.add_argument("family", choices=["Q", "Phi"])
    bound.add_argument("first", type=int, help="n for Q, β for Phi")
    bound.add_argument("t", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logger.remove()
    logger.add(sys.stderr, level=args.log_level.upper())

    config = CliConfig(
        input_format=getattr(args, "format", "auto") if args.command == "compute" else "auto",
        output_format=getattr(args, "format", "json"),
        tolerance=getattr(args, "tolerance", None),
        cap_n=getattr(args, "cap_n", None),
        oracle_cap=getattr(args, "oracle_cap", None),
        workers=getattr(args, "workers", Config.SWEEP_WORKERS),
    )

    try:
        toolkit = SomborToolkit(config)
        if args.command == "compute":
            return toolkit.compute(args.input)
        if args.command == "construct":
            return toolkit.construct(args.family, args.first, args.t)
        if args.command == "enumerate":
            return toolkit.enumerate(args.n, args.t, args.perfect_matching, args.check_oracle)
        if args.command == "bound":
            return toolkit.bound(args.family, args.first, args.t)
        return toolkit.verify(args)
    except SomborError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
