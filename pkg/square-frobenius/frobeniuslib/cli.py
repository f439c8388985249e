import argparse
import logging
import sys

import pandas as pd

from . import arithmetic, finite, infinite, minplus
from .errors import FrobeniusError
from .infinite.constants import COUNTING_CHECK_END
from .render import FORMATS, frame_records, render

logger = logging.getLogger(__name__)

METHODS = ("auto", "direct", "formula")


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"Expected a positive integer, got {value}")
    return number


def nonnegative_int(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"Expected a nonnegative integer, got {value}")
    return number


def _single(document: dict) -> tuple:
    return document, pd.DataFrame([document])


def _iota(args) -> tuple:
    return _single({"n": args.n, "iota": arithmetic.iota(args.n), "witness": arithmetic.square_decomposition(args.n)})


def _tau(args) -> tuple:
    witness = arithmetic.prime_decomposition(args.n)
    return _single({"n": args.n, "tau": len(witness), "witness": witness})


def _iota_k(args) -> tuple:
    table = finite.default_table(args.k)
    document = {"k": args.k, "n": args.n, "iota_k": minplus.iota_k(args.k, args.n, table)}
    if args.witness:
        document["witness"] = minplus.optimal_representation(args.k, args.n, table)
    if args.greedy:
        document["greedy"] = minplus.greedy_representation(args.k, args.n)
    return _single(document)


def _frobenius(args) -> tuple:
    method = args.method
    if method == "auto":
        method = "formula" if args.a >= finite.exact_lower_bound(args.k) else "direct"
    if method == "formula":
        g = finite.g_formula(args.a, args.k)
    else:
        g = finite.frobenius_direct(args.a, args.k)
    return _single({"a": args.a, "k": args.k, "g": g, "method": method})


def _infinite_document(result: infinite.InfiniteResult) -> dict:
    return {
        "a": result.a,
        "g": result.g,
        "r": result.argmax_r,
        "case": result.case,
        "m": result.record.m_star,
        "witness": result.record.witness,
    }


def _inf_squares(args) -> tuple:
    return _single(_infinite_document(infinite.g_infinite_squares(args.a)))


def _inf_primes(args) -> tuple:
    return _single(_infinite_document(infinite.g_infinite_primes(args.a)))


def _coefficients(args) -> tuple:
    coeffs = finite.coefficient_sequences(args.k)
    frame = pd.DataFrame(finite.quadratic_form(coeffs), columns=["j", "c", "d"])
    frame.insert(1, "t", list(coeffs.t))
    frame.insert(2, "r", list(coeffs.r))
    document = {
        "k": coeffs.k,
        "u": coeffs.u,
        "u_hat": coeffs.u_hat,
        "t": coeffs.t,
        "r": coeffs.r,
        "quadratic": frame_records(frame[["j", "c", "d"]]),
    }
    return document, frame


def _lower_bound(args) -> tuple:
    return _single({"k": args.k, "u_hat": finite.exact_lower_bound(args.k)})


def _stability(args) -> tuple:
    table = finite.default_table(args.k)
    frame = pd.DataFrame(minplus.irregular_terms(table), columns=["r", "iota_k"])
    document = {
        "k": args.k,
        "stable_from": minplus.stability_threshold(args.k, table),
        "bound": minplus.stability_bound(args.k),
        "irregular": frame_records(frame),
    }
    return document, frame


def infinite_table(solver, max_a: int) -> pd.DataFrame:
    """One row (a, r, g, case) per modulus 2 <= a <= max_a."""
    rows = []
    for a in range(2, max_a + 1):
        result = solver(a)
        rows.append({"a": a, "r": result.argmax_r, "g": result.g, "case": result.case})
    return pd.DataFrame(rows, columns=["a", "r", "g", "case"])


def _table(solver):
    def emit(args) -> tuple:
        frame = infinite_table(solver, args.max_a)
        return frame_records(frame), frame

    return emit


def _verify_conjecture(args) -> tuple:
    counterexamples = infinite.verify_conjecture_squares(args.max_a)
    document = {"max_a": args.max_a, "counterexamples": counterexamples}
    return document, pd.DataFrame({"a": counterexamples}, dtype="int64")


def _verify_primes(args) -> tuple:
    failures = infinite.prime_range_failures()
    counting = infinite.counting_failures(args.counting_to)
    document = {
        "verified": not failures and not counting,
        "failures": failures,
        "counting_to": args.counting_to,
        "counting_failures": counting,
    }
    return _single(document)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log progress to stderr (-vv for debug)")

    parser = argparse.ArgumentParser(
        prog="square-frobenius",
        description="Frobenius numbers of square and prime sequences.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    command("iota", _iota, "Fewest squares summing to N").add_argument("n", type=positive_int)
    command("tau", _tau, "Fewest parts from the primes and 1 summing to N").add_argument("n", type=positive_int)

    sub = command("iota-k", _iota_k, "Fewest squares from 1..K^2 summing to N")
    sub.add_argument("--k", type=positive_int, required=True)
    sub.add_argument("--n", type=nonnegative_int, required=True)
    sub.add_argument("--witness", action="store_true", help="Include an optimal representation")
    sub.add_argument("--greedy", action="store_true", help="Include the largest-square-first representation")

    sub = command("frobenius", _frobenius, "g(A, A+1^2, ..., A+K^2)")
    sub.add_argument("--a", type=positive_int, required=True)
    sub.add_argument("--k", type=positive_int, required=True)
    sub.add_argument("--method", choices=METHODS, default="auto", help="auto uses the formula from u_hat on")

    command("frobenius-inf-squares", _inf_squares, "g(A, A+1^2, A+2^2, ...)").add_argument(
        "--a", type=positive_int, required=True
    )
    command("frobenius-inf-primes", _inf_primes, "g(A, A+1, A+2, A+3, A+5, ...)").add_argument(
        "--a", type=positive_int, required=True
    )
    command("coefficients", _coefficients, "t_k, r_k and the per-class quadratics").add_argument(
        "--k", type=positive_int, required=True
    )
    command("lower-bound", _lower_bound, "Exact start u_hat of the closed form").add_argument(
        "--k", type=positive_int, required=True
    )
    command("stability", _stability, "Stability threshold and irregular terms of iota_k").add_argument(
        "--k", type=positive_int, required=True
    )
    command("table-b", _table(infinite.g_infinite_squares), "Infinite square sequence table").add_argument(
        "--max-a", type=positive_int, required=True
    )
    command("table-d", _table(infinite.g_infinite_primes), "Infinite prime sequence table").add_argument(
        "--max-a", type=positive_int, required=True
    )
    command("verify-conjecture", _verify_conjecture, "Search for a > 30 without a 3a residue").add_argument(
        "--max-a", type=positive_int, required=True
    )
    sub = command(
        "verify-primes-range",
        _verify_primes,
        "Check the even moduli 44 < a < 2467 for a 2a residue, then the counting margin",
    )
    sub.add_argument("--counting-to", type=positive_int, default=COUNTING_CHECK_END)
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging(args.verbose)

    try:
        document, frame = args.handler(args)
    except FrobeniusError as e:
        logger.error(f"{args.command} failed: {e}")
        return 1
    print(render(document, frame, args.format))
    return 0


def main():
    sys.exit(run())
