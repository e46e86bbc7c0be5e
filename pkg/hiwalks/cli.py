# coding=utf-8
"""Command-line interface.

::

    hiwalks walk --seq builtin:minimal-fs:w^2 --n 1 --tuple "w+3,w*2"
    hiwalks rho2 --seq builtin:maximal:w^2 --n 2 --tuple "w,w*2,w*3"
    hiwalks coherence --seq game.ncs --window w^2
    hiwalks suite --seq builtin:maximal:w^2 --n 2 --lemmas restart,pairing
    hiwalks generate game --n 2 --rounds 40 --seed 7 --out game.ncs
    hiwalks parse-check game.ncs

Exit status is 0 on success, 1 when a verification fails, 2 for bad input
and 3 when a walk exceeds the node cap.

Contents
--------

:main: Parse arguments, run a verb and return the exit status.
:SuiteRunner: The verifier ``suite`` runs.
:build_parser: The full ``ArgumentParser``.

"""

import argparse
import io
import json
import logging
import sys

from . import configuration
from . import ordinal as ords
from .behavior import FailFastSuite
from .characteristics import resh_n, rho2_n
from .csequence import build_maximal, build_order_minimal, \
    build_stepped_up, check_coherence
from .errors import HiwalksError, ResourceCapError, TupleError
from .export import FORMATS, render, tree_to_json
from .game import GameBuilder
from .lemmas import LemmaSuite
from .logger import CounterexampleLoggingSuite, ReportLoggingSuite
from .specfile import format_spec, read_spec, resolve
from .walks import DEFAULT_CAP, classify_nodes, walk

LOG = logging.getLogger("hiwalks.cli")

DEFAULT_SEQ = "builtin:minimal-fs:w^2"

OK = 0
FAILED = 1
BAD_INPUT = 2
OVER_CAP = 3

GENERATORS = ("order-minimal", "maximal", "stepped-up", "game")


# pylint: disable=too-many-ancestors
class SuiteRunner(FailFastSuite, ReportLoggingSuite, CounterexampleLoggingSuite,
                  LemmaSuite):
    """Lemma suite with verdict and counterexample logs and fail-fast."""
    pass


def _emit(config, text):
    out = config.get("out")
    if out:
        with io.open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _sequence(config):
    return resolve(config.get("seq", DEFAULT_SEQ), config.get("n"))


def _cap(config):
    return config.get("cap", DEFAULT_CAP)


def _signed_tuple(config):
    sign = -1 if config.get("sign") == "-" else 1
    labels = ords.parse_tuple(config["tuple"])
    if len(labels) < 2:
        raise TupleError("a walk needs alpha and at least one more entry, "
                         "got %s" % ords.format_tuple(labels))
    return sign, labels


def cmd_walk(config):
    seq = _sequence(config)
    sign, labels = _signed_tuple(config)
    tree = walk(seq, sign, labels[0], labels[1:], _cap(config))
    fmt = config.get("format") or "text"
    if fmt == "json":
        _emit(config, tree_to_json(tree, classify_nodes(tree)) + "\n")
    else:
        _emit(config, render(tree, fmt))
    return OK


def cmd_rho2(config):
    seq = _sequence(config)
    sign, labels = _signed_tuple(config)
    value = rho2_n(seq, sign, labels[0], labels[1:], _cap(config))
    if config.get("format") == "json":
        _emit(config, json.dumps({"rho2": value}) + "\n")
    else:
        _emit(config, "%i\n" % value)
    return OK


def cmd_resh(config):
    seq = _sequence(config)
    sign, labels = _signed_tuple(config)
    element = resh_n(seq, labels[0], labels[1:], sign, _cap(config))
    if config.get("format") == "json":
        _emit(config, json.dumps(element.to_list(), indent=4,
                                 separators=(',', ': ')) + "\n")
    else:
        _emit(config, "%s\n" % element)
    return OK


def cmd_coherence(config):
    seq = _sequence(config)
    window = config.get("window")
    report = check_coherence(seq, window)
    if config.get("format") == "json":
        _emit(config, json.dumps(report.to_dict(), indent=4,
                                 separators=(',', ': ')) + "\n")
    else:
        lines = ["VIOLATION alpha=%s index=%s kind=%s"
                 % (a, ords.format_tuple(i), k)
                 for a, i, k in report.violations]
        lines.append("coherence below %s: %i indices, %i violations"
                     % (report.window, report.checked, len(report.violations)))
        _emit(config, "\n".join(lines) + "\n")
    return OK if report.ok else FAILED


def cmd_suite(config):
    config = dict(config)
    config.setdefault("seq", DEFAULT_SEQ)
    runner = SuiteRunner(config)
    report = runner.verify()
    if config.get("format") == "json":
        _emit(config, json.dumps(report.to_dict(), indent=4,
                                 separators=(',', ': ')) + "\n")
    else:
        lines = report.lines()
        lines.append("%i instances, %i failures" % (len(report.results),
                                                     len(report.failures)))
        _emit(config, "\n".join(lines) + "\n")
    return OK if report.ok else FAILED


def _generate(config):
    builder = config["builder"]
    n = config.get("n") or (2 if builder == "stepped-up" else 1)
    if builder == "game":
        game = GameBuilder({"n": n,
                            "rounds": config.get("rounds", 2),
                            "block": config.get("block", 8),
                            "adversary": config.get("adversary", "trivial"),
                            "seed": config.get("seed", 0)})
        return game.play()
    if builder == "stepped-up":
        d_seq = resolve(config.get("d", "builtin:maximal:w^2"), 1)
        e_seq = resolve(config.get("e", "builtin:minimal-fs:w"), n - 1)
        points = [ords.parse_ordinal(s) for s in
                  config.get("s", "w").split(",")]
        return build_stepped_up(d_seq, e_seq, points,
                                config.get("kappa", ords.OMEGA))
    lam = config.get("lambda", ords.Ordinal.omega(2))
    if builder == "maximal":
        return build_maximal(n, lam)
    return build_order_minimal(n, lam)


def cmd_generate(config):
    seq = _generate(config)
    _emit(config, format_spec(seq))
    return OK


def cmd_parse_check(config):
    seq = read_spec(config["file"])
    _emit(config, "ok n=%i domain=%s\n" % (seq.n, seq.domain))
    return OK


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--seq",
                        help="Spec file path or builtin:<kind>:<ord> "
                             "(default: %s)" % DEFAULT_SEQ)
    parser.add_argument("--n", type=int, help="Dimension of a builtin")
    parser.add_argument("--format", choices=FORMATS,
                        help="Output format (default: text)")
    parser.add_argument("--out", help="Write output to this path")
    parser.add_argument("--verbose", "-v", action="store_true", default=None,
                        help="Log progress to stderr")
    return parser


def _walk_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--tuple", required=True,
                        help="Comma-separated (alpha, gamma...)")
    parser.add_argument("--sign", choices=("+", "-"),
                        help="Root sign (default: +)")
    parser.add_argument("--cap", type=int,
                        help="Maximum number of nodes per walk")
    return parser


def build_parser():
    common = _common_parser()
    walking = _walk_parser()
    parser = configuration.get_parser(
        "Walks on ordinals along n-C-sequences.")
    sub = parser.add_subparsers(dest="verb")
    sub.required = True

    for verb, func in (("walk", cmd_walk), ("rho2", cmd_rho2),
                       ("resh", cmd_resh)):
        verb_parser = sub.add_parser(verb, parents=[common, walking])
        verb_parser.set_defaults(func=func)

    coherence = sub.add_parser("coherence", parents=[common])
    coherence.add_argument("--window", type=ords.parse_ordinal,
                           help="Scan below this ordinal")
    coherence.set_defaults(func=cmd_coherence)

    suite = sub.add_parser("suite",
                           parents=[common, SuiteRunner.arg_parser()])
    suite.set_defaults(func=cmd_suite)

    generate = sub.add_parser("generate",
                              parents=[common, GameBuilder.arg_parser()])
    generate.add_argument("builder", choices=GENERATORS)
    generate.add_argument("--lambda", type=ords.parse_ordinal,
                          help="Domain bound of order-minimal and maximal")
    generate.add_argument("--seed", "-s", type=int,
                          help="Seed for the game adversary")
    generate.add_argument("--d", help="Builtin 1-sequence to step along")
    generate.add_argument("--e", help="Builtin sequence to step up")
    generate.add_argument("--kappa", type=ords.parse_ordinal,
                          help="Order type of the clubs at the copy points")
    generate.add_argument("--s", help="Comma-separated copy points")
    generate.set_defaults(func=cmd_generate)

    check = sub.add_parser("parse-check", parents=[common])
    check.add_argument("file", help="Spec file to parse")
    check.set_defaults(func=cmd_parse_check)

    return parser


def _verbose():
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root = logging.getLogger("hiwalks")
    root.addHandler(handler)
    root.setLevel(logging.INFO)
    return handler


def main(argv=None):
    """Run one command and return its exit status."""
    parser = build_parser()
    config = configuration.read_args(parser, argv)
    if "config_file" in config:
        config = configuration.merge(configuration.read_file(config), config)

    handler = _verbose() if config.get("verbose") else None
    try:
        return config["func"](config)
    except ResourceCapError as err:
        sys.stderr.write("hiwalks: %s\n" % err)
        return OVER_CAP
    except (HiwalksError, ValueError) as err:
        sys.stderr.write("hiwalks: %s\n" % err)
        return BAD_INPUT
    finally:
        if handler is not None:
            logging.getLogger("hiwalks").removeHandler(handler)
