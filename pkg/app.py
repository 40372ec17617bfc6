# Copyright 2024 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import argparse
import logging
import os
import sys
import traceback

from common import config as configuration
from common.dispatch import call_command
from common.errors import PartitionParseError, PlethysmError
from common.output import render
from models.partition import Partition
from services.classifier import Classifier
from services.commands import Commands
from services.engine import PlethysmEngine
from services.oracle import PowerSumOracle

# Environment variables

MAX_DEGREE = os.environ.get("PLETHYSM_MAX_DEGREE")
THREADS = os.environ.get("PLETHYSM_THREADS")
LOG_LEVEL = os.environ.get("PLETHYSM_LOG_LEVEL")

# number of partitions each subcommand reads from its positional tokens
PARTITION_COUNTS = {"expand": 2, "coeff": 3, "mf": 2, "witness": 2, "domino": 1}


def parse_partitions(tokens, count):
    """Splits tokens such as ["4,2", "/", "2"] or ["4,2/2"] on "/" into partitions."""
    pieces = [piece.strip() for piece in " ".join(tokens).split("/")]
    if len(pieces) != count or not all(pieces):
        raise PartitionParseError(f"expected {count} partition(s) separated by '/', got {' '.join(tokens)!r}")
    return [Partition.parse(piece.replace(" ", "")) for piece in pieces]


def build_parser(version):
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="print the record as JSON")
    fmt.add_argument("--html", dest="fmt", action="store_const", const="html", help="print the record as an HTML table")
    common.add_argument("--max-degree", type=int, help="engine cap on |nu|*|mu|")
    common.add_argument("--threads", type=int, help="worker processes for table")

    parser = argparse.ArgumentParser(prog="plethysm", description="Plethysm coefficients of Schur functions.")
    parser.add_argument("--version", action="version", version=version)
    commands = parser.add_subparsers(dest="command", required=True)

    expand = commands.add_parser("expand", parents=[common], help="Schur expansion of s_nu o s_mu")
    expand.add_argument("partitions", nargs="+", metavar="NU / MU")
    expand.add_argument("--oracle", action="store_true", help="cross-check with the power-sum oracle")

    coeff = commands.add_parser("coeff", parents=[common], help="one coefficient p(nu, mu, lambda)")
    coeff.add_argument("partitions", nargs="+", metavar="NU / MU / LAMBDA")
    coeff.add_argument("--oracle", action="store_true", help="cross-check with the power-sum oracle")

    mf = commands.add_parser("mf", parents=[common], help="is s_nu o s_mu multiplicity-free (exit 0) or not (exit 1)")
    mf.add_argument("partitions", nargs="+", metavar="NU / MU")

    witness = commands.add_parser("witness", parents=[common], help="a certified coefficient >= 2")
    witness.add_argument("partitions", nargs="+", metavar="NU / MU")

    domino = commands.add_parser("domino", parents=[common], help="split s_mu x s_mu by domino spin")
    domino.add_argument("partitions", nargs="+", metavar="MU")
    domino.add_argument("--render", action="store_true", help="draw every domino tableau")
    domino.add_argument("--oracle", action="store_true", help="compare both halves with the engine")

    table = commands.add_parser("table", parents=[common], help="p(nu, mu) for |nu|+|mu| <= N")
    table.add_argument("max_total", type=int, metavar="N")
    table.add_argument("--check", action="store_true", help="compare with the golden table")
    return parser


def configure_logging(config):
    logging.basicConfig()
    level = LOG_LEVEL or config.get_property("general", "log_level", "WARNING")
    logging.getLogger().setLevel(level.upper())


def build_params(args):
    if args.command == "table":
        return {"max_total": args.max_total, "check": args.check}
    names = {"expand": ("nu", "mu"), "coeff": ("nu", "mu", "lam"), "mf": ("nu", "mu"),
             "witness": ("nu", "mu"), "domino": ("mu",)}[args.command]
    params = dict(zip(names, parse_partitions(args.partitions, PARTITION_COUNTS[args.command])))
    for flag in ("oracle", "render"):
        if getattr(args, flag, False):
            params[flag] = True
    return params


def main(argv=None):
    # Config file loader
    config = configuration.Config.get_instance()
    args = build_parser(config.get_property("general", "version")).parse_args(argv)
    configure_logging(config)

    try:
        max_degree = args.max_degree or (int(MAX_DEGREE) if MAX_DEGREE else None)
        threads = args.threads or (int(THREADS) if THREADS else None)
        engine = PlethysmEngine(config, max_degree)
        oracle = PowerSumOracle(config)
        classifier = Classifier(engine, config)
        commands = Commands(engine, oracle, classifier, config, threads)

        record = call_command(commands, args.command, build_params(args))
        print(render(record, args.fmt or "human"))
    except PlethysmError as e:
        logging.debug("%s, %s", traceback.format_exc(), e)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logging.error("%s, %s", traceback.format_exc(), e)
        print(f"internal error: {e}", file=sys.stderr)
        return 4

    if args.command == "mf" and not record.result["verdict"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
