import argparse

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from algebra.cli import RunConfig, execute, field_selector, render
from algebra.exceptions import LeavittError

EXPRESSION_HELP = "Leavitt expression, e.g. \"e* e\" or \"1/2 v - e f*\""


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


class Command(BaseCommand):
    help = "Leavitt path algebra engine: analyses, products, reductions and certificates on a graph file."

    requires_system_checks = []

    def add_arguments(self, parser):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("graph", help="graph JSON file")
        common.add_argument("--field", type=field_selector, default=settings.LEAVITT_FIELD,
                            help="'rationals' or a prime p")
        common.add_argument("--format", choices=("text", "json"), default="text")
        common.add_argument("--seed", type=int, default=settings.LEAVITT_SEED)

        # Los subparsers son argparse puros: un error de uso sale con código 2
        subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=argparse.ArgumentParser)
        subparsers.add_parser("analyze", parents=[common], help="condition (L), hereditary saturated subsets")
        subparsers.add_parser("phi", parents=[common], help="image of an expression").add_argument(
            "--expr", required=True, help=EXPRESSION_HELP)
        mul = subparsers.add_parser("mul", parents=[common], help="product of two expressions")
        mul.add_argument("--lhs", required=True, help=EXPRESSION_HELP)
        mul.add_argument("--rhs", required=True, help=EXPRESSION_HELP)
        subparsers.add_parser("normal-form", parents=[common], help="canonical form and grade components").add_argument(
            "--expr", required=True, help=EXPRESSION_HELP)
        subparsers.add_parser("reduce", parents=[common], help="certificate for a vertex projection").add_argument(
            "--expr", required=True, help=EXPRESSION_HELP)
        subparsers.add_parser("dimension", parents=[common], help="dimension of an acyclic graph's algebra")
        subparsers.add_parser("check", parents=[common], help="run every invariant suite").add_argument(
            "--trials", type=_non_negative, default=None,
            help="random trials per suite (default: 500 ring-axiom triples, 200 grading pairs, "
                 "1000 zero tests, 200 reductions)")
        subparsers.add_parser("demo-simplicity", parents=[common], help="certificates for every vertex").add_argument(
            "--expr", required=True, help=EXPRESSION_HELP)
        subparsers.add_parser("verify", parents=[common], help="re-verify a stored certificate").add_argument(
            "--certificate", required=True, help="certificate JSON file")

    def handle(self, *args, **options):
        config = RunConfig(
            graph_path=options["graph"],
            subcommand=options["subcommand"],
            field=options["field"],
            output_format=options["format"],
            seed=options["seed"],
            options={
                key: options[key]
                for key in ("expr", "lhs", "rhs", "trials", "certificate")
                if options.get(key) is not None
            },
        )
        try:
            outcome = execute(config)
        except LeavittError as exc:
            raise CommandError(str(exc), returncode=1) from exc
        self.stdout.write(render(outcome, config.output_format))
        if not outcome.ok:
            raise CommandError(outcome.failure, returncode=1)
