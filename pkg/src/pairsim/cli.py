"""Command-line entry point.

Subcommands ``score``, ``eval`` and ``errors`` run the pipeline in-process
(one run per invocation, deterministic outputs); ``serve`` starts the HTTP
service exposing the same operations.

Exit codes: 0 success, 1 input/configuration error, 2 evaluation undefined
(single-class data).
"""

from __future__ import annotations

import argparse
import sys

from .errors import PairsimError, SingleClassError
from .pipeline import METHODS, RunConfig, run_errors, run_eval, run_score
from .report import metrics_table_text

__all__ = ["main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage by default; 2 is reserved
    # for "evaluation undefined" here, so usage errors must exit 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_run_arguments(parser: argparse.ArgumentParser, with_threshold: bool) -> None:
    parser.add_argument("--dataset", required=True, help="path to the labeled pair file")
    parser.add_argument(
        "--format", default="qqp-tsv", choices=["qqp-tsv", "generic-csv"],
        help="dataset file layout",
    )
    parser.add_argument("--method", default="string-match", choices=list(METHODS))
    parser.add_argument("--embeddings", help="embedding file (id<TAB>v1,v2,...)")
    parser.add_argument("--scores", help="external score file (pair_id<TAB>score)")
    parser.add_argument("--lemma-table", help="token<TAB>lemma file for normalization")
    parser.add_argument("--no-lowercase", action="store_true", help="keep original casing")
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument("--threads", type=int, help="worker count (default: all cores)")
    if with_threshold:
        parser.add_argument(
            "--threshold", default="youden",
            help="'youden' or a fixed cut-off in [0, 1]",
        )
        parser.add_argument(
            "--split", type=float,
            help="select the threshold on this fraction of pairs and report on the rest",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pairsim", description="Text-pair similarity scoring and evaluation")
    commands = parser.add_subparsers(dest="command", required=True)

    score = commands.add_parser("score", help="write per-pair similarity scores")
    _add_run_arguments(score, with_threshold=False)

    evaluate = commands.add_parser("eval", help="metrics table, ROC points and run manifest")
    _add_run_arguments(evaluate, with_threshold=True)

    errors = commands.add_parser("errors", help="misclassified pairs report")
    _add_run_arguments(errors, with_threshold=True)
    errors.add_argument("--limit", type=int, default=20, help="maximum rows to report")

    serve = commands.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    threshold_mode = "youden"
    threshold_value = None
    raw = getattr(args, "threshold", "youden")
    if raw != "youden":
        try:
            threshold_value = float(raw)
        except ValueError:
            raise PairsimError(f"--threshold must be 'youden' or a number, got {raw!r}") from None
        threshold_mode = "fixed"
    return RunConfig(
        dataset=args.dataset,
        format=args.format,
        method=args.method,
        embeddings=args.embeddings,
        scores=args.scores,
        lemma_table=args.lemma_table,
        lowercase=not args.no_lowercase,
        threshold_mode=threshold_mode,
        threshold_value=threshold_value,
        split=getattr(args, "split", None),
        out=args.out,
        threads=args.threads,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "serve":
            import uvicorn

            from .service.app import create_app

            uvicorn.run(create_app(), host=args.host, port=args.port)
            return 0

        config = _config_from_args(args)
        if args.command == "score":
            result = run_score(config)
            print(
                f"scored {result.summary.total} pairs "
                f"({result.summary.removed} removed) -> {result.score_file}"
            )
        elif args.command == "eval":
            result = run_eval(config)
            print(metrics_table_text(result.report, config.method), end="")
            for name, path in sorted(result.files.items()):
                print(f"{name}: {path}")
        elif args.command == "errors":
            result = run_errors(config, args.limit)
            print(
                f"{len(result.mistakes)} misclassification(s) at threshold "
                f"{result.threshold!r} -> {result.report_file}"
            )
    except SingleClassError as exc:
        print(f"pairsim: {exc}", file=sys.stderr)
        return 2
    except PairsimError as exc:
        print(f"pairsim: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
