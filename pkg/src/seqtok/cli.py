"""Command-line front end.

One-shot pipeline per input file: read, tokenize, write the token lines (or
the filtered text with --emit-text), then print statistics.  Diagnostics go
to stderr, statistics to stdout, so stats stay pipeline-composable.

Exit codes: 0 all files processed, 1 any per-file or config failure
(remaining files are still processed), 2 invalid invocation.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter
from dataclasses import replace
from typing import Dict, List, Optional, Sequence

from .config_xml import ConfigError, default_config, load_config
from .model import SPECIAL_KINDS, Action, Config, SequenceRule, TokenKind
from .stats import StatsFormat, _assemble, compute_stats, render_stats
from .tokenizer import ScanStrategy, filter_text, render_tokens, tokenize

#: Files larger than this are processed line by line instead of whole.
BUFFER_CAP = 64 * 1024 * 1024

_KIND_FLAGS = (
    ("ip", TokenKind.IP),
    ("email", TokenKind.EMAIL),
    ("url", TokenKind.URL),
    ("date", TokenKind.DATE),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqtok",
        description="Tokenize text, treating IPs, emails, URLs and dates "
        "as atomic sequences.",
    )
    parser.add_argument(
        "-i", "--input", action="append", required=True, metavar="PATH",
        help="input file; repeat for multiple files",
    )
    parser.add_argument("--config", metavar="PATH", help="XML configuration file")
    for name, _ in _KIND_FLAGS:
        parser.add_argument(
            f"--{name}", action="store_true",
            help=f"enable {name} sequences (any kind flag disables unflagged kinds)",
        )
    parser.add_argument(
        "--mode", choices=("preserve", "remove"),
        help="apply this action to every enabled kind, overriding the config",
    )
    parser.add_argument(
        "-o", "--output", metavar="PATH",
        help="output file, or directory for multiple inputs "
        "(default: <input>.tok next to each input)",
    )
    parser.add_argument(
        "--emit-text", action="store_true",
        help="write filtered text instead of token lines",
    )
    parser.add_argument(
        "--stats", action=argparse.BooleanOptionalAction, default=None,
        help="print statistics to stdout (config default: on)",
    )
    parser.add_argument(
        "--stats-format", choices=("text", "json"), default="text",
    )
    parser.add_argument(
        "--tag", action=argparse.BooleanOptionalAction, default=None,
        help="prefix special tokens with <IP>/<EMAIL>/<URL>/<DATE>",
    )
    parser.add_argument(
        "--keep-punctuation", action=argparse.BooleanOptionalAction, default=None,
    )
    parser.add_argument(
        "--strategy", choices=("direct", "anchored"), default="anchored",
        help="scanning strategy (both produce identical output)",
    )
    return parser


def _effective_config(args: argparse.Namespace) -> Config:
    config = load_config(args.config) if args.config else default_config()
    rules: Dict[TokenKind, SequenceRule] = dict(config.rules)
    flagged = [kind for name, kind in _KIND_FLAGS if getattr(args, name)]
    if flagged:
        # Explicit mode: the kind flags alone decide what is enabled.
        for kind in SPECIAL_KINDS:
            rules[kind] = replace(rules[kind], enabled=kind in flagged)
    if args.mode is not None:
        action = Action(args.mode)
        for kind in SPECIAL_KINDS:
            rules[kind] = replace(rules[kind], action=action)
    return Config(
        rules=rules,
        keep_punctuation=(
            config.keep_punctuation
            if args.keep_punctuation is None else args.keep_punctuation
        ),
        tag_output=config.tag_output if args.tag is None else args.tag,
        output_path=args.output if args.output is not None else config.output_path,
        stats_enabled=config.stats_enabled if args.stats is None else args.stats,
    )


def _output_path(input_path: str, target: Optional[str]) -> str:
    if target is None:
        return input_path + ".tok"
    if os.path.isdir(target):
        return os.path.join(target, os.path.basename(input_path) + ".tok")
    return target


def _process_whole(
    path: str, out_path: str, config: Config, strategy: ScanStrategy,
    emit_text: bool,
):
    with open(path, "rb") as fh:
        data = fh.read()
    tokens = tokenize(data, config, strategy)
    if emit_text:
        payload = filter_text(data, config, strategy)
    else:
        payload = render_tokens(tokens, config.tag_output).encode("utf-8")
    with open(out_path, "wb") as fh:
        fh.write(payload)
    return compute_stats(tokens, data) if config.stats_enabled else None


def _process_lines(
    path: str, out_path: str, config: Config, strategy: ScanStrategy,
    emit_text: bool,
):
    # Line streaming for oversized files.  No sequence grammar admits a
    # newline, so per-line scanning finds the same matches; only whitespace
    # collapsing at line edges can differ from whole-buffer filtering.
    counts: Counter = Counter()
    word_tokens = 0
    per_kind = {kind: 0 for kind in SPECIAL_KINDS}
    with open(path, "rb") as src, open(out_path, "wb") as dst:
        for raw in src:
            line = raw.rstrip(b"\n")
            had_newline = raw.endswith(b"\n")
            if emit_text:
                dst.write(filter_text(line, config, strategy))
                if had_newline:
                    dst.write(b"\n")
            tokens = tokenize(line, config, strategy)
            if not emit_text:
                dst.write(render_tokens(tokens, config.tag_output).encode("utf-8"))
            if config.stats_enabled:
                for token in tokens:
                    counts[token.text] += 1
                    if token.kind is TokenKind.WORD:
                        word_tokens += 1
                    else:
                        per_kind[token.kind] += 1
    if not config.stats_enabled:
        return None
    return _assemble(counts, word_tokens, per_kind)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = _effective_config(args)
    except (ConfigError, OSError) as exc:
        where = args.config or "config"
        print(f"seqtok: {where}: {exc}", file=sys.stderr)
        return 1

    inputs: List[str] = args.input
    if len(inputs) > 1 and config.output_path is not None \
            and not os.path.isdir(config.output_path):
        print(
            "seqtok: error: multiple inputs require --output to be a directory",
            file=sys.stderr,
        )
        return 2

    strategy = ScanStrategy(args.strategy)
    stats_format = StatsFormat(args.stats_format)
    failures = 0
    for path in inputs:
        out_path = _output_path(path, config.output_path)
        try:
            if os.path.getsize(path) > BUFFER_CAP:
                report = _process_lines(
                    path, out_path, config, strategy, args.emit_text
                )
            else:
                report = _process_whole(
                    path, out_path, config, strategy, args.emit_text
                )
        except OSError as exc:
            print(f"seqtok: {path}: {exc.strerror or exc}", file=sys.stderr)
            failures += 1
            continue
        except UnicodeDecodeError as exc:
            print(f"seqtok: {path}: not valid UTF-8 ({exc})", file=sys.stderr)
            failures += 1
            continue
        if report is not None:
            if len(inputs) > 1:
                sys.stdout.write(f"# {path}\n")
            sys.stdout.write(render_stats(report, stats_format))
    return 1 if failures else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
