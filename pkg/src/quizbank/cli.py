"""Command-line front end: build authoring scripts, inspect, preview, edit.

Exit codes are a stable contract for automation: 0 on success, 1 for
usage errors (bad flags, out-of-range values), 2 for script or parse
failures. Warnings go to standard error, one per line, prefixed "WARN:".
"""

from __future__ import annotations

import argparse
import os
import runpy
import sys
import tempfile
import traceback
from pathlib import Path

from . import bank as bank_module
from .errors import BankParseError, QuizbankError, ValidationError
from .fileio import atomic_write_bytes, timestamped_backup
from .maintenance import replace_text, replace_text_pattern, set_wrong_penalty
from .media import question_media_bytes
from .moodle_xml import parse_bank, serialize_bank
from .preview import render_preview

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

SEED_ENV_VAR = "QUIZBANK_SEED"

# Per-question embedded media above this size triggers a stats warning;
# large payloads are known to upset some LMS importers.
DEFAULT_MEDIA_WARN_MB = 10


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; remap to the documented code 1.
    def error(self, message):
        raise _UsageError(message)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help and friends land here; argparse already printed.
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BankParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except QuizbankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quizbank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="run an authoring script")
    build.add_argument("script", type=Path, help="Python script that builds a bank")
    build.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"force the RNG seed for every bank the script creates "
        f"(default: ${SEED_ENV_VAR} when set)",
    )
    build.add_argument(
        "--out", type=Path, default=None, help="override the script's output path"
    )
    build.set_defaults(handler=_cmd_build)

    stats = sub.add_parser("stats", help="summarize an XML bank")
    stats.add_argument("bank", type=Path)
    stats.add_argument(
        "--media-warn-mb",
        type=float,
        default=DEFAULT_MEDIA_WARN_MB,
        help="warn when one question embeds more media than this (MB)",
    )
    stats.set_defaults(handler=_cmd_stats)

    preview = sub.add_parser("preview", help="render an XML bank to preview HTML")
    preview.add_argument("bank", type=Path)
    preview.add_argument(
        "--out", type=Path, default=None, help="output HTML path (default: temp file)"
    )
    preview.set_defaults(handler=_cmd_preview)

    maintain = sub.add_parser("maintain", help="bulk-edit an XML bank")
    maintain.add_argument("bank", type=Path)
    maintain_sub = maintain.add_subparsers(dest="operation", required=True)

    replace = maintain_sub.add_parser("replace-text", help="replace text everywhere")
    replace.add_argument("old")
    replace.add_argument("new")
    replace.add_argument(
        "--regex", action="store_true", help="treat OLD as a regular expression"
    )
    _add_maintain_output_args(replace)
    replace.set_defaults(handler=_cmd_maintain_replace)

    penalty = maintain_sub.add_parser(
        "set-penalty", help="set the wrong-answer fraction of all multiple-choice questions"
    )
    penalty.add_argument("fraction", type=float, help="new fraction, between -100 and 0")
    _add_maintain_output_args(penalty)
    penalty.set_defaults(handler=_cmd_maintain_penalty)

    return parser


def _add_maintain_output_args(parser) -> None:
    parser.add_argument(
        "--out",
        type=Path,
        default=None,
        help="write the edited bank here instead of in place",
    )
    parser.add_argument(
        "--no-backup",
        action="store_true",
        help="skip the timestamped .bak copy when editing in place",
    )


# -- commands ----------------------------------------------------------------


def _cmd_build(args) -> int:
    script = args.script
    if not script.is_file():
        raise _UsageError(f"script not found: {script}")
    seed = args.seed
    if seed is None and os.environ.get(SEED_ENV_VAR):
        try:
            seed = int(os.environ[SEED_ENV_VAR])
        except ValueError:
            raise _UsageError(
                f"${SEED_ENV_VAR} must be an integer, got {os.environ[SEED_ENV_VAR]!r}"
            )
    bank_module.set_build_overrides(seed=seed, output_path=args.out)
    try:
        runpy.run_path(str(script), run_name="__main__")
    except SystemExit as exc:
        if exc.code:
            print(f"error: script exited with status {exc.code}", file=sys.stderr)
            return EXIT_FAILURE
    except BaseException:
        traceback.print_exc()
        return EXIT_FAILURE
    finally:
        bank_module.clear_build_overrides()
    return EXIT_OK


def _cmd_stats(args) -> int:
    bank = _load_bank(args.bank)
    kind_counts: dict[str, int] = {}
    category_counts: dict[str, int] = {}
    media_total = 0
    threshold = int(args.media_warn_mb * 1024 * 1024)
    for index, question in enumerate(bank.questions, start=1):
        kind_counts[question.kind.value] = kind_counts.get(question.kind.value, 0) + 1
        category = question.category or "(default)"
        category_counts[category] = category_counts.get(category, 0) + 1
        size = question_media_bytes(question)
        media_total += size
        if size > threshold:
            label = question.name or f"question #{index}"
            bank.warn(
                f"{label}: embedded media is {size / (1024 * 1024):.1f} MB, "
                f"above the {args.media_warn_mb:g} MB threshold"
            )
    print(f"questions: {len(bank.questions)}")
    for kind in sorted(kind_counts):
        print(f"  {kind}: {kind_counts[kind]}")
    print("categories:")
    if not category_counts:
        print("  (none)")
    for category in sorted(category_counts):
        print(f"  {category}: {category_counts[category]}")
    print(f"embedded media bytes: {media_total}")
    print(f"warnings: {len(bank.warnings)}")
    return EXIT_OK


def _cmd_preview(args) -> int:
    bank = _load_bank(args.bank)
    if args.out is not None:
        out = args.out
    else:
        fd, name = tempfile.mkstemp(prefix="quizbank-preview-", suffix=".html")
        os.close(fd)
        out = Path(name)
    render_preview(bank, out)
    print(out)
    return EXIT_OK


def _cmd_maintain_replace(args) -> int:
    bank = _load_bank(args.bank)
    if args.regex:
        count = replace_text_pattern(bank, args.old, args.new)
    else:
        count = replace_text(bank, args.old, args.new)
    _write_maintained(bank, args)
    print(f"replacements: {count}")
    return EXIT_OK


def _cmd_maintain_penalty(args) -> int:
    bank = _load_bank(args.bank)
    count = set_wrong_penalty(bank, args.fraction)
    _write_maintained(bank, args)
    print(f"questions updated: {count}")
    return EXIT_OK


# -- helpers -----------------------------------------------------------------


def _load_bank(path: Path):
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise QuizbankError(f"cannot read {path}: {exc}") from exc
    bank = parse_bank(data)
    bank.output_path = path
    return bank


def _write_maintained(bank, args) -> None:
    data = serialize_bank(bank)
    target = args.out if args.out is not None else args.bank
    try:
        if target == args.bank and not args.no_backup:
            backup = timestamped_backup(args.bank)
            print(f"backup: {backup}", file=sys.stderr)
        atomic_write_bytes(target, data)
    except OSError as exc:
        raise QuizbankError(f"cannot write {target}: {exc}") from exc


if __name__ == "__main__":
    sys.exit(main())
