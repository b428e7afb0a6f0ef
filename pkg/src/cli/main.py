"""
main.py

Command-line entry point `hbraid` (run as `python -m src.cli`).

Structured output (one JSON document) goes to standard output, a one-line
human summary and the log go to standard error. Exit codes: 0 for
equal/holds/report, 1 for not-equal/fails, 2 for usage or parse errors.

Settings are read from an optional TOML config:

  [LOGGING]
  level = "WARNING"

  [TORSION]
  trials = 1000
  max_len = 12
  seed = 0

  [FUZZ]
  trials = 100
  max_len = 10
  seed = 0

Command-line flags take precedence over the config file.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

import toml

from src.cli import commands
from src.core.errors import BraidSyntaxError

DEFAULT_CONFIG = "hbraid.toml"

DEFAULT_SETTINGS: Dict[str, Dict[str, object]] = {
    "LOGGING": {"level": "WARNING"},
    "TORSION": {"trials": 1000, "max_len": 12, "seed": 0},
    "FUZZ": {"trials": 100, "max_len": 10, "seed": 0},
}

USAGE_ERROR = 2


def load_settings(config_file: Optional[str] = None) -> Dict[str, Dict[str, object]]:
    """
    Merge the TOML config over DEFAULT_SETTINGS.

    A missing default config is fine; a missing explicit one is an error.
    """
    settings = {section: dict(values) for section, values in DEFAULT_SETTINGS.items()}
    path = Path(config_file or DEFAULT_CONFIG)
    if not path.is_file():
        if config_file is not None:
            raise FileNotFoundError(f"Config file not found: {path}")
        return settings

    cfg = toml.load(path)
    for section, defaults in settings.items():
        values = cfg.get(section, {})
        for key, default in defaults.items():
            if key not in values:
                continue
            value = values[key]
            # bool is an int subclass; floats are never truncated
            if type(value) is not type(default):
                raise ValueError(f"Invalid {section} setting '{key}': {value!r}")
            defaults[key] = value

    level = settings["LOGGING"]["level"].upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(
            f"Invalid LOGGING setting 'level': {settings['LOGGING']['level']!r}"
        )
    settings["LOGGING"]["level"] = level
    return settings


def _keep_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid component list: '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbraid",
        description="Welded and classical braids up to link-homotopy.",
    )
    parser.add_argument("--config", default=None, help=f"TOML config (default: {DEFAULT_CONFIG})")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("equal", help="decide equality of two braid words")
    p.add_argument("-n", type=int, required=True, help="number of strands")
    p.add_argument("word_a")
    p.add_argument("word_b")

    p = sub.add_parser("artin", help="Artin image of a braid word")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("word")

    p = sub.add_parser("magnus", help="reduced Magnus expansion of a group word")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("group_word")

    p = sub.add_parser("obstruction", help="classicality and torsion obstructions")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("word")

    p = sub.add_parser("torsion-check", help="randomized torsion-freeness replay")
    p.add_argument("-p", type=int, required=True, help="number of strands (prime)")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("fuzz", help="run the invariant suites")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("delete", help="keep only some components")
    p.add_argument("-n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--keep", type=_keep_list, help="e.g. 1,3")
    group.add_argument("--cycle-of", type=int, metavar="K",
                       help="keep the cycle of the permutation through component K")
    p.add_argument("word")

    p = sub.add_parser("order", help="order of a braid in hWB_n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("word")

    return parser


def _pick(value, settings: Dict[str, object], key: str):
    return settings[key] if value is None else value


def run(args: argparse.Namespace, settings: Dict[str, Dict[str, object]]) -> commands.Verdict:
    """Dispatch parsed arguments to the matching cmd_* function."""
    if args.command == "equal":
        return commands.cmd_equal(args.n, args.word_a, args.word_b)
    if args.command == "artin":
        return commands.cmd_artin(args.n, args.word)
    if args.command == "magnus":
        return commands.cmd_magnus(args.n, args.group_word)
    if args.command == "obstruction":
        return commands.cmd_obstruction(args.n, args.word)
    if args.command == "torsion-check":
        torsion = settings["TORSION"]
        return commands.cmd_torsion_check(
            args.p,
            _pick(args.trials, torsion, "trials"),
            _pick(args.max_len, torsion, "max_len"),
            _pick(args.seed, torsion, "seed"),
        )
    if args.command == "fuzz":
        fuzz = settings["FUZZ"]
        return commands.cmd_fuzz(
            args.n,
            _pick(args.trials, fuzz, "trials"),
            _pick(args.seed, fuzz, "seed"),
            _pick(args.max_len, fuzz, "max_len"),
        )
    if args.command == "delete":
        return commands.cmd_delete(args.n, args.word, args.keep, args.cycle_of)
    if args.command == "order":
        return commands.cmd_order(args.n, args.word, args.bound)
    raise ValueError(f"Unknown command: {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 on --help
        return int(exc.code or 0)

    try:
        settings = load_settings(args.config)
    except (OSError, ValueError) as err:
        print(f"hbraid: {err}", file=sys.stderr)
        return USAGE_ERROR

    level = logging.DEBUG if args.verbose else settings["LOGGING"]["level"]
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        force=True,
    )

    try:
        verdict = run(args, settings)
    except ValueError as err:
        error: Dict[str, object] = {"command": args.command, "error": str(err)}
        if isinstance(err, BraidSyntaxError):
            error["position"] = err.position
        print(json.dumps(error, indent=2))
        print(f"hbraid {args.command}: {err}", file=sys.stderr)
        return USAGE_ERROR

    print(json.dumps(verdict.to_json(), indent=2))
    print(verdict.summary, file=sys.stderr)
    return verdict.exit_code
