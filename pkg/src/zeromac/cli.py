"""Command-line entry point: ``zeromac <command> [options]``.

Exit status: 0 on success (a failed verification is still a result), 1 on
invalid input or usage, 2 when a budget or world-size cap is exceeded, 3 when
an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import io
from .codec import synthesize_code, verify_zero_error
from .errors import BudgetExceeded, InternalAssertion, ZeromacError
from .mac import DEFAULT_WORLD_CAP
from .overlap import (
    conditional_info,
    conditional_overlap_partition,
    nc_info,
    nonstochastic_info,
    overlap_partition,
)
from .region import (
    DEFAULT_BUDGET,
    Bounds,
    capacity_region,
    confusability_independence_number,
    oracle_region,
    single_user_capacity,
)

COMMANDS = (
    "info",
    "cond-info",
    "partition",
    "nc-info",
    "synthesize",
    "verify",
    "region",
    "oracle-region",
    "single-user",
)

_WORLD_GROUPS = {"info": 2, "cond-info": 3, "partition": 2, "nc-info": 3}
_NEEDS_N = {"region", "oracle-region", "single-user"}


class UsageError(ZeromacError):
    pass


@dataclass
class RunConfig:
    command: str
    world: Optional[str] = None
    channel: Optional[str] = None
    structure: Optional[str] = None
    code: Optional[str] = None
    groups: list = field(default_factory=list)
    given: dict = field(default_factory=dict)
    n: Optional[int] = None
    max_u: Optional[int] = None
    max_set_size: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    world_cap: int = DEFAULT_WORLD_CAP
    mu_bound: Optional[tuple] = None
    method: str = "auto"
    threads: int = 1
    output: Optional[str] = None
    fmt: str = "json"

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.max_u, self.max_set_size, self.budget, self.world_cap)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _groups(text: str) -> list:
    groups = [tuple(v for v in g.split("+") if v) for g in text.split(",")]
    if any(not g for g in groups):
        raise argparse.ArgumentTypeError(f"empty variable group in {text!r}")
    return groups


def _assignment(text: str) -> dict:
    out = {}
    for part in text.split(","):
        name, sep, value = part.partition("=")
        if not sep or not name or not value:
            raise argparse.ArgumentTypeError(f"expected NAME=SYMBOL, got {part!r}")
        out[name] = value
    return out


def _mu_bound(text: str) -> tuple:
    parts = [_positive(p) for p in text.split(",")]
    if len(parts) == 1:
        return (parts[0],) * 3
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--mu-bound takes one or three integers")
    return tuple(parts)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zeromac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    common.add_argument("--world-cap", type=_positive, default=DEFAULT_WORLD_CAP)

    for name in ("info", "cond-info", "partition", "nc-info"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--world", required=True)
        p.add_argument(
            "--vars",
            required=True,
            type=_groups,
            help="comma-separated variable groups; join names inside a group with '+'",
        )
        if name == "partition":
            p.add_argument("--given", type=_assignment, default={}, help="NAME=SYMBOL[,...]")

    p = sub.add_parser("synthesize", parents=[common])
    p.add_argument("--channel", required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--n", type=_positive)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--channel", required=True)
    p.add_argument("--code", required=True)

    p = sub.add_parser("region", parents=[common])
    p.add_argument("--channel", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--max-u", type=_positive)
    p.add_argument("--max-set-size", type=_positive)
    p.add_argument("--method", choices=("auto", "full", "reduced"), default="auto")

    p = sub.add_parser("oracle-region", parents=[common])
    p.add_argument("--channel", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mu-bound", type=_mu_bound)

    p = sub.add_parser("single-user", parents=[common])
    p.add_argument("--channel", required=True)
    p.add_argument("--n", type=_positive, required=True)
    return parser


def parse_args(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(list(argv))
    cfg = RunConfig(command=ns.command)
    for key in vars(ns):
        if key == "vars":
            cfg.groups = ns.vars
        elif hasattr(cfg, key):
            setattr(cfg, key, getattr(ns, key))
    want = _WORLD_GROUPS.get(cfg.command)
    if want is not None and len(cfg.groups) != want:
        raise UsageError(f"{cfg.command} needs exactly {want} variable groups in --vars")
    if cfg.fmt == "csv" and cfg.command not in ("region", "oracle-region"):
        raise UsageError("--format csv is only available for region and oracle-region")
    return cfg


def _compute(cfg: RunConfig):
    if cfg.command in _WORLD_GROUPS:
        w = io.load_world(cfg.world)
        g = cfg.groups
        if cfg.command == "info":
            return nonstochastic_info(w, *g)
        if cfg.command == "cond-info":
            return conditional_info(w, *g)
        if cfg.command == "partition":
            if cfg.given:
                return conditional_overlap_partition(w, *g, cfg.given)
            return overlap_partition(w, *g)
        return nc_info(w, *g)

    ch = io.load_channel(cfg.channel)
    if cfg.command == "synthesize":
        s = io.load_structure(cfg.structure)
        if cfg.n is not None and cfg.n != s.n:
            raise ZeromacError(f"--n {cfg.n} does not match the structure blocklength {s.n}")
        return synthesize_code(ch, s.n, s, cfg.world_cap)
    if cfg.command == "verify":
        code = io.load_code(cfg.code)
        return verify_zero_error(ch, code.spec, code)
    if cfg.command == "region":
        return capacity_region(ch, cfg.n, cfg.bounds, cfg.method, cfg.threads)
    if cfg.command == "oracle-region":
        return oracle_region(ch, cfg.n, cfg.mu_bound, cfg.budget, cfg.threads)
    if cfg.command == "single-user":
        r = single_user_capacity(ch, cfg.n, cfg.budget)
        alpha = confusability_independence_number(ch, cfg.n, cfg.budget)
        if alpha != r.cells:
            raise InternalAssertion(
                f"overlap search found {r.cells} codewords, independence number is {alpha}"
            )
        return io.single_user_doc(r, alpha)
    raise UsageError(f"unknown command {cfg.command!r}")


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        text = io.emit_report(_compute(cfg), cfg.fmt)
    except BudgetExceeded as exc:
        print(f"zeromac: budget exceeded: {exc}", file=stderr)
        return 2
    except ZeromacError as exc:
        print(f"zeromac: error: {exc}", file=stderr)
        return 1
    except InternalAssertion as exc:
        print(f"zeromac: internal check failed: {exc}", file=stderr)
        return 3
    if cfg.output:
        io.write_text(cfg.output, text)
    else:
        stdout.write(text)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        print(build_parser().format_usage().rstrip(), file=sys.stderr)
        print(str(exc), file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return run(cfg)
