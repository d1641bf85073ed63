"""Command-line front end: ``pfaffian-lab verify | pfaffian | schur | list``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .errors import PfaffianLabError
from .identities import IdentityParams, known_ids, lookup, run_suite
from .identities.report import PASS

JOBS_ENV = "PFAFFIAN_LAB_JOBS"
PARAM_FLAGS = ("n", "q_cap", "x_cap", "y_cap", "trials")


class UsageError(Exception):
    """Bad flags or arguments; maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CliConfig:
    command: str
    ids: list[str] = field(default_factory=list)
    all: bool = False
    n: Optional[int] = None
    q_cap: Optional[int] = None
    x_cap: Optional[int] = None
    y_cap: Optional[int] = None
    seed: int = 0
    trials: Optional[int] = None
    inputs: list[str] = field(default_factory=list)
    json: bool = False
    out: Optional[str] = None
    jobs: int = 1
    copfaffian: bool = False
    partition: Optional[str] = None
    vars: Optional[int] = None

    @classmethod
    def parse(cls, argv: Sequence[str]) -> "CliConfig":
        ns = build_parser().parse_args(list(argv))
        if ns.command is None:
            raise UsageError("missing command; choose one of verify, pfaffian, schur, list")
        cfg = cls(command=ns.command)
        for k, v in vars(ns).items():
            if k == "id":
                cfg.ids = list(v or [])
            elif k == "input":
                cfg.inputs = [v] if v else []
            elif hasattr(cfg, k) and k != "command":
                setattr(cfg, k, v)
        if cfg.command == "verify" and cfg.jobs is None:
            cfg.jobs = _env_jobs()
        return cfg

    def to_argv(self) -> list[str]:
        """Flags that parse back to an equal config."""
        argv = [self.command]
        if self.command == "verify":
            for i in self.ids:
                argv += ["--id", i]
            if self.all:
                argv.append("--all")
            for k in PARAM_FLAGS:
                v = getattr(self, k)
                if v is not None:
                    argv += ["--" + k.replace("_", "-"), str(v)]
            argv += ["--seed", str(self.seed), "--jobs", str(self.jobs)]
            if self.json:
                argv.append("--json")
            if self.out is not None:
                argv += ["--out", self.out]
        elif self.command == "pfaffian":
            argv += list(self.inputs)
            if self.copfaffian:
                argv.append("--copfaffian")
        elif self.command == "schur":
            if self.partition is not None:
                argv += ["--partition", self.partition]
            if self.vars is not None:
                argv += ["--vars", str(self.vars)]
        elif self.command == "list":
            if self.json:
                argv.append("--json")
        return argv

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "CliConfig":
        return cls(**d)

    def params(self) -> IdentityParams:
        return IdentityParams(n=self.n, q_cap=self.q_cap, x_cap=self.x_cap, y_cap=self.y_cap, seed=self.seed, trials=self.trials)


def _env_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be a positive integer, got {raw!r}") from None
    if jobs < 1:
        raise UsageError(f"{JOBS_ENV} must be a positive integer, got {raw!r}")
    return jobs


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pfaffian-lab", description="Exact verification of Pfaffian and q-series identities.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("verify", help="run identity verifiers")
    v.add_argument("--id", action="append", metavar="ID", help="identity id; repeatable")
    v.add_argument("--all", action="store_true", help="run every catalog identity")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--n", type=_nonneg)
    v.add_argument("--q-cap", dest="q_cap", type=_nonneg)
    v.add_argument("--x-cap", dest="x_cap", type=_nonneg)
    v.add_argument("--y-cap", dest="y_cap", type=_nonneg)
    v.add_argument("--trials", type=_positive)
    v.add_argument("--json", action="store_true", help="emit the JSON report array")
    v.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    v.add_argument("--jobs", type=_positive, default=None, help=f"worker processes (default: ${JOBS_ENV} or 1)")

    pf = sub.add_parser("pfaffian", help="Pfaffian of a skew matrix file ('-' for stdin)")
    pf.add_argument("input", metavar="FILE")
    pf.add_argument("--copfaffian", action="store_true", help="print the matrix of cofactor Pfaffians instead")

    s = sub.add_parser("schur", help="Schur polynomial in n variables")
    s.add_argument("--partition", required=True, help="e.g. [2,1]")
    s.add_argument("--vars", type=_nonneg, required=True)

    lst = sub.add_parser("list", help="print the identity catalog")
    lst.add_argument("--json", action="store_true")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(cfg: CliConfig) -> int:
    if cfg.all and cfg.ids:
        raise UsageError("use either --id or --all, not both")
    if not cfg.all and not cfg.ids:
        raise UsageError("nothing to verify; pass --id ID or --all")
    ids = known_ids() if cfg.all else cfg.ids
    unknown = [i for i in ids if i not in known_ids()]
    if unknown:
        raise UsageError(f"unknown identity {unknown[0]!r}; known ids: {', '.join(known_ids())}")
    try:
        params = cfg.params()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = run_suite(ids, params, jobs=cfg.jobs)
    if cfg.json:
        text = json.dumps([r.to_json() for r in reports], indent=2) + "\n"
    else:
        passed = sum(r.status == PASS for r in reports)
        text = "".join(r.line() + "\n" for r in reports) + f"{passed}/{len(reports)} passed\n"
    _emit(text, cfg.out)
    return 0 if all(r.status == PASS for r in reports) else 1


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_pfaffian(cfg: CliConfig) -> int:
    from .linalg import SkewMatrix, copfaffian_matrix, pfaffian

    text = _read_input(cfg.inputs[0])
    try:
        A = SkewMatrix.from_text(text)
        if A.size % 2:
            raise UsageError(f"Pfaffian needs an even size, got {A.size}")
        if cfg.copfaffian:
            sys.stdout.write(copfaffian_matrix(A).to_text())
        else:
            sys.stdout.write(f"{pfaffian(A)}\n")
    except PfaffianLabError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_schur(cfg: CliConfig) -> int:
    from .combinat import Partition
    from .symfun import schur, var_block

    try:
        lam = Partition.parse(cfg.partition)
    except PfaffianLabError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(f"{schur(lam, var_block(cfg.vars))}\n")
    return 0


def cmd_list(cfg: CliConfig) -> int:
    rows = [lookup(i).catalog_row() for i in known_ids()]
    if cfg.json:
        sys.stdout.write(json.dumps(rows, indent=2, default=list) + "\n")
        return 0
    for r in rows:
        defaults = ", ".join(f"{k}={v}" for k, v in r["defaults"].items()) or "none"
        sys.stdout.write(f"{r['id']}\n    {r['name']}: {r['statement']}\n    form: {r['form']}\n    defaults: {defaults}\n")
    return 0


COMMANDS = {"verify": cmd_verify, "pfaffian": cmd_pfaffian, "schur": cmd_schur, "list": cmd_list}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = CliConfig.parse(argv)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
