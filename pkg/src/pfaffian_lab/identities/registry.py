"""Identity catalog, single runs and the suite runner."""

from __future__ import annotations

import random
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from ..errors import ExplosionGuard, UnknownIdentity
from .report import FAIL, PASS, SKIPPED, Checker, IdentityParams, Mismatch, Skip, VerificationReport, _PERTURB

Verifier = Callable[[dict, random.Random, Checker], Optional[str]]


@dataclass(frozen=True)
class Entry:
    id: str
    func: Verifier
    name: str
    statement: str
    defaults: dict = field(default_factory=dict)
    form: str = "exact polynomial equality"

    def catalog_row(self) -> dict:
        return {"id": self.id, "name": self.name, "statement": self.statement, "form": self.form, "defaults": dict(self.defaults)}


CATALOG: dict[str, Entry] = {}


def register(id: str, name: str, statement: str, form: str = "exact polynomial equality", **defaults):
    def deco(fn: Verifier) -> Verifier:
        if id in CATALOG:
            raise ValueError(f"duplicate identity id {id}")
        CATALOG[id] = Entry(id, fn, name, statement, defaults, form)
        return fn

    return deco


def known_ids() -> list[str]:
    _load()
    return list(CATALOG)


def lookup(id: str) -> Entry:
    _load()
    try:
        return CATALOG[id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {id!r}; known ids: {', '.join(CATALOG)}") from None


def effective_params(entry: Entry, p: IdentityParams) -> dict:
    """Per-identity defaults overridden by any explicitly set field of ``p``; only known keys apply."""
    out = dict(entry.defaults)
    for k, v in p.overrides().items():
        if k in out:
            out[k] = v
    out["seed"] = p.seed
    return out


def rng_for(id: str, seed: int) -> random.Random:
    return random.Random(zlib.crc32(id.encode()) + seed)


def run_one(id: str, p: IdentityParams | None = None) -> VerificationReport:
    p = p or IdentityParams()
    entry = lookup(id)
    params = effective_params(entry, p)
    chk = Checker()
    start = time.perf_counter()
    witness, detail = None, ""
    try:
        detail = entry.func(params, rng_for(id, p.seed), chk) or ""
        status = PASS
    except Mismatch as exc:
        status, witness, detail = FAIL, exc.witness, exc.case
    except (Skip, ExplosionGuard) as exc:
        status, detail = SKIPPED, str(exc)
    ms = (time.perf_counter() - start) * 1000
    if status == PASS and not detail:
        detail = f"{chk.count} exact comparisons"
    return VerificationReport(id, params, status, witness, ms, detail)


def _run_star(args) -> VerificationReport:
    return run_one(*args)


def run_suite(ids: Sequence[str], p: IdentityParams | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Reports in input order; with ``jobs > 1`` verifiers run in worker processes."""
    p = p or IdentityParams()
    for id in ids:
        lookup(id)
    if jobs <= 1 or len(ids) <= 1 or _PERTURB.get():
        return [run_one(id, p) for id in ids]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_star, [(id, p) for id in ids]))


def aggregate(id: str, parts: Sequence[str], p: IdentityParams | None = None) -> VerificationReport:
    """Combine several catalog runs into one report under ``id``; fails on the first failing part."""
    p = p or IdentityParams()
    reports = [run_one(part, p) for part in parts]
    ms = sum(r.ms for r in reports)
    params = {r.id: r.params for r in reports}
    for r in reports:
        if r.status == FAIL:
            return VerificationReport(id, params, FAIL, r.witness, ms, f"{r.id}: {r.detail}")
    status = PASS if all(r.status == PASS for r in reports) else SKIPPED
    return VerificationReport(id, params, status, None, ms, ", ".join(f"{r.id} {r.status}" for r in reports))


_loaded = False


def _load() -> None:
    global _loaded
    if not _loaded:
        _loaded = True
        from . import core, lattice_paths, qcauchy, qseries, summation, sundquist  # noqa: F401  (registration side effects)
