"""Acceptance run: one line per criterion, exact comparisons, pinned time budgets.

Run standalone with ``python tests/test_acceptance.py`` or through pytest; either way
each criterion prints a single PASS/FAIL line.
"""

from __future__ import annotations

import contextlib
import io
import json
import time
from dataclasses import dataclass
from typing import Callable

import pytest

from pfaffian_lab.cli import main
from pfaffian_lab.identities import PASS, FAIL, IdentityParams, known_ids, perturbation, run_one, run_suite
from pfaffian_lab.linalg import matching_crossing_sign, matching_permutation_sign, matchings

# Exactness is zero-tolerance: every comparison is polynomial equality. The only
# tolerances are wall-clock budgets, pinned here in seconds.
BUDGET_S = {1: 30, 2: 60, 3: 30, 4: 300, 5: 300, 6: 600, 7: 600, 8: 300, 9: 300, 10: 300}
MIN_TRIALS = {"pf": 100, "plucker": 50, "msf": 20, "lgv": 50}
MIN_MUTATED_VERIFIERS = 5

RESULTS: list[str] = []


@dataclass
class Outcome:
    ok: bool
    detail: str


def _run(ids, params: dict[str, IdentityParams] | None = None, min_trials: int | None = None) -> Outcome:
    params = params or {}
    bad = []
    for i in ids:
        r = run_one(i, params.get(i))
        trials = r.params.get("trials")
        if r.status != PASS:
            bad.append(f"{i}: {r.status} {r.witness or r.detail}")
        elif min_trials is not None and trials is not None and trials < min_trials:
            bad.append(f"{i}: only {trials} trials")
    if bad:
        return Outcome(False, "; ".join(bad))
    return Outcome(True, f"verifiers passed {len(ids)}/{len(ids)}")


def pfaffian_core() -> Outcome:
    out = _run(["pf.square", "pf.expansion", "pf.delta-gamma", "pf.memo-vs-combinatorial", "pf.matching-sign"], min_trials=MIN_TRIALS["pf"])
    if not out.ok:
        return out
    counts = {}
    for n in (6, 10):
        ms = list(matchings(range(1, n + 1)))
        if any(matching_crossing_sign(m) != matching_permutation_sign(m) for m in ms):
            return Outcome(False, f"sign disagreement among matchings of [{n}]")
        counts[n] = len(ms)
    if counts != {6: 15, 10: 945}:
        return Outcome(False, f"matching counts {counts}")
    return Outcome(True, out.detail + "; crossing sign exhaustive on [6] (15) and [10] (945)")


def jacobi() -> Outcome:
    return _run(["jacobi.lewis-carroll", "jacobi.dodgson", "jacobi.pfaffian", "jacobi.hat-hat"])


def plucker() -> Outcome:
    return _run(["plucker", "plucker.basic-identity"], min_trials=MIN_TRIALS["plucker"])


def minor_summation() -> Outcome:
    ids = ["msf", "msf.cauchy-binet", "msf.cauchy-binet-general", "msf2", "msf3",
           "msf4.cor-odd", "msf4.cor-even", "msf4.thm", "msf4.cor-augmented"]
    return _run(ids, min_trials=MIN_TRIALS["msf"])


def lattice() -> Outcome:
    out = _run(["lgv"], min_trials=MIN_TRIALS["lgv"])
    if not out.ok:
        return out
    rest = _run(["lmsf", "lmsf2", "lmsf3", "lmsf4", "lattice.msf-grid"])
    if not rest.ok:
        return rest
    if run_one("lattice.msf-grid").params.get("height") != 6:
        return Outcome(False, "grid reconstruction not at height 6")
    return Outcome(True, "verifiers passed 6/6; grid reconstruction at height 6")


def q_series() -> Outcome:
    ids = ["qbinomial", "kernel.two-variable", "kernel.q-cauchy", "hook.key-id", "hook.macdonald", "kawanaka.littlewood"]
    params = {"kawanaka.littlewood": IdentityParams(n=2, x_cap=4, q_cap=8)}
    out = _run(ids, params)
    if not out.ok:
        return out
    for n in (1, 2, 3):
        r = run_one("theorem.ours", IdentityParams(n=n, x_cap=3, q_cap=6))
        if r.status != PASS:
            return Outcome(False, f"theorem.ours n={n}: {r.status} {r.witness or r.detail}")
    gh = _run(["lemma.g-pfaffian", "lemma.h-determinant"])
    if not gh.ok:
        return gh
    return Outcome(True, "q-binomial, kernels, hook identities, Littlewood n=2, ours n=1,2,3, g/h lemmas n=2,4")


def q_cauchy() -> Outcome:
    return _run(
        ["coeff.lemma", "id.strange", "kawanaka.q-cauchy"],
        {"kawanaka.q-cauchy": IdentityParams(n=2, x_cap=3, y_cap=3, q_cap=6), "id.strange": IdentityParams(n=4)},
    )


def appendix() -> Outcome:
    return _run(["sundquist.variant"], {"sundquist.variant": IdentityParams(n=2)})


def mutation() -> Outcome:
    caught, missed = 0, []
    with perturbation():
        for r in run_suite(known_ids()):
            w = r.witness or {}
            if r.status == FAIL and w.get("monomial") and w.get("lhs") != w.get("rhs"):
                caught += 1
            else:
                missed.append(r.id)
    if missed or caught < MIN_MUTATED_VERIFIERS:
        return Outcome(False, f"{caught} caught, missed {missed}")
    return Outcome(True, f"{caught}/{len(known_ids())} verifiers flag the injected sign flip with a witness")


def _verify_all_json() -> list[dict]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["verify", "--all", "--seed", "42", "--json"])
    reports = json.loads(buf.getvalue())
    for r in reports:
        r.pop("ms")
    return [code, reports]


def determinism() -> Outcome:
    first, second = _verify_all_json(), _verify_all_json()
    if first != second:
        return Outcome(False, "reports differ between runs")
    return Outcome(True, f"{len(first[1])} reports identical across two runs, exit {first[0]}")


CRITERIA: list[tuple[int, str, Callable[[], Outcome]]] = [
    (1, "Pfaffian core", pfaffian_core),
    (2, "Jacobi formulas", jacobi),
    (3, "Plucker and basic identity", plucker),
    (4, "Minor summation family", minor_summation),
    (5, "Lattice paths", lattice),
    (6, "q-series", q_series),
    (7, "q-Cauchy", q_cauchy),
    (8, "Appendix Pfaffian", appendix),
    (9, "Mutation sensitivity", mutation),
    (10, "Determinism", determinism),
]


def evaluate(number: int, title: str, fn: Callable[[], Outcome]) -> tuple[bool, str]:
    start = time.perf_counter()
    out = fn()
    secs = time.perf_counter() - start
    ok = out.ok and secs < BUDGET_S[number]
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} {title}: {out.detail} ({secs:.1f} s, budget {BUDGET_S[number]} s)"
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn):
    ok, line = evaluate(number, title, fn)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c)[0] for c in CRITERIA]
    raise SystemExit(0 if all(results) else 1)
