"""Exact verifiers for the Pfaffian, minor-summation and q-series identities."""

from __future__ import annotations

from .registry import CATALOG, aggregate, known_ids, lookup, run_one, run_suite
from .report import FAIL, PASS, SKIPPED, IdentityParams, VerificationReport, perturbation

GROUPS: dict[str, tuple[str, ...]] = {
    "kawanaka_littlewood": ("kawanaka.littlewood",),
    "theorem_ours": ("theorem.ours",),
    "two_variable_kernels": ("kernel.two-variable", "kernel.q-cauchy"),
    "pfaffian_evaluations": ("pf.evaluations",),
    "schur_sum": ("schur.sum",),
    "g_h_lemmas": ("lemma.g-pfaffian", "lemma.h-determinant"),
    "q_cauchy": ("kawanaka.q-cauchy",),
    "coeff_lemma": ("coeff.lemma", "id.strange"),
    "minor_summation": (
        "msf",
        "msf.cauchy-binet",
        "msf.cauchy-binet-general",
        "msf2",
        "msf3",
        "msf4.cor-odd",
        "msf4.cor-even",
        "msf4.thm",
        "msf4.cor-augmented",
    ),
    "sundquist": ("sundquist.variant",),
}


def _group(name: str, p: IdentityParams | None) -> VerificationReport:
    parts = GROUPS[name]
    if len(parts) == 1:
        return run_one(parts[0], p)
    return aggregate(name.replace("_", "-"), parts, p)


def verify_kawanaka_littlewood(p: IdentityParams | None = None) -> VerificationReport:
    return _group("kawanaka_littlewood", p)


def verify_theorem_ours(p: IdentityParams | None = None) -> VerificationReport:
    return _group("theorem_ours", p)


def verify_two_variable_kernels(p: IdentityParams | None = None) -> VerificationReport:
    return _group("two_variable_kernels", p)


def verify_pfaffian_evaluations(p: IdentityParams | None = None) -> VerificationReport:
    return _group("pfaffian_evaluations", p)


def verify_schur_sum(p: IdentityParams | None = None) -> VerificationReport:
    return _group("schur_sum", p)


def verify_g_h_lemmas(p: IdentityParams | None = None) -> VerificationReport:
    return _group("g_h_lemmas", p)


def verify_q_cauchy(p: IdentityParams | None = None) -> VerificationReport:
    return _group("q_cauchy", p)


def verify_coeff_lemma(p: IdentityParams | None = None) -> VerificationReport:
    return _group("coeff_lemma", p)


def verify_minor_summation(p: IdentityParams | None = None) -> VerificationReport:
    return _group("minor_summation", p)


def verify_sundquist(p: IdentityParams | None = None) -> VerificationReport:
    return _group("sundquist", p)


__all__ = [
    "CATALOG",
    "FAIL",
    "GROUPS",
    "PASS",
    "SKIPPED",
    "IdentityParams",
    "VerificationReport",
    "aggregate",
    "known_ids",
    "lookup",
    "perturbation",
    "run_one",
    "run_suite",
    "verify_coeff_lemma",
    "verify_g_h_lemmas",
    "verify_kawanaka_littlewood",
    "verify_minor_summation",
    "verify_pfaffian_evaluations",
    "verify_q_cauchy",
    "verify_schur_sum",
    "verify_sundquist",
    "verify_theorem_ours",
    "verify_two_variable_kernels",
]
