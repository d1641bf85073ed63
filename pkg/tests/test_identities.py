from __future__ import annotations

import pytest

from pfaffian_lab.errors import UnknownIdentity
from pfaffian_lab.identities import (
    FAIL,
    GROUPS,
    PASS,
    SKIPPED,
    IdentityParams,
    VerificationReport,
    known_ids,
    lookup,
    perturbation,
    run_one,
    run_suite,
    verify_coeff_lemma,
    verify_g_h_lemmas,
    verify_kawanaka_littlewood,
    verify_minor_summation,
    verify_pfaffian_evaluations,
    verify_q_cauchy,
    verify_schur_sum,
    verify_sundquist,
    verify_theorem_ours,
    verify_two_variable_kernels,
)

ALL = known_ids()


def test_run_suite_examples():
    assert run_suite([]) == []
    (r,) = run_suite(["pf.square"])
    assert r.id == "pf.square" and r.status == PASS and r.witness is None
    with pytest.raises(UnknownIdentity) as exc:
        run_suite(["nosuch"])
    assert "pf.square" in str(exc.value)


def test_suite_preserves_input_order():
    ids = ["qbinomial", "pf.square", "id.strange"]
    assert [r.id for r in run_suite(ids, jobs=2)] == ids


@pytest.mark.parametrize("id_", ALL)
def test_default_run_passes(id_):
    r = run_one(id_)
    assert r.status == PASS, r.line()


@pytest.mark.parametrize("id_", ALL)
def test_perturbed_run_fails_with_witness(id_):
    with perturbation():
        r = run_one(id_)
    assert r.status == FAIL
    assert set(r.witness) == {"monomial", "lhs", "rhs"}
    assert r.witness["lhs"] != r.witness["rhs"]


def test_verifiers_are_deterministic():
    ids = ["pf.square", "msf", "lgv", "plucker"]
    p = IdentityParams(seed=42, trials=5)
    first = [r.to_json(timing=False) for r in run_suite(ids, p)]
    second = [r.to_json(timing=False) for r in run_suite(ids, p, jobs=2)]
    assert first == second


def test_seed_reaches_the_report():
    assert run_one("pf.square", IdentityParams(seed=9, trials=3)).params == {"seed": 9, "trials": 3}


def test_params_validation():
    with pytest.raises(ValueError):
        IdentityParams(q_cap=-1)
    with pytest.raises(ValueError):
        IdentityParams(trials=0)


def test_report_invariant():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, FAIL)
    with pytest.raises(ValueError):
        VerificationReport("x", {}, PASS, witness={"monomial": "1", "lhs": "0", "rhs": "1"})
    r = VerificationReport("x", {"n": 2}, PASS, ms=1.5)
    assert r.to_json() == {"id": "x", "params": {"n": 2}, "status": "pass", "witness": None, "ms": 1.5}
    assert "ms" not in r.to_json(timing=False)


def test_out_of_domain_is_skipped():
    r = run_one("sundquist.variant", IdentityParams(n=3))
    assert r.status == SKIPPED and r.witness is None


def test_catalog_rows():
    for id_ in ALL:
        row = lookup(id_).catalog_row()
        assert row["id"] == id_ and row["name"] and row["statement"] and row["form"]
    assert {i for ids in GROUPS.values() for i in ids} <= set(ALL)


@pytest.mark.parametrize(
    "fn",
    [
        verify_kawanaka_littlewood,
        verify_theorem_ours,
        verify_two_variable_kernels,
        verify_pfaffian_evaluations,
        verify_schur_sum,
        verify_g_h_lemmas,
        verify_q_cauchy,
        verify_coeff_lemma,
        verify_minor_summation,
        verify_sundquist,
    ],
)
def test_group_entry_points(fn):
    assert fn().status == PASS


@pytest.mark.parametrize(
    "id_, params",
    [
        ("kawanaka.littlewood", IdentityParams(n=1, x_cap=3, q_cap=6)),
        ("theorem.ours", IdentityParams(n=1, x_cap=3, q_cap=6)),
        ("kawanaka.q-cauchy", IdentityParams(n=1, x_cap=2, y_cap=2, q_cap=6)),
        ("kawanaka.q-cauchy", IdentityParams(n=2, x_cap=3, y_cap=3, q_cap=6)),
        ("schur.sum", IdentityParams(n=2)),
        ("pf.evaluations", IdentityParams(n=4)),
        ("lemma.g-pfaffian", IdentityParams(n=2)),
        ("kernel.two-variable", IdentityParams(x_cap=4, q_cap=8)),
        ("sundquist.variant", IdentityParams(n=1)),
    ],
)
def test_listed_parameter_points(id_, params):
    r = run_one(id_, params)
    assert r.status == PASS, r.line()
