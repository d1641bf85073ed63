from __future__ import annotations

import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from pfaffian_lab.cli import CliConfig, UsageError, main
from pfaffian_lab.identities import known_ids, perturbation
from pfaffian_lab.linalg import T_matrix

GOLDEN = Path(__file__).parent / "golden"
SKEW4 = "skew 4\na12 a13 a14 a23 a24 a34\n"


def run(argv, capsys, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def without_timing(reports: list[dict]) -> list[dict]:
    return [{k: v for k, v in r.items() if k != "ms"} for r in reports]


def test_verify_single(capsys):
    code, out, _ = run(["verify", "--id", "pf.square", "--seed", "1"], capsys)
    assert code == 0
    assert out.startswith("PASS") and out.rstrip().endswith("1/1 passed")


def test_verify_all_to_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(["verify", "--all", "--json", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    reports = json.loads(target.read_text())
    assert [r["id"] for r in reports] == known_ids()
    assert all(r["status"] == "pass" and r["witness"] is None and "ms" in r for r in reports)


def test_verify_unknown_id(capsys):
    code, _, err = run(["verify", "--id", "nosuch"], capsys)
    assert code == 2
    assert "nosuch" in err and "pf.square" in err and "sundquist.variant" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["verify"],
        ["verify", "--id", "pf.square", "--all"],
        ["verify", "--id", "pf.square", "--q-cap", "-1"],
        ["verify", "--id", "pf.square", "--trials", "0"],
        ["verify", "--id", "pf.square", "--jobs", "0"],
        ["verify", "--id", "pf.square", "-i"],
        ["schur", "--partition", "[1,2]", "--vars", "2"],
        ["schur", "--partition", "1,2", "--vars", "2"],
        ["pfaffian", "/nonexistent/file"],
    ],
)
def test_bad_usage_exits_two(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and err.startswith("error:")


def test_verify_failure_exits_one(capsys):
    with perturbation():
        code, out, _ = run(["verify", "--id", "pf.square"], capsys)
    assert code == 1
    assert out.startswith("FAIL") and "first mismatch at" in out


def test_pfaffian_examples(tmp_path, capsys, monkeypatch):
    f = tmp_path / "a.txt"
    f.write_text(SKEW4)
    assert run(["pfaffian", str(f)], capsys) == (0, "a12*a34 - a13*a24 + a14*a23\n", "")
    assert run(["pfaffian", "-"], capsys, "skew 4\n1 2 3 4 5 6\n", monkeypatch)[:2] == (0, "8\n")
    assert run(["pfaffian", "-"], capsys, "skew 2\n7\n", monkeypatch)[:2] == (0, "7\n")


def test_pfaffian_copfaffian(capsys, monkeypatch):
    code, out, _ = run(["pfaffian", "-", "--copfaffian"], capsys, T_matrix(4).to_text(), monkeypatch)
    assert code == 0 and out == "skew 4\n1 0 0 1 0 1\n"


@pytest.mark.parametrize("text", ["skew 3\n1 2 3\n", "skew 4\n1 2 3\n", "matrix\n", "skew 2\nx^\n"])
def test_pfaffian_bad_input(text, capsys, monkeypatch):
    assert run(["pfaffian", "-"], capsys, text, monkeypatch)[0] == 2


@pytest.mark.parametrize(
    "partition, n, want",
    [("[1]", "2", "x1 + x2"), ("[2,1]", "2", "x1^2*x2 + x1*x2^2"), ("[1,1,1]", "2", "0"), ("[]", "3", "1")],
)
def test_schur_examples(partition, n, want, capsys):
    assert run(["schur", "--partition", partition, "--vars", n], capsys) == (0, want + "\n", "")


def test_list(capsys):
    code, out, _ = run(["list"], capsys)
    assert code == 0 and "kawanaka.littlewood" in out and "sundquist.variant" in out
    code, out, _ = run(["list", "--json"], capsys)
    rows = json.loads(out)
    assert code == 0 and [r["id"] for r in rows] == known_ids()
    assert all({"id", "name", "statement", "form", "defaults"} <= set(r) for r in rows)


def test_list_matches_golden(capsys):
    _, out, _ = run(["list", "--json"], capsys)
    assert json.loads(out) == json.loads((GOLDEN / "list.json").read_text())


def test_verify_all_matches_golden(capsys):
    code, out, _ = run(["verify", "--all", "--seed", "42", "--json", "--jobs", "4"], capsys)
    assert code == 0
    assert without_timing(json.loads(out)) == json.loads((GOLDEN / "verify_all_seed42.json").read_text())


def test_jobs_from_environment(monkeypatch):
    monkeypatch.setenv("PFAFFIAN_LAB_JOBS", "3")
    assert CliConfig.parse(["verify", "--all"]).jobs == 3
    assert CliConfig.parse(["verify", "--all", "--jobs", "2"]).jobs == 2
    monkeypatch.setenv("PFAFFIAN_LAB_JOBS", "zero")
    with pytest.raises(UsageError):
        CliConfig.parse(["verify", "--all"])
    monkeypatch.delenv("PFAFFIAN_LAB_JOBS")
    assert CliConfig.parse(["verify", "--all"]).jobs == 1


caps = st.none() | st.integers(0, 12)
ids = st.lists(st.sampled_from(known_ids()), max_size=3)


@st.composite
def configs(draw):
    command = draw(st.sampled_from(["verify", "pfaffian", "schur", "list"]))
    if command == "verify":
        return CliConfig(
            command,
            ids=draw(ids),
            all=draw(st.booleans()),
            n=draw(caps),
            q_cap=draw(caps),
            x_cap=draw(caps),
            y_cap=draw(caps),
            seed=draw(st.integers(-10, 10**6)),
            trials=draw(st.none() | st.integers(1, 50)),
            json=draw(st.booleans()),
            out=draw(st.none() | st.sampled_from(["r.json", "out/report.txt"])),
            jobs=draw(st.integers(1, 8)),
        )
    if command == "pfaffian":
        return CliConfig(command, inputs=[draw(st.sampled_from(["-", "a.txt"]))], copfaffian=draw(st.booleans()))
    if command == "schur":
        parts = draw(st.lists(st.integers(1, 5), max_size=4))
        text = "[" + ",".join(map(str, sorted(parts, reverse=True))) + "]"
        return CliConfig(command, partition=text, vars=draw(st.integers(0, 5)))
    return CliConfig(command, json=draw(st.booleans()))


@given(configs())
def test_config_round_trip(cfg):
    assert CliConfig.parse(cfg.to_argv()) == cfg
    assert CliConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))) == cfg


def test_deterministic_json_across_processes(tmp_path):
    env = dict(os.environ, PYTHONHASHSEED="random")
    outs = []
    for k in range(2):
        target = tmp_path / f"r{k}.json"
        subprocess.run(
            [sys.executable, "-m", "pfaffian_lab.cli", "verify", "--all", "--seed", "42", "--json", "--out", str(target)],
            check=True,
            env=env,
        )
        outs.append(without_timing(json.loads(target.read_text())))
    assert outs[0] == outs[1]
