"""End-to-end CLI runs: exit codes, report shape, determinism."""

import json

import pytest

from skewalg.cli import main

FF4 = {"backend": "ff", "p": 2, "d": 1, "n": 2}


def write(tmp_path, name, cfg):
    p = tmp_path / name
    p.write_text(json.dumps(cfg))
    return str(p)


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else None)


def test_info_semifield(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", {"context": FF4, "m": 2, "a": 2})
    code, rep = run(["info", "--config", cfg], capsys)
    assert code == 0
    assert rep["associative"] is False
    assert rep["semifield"] is True
    assert rep["two_sided"] is False
    assert rep["nucleus_dims"] == [2, 2, 2, 1]
    assert rep["settings"]["seed"] == 0xC0FFEE


def test_info_split_and_m1(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", {"context": FF4, "m": 2, "a": 1})
    code, rep = run(["info", "--config", cfg], capsys)
    assert code == 0 and rep["associative"] is True
    cfg = write(tmp_path, "c1.json", {"context": FF4, "m": 1, "a": 2})
    code, rep = run(["info", "--config", cfg], capsys)
    assert code == 0 and rep["associative"] is True


def test_classify_counts(tmp_path, capsys):
    cfg = write(tmp_path, "c.json",
                {"context": FF4, "m": 2, "a": 2, "tau": {"exp": 1}})
    code, rep = run(["classify", "--config", cfg], capsys)
    assert code == 0
    assert rep["count"] == 3
    assert all(m["certificate"]["verdict"] == "Valid" for m in rep["maps"])


def test_classify_empty_still_exits_zero(tmp_path, capsys):
    cfg = write(tmp_path, "c.json",
                {"context": FF4, "m": 2, "a": 2, "tau": {"exp": 0}})
    code, rep = run(["classify", "--config", cfg], capsys)
    assert code == 0
    assert rep["count"] == 0
    assert rep["note"] == "norm equation unsolvable"


def test_verify_exit_codes(tmp_path, capsys):
    good = write(tmp_path, "g.json",
                 {"context": FF4, "m": 2, "a": 2,
                  "map": {"tau": {"exp": 1}, "alpha": 1, "k": 1}})
    code, rep = run(["verify", "--config", good], capsys)
    assert code == 0
    assert rep["agree"] is True
    bad = write(tmp_path, "b.json",
                {"context": FF4, "m": 2, "a": 2,
                 "map": {"tau": {"exp": 0}, "alpha": 1, "k": 1}})
    code, rep = run(["verify", "--config", bad], capsys)
    assert code == 1
    assert rep["direct"]["verdict"] == "Invalid"
    assert rep["agree"] is True
    assert "witness" in rep["direct"]


def test_laurent_verify_and_witness(tmp_path, capsys):
    cfg = write(tmp_path, "l.json",
                {"context": FF4, "tau": {"exp": 1}, "alpha1": 1})
    code, rep = run(["laurent", "--config", cfg, "--count", "10"], capsys)
    assert code == 0
    assert rep["certificate"]["verdict"] == "Valid"
    wcfg = write(tmp_path, "w.json",
                 {"context": {"backend": "rf", "q": 4, "zeta": 2, "n": 3},
                  "tau": {"exp": 1}, "op": "witness", "alpha1": 1})
    code, rep = run(["laurent", "--config", wcfg, "--bound", "6"], capsys)
    assert code == 0
    assert rep["degrees"] == [5, 13, 17, 25, 29, 37]


def test_laurent_wrong_conjugation_is_invalid(tmp_path, capsys):
    cfg = write(tmp_path, "l.json",
                {"context": {"backend": "rf", "q": 4, "zeta": 2, "n": 3},
                 "tau": {"exp": 0}, "alpha1": 1})
    code, rep = run(["laurent", "--config", cfg], capsys)
    assert code == 1
    assert "error" in rep


def test_gen_subcommand(tmp_path, capsys):
    cfg = write(tmp_path, "g.json",
                {"context": FF4, "D": {"builtin": "m2"}, "m": 2,
                 "d": [2, 0, 0, 2],
                 "map": {"tau_kind": "transpose_frobenius", "exp": 1,
                         "alpha": 1, "k": 1}})
    code, rep = run(["gen", "--config", cfg], capsys)
    assert code == 0
    assert rep["agree"] is True
    bad = write(tmp_path, "gb.json",
                {"context": FF4, "D": {"builtin": "m2"}, "m": 2,
                 "d": [2, 0, 0, 2],
                 "map": {"tau_kind": "transpose_frobenius", "exp": 0,
                         "alpha": 1, "k": 1}})
    code, rep = run(["gen", "--config", bad], capsys)
    assert code == 1


def test_usage_errors(tmp_path, capsys):
    assert main(["info", "--config", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert main(["info", "--config", str(broken)]) == 2
    capsys.readouterr()
    incomplete = write(tmp_path, "i.json", {"context": FF4})
    assert main(["info", "--config", incomplete]) == 2
    capsys.readouterr()
    assert main(["info", "--config", incomplete, "--seed", "zz"]) == 2
    capsys.readouterr()
    assert main(["nonsense", "--config", incomplete]) == 2
    capsys.readouterr()


def test_cap_exit_code(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", {"context": FF4, "m": 2, "a": 2})
    assert main(["info", "--config", cfg, "--cap", "2"]) == 3
    capsys.readouterr()


def test_reports_are_deterministic(tmp_path, capsys):
    cfg = write(tmp_path, "c.json",
                {"context": FF4, "m": 2, "a": 2, "tau": {"exp": 1}})
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["classify", "--config", cfg, "--out", str(out1)]) == 0
    assert main(["classify", "--config", cfg, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_seed_hex_parsing(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", {"context": FF4, "m": 2, "a": 2})
    code, rep = run(["info", "--config", cfg, "--seed", "0xAB"], capsys)
    assert code == 0 and rep["settings"]["seed"] == 0xAB
