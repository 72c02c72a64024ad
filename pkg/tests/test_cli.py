import json
from pathlib import Path

import pytest

from syncrel.cli import main

FIX = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_classify(capsys):
    report = run_json(capsys, "classify", FIX / "fs.syna")
    assert report["class"] == "FS"
    reports = run_json(capsys, "classify", FIX / "fs.syna", FIX / "fsl.syna", FIX / "all.syna",
                       "--jobs", "2")
    assert [r["class"] for r in reports] == ["FS", "FSL", "ALL"]


def test_classify_text_format(capsys):
    code, out, _ = run(capsys, "classify", FIX / "fsl.syna", "--format", "text")
    assert code == 0
    assert "FSL" in out and "gamma" in out


def test_definability_with_witness(capsys, tmp_path):
    w = tmp_path / "w.syna"
    report = run_json(capsys, "def", FIX / "fsl.syna", FIX / "fsl.syna", "--witness", w)
    assert report["answer"] == "yes" and report["witness"] == str(w)
    check = run_json(capsys, "verify-def", FIX / "fsl.syna", FIX / "fsl.syna", w)
    assert check["answer"] == "yes"


def test_definability_no_and_unknown(capsys):
    report = run_json(capsys, "def", FIX / "equal_length.syna", FIX / "fs.syna")
    assert report["answer"] == "no"
    report = run_json(capsys, "def", FIX / "alt_source.syna", FIX / "alt_target.syna")
    assert report["answer"] == "unknown"
    assert "allsync regular: no" in report["checks"]


def test_select(capsys):
    report = run_json(capsys, "select", "maxsync", FIX / "max_not_reg.syna",
                      FIX / "max_not_reg.syna")
    assert report["answer"] == "no"
    report = run_json(capsys, "select", "allsync", FIX / "fs.syna", FIX / "fs.syna")
    assert report["answer"] == "yes" and "input-alphabet" in report["witness"]


def test_unambiguity(capsys):
    assert run_json(capsys, "unamb", FIX / "fsl.syna")["answer"] == "yes"
    report = run_json(capsys, "unamb", FIX / "max_not_reg.syna")
    assert report["answer"] == "no" and len(report["witness"]) == 2


def test_prefix_recognizability(capsys):
    assert run_json(capsys, "prefix-rec", FIX / "prefix.syna")["answer"] == "yes"
    assert run_json(capsys, "prefix-rec", FIX / "equal_length_same.syna")["answer"] == "no"
    assert run(capsys, "prefix-rec", FIX / "fs.syna")[0] == 2


def test_uniformization_and_eval(capsys, tmp_path):
    out = tmp_path / "u.synt"
    report = run_json(capsys, "unif", "rec", FIX / "r2.syna", "--synthesize", out)
    assert report["answer"] == "yes" and out.exists()
    assert run_json(capsys, "eval", out, "aab")["output"] == "d"
    assert run_json(capsys, "eval", out, "aca")["output"] == "e"
    assert run_json(capsys, "eval", out, "aaa")["output"] is None
    assert run_json(capsys, "unif", "rec", FIX / "r1.syna")["answer"] == "no"
    assert run_json(capsys, "unif", "subseq", FIX / "r1.syna")["answer"] == "unsupported"
    assert run_json(capsys, "eval", FIX / "delayed.synt", "aca")["output"] == "ed"


def test_canon(capsys, tmp_path):
    out = tmp_path / "c.syna"
    report = run_json(capsys, "canon", "fsl", FIX / "alt_target.syna", "-o", out)
    assert report["output"] == str(out)
    assert run_json(capsys, "classify", out)["class"] in ("FS", "FSL")
    report = run_json(capsys, "canon", "fs", FIX / "explicit.syna")
    assert "regex" not in report["output"]


def test_oracle(capsys):
    report = run_json(capsys, "oracle", "metrics", "aabaabbbbbbbaaab")
    assert (report["lag"], report["shift"], report["shiftlag"]) == (4, 5, 2)
    assert report["agrees"]
    report = run_json(capsys, "oracle", "pairs", FIX / "fs.syna", "--max-len", "2")
    assert ["a", "c"] in report["pairs"]
    report = run_json(capsys, "oracle", "distance", FIX / "two_runs.synd", "a a")
    assert report["distance"] == 1 and report["agrees"]
    report = run_json(capsys, "oracle", "maximal", FIX / "max_not_reg.syna", "a c")
    assert report["maximal"] is True


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "oracle", "pairs", FIX / "fs.syna", "--max-len", "40")[0] == 2
    assert run(capsys, "classify", tmp_path / "missing.syna")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "def", FIX / "r1.syna", FIX / "fs.syna")[0] == 2


def test_parse_error_names_the_letter(capsys, tmp_path):
    bad = tmp_path / "bad.syna"
    bad.write_text("input-alphabet: a\noutput-alphabet: b\nregex: a z\n", encoding="utf-8")
    code, _, err = run(capsys, "classify", bad)
    assert code == 2
    assert "z" in err and "line 3" in err


@pytest.mark.parametrize("flag", ["--help", "-h"])
def test_help_exits_cleanly(capsys, flag):
    assert run(capsys, flag)[0] == 0
