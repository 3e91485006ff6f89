import json
import os
import subprocess

import pytest

CLI = os.environ.get("QTPIERI_CLI", "qtpieri")


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("QTPIERI_CAP", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def out(*args):
    p = run(*args)
    assert p.returncode == 0, p.stderr
    return p.stdout


def test_coeff_examples():
    assert out("coeff", "--kind", "sk", "--lambda", "2,1", "--mu", "1") == \
        "(1 - q + t - q^2 + q*t - q^2*t)/(1 - q^2*t)\n"
    assert out("coeff", "--kind", "sk", "--lambda", "2,1", "--mu", "1", "--q-zero") == "1 + t\n"
    assert out("coeff", "--kind", "vs", "--lambda", "2", "--mu", "") == "0\n"


@pytest.mark.parametrize("kind", ["vs", "hs", "sk", "hat_sk", "ks"])
def test_coeff_check_agrees(kind):
    p = run("coeff", "--kind", kind, "--lambda", "3,1", "--mu", "2", "--check")
    assert p.returncode == 0
    assert p.stdout.splitlines()[-1].endswith(": agree")


def test_coeff_latex_uses_qbin():
    text = out("coeff", "--kind", "sk", "--lambda", "2,1", "--mu", "1", "--q-zero", "--format", "latex")
    assert text == "\\qbin{2}{1}_t = 1 + t\n"


def test_expand_examples():
    assert out("expand", "--op", "P", "--lambda", "1,1") == "m[1,1]\n"
    assert out("expand", "--op", "P", "--lambda", "2") == "m[2] + ((1 + q - t - q*t)/(1 - q*t))*m[1,1]\n"
    assert out("expand", "--op", "Q", "--lambda", "") == "1\n"


def test_expand_json():
    doc = json.loads(out("expand", "--op", "g", "--r", "2", "--q-zero", "--format", "json"))
    assert doc["terms"] == [{"m": [2], "coeff": "1 - t"}, {"m": [1, 1], "coeff": "1 - 2*t + t^2"}]


def test_verify_single_check():
    p = run("verify", "--suite", "ortho", "--max-size", "0")
    assert p.returncode == 0
    assert p.stdout.splitlines()[0] == "pass ortho lambda=() mu=()"


def test_verify_json_stream():
    p = run("verify", "--suite", "qbt", "--max-size", "1", "--cap", "3", "--format", "json")
    assert p.returncode == 0
    docs = [json.loads(line) for line in p.stdout.splitlines()]
    assert len(docs) == 4
    assert all(d["status"] == "pass" and d["identity"] == "qbt" for d in docs)
    assert docs[1]["params"] == {"mu": [], "nu": [1], "cap": 3}


def test_verify_output_independent_of_jobs(tmp_path):
    files = []
    for jobs in ("1", "3"):
        f = tmp_path / f"out{jobs}.json"
        p = run("verify", "--suite", "thm7,som", "--max-size", "2", "--cap", "3", "--jobs", jobs,
                "--format", "json", "--output", str(f))
        assert p.returncode == 0 and p.stdout == ""
        files.append(f.read_bytes())
    assert files[0] == files[1]


def test_cap_from_environment():
    p = run("verify", "--suite", "qbt", "--max-size", "0", "--format", "json", env={"QTPIERI_CAP": "2"})
    assert json.loads(p.stdout)["params"]["cap"] == 2


@pytest.mark.parametrize("args", [
    ["coeff", "--kind", "nope", "--lambda", "1", "--mu", ""],
    ["coeff", "--kind", "sk", "--lambda", "1,2", "--mu", ""],
    ["expand", "--op", "P", "--lambda", "3", "--cap", "2"],
    ["verify", "--suite", "unknown"],
    ["verify", "--max-size", "-1"],
    [],
])
def test_usage_errors(args):
    assert run(*args).returncode == 2
