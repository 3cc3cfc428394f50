"""End-to-end checks of the macp command-line driver.

Usage: cli_checks.py <path-to-macp> <case>
"""

import itertools
import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        raise AssertionError(
            f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stdout}\n{proc.stderr}")
    return proc.stdout


def gp_oracle_count(n):
    """Nonzero alternating sign maps on pairs of [n] passing every 3-term
    Grassmann-Pluecker relation, counted up to global sign."""
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for values in itertools.product((-1, 0, 1), repeat=len(pairs)):
        if not any(values):
            continue
        chi = dict(zip(pairs, values))
        ok = True
        for i, j, k, l in itertools.combinations(range(n), 4):
            terms = {chi[i, j] * chi[k, l], -chi[i, k] * chi[j, l], chi[i, l] * chi[j, k]}
            if (1 in terms) != (-1 in terms):
                ok = False
                break
        count += ok
    return count // 2


def case_om():
    assert run("om", "--matrix", "[[1,0,1],[0,1,1]]").strip() == "n=3;loops=;classes=[+1][+3][+2]"


def case_flag():
    out = run("flag", "--y", "[1,0,1]", "--x", "[[1,0,1],[0,1,1]]").strip()
    assert out == "flag;z=+0+;M=n=3;loops=;classes=[+1][+3][+2]", out


def case_rank_deficient():
    run("om", "--matrix", "[[1,2,3],[2,4,6]]", expect=4)


def case_parse_error():
    run("om", "--matrix", "[[1,0.5,1],[0,1,1]]", expect=3)
    run("om", "--matrix", "[[1,0,1],[0,1", expect=3)


def case_not_contained():
    run("flag", "--y", "[1,0,0]", "--x", "[[1,0,1],[0,1,1]]", expect=4)


def case_enumerate_n2():
    assert json.loads(run("enumerate", "--n", "2"))["header"]["count"] == 1


def case_enumerate_n3():
    assert json.loads(run("enumerate", "--n", "3"))["header"]["count"] == gp_oracle_count(3)


def case_enumerate_flags_n3():
    # Oracle: one flag per nonzero covector pair of each element of MacP(2,3).
    # A rank-2 oriented matroid with p classes has 4p nonzero covectors.
    doc = json.loads(run("enumerate", "--n", "3"))
    expected = 0
    for key in doc["elements"]:
        p = key.split("classes=")[1].count("[")
        expected += 4 * p // 2
    assert json.loads(run("enumerate", "--n", "3", "--flags"))["header"]["count"] == expected


def case_verify_covers_n4():
    assert json.loads(run("verify", "covers", "--n", "4"))["passed"]


def case_verify_thin_n5():
    assert json.loads(run("verify", "thin", "--n", "5"))["passed"]


def case_verify_rp_n4():
    report = json.loads(run("verify", "rp", "--n", "4"))
    assert report["details"]["betti"] == [1, 1, 1, 1], report


def case_sample():
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "om.txt"
        path.write_text("n=4;loops=;classes=[+1 +3][+2][+4]\n")
        first = json.loads(run("sample", "--om", str(path), "--count", "5", "--seed", "7"))
        again = json.loads(run("sample", "--om", str(path), "--count", "5", "--seed", "7"))
    assert len(first["samples"]) == 5
    assert all(s["verified"] for s in first["samples"])
    assert first == again
    flag = json.loads(run("sample", "--flag", "flag;z=+0+;M=n=3;loops=;classes=[+1][+3][+2]",
                          "--count", "3"))
    assert len(flag["samples"]) == 3 and all(s["verified"] for s in flag["samples"])


def case_embed():
    base = "M=n=3;loops=;classes=[+1][+3][+2]"
    assert run("embed", "--flag", "flag;z=+0+;" + base).strip() == "n=4;loops=;classes=[+1][+3][+2 +4]"
    out = run("embed", "--flag", "flag;z=+++;" + base).strip()
    assert out.count("[") == 4, out


def case_homology():
    report = json.loads(run("homology", "--om", "n=3;loops=;classes=[+1][+3][+2]"))
    assert report["betti"] == [1, 1] and report["sphere_check"], report
    report = json.loads(run("homology", "--n", "3", "--kind", "macp1"))
    assert report["betti"] == [1, 1, 1], report
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "k.json"
        path.write_text(json.dumps([[0, 1], [1, 2], [0, 2]]))
        report = json.loads(run("homology", "--complex", str(path)))
    assert report["betti"] == [1, 1] and report["euler"] == 0, report


def case_dot():
    out = run("enumerate", "--n", "3", "--format", "dot")
    assert out.startswith("digraph") and out.count("->") > 0


CASES = {name[5:]: fn for name, fn in globals().items() if name.startswith("case_")}

if __name__ == "__main__":
    CASES[sys.argv[2]]()
    print(f"cli {sys.argv[2]}: ok")
