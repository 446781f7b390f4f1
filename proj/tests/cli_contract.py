"""CLI contract: exit codes, diagnostics, schema validity and determinism.

Usage: cli_contract.py <tempered binary> <repo root>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
import referencing

BIN = sys.argv[1]
ROOT = pathlib.Path(sys.argv[2])
FIXTURES = ROOT / "tests" / "fixtures"
SCHEMAS = ROOT / "schemas"

failures = []


def schema_registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    return referencing.Registry().with_resources(resources)


REGISTRY = schema_registry()


def validate(doc, schema_name):
    schema = json.loads((SCHEMAS / schema_name).read_text())
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(doc)


def run(*args, stdin=None):
    return subprocess.run([BIN, *map(str, args)], input=stdin, capture_output=True, text=True, timeout=300)


def case(name):
    def wrap(fn):
        try:
            fn()
            print(f"ok   {name}")
        except Exception as e:  # noqa: BLE001 - report every failure with its case name
            failures.append(name)
            print(f"FAIL {name}: {e}")
        return fn

    return wrap


def expect_exit(proc, code):
    assert proc.returncode == code, f"exit {proc.returncode}, wanted {code}; stderr: {proc.stderr.strip()}"


@case("check: tempered pair exits 0 and validates")
def _():
    p = run("check", FIXTURES / "sl2_borel.json")
    expect_exit(p, 0)
    doc = json.loads(p.stdout)
    validate(doc, "pair_report.schema.json")
    assert doc["tem"] == "true" and doc["consistent"]


@case("check: h = g exits 1")
def _():
    p = run("check", FIXTURES / "sl2_whole.json")
    expect_exit(p, 1)
    validate(json.loads(p.stdout), "pair_report.schema.json")


@case("check: spec from stdin")
def _():
    p = run("check", "-", stdin=(FIXTURES / "sl2_sum_diagonal.json").read_text())
    expect_exit(p, 0)


@case("check: timings appear only on request")
def _():
    plain = json.loads(run("check", FIXTURES / "sl3_principal.json").stdout)
    timed = json.loads(run("check", FIXTURES / "sl3_principal.json", "--timings").stdout)
    assert "elapsed_ms" not in plain["verdicts"][0]
    assert "elapsed_ms" in timed["verdicts"][0]
    validate(timed, "pair_report.schema.json")


@case("check: a wrong toral hint is reported as inconsistent, exit 3")
def _():
    spec = json.dumps({"algebra": {"type": "sl", "n": 2}, "subalgebra": {"preset": "whole"}, "toral_hint": []})
    p = run("check", "-", stdin=spec)
    expect_exit(p, 3)
    doc = json.loads(p.stdout)
    assert not doc["consistent"] and "Rho=true" in doc["discrepancy"]


@case("input errors exit 64 with a diagnostic")
def _():
    p = run("check", FIXTURES / "truncated.json")
    expect_exit(p, 64)
    assert "malformed JSON" in p.stderr
    p = run("check", FIXTURES / "sl2_not_closed.json")
    expect_exit(p, 64)
    assert "[e, f]" in p.stderr
    expect_exit(run("check", FIXTURES / "missing.json"), 64)
    expect_exit(run("check", FIXTURES / "sl2_borel.json", "--format", "yaml"), 64)
    expect_exit(run("frobnicate"), 64)


@case("pair spec fixtures validate against the pair spec schema")
def _():
    for name in ["sl2_borel", "sl2_whole", "sl2_split_torus", "sl2_sum_diagonal", "sl3_principal",
                 "sl2_nilpotent_line", "sl2_not_closed", "corrupted_jacobi"]:
        validate(json.loads((FIXTURES / f"{name}.json").read_text()), "pair_spec.schema.json")


@case("limit: span(e+f) contracts to span(f)")
def _():
    p = run("limit", FIXTURES / "sl2_split_torus.json")
    expect_exit(p, 0)
    doc = json.loads(p.stdout)
    validate(doc, "limit.schema.json")
    assert doc["limit"]["limit_basis"] == [["0", "0", "1"]], doc["limit"]["limit_basis"]
    assert doc["limit"]["solvable"]


@case("limit: diagonal of sl2+sl2 has a 3-dim solvable limit")
def _():
    doc = json.loads(run("limit", FIXTURES / "sl2_sum_diagonal.json").stdout)
    assert len(doc["limit"]["limit_basis"]) == 3 and doc["limit"]["solvable"]


@case("limit: h = g exits 2")
def _():
    expect_exit(run("limit", FIXTURES / "sl2_whole.json"), 2)


@case("rho: principal sl2 ray table has values 2 and 6")
def _():
    p = run("rho", FIXTURES / "sl3_principal.json")
    expect_exit(p, 0)
    doc = json.loads(p.stdout)
    validate(doc, "rho.schema.json")
    assert {(r["rho_h"], r["rho_quotient"]) for r in doc["rho"]["rays"]} == {("2", "6")}


@case("rho: nilpotent line is vacuously true")
def _():
    doc = json.loads(run("rho", FIXTURES / "sl2_nilpotent_line.json").stdout)
    assert doc["verdict"] == "true" and doc["rho"]["vacuous"]


@case("rho: text output carries the verdict")
def _():
    p = run("rho", FIXTURES / "sl2_borel.json", "--format", "text")
    expect_exit(p, 0)
    assert "holds" in p.stdout


@case("catalog: validates, filters, and is byte-identical across runs and jobs")
def _():
    a = run("catalog", "--seed", "7")
    b = run("catalog", "--seed", "7")
    c = run("catalog", "--seed", "7", "--jobs", "4")
    expect_exit(a, 0)
    assert a.stdout == b.stdout, "two runs differ"
    assert a.stdout == c.stdout, "jobs=4 differs"
    doc = json.loads(a.stdout)
    validate(doc, "catalog.schema.json")
    assert doc["summary"]["pairs"] >= 20 and doc["summary"]["inconsistent"] == 0
    f = json.loads(run("catalog", "--filter", "borel").stdout)
    assert f["pairs"] and all("borel" in p["label"] for p in f["pairs"])
    text = run("catalog", "--format", "text").stdout
    assert "sl3/borel" in text


@case("selftest: single suite passes")
def _():
    p = run("selftest", "--suite", "rho")
    expect_exit(p, 0)
    assert "[rho]" in p.stdout and "[criteria]" not in p.stdout


@case("selftest: corrupted fixture exits 1 naming Jacobi")
def _():
    p = run("selftest", "--suite", "algebra-core", "--fixture", FIXTURES / "corrupted_jacobi.json")
    expect_exit(p, 1)
    assert "Jacobi" in p.stdout + p.stderr


if failures:
    print(f"{len(failures)} contract case(s) failed")
    sys.exit(1)
print("all contract cases passed")
