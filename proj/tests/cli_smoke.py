"""Smoke tests for the peakalg command-line tool: exit codes, output
formats, error records and cache behaviour."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


r = run("--format", "json", "peaks", "--window", "-2,3,4,-5,1", "--flavor", "typeB")
check(r.returncode == 0 and json.loads(r.stdout)["rows"][0]["set"] == "{0,3}", "peaks typeB example")

r = run("--format", "json", "peaks", "--window", "2,1,4,3,5", "--flavor", "left")
check(r.returncode == 0 and json.loads(r.stdout)["rows"][0]["set"] == "{1,3}", "peaks left example")

r = run("--format", "json", "structure", "--flavor", "interior", "--n", "3")
rows = json.loads(r.stdout)["rows"] if r.returncode == 0 else []
check(any(x["A"] == "{2}" and x["B"] == "{2}" and x["C"] == "{}" and x["count"] == 1 for x in rows),
      "structure interior n=3 has c_{2},{2}^{} = 1")

r = run("--format", "csv", "structure", "--flavor", "left", "--n", "3")
check(r.returncode == 0 and r.stdout.splitlines()[0].count(",") >= 3, "csv output")

r = run("--format", "json", "closure", "--flavor", "typeB", "--n", "3")
out = json.loads(r.stdout) if r.stdout else {}
check(r.returncode == 1 and out.get("closed") is False and "witness" in out, "typeB n=3 closure reports a witness")

r = run("--format", "json", "closure", "--flavor", "interior", "--n", "4")
check(r.returncode == 0 and json.loads(r.stdout)["closed"] is True, "interior n=4 closed")

r = run("--format", "json", "idempotents", "--n", "2")
check(r.returncode == 0, "idempotents n=2")

for args, kind in [(("peaks", "--window", "1,1,2"), "invalid_input"),
                   (("qsym", "--n", "9"), "usage"),
                   (("peaks",), "usage"),
                   (("bogus",), "usage")]:
    r = run(*args)
    try:
        err = json.loads(r.stderr.strip().splitlines()[-1])["error"]
    except (ValueError, IndexError, KeyError):
        err = {}
    check(r.returncode == 2 and err.get("type") == kind, f"error record for {' '.join(args)}")

with tempfile.TemporaryDirectory() as cache:
    env = dict(os.environ, PEAKALG_CACHE_DIR=cache)
    r = run("--format", "json", "verify", "--n-max", "2", env=env)
    summary = json.loads(r.stdout)["summary"] if r.stdout else {}
    check(r.returncode == 0 and summary.get("failed") == 0, "verify --n-max 2 passes")

    cold = run("--format", "json", "--jobs", "2", "verify", "--n-max", "4", env=env)
    warm = run("--format", "json", "--jobs", "2", "verify", "--n-max", "4", env=env)
    check(cold.stdout == warm.stdout and cold.returncode == warm.returncode, "verify is deterministic across cache state")
    check(any(f.startswith("structure-") for f in os.listdir(cache)), "structure tables cached")
    checks = {c["name"]: c["passed"] for c in json.loads(cold.stdout)["checks"]}
    check(all(v for k, v in checks.items() if k not in ("duality", "peakAlgebras", "eulerianAlgebras")),
          "verify --n-max 4: all checks outside the type B algebra ones pass")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
