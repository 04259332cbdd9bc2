"""Runs the CLI, checks exit codes and validates every JSON output against its schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}

cases = [
    (["enumerate", "--g", "1", "--n", "2", "--degrees", "5,3"], 0, "enumerate"),
    (["enumerate", "--g", "0", "--n", "1", "--degrees", "3"], 0, "enumerate"),
    (["enumerate", "--g", "0", "--n", "4"], 0, "enumerate"),
    (["volume", "--g", "1", "--n", "1"], 0, "volume"),
    (["volume", "--g", "1", "--n", "2"], 0, "volume"),
    (["psi", "--g", "0", "--n", "5"], 0, "psi"),
    (["verify-kcf", "--g", "0", "--n", "4", "--trials", "30", "--seed", "7"], 0, "verify-kcf"),
    (["identities", "--g", "1", "--n", "2"], 0, "identities"),
    (["witten12"], 0, "witten12"),
    (["angle", "--d", "5", "--chord1", "0,2", "--chord2", "1,3"], 0, "angle"),
    (["angle", "--d", "7", "--chord1", "0,3", "--chord2", "1,5"], 0, "angle"),
    (["verify-kcf", "--g", "0", "--n", "4"], 2, "error"),
    (["verify-kcf", "--g", "0", "--n", "4", "--trials", "4", "--seed", "1"], 2, "error"),
    (["volume", "--g", "0", "--n", "2"], 2, "error"),
    (["angle", "--d", "5", "--chord1", "0,1", "--chord2", "2,3"], 2, "error"),
    (["witten12", "--charts", "/nonexistent"], 2, "error"),
    (["nonsense"], 2, "error"),
]

failures = 0
for args, code, schema in cases:
    first = subprocess.run([binary, *args], capture_output=True)
    second = subprocess.run([binary, *args], capture_output=True)
    problems = []
    if first.returncode != code:
        problems.append(f"exit {first.returncode}, expected {code}")
    if first.stdout != second.stdout:
        problems.append("output differs between runs")
    try:
        jsonschema.validate(json.loads(first.stdout), schemas[schema])
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        problems.append(str(e).splitlines()[0])
    print(("ok   " if not problems else "FAIL ") + " ".join(args) + ("" if not problems else ": " + "; ".join(problems)))
    failures += bool(problems)

for fmt in ("csv", "latex"):
    out = subprocess.run([binary, "--format", fmt, "psi", "--g", "1", "--n", "2"], capture_output=True, text=True)
    ok = out.returncode == 0 and ("alpha,value" in out.stdout if fmt == "csv" else "\\begin{tabular}" in out.stdout)
    print(("ok   " if ok else "FAIL ") + f"--format {fmt}")
    failures += not ok

sys.exit(1 if failures else 0)
