"""Runs each toeplab subcommand and validates its JSON report against the shipped schema.

Usage: validate_reports.py <toeplab executable> <schema directory>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

INVOCATIONS = [
    ["commutator", "--eps", "0.5"],
    ["commutator", "--coeffs", "1,0.2-0.1i,0.05i"],
    ["commutator", "--eps", "1.5"],
    ["bergman", "--coeffs", "1"],
    ["bergman", "--eps", "0.3", "--with-spectral", "--h", "0.05"],
    ["spectral", "--domain", "disc:1", "--h", "0.05"],
    ["spectral", "--domain", "rectangle:1,1", "--h", "0.05"],
    ["spectral", "--eps", "0.5", "--h", "0.05"],
    ["polydisc", "--coeffs", "1+0i,1+0i", "--mc-samples", "100000", "--seed", "7"],
    ["verify"],
]


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schema = json.loads((schema_dir / "report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        sweep_json = pathlib.Path(tmp) / "sweep.json"
        runs = [args for args in INVOCATIONS]
        runs.append(["sweep", "--steps", "10", "--csv", str(pathlib.Path(tmp) / "s.csv"), "--json", str(sweep_json)])
        for args in runs:
            proc = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
            if proc.returncode != 0:
                print(f"FAIL {' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
                failures += 1
                continue
            text = sweep_json.read_text() if args[0] == "sweep" else proc.stdout
            errors = sorted(validator.iter_errors(json.loads(text)), key=lambda e: list(e.path))
            for err in errors:
                print(f"FAIL {' '.join(args)}: {'/'.join(map(str, err.path))}: {err.message}")
            failures += bool(errors)
            if not errors:
                print(f"ok   {' '.join(args)}")

    # The schema must reject a tampered report.
    proc = subprocess.run([exe, "commutator", "--eps", "0.2"], capture_output=True, text=True, check=True)
    report = json.loads(proc.stdout)
    for mutate in (lambda r: r.pop("version"), lambda r: r["result"].update(norm="big"),
                   lambda r: r["result"]["matrix"][0].__setitem__(0, [1.0])):
        broken = json.loads(json.dumps(report))
        mutate(broken)
        if validator.is_valid(broken):
            print("FAIL schema accepted a tampered report")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
