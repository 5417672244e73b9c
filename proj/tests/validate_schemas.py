#!/usr/bin/env python3
"""Runs every CLI command with --json and validates the output against docs/schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = {
    "analyze": [
        ["analyze", "--field", "Q(t)", "--val", "Q(t):place=t", "--a", "-1", "--b", "-1"],
        ["analyze", "--field", "Q(t)", "--val", "Q(t):place=t", "--a", "t", "--b", "1"],
        ["analyze", "--field", "Q", "--val", "Q:p=5", "--a", "2", "--b", "3"],
        ["analyze", "--field", "Q", "--val", "Q:p=3", "--a", "3", "--b", "-1"],
        ["analyze", "--field", "Q", "--val", "Q:p=7", "--a", "7", "--b", "14"],
        ["analyze", "--field", "Q(t)", "--val", "Q(t):place=inf", "--a", "t", "--b", "t+1"],
        ["analyze", "--field", "Fq(t):q=3", "--val", "Fq(t):q=3,place=t^2+1", "--a", "t", "--b", "t^2+1"],
        ["analyze", "--field", "Fq(t):q=9", "--val", "Fq(t):q=9,place=t", "--a", "u", "--b", "t"],
    ],
    "eval": [
        ["eval", "--val", "Q(t):place=t", "--a", "-1", "--b", "-1", "--f", "x", "--g", "1"],
        ["eval", "--val", "Q(t):place=t", "--a", "t", "--b", "1", "--f", "0", "--g", "1/x"],
        ["eval", "--val", "Q:p=5", "--a", "2", "--b", "3", "--f", "x^2+5", "--g", "x"],
    ],
    "gauss": [
        ["gauss", "--val", "Q:p=5", "--pivot", "5*(x-1)", "--eval", "x^2-1"],
        ["gauss", "--val", "Fq(t):q=5,place=inf", "--pivot", "x", "--eval", "x^3+t"],
    ],
    "hilbert": [
        ["hilbert", "--a", "-1", "--b", "-1", "--place", "inf"],
        ["hilbert", "--a", "2", "--b", "3", "--place", "2"],
    ],
    "quat-split": [
        ["quat", "split", "--field", "Q", "--a", "-1", "--b", "-1"],
        ["quat", "split", "--field", "Q", "--a", "1", "--b", "7"],
        ["quat", "split", "--field", "GF(9)", "--a", "u", "--b", "u+1"],
        ["quat", "split", "--field", "Fq(t):q=3", "--a", "t", "--b", "2"],
    ],
    "quat-decide": [
        ["quat", "decide", "--field", "Q(t)", "--val", "Q(t):place=t", "--a", "-1", "--b", "-1"],
        ["quat", "decide", "--field", "Q", "--val", "Q:p=3", "--a", "-1", "--b", "-1"],
        ["quat", "decide", "--field", "Q", "--val", "Q:p=3", "--a", "3", "--b", "-1"],
        ["quat", "decide", "--field", "Q", "--val", "Q:p=5", "--a", "1", "--b", "5"],
    ],
    "quat-iso": [
        ["quat", "iso", "--a1", "-1", "--b1", "-1", "--a2", "-1", "--b2", "-3"],
    ],
    "family": [
        ["family", "--val", "Q(t):place=t", "--a", "t", "--b", "1", "--count", "3"],
        ["family", "--val", "Q:p=5", "--a", "2", "--b", "3"],
    ],
    "polyrep": [
        ["polyrep", "--y", "x^2+1/x"],
        ["polyrep", "--field", "GF(7)", "--y", "(x^3+1)/(x-2)"],
        ["polyrep", "--field", "Q(t)", "--y", "t*x^2/(x+t)"],
    ],
    "verify": [
        ["verify", "--suite", "hilbert-product", "--samples", "10"],
        ["verify", "--suite", "degree-formula", "--samples", "5"],
    ],
}


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, runs in CASES.items():
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        validator = jsonschema.Draft202012Validator(schema)
        for args in runs:
            argv = [binary, *args] + ([] if name == "verify" else ["--json"])
            proc = subprocess.run(argv, capture_output=True, text=True)
            label = " ".join(args)
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            errors = list(validator.iter_errors(json.loads(proc.stdout)))
            for e in errors:
                print(f"FAIL {label}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
            failures += bool(errors)
            if not errors:
                print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
