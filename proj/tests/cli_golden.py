#!/usr/bin/env python3
"""Golden-output and schema checks for the scroll-acm CLI.

usage: cli_golden.py BINARY SCHEMA_DIR CASES_JSON
"""
import json
import os
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def subset(expected, actual, where="$"):
    """Every key/value in `expected` must appear in `actual`; lists compare elementwise."""
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return f"{where}: expected object"
        for k, v in expected.items():
            if k not in actual:
                return f"{where}.{k}: missing"
            err = subset(v, actual[k], f"{where}.{k}")
            if err:
                return err
        return None
    if isinstance(expected, list):
        if not isinstance(actual, list) or len(actual) != len(expected):
            return f"{where}: expected list of length {len(expected)}"
        for i, (e, a) in enumerate(zip(expected, actual)):
            err = subset(e, a, f"{where}[{i}]")
            if err:
                return err
        return None
    return None if expected == actual else f"{where}: expected {expected!r}, got {actual!r}"


def run_case(binary, root, registry, case):
    env = dict(os.environ)
    env.update(case.get("env", {}))
    args = [a.replace("@DATA@", str(root / "data")) for a in case["args"]]
    proc = subprocess.run([binary] + args, capture_output=True, text=True, env=env, timeout=60)
    want_rc = case.get("exit", 0)
    if proc.returncode != want_rc:
        return f"exit {proc.returncode}, want {want_rc}; stderr: {proc.stderr.strip()}"
    if "stdout" in case and proc.stdout != case["stdout"]:
        return f"stdout mismatch:\n--- want\n{case['stdout']}--- got\n{proc.stdout}"
    if "stdout_file" in case:
        want = (root / "golden" / case["stdout_file"]).read_text()
        if proc.stdout != want:
            return f"stdout mismatch against {case['stdout_file']}:\n--- got\n{proc.stdout}"
    if "stderr_contains" in case and case["stderr_contains"] not in proc.stderr:
        return f"stderr lacks {case['stderr_contains']!r}: {proc.stderr.strip()}"
    if "schema" in case:
        doc = json.loads(proc.stdout)
        schema = registry.get_or_retrieve(case["schema"]).value.contents
        validator = jsonschema.Draft202012Validator(schema, registry=registry)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            return "schema violation: " + "; ".join(e.message for e in errors[:3])
        if "json" in case:
            err = subset(case["json"], doc)
            if err:
                return err
        for key, wanted in case.get("contains", {}).items():
            for w in wanted:
                if not any(subset(w, item) is None for item in doc[key]):
                    return f"no element of {key} matches {w!r}"
        if "count" in case and len(doc[case["count"][0]]) != case["count"][1]:
            return f"{case['count'][0]} has {len(doc[case['count'][0]])} entries, want {case['count'][1]}"
    return None


def main():
    binary, schema_dir, cases_path = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    root = cases_path.parent.parent
    registry = load_registry(schema_dir)
    cases = json.loads(cases_path.read_text())
    failed = 0
    for case in cases:
        err = run_case(binary, root, registry, case)
        status = "ok  " if err is None else "FAIL"
        print(f"{status} {case['name']}")
        if err:
            failed += 1
            print("     " + err.replace("\n", "\n     "))
    print(f"{len(cases) - failed}/{len(cases)} CLI cases passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
