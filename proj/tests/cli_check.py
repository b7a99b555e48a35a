#!/usr/bin/env python3
"""Runs one strata CLI command and checks its exit code and output.

usage: cli_check.py [--exit N] [--match REGEX]... [--no-match REGEX]...
                    [--schema FILE] [--stdout-file FILE] -- command [args...]

--match and --no-match search stdout and stderr together. --schema parses
stdout (or --stdout-file, when given) as JSON and validates it; $refs are
resolved against the schema's directory.
"""

import argparse
import json
import pathlib
import re
import subprocess
import sys

import jsonschema
import referencing


def registry_for(schema_dir):
    resources = []
    for path in schema_dir.glob("*.schema.json"):
        contents = json.loads(path.read_text())
        resource = referencing.Resource.from_contents(contents)
        resources.append((path.name, resource))
        resources.append((contents["$id"], resource))
    return referencing.Registry().with_resources(resources)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--exit", type=int, default=0)
    parser.add_argument("--match", action="append", default=[])
    parser.add_argument("--no-match", action="append", default=[])
    parser.add_argument("--schema")
    parser.add_argument("--stdout-file")
    parser.add_argument("command", nargs=argparse.REMAINDER)
    args = parser.parse_args()
    command = args.command[1:] if args.command[:1] == ["--"] else args.command

    proc = subprocess.run(command, capture_output=True, text=True, check=False)
    output = proc.stdout + proc.stderr
    sys.stdout.write(output)
    failures = []
    if proc.returncode != args.exit:
        failures.append(f"exit code {proc.returncode}, expected {args.exit}")
    for pattern in args.match:
        if not re.search(pattern, output):
            failures.append(f"output does not match {pattern!r}")
    for pattern in args.no_match:
        if re.search(pattern, output):
            failures.append(f"output matches {pattern!r}")
    if args.schema:
        schema_path = pathlib.Path(args.schema)
        text = (pathlib.Path(args.stdout_file).read_text()
                if args.stdout_file else proc.stdout)
        try:
            document = json.loads(text)
            schema = json.loads(schema_path.read_text())
            validator = jsonschema.Draft202012Validator(
                schema, registry=registry_for(schema_path.parent))
            for error in validator.iter_errors(document):
                failures.append(f"schema: {error.json_path}: {error.message}")
        except json.JSONDecodeError as e:
            failures.append(f"output is not JSON: {e}")
    for f in failures:
        print("cli_check: " + f, file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
