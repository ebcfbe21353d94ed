"""Validate `proofarg analyze --format json` output against the shipped schema.

usage: check_report_schema.py PROOFARG SCHEMA FILE...
"""
import json
import subprocess
import sys

import jsonschema


def main(argv):
    binary, schema_path, *files = argv[1:]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for path in files:
        run = subprocess.run([binary, "analyze", "--format", "json", path],
                             capture_output=True, check=False)
        # 0 for clean runs, 1 for documents without dialogues or with violations.
        if run.returncode not in (0, 1):
            print(f"FAIL  {path}: exit {run.returncode}: {run.stderr.decode()}")
            failures += 1
            continue
        text = run.stdout.decode("utf-8")
        report = json.loads(text)
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        canonical = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        if errors:
            failures += 1
            print(f"FAIL  {path}: {errors[0].message} at {list(errors[0].path)}")
        elif text != canonical:
            failures += 1
            print(f"FAIL  {path}: output is not sorted-key JSON with LF endings")
        else:
            print(f"ok    {path}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
