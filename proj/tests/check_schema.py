"""Validates CLI JSON output against the schemas in docs/."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def run(cli, *args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    if proc.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    cli, docs = sys.argv[1], Path(sys.argv[2])
    report = json.loads((docs / "report.schema.json").read_text())
    table = json.loads((docs / "table.schema.json").read_text())

    checks = [
        (table, run(cli, "table", "--max-weight", "7")),
        (table, run(cli, "table", "--max-weight", "9", "--min-weight", "9", "--budget", "0.001")),
        (report, run(cli, "verify-theorem", "--part", "i", "--param", "2", "--cutoff", "7")),
        (report, run(cli, "verify-theorem", "--part", "ii", "--param", "2", "--cutoff", "7")),
        (report, run(cli, "member", "--element", "(1-tau)(xxyxy)", "--family", "derivation", "--weight", "5")),
        (report, run(cli, "member", "--element", "xxy", "--family", "derivation", "--weight", "3", expect=1)),
        (report, run(cli, "conjecture", "--max-weight", "7")),
    ]
    for schema, doc in checks:
        jsonschema.validate(doc, schema)
    print(f"{len(checks)} documents valid")


if __name__ == "__main__":
    main()
