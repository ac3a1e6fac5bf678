"""Run the CLI in JSON mode and validate every document against docs/schemas."""

import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator

CASES = [
    ("poset", ["hasse", "e6"]),
    ("poset", ["hasse", "e7"]),
    ("poset", ["hasse", "gr:3,7"]),
    ("poset", ["hasse", "lg:4"]),
    ("poset", ["hasse", "og:6"]),
    ("poset", ["hasse", "quad:8"]),
    ("tits", ["tits", "e6", "--P", "6", "--Q", "1"]),
    ("tits", ["tits", "e7", "--P", "7", "--Q", "1"]),
    ("tits", ["tits", "table1"]),
    ("report", ["verify", "e6"]),
    ("report", ["verify", "e7"]),
    ("report", ["verify", "table1"]),
    ("report", ["verify", "all"]),
    ("lookup", ["degree", "e7", "26:13110"]),
    ("lookup", ["dual", "gr:2,4", "1,3"]),
    ("lookup", ["dual", "e6", "4:1a"]),
]


def run(cli, args):
    out = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    cli, schema_dir = sys.argv[1], Path(sys.argv[2])
    validators = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        Draft202012Validator.check_schema(schema)
        validators[path.name.removesuffix(".schema.json")] = Draft202012Validator(schema)

    cases = list(CASES)
    for variety in ["e6", "e7", "gr:2,4", "gr:3,6", "lg:3", "og:5", "quad:5", "quad:6"]:
        for node in run(cli, ["hasse", variety])["nodes"]:
            cases.append(("classify", ["classify", variety, node["class"]]))

    failures = 0
    for name, args in cases:
        errors = sorted(validators[name].iter_errors(run(cli, args)), key=str)
        for e in errors[:3]:
            print(f"{' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)
    print(f"{len(cases) - failures}/{len(cases)} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
