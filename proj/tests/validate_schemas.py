"""Runs the CLI and validates its JSON against the schemas in docs/."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

tool, docs = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in docs.glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(body)) for name, body in schemas.items()
)

cases = [
    (["compute", "--family", "petersen", "--theta", "--dnum", "--motion", "--aut-order",
      "--phi", "8", "--Phi", "3"], "compute.schema.json", 0),
    (["compute", "--graph6", "Bw", "--theta"], "compute.schema.json", 0),
    (["compute", "--family", "g6fixture asym6", "--motion", "--theta"], "compute.schema.json", 0),
    (["--group-cap", "5", "compute", "--family", "petersen", "--theta"], "error.schema.json", 1),
    (["compute", "--graph6", "Bw", "--family", "petersen"], "error.schema.json", 2),
    (["verify", "--suite", "small", "--nmax", "4"], "report.schema.json", 0),
    (["verify", "--suite", "fixtures"], "report.schema.json", None),
    (["verify", "--suite", "johnson", "--max-vertices", "20"], "report.schema.json", 0),
    (["verify", "--suite", "all", "--nmax", "3", "--max-vertices", "10", "--trials", "5"],
     "verify_all.schema.json", None),
]

failed = 0
for args, schema, code in cases:
    run = subprocess.run([tool, *args], capture_output=True, text=True)
    try:
        if code is not None and run.returncode != code:
            raise AssertionError(f"exit {run.returncode}, expected {code}")
        jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(
            json.loads(run.stdout))
        print("ok  ", " ".join(args))
    except Exception as exc:  # noqa: BLE001
        failed += 1
        print("FAIL", " ".join(args), "->", exc)
sys.exit(1 if failed else 0)
