"""Validates e6tool JSON output against the schemas in docs/."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def load(name, docs):
    return json.loads((docs / name).read_text())


def run(tool, *args):
    p = subprocess.run([tool, *args], capture_output=True, text=True)
    if p.returncode not in (0, 1):
        sys.exit(f"{' '.join(args)}: exit {p.returncode}: {p.stderr}")
    return p.stdout


def main():
    tool, docs = sys.argv[1], pathlib.Path(sys.argv[2])
    algebra, grading, report = (load(n, docs) for n in ("algebra.schema.json", "grading.schema.json", "report.schema.json"))
    with tempfile.TemporaryDirectory() as d:
        for model in ("tits-o-m3r", "sp8-e6", "chevalley-e6"):
            out = pathlib.Path(d) / f"{model}.json"
            jsonschema.validate(json.loads(run(tool, "build", model, "--json", "--out", str(out))), report)
            jsonschema.validate(json.loads(out.read_text()), algebra)
        for g in ("gamma4", "gamma7", "gamma8", "gamma11", "gamma13"):
            out = pathlib.Path(d) / f"{g}.json"
            run(tool, "grading", g, "--out", str(out))
            jsonschema.validate(json.loads(out.read_text()), grading)
    first = run(tool, "verify-all", "--json")
    jsonschema.validate(json.loads(first), report)
    if run(tool, "verify-all", "--json") != first:
        sys.exit("verify-all --json is not byte-identical across runs")
    print("all documents validate")


if __name__ == "__main__":
    main()
