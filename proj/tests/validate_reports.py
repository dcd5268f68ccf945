"""Run the CLI with --json on a set of inputs and validate every report."""
import json
import subprocess
import sys
import tempfile

import jsonschema

tool, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

trivial = tempfile.NamedTemporaryFile("w", suffix=".grp", delete=False)
trivial.write("name: trivial\ndimension: 2\n")
trivial.close()

runs = [
    ["h1", "--builtin", "a6_norm1"],
    ["hminus1", "--builtin", "a6_norm1"],
    ["h2", "--family", "d4n", "--n", "1"],
    ["h2nr", "--family", "q8n", "--n", "1"],
    ["h2nr", "--builtin", "g7_9", "--stable"],
    ["h2nr", "--file", trivial.name],
    ["b0", "--builtin", "hurwitz_sl23"],
    ["bru", "--builtin", "a6_norm1"],
    ["bru", "--family", "cp2p", "--p", "3"],
    ["oracle", "--builtin", "g7_1"],
    ["oracle", "--file", trivial.name],
    ["classify", "--n", "7"],
    ["classify", "--n", "5", "--k", "2"],
    ["reproduce", "--suite", "fast"],
]

failed = 0
for args in runs:
    p = subprocess.run([tool, *args, "--json"], capture_output=True, text=True)
    label = " ".join(args)
    if p.returncode != 0:
        print(f"FAIL {label}: exit {p.returncode}: {p.stderr.strip()}")
        failed += 1
        continue
    errors = sorted(validator.iter_errors(json.loads(p.stdout)), key=str)
    if errors:
        print(f"FAIL {label}: {errors[0].message}")
        failed += 1
    else:
        print(f"ok   {label}")

# the schema rejects a malformed report
p = subprocess.run([tool, "h2nr", "--family", "d4n", "--n", "1", "--json"], capture_output=True, text=True)
bad = json.loads(p.stdout)
bad["result"]["h2u"]["spelling"] = "2;2"
if validator.is_valid(bad):
    print("FAIL malformed spelling accepted")
    failed += 1
sys.exit(1 if failed else 0)
