#!/usr/bin/env python3
"""Run the weldlab CLI over a set of invocations and check its outputs.

Every success must exit 0, print JSON that validates against
schemas/cli-output.schema.json, and be byte-identical on a second run.
Every error must exit nonzero with a single diagnostic line on stderr.
Exits 77 (skipped) when the jsonschema package is missing.
"""

import json
import os
import subprocess
import sys
import tempfile

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)

tool, root = sys.argv[1], sys.argv[2]
fixtures = os.path.join(root, "fixtures")
output_schema = json.load(open(os.path.join(root, "schemas", "cli-output.schema.json")))
input_schema = json.load(open(os.path.join(root, "schemas", "mating-schema.schema.json")))


def fx(name):
    return os.path.join(fixtures, name + ".json")


SUCCESS = [
    ["group", "info", "--n", "3", "--p", "1", "--case", "I"],
    ["group", "info", "--n", "1", "--p", "4", "--case", "II"],
    ["group", "check", "--n", "2", "--p", "3"],
    ["bs", "eval", "--n", "1", "--p", "4", "--theta", "0.3"],
    ["bs", "eval", "--n", "3", "--p", "1", "--factor", "--theta", "1.1"],
    ["bs", "eval", "--n", "1", "--p", "4", "--z", "0.9", "0.1"],
    ["bs", "orbit", "--n", "1", "--p", "4", "--theta", "0.3", "--steps", "5"],
    ["bs", "partition", "--n", "3", "--p", "1", "--factor"],
    ["bs", "conjugacy", "--n", "1", "--p", "4", "--theta", "0.3", "--depth", "8"],
    ["bs", "tiles", "--n", "1", "--p", "4", "--rank", "2"],
    ["bs", "tiles", "--n", "1", "--p", "4", "--rank", "0"],
    ["mate", "build", fx("torus")],
    ["mate", "report", fx("three_holes")],
    ["mate", "report", "--newton", "6"],
    ["mate", "verify-poly"],
    ["mate", "verify-poly", "--name", "quartic"],
    ["surface", "report", fx("torus")],
    ["surface", "report", fx("two_squares")],
    ["surface", "graph", fx("two_squares")],
    ["surface", "zip", "--newton", "5"],
    ["corr", "fibers", "--n", "2", "--p", "3", "--w", "0.1", "0.2", "--comp", "2"],
    ["corr", "branches", "--n", "1", "--p", "4", "--case", "II"],
    ["corr", "tiling", "--n", "3", "--p", "1", "--len", "3"],
    ["corr", "recover", "--n", "4", "--p", "2"],
    ["--tol", "1e-10", "group", "check", "--n", "3", "--p", "1"],
]

FAILURE = [
    [],
    ["group"],
    ["group", "info", "--n", "1", "--p", "1"],
    ["group", "info", "--n", "3", "--p", "1", "--case", "III"],
    ["bs", "tiles", "--n", "1", "--p", "4", "--rank", "99"],
    ["bs", "eval", "--n", "1", "--p", "4", "--z", "0.1", "0.1"],
    ["surface", "report", os.path.join(fixtures, "missing.json")],
    ["mate", "verify-poly", "--name", "nope"],
    ["corr", "tiling", "--n", "1", "--p", "4", "--len", "20"],
    ["--tol", "1", "group", "check", "--n", "3", "--p", "1"],
]

failures = 0


def fail(args, why):
    global failures
    failures += 1
    print("FAIL", " ".join(args), "::", why)


def run(args):
    return subprocess.run([tool] + args, capture_output=True, text=True)


for args in SUCCESS:
    first = run(args)
    if first.returncode != 0:
        fail(args, "exit %d: %s" % (first.returncode, first.stderr.strip()))
        continue
    try:
        jsonschema.validate(json.loads(first.stdout), output_schema)
    except (ValueError, jsonschema.ValidationError) as e:
        fail(args, str(e).splitlines()[0])
        continue
    if run(args).stdout != first.stdout:
        fail(args, "output differs between runs")

for args in FAILURE:
    r = run(args)
    lines = r.stderr.strip().splitlines()
    if r.returncode == 0 or len(lines) != 1 or r.stdout:
        fail(args, "exit %d, %d stderr lines" % (r.returncode, len(lines)))

with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "out.json")
    svg = os.path.join(tmp, "out.svg")
    r = run(["surface", "graph", fx("torus"), "-o", out, "--svg", svg])
    if r.returncode != 0 or r.stdout:
        fail(["-o"], "writing to a file failed")
    else:
        jsonschema.validate(json.load(open(out)), output_schema)
        if "<svg" not in open(svg).read():
            fail(["--svg"], "no svg document")

for name in sorted(os.listdir(fixtures)):
    if name.endswith(".json"):
        try:
            jsonschema.validate(json.load(open(os.path.join(fixtures, name))), input_schema)
        except jsonschema.ValidationError as e:
            fail([name], str(e).splitlines()[0])

total = len(SUCCESS) + len(FAILURE)
print("%d invocations checked, %d failures" % (total, failures))
sys.exit(1 if failures else 0)
