"""Runs the installed command-line tool and checks outputs and exit codes."""
import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def expect(cond, what):
    if not cond:
        failures.append(what)


r = run("kf", "--code", "111")
expect(r.returncode == 0 and r.stdout == "123496015/93122\n", "kf --code 111")

r = run("kf", "--code", "012", "--format", "json", "--approx")
expect(r.returncode == 0 and "kf_approx" in json.loads(r.stdout), "kf json --approx")

r = run("enumerate", "--n", "10")
expect(r.returncode == 2 and "cap" in r.stderr, "cap exceeded")

env = dict(os.environ, PHENYLENE_EXHAUSTIVE_CAP="5")
r = run("enumerate", "--n", "4", env=env)
expect(r.returncode == 2, "cap from the environment")
env["PHENYLENE_EXHAUSTIVE_CAP"] = "lots"
r = run("enumerate", "--n", "4", env=env)
expect(r.returncode == 2, "malformed cap")

r = run("kf", "--code", "x")
expect(r.returncode == 2 and r.stderr.startswith("error:"), "bad code")

r = run("verify", "hexagon", "--format", "json")
expect(r.returncode == 0 and json.loads(r.stdout)["pass"] is True, "verify hexagon")

r = run("verify", "conjecture", "--n", "4")
expect(r.returncode == 0 and r.stdout.startswith("PASS"), "verify conjecture")

with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
    f.write("0 1 1\n1 2 1\n2 3 1\n3 0 1\n")
    path = f.name
try:
    r = run("matrix", "--edges", path)
    expect(r.returncode == 0 and r.stdout.splitlines()[0] == "0 3/4 1 3/4", "matrix text")
    r = run("export-dot", "--edges", path)
    expect(r.returncode == 0 and r.stdout.startswith("graph"), "export-dot edges")
finally:
    os.unlink(path)

r = run("--help")
expect(r.returncode == 0 and "verify" in r.stdout, "help")

for f in failures:
    print("FAIL", f)
print("ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
