#!/usr/bin/env python3
"""Black-box checks of the canprod command-line interface."""

import json
import math
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(f"{args}: exit {proc.returncode} != {expect}\n{proc.stderr}")
    return proc


def check(cond, what):
    if not cond:
        FAILURES.append(what)


def parse_csv(text):
    lines = [l for l in text.split("\n") if l]
    header = lines[0].split(",")
    return header, [dict(zip(header, l.split(","))) for l in lines[1:]]


# eval: W_2(1) = sinh(pi)/pi
p = run("eval", "W", "--s", "2", "--grid", "1:1:1")
header, rows = parse_csv(p.stdout)
check(header == ["x", "value"], f"eval header {header}")
check(len(rows) == 1, "eval row count")
want = math.sinh(math.pi) / math.pi
check(abs(float(rows[0]["value"]) - want) < 1e-9 * want, "eval W_2(1) value")

# eval determinism: identical bytes across runs
p2 = run("eval", "W", "--s", "2", "--grid", "1:1:1")
check(p.stdout == p2.stdout, "eval output not byte-identical across runs")

# eval json format carries meta + data
p = run("eval", "logF", "--s", "3", "--grid", "2:200:5:log", "--format", "json")
doc = json.loads(p.stdout)
check(doc["meta"]["version"] == "0.1.0", "json meta version")
check(len(doc["data"]) == 5, "json data length")

# verify: maincalc identity table, all rows pass
p = run("verify", "maincalc", "--s", "6", "--grid", "1:1000:6:log")
header, rows = parse_csv(p.stdout)
check(header == ["x", "lhs", "rhs", "residual", "pass"], f"verify header {header}")
check(all(r["pass"] == "1" for r in rows), "verify maincalc rows")

# verify littlewood on a small grid
p = run("verify", "littlewood", "--s", "2", "--grid", "1.5:1000:8:log")
_, rows = parse_csv(p.stdout)
check(all(r["pass"] == "1" for r in rows), "verify littlewood rows")

# unknown suite -> exit 1
run("verify", "nonsense", expect=1)
# unknown eval target -> exit 1
run("eval", "nonsense", expect=1)
# bad grid -> exit 1
run("eval", "W", "--grid", "5:1:3", expect=1)

# zeros: one-column CSV, ratios near s
p = run("zeros", "d3logF", "--s", "5")
lines = [l for l in p.stdout.split("\n") if l]
check(lines[0] == "x", "zeros CSV header")
pts = [float(l) for l in lines[1:]]
check(len(pts) >= 6, f"zeros count {len(pts)}")
check(all(b > a for a, b in zip(pts, pts[1:])), "zeros increasing")
check("ratio_extract(5)" in p.stderr, "zeros summary on stderr")
p = run("zeros", "d3logF", "--s", "5", "--format", "json")
doc = json.loads(p.stdout)
ratio = doc["data"]["ratio_extract"]
check(ratio is not None and abs(ratio - 5.0) < 0.15, f"zeros ratio {ratio}")

# probe sZ: 8 = 2^3 is a member
p = run("probe", "sZ", "--s", "2", "--y", "8", "--format", "json")
doc = json.loads(p.stdout)
check(doc["data"]["extra"]["membership"] == "member", "probe sZ membership")
check(doc["data"]["extra"]["exponent"] == 3, "probe sZ exponent")

# probe stirling in CSV form: trace rows + verdict on stderr
p = run("probe", "stirling", "--x", "1")
header, rows = parse_csv(p.stdout)
check(header == ["t", "sample"], "probe CSV header")
check("converged" in p.stderr, "probe verdict line")

# assouad on a synthetic family
p = run("assouad", "--family", "arith:1:200", "--format", "json")
doc = json.loads(p.stdout)
check(0.9 <= doc["data"]["estimate"] <= 1.0, f"assouad estimate {doc['data']['estimate']}")

# report: empty suite list -> empty summary, exit 0
with tempfile.TemporaryDirectory() as d:
    cfg = os.path.join(d, "empty.json")
    with open(cfg, "w") as fh:
        json.dump({"suites": []}, fh)
    p = run("report", cfg)
    doc = json.loads(p.stdout)
    check(doc["data"] == [], "report empty summary")

    bad = os.path.join(d, "bad.json")
    with open(bad, "w") as fh:
        json.dump({"suites": ["no_such_suite"]}, fh)
    run("report", bad, expect=1)

    one = os.path.join(d, "one.json")
    with open(one, "w") as fh:
        json.dump({"suites": ["goldens"]}, fh)
    p = run("report", one)
    doc = json.loads(p.stdout)
    check(len(doc["data"]) == 1 and doc["data"][0]["pass"], "report goldens suite")

    # --out writes the file instead of stdout
    out_path = os.path.join(d, "w.csv")
    p = run("eval", "W", "--s", "2", "--grid", "1:10:4:log", "--out", out_path)
    check(p.stdout == "", "eval --out silences stdout")
    with open(out_path) as fh:
        header, rows = parse_csv(fh.read())
    check(len(rows) == 4, "eval --out row count")

if FAILURES:
    print("CLI test failures:", file=sys.stderr)
    for f in FAILURES:
        print(" -", f, file=sys.stderr)
    sys.exit(1)
print("cli interface: all checks passed")
