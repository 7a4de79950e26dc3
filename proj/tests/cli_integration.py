#!/usr/bin/env python3
"""End-to-end checks for the sfpl command-line driver.

Usage: cli_integration.py /path/to/sfpl-cli

Runs the binary in a scratch directory and verifies exit codes, output
file shapes and byte-for-byte reproducibility. Prints one line per check
and exits nonzero on the first failure.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = None
ROOT = None
CHECKS = 0


def fail(message):
    print(f"FAIL: {message}")
    sys.exit(1)


def ok(message):
    global CHECKS
    CHECKS += 1
    print(f"ok {CHECKS}: {message}")


def run(*args, cwd=None):
    return subprocess.run(
        [str(CLI), *args],
        cwd=cwd or ROOT,
        capture_output=True,
        text=True,
        timeout=300,
    )


def expect(cond, message, proc=None):
    if not cond:
        if proc is not None:
            sys.stderr.write(f"stdout:\n{proc.stdout}\nstderr:\n{proc.stderr}\n")
        fail(message)
    ok(message)


def read_csv(path):
    lines = Path(path).read_text().splitlines()
    if not lines:
        fail(f"{path} is empty")
    return lines[0], [line.split(",") for line in lines[1:]]


def check_rectangular(path, expected_cols):
    header, rows = read_csv(path)
    cols = header.split(",")
    if expected_cols is not None and cols != expected_cols:
        fail(f"{path}: header {cols} != {expected_cols}")
    for i, row in enumerate(rows):
        if len(row) != len(cols):
            fail(f"{path}: row {i + 1} has {len(row)} fields, header has {len(cols)}")
        for field in row:
            float(field)  # raises on garbage
    return rows


def describe_checks():
    proc = run("--experiment", "xor-optimize", "--describe")
    expect(proc.returncode == 0, "describe xor-optimize exits 0", proc)
    expect("N = 9" in proc.stdout, "describe reports 9 XOR parameters", proc)
    expect("537300" in proc.stdout, "describe predicts (L-1)*N*M = 537300 evaluations", proc)
    expect("diagnostics.csv" in proc.stdout, "describe lists the diagnostics file", proc)
    expect(not (ROOT / "out").exists(), "describe creates no files")

    proc = run("--experiment", "robot-arm-train", "--describe")
    expect(proc.returncode == 0, "describe robot-arm-train exits 0", proc)
    expect("N = 82" in proc.stdout, "describe reports 82 arm-network parameters", proc)

    proc = run("--experiment", "xor-convergence", "--seeds", "3,9", "--describe")
    expect(proc.returncode == 0, "describe accepts --seeds", proc)
    plan = proc.stdout
    expect('"seed": 3' in plan and '"seed2": 9' in plan,
           "--seeds splits into seed and seed2", proc)


def usage_error_checks():
    proc = run("--experiment", "bogus", "--out", "bogus-out")
    expect(proc.returncode == 2, "unknown experiment exits 2", proc)
    expect("unknown experiment" in proc.stderr, "unknown experiment is named in stderr", proc)
    expect(not (ROOT / "bogus-out").exists(), "failed parse creates no output directory")

    proc = run("--experiment", "custom-cost", "--out", "cc-missing")
    expect(proc.returncode == 2, "custom-cost without an expression exits 2", proc)
    expect(not (ROOT / "cc-missing").exists(), "rejected custom-cost creates no files")

    proc = run("--experiment", "michalewicz", "--D", "0", "--out", "bad-d")
    expect(proc.returncode == 2, "D = 0 is rejected with exit 2", proc)
    expect(not (ROOT / "bad-d").exists(), "rejected configuration creates no files")

    proc = run("--experiment", "michalewicz", "--hidden", "4", "--out", "bad-key")
    expect(proc.returncode == 2, "flag foreign to the experiment exits 2", proc)
    expect("does not apply" in proc.stderr, "foreign flag is explained", proc)

    proc = run("--experiment", "robot-arm-predict", "--test-input", "1", "--out", "bad-ti")
    expect(proc.returncode == 2, "one-component test input exits 2", proc)

    proc = run("--experiment", "robot-arm-train", "--dataset", "/nonexistent-sfpl.csv",
               "--out", "bad-data")
    expect(proc.returncode == 1, "unreadable dataset exits 1", proc)
    expect(not (ROOT / "bad-data").exists(), "unreadable dataset creates no files")


def michalewicz_checks():
    out = ROOT / "mich"
    proc = run("--experiment", "michalewicz", "--out", str(out))
    expect(proc.returncode == 0, "michalewicz run exits 0", proc)
    expect("michalewicz: argmax=" in proc.stdout, "michalewicz prints its summary", proc)

    files = ["diagnostics.csv", "density_dim1.csv", "density_dim2.csv",
             "marginals.json", "report.json"]
    for name in files:
        expect((out / name).exists(), f"michalewicz writes {name}")

    rows = check_rectangular(out / "diagnostics.csv",
                             ["sweep", "av", "s", "cost_at_argmax", "argmax_1", "argmax_2"])
    expect(len(rows) == 1, "one sweep produces one diagnostics row")

    drows = check_rectangular(out / "density_dim1.csv", ["x", "cdf", "pdf"])
    expect(len(drows) == 512, "density table holds 512 grid points")
    expect(all(float(r[2]) >= 0.0 for r in drows), "written density is clamped at zero")

    marg = json.loads((out / "marginals.json").read_text())
    expect(marg["dims"] == 2 and marg["L"] == 20 and marg["D"] == 0.4,
           "marginals.json records dims, L and D")
    expect(len(marg["mean_coeffs"]) == 2 and len(marg["mean_coeffs"][0]) == 20,
           "marginals.json holds 2 x 20 mean coefficients")

    report = json.loads((out / "report.json").read_text())
    expect(report["experiment"] == "michalewicz", "report names the experiment")
    expect(len(report["argmax"]) == 2, "report argmax has 2 entries")
    expect(report["gradient_evals"] == 19 * 2 * 1, "gradient evaluations = (L-1)*N*M")
    return files


def determinism_checks(files):
    out = ROOT / "mich"
    first = {name: (out / name).read_bytes() for name in files}
    proc = run("--experiment", "michalewicz", "--out", str(out))
    expect(proc.returncode == 0, "identical re-run exits 0", proc)
    for name in files:
        expect((out / name).read_bytes() == first[name], f"re-run reproduces {name} byte for byte")


def custom_cost_checks():
    out = ROOT / "cc"
    proc = run("--experiment", "custom-cost", "--cost", "sin(3*x1)+x2^2/2",
               "--L", "16", "--sweeps", "3", "--seed", "2",
               "--lower", "-1", "--upper", "2", "--out", str(out))
    expect(proc.returncode == 0, "custom-cost run exits 0", proc)
    report = json.loads((out / "report.json").read_text())
    expect(report["expression"] == "sin(3*x1)+x2^2/2", "report echoes the expression")
    expect(len(report["records"]) == 3, "custom-cost records every sweep")
    expect(len(report["argmax"]) == 2, "expression dimension was inferred as 2")
    expect(report["gradient_evals"] == 15 * 2 * 3, "custom-cost gradient evaluation count")
    expect((out / "density_dim2.csv").exists(), "custom-cost writes per-dimension densities")


def config_file_checks():
    cfg = ROOT / "cc.json"
    cfg.write_text(json.dumps({
        "experiment": "custom-cost",
        "cost": "x1^2/2",
        "L": 12,
        "sweeps": 2,
        "D": 0.5,
        "out": str(ROOT / "ccjson"),
    }))
    proc = run("--config", str(cfg))
    expect(proc.returncode == 0, "config-file run exits 0", proc)
    report = json.loads((ROOT / "ccjson" / "report.json").read_text())
    expect(report["config"]["L"] == 12, "config file sets L")

    proc = run("--config", str(cfg), "--L", "14", "--out", str(ROOT / "ccjson2"))
    expect(proc.returncode == 0, "flag-over-config run exits 0", proc)
    report = json.loads((ROOT / "ccjson2" / "report.json").read_text())
    expect(report["config"]["L"] == 14, "flags override config-file keys")


def main():
    global CLI, ROOT
    if len(sys.argv) != 2:
        fail("usage: cli_integration.py /path/to/sfpl-cli")
    CLI = Path(sys.argv[1]).resolve()
    if not CLI.exists():
        fail(f"binary not found: {CLI}")

    with tempfile.TemporaryDirectory(prefix="sfpl-cli-test-") as tmp:
        ROOT = Path(tmp)
        describe_checks()
        usage_error_checks()
        files = michalewicz_checks()
        determinism_checks(files)
        custom_cost_checks()
        config_file_checks()

    print(f"all {CHECKS} CLI checks passed")


if __name__ == "__main__":
    main()
