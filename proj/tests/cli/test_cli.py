#!/usr/bin/env python3
"""End-to-end checks of the pauliseq command line tool (exit codes, formats)."""

import os
import subprocess
import sys
import tempfile

BINARY = sys.argv[1] if len(sys.argv) > 1 else "pauliseq"
FAILURES = []


def run(*args, **kw):
    return subprocess.run([BINARY, *args], capture_output=True, text=True, **kw)


def check(name, cond, extra=""):
    status = "ok" if cond else "FAIL"
    print(f"  {name}: {status} {extra}")
    if not cond:
        FAILURES.append(name)


def main():
    with tempfile.TemporaryDirectory() as tmp:
        # verify --gate move prints the transformation and exits 0
        r = run("verify", "--gate", "move")
        check("verify move exit", r.returncode == 0, r.stderr)
        check("verify move output", "X1 -> +X2, Z1 -> +Z2" in r.stdout)

        # cnot2 carries a reconstruction warning
        r = run("verify", "--gate", "cnot2")
        check("verify cnot2 exit", r.returncode == 0)
        check("verify cnot2 warning", "reconstruction" in r.stdout)

        # rotation gates verify their certificate
        r = run("verify", "--gate", "rz", "--theta", "0.7")
        check("verify rz exit", r.returncode == 0)
        check("verify rz cert", "VERIFIED" in r.stdout)

        # a broken sequence file (non-commuting stage generators) exits 2
        broken = os.path.join(tmp, "broken.seq")
        with open(broken, "w") as f:
            f.write("data_in: 1\ndata_out: 1\nIX + IZ\nZZ\n")
        r = run("verify", "--file", broken)
        check("verify broken exit", r.returncode == 2, r.stdout + r.stderr)

        # an unparseable file exits 1
        bad = os.path.join(tmp, "bad.seq")
        with open(bad, "w") as f:
            f.write("data_in: 1\nIQ\n")
        r = run("verify", "--file", bad)
        check("verify parse-error exit", r.returncode == 1)

        # a valid file round-trips through verify
        move = os.path.join(tmp, "move.seq")
        with open(move, "w") as f:
            f.write("name: move\ndata_in: 1\ndata_out: 2\nIX\nZZ\nXI\n")
        r = run("verify", "--file", move)
        check("verify file exit", r.returncode == 0, r.stderr)

        # simulate: noise-free move in the adiabatic limit
        cfg = os.path.join(tmp, "move.cfg")
        with open(cfg, "w") as f:
            f.write("gate.name = move\npulse.gate_time = 20\npulse.gap = 5\n")
        r = run("simulate", "--config", cfg)
        check("simulate exit", r.returncode == 0, r.stderr)
        err = float(r.stdout.splitlines()[0].split()[1])
        check("simulate adiabatic error", err < 1e-6, f"error={err}")

        # simulate is deterministic
        cfg2 = os.path.join(tmp, "noisy.cfg")
        with open(cfg2, "w") as f:
            f.write(
                "gate.name = cnot1\npulse.gate_time = 6\npulse.samples = 1024\n"
                "noise.mode = dc\nnoise.sigma = 0.15\nmc.seed = 3\n"
            )
        r1 = run("simulate", "--config", cfg2)
        r2 = run("simulate", "--config", cfg2)
        check("simulate deterministic", r1.stdout == r2.stdout and r1.returncode == 0)

        # trace and noise dumps for the pulse-plot reproduction
        tdump = os.path.join(tmp, "trace.csv")
        ndump = os.path.join(tmp, "noise.csv")
        r = run("simulate", "--config", cfg2, "--dump-trace", tdump, "--dump-noise", ndump)
        check("dump exit", r.returncode == 0, r.stderr)
        with open(tdump) as f:
            check("trace dump header", f.readline().strip() == "t,g_1,g_2,g_3,g_4")
        check("noise dump exists", os.path.getsize(ndump) > 0)

        # malformed config key exits 1 and names the key
        badcfg = os.path.join(tmp, "bad.cfg")
        with open(badcfg, "w") as f:
            f.write("gate.name = cnot1\nnoise.sgma = 0.15\n")
        r = run("simulate", "--config", badcfg)
        check("bad key exit", r.returncode == 1)
        check("bad key named", "noise.sgma" in r.stderr)

        # sweep from a config, CSV output, byte-stable across reruns
        swp = os.path.join(tmp, "sweep.cfg")
        out1 = os.path.join(tmp, "a.csv")
        out2 = os.path.join(tmp, "b.csv")
        with open(swp, "w") as f:
            f.write(
                "gate.name = move\npulse.gate_time = 6\npulse.samples = 1024\n"
                "noise.mode = dc\nnoise.sigma = 0.1\nmc.runs = 5\nmc.seed = 9\n"
                "sweep.variable = gate_time\nsweep.values = 4,6\n"
            )
        r = run("sweep", "--config", swp, "--out", out1)
        check("sweep exit", r.returncode == 0, r.stderr)
        r = run("sweep", "--config", swp, "--out", out2)
        with open(out1, "rb") as f1, open(out2, "rb") as f2:
            check("sweep byte-stable", f1.read() == f2.read())
        with open(out1) as f:
            header = f.readline().strip()
        check(
            "sweep csv schema",
            header == "sweep_variable,value,mean_error,sem_error,mean_leakage,runs,seed,config_digest",
            header,
        )

        # JSON mirror embeds the resolved config
        outj = os.path.join(tmp, "a.json")
        r = run("sweep", "--config", swp, "--out", outj)
        check("sweep json exit", r.returncode == 0)
        import json

        with open(outj) as f:
            doc = json.load(f)
        check("json schema", doc.get("schema") == "pauliseq-sweep-1")
        check("json config embedded", doc["series"][0]["config"]["gate.name"] == "move")

        # empty sweep values exit 1
        empty = os.path.join(tmp, "empty.cfg")
        with open(empty, "w") as f:
            f.write("gate.name = move\nsweep.variable = gate_time\nsweep.values =\n")
        r = run("sweep", "--config", empty)
        check("empty sweep exit", r.returncode == 1)

        # the epsilon preset emits rows for both perturbations
        outp = os.path.join(tmp, "eps.csv")
        r = run("sweep", "--preset", "epsilon", "--seed", "7", "--out", outp)
        check("preset exit", r.returncode == 0, r.stderr)
        with open(outp) as f:
            rows = f.read().strip().splitlines()[1:]
        digests = {row.split(",")[-1] for row in rows}
        check("preset has two series", len(digests) == 2, str(digests))

        # list-gates mentions every registered gate
        r = run("list-gates")
        check("list exit", r.returncode == 0)
        for g in ["move", "s", "rz", "rx", "ry", "hadamard", "cnot1", "cz1", "cnot2"]:
            check(f"list has {g}", f"{g}:" in r.stdout)

    if FAILURES:
        print("FAILED:", ", ".join(FAILURES))
        return 1
    print("all cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
