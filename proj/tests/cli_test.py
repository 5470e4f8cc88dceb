"""End-to-end checks of the command-line tool: JSON shape and exit codes."""

import json
import subprocess
import sys

TOOL = sys.argv[1]
failures = 0


def run(*args):
    proc = subprocess.run([TOOL, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def check(name, cond):
    global failures
    print(("ok   " if cond else "FAIL ") + name)
    failures += not cond


def report(*args):
    code, out, _ = run(*args)
    return code, json.loads(out) if code == 0 else None


code, r = report("invariants", "unknot", "--all")
inv = r["invariants"]
check("unknot report", code == 0 and inv["f"] == "1" and inv["galex"] == "0" and inv["genus"] == 0)

code, r = report("invariants", "kishino", "--quat")
check("kishino quaternionic gcd", r["invariants"]["quat"] == {"study": "0", "codim1_gcd": "2+5*t^2+2*t^4"})

code, r = report("invariants", "O1+,O2+,U1+,U2+", "--galex")
check("virtual trefoil G nonzero", r["invariants"]["galex"] not in ("0", None))

for a, b, verdict, witness in [("unknot", "vtrefoil", "DISTINCT", "f"), ("fig8K", "fig8K", "INCONCLUSIVE", None),
                               ("unknot", "kishino", "DISTINCT", "quat1")]:
    code, r = report("distinguish", a, b)
    got = r["witness"]["invariant"] if "witness" in r else None
    check(f"distinguish {a} {b}", r["verdict"] == verdict and got == witness)

code, r = report("catalog")
names = [e["name"] for e in r["entries"]]
check("catalog lists entries", len(names) >= 9 and "flatH" in names)

code, r = report("homology", "--birack", "R3", "--degree", "3", "--variant", "quandle")
check("quandle homology torsion", 3 in r["torsion"])

code, r = report("braid", "--word", "s1 s1 s1", "--n", "2", "--close", "--invariants")
check("braid closure report", r["closure"]["text"] == "O1+,U2+,O3+,U1+,O2+,U3+"
      and r["invariants"]["invariants"]["f"] == "-A^-16+A^-12+A^-4")

code, r = report("braid", "--word", "s1 r2", "--n", "3", "--rho", "--flat")
check("braid rho image", r["rho"]["rank"] == 4 and r["flat"]["word"] == "s1 r2")

code, r = report("simplify", "O1+,U1+,O2-,U2-", "--budget", "2", "--emit-certificate")
check("simplify", r["result"]["text"] == "" and len(r["certificate"]) == 2)

code, r = report("flat-linking", "flatH", "--moves", "30", "--seed", "7")
check("flat linking parity", r["parity"] == 1 and r["parity_after_moves"] == 1 and len(r["moves"]) == 30)

first = run("invariants", "trefoil")[1]
check("deterministic output", first == run("invariants", "trefoil")[1])

check("unknown name exits 2", run("invariants", "nosuch")[0] == 2)
check("bad code exits 2", run("invariants", "O1+,U2+")[0] == 2)
check("unknown flag exits 2", run("invariants", "trefoil", "--bogus")[0] == 2)
check("size cap exits 3", run("homology", "--birack", "R3", "--degree", "9")[0] == 3)
check("diagnostics on stderr", "UnknownCatalogName" in run("invariants", "nosuch")[2])

sys.exit(1 if failures else 0)
