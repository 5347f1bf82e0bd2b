#!/usr/bin/env python3
"""Smoke test for the countforge Python extension.

Build the module first (``cargo build -p countforge-py``), then run this
script from anywhere; it locates the compiled library under ``target/`` and
imports it directly.
"""

import json
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path


def import_countforge():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libcountforge.so", "countforge.so", "libcountforge.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("countforge extension not built; run: cargo build -p countforge-py")
    stage = Path(tempfile.mkdtemp(prefix="countforge-"))
    ext = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, stage / f"countforge{ext}")
    sys.path.insert(0, str(stage))
    import countforge

    return countforge


cf = import_countforge()


def check(label, actual, expected):
    assert actual == expected, f"{label}: expected {expected!r}, got {actual!r}"
    print(f"ok: {label} = {expected!r}")


def cycle(n):
    g = cf.Graph(n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    return g


# --- graph format round trip -------------------------------------------------
c5 = cycle(5)
text = c5.serialize()
reparsed, weights = cf.Graph.parse(text)
check("roundtrip vertices", reparsed.vertex_count, 5)
check("roundtrip edges", reparsed.edges(), c5.edges())
check("roundtrip weights", weights, ["1"] * 5)

# --- reliability, both routes ------------------------------------------------
check("C5 reliability (brute)", cf.reliability(c5, "1/3", "brute"), "112/243")
check("C5 reliability (tutte)", cf.reliability(c5, "1/3", "tutte"), "112/243")

# --- SAT -> NAE -> MaxCut chain ---------------------------------------------
f = cf.Cnf(3, [[1, 2, 3]])
check("count_sat", cf.count_sat(f), 7)
nae, rel = cf.sat_to_nae(f)
check("relation constant", rel, 2)
check("count_nae after reduction", cf.count_nae(nae), 2 * (7 + 1))
cut_graph, k = cf.nae_to_maxcut(nae)
check("claimed max cut size", k, 2 * nae.num_clauses + nae.num_vars)
check("max cut of reduced graph", cf.count_maxcut(cut_graph), (41, 16))
simple = cf.maxcut_to_simple(cut_graph)
check("3-stretch is simple", simple.is_simple(), True)
check(
    "3-stretch sizes",
    (simple.vertex_count, simple.edge_count),
    (cut_graph.vertex_count + 2 * cut_graph.edge_count, 3 * cut_graph.edge_count),
)

# --- permanents --------------------------------------------------------------
circulant = [["1", "1", "0"], ["0", "1", "1"], ["1", "0", "1"]]
for method in ("naive", "ryser", "cycles"):
    check(f"permanent ({method})", cf.permanent(circulant, method), "2")

# --- SAT -> permanent --------------------------------------------------------
balanced = cf.balance_literals(f)
digraph, occ = cf.sat_to_perm(balanced)
per = cf.permanent_of_digraph(digraph, "cycles")
check(
    "per = (-2)^occ * #Sat",
    per,
    str((-2) ** occ * cf.count_sat(balanced)),
)

# --- partition function and Tutte on a doubled edge --------------------------
double = cf.Graph(2)
double.add_edge(0, 1)
double.add_edge(0, 1)
check("Z with per-edge weights", cf.z_eval(double, "2", weights=["3", "1/2"]), "14")
check("Z with uniform weight", cf.z_eval(double, "2", w="1"), "10")
check("normalized Z", cf.z_eval(double, "2", w="1", variant="z0"), "5")
check("Tutte at (2,2)", cf.tutte_eval(double, "2", "2"), "4")

# --- colourings and independent sets ------------------------------------------
triangle = cycle(3)
check("triangle 3-colourings", cf.count_colourings(triangle, 3), 6)
check("triangle chromatic coefficients", cf.chromatic_polynomial(triangle), ["0", "2", "-3", "1"])
check("triangle independent sets", cf.count_independent_sets(triangle), 4)
check("triangle 3-terminal cut", cf.count_3tmc(triangle, [0, 1, 2]), (3, 1))

# --- independent-set reduction parity ----------------------------------------
indset_graph = cf.sat_to_indset(f)
check(
    "indset reduction sizes",
    (indset_graph.vertex_count, indset_graph.edge_count),
    (3 * 3 + 8 * 1, 3 * 3 + 49 * 1),
)
back = cf.indset_to_2sat(triangle)
check("2-SAT clause count", back.num_clauses, triangle.edge_count)

# --- edge inflations -----------------------------------------------------------
stretched = cf.inflate(c5, "stretch", [3])
check("3-stretch of C5", (stretched.vertex_count, stretched.edge_count), (15, 15))
thickened = cf.inflate(c5, "thicken", [2])
check("2-thickening of C5", (thickened.vertex_count, thickened.edge_count), (5, 10))
theta = cf.inflate(c5, "theta", [2, 3])
check("theta inflation of C5", (theta.vertex_count, theta.edge_count), (20, 25))

# --- coefficient recovery pipeline --------------------------------------------
check(
    "Z(C3; 2, v) coefficients by thickening",
    cf.thicken_coeffs(triangle, "2", "1"),
    ["8", "12", "6", "2"],
)

# --- Ising point and multiterminal pipelines ----------------------------------
dist, best = cf.maxcut_ising(c5)
check("C5 max cut", best, (4, 10))
check("C5 cut distribution", dist, {0: 2, 2: 20, 4: 10})
check("3tmc via Z0", cf.tmc3_from_z0(c5, [0, 1, 2], "3"), cf.count_3tmc(c5, [0, 1, 2])[1])
check(
    "3-colourings via chromatic evaluations",
    cf.chromatic3_via_linial(c5, "4"),
    str(cf.count_colourings(c5, 3)),
)

# --- verification harness ------------------------------------------------------
report = json.loads(cf.verify_suite("perm-methods", seed=7, trials=5))
check("suite name in report", report["suite"], "perm-methods")
check("suite failures", report["failures"], [])
assert report["trials"] >= 5, report
print(f"ok: suite ran {report['trials']} checks")
assert "theta-identity" in cf.suite_names()
print("ok: suite registry lists theta-identity")

print("\nAll smoke tests passed.")
