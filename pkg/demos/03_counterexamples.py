"""Certified counterexamples to the unique coclique extension property.

Four families where UCEP fails: totally singular lines of B_3 (odd
characteristic), totally isotropic planes of C_3 (odd characteristic),
totally singular planes of D_4 (characteristic 2), and {i, n-i} flags
in projective space. Each case reconstructs explicit witness objects,
checks they are adjacent vertices, and finds a maximal apartment
coclique compatible with both -- so the extension set is not a coclique.
"""

import json

from kneserlab import verify_nonexample
from kneserlab.buildings import build_d4_planes
from kneserlab.coclique import check_ucep

for case in ("B3_2", "C3_3", "D4_34", "A_flags"):
    report = verify_nonexample(case)
    print("%-8s p=%d -> %s" % (case, report["p"], report["verdict"]))
    print("  witness 1:", report["witnesses"][0])
    print("  witness 2:", report["witnesses"][1])
    print("  compatible apartment coclique size:", len(report["coclique"]))

print("\nfull exhaustive check on the D_4 planes graph:")
graph = build_d4_planes(2)
report = check_ucep(graph, mode="all")
print("vertices:", graph.num_vertices, "| verdict:", report.verdict)
print("least violating pair found inside an extension set:")
print(json.dumps({"x": report.witness["x"], "y": report.witness["y"]},
                 indent=2))
