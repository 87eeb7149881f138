"""
Second-eigenvalue reports across the classification zoo
=======================================================

The analyzer checks the nonnegativity hypotheses, extracts the spectral
radius, computes the exterior-square radius by an independent route, and
classifies what sits on the spectral circle. This script walks the five
possible classifications and shows the JSON report format.
"""
import json

import numpy as np

from wedgespec import analyze, random_oscillatory, report_to_dict


def show(name, m, note=""):
    r = analyze(np.asarray(m, dtype=float))
    lam2 = "-" if r.lambda2 is None else f"{r.lambda2:.6g}"
    print(f"{name:<22} -> {r.classification:<26} lambda1={r.lambda1:.6g} "
          f"lambda2={lam2} rho_wedge={r.rho_wedge:.6g}")
    if note:
        print(f"{'':<22}    {note}")
    return r


# One input per classification value.
show("diag(3, 2, 1)", np.diag([3.0, 2.0, 1.0]),
     "one eigenvalue on the circle, hypotheses hold: lambda2 = rho_wedge/lambda1")

show("3-cycle permutation", [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
     "all three eigenvalues on the unit circle, a conjugate pair among them")

show("identity", np.eye(3),
     "the leading eigenvalue is multiple; no conjugate pair on the circle")

show("strict upper shift", np.triu(np.ones((3, 3)), 1),
     "nilpotent: the spectral radius itself is zero")

show("diag(3, -2)", np.diag([3.0, -2.0]),
     "negative entry: spectral facts reported, positivity conclusion withdrawn")

# ---------------------------------------------------------------------------
# An oscillatory matrix exercises the full report: second eigenvalue via
# the wedge route, and sign-change counts for the first two eigenvectors.
m = random_oscillatory(5, seed=11)
r = show("random oscillatory", m)
print("\nsign changes: e1 =", r.sign_changes_e1.strict_count,
      " e2 =", r.sign_changes_e2.strict_count)
print("two-route agreement residual:", f"{r.residual_theorem3:.2e}")

# The same report serializes to a stable JSON schema.
print("\nJSON report for diag(3, 2, 1):")
print(json.dumps(report_to_dict(analyze(np.diag([3.0, 2.0, 1.0]))), indent=2))
