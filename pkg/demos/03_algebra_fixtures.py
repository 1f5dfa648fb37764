"""Check the shipped structure-constant fixtures, then break one on purpose.

The four-dimensional fixture is the exterior-flavored algebra on {1, x, xi,
x*xi} with |x| = 0, |xi| = 1, the products x² = xi² = 0, and the bracket
generated by [xi, x] = x.  Rewriting that bracket value to 1 must be caught
by the derivation rule with an explicit witness triple.
"""

import json
import pathlib

from operadkit.algebras import (check_a_infinity, check_g_algebra,
                                check_swiss_cheese_algebra, g_algebra_from_json,
                                load_algebra_file)

fixtures = pathlib.Path(__file__).resolve().parents[1] / "src/operadkit/fixtures"

g4 = load_algebra_file(fixtures / "g_algebra_4d.json")
print("4-dimensional bracket algebra:", "pass" if check_g_algebra(g4).passed
      else "fail")

swiss = load_algebra_file(fixtures / "swiss_algebra_4d.json")
print("two-space fixture (acting on itself):",
      "pass" if check_swiss_cheese_algebra(swiss).passed else "fail")

dga = load_algebra_file(fixtures / "dga_5d.json")
report = check_a_infinity(dga, 6)
print("differential graded algebra through arity 6:",
      "pass" if report.passed else "fail")

# now the deliberate fault
doc = json.loads((fixtures / "g_algebra_4d.json").read_text())
xi, x = 2, 1
for entry in doc["bracket"]:
    if entry["inputs"] == [xi, x]:
        entry["output"] = [{"index": 0, "coef": "1"}]  # [xi, x] := 1
broken = check_g_algebra(g_algebra_from_json(doc))
print("\nafter setting [xi, x] = 1:")
for c in broken.failures:
    print(f"  {c.name} fails, witness {c.witness}")
