"""Run the axiom checker across every shipped instance and print summaries.

Discrete instances are exhausted up to the arity budget; the geometric and
endomorphism instances are sampled with a fixed seed, so this script prints
the same thing every time.
"""

from operadkit.axiomcheck import check_operad_axioms, check_relative_axioms
from operadkit.graded import GradedSpace
from operadkit.operads import (CommutativeMultiplication, DiskOperadInstance,
                               EndomorphismOperad, RelativeEndomorphismOperad,
                               SwissOperadInstance, make_associative_operad,
                               make_commutative_operad, product_relative_operad)

V = GradedSpace.from_pairs([("a", 0), ("b", 1)])
W = GradedSpace.from_pairs([("p", 0), ("q", 1)])
comm = make_commutative_operad(12)

suites = [
    ("words (exhaustive, arity 4)",
     check_operad_axioms(make_associative_operad(4), arity_budget=4)),
    ("one-point operad (exhaustive, arity 4)",
     check_operad_axioms(comm, arity_budget=4)),
    ("product relative operad (exhaustive, total arity 4)",
     check_relative_axioms(product_relative_operad(
         comm, CommutativeMultiplication(comm, 2, 0),
         make_associative_operad(6)), arity_budget=4)),
    ("little disks (120 exact samples)",
     check_operad_axioms(DiskOperadInstance(), 3, 120, seed=1)),
    ("disk/semidisk relative operad (80 exact samples)",
     check_relative_axioms(SwissOperadInstance(), 2, 80, seed=1)),
    ("endomorphisms of a graded plane (80 samples)",
     check_operad_axioms(EndomorphismOperad(V, 10), 3, 80, seed=2)),
    ("relative endomorphisms (60 samples)",
     check_relative_axioms(RelativeEndomorphismOperad(V, W, 10), 2, 60, seed=3)),
]

for label, report in suites:
    print(f"{label}:")
    for line in report.summary_lines():
        print("   ", line)
    print()
