"""Tour the stable-tree side: enumeration, filtration, grafting, homology.

Trees print in a compact form: `b3` is the third boundary puncture, `c2` the
second interior one, `{...}` a bubble off the line, `(... ; ...)` a component
carrying the line with its boundary children left of the semicolon.
"""

from operadkit.strata import (associahedron_complex, enumerate_strata,
                              filtration_table, graft_gamma)

print("pentagon strata (no interior punctures, four boundary ones):")
for record in enumerate_strata(0, 4):
    print(f"  dim {record.dimension}  codim {record.codimension}  "
          f"{record.tree.key()}")

print("\nmixed strata for one interior and one boundary puncture:")
for record in enumerate_strata(1, 1):
    print(f"  dim {record.dimension}  codim {record.codimension}  "
          f"{record.tree.key()}")

table = filtration_table(0, 4)
print("\nfiltration of the pentagon:")
for row in table.rows():
    print(f"  dim <= {row['dim']}: {row['cumulative']} strata "
          f"({row['count']} of codim {row['codim']})")

# grafting two 2-leaf corollas into a 2-leaf corolla gives a codim-2 vertex
outer = enumerate_strata(0, 2)[0].tree
caterpillar = graft_gamma(outer, [outer, outer])
print(f"\ngrafted caterpillar: {caterpillar.key()}")

print("\nchain complexes of the pure-boundary strata:")
for n in range(2, 7):
    cx = associahedron_complex(n)
    print(f"  n={n}: ranks {cx.dimensions}, boundary squares to zero: "
          f"{cx.d_squared_is_zero()}, homology {cx.homology_ranks()}")
