"""Build exact disk configurations, glue them, and render the result.

Run from the repository root:  python3 demos/01_disk_compositions.py
Writes two SVG pictures next to this script.
"""

import pathlib

from operadkit import (compose_disks, compose_swiss_Gamma, compose_swiss_gamma,
                       disk, render_svg, semidisk, unit_swiss_config,
                       validate_disk_config, validate_swiss_config)

here = pathlib.Path(__file__).resolve().parent

# Two little disks sitting symmetrically in the unit disk.
outer = validate_disk_config([disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4")])

# Glue a single centered disk into slot 1 and a 3-disk configuration into
# slot 2.  Every coordinate of the result is an exact rational.
inner1 = validate_disk_config([disk(0, 0, "1/2")])
inner2 = validate_disk_config([disk("-1/2", 0, "1/4"), disk("1/2", 0, "1/4"),
                               disk(0, "5/8", "1/4")])
glued = compose_disks(outer, [inner1, inner2])
print("composed disk configuration:")
for i, d in enumerate(glued.disks, start=1):
    print(f"  disk {i}: center ({d.center_x}, {d.center_y}), radius {d.radius}")
(here / "disks.svg").write_text(render_svg(glued))

# The mixed picture: a disk floating over two semidisks on the diameter.
swiss = validate_swiss_config(
    [disk(0, "1/2", "1/4")],
    [semidisk("-1/2", "1/4"), semidisk("1/2", "1/4")])

# Semidisk slots take mixed configurations; disk slots take disk ones.
step1 = compose_swiss_gamma(swiss, [unit_swiss_config(), unit_swiss_config()])
assert step1 == swiss  # gluing units changes nothing
step2 = compose_swiss_Gamma(swiss, [outer])
print("\nafter filling the disk slot with the two-disk configuration:")
print(f"  {step2.disk_arity} disks over {step2.semidisk_arity} semidisks")
(here / "swiss.svg").write_text(render_svg(step2))
print("\nwrote disks.svg and swiss.svg")
