"""Walk through the combinatorics of one partition at several parameters.

For each delta we print the shifted coordinates, the weight diagram, the cap
diagram, and then read the partition back off the labels. An SVG figure for
delta = 1 is written next to this script.
"""

from pathlib import Path

from brauer import Partition, cap_diagram, degree, embed, in_A_delta, weight_diagram
from brauer.render import ascii_cap, svg_figure
from brauer.weights import read_by_columns, read_by_rows

lam = Partition((4, 2, 2, 1))

for delta in (-2, 0, 1, 3):
    print(f"=== lambda = ({lam}), delta = {delta}")
    e = embed(lam, delta)
    print("coordinates:", ", ".join(str(v) for v in e.prefix(7)), "...")
    print("degree of singularity:", degree(lam, delta), " restricted:", in_A_delta(lam, delta))

    x = weight_diagram(lam, delta)
    print("weight diagram:", x.text())
    print(ascii_cap(cap_diagram(lam, delta)))

    # both readings of the labels give back the partition
    assert read_by_columns(x) == read_by_rows(x) == lam
    print()

out = Path(__file__).with_name("cap_4221_delta1.svg")
out.write_text(svg_figure(lam, cap_diagram(lam, 1)), encoding="utf-8")
print("wrote", out.name)
