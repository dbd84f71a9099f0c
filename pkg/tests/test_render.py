import re
import xml.etree.ElementTree as ET

from brauer.caps import cap_diagram, cap_diagram_of
from brauer.partitions import Partition
from brauer.render import ascii_cap, ascii_weight, svg_cap, svg_figure, svg_weight
from brauer.weights import WeightDiagram, weight_diagram

NS = "{http://www.w3.org/2000/svg}"


def sample():
    return cap_diagram_of(WeightDiagram.from_labels(list("ovv^x^^v^^^"), 3))


def test_ascii_weight_has_one_symbol_per_slot():
    line = ascii_weight(weight_diagram(Partition((2, 1)), 3), width=6)
    assert line.startswith("|")
    assert line[2::3] == "".join(weight_diagram(Partition((2, 1)), 3)[k] for k in range(6))


def test_ascii_cap_layout():
    text = ascii_cap(sample())
    lines = text.splitlines()
    assert lines[0].startswith("| o  v  v  ^")
    assert "+__+" in lines[1]
    # the deepest curl reaches the wall
    assert lines[4].startswith("|____")


def test_svg_cap_structure():
    root = ET.fromstring(svg_cap(sample()).encode())
    assert root.get("version") == "1.1"
    paths = [p.get("d") for p in root.iter(NS + "path")]
    assert len(paths) == 5
    assert all(re.fullmatch(r"M [\d.]+ [\d.]+ Q [\d.]+ [\d.]+ [\d.]+ [\d.]+", d) for d in paths)
    lines = list(root.iter(NS + "line"))
    wall = lines[0]
    assert wall.get("x1") == wall.get("x2")
    # curls end on the wall
    assert sum(1 for d in paths if d.split()[-2] == wall.get("x1")) == 2


def test_svg_vertices_at_real_coordinates():
    c = cap_diagram(Partition((1,)), 3)
    root = ET.fromstring(svg_cap(c, unit=10).encode())
    texts = [t for t in root.iter(NS + "text")]
    xs = [float(t.get("x")) for t in texts]
    # odd delta: vertices at 1/2, 3/2, ... relative to the wall at x = 10
    assert xs[:3] == [15.0, 25.0, 35.0]


def test_figure_and_weight_svgs_parse():
    lam = Partition((4, 2, 2, 1))
    ET.fromstring(svg_figure(lam, cap_diagram(lam, 0)).encode())
    ET.fromstring(svg_weight(weight_diagram(lam, -2)).encode())
