#!/usr/bin/env python3
# Render the gasket wireframe with shortest paths overlaid.  Output SVGs
# land next to this script.

from pathlib import Path

from gasket import geodesic, parse_code
from gasket.render import geodesic_svg

out_dir = Path(__file__).parent

for name, ta, tb, depth in [
    ("path_generic", "(012)", "(1)", 8),
    ("path_tie", "000(2)", "0122(0)", 8),
    ("path_corners", "(0)", "(2)", 6),
]:
    a, b = parse_code(ta), parse_code(tb)
    g = geodesic(a, b, depth)
    target = out_dir / f"{name}.svg"
    target.write_text(geodesic_svg(a, b, g), encoding="utf-8")
    print(f"{target.name}: d({ta}, {tb}) route {g.route}, length {g.length}")
