#!/usr/bin/env python3
# Reconstructing shortest paths as polylines of junction points.
# Deeper truncation levels refine the path near the endpoints; the exact
# polyline length converges to the exact distance at rate 2^(1-depth).

from fractions import Fraction

from gasket import distance, geodesic, parse_code

a = parse_code("(012)")
b = parse_code("(1)")
exact = distance(a, b).distance
print(f"d({a}, {b}) = {exact}")
print()

print(f"{'depth':>5} {'length':>12} {'gap':>12} {'bound 2^(1-n)':>14} {'waypoints':>9}")
for depth in range(4, 13, 2):
    g = geodesic(a, b, depth)
    gap = abs(g.length - exact)
    bound = Fraction(2, 1 << depth)
    print(f"{depth:>5} {str(g.length):>12} {str(gap):>12} {str(bound):>14} {len(g.waypoints):>9}")

print()
g = geodesic(a, b, 8)
print(f"waypoints at depth 8 ({g.route} route):")
for w in g.waypoints:
    print(f"  {w}")

# Points whose addresses end in a repeating single symbol are vertices of
# some elementary triangle, so their paths terminate exactly at any depth.
print()
a2, b2 = parse_code("000(2)"), parse_code("0122(0)")
g2 = geodesic(a2, b2, 10)
print(f"d({a2}, {b2}) = {distance(a2, b2).distance}, reconstructed length {g2.length}")
print(f"route tag: {g2.route} (an exact tie: the emitted path is one of several)")
print(f"equally short alternatives branch at: {[str(t) for t in g2.tie_points]}")
