#!/usr/bin/env python3
# Exact shortest-path distances on the Sierpinski gasket, straight from
# symbolic addresses.  Every value below is an exact rational; floats are
# printed only as a convenience.

from gasket import distance, parse_code, same_point, twin

pairs = [
    ("(012)", "(1)"),       # generic pair, splits at the first symbol
    ("000(2)", "0122(0)"),  # exact tie: two distinct shortest paths exist
    ("(0)", "(1)"),         # two outer corners, unit side
    ("1(0)", "1(2)"),       # two junctions one level down
    ("0(1)", "1(0)"),       # the same junction written both ways
]

print(f"{'a':>10} {'b':>10} {'distance':>10} {'~float':>9} {'k':>2} {'route':>5}")
for ta, tb in pairs:
    a, b = parse_code(ta), parse_code(tb)
    r = distance(a, b)
    print(f"{ta:>10} {tb:>10} {str(r.distance):>10} {float(r.distance):>9.6f} "
          f"{r.split_index:>2} {r.route:>5}")

# The distance never depends on which address of a junction point you use.
a = parse_code("000(2)")
b = parse_code("0122(0)")
print()
print(f"{a} and its twin {twin(a)} name the same point: {same_point(a, twin(a))}")
print(f"d({a}, {b})        = {distance(a, b).distance}")
print(f"d({twin(a)}, {b})  = {distance(twin(a), b).distance}")

# Both candidate route lengths are part of the result; a tie means the
# shortest path is realized both through the shared junction and across
# the far side.
r = distance(a, b)
print()
print(f"through the shared junction: {r.sum_p}")
print(f"across the far side:         {r.sum_edge}")
