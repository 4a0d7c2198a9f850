"""
The unit square, step by step
=============================

The smallest interesting point configuration: four corners, two
triangulations, one flip between them.  Everything below is exact
integer/rational arithmetic — no floats anywhere.
"""

from regulartri import (
    apply_flip,
    find_flips,
    gkz,
    is_regular,
    parse_triangulation,
    square,
)

# the configuration: corners of the unit square, labeled 0..3
config = square()
print("points:", config.points)

# one of its two triangulations, written as index sets of simplices
t = parse_triangulation("{{0,1,2},{0,2,3}}")
print("start:", t)

# the GKZ vector lists, per point, the total normalized volume of the
# simplices using that point; it pins down the triangulation uniquely
print("gkz:", gkz(config, t))

# a flip swaps one diagonal of the square for the other; its displacement
# vector is the exact change of the GKZ vector
(flip,) = find_flips(config, t)
print("flip circuit: plus =", flip.circuit.plus, " minus =", flip.circuit.minus)
print("flip delta:", flip.delta)

other = apply_flip(config, t, flip)
print("after flip:", other)
print("gkz after:", gkz(config, other))

# both triangulations are regular: each admits a height vector whose lower
# convex hull induces it, and the library hands back that witness
for name, tri in (("start", t), ("other", other)):
    verdict = is_regular(config, tri)
    print(f"{name}: regular={verdict.regular} heights={verdict.heights}")
