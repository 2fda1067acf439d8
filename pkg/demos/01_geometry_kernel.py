"""Tour of the exact geometry kernel.

Everything below runs over exact rationals: hull extraction, membership,
affine dimension, segment coverage.  There is no floating point and no
tolerance anywhere, so every printed answer is a theorem about the inputs.
"""

from rotaxa import (
    SubspaceBasis,
    affine_dim,
    as_vector,
    contains_point,
    extreme_points,
    in_span,
    segment_covered,
)


def V(*coords):
    return as_vector(coords)


def show(polytope):
    return " ".join("(" + ",".join(str(c) for c in v) + ")" for v in polytope.vertices)


print("== hulls ==")
cloud = [V(0, 0), V(1, 0), V(0, 1), V(1, 1), V("1/2", "1/2"), V("1/3", "2/3")]
square = extreme_points(cloud)
print(f"6 points reduce to the square corners: {show(square)}")
print(f"affine dimension: {affine_dim(square)}")

print()
print("== membership is decided, not estimated ==")
triangle = extreme_points([V(0, 0), V(1, 0), V(1, 1)])
for probe in (V("1/2", "1/4"), V("1/2", "1/2"), V("499999/1000000", "1/2")):
    verdict = contains_point(triangle, probe)
    print(f"({','.join(str(c) for c in probe)}) in triangle: {verdict}")

print()
print("== covering a segment by a family ==")
left = extreme_points([V(0, 0), V("9/10", 0)])
right = extreme_points([V("11/10", 0), V(2, 0)])
print("[0,2] by [0,9/10] and [11/10,2]:",
      segment_covered(V(0, 0), V(2, 0), [left, right]))
bridge = extreme_points([V("4/5", 0), V("6/5", 0)])
print("same plus the bridge [4/5,6/5]:",
      segment_covered(V(0, 0), V(2, 0), [left, right, bridge]))

print()
print("== subspace containment ==")
plane = SubspaceBasis((V(1, 0, 0, 0), V(0, 1, 0, 0)))
flat = extreme_points([V(0, 0, 0, 0), V(1, 0, 0, 0), V(1, 1, 0, 0)])
tilted = extreme_points([V(0, 0, 0, 0), V(0, 0, 1, 0)])
print("triangle in the (1,2)-plane:", in_span(plane, flat))
print("segment along the 3rd axis:", in_span(plane, tilted))
