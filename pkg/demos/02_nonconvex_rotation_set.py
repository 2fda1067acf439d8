"""A non-convex rotation set that is still star-shaped about the origin.

Two horseshoe pieces live on complementary handles of a genus-2 surface and
are not heteroclinically related, so the rotation set is the plain union of
their two triangles sitting in complementary coordinate planes of Q^4.  The
union is provably not convex (the probe produces an LP-certified point of
the hull missed by both members), yet every segment from the origin stays
inside: the star-shape check passes.
"""

from rotaxa import compute, contains_point, convexity_probe, get_fixture, star_shape_check

model = get_fixture("genus2_nonconvex")
computation = compute(model)

print("chains and their rotation polytopes:")
for data in computation.chains:
    verts = " ".join(
        "(" + ",".join(str(c) for c in v) + ")" for v in data.polytope.vertices
    )
    print(f"  {' < '.join(data.chain)}: {verts}")

blocks = [b.polytope for b in computation.blocks]
print(f"\nblocks: {len(blocks)}")

ok, witness = convexity_probe(blocks, density=4)
print(f"union convex? {ok}")
if witness is not None:
    point = "(" + ",".join(str(c) for c in witness) + ")"
    misses = [not contains_point(b, witness) for b in blocks]
    print(f"certified witness {point}; missed by both blocks: {all(misses)}")

star_ok, _ = star_shape_check([c.polytope for c in computation.chains])
print(f"star-shaped about 0? {star_ok}")
