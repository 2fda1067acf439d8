"""The exponential family: block count doubling with every level.

Each level contributes two parallel annular pieces (intervals along fresh
homology directions) separated by a zero-rotation annulus; a maximal chain
must pick one of the two at every level.  With k levels on a genus-2k
surface there are 2^k maximal chains with pairwise distinct supports, hence
2^k blocks, each a k-simplex.  The per-genus budget 4 * 2^(5g-5) is huge by
comparison; the point is the exponential growth itself.
"""

from rotaxa import compute, exp_family
from rotaxa.conley import block_budget, support_span
from rotaxa.exactgeom import affine_dim, rank_of

for k in (1, 2, 3):
    model = exp_family(k)
    computation = compute(model)
    blocks = computation.blocks
    dims = sorted({affine_dim(b.polytope) for b in blocks})
    print(
        f"k={k}: genus {model.genus}, {len(blocks)} blocks (= 2^{k}), "
        f"simplex dimensions {dims}, budget {block_budget(model.genus)}"
    )

print()
print("supports of the k=3 blocks and their pairwise span intersections:")
model = exp_family(3)
computation = compute(model)
spans = [(b, support_span(b.key, model)) for b in computation.blocks]
for b, _ in spans:
    print(f"  {'+'.join(sorted(b.key.support))}")
worst = 0
for i in range(len(spans)):
    for j in range(i + 1, len(spans)):
        meet = (
            rank_of(spans[i][1].basis)
            + rank_of(spans[j][1].basis)
            - rank_of(list(spans[i][1].basis) + list(spans[j][1].basis))
        )
        worst = max(worst, meet)
print(f"largest pairwise intersection rank: {worst} (at most k-1 = 2)")
