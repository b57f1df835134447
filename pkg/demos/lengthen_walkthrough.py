"""Lengthen a [10,6,3] code by two coordinates while steering its hull.

Walks the bundled seed through construction III twice: once onto a
hull-2 child, once onto the hull-3 child with distance 4.
"""

from hullforge import (
    BitVector,
    are_equivalent,
    classify_extension,
    construct,
    load_corpus,
)
from hullforge.corpus import by_label

entries = by_label(load_corpus())
seed = entries["seed_10_6_3"].code()

print(f"seed: [{seed.n},{seed.k},{seed.min_distance()}] hull {seed.hull_dim()}")
for row in seed.gen.to_strings():
    print(" ", row)

children = []
for bits in ("0000011000", "1111111111"):
    x = BitVector.from01(bits)
    kind = classify_extension(seed, x)
    res = construct(seed, x, kind)
    child = res.child
    children.append(child)
    print(f"\nx = {bits}  ->  construction {kind}")
    print(
        f"child: [{child.n},{child.k},{res.actual_distance}]"
        f" hull {res.actual_hull}"
    )
    print(
        f"predicted distances {sorted(res.distance_prediction)},"
        f" coset weight {res.coset_weight}"
    )
    H = res.parity_check
    ok = all(
        (g & h).bit_count() % 2 == 0
        for g in child.gen.row_bits
        for h in H.row_bits
    )
    print(f"parity check rows {H.nrows}, G H^T = 0: {ok}")

# different hull dimensions rule out column equivalence immediately
verdict = are_equivalent(children[0], children[1])
print("\nhull 2 vs hull 3 children equivalent:", verdict.equivalent)
print("second child matches the bundled [12,7,4]:",
      children[1].same_row_space(entries["Csecond_12_7_4"].code()))
