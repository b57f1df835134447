"""Grow a self-orthogonal code by one coordinate using a deep coset.

The bundled [12,6,4] code equals its own dual.  A coset leader at the
covering radius sits as far from the code as possible, so augmenting by
one keeps the distance up while the hull drops by exactly one.
"""

from hullforge import BitVector, load_corpus
from hullforge.corpus import by_label

entries = by_label(load_corpus())
b12 = entries["B12"].code()

report = b12.hull()
print(f"start: [{b12.n},{b12.k},{b12.min_distance()}] hull {report.h},"
      f" self-dual {report.is_self_dual}")

rho = b12.covering_radius()
print(f"covering radius: {rho}")

leader = BitVector.from01("000000010101")
profile = b12.coset_min_weight(leader)
print(f"coset of {leader.to01()} has weight {profile.min_weight}")

grown = b12.augment(leader)
print(f"augmented: [{grown.n},{grown.k},{grown.min_distance()}]"
      f" hull {grown.hull_dim()}")
