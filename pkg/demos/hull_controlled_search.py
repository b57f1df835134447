"""Search for good codes under a hull constraint, two ways.

First sweeps every extension vector of a bundled seed and keeps the
children that reach a wanted hull and distance.  Then settles small
parameter cells outright by enumerating all systematic generator
matrices.
"""

from hullforge import (
    best_by_sweep,
    exhaustive_codes,
    hull_census,
    load_corpus,
    sweep_extensions,
)
from hullforge.corpus import by_label
from hullforge.search import format_claim, format_sweep_record

entries = by_label(load_corpus())
seed = entries["seed_10_6_3"].code()

records = sweep_extensions(seed, target_h=2, min_d=3, seed_id="seed_10_6_3")
print(f"extensions of the [10,6,3] seed reaching hull 2, d >= 3:"
      f" {len(records)}")
for rec in records[:3]:
    print(" ", format_sweep_record(rec))

# one seed is enough for a lower bound on the best hull-5 [12,6] code
claim = best_by_sweep([entries["D4_10_5_4"].code()], target_h=5)
print("\nbest child over the bundled [10,5,4] seed:")
print(" ", format_claim(claim))

# small cells can be settled exactly, not just bounded
for n, k, h in [(7, 3, 3), (9, 5, 3), (8, 4, 2)]:
    claim = exhaustive_codes(n, k, h)
    print(f"\nsettled ({n},{k}) at hull {h}:")
    print(" ", format_claim(claim))

census = hull_census(6, 3)
print("\nhull census over all [6,3] codes:",
      {h: census[h] for h in sorted(census)})
