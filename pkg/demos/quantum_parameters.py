"""Turn classical hull data into entanglement-assisted quantum codes.

Every [n,k,d] code with hull dimension h yields an [[n, k-h, d; n-k-h]]
quantum code, and its dual yields the partner with the roles of logical
qubits and entangled pairs swapped.
"""

from hullforge import derive, load_corpus, singleton_gap, tabulate
from hullforge.corpus import by_label
from hullforge.eaqecc import format_quantum_table

entries = by_label(load_corpus())

for label in ("Hamming_7_4_3", "G1_12_6_4", "G1_13_4_6", "D3_9_5_3"):
    pair = derive(entries[label].code())
    p = pair.primal
    print(f"{label}: {p}, gap {singleton_gap(p)},"
          f" MDS {p.is_mds}, dual side {pair.dual_side}")

# a whole table column at once: hull-1 witnesses of length 12
h1_codes = [
    e.code()
    for e in entries.values()
    if e.claimed_h == 1 and e.claimed_n == 12
]
table = tabulate(h1_codes, h=1)
print("\nderived quantum parameters, hull-1 witnesses, n = 12:")
print(format_quantum_table(table))
