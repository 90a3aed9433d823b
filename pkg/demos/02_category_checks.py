"""Unique factorisation, composition, and associativity, checked by force.

The paths of a tile-generated graph form a category: paths with matching
endpoint windows compose, and every path splits uniquely at every
intermediate degree.  Nothing here is taken on trust; the script composes
edges by corner-filling, slices the results back apart, and compares
exhaustive enumerations.

Run from the repository root:  python3 demos/02_category_checks.py
"""

import json
from pathlib import Path

import tilegraphs as tg
from tilegraphs.checks import run_axiom_suite
from tilegraphs.serialize import basic_data_from_dict

DATA = Path(__file__).resolve().parent.parent / "data"

bd = basic_data_from_dict(json.loads((DATA / "ledrappier.json").read_text()))
sk = tg.build_skeleton(bd)

# -- composing two edges -------------------------------------------------

blue = sk.edge_path("blue", 0, 1)
red = sk.edge_path("red", 1, 2)
print("blue edge:", blue.as_dict())
print("red edge:", red.as_dict())

square_path = tg.compose(bd, blue, red)
print("their composite (degree (1,1)):", square_path.as_dict())

# Slicing recovers both operands: the factorisation property in action.
assert tg.factorize(square_path, (0, 0), (1, 0)).labels == blue.labels
assert tg.factorize(square_path, (1, 0), (1, 1)).labels == red.labels
print("slices recover the operands: OK")
print()

# -- unique factorisation by brute force ----------------------------------

# For each degree-(1,1) path, count the composable (blue, red) pairs that
# multiply back to it.  The count is 1 every time.

paths = tg.all_paths(bd, (1, 1), skeleton=sk)
for lam in paths:
    hits = 0
    for mu in tg.all_paths(bd, (1, 0), skeleton=sk):
        for nu in tg.all_paths(bd, (0, 1), skeleton=sk):
            if mu.source_vertex == nu.range_vertex:
                if tg.compose(bd, mu, nu).labels == lam.labels:
                    hits += 1
    assert hits == 1
print(f"all {len(paths)} degree-(1,1) paths factor uniquely: OK")
print()

# -- the full axiom battery ------------------------------------------------

for result in run_axiom_suite(bd, degree=(2, 2)):
    print(f"{'PASS' if result.ok else 'FAIL'} {result.name}: {result.detail}")
