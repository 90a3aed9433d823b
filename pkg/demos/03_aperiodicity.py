"""Aperiodicity certificates, flat-tile periodicity, and the modular rules.

A breaking cycle is a finite certificate read off the vertex set alone:
distinct vertices constant on the relevant overlap, chained by unit edges
into a cycle or all carrying self-loops.  When one exists the graph is
aperiodic and the simplicity report lights up; flat tiles are periodic; in
between the verdict honestly stays Unknown, backed by bounded witness
searches.

Run from the repository root:  python3 demos/03_aperiodicity.py
"""

import json
from pathlib import Path

import tilegraphs as tg
from tilegraphs.serialize import basic_data_from_dict, prw_from_dict, report_to_dict

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return json.loads((DATA / name).read_text())


# -- certificates for the corner-tile graph ---------------------------------

bd = basic_data_from_dict(load("ledrappier.json"))
sk = tg.build_skeleton(bd)

for colour in ("blue", "red"):
    for symbol in bd.alphabet.symbols:
        cert = tg.find_breaking_cycle(bd, colour, symbol, skeleton=sk)
        kind = f"kind {cert.kind}, {len(cert.vertices)} vertices" if cert else "none"
        print(f"{colour} {symbol}-breaking cycle: {kind}")
print()

report = tg.simplicity_report(bd, skeleton=sk)
print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
print()

# -- a flat tile is periodic -------------------------------------------------

flat = basic_data_from_dict(load("flat.json"))
flat_sk = tg.build_skeleton(flat)
verdict = tg.aperiodicity_verdict(flat, skeleton=flat_sk)
print("flat tile verdict:", verdict.status.value)
print("  ", verdict.witness_note)

# The blue subgraph is a permutation; its cycle structure is the period.
cycles = tg.colour_subgraph_cycles(flat_sk, "blue")
print("blue cycle lengths:", sorted(len(c) for c in cycles))

# No path distinguishes offset (3,0) from the origin: the witness search
# comes back empty at every searched depth.
v = flat_sk.vertices[0]
witness = tg.periodicity_witness_search(flat, v, (3, 0), (0, 0), depth=(4, 2), skeleton=flat_sk)
print("witness for offset (3,0) vs origin:", witness)
print()

# -- modular rules -----------------------------------------------------------

# The corner-tile data is exactly the import of the all-ones weight rule
# mod 2; the rule-level aperiodicity check and the certificate search agree.
params = prw_from_dict(load("prw-ledrappier.json"))
check, cert = tg.cross_validate_prw(params)
print("all-ones rule: rule-level check:", check, "| certificate:",
      f"{cert.colour} {cert.symbol}-breaking" if cert else None)

# A rule with weight 0 at the origin: the rule-level check is silent, yet
# the imported data still carries a breaking cycle.
params = prw_from_dict(load("prw-rem3.json"))
check, cert = tg.cross_validate_prw(params)
print("zero-origin rule: rule-level check:", check, "| certificate:",
      f"{cert.colour} {cert.symbol}-breaking" if cert else None)
