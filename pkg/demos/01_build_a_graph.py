"""From a labelled tile to a bicoloured graph, step by step.

Start with the smallest interesting ingredients: the three-cell corner tile,
the binary alphabet, and two bijections (identity and flip) indexed by the
symbol in the tile's lower-left cell.  That is enough to generate a rank-2
graph with four vertices; this script walks through every construction
stage and prints what it finds.

Run from the repository root:  python3 demos/01_build_a_graph.py
"""

import tilegraphs as tg

# -- the tile ----------------------------------------------------------------

tile = tg.parse_tile([(0, 0), (1, 0), (0, 1)])
print("tile cells:", tile.sorted_points)
print("corner extent:", (tile.c1, tile.c2))
print("reduced set:", sorted(tile.reduced))
print()

# The reduced set drops the two extreme corners; patterns live there.
# With one reduced cell and two symbols there are two patterns, so the
# data needs two bijections:

bd = tg.validate_basic_data(
    tile,
    ["0", "1"],
    {
        "0": ["0", "1"],  # pattern "0": identity
        "1": ["1", "0"],  # pattern "1": flip
    },
)

# -- the vertices ------------------------------------------------------------

# A vertex is a full labelling of the tile: the pattern fills the reduced
# set, a chosen symbol sits at the upper-left corner, and the bijection for
# that pattern stamps the bottom-right corner.

print("vertices (pattern | top -> full labelling):")
for v in tg.enumerate_vertices(bd):
    print(f"  {tg.pattern_key(v.pattern)} | {v.top}  ->  {v.as_dict()}")
print()

# -- the skeleton ------------------------------------------------------------

# Two labelled tiles are joined by a blue (degree e1) edge when they agree
# on the one-cell horizontal overlap, red (degree e2) likewise vertically.

sk = tg.build_skeleton(bd)
print(f"{len(sk.blue)} blue edges, {len(sk.red)} red edges")
print("each vertex has",
      len(sk.out_neighbours("blue", 0)), "blue and",
      len(sk.out_neighbours("red", 0)), "red successors")
print()

print("DOT rendering (blue solid, red dashed):")
print(tg.to_dot(sk))

# -- paths -------------------------------------------------------------------

# A degree-(2,1) path is a labelling of the swept region whose every tile
# window is a vertex.  Enumeration is exhaustive and deterministic.

v0 = sk.vertices[0]
paths = tg.enumerate_paths(bd, v0, (2, 1), skeleton=sk)
print(f"paths of degree (2,1) rooted at the all-zero vertex: {len(paths)}")
print("the first one:", paths[0].as_dict())
