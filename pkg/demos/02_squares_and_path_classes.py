"""
Squares, moves, and homotopy classes of paths
=============================================

A square declares two parallel edge paths interchangeable; replacing one
contiguous occurrence of one boundary by the other is a *move*.  Paths
connected by chains of moves form one dihomotopy class: they are the
same computation up to reordering of independent steps.
"""

from globflow import (
    Edge,
    GlobularComplex,
    Square,
    path_classes,
    square_move_neighbors,
    subdivide_edge,
)

# the commuting 2x2 grid: two processes, one step each, no interaction
grid = GlobularComplex(
    states=("00", "01", "10", "11"),
    edges=(
        Edge("a", "00", "10"),
        Edge("b", "10", "11"),
        Edge("c", "00", "01"),
        Edge("d", "01", "11"),
    ),
    squares=(Square("q", ("a", "b"), ("c", "d")),),
)

# with the square, the two corner-to-corner routes are one class
print("classes with the square:")
for block in path_classes(grid, "00", "11"):
    print("  ", block)

# drop the square and the routes become inequivalent schedules
bare = GlobularComplex(states=grid.states, edges=grid.edges)
print("classes without it:", len(path_classes(bare, "00", "11")))

# moves rewrite inside longer paths too: extend the grid by a tail edge
tailed = GlobularComplex(
    states=grid.states + ("end",),
    edges=grid.edges + (Edge("t", "11", "end"),),
    squares=grid.squares,
)
print("\nneighbors of a.b.t under the square move:")
print("  ", square_move_neighbors(tailed, ("a", "b", "t")))

# subdividing an edge refines the grid without changing the class count
refined, canonical = subdivide_edge(grid, "a")
print("\nafter subdividing edge a:")
print("  a maps to", canonical.edge_map["a"])
print("  classes corner to corner:", len(path_classes(refined, "00", "11")))
