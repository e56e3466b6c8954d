"""
Globes, intervals, and execution paths
======================================

A globular complex is a directed state space: named states, directed
edges between them, and (later) squares that declare when two routes
commute.  This script builds the smallest complexes and enumerates
their execution paths.
"""

from globflow import (
    Edge,
    GlobularComplex,
    enumerate_paths,
    glob_discrete,
    validate_complex,
)

# the directed interval: two states and one edge from 0 to 1
interval = glob_discrete(["*"])
print("interval:", interval.states, [e.id for e in interval.edges])

# a globe over several labels is a bundle of parallel edges 0 -> 1
globe = glob_discrete(["a", "b", "c"])
print("globe edges:", [(e.id, e.src, e.tgt) for e in globe.edges])

# every path from 0 to 1 uses exactly one of the parallel edges
print("paths 0 -> 1:", enumerate_paths(globe, "0", "1"))

# complexes are plain data; the validator reports problems instead of raising
broken = GlobularComplex(states=("u",), edges=(Edge("e", "u", "missing"),))
print("\nbroken complex report:")
print(validate_complex(broken))

# directed cycles are rejected: path sets must stay finite
cyclic = GlobularComplex(
    states=("u", "v"),
    edges=(Edge("go", "u", "v"), Edge("back", "v", "u")),
)
print("\ncyclic complex report:")
print(validate_complex(cyclic))

# a small diamond: two routes from start to end, plus a shortcut
diamond = GlobularComplex(
    states=("start", "left", "right", "end"),
    edges=(
        Edge("l1", "start", "left"),
        Edge("l2", "left", "end"),
        Edge("r1", "start", "right"),
        Edge("r2", "right", "end"),
        Edge("skip", "start", "end"),
    ),
)
print("\ndiamond paths start -> end:")
for path in enumerate_paths(diamond, "start", "end"):
    print("  ", " . ".join(path))
