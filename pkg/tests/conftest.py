"""Shared builders for the test suite.

Random complexes are generated over an index-ordered state set, so
acyclicity holds by construction; squares are sampled from actual pairs of
parallel paths, so every generated complex validates.
"""

import random
from itertools import combinations

import pytest

from globflow import (
    Edge,
    GlobularComplex,
    Square,
    enumerate_paths,
)


def make_interval():
    return GlobularComplex(states=("0", "1"), edges=(Edge("e", "0", "1"),))


def make_chain(n=2):
    """A line of n edges: s0 -> s1 -> ... -> sn."""
    return GlobularComplex(
        states=tuple(f"s{i}" for i in range(n + 1)),
        edges=tuple(Edge(f"e{i}", f"s{i}", f"s{i+1}") for i in range(n)),
    )


def make_grid(with_square=True):
    """The commuting 2x2 grid: two edge paths 00 -> 11, optionally one square."""
    edges = (
        Edge("a", "00", "10"),
        Edge("b", "10", "11"),
        Edge("c", "00", "01"),
        Edge("d", "01", "11"),
    )
    squares = (Square("q", ("a", "b"), ("c", "d")),) if with_square else ()
    return GlobularComplex(states=("00", "01", "10", "11"), edges=edges, squares=squares)


def make_parallel_pair(with_square=True):
    """Two parallel edges 0 -> 1, optionally connected by a square."""
    edges = (Edge("a", "0", "1"), Edge("b", "0", "1"))
    squares = (Square("q", ("a",), ("b",)),) if with_square else ()
    return GlobularComplex(states=("0", "1"), edges=edges, squares=squares)


def random_complex(
    rng: random.Random,
    max_states=8,
    max_edges=12,
    max_squares=4,
    min_edges=0,
):
    """A random valid complex within the given size bounds."""
    n = rng.randint(2, max_states)
    states = tuple(f"s{i}" for i in range(n))
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(slots)
    m = rng.randint(min(min_edges, len(slots)), min(max_edges, len(slots)))
    edges = tuple(
        Edge(f"e{k}", f"s{i}", f"s{j}") for k, (i, j) in enumerate(sorted(slots[:m]))
    )
    skeleton = GlobularComplex(states=states, edges=edges)

    parallel = []
    for a in range(n):
        for b in range(a + 1, n):
            paths = enumerate_paths(skeleton, f"s{a}", f"s{b}")
            if len(paths) >= 2:
                parallel.extend(combinations(paths, 2))
                if len(parallel) > 64:
                    break
        if len(parallel) > 64:
            break
    rng.shuffle(parallel)
    squares = tuple(
        Square(f"q{k}", left, right)
        for k, (left, right) in enumerate(parallel[: rng.randint(0, max_squares)])
    )
    return GlobularComplex(states=states, edges=edges, squares=squares)


@pytest.fixture
def rng():
    return random.Random(20240811)
