"""Finite combinatorial globular complexes of dimension at most two.

A complex is presented by a finite set of named states (the 0-skeleton),
directed edges between states (attached directed intervals), and squares:
2-cells whose boundary is a pair of parallel edge paths sharing both
endpoints.  The directed graph of states and edges must be acyclic, which
keeps every path set finite.

Execution paths are nonempty composable edge-id sequences, represented as
plain tuples of edge ids.  A square induces a *move* on paths: replacing
one contiguous occurrence of its left boundary by its right boundary (or
vice versa), leaving the rest of the path fixed.  Connected components
under moves are the homotopy classes of paths at this truncation.

Morphisms map states to states and edges to nonempty paths, preserving
endpoints and sending the two boundaries of every square into the same
move class of the codomain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import InvalidComplexError, UnknownIdError
from .unionfind import DisjointSets

StateId = str
ExecPath = tuple[str, ...]

# realized path ids join edge ids with this; validation rejects it in edge ids
PATH_SEPARATOR = "*"


@dataclass(frozen=True)
class Edge:
    """A directed interval attached between two states."""

    id: str
    src: StateId
    tgt: StateId
    label: Optional[str] = None


@dataclass(frozen=True)
class Square:
    """A 2-cell: two parallel edge paths with common source and target."""

    id: str
    left: ExecPath
    right: ExecPath


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok and not self.warnings:
            return "ok"
        lines = [f"violation: {v}" for v in self.violations]
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


@dataclass(frozen=True)
class GlobularComplex:
    """Finite presentation of a globular complex (dimension <= 2).

    `finals` and `init` are analysis annotations used by deadlock checks;
    they carry no geometric meaning.  Declaration order is preserved so
    documents round-trip; all operations iterate in sorted order.
    """

    states: tuple[StateId, ...]
    edges: tuple[Edge, ...] = ()
    squares: tuple[Square, ...] = ()
    finals: tuple[StateId, ...] = ()
    init: Optional[StateId] = None

    @cached_property
    def state_set(self) -> frozenset[str]:
        return frozenset(self.states)

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def square_map(self) -> dict[str, Square]:
        return {q.id: q for q in self.squares}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        by_src: dict[str, list[Edge]] = {s: [] for s in self.states}
        for e in self.edges:
            if e.src in by_src:
                by_src[e.src].append(e)
        return {s: tuple(sorted(es, key=lambda e: e.id)) for s, es in by_src.items()}

    def path_source(self, path: ExecPath) -> StateId:
        return self.edge_map[path[0]].src

    def path_target(self, path: ExecPath) -> StateId:
        return self.edge_map[path[-1]].tgt

    def is_exec_path(self, path: Iterable[str]) -> bool:
        """Nonempty, every id resolves, consecutive edges composable."""
        path = tuple(path)
        if not path or any(e not in self.edge_map for e in path):
            return False
        return all(
            self.edge_map[a].tgt == self.edge_map[b].src
            for a, b in zip(path, path[1:])
        )


def validate_complex(c: GlobularComplex) -> ValidationReport:
    """Report-style well-formedness check; never raises."""
    violations: list[str] = []
    warnings: list[str] = []

    seen_states = set()
    for s in c.states:
        if s in seen_states:
            violations.append(f"duplicate state: {s}")
        seen_states.add(s)

    seen_edges = set()
    for e in c.edges:
        if e.id in seen_edges:
            violations.append(f"duplicate edge id: {e.id}")
        seen_edges.add(e.id)
        if PATH_SEPARATOR in e.id:
            violations.append(f"reserved character '{PATH_SEPARATOR}' in edge id: {e.id}")
        for endpoint, role in ((e.src, "source"), (e.tgt, "target")):
            if endpoint not in seen_states:
                violations.append(f"dangling endpoint: {role} {endpoint} of edge {e.id}")

    cycle = _find_cycle(c)
    if cycle is not None:
        violations.append("cyclic 1-skeleton: " + " -> ".join(cycle))

    seen_squares = set()
    for q in c.squares:
        if q.id in seen_squares:
            violations.append(f"duplicate square id: {q.id}")
        seen_squares.add(q.id)
        violations.extend(_square_violations(c, q))
        if tuple(q.left) == tuple(q.right):
            warnings.append(f"degenerate square (no-op): {q.id}")

    for s in c.finals:
        if s not in c.state_set:
            violations.append(f"unknown final state: {s}")
    if c.init is not None and c.init not in c.state_set:
        violations.append(f"unknown initial state: {c.init}")

    return ValidationReport(tuple(violations), tuple(warnings))


def _square_violations(c: GlobularComplex, q: Square) -> list[str]:
    out = []
    sides = {"left": tuple(q.left), "right": tuple(q.right)}
    for name, side in sides.items():
        if not side:
            out.append(f"bad square boundary: square {q.id} has empty {name} side")
        elif any(e not in c.edge_map for e in side):
            missing = sorted(e for e in side if e not in c.edge_map)
            out.append(
                f"bad square boundary: square {q.id} {name} side uses unknown edges "
                + ", ".join(missing)
            )
        elif not c.is_exec_path(side):
            out.append(f"bad square boundary: square {q.id} {name} side is not composable")
    if not out:
        if c.path_source(sides["left"]) != c.path_source(sides["right"]) or (
            c.path_target(sides["left"]) != c.path_target(sides["right"])
        ):
            out.append(f"bad square boundary: square {q.id} sides do not share endpoints")
    return out


def _find_cycle(c: GlobularComplex) -> Optional[list[str]]:
    """A directed cycle through the edge graph, or None.  Tolerates dangling ids."""
    adjacent: dict[str, list[str]] = {}
    for e in c.edges:
        adjacent.setdefault(e.src, []).append(e.tgt)
    color: dict[str, int] = {}
    stack_trace: list[str] = []

    def visit(u: str) -> Optional[list[str]]:
        color[u] = 1
        stack_trace.append(u)
        for v in sorted(adjacent.get(u, ())):
            if color.get(v, 0) == 1:
                return stack_trace[stack_trace.index(v):] + [v]
            if color.get(v, 0) == 0:
                found = visit(v)
                if found:
                    return found
        stack_trace.pop()
        color[u] = 2
        return None

    for u in sorted(adjacent):
        if color.get(u, 0) == 0:
            found = visit(u)
            if found:
                return found
    return None


def require_valid(c: GlobularComplex) -> None:
    report = validate_complex(c)
    if not report.ok:
        raise InvalidComplexError(report.violations)


def glob_discrete(labels: Iterable[str]) -> GlobularComplex:
    """The globe on a finite label set: states 0, 1 and one edge per label.

    The one-label case is the directed interval.  The empty set is
    rejected; a globe needs something to cone over.
    """
    names = sorted(set(labels))
    if not names:
        raise ValueError("glob_discrete: label set must be nonempty")
    return GlobularComplex(
        states=("0", "1"),
        edges=tuple(Edge(id=name, src="0", tgt="1") for name in names),
    )


def enumerate_paths(c: GlobularComplex, src: StateId, tgt: StateId) -> list[ExecPath]:
    """All execution paths from src to tgt, in lexicographic edge-id order.

    Raises UnknownIdError for unknown endpoints and InvalidComplexError if
    a directed cycle is encountered while walking.
    """
    for s in (src, tgt):
        if s not in c.state_set:
            raise UnknownIdError(f"unknown state: {s}")
    found: list[ExecPath] = []
    on_stack: set[str] = set()

    def walk(state: str, prefix: list[str]) -> None:
        if state in on_stack:
            raise InvalidComplexError([f"cyclic 1-skeleton: revisited {state}"])
        if state == tgt and prefix:
            found.append(tuple(prefix))
        on_stack.add(state)
        for e in c.out_edges.get(state, ()):
            prefix.append(e.id)
            walk(e.tgt, prefix)
            prefix.pop()
        on_stack.discard(state)

    walk(src, [])
    return sorted(found)


def square_move_neighbors(c: GlobularComplex, path: ExecPath) -> set[ExecPath]:
    """Paths one square move away: one contiguous boundary occurrence swapped."""
    path = tuple(path)
    neighbors: set[ExecPath] = set()
    for q in c.squares:
        for a, b in ((tuple(q.left), tuple(q.right)), (tuple(q.right), tuple(q.left))):
            n = len(a)
            for i in range(len(path) - n + 1):
                if path[i:i + n] == a:
                    cand = path[:i] + b + path[i + n:]
                    if cand != path:
                        neighbors.add(cand)
    return neighbors


def path_classes(
    c: GlobularComplex, src: StateId, tgt: StateId
) -> tuple[tuple[ExecPath, ...], ...]:
    """Partition of enumerate_paths(c, src, tgt) under square moves.

    Moves preserve endpoints, so the partition is well defined on each
    endpoint pair.  Blocks and their members come out sorted.
    """
    paths = enumerate_paths(c, src, tgt)
    classes = DisjointSets(paths)
    for p in paths:
        for q in square_move_neighbors(c, p):
            classes.union(p, q)
    return tuple(classes.blocks())


def same_move_class(c: GlobularComplex, a: ExecPath, b: ExecPath) -> bool:
    """Whether two paths are connected by square moves (BFS from `a`)."""
    a, b = tuple(a), tuple(b)
    if a == b:
        return True
    seen = {a}
    queue = deque([a])
    while queue:
        p = queue.popleft()
        for n in square_move_neighbors(c, p):
            if n == b:
                return True
            if n not in seen:
                seen.add(n)
                queue.append(n)
    return False


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class ComplexMorphism:
    """state_map sends states to states; edge_map sends edges to nonempty paths."""

    state_map: Mapping[str, str] = field(default_factory=dict)
    edge_map: Mapping[str, ExecPath] = field(default_factory=dict)

    def path_image(self, path: Iterable[str]) -> ExecPath:
        out: list[str] = []
        for e in path:
            out.extend(self.edge_map[e])
        return tuple(out)


def identity_complex_morphism(c: GlobularComplex) -> ComplexMorphism:
    return ComplexMorphism(
        state_map={s: s for s in c.states},
        edge_map={e.id: (e.id,) for e in c.edges},
    )


def compose_complex_morphisms(
    outer: ComplexMorphism, inner: ComplexMorphism
) -> ComplexMorphism:
    """outer after inner: edges map through inner first, then edgewise through outer."""
    return ComplexMorphism(
        state_map={s: outer.state_map[t] for s, t in inner.state_map.items()},
        edge_map={e: outer.path_image(p) for e, p in inner.edge_map.items()},
    )


def complex_morphism_violations(
    f: ComplexMorphism, dom: GlobularComplex, cod: GlobularComplex
) -> list[str]:
    """Why f fails to be a morphism dom -> cod; empty when it is one."""
    out: list[str] = []
    for s in dom.states:
        image = f.state_map.get(s)
        if image is None:
            out.append(f"state_map undefined on {s}")
        elif image not in cod.state_set:
            out.append(f"state_map sends {s} outside the codomain: {image}")
    for e in dom.edges:
        image = f.edge_map.get(e.id)
        if image is None:
            out.append(f"edge_map undefined on {e.id}")
            continue
        image = tuple(image)
        if not image:
            out.append(f"contracted edge: {e.id} maps to the empty path")
            continue
        if not cod.is_exec_path(image):
            out.append(f"edge {e.id} maps to a non-path: {image}")
            continue
        if f.state_map.get(e.src) != cod.path_source(image) or (
            f.state_map.get(e.tgt) != cod.path_target(image)
        ):
            out.append(f"endpoint mismatch on edge {e.id}")
    if out:
        return out
    for q in dom.squares:
        left = f.path_image(q.left)
        right = f.path_image(q.right)
        if not same_move_class(cod, left, right):
            out.append(f"square {q.id} not preserved: image boundaries in distinct classes")
    return out


def is_complex_morphism(
    f: ComplexMorphism, dom: GlobularComplex, cod: GlobularComplex
) -> bool:
    """True iff endpoint compatibility, non-contraction, and square preservation hold."""
    return not complex_morphism_violations(f, dom, cod)


# ---------------------------------------------------------------------------
# subdivision


def subdivide_edge(
    c: GlobularComplex, edge_id: str
) -> tuple[GlobularComplex, ComplexMorphism]:
    """Split one edge in two across a fresh state.

    Returns the refined complex and the canonical morphism into it, which
    sends the split edge to the two-edge chain and fixes everything else.
    Square boundaries mentioning the edge are rewritten in place.
    """
    edge = c.edge_map.get(edge_id)
    if edge is None:
        raise UnknownIdError(f"unknown edge: {edge_id}")

    mid = _fresh(f"{edge_id}_mid", c.state_set)
    taken = set(c.edge_map)
    first = _fresh(f"{edge_id}_a", taken)
    taken.add(first)
    second = _fresh(f"{edge_id}_b", taken)

    def rewrite(path: ExecPath) -> ExecPath:
        out: list[str] = []
        for e in path:
            out.extend((first, second) if e == edge_id else (e,))
        return tuple(out)

    edges: list[Edge] = []
    for e in c.edges:
        if e.id == edge_id:
            edges.append(Edge(id=first, src=edge.src, tgt=mid, label=edge.label))
            edges.append(Edge(id=second, src=mid, tgt=edge.tgt))
        else:
            edges.append(e)

    refined = GlobularComplex(
        states=c.states + (mid,),
        edges=tuple(edges),
        squares=tuple(
            Square(id=q.id, left=rewrite(q.left), right=rewrite(q.right))
            for q in c.squares
        ),
        finals=c.finals,
        init=c.init,
    )
    morphism = ComplexMorphism(
        state_map={s: s for s in c.states},
        edge_map={
            e.id: ((first, second) if e.id == edge_id else (e.id,)) for e in c.edges
        },
    )
    return refined, morphism


def _fresh(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "_"
    return name
