"""From globular complexes to flows.

The realization of a complex keeps the same 0-skeleton and takes *all*
execution paths as its path set, with composition given by concatenation of
edge sequences and adjacency given by single square moves.  A composite's
path id is its edge-id sequence joined with "*", so associativity holds by
construction and never depends on table bookkeeping.

Realization extends cell by cell: attaching an edge only creates the paths
running through it, attaching a square only contributes its move pairs.
`IncrementalRealizer` exploits that to keep a realization current while a
complex is being built, and `incremental_realize` checks a single step.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Iterable, Union

from .complexes import (
    PATH_SEPARATOR,
    ComplexMorphism,
    Edge,
    ExecPath,
    GlobularComplex,
    Square,
    complex_morphism_violations,
    require_valid,
)
from .errors import InvalidAttachmentError, InvalidMorphismError
from .flows import FiniteFlow, FlowMorphism


def path_id(seq: Iterable[str]) -> str:
    """The canonical flow path id of an edge-id sequence."""
    return PATH_SEPARATOR.join(seq)


def all_exec_paths(c: GlobularComplex) -> list[ExecPath]:
    """Every execution path of the complex, over all endpoint pairs, sorted."""
    found: list[ExecPath] = []

    def walk(state: str, prefix: list[str]) -> None:
        for e in c.out_edges.get(state, ()):
            prefix.append(e.id)
            found.append(tuple(prefix))
            walk(e.tgt, prefix)
            prefix.pop()

    for state in sorted(c.states):
        walk(state, [])
    return sorted(found)


def _move_index(squares) -> dict[str, list[tuple[ExecPath, ExecPath]]]:
    """Rewrites (lhs -> rhs), both orientations, indexed by leading edge id."""
    index: dict[str, list[tuple[ExecPath, ExecPath]]] = {}
    for q in squares:
        left, right = tuple(q.left), tuple(q.right)
        if left == right:
            continue  # degenerate square moves nothing
        index.setdefault(left[0], []).append((left, right))
        index.setdefault(right[0], []).append((right, left))
    return index


def _moves_of(seq: ExecPath, index) -> set[ExecPath]:
    out: set[ExecPath] = set()
    for i, head in enumerate(seq):
        for lhs, rhs in index.get(head, ()):
            if seq[i:i + len(lhs)] == lhs:
                cand = seq[:i] + rhs + seq[i + len(lhs):]
                if cand != seq:
                    out.add(cand)
    return out


def realize(c: GlobularComplex) -> FiniteFlow:
    """The flow of a complex: same states, all execution paths, square moves.

    The complex must validate; acyclicity keeps the path set finite.
    """
    require_valid(c)
    seqs = all_exec_paths(c)
    path_ends = {
        path_id(seq): (c.path_source(seq), c.path_target(seq)) for seq in seqs
    }

    by_src: dict[str, list[ExecPath]] = {}
    by_tgt: dict[str, list[ExecPath]] = {}
    for seq in seqs:
        by_src.setdefault(c.path_source(seq), []).append(seq)
        by_tgt.setdefault(c.path_target(seq), []).append(seq)

    composition = {}
    for state in c.states:
        for x in by_tgt.get(state, ()):
            for y in by_src.get(state, ()):
                composition[(path_id(x), path_id(y))] = path_id(x + y)

    index = _move_index(c.squares)
    adjacency = set()
    for seq in seqs:
        me = path_id(seq)
        for other in _moves_of(seq, index):
            adjacency.add((me, path_id(other)))

    return FiniteFlow(
        skeleton=c.states,
        path_ends=path_ends,
        composition=composition,
        adjacency=adjacency,
    )


def realize_morphism(
    m: ComplexMorphism, dom: GlobularComplex, cod: GlobularComplex
) -> FlowMorphism:
    """The flow morphism induced on realizations: substitute edgewise, concatenate."""
    violations = complex_morphism_violations(m, dom, cod)
    if violations:
        raise InvalidMorphismError("not a complex morphism: " + "; ".join(violations))
    return FlowMorphism(
        state_map=dict(m.state_map),
        path_map={
            path_id(seq): path_id(m.path_image(seq)) for seq in all_exec_paths(dom)
        },
    )


# ---------------------------------------------------------------------------
# incremental realization

Cell = Union[str, Edge, Square]


class IncrementalRealizer:
    """Keeps a complex and its realization in sync while cells are attached.

    Attaching a state only grows the skeleton.  Attaching an edge creates
    exactly the paths factoring through it (old path into its source, the
    edge, old path out of its target) and the composites and moves they
    take part in.  Attaching a square leaves the path set alone and adds
    the move pairs for its two boundaries.  Nothing already computed is
    revisited.
    """

    def __init__(self, c: GlobularComplex):
        require_valid(c)
        self._complex = c
        self._flow = realize(c)
        self._seqs: dict[str, ExecPath] = {path_id(s): s for s in all_exec_paths(c)}

    @property
    def complex(self) -> GlobularComplex:
        return self._complex

    @property
    def flow(self) -> FiniteFlow:
        return self._flow

    def attach(self, cell: Cell) -> FiniteFlow:
        if isinstance(cell, str):
            return self.attach_state(cell)
        if isinstance(cell, Edge):
            return self.attach_edge(cell)
        if isinstance(cell, Square):
            return self.attach_square(cell)
        raise InvalidAttachmentError(f"not an attachable cell: {cell!r}")

    def attach_state(self, name: str) -> FiniteFlow:
        if name in self._complex.state_set:
            raise InvalidAttachmentError(f"state already present: {name}")
        self._complex = replace(self._complex, states=self._complex.states + (name,))
        self._flow = FiniteFlow(
            skeleton=self._flow.skeleton | {name},
            path_ends=self._flow.path_ends,
            composition=self._flow.composition,
            adjacency=self._flow.adjacency,
        )
        return self._flow

    def attach_edge(self, edge: Edge) -> FiniteFlow:
        c, flow = self._complex, self._flow
        if edge.id in c.edge_map:
            raise InvalidAttachmentError(f"edge id already present: {edge.id}")
        if PATH_SEPARATOR in edge.id:
            raise InvalidAttachmentError(f"reserved character in edge id: {edge.id}")
        for endpoint in (edge.src, edge.tgt):
            if endpoint not in c.state_set:
                raise InvalidAttachmentError(f"dangling endpoint: {endpoint}")
        if edge.src == edge.tgt or flow.paths_between(edge.tgt, edge.src):
            raise InvalidAttachmentError(
                f"attaching {edge.id} would close a directed cycle"
            )

        prefixes = [()] + [self._seqs[p] for p in flow.paths_into(edge.src)]
        suffixes = [()] + [self._seqs[p] for p in flow.paths_from(edge.tgt)]
        new_seqs = [
            pre + (edge.id,) + suf for pre in sorted(prefixes) for suf in sorted(suffixes)
        ]

        path_ends = dict(flow.path_ends)
        seqs = self._seqs
        src_index: dict[str, list[str]] = {}
        tgt_index: dict[str, list[str]] = {}
        for p, (s, t) in flow.path_ends.items():
            src_index.setdefault(s, []).append(p)
            tgt_index.setdefault(t, []).append(p)
        new_ids = []
        for seq in new_seqs:
            pid = path_id(seq)
            ends = (
                self._endpoint(seq[0], "src", edge),
                self._endpoint(seq[-1], "tgt", edge),
            )
            path_ends[pid] = ends
            seqs[pid] = seq
            new_ids.append(pid)
            src_index.setdefault(ends[0], []).append(pid)
            tgt_index.setdefault(ends[1], []).append(pid)

        composition = dict(flow.composition)
        new_set = set(new_ids)
        for n in new_ids:
            s, t = path_ends[n]
            for y in src_index.get(t, ()):
                composition[(n, y)] = path_id(seqs[n] + seqs[y])
            for x in tgt_index.get(s, ()):
                if x not in new_set:
                    composition[(x, n)] = path_id(seqs[x] + seqs[n])

        index = _move_index(c.squares)
        adjacency = set(flow.adjacency)
        for n in new_ids:
            for other in _moves_of(seqs[n], index):
                adjacency.add((n, path_id(other)))

        self._complex = replace(c, edges=c.edges + (edge,))
        self._flow = FiniteFlow(
            skeleton=flow.skeleton,
            path_ends=path_ends,
            composition=composition,
            adjacency=adjacency,
        )
        return self._flow

    def attach_square(self, square: Square) -> FiniteFlow:
        c, flow = self._complex, self._flow
        if square.id in c.square_map:
            raise InvalidAttachmentError(f"square id already present: {square.id}")
        left, right = tuple(square.left), tuple(square.right)
        for name, side in (("left", left), ("right", right)):
            if not side or not c.is_exec_path(side):
                raise InvalidAttachmentError(
                    f"square {square.id} {name} side is not an execution path"
                )
        if c.path_source(left) != c.path_source(right) or (
            c.path_target(left) != c.path_target(right)
        ):
            raise InvalidAttachmentError(
                f"square {square.id} sides do not share endpoints"
            )

        index = _move_index([square])
        adjacency = set(flow.adjacency)
        for pid, seq in self._seqs.items():
            for other in _moves_of(seq, index):
                adjacency.add((pid, path_id(other)))

        self._complex = replace(c, squares=c.squares + (square,))
        self._flow = FiniteFlow(
            skeleton=flow.skeleton,
            path_ends=flow.path_ends,
            composition=flow.composition,
            adjacency=adjacency,
        )
        return self._flow

    def _endpoint(self, edge_id: str, which: str, new_edge: Edge | None = None) -> str:
        if new_edge is not None and edge_id == new_edge.id:
            e = new_edge
        else:
            e = self._complex.edge_map[edge_id]
        return e.src if which == "src" else e.tgt


def incremental_realize(c: GlobularComplex, cell: Cell) -> FiniteFlow:
    """Realize `c` with `cell` attached by extending the realization of `c`."""
    realizer = IncrementalRealizer(c)
    return realizer.attach(cell)
