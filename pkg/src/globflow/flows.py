"""Finite flows: a 0-skeleton, a path set with endpoints, an associative
partial composition, and an adjacency relation standing in for the topology
of the path space.

Composition is a total table on composable pairs (target of the first equals
source of the second).  Adjacency relates paths sharing both endpoints; its
reflexive-transitive closure (written adj* throughout) models which paths sit
in the same connected component of the path space.  Validation checks the
axioms exhaustively: endpoint laws and associativity on every composable
pair and triple, plus adjacency being a congruence for composition.

Morphisms preserve endpoints and composition on the nose, and adjacency up
to adj*-components.  Two morphisms with equal state maps are S-homotopic
when each path's two images land in the same adj*-component; deformations
can only slide path values along the path space's connectivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .complexes import ValidationReport
from .errors import InvalidFlowError, InvalidMorphismError, UnknownIdError
from .unionfind import DisjointSets

PathId = str


def _normalize_adjacency(pairs) -> frozenset[tuple[str, str]]:
    out = set()
    for a, b in pairs:
        if a != b:
            out.add((a, b) if a <= b else (b, a))
    return frozenset(out)


class FiniteFlow:
    """Immutable-by-convention container for a finite flow.

    skeleton: state ids; path_ends: path id -> (source, target);
    composition: (x, y) -> x*y for composable pairs; adjacency: unordered
    pairs of paths with equal source and equal target.
    """

    def __init__(
        self,
        skeleton: Iterable[str],
        path_ends: Mapping[str, tuple[str, str]],
        composition: Mapping[tuple[str, str], str] = (),
        adjacency: Iterable[tuple[str, str]] = (),
    ):
        self.skeleton = frozenset(skeleton)
        self.path_ends = {p: (s, t) for p, (s, t) in dict(path_ends).items()}
        self.composition = dict(composition)
        self.adjacency = _normalize_adjacency(adjacency)

    # -- structure access ---------------------------------------------------

    @cached_property
    def paths(self) -> frozenset[str]:
        return frozenset(self.path_ends)

    @cached_property
    def sorted_paths(self) -> tuple[str, ...]:
        return tuple(sorted(self.path_ends))

    def src(self, p: PathId) -> str:
        try:
            return self.path_ends[p][0]
        except KeyError:
            raise UnknownIdError(f"unknown path: {p}") from None

    def tgt(self, p: PathId) -> str:
        try:
            return self.path_ends[p][1]
        except KeyError:
            raise UnknownIdError(f"unknown path: {p}") from None

    @cached_property
    def by_src(self) -> dict[str, tuple[str, ...]]:
        table: dict[str, list[str]] = {s: [] for s in self.skeleton}
        for p in self.sorted_paths:
            table.setdefault(self.path_ends[p][0], []).append(p)
        return {s: tuple(ps) for s, ps in table.items()}

    @cached_property
    def by_tgt(self) -> dict[str, tuple[str, ...]]:
        table: dict[str, list[str]] = {s: [] for s in self.skeleton}
        for p in self.sorted_paths:
            table.setdefault(self.path_ends[p][1], []).append(p)
        return {s: tuple(ps) for s, ps in table.items()}

    def paths_from(self, state: str) -> tuple[str, ...]:
        return self.by_src.get(state, ())

    def paths_into(self, state: str) -> tuple[str, ...]:
        return self.by_tgt.get(state, ())

    def paths_between(self, src: str, tgt: str) -> tuple[str, ...]:
        return tuple(p for p in self.paths_from(src) if self.path_ends[p][1] == tgt)

    def composable_pairs(self):
        """All (x, y) with tgt(x) = src(y), in sorted order."""
        for state in sorted(self.skeleton):
            for x in self.paths_into(state):
                for y in self.paths_from(state):
                    yield x, y

    def compose(self, x: PathId, y: PathId) -> PathId:
        try:
            return self.composition[(x, y)]
        except KeyError:
            raise UnknownIdError(f"composite undefined: ({x}, {y})") from None

    def try_compose(self, x: PathId, y: PathId) -> Optional[PathId]:
        return self.composition.get((x, y))

    # -- adjacency ----------------------------------------------------------

    @cached_property
    def adjacency_components(self) -> DisjointSets:
        components = DisjointSets(self.path_ends)
        for a, b in self.adjacency:
            components.union(a, b)
        return components

    def adjacent_star(self, a: PathId, b: PathId) -> bool:
        """Whether a and b lie in the same adj*-component."""
        return self.adjacency_components.same(a, b)

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteFlow):
            return NotImplemented
        return (
            self.skeleton == other.skeleton
            and self.path_ends == other.path_ends
            and self.composition == other.composition
            and self.adjacency == other.adjacency
        )

    __hash__ = None  # mutable containers inside

    def __repr__(self) -> str:
        return (
            f"FiniteFlow(states={len(self.skeleton)}, paths={len(self.path_ends)}, "
            f"composites={len(self.composition)}, adjacency={len(self.adjacency)})"
        )


# ---------------------------------------------------------------------------
# validation


def validate_flow(flow: FiniteFlow) -> ValidationReport:
    """Exhaustive axiom check; reports every violation found."""
    violations: list[str] = []

    for p in flow.sorted_paths:
        s, t = flow.path_ends[p]
        if s not in flow.skeleton:
            violations.append(f"dangling path endpoint: source {s} of path {p}")
        if t not in flow.skeleton:
            violations.append(f"dangling path endpoint: target {t} of path {p}")

    for (x, y), z in sorted(flow.composition.items()):
        if x not in flow.paths or y not in flow.paths:
            violations.append(f"unknown path in composition entry: ({x}, {y})")
            continue
        if flow.path_ends[x][1] != flow.path_ends[y][0]:
            violations.append(f"spurious composition: ({x}, {y}) is not composable")
            continue
        if z not in flow.paths:
            violations.append(f"composite not a path: {x} * {y} = {z}")
            continue
        if flow.path_ends[z][0] != flow.path_ends[x][0]:
            violations.append(f"source axiom: s({x} * {y}) != s({x})")
        if flow.path_ends[z][1] != flow.path_ends[y][1]:
            violations.append(f"target axiom: t({x} * {y}) != t({y})")

    for x, y in flow.composable_pairs():
        if (x, y) not in flow.composition:
            violations.append(f"composition not total: ({x}, {y}) undefined")

    # associativity on every composable triple, exactly
    for x, y in flow.composable_pairs():
        xy = flow.try_compose(x, y)
        if xy is None:
            continue
        for z in flow.paths_from(flow.path_ends[y][1]):
            yz = flow.try_compose(y, z)
            left = flow.try_compose(xy, z) if xy in flow.paths else None
            right = flow.try_compose(x, yz) if yz in flow.paths else None
            if left is None or right is None:
                continue  # totality violations already reported
            if left != right:
                violations.append(
                    f"associativity: ({x} * {y}) * {z} = {left} but {x} * ({y} * {z}) = {right}"
                )

    for a, b in sorted(flow.adjacency):
        if a not in flow.paths or b not in flow.paths:
            violations.append(f"unknown path in adjacency: ({a}, {b})")
            continue
        if flow.path_ends[a] != flow.path_ends[b]:
            violations.append(f"adjacency endpoints: {a} and {b} do not share endpoints")

    violations.extend(_congruence_violations(flow))

    return ValidationReport(tuple(violations))


def _congruence_violations(flow: FiniteFlow) -> list[str]:
    """Adjacency must be a congruence: composing with an adjacent path on
    either side lands in the same adj*-component."""
    out = []
    for a, b in sorted(flow.adjacency):
        if a not in flow.paths or b not in flow.paths:
            continue
        if flow.path_ends[a] != flow.path_ends[b]:
            continue
        s, t = flow.path_ends[a]
        for y in flow.paths_from(t):
            ay, by = flow.try_compose(a, y), flow.try_compose(b, y)
            if ay is None or by is None:
                continue
            if not flow.adjacent_star(ay, by):
                out.append(
                    f"adjacency congruence: {a} ~ {b} but {a} * {y} and {b} * {y} "
                    "are in distinct components"
                )
        for z in flow.paths_into(s):
            za, zb = flow.try_compose(z, a), flow.try_compose(z, b)
            if za is None or zb is None:
                continue
            if not flow.adjacent_star(za, zb):
                out.append(
                    f"adjacency congruence: {a} ~ {b} but {z} * {a} and {z} * {b} "
                    "are in distinct components"
                )
    return out


def require_valid_flow(flow: FiniteFlow) -> None:
    report = validate_flow(flow)
    if not report.ok:
        raise InvalidFlowError(report.violations)


# ---------------------------------------------------------------------------
# constructions


def glob_flow(labels: Iterable[str]) -> FiniteFlow:
    """The flow of a globe: states 0 and 1, one path 0 -> 1 per label.

    No two paths are composable, so the composition table is empty.
    """
    names = sorted(set(labels))
    if not names:
        raise ValueError("glob_flow: label set must be nonempty")
    return FiniteFlow(
        skeleton=("0", "1"),
        path_ends={name: ("0", "1") for name in names},
    )


def restrict(flow: FiniteFlow, keep: Iterable[str]) -> FiniteFlow:
    """The flow over a sub-0-skeleton: keep paths with both endpoints kept.

    Paths may still pass through dropped states; only endpoints matter,
    so a composite across a dropped state survives while its two halves
    do not.  Composition and adjacency are inherited.
    """
    keep = frozenset(keep)
    stray = keep - flow.skeleton
    if stray:
        raise ValueError(
            "restrict: not a subset of the 0-skeleton: " + ", ".join(sorted(stray))
        )
    path_ends = {
        p: ends
        for p, ends in flow.path_ends.items()
        if ends[0] in keep and ends[1] in keep
    }
    return FiniteFlow(
        skeleton=keep,
        path_ends=path_ends,
        composition={
            (x, y): z
            for (x, y), z in flow.composition.items()
            if x in path_ends and y in path_ends and z in path_ends
        },
        adjacency={
            (a, b) for a, b in flow.adjacency if a in path_ends and b in path_ends
        },
    )


# ---------------------------------------------------------------------------
# germs


@dataclass(frozen=True)
class GermSet:
    """Classes of paths that begin (minus) or end (plus) the same way at a state."""

    state: str
    sign: str
    classes: tuple[tuple[str, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> tuple[str, ...]:
        return tuple(block[0] for block in self.classes)


def germs(flow: FiniteFlow, state: str, sign: str) -> GermSet:
    """Quotient of the paths leaving (minus) or entering (plus) `state`.

    Minus identifies a path with every right extension (gamma with
    gamma * gamma'), plus with every left extension.  Computed as a
    union-find closure over the composition table; class members and
    class order are deterministic, ties broken by lexicographic path id.
    """
    if sign not in ("minus", "plus"):
        raise ValueError(f"germs: sign must be 'minus' or 'plus', got {sign!r}")
    if state not in flow.skeleton:
        raise UnknownIdError(f"unknown state: {state}")

    if sign == "minus":
        members = set(flow.paths_from(state))
    else:
        members = set(flow.paths_into(state))
    closure = DisjointSets(sorted(members))
    for (x, y), z in flow.composition.items():
        anchor = x if sign == "minus" else y
        if anchor in members and z in members:
            closure.union(anchor, z)
    return GermSet(state=state, sign=sign, classes=tuple(closure.blocks()))


def dihomotopy_classes(
    flow: FiniteFlow, src: str, tgt: str
) -> tuple[tuple[str, ...], ...]:
    """adj*-components of the paths from src to tgt, sorted."""
    for s in (src, tgt):
        if s not in flow.skeleton:
            raise UnknownIdError(f"unknown state: {s}")
    members = flow.paths_between(src, tgt)
    # adjacency preserves endpoints, so restricting components to this path
    # set is the same as computing components inside it
    by_root: dict[str, list[str]] = {}
    for p in members:
        by_root.setdefault(flow.adjacency_components.find(p), []).append(p)
    blocks = [tuple(sorted(block)) for block in by_root.values()]
    blocks.sort(key=lambda block: block[0])
    return tuple(blocks)


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class FlowMorphism:
    state_map: Mapping[str, str] = field(default_factory=dict)
    path_map: Mapping[str, str] = field(default_factory=dict)


def identity_flow_morphism(flow: FiniteFlow) -> FlowMorphism:
    return FlowMorphism(
        state_map={s: s for s in flow.skeleton},
        path_map={p: p for p in flow.paths},
    )


def compose_flow_morphisms(outer: FlowMorphism, inner: FlowMorphism) -> FlowMorphism:
    return FlowMorphism(
        state_map={s: outer.state_map[t] for s, t in inner.state_map.items()},
        path_map={p: outer.path_map[q] for p, q in inner.path_map.items()},
    )


def flow_morphism_violations(
    f: FlowMorphism, dom: FiniteFlow, cod: FiniteFlow
) -> list[str]:
    """Why f fails to be a flow morphism dom -> cod; empty when it is one."""
    out: list[str] = []
    for s in sorted(dom.skeleton):
        image = f.state_map.get(s)
        if image is None:
            out.append(f"state_map undefined on {s}")
        elif image not in cod.skeleton:
            out.append(f"state_map sends {s} outside the codomain: {image}")
    for p in dom.sorted_paths:
        image = f.path_map.get(p)
        if image is None:
            out.append(f"path_map undefined on {p}")
            continue
        if image not in cod.paths:
            out.append(f"path_map sends {p} outside the codomain: {image}")
            continue
        ps, pt = dom.path_ends[p]
        if cod.path_ends[image] != (f.state_map.get(ps), f.state_map.get(pt)):
            out.append(f"endpoint mismatch on path {p}")
    if out:
        return out
    for x, y in dom.composable_pairs():
        xy = dom.try_compose(x, y)
        if xy is None:
            out.append(f"domain composition not total at ({x}, {y})")
            continue
        image = cod.try_compose(f.path_map[x], f.path_map[y])
        if image is None:
            out.append(f"codomain composite undefined for images of ({x}, {y})")
        elif image != f.path_map[xy]:
            out.append(f"composition not preserved on ({x}, {y})")
    for a, b in sorted(dom.adjacency):
        if not cod.adjacent_star(f.path_map[a], f.path_map[b]):
            out.append(f"adjacency not preserved on ({a}, {b})")
    return out


def is_flow_morphism(f: FlowMorphism, dom: FiniteFlow, cod: FiniteFlow) -> bool:
    return not flow_morphism_violations(f, dom, cod)


def require_flow_morphism(f: FlowMorphism, dom: FiniteFlow, cod: FiniteFlow) -> None:
    violations = flow_morphism_violations(f, dom, cod)
    if violations:
        raise InvalidMorphismError("not a flow morphism: " + "; ".join(violations))


def s_homotopic(
    f: FlowMorphism, g: FlowMorphism, dom: FiniteFlow, cod: FiniteFlow
) -> bool:
    """Whether two morphisms dom -> cod are S-homotopic.

    They must agree on the 0-skeleton; each path's two images must lie in
    the same adj*-component of the codomain, since a deformation through
    morphisms moves path values only along path-space adjacency.
    """
    require_flow_morphism(f, dom, cod)
    require_flow_morphism(g, dom, cod)
    if any(f.state_map[s] != g.state_map[s] for s in dom.skeleton):
        return False
    return all(
        cod.adjacent_star(f.path_map[p], g.path_map[p]) for p in dom.paths
    )


# ---------------------------------------------------------------------------
# deadlocks


def deadlocks(
    flow: FiniteFlow, init: str, finals: Iterable[str] = ()
) -> tuple[str, ...]:
    """Reachable, non-final states that no path leaves.

    A state counts as reachable when it is `init` itself or the target of
    some path out of `init`; since flows are composition-closed, one-path
    reachability coincides with iterated reachability.
    """
    finals = frozenset(finals)
    if init not in flow.skeleton:
        raise UnknownIdError(f"unknown state: {init}")
    stray = finals - flow.skeleton
    if stray:
        raise UnknownIdError("unknown final states: " + ", ".join(sorted(stray)))
    reachable = {init} | {flow.path_ends[p][1] for p in flow.paths_from(init)}
    departing = {ends[0] for ends in flow.path_ends.values()}
    return tuple(
        sorted(s for s in reachable if s not in finals and s not in departing)
    )
