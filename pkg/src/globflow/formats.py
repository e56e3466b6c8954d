"""JSON document formats for complexes, flows, and flow morphisms.

Complex documents:

    {"states": [name, ...],
     "edges": [{"id": ..., "src": ..., "tgt": ..., "label": optional}, ...],
     "squares": [{"id": ..., "left": [edge ids], "right": [edge ids]}, ...],
     "finals": [name, ...],
     "init": optional name}

`squares` and `finals` may be omitted on input and default to empty; output
always carries both, so parse -> serialize is the identity on documents in
that canonical shape (declaration order is preserved).

Flow documents:

    {"skeleton": [state, ...],
     "paths": [{"id": ..., "src": ..., "tgt": ...}, ...],
     "compose": [[x, y, xy], ...],
     "adjacency": [[a, b], ...],
     "init": optional state, "finals": optional [state, ...]}

`init`/`finals` are analysis annotations consumed by deadlock checks; flow
output is fully sorted, so serialization is deterministic.

Morphism documents carry the codomain inline:

    {"codomain": <flow document>,
     "state_map": {state: state, ...},
     "path_map": {path: path, ...}}
"""

from __future__ import annotations

import json
from typing import Any

from .complexes import Edge, GlobularComplex, Square
from .errors import FormatError
from .flows import FiniteFlow, FlowMorphism


def _require(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise FormatError(f"{where}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise FormatError(f"{where}: field {key!r} has the wrong type")
    return value


def _string_list(doc: dict, key: str, where: str, default=None) -> list[str]:
    if default is not None and key not in doc:
        return list(default)
    value = _require(doc, key, list, where)
    if not all(isinstance(s, str) for s in value):
        raise FormatError(f"{where}: field {key!r} must be a list of strings")
    return value


# ---------------------------------------------------------------------------
# complexes


def complex_to_doc(c: GlobularComplex) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "states": list(c.states),
        "edges": [
            {"id": e.id, "src": e.src, "tgt": e.tgt}
            | ({"label": e.label} if e.label is not None else {})
            for e in c.edges
        ],
        "squares": [
            {"id": q.id, "left": list(q.left), "right": list(q.right)}
            for q in c.squares
        ],
        "finals": list(c.finals),
    }
    if c.init is not None:
        doc["init"] = c.init
    return doc


def complex_from_doc(doc: Any) -> GlobularComplex:
    if not isinstance(doc, dict):
        raise FormatError("complex document: expected an object")
    states = _string_list(doc, "states", "complex document")
    edges = []
    for i, entry in enumerate(_require(doc, "edges", list, "complex document")):
        where = f"complex document: edges[{i}]"
        if not isinstance(entry, dict):
            raise FormatError(f"{where}: expected an object")
        label = entry.get("label")
        if label is not None and not isinstance(label, str):
            raise FormatError(f"{where}: label must be a string")
        edges.append(
            Edge(
                id=_require(entry, "id", str, where),
                src=_require(entry, "src", str, where),
                tgt=_require(entry, "tgt", str, where),
                label=label,
            )
        )
    squares = []
    for i, entry in enumerate(doc.get("squares", [])):
        where = f"complex document: squares[{i}]"
        if not isinstance(entry, dict):
            raise FormatError(f"{where}: expected an object")
        squares.append(
            Square(
                id=_require(entry, "id", str, where),
                left=tuple(_string_list(entry, "left", where)),
                right=tuple(_string_list(entry, "right", where)),
            )
        )
    init = doc.get("init")
    if init is not None and not isinstance(init, str):
        raise FormatError("complex document: init must be a string")
    return GlobularComplex(
        states=tuple(states),
        edges=tuple(edges),
        squares=tuple(squares),
        finals=tuple(_string_list(doc, "finals", "complex document", default=())),
        init=init,
    )


def dumps_complex(c: GlobularComplex) -> str:
    return json.dumps(complex_to_doc(c), indent=2) + "\n"


def loads_complex(text: str) -> GlobularComplex:
    return complex_from_doc(_parse_json(text, "complex document"))


# ---------------------------------------------------------------------------
# flows


def flow_to_doc(
    flow: FiniteFlow, init: str | None = None, finals=None
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "skeleton": sorted(flow.skeleton),
        "paths": [
            {"id": p, "src": flow.path_ends[p][0], "tgt": flow.path_ends[p][1]}
            for p in flow.sorted_paths
        ],
        "compose": sorted([x, y, z] for (x, y), z in flow.composition.items()),
        "adjacency": sorted([a, b] for a, b in flow.adjacency),
    }
    if init is not None:
        doc["init"] = init
    if finals:
        doc["finals"] = sorted(finals)
    return doc


def flow_from_doc(doc: Any) -> tuple[FiniteFlow, dict[str, Any]]:
    """Returns the flow and its annotations ({"init": ..., "finals": [...]})."""
    if not isinstance(doc, dict):
        raise FormatError("flow document: expected an object")
    skeleton = _string_list(doc, "skeleton", "flow document")
    path_ends = {}
    for i, entry in enumerate(_require(doc, "paths", list, "flow document")):
        where = f"flow document: paths[{i}]"
        if not isinstance(entry, dict):
            raise FormatError(f"{where}: expected an object")
        pid = _require(entry, "id", str, where)
        if pid in path_ends:
            raise FormatError(f"{where}: duplicate path id {pid!r}")
        path_ends[pid] = (
            _require(entry, "src", str, where),
            _require(entry, "tgt", str, where),
        )
    composition = {}
    for i, entry in enumerate(doc.get("compose", [])):
        where = f"flow document: compose[{i}]"
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(s, str) for s in entry)
        ):
            raise FormatError(f"{where}: expected a triple of path ids")
        x, y, z = entry
        if (x, y) in composition:
            raise FormatError(f"{where}: duplicate composition entry ({x}, {y})")
        composition[(x, y)] = z
    adjacency = []
    for i, entry in enumerate(doc.get("adjacency", [])):
        where = f"flow document: adjacency[{i}]"
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(s, str) for s in entry)
        ):
            raise FormatError(f"{where}: expected a pair of path ids")
        adjacency.append((entry[0], entry[1]))

    annotations: dict[str, Any] = {}
    init = doc.get("init")
    if init is not None:
        if not isinstance(init, str):
            raise FormatError("flow document: init must be a string")
        annotations["init"] = init
    if "finals" in doc:
        annotations["finals"] = _string_list(doc, "finals", "flow document")

    flow = FiniteFlow(
        skeleton=skeleton,
        path_ends=path_ends,
        composition=composition,
        adjacency=adjacency,
    )
    return flow, annotations


def dumps_flow(flow: FiniteFlow, init: str | None = None, finals=None) -> str:
    return json.dumps(flow_to_doc(flow, init=init, finals=finals), indent=2) + "\n"


def loads_flow(text: str) -> tuple[FiniteFlow, dict[str, Any]]:
    return flow_from_doc(_parse_json(text, "flow document"))


# ---------------------------------------------------------------------------
# morphisms


def morphism_to_doc(f: FlowMorphism, codomain: FiniteFlow, **annotations) -> dict:
    return {
        "codomain": flow_to_doc(codomain, **annotations),
        "state_map": dict(sorted(f.state_map.items())),
        "path_map": dict(sorted(f.path_map.items())),
    }


def morphism_from_doc(doc: Any) -> tuple[FlowMorphism, FiniteFlow, dict[str, Any]]:
    if not isinstance(doc, dict):
        raise FormatError("morphism document: expected an object")
    codomain, annotations = flow_from_doc(
        _require(doc, "codomain", dict, "morphism document")
    )
    maps = {}
    for key in ("state_map", "path_map"):
        table = _require(doc, key, dict, "morphism document")
        if not all(isinstance(k, str) and isinstance(v, str) for k, v in table.items()):
            raise FormatError(f"morphism document: {key} must map strings to strings")
        maps[key] = dict(table)
    return (
        FlowMorphism(state_map=maps["state_map"], path_map=maps["path_map"]),
        codomain,
        annotations,
    )


def dumps_morphism(f: FlowMorphism, codomain: FiniteFlow, **annotations) -> str:
    return json.dumps(morphism_to_doc(f, codomain, **annotations), indent=2) + "\n"


def loads_morphism(text: str) -> tuple[FlowMorphism, FiniteFlow, dict[str, Any]]:
    return morphism_from_doc(_parse_json(text, "morphism document"))


def _parse_json(text: str, where: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{where}: not valid JSON: {exc}") from None
