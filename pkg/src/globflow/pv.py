"""A small PV-style process language and its compilation to a complex.

Programs declare capacity-bounded resources and sequential processes built
from acquire/release/act steps:

    res a 1; res b 1;
    proc: P(a).P(b).V(b).V(a)
    proc: P(b).P(a).V(a).V(b)

Grammar (EBNF):

    program   = { resource } process { process } ;
    resource  = "res" NAME INTEGER ";" ;
    process   = "proc" ":" step { "." step } ;
    step      = ( "P" | "V" | "A" ) "(" NAME ")" ;
    NAME      = letter-or-underscore { letter-or-digit-or-underscore } ;
    INTEGER   = digit { digit } ;

P and V take a declared resource; A takes a free-form action label.
Whitespace separates tokens and is otherwise ignored.

Compilation builds the product grid of per-process positions, drops every
position tuple whose combined resource usage exceeds some capacity (such
states never exist), keeps single-process steps between surviving states
as edges, and fills in a square for every pair of steps of distinct
processes whose four corner states all survive.  The result is acyclic by
construction since positions only increase.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .complexes import Edge, GlobularComplex, Square
from .errors import PvError, PvSyntaxError

STEP_OPS = ("P", "V", "A")


@dataclass(frozen=True)
class PvStep:
    op: str  # "P" acquire, "V" release, "A" internal action
    arg: str  # resource name for P/V, action label for A

    def __str__(self) -> str:
        return f"{self.op}({self.arg})"


@dataclass(frozen=True)
class PvProgram:
    """Declared resources (name, capacity) and sequential processes."""

    resources: tuple[tuple[str, int], ...]
    processes: tuple[tuple[PvStep, ...], ...]

    @cached_property
    def capacities(self) -> dict[str, int]:
        return dict(self.resources)

    def holds(self, process_index: int, position: int) -> dict[str, int]:
        """Resources held by one process after its first `position` steps."""
        held: dict[str, int] = {}
        for step in self.processes[process_index][:position]:
            if step.op == "P":
                held[step.arg] = held.get(step.arg, 0) + 1
            elif step.op == "V":
                held[step.arg] = held.get(step.arg, 0) - 1
        return {r: n for r, n in held.items() if n}


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[0-9]+|[;:.()]")


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(line, pos)
            if not m:
                raise PvSyntaxError(
                    f"unexpected character {line[pos]!r}", lineno, pos + 1
                )
            tokens.append(_Token(m.group(), lineno, pos + 1))
            pos = m.end()
    return tokens


class _TokenStream:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self, expected: str | None = None, what: str = "") -> _Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            raise PvSyntaxError(
                f"unexpected end of input, expected {what or expected}",
                last.line if last else 1,
                (last.column + len(last.text)) if last else 1,
            )
        if expected is not None and tok.text != expected:
            raise PvSyntaxError(
                f"expected {what or expected!r}, found {tok.text!r}",
                tok.line,
                tok.column,
            )
        self.index += 1
        return tok


def parse_pv(text: str) -> PvProgram:
    """Parse PV source, or raise a positioned PvSyntaxError / PvError.

    Beyond the grammar this enforces that capacities are positive, resource
    names are declared once, P/V reference declared resources, and no
    process releases a resource it does not hold at that step.
    """
    stream = _TokenStream(_tokenize(text))

    resources: list[tuple[str, int]] = []
    declared: set[str] = set()
    while (tok := stream.peek()) is not None and tok.text == "res":
        stream.next()
        name = stream.next(what="a resource name")
        if not name.text[0].isalpha() and name.text[0] != "_":
            raise PvSyntaxError(
                f"expected a resource name, found {name.text!r}", name.line, name.column
            )
        capacity = stream.next(what="a capacity")
        if not capacity.text.isdigit():
            raise PvSyntaxError(
                f"expected a capacity, found {capacity.text!r}",
                capacity.line,
                capacity.column,
            )
        stream.next(";")
        if int(capacity.text) < 1:
            raise PvError("capacity must be positive", capacity.line, capacity.column)
        if name.text in declared:
            raise PvError(f"resource declared twice: {name.text}", name.line, name.column)
        declared.add(name.text)
        resources.append((name.text, int(capacity.text)))

    processes: list[tuple[PvStep, ...]] = []
    while stream.peek() is not None:
        stream.next("proc", what="'proc'")
        stream.next(":")
        steps = [_parse_step(stream, declared)]
        while (tok := stream.peek()) is not None and tok.text == ".":
            stream.next()
            steps.append(_parse_step(stream, declared))
        processes.append(tuple(steps))
    if not processes:
        tok = stream.tokens[-1] if stream.tokens else None
        raise PvSyntaxError(
            "program declares no processes",
            tok.line if tok else 1,
            tok.column if tok else 1,
        )

    program = PvProgram(resources=tuple(resources), processes=tuple(processes))
    _check_releases(program)
    return program


def _parse_step(stream: _TokenStream, declared: set[str]) -> PvStep:
    op = stream.next(what="a step (P, V, or A)")
    if op.text not in STEP_OPS:
        raise PvSyntaxError(
            f"expected a step (P, V, or A), found {op.text!r}", op.line, op.column
        )
    stream.next("(")
    arg = stream.next(what="a name")
    if not (arg.text[0].isalpha() or arg.text[0] == "_"):
        raise PvSyntaxError(f"expected a name, found {arg.text!r}", arg.line, arg.column)
    stream.next(")")
    if op.text in ("P", "V") and arg.text not in declared:
        raise PvError(f"unknown resource: {arg.text}", arg.line, arg.column)
    return PvStep(op=op.text, arg=arg.text)


def _check_releases(program: PvProgram) -> None:
    for k, process in enumerate(program.processes):
        held: dict[str, int] = {}
        for step in process:
            if step.op == "P":
                held[step.arg] = held.get(step.arg, 0) + 1
            elif step.op == "V":
                if held.get(step.arg, 0) < 1:
                    raise PvError(
                        f"process {k} releases {step.arg} without holding it"
                    )
                held[step.arg] -= 1


# ---------------------------------------------------------------------------
# compilation


def state_name(positions: tuple[int, ...]) -> str:
    """Stable id for a position tuple: "p0:i,p1:j,..."."""
    return ",".join(f"p{k}:{i}" for k, i in enumerate(positions))


def pv_to_complex(program: PvProgram) -> GlobularComplex:
    """Compile to the grid complex over permitted position tuples.

    States are position tuples whose summed resource usage respects every
    capacity; edges advance one process by one step; squares witness the
    commutation of two steps of distinct processes when all four corners
    are permitted.  The initial state is all-zeros; the final state is the
    all-finished tuple when it is permitted.
    """
    lengths = [len(p) for p in program.processes]
    holds_table = [
        [program.holds(k, pos) for pos in range(lengths[k] + 1)]
        for k in range(len(lengths))
    ]
    capacities = program.capacities

    def permitted(positions: tuple[int, ...]) -> bool:
        usage: dict[str, int] = {}
        for k, pos in enumerate(positions):
            for res, n in holds_table[k][pos].items():
                usage[res] = usage.get(res, 0) + n
        return all(n <= capacities[res] for res, n in usage.items())

    tuples = [t for t in product(*[range(n + 1) for n in lengths]) if permitted(t)]
    permitted_set = set(tuples)

    def advance(positions: tuple[int, ...], k: int) -> tuple[int, ...] | None:
        if positions[k] >= lengths[k]:
            return None
        nxt = positions[:k] + (positions[k] + 1,) + positions[k + 1:]
        return nxt if nxt in permitted_set else None

    states = tuple(state_name(t) for t in tuples)
    edges = []
    edge_ids: dict[tuple[tuple[int, ...], int], str] = {}
    for t in tuples:
        for k in range(len(lengths)):
            nxt = advance(t, k)
            if nxt is None:
                continue
            eid = f"{state_name(t)}>p{k}"
            edge_ids[(t, k)] = eid
            edges.append(
                Edge(
                    id=eid,
                    src=state_name(t),
                    tgt=state_name(nxt),
                    label=str(program.processes[k][t[k]]),
                )
            )

    squares = []
    for t in tuples:
        for k in range(len(lengths)):
            after_k = advance(t, k)
            if after_k is None:
                continue
            for l in range(k + 1, len(lengths)):
                after_l = advance(t, l)
                if after_l is None:
                    continue
                if advance(after_k, l) is None or advance(after_l, k) is None:
                    continue
                squares.append(
                    Square(
                        id=f"{state_name(t)}#p{k}p{l}",
                        left=(edge_ids[(t, k)], edge_ids[(after_k, l)]),
                        right=(edge_ids[(t, l)], edge_ids[(after_l, k)]),
                    )
                )

    final = tuple(lengths)
    return GlobularComplex(
        states=states,
        edges=tuple(edges),
        squares=tuple(squares),
        finals=(state_name(final),) if final in permitted_set else (),
        init=state_name(tuple(0 for _ in lengths)),
    )
