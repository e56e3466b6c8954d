"""Independent brute-force oracles used to pin expected values in the test suite.

Everything in this file is deliberately written against primitive data
(dicts, tuples, lists) and never imports the library under test.  The
implementations favor the dumbest correct algorithm available:

- path enumeration is a plain recursive DFS over an edge dict,
- rewrite-move classes are a BFS flood fill over explicit path sets,
- germ classes are a pairwise relation enumeration followed by a
  transitive-closure fixpoint (no union-find),
- PV analyses are a BFS over position tuples with resource counting
  done from scratch at every state.

Expected values asserted by the tests were computed with these oracles
and then frozen.
"""

from collections import deque


# ---------------------------------------------------------------------------
# graph paths


def graph_paths(edges, src, tgt):
    """All nonempty edge-id sequences from src to tgt.

    edges: dict edge_id -> (source, target).  Assumes the graph is acyclic;
    recursion depth is bounded by the number of edges.
    """
    out = {}
    for eid, (a, b) in edges.items():
        out.setdefault(a, []).append((eid, b))
    found = set()

    def walk(state, prefix):
        if state == tgt and prefix:
            found.add(tuple(prefix))
        for eid, nxt in out.get(state, ()):
            prefix.append(eid)
            walk(nxt, prefix)
            prefix.pop()

    walk(src, [])
    return found


def graph_all_paths(edges):
    """Every nonempty path in the edge dict, over all endpoint pairs."""
    states = set()
    for a, b in edges.values():
        states.add(a)
        states.add(b)
    found = set()
    for s in states:
        for t in states:
            found |= graph_paths(edges, s, t)
    return found


# ---------------------------------------------------------------------------
# rewrite-move classes (square moves on explicit path sets)


def move_neighbors(path, rewrites):
    """Paths reachable from `path` by one contiguous rewrite.

    rewrites: iterable of (lhs, rhs) tuples; each is applied in both
    directions at every occurrence.
    """
    neighbors = set()
    for lhs, rhs in rewrites:
        for a, b in ((tuple(lhs), tuple(rhs)), (tuple(rhs), tuple(lhs))):
            n = len(a)
            for i in range(len(path) - n + 1):
                if path[i:i + n] == a:
                    cand = path[:i] + b + path[i + n:]
                    if cand != path:
                        neighbors.add(cand)
    return neighbors


def move_classes(paths, rewrites):
    """Partition of `paths` under the move relation, as a set of frozensets.

    BFS flood fill; moves leading outside `paths` are ignored (they cannot
    occur when `paths` is endpoint-complete, but the guard keeps the oracle
    total).
    """
    paths = set(paths)
    seen = set()
    classes = set()
    for start in paths:
        if start in seen:
            continue
        block = set()
        queue = deque([start])
        while queue:
            p = queue.popleft()
            if p in block:
                continue
            block.add(p)
            for q in move_neighbors(p, rewrites):
                if q in paths and q not in block:
                    queue.append(q)
        seen |= block
        classes.add(frozenset(block))
    return classes


# ---------------------------------------------------------------------------
# germ classes


def germ_classes(path_ends, compose, state, sign):
    """Classes of paths starting (minus) or ending (plus) at `state`.

    path_ends: dict path_id -> (src, tgt); compose: dict (x, y) -> xy.
    Enumerates the generating pairs of the identification, then closes
    transitively by fixpoint passes over an explicit relation set.
    """
    if sign == "minus":
        members = {p for p, (a, _) in path_ends.items() if a == state}
        pairs = {(x, z) for (x, _y), z in compose.items() if path_ends[x][0] == state}
    elif sign == "plus":
        members = {p for p, (_, b) in path_ends.items() if b == state}
        pairs = {(y, z) for (_x, y), z in compose.items() if path_ends[y][1] == state}
    else:
        raise ValueError(sign)

    # reflexive-symmetric-transitive closure, dumbest possible way
    related = {p: {p} for p in members}
    for a, b in pairs:
        related[a].add(b)
        related[b].add(a)
    changed = True
    while changed:
        changed = False
        for p in members:
            merged = set(related[p])
            for q in related[p]:
                merged |= related[q]
            if merged != related[p]:
                related[p] = merged
                changed = True
    return {frozenset(related[p]) for p in members}


# ---------------------------------------------------------------------------
# PV program semantics (positions + resource counting, no geometry)


def pv_holds(process, pos):
    """Resource multiset held by one process after its first `pos` steps."""
    held = {}
    for op, arg in process[:pos]:
        if op == "P":
            held[arg] = held.get(arg, 0) + 1
        elif op == "V":
            held[arg] = held.get(arg, 0) - 1
    return held


def pv_permitted(processes, capacities, positions):
    usage = {}
    for proc, pos in zip(processes, positions):
        for res, n in pv_holds(proc, pos).items():
            usage[res] = usage.get(res, 0) + n
    return all(n <= capacities[res] for res, n in usage.items())


def pv_successors(processes, capacities, positions):
    """Pairs (process index, next position tuple) of permitted single steps."""
    succ = []
    for i, proc in enumerate(processes):
        if positions[i] < len(proc):
            nxt = positions[:i] + (positions[i] + 1,) + positions[i + 1:]
            if pv_permitted(processes, capacities, nxt):
                succ.append((i, nxt))
    return succ


def pv_reachable(processes, capacities):
    """BFS over permitted position tuples from the all-zero start."""
    start = tuple(0 for _ in processes)
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for _, nxt in pv_successors(processes, capacities, state):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def pv_deadlock_states(processes, capacities):
    """Reachable, non-final position tuples with no permitted step."""
    final = tuple(len(p) for p in processes)
    return {
        state
        for state in pv_reachable(processes, capacities)
        if state != final and not pv_successors(processes, capacities, state)
    }


def pv_traces(processes, capacities):
    """Complete runs start -> final, as tuples of process indices."""
    final = tuple(len(p) for p in processes)
    start = tuple(0 for _ in processes)
    traces = set()

    def walk(state, sched):
        if state == final:
            traces.add(tuple(sched))
            return
        for i, nxt in pv_successors(processes, capacities, state):
            sched.append(i)
            walk(nxt, sched)
            sched.pop()

    walk(start, [])
    return traces


def pv_trace_classes(processes, capacities):
    """Partition of complete runs under adjacent-step commutation.

    Two runs are adjacent when they differ by swapping two consecutive
    steps of distinct processes and the alternative intermediate state is
    permitted (the four states around the swap then form a commuting
    square).  Returns a set of frozensets of traces.
    """
    traces = pv_traces(processes, capacities)

    def states_along(trace):
        state = tuple(0 for _ in processes)
        yield state
        for i in trace:
            state = state[:i] + (state[i] + 1,) + state[i + 1:]
            yield state

    def neighbors(trace):
        states = list(states_along(trace))
        for k in range(len(trace) - 1):
            p, q = trace[k], trace[k + 1]
            if p == q:
                continue
            mid = states[k][:q] + (states[k][q] + 1,) + states[k][q + 1:]
            if pv_permitted(processes, capacities, mid):
                yield trace[:k] + (q, p) + trace[k + 2:]

    seen = set()
    classes = set()
    for start in traces:
        if start in seen:
            continue
        block = set()
        queue = deque([start])
        while queue:
            t = queue.popleft()
            if t in block:
                continue
            block.add(t)
            for u in neighbors(t):
                if u not in block:
                    queue.append(u)
        seen |= block
        classes.add(frozenset(block))
    return classes


# ---------------------------------------------------------------------------
# canned programs (shared by tests)

MUTEX = (
    [[("P", "a"), ("V", "a")], [("P", "a"), ("V", "a")]],
    {"a": 1},
)

SWISS_FLAG = (
    [
        [("P", "a"), ("P", "b"), ("V", "b"), ("V", "a")],
        [("P", "b"), ("P", "a"), ("V", "a"), ("V", "b")],
    ],
    {"a": 1, "b": 1},
)


def dining_philosophers(n=3):
    processes = []
    for i in range(n):
        left, right = f"f{i}", f"f{(i + 1) % n}"
        processes.append([("P", left), ("P", right), ("V", right), ("V", left)])
    return processes, {f"f{i}": 1 for i in range(n)}


MUTEX_SOURCE = "res a 1; proc: P(a).V(a) proc: P(a).V(a)"

SWISS_FLAG_SOURCE = (
    "res a 1; res b 1; "
    "proc: P(a).P(b).V(b).V(a) proc: P(b).P(a).V(a).V(b)"
)


def dining_philosophers_source(n=3):
    decls = " ".join(f"res f{i} 1;" for i in range(n))
    procs = " ".join(
        f"proc: P(f{i}).P(f{(i + 1) % n}).V(f{(i + 1) % n}).V(f{i})"
        for i in range(n)
    )
    return f"{decls} {procs}"


if __name__ == "__main__":
    # print the frozen corpus facts
    for name, (procs, caps) in [
        ("mutex", MUTEX),
        ("swiss flag", SWISS_FLAG),
        ("philosophers-3", dining_philosophers(3)),
    ]:
        reach = pv_reachable(procs, caps)
        dead = pv_deadlock_states(procs, caps)
        classes = pv_trace_classes(procs, caps)
        print(
            f"{name}: reachable={len(reach)} deadlocks={sorted(dead)} "
            f"traces={len(pv_traces(procs, caps))} classes={len(classes)}"
        )
