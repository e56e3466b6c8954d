"""
PV programs: from shared resources to deadlocks
===============================================

Processes acquire (P) and release (V) capacity-bounded resources.  The
compiler builds the product grid of process positions, removes every
state that would overfill a resource, and fills in squares where two
steps of different processes commute.  Deadlocks are reachable non-final
states with no way out; dihomotopy classes count the genuinely different
schedules.
"""

from globflow import (
    deadlocks,
    dihomotopy_classes,
    export_dot,
    parse_pv,
    path_classes,
    pv_to_complex,
    realize,
)

# two processes competing for one mutex: no deadlock, two schedules
mutex = pv_to_complex(parse_pv("res a 1; proc: P(a).V(a) proc: P(a).V(a)"))
flow = realize(mutex)
print("mutex states:", len(mutex.states), "squares:", len(mutex.squares))
print("deadlocks:", deadlocks(flow, mutex.init, mutex.finals))
print("schedules up to commutation:", len(path_classes(mutex, mutex.init, mutex.finals[0])))

# the swiss flag: two locks taken in opposite orders; one fatal state
swiss = pv_to_complex(
    parse_pv(
        "res a 1; res b 1; "
        "proc: P(a).P(b).V(b).V(a) proc: P(b).P(a).V(a).V(b)"
    )
)
flow = realize(swiss)
print("\nswiss flag states:", len(swiss.states))
print("deadlocks:", deadlocks(flow, swiss.init, swiss.finals))

# three dining philosophers, each grabbing left then right fork
source = " ".join(f"res f{i} 1;" for i in range(3)) + " " + " ".join(
    f"proc: P(f{i}).P(f{(i + 1) % 3}).V(f{(i + 1) % 3}).V(f{i})" for i in range(3)
)
table = pv_to_complex(parse_pv(source))
flow = realize(table)
print("\nphilosophers states:", len(table.states), "paths:", len(flow.paths))
print("deadlocks:", deadlocks(flow, table.init, table.finals))
print(
    "schedules up to commutation:",
    len(dihomotopy_classes(flow, table.init, table.finals[0])),
)

# the grid renders as DOT for inspection (dashed arrows mark squares)
print("\nDOT preview of the mutex grid:")
print("\n".join(export_dot(mutex).splitlines()[:8]))
print("  ...")
