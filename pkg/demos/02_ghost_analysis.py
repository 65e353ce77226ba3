"""Ghost groups and ages of decorated graphs.

A decorated graph carries a level ell and a twist M(e) on each edge.
The ghost group collects the even functions a with a*M in the image of
delta; the age of its elements decides whether the stratum is junior
(age below 1), which is the non-canonical-singularity signal.
"""

from ghostgraph import (
    DecoratedGraph,
    Multigraph,
    age,
    ghost_group,
    is_junior,
    qr_subgroup,
    stratum_age,
    vine_witness,
)

ell = 5

# Start with a 2-vine: two vertices joined by a double edge.
vine = Multigraph([0, 1], [(0, 1), (0, 1)])
for values in [(1, 1), (1, 3), (1, 4)]:
    d = DecoratedGraph.from_edge_values(vine, ell, dict(enumerate(values)))
    group = ghost_group(d)
    print(f"vine M={values}: ghost group order {group.order}, "
          f"stratum age {stratum_age(d)}, junior {is_junior(d)}")
    for a in group.elements():
        if not a.is_zero():
            print(f"   ghost {[a.on_edge(e) for e in vine.edge_ids]} "
                  f"has age {age(a)}")
    if is_junior(d):
        p1, p2, n = vine_witness(d)
        print(f"   vine witness: partition {sorted(p1)} | {sorted(p2)}, "
              f"{n} crossing edges")

# Bridges contribute quasireflections: ghosts supported on a single
# separating edge.  On a barbell graph the middle bridge carries a full
# cyclic group of them.
barbell = Multigraph(range(4), [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)])
d = DecoratedGraph.from_edge_values(barbell, ell, {e: 1 for e in range(5)})
print("\nbarbell: ghost group order", ghost_group(d).order,
      "| quasireflections", qr_subgroup(d).order)
print("barbell stratum age:", stratum_age(d),
      "(loops and bridges are contracted away before the minimum)")

# A tree-like graph has no circuits left after contraction: every ghost
# is a product of quasireflections, and the stratum age is infinite.
path = Multigraph(range(3), [(0, 1), (1, 2)])
d = DecoratedGraph.from_edge_values(path, ell, {0: 1, 1: 2})
print("\npath graph stratum age:", stratum_age(d), "| junior:", is_junior(d))
