"""Cochains on a multigraph: delta, boundary, cuts, and solvability.

A walk through the discrete Z/ell calculus the rest of the library is
built on, using a theta graph (two vertices joined by three edges).
"""

from ghostgraph import (
    Multigraph,
    OneCochain,
    ZeroCochain,
    boundary,
    cut_basis,
    delta,
    in_image_delta,
    pairing,
    solve_delta,
    spanning_tree,
)

ell = 5
theta = Multigraph([0, 1], [(0, 1), (0, 1), (0, 1)])
print("graph:", theta)

# A 0-cochain assigns a residue to every vertex; delta takes differences
# along each dart, producing a 1-cochain (odd under dart reversal).
phi = ZeroCochain(theta, ell, {0: 0, 1: 2})
b = delta(phi)
print("potential phi =", phi.as_dict())
print("delta(phi) on forward darts:", {e: b.on_edge(e) for e in theta.edge_ids})

# boundary goes the other way: at each vertex, sum the incoming dart
# values.  delta and boundary are adjoint for the natural pairing.
c = OneCochain(theta, ell, {0: 1, 1: 4, 2: 2})
print("pairing(delta(phi), c) =", pairing(b, c))
print("pairing(phi, boundary(c)) =", pairing(phi, boundary(c)))

# Which 1-cochains are differences of a potential?  Exactly those that
# sum to zero around every circuit.  The theta graph has two independent
# circuits, so most cochains are not in the image.
for vals in [{0: 2, 1: 2, 2: 2}, {0: 2, 1: 2, 2: 1}]:
    cand = OneCochain(theta, ell, vals)
    print(f"{vals} in im delta: {in_image_delta(cand)}")

# When a preimage exists we can recover it (normalized to vanish at the
# lowest vertex).
recovered = solve_delta(b)
print("solve_delta(delta(phi)) =", recovered.as_dict())

# The image of delta is spanned by cut cochains: pick a spanning tree,
# and each tree edge separates the vertices into two sides.
tree = spanning_tree(theta)
for basis_elt in cut_basis(theta, tree, ell):
    print("cut basis element:", {e: basis_elt.on_edge(e) for e in theta.edge_ids})
