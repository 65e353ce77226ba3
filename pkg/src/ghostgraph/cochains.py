"""Exact Z/ell cochain algebra on a multigraph.

ZeroCochain: functions on vertices.  OneCochain: antisymmetric functions on
darts, b(conj e) = -b(e).  EvenFunction: symmetric functions on darts.
Values are stored once per edge, on the tail -> head dart; antisymmetry and
evenness are structural.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .graphs import (
    Dart,
    GraphError,
    Multigraph,
    fundamental_circuits,
    spanning_tree,
    _check_spanning_tree,
    tree_path,
)


class CochainError(ValueError):
    """Invalid cochain data or unsolvable system."""


def _check_ell(ell: int) -> int:
    ell = int(ell)
    if ell < 1:
        raise CochainError("modulus must be positive")
    return ell


class ZeroCochain:
    """Z/ell valued function on the vertices."""

    __slots__ = ("graph", "ell", "_values")

    def __init__(self, graph: Multigraph, ell: int, values: Mapping[int, int]):
        self.graph = graph
        self.ell = _check_ell(ell)
        vals = {}
        for v in graph.vertices:
            if v not in values:
                raise CochainError(f"missing value at vertex {v}")
            vals[v] = values[v] % self.ell
        if len(values) != len(vals):
            raise CochainError("values on unknown vertices")
        self._values = vals

    def __call__(self, v: int) -> int:
        return self._values[v]

    def as_dict(self) -> dict[int, int]:
        return dict(self._values)

    def is_zero(self) -> bool:
        return not any(self._values.values())

    def __add__(self, other: "ZeroCochain") -> "ZeroCochain":
        return ZeroCochain(
            self.graph,
            self.ell,
            {v: self._values[v] + other._values[v] for v in self.graph.vertices},
        )

    def __neg__(self) -> "ZeroCochain":
        return ZeroCochain(
            self.graph, self.ell, {v: -m for v, m in self._values.items()}
        )

    def __sub__(self, other: "ZeroCochain") -> "ZeroCochain":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZeroCochain)
            and self.ell == other.ell
            and self.graph == other.graph
            and self._values == other._values
        )

    def __hash__(self) -> int:
        return hash((self.ell, tuple(sorted(self._values.items()))))

    def __repr__(self) -> str:
        return f"ZeroCochain(ell={self.ell}, {self._values})"


class _EdgeFunction:
    """Shared storage for dart functions: one value per edge, forward dart."""

    __slots__ = ("graph", "ell", "_fwd")

    #: multiplier applied when a dart is reversed (-1 odd, +1 even)
    SIGN = -1

    def __init__(self, graph: Multigraph, ell: int, edge_values: Mapping[int, int]):
        self.graph = graph
        self.ell = _check_ell(ell)
        vals = {}
        for e in graph.edge_ids:
            if e not in edge_values:
                raise CochainError(f"missing value at edge {e}")
            vals[e] = edge_values[e] % self.ell
        if len(edge_values) != len(vals):
            raise CochainError("values on unknown edges")
        self._fwd = vals

    @classmethod
    def from_dart_values(cls, graph: Multigraph, ell: int, dart_values: Mapping[Dart, int]):
        """Build from a full dart table, checking the symmetry rule."""
        ell = _check_ell(ell)
        edge_values = {}
        for e in graph.edge_ids:
            fwd = dart_values.get((e, 0))
            rev = dart_values.get((e, 1))
            if fwd is None or rev is None:
                raise CochainError(f"missing dart values on edge {e}")
            if (rev - cls.SIGN * fwd) % ell != 0:
                raise CochainError(f"symmetry rule violated on edge {e}")
            edge_values[e] = fwd
        return cls(graph, ell, edge_values)

    def on_edge(self, e: int) -> int:
        """Value on the tail -> head dart of e."""
        return self._fwd[e]

    def on_dart(self, d: Dart) -> int:
        e, s = d
        v = self._fwd[e]
        return v if s == 0 else (self.SIGN * v) % self.ell

    def as_dict(self) -> dict[int, int]:
        return dict(self._fwd)

    def support(self) -> frozenset[int]:
        return frozenset(e for e, m in self._fwd.items() if m != 0)

    def is_zero(self) -> bool:
        return not self.support()

    def __add__(self, other):
        return type(self)(
            self.graph,
            self.ell,
            {e: self._fwd[e] + other._fwd[e] for e in self._fwd},
        )

    def __neg__(self):
        return type(self)(self.graph, self.ell, {e: -m for e, m in self._fwd.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return type(self)(self.graph, self.ell, {e: c * m for e, m in self._fwd.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, type(self))
            and type(self) is type(other)
            and self.ell == other.ell
            and self.graph == other.graph
            and self._fwd == other._fwd
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.ell, tuple(sorted(self._fwd.items()))))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(ell={self.ell}, {self._fwd})"


class OneCochain(_EdgeFunction):
    """Antisymmetric dart function, b(conj e) = -b(e)."""

    SIGN = -1


class EvenFunction(_EdgeFunction):
    """Symmetric dart function, b(conj e) = b(e)."""

    SIGN = 1


def delta(a: ZeroCochain) -> OneCochain:
    """(delta a)(e) = a(head) - a(tail) on every dart."""
    g = a.graph
    return OneCochain(
        g, a.ell, {e: a(h) - a(t) for e, (t, h) in g.edges.items()}
    )


def boundary(b: OneCochain) -> ZeroCochain:
    """(boundary b)(v) = sum of b over the darts pointing into v."""
    g = b.graph
    vals = {v: 0 for v in g.vertices}
    for d in g.darts():
        vals[g.head(d)] += b.on_dart(d)
    return ZeroCochain(g, b.ell, vals)


def pairing(x, y) -> int:
    """Bilinear pairing on C0 (sum over vertices) or C1 (sum over edges).

    On C1 the per-edge product b1(e)b2(e) is orientation independent, which
    sidesteps the 1/2 factor and works for even moduli too.
    """
    if x.ell != y.ell or x.graph != y.graph:
        raise CochainError("mismatched cochains")
    if isinstance(x, ZeroCochain) and isinstance(y, ZeroCochain):
        return sum(x(v) * y(v) for v in x.graph.vertices) % x.ell
    if isinstance(x, _EdgeFunction) and isinstance(y, _EdgeFunction):
        return sum(x.on_edge(e) * y.on_edge(e) for e in x.graph.edge_ids) % x.ell
    raise CochainError("pairing needs two cochains of the same degree")


def cut(g: Multigraph, t: Iterable[int], e: int, ell: int) -> OneCochain:
    """The cut of the tree edge e: +1 on every edge crossing from the
    tail-side component of t - e to the head-side component."""
    tset = _check_spanning_tree(g, t)
    if e not in tset:
        raise GraphError("cut edge must lie in the spanning tree")
    # component of the head of e in t - e
    head_side = {g.ends(e)[1]}
    changed = True
    while changed:
        changed = False
        for f in tset:
            if f == e:
                continue
            a, b = g.ends(f)
            if (a in head_side) != (b in head_side):
                head_side.update((a, b))
                changed = True
    vals = {}
    for f, (a, b) in g.edges.items():
        va, vb = a in head_side, b in head_side
        if va and not vb:
            vals[f] = -1
        elif vb and not va:
            vals[f] = 1
        else:
            vals[f] = 0
    return OneCochain(g, ell, vals)


def cut_basis(g: Multigraph, t: Iterable[int], ell: int) -> list[OneCochain]:
    """One cut per tree edge; a basis of im delta (#V - 1 elements)."""
    tset = _check_spanning_tree(g, t)
    return [cut(g, tset, e, ell) for e in sorted(tset)]


def circuit_sum(b, circuit: list[Dart]) -> int:
    return sum(b.on_dart(d) for d in circuit) % b.ell


def in_image_delta(b: OneCochain) -> bool:
    """True iff every fundamental circuit sum of b vanishes."""
    g = b.graph
    t = spanning_tree(g)
    return all(circuit_sum(b, c) == 0 for c in fundamental_circuits(g, t))


def solve_delta(b: OneCochain) -> ZeroCochain:
    """A potential a with delta a = b, normalized to 0 at the lowest vertex."""
    g = b.graph
    t = spanning_tree(g)
    base = g.vertices[0]
    vals = {base: 0}
    for v in g.vertices:
        if v not in vals:
            acc = 0
            for d in tree_path(g, t, base, v):
                acc += b.on_dart(d)
            vals[v] = acc % b.ell
    a = ZeroCochain(g, b.ell, vals)
    if delta(a) != b:
        raise CochainError("cochain is not in the image of delta")
    return a


def solve_boundary(d0: ZeroCochain) -> OneCochain:
    """A one-cochain M with boundary M = d0, supported on a spanning tree.

    Solvable iff the values of d0 sum to zero; built leaf-to-root.
    """
    g = d0.graph
    ell = d0.ell
    if sum(d0(v) for v in g.vertices) % ell != 0:
        raise CochainError("total sum nonzero: no solution")
    t = spanning_tree(g)
    remaining = {v: d0(v) for v in g.vertices}
    tree_adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for e in t:
        a, b = g.ends(e)
        tree_adj[a].add(e)
        tree_adj[b].add(e)
    vals = {e: 0 for e in g.edge_ids}
    adj = {v: set(tree_adj[v]) for v in g.vertices}
    leaves = [v for v in g.vertices if len(adj[v]) == 1]
    while leaves:
        v = leaves.pop()
        if not adj[v]:
            continue
        (e,) = adj[v]
        a, b = g.ends(e)
        other = b if a == v else a
        # orient the needed amount into v
        need = remaining[v] % ell
        if g.ends(e)[1] == v:
            vals[e] = need
        else:
            vals[e] = (-need) % ell
        # the edge contributes -need at the other end
        remaining[v] = 0
        remaining[other] = (remaining[other] + need) % ell
        adj[v].discard(e)
        adj[other].discard(e)
        if len(adj[other]) == 1:
            leaves.append(other)
    m = OneCochain(g, ell, vals)
    if boundary(m) != d0:
        raise CochainError("internal error: boundary solve failed")
    return m
