"""Connected multigraphs with loops and parallel edges.

Edges are stored as ``edge id -> (tail, head)``.  A dart (half-edge) is a
pair ``(edge_id, side)`` where side 0 runs tail -> head and side 1 is the
conjugate dart.  Contractions keep the surviving edge ids, so functions on
the edges of a contraction are literally functions on a subset of the
original edges.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional

Dart = tuple[int, int]

MAX_CODE_VERTICES = 8


class GraphError(ValueError):
    """Invalid graph data or arguments."""


class SizeBoundExceeded(RuntimeError):
    """A configured enumeration or expansion bound was exceeded."""


class Multigraph:
    """Connected multigraph, immutable after construction."""

    __slots__ = ("_vertices", "_edges")

    def __init__(self, vertices: Iterable[int], edges):
        vs = tuple(sorted(set(int(v) for v in vertices)))
        if not vs:
            raise GraphError("graph needs at least one vertex")
        if isinstance(edges, Mapping):
            items = [(int(e), (int(t), int(h))) for e, (t, h) in edges.items()]
        else:
            items = [(i, (int(t), int(h))) for i, (t, h) in enumerate(edges)]
        items.sort()
        ids = [e for e, _ in items]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate edge ids")
        vset = set(vs)
        for e, (t, h) in items:
            if t not in vset or h not in vset:
                raise GraphError(f"edge {e} touches unknown vertex")
        self._vertices = vs
        self._edges = dict(items)
        if not self._is_connected():
            raise GraphError("graph is not connected")

    def _is_connected(self) -> bool:
        seen = {self._vertices[0]}
        queue = deque(seen)
        adj: dict[int, list[int]] = {v: [] for v in self._vertices}
        for t, h in self._edges.values():
            adj[t].append(h)
            adj[h].append(t)
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self._vertices)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> dict[int, tuple[int, int]]:
        return dict(self._edges)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self._edges)

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def ends(self, e: int) -> tuple[int, int]:
        try:
            return self._edges[e]
        except KeyError:
            raise GraphError(f"unknown edge id {e}") from None

    def is_loop(self, e: int) -> bool:
        t, h = self.ends(e)
        return t == h

    def loops(self) -> frozenset[int]:
        return frozenset(e for e in self._edges if self.is_loop(e))

    def conj(self, d: Dart) -> Dart:
        e, s = d
        self.ends(e)
        return (e, 1 - s)

    def tail(self, d: Dart) -> int:
        e, s = d
        t, h = self.ends(e)
        return t if s == 0 else h

    def head(self, d: Dart) -> int:
        return self.tail((d[0], 1 - d[1]))

    def darts(self) -> Iterator[Dart]:
        for e in self._edges:
            yield (e, 0)
            yield (e, 1)

    def darts_at(self, v: int) -> list[Dart]:
        """All darts with tail v; a loop contributes both of its darts."""
        out = []
        for e, (t, h) in self._edges.items():
            if t == v:
                out.append((e, 0))
            if h == v:
                out.append((e, 1))
        return out

    def degree(self, v: int) -> int:
        return len(self.darts_at(v))

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for e, (t, h) in self._edges.items():
            if t == v and h != v:
                out.add(h)
            elif h == v and t != v:
                out.add(t)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multigraph)
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(sorted(self._edges.items()))))

    def __repr__(self) -> str:
        es = ", ".join(f"{e}:{t}-{h}" for e, (t, h) in self._edges.items())
        return f"Multigraph(V={list(self._vertices)}, E={{{es}}})"


class Contraction(NamedTuple):
    graph: Multigraph
    vertex_map: dict[int, int]
    edge_map: dict[int, int]


def contract_edges(g: Multigraph, f: Iterable[int]) -> Contraction:
    """Contract the edge set f; surviving edges keep their ids.

    Vertices merged along f are renamed to the smallest original id of
    their merged class.  Loops created by the contraction are kept.
    """
    fset = set(f)
    for e in fset:
        g.ends(e)
    parent = {v: v for v in g.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in fset:
        t, h = g.ends(e)
        rt, rh = find(t), find(h)
        if rt != rh:
            lo, hi = min(rt, rh), max(rt, rh)
            parent[hi] = lo
    vertex_map = {v: find(v) for v in g.vertices}
    new_vertices = sorted(set(vertex_map.values()))
    new_edges = {
        e: (vertex_map[t], vertex_map[h])
        for e, (t, h) in g.edges.items()
        if e not in fset
    }
    graph = Multigraph(new_vertices, new_edges)
    edge_map = {e: e for e in new_edges}
    return Contraction(graph, vertex_map, edge_map)


def separating_edges(g: Multigraph) -> frozenset[int]:
    """The bridges of g.  Loops and parallel edges are never bridges."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[int] = set()
    counter = itertools.count()
    root = g.vertices[0]
    # iterative DFS over darts; each edge is traversed at most once
    used_edges: set[int] = set()
    stack: list[tuple[int, Optional[int], Iterator[Dart]]] = []
    disc[root] = low[root] = next(counter)
    stack.append((root, None, iter(g.darts_at(root))))
    while stack:
        v, in_edge, it = stack[-1]
        advanced = False
        for d in it:
            e = d[0]
            if e == in_edge or e in used_edges or g.is_loop(e):
                continue
            w = g.head(d)
            if w in disc:
                used_edges.add(e)
                low[v] = min(low[v], disc[w])
            else:
                used_edges.add(e)
                disc[w] = low[w] = next(counter)
                stack.append((w, e, iter(g.darts_at(w))))
                advanced = True
                break
        if not advanced:
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if in_edge is not None and low[v] > disc[u]:
                    bridges.add(in_edge)
    return frozenset(bridges)


def spanning_tree(g: Multigraph) -> frozenset[int]:
    """Lowest-edge-id spanning tree (Kruskal on edge ids)."""
    parent = {v: v for v in g.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree = set()
    for e in sorted(g.edge_ids):
        t, h = g.ends(e)
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[rt] = rh
            tree.add(e)
    return frozenset(tree)


def _check_spanning_tree(g: Multigraph, t: Iterable[int]) -> frozenset[int]:
    tset = frozenset(t)
    for e in tset:
        g.ends(e)
    if len(tset) != g.n_vertices - 1:
        raise GraphError("not a spanning tree: wrong edge count")
    parent = {v: v for v in g.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in tset:
        a, b = g.ends(e)
        ra, rb = find(a), find(b)
        if ra == rb:
            raise GraphError("not a spanning tree: contains a circuit")
        parent[ra] = rb
    return tset


def tree_path(g: Multigraph, t: Iterable[int], u: int, v: int) -> list[Dart]:
    """The unique dart path from u to v inside the spanning tree t."""
    tset = _check_spanning_tree(g, t)
    if u == v:
        return []
    prev: dict[int, Dart] = {}
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for d in g.darts_at(x):
            if d[0] not in tset:
                continue
            y = g.head(d)
            if y not in seen:
                seen.add(y)
                prev[y] = d
                queue.append(y)
    path = []
    x = v
    while x != u:
        d = prev[x]
        path.append(d)
        x = g.tail(d)
    path.reverse()
    return path


def fundamental_circuits(g: Multigraph, t: Iterable[int]) -> list[list[Dart]]:
    """One circuit per non-tree edge: the edge followed by the tree path back.

    A loop yields a length-1 circuit.
    """
    tset = _check_spanning_tree(g, t)
    circuits = []
    for e in sorted(g.edge_ids):
        if e in tset:
            continue
        d = (e, 0)
        if g.is_loop(e):
            circuits.append([d])
        else:
            circuits.append([d] + tree_path(g, tset, g.head(d), g.tail(d)))
    return circuits


def betti1(g: Multigraph) -> int:
    return g.n_edges - g.n_vertices + 1


def is_tree_like(g: Multigraph) -> bool:
    """True iff every circuit of g is a loop, i.e. every non-loop edge is a bridge."""
    seps = separating_edges(g)
    return all(g.is_loop(e) or e in seps for e in g.edge_ids)


def canonical_code(
    g: Multigraph,
    labels: Optional[Mapping[int, int]] = None,
    reverse: Optional[Callable[[int], int]] = None,
    max_vertices: int = MAX_CODE_VERTICES,
) -> bytes:
    """Isomorphism-invariant code for a (labelled) multigraph.

    Two labelled graphs get equal codes iff they are isomorphic, where an
    isomorphism may reverse darts and labels transform by the ``reverse``
    rule (default: unchanged).  Computed by minimizing an encoding over all
    degree-respecting vertex orderings, so it is exact but exponential; the
    vertex count is bounded by ``max_vertices``.
    """
    if g.n_vertices > max_vertices:
        raise SizeBoundExceeded(
            f"canonical_code limited to {max_vertices} vertices"
        )
    if reverse is None:
        reverse = lambda m: m
    degrees = {v: g.degree(v) for v in g.vertices}
    classes: dict[int, list[int]] = {}
    for v in g.vertices:
        classes.setdefault(degrees[v], []).append(v)
    sorted_degrees = sorted(classes)
    prefix = tuple(
        d for d in sorted_degrees for _ in classes[d]
    )
    edge_items = list(g.edges.items())
    best = None
    for perm_parts in itertools.product(
        *(itertools.permutations(classes[d]) for d in sorted_degrees)
    ):
        pos: dict[int, int] = {}
        i = 0
        for part in perm_parts:
            for v in part:
                pos[v] = i
                i += 1
        enc = []
        for e, (t, h) in edge_items:
            m = labels[e] if labels is not None else 0
            pt, ph = pos[t], pos[h]
            if pt < ph:
                enc.append((pt, ph, m))
            elif pt > ph:
                enc.append((ph, pt, reverse(m)))
            else:
                enc.append((pt, pt, min(m, reverse(m))))
        enc.sort()
        cand = (prefix, tuple(enc))
        if best is None or cand < best:
            best = cand
    return repr(best).encode("ascii")


def _pair_multiset_graph(nv: int, pairs: list[tuple[int, int]]) -> Optional[Multigraph]:
    try:
        return Multigraph(range(nv), [(t, h) for t, h in pairs])
    except GraphError:
        return None


def enumerate_base_graphs(max_edges: int) -> list[Multigraph]:
    """All connected loopless bridgeless multigraphs with >= 2 vertices and
    at most ``max_edges`` edges, one per isomorphism class.

    Every vertex necessarily has degree >= 2.  Deterministic order:
    (edge count, vertex count, canonical code).
    """
    if max_edges > MAX_CODE_VERTICES:
        raise SizeBoundExceeded("enumerate_base_graphs limited to 8 edges")
    found: dict[bytes, tuple[int, int, Multigraph]] = {}
    for nv in range(2, max_edges + 1):
        all_pairs = [
            (i, j) for i in range(nv) for j in range(i + 1, nv)
        ]

        def rec(idx: int, remaining: int, chosen: list[tuple[int, int]], deg: list[int]):
            deficit = sum(max(0, 2 - d) for d in deg)
            if deficit > 2 * remaining:
                return
            if all(d >= 2 for d in deg) and chosen:
                graph = _pair_multiset_graph(nv, chosen)
                if graph is not None and not separating_edges(graph):
                    code = canonical_code(graph)
                    if code not in found:
                        found[code] = (graph.n_edges, graph.n_vertices, graph)
            if remaining == 0 or idx >= len(all_pairs):
                return
            # take up to `remaining` more copies of pair idx, then move on
            for copies in range(remaining + 1):
                if copies:
                    chosen.extend([all_pairs[idx]] * copies)
                    t, h = all_pairs[idx]
                    deg[t] += copies
                    deg[h] += copies
                rec(idx + 1, remaining - copies, chosen, deg)
                if copies:
                    del chosen[-copies:]
                    t, h = all_pairs[idx]
                    deg[t] -= copies
                    deg[h] -= copies

        # a subtlety: rec records graphs at every node, so run it once
        rec(0, max_edges, [], [0] * nv)
    ordered = sorted(
        found.items(), key=lambda kv: (kv[1][0], kv[1][1], kv[0])
    )
    return [graph for _, (_, _, graph) in ordered]
