"""Exhaustive classification of junior strata for prime levels.

A class is an isomorphism class of decorated graphs (loopless bridgeless
base, faithful decoration).  For every base graph all decorations are
scanned in one vectorized pass: an even function of age below 1 has rep
values summing to less than ell, so the junior witnesses live in a small
candidate set that is independent of the decoration.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .cochains import EvenFunction, OneCochain
from .decorated import DecoratedGraph, DecorationError, contract_decorated, genus_labeling
from .ghosts import is_prime
from .graphs import (
    Multigraph,
    SizeBoundExceeded,
    canonical_code,
    enumerate_base_graphs,
    fundamental_circuits,
    spanning_tree,
)

SUPPORTED_LEVELS = (2, 3, 5, 7)
GATED_LEVELS = (11,)


@dataclass
class StratumClass:
    decorated: DecoratedGraph
    code: bytes
    vine: Optional[tuple[int, ...]]
    age: Fraction
    witness: EvenFunction
    codimension: int
    admissible_k: frozenset[int]
    orbit_size: int
    maximal: bool

    @property
    def ell(self) -> int:
        return self.decorated.ell


def decoration_code(d: DecoratedGraph) -> bytes:
    """Canonical code of a decorated graph: graph isomorphisms act on the
    decoration by pullback, dart reversal negates M."""
    ell = d.ell
    labels = {e: d.m_value(e) for e in d.graph.edge_ids}
    return canonical_code(d.graph, labels=labels, reverse=lambda m: (-m) % ell)


def vine_notation(d: DecoratedGraph) -> Optional[tuple[int, ...]]:
    """For a 2-vertex graph, the sorted decoration values oriented from the
    lower vertex, normalized under global negation."""
    g = d.graph
    if g.n_vertices != 2 or g.loops():
        return None
    lo = g.vertices[0]
    vals = []
    for e, (t, h) in g.edges.items():
        m = d.m_value(e)
        vals.append(m if t == lo else (-m) % d.ell)
    fwd = tuple(sorted(vals))
    bwd = tuple(sorted((-m) % d.ell for m in vals))
    return min(fwd, bwd)


def _candidate_matrix(n_edges: int, ell: int):
    """All nonzero rep vectors with entry sum below ell."""
    rows = []

    def rec(i: int, budget: int, acc: list[int]):
        if i == n_edges:
            if any(acc):
                rows.append(tuple(acc))
            return
        for v in range(budget + 1):
            acc.append(v)
            rec(i + 1, budget - v, acc)
            acc.pop()

    rec(0, ell - 1, [])
    return np.array(rows, dtype=np.int64)


def _circuit_matrix(g: Multigraph) -> np.ndarray:
    edge_index = {e: i for i, e in enumerate(g.edge_ids)}
    circuits = fundamental_circuits(g, spanning_tree(g))
    mat = np.zeros((len(circuits), g.n_edges), dtype=np.int64)
    for r, circ in enumerate(circuits):
        for (e, side) in circ:
            mat[r, edge_index[e]] += 1 if side == 0 else -1
    return mat


@dataclass
class _GraphScan:
    graph: Multigraph
    decorations: np.ndarray  # (n, E) all-nonzero decorations
    junior: np.ndarray  # (n,) bool
    age_num: np.ndarray  # (n,) minimal age numerator (over ell), 0 if senior
    witness_idx: np.ndarray  # (n,) candidate row index of the minimal witness
    candidates: np.ndarray
    maximal: np.ndarray  # (n,) bool: every junior witness fully supported


def scan_graph(g: Multigraph, ell: int, chunk: int = 8192) -> _GraphScan:
    """Vectorized junior scan over every all-nonzero decoration of g.

    A witness a is valid for M iff every circuit sum of aM vanishes; those
    sums are bilinear, so for each circuit they factor as one dense float
    multiply M @ C with C[e, c] = cand[c, e] * circ[k, e] per decoration
    chunk.  Entries stay far below 2**24, so float32 arithmetic is exact,
    and s = 0 mod ell is tested as rint(s/ell)*ell == s without leaving
    float.  Since a is valid for M exactly when it is valid for u*M for
    any unit u, only decorations with first entry 1 are scanned and the
    flags are transferred along the scaling orbits.
    """
    n_e = g.n_edges
    cands = _candidate_matrix(n_e, ell)
    n_c = cands.shape[0]
    ages = cands.sum(axis=1)
    has_zero = (cands == 0).any(axis=1)
    circ = _circuit_matrix(g)
    # one (E, n_c) float block per circuit
    blocks = [
        (cands * circ[k][None, :]).T.astype(np.float32)
        for k in range(circ.shape[0])
    ]
    ranges = [np.arange(1, ell)] * n_e
    grids = np.meshgrid(*ranges, indexing="ij")
    decorations = np.stack([a.ravel() for a in grids], axis=1)
    # scan one decoration per scaling orbit: first entry fixed to 1
    reduced = decorations[decorations[:, 0] == 1]
    n_red = reduced.shape[0]
    junior_r = np.zeros(n_red, dtype=bool)
    maximal_r = np.zeros(n_red, dtype=bool)
    age_num_r = np.zeros(n_red, dtype=np.int64)
    witness_r = np.zeros(n_red, dtype=np.int64)
    big = np.int64(10 * ell)
    inv_ell = np.float32(1.0 / ell)
    f_ell = np.float32(ell)
    for start in range(0, n_red, chunk):
        m_chunk = reduced[start : start + chunk].astype(np.float32)
        valid = None
        for block in blocks:
            s = m_chunk @ block
            ok = np.rint(s * inv_ell) * f_ell == s
            valid = ok if valid is None else (valid & ok)
        if valid is None:  # no circuits: every candidate lifts
            valid = np.ones((m_chunk.shape[0], n_c), dtype=bool)
        any_valid = valid.any(axis=1)
        masked = np.where(valid, ages[None, :], big)
        sl = slice(start, start + m_chunk.shape[0])
        junior_r[sl] = any_valid
        witness_r[sl] = masked.argmin(axis=1)
        age_num_r[sl] = np.where(any_valid, masked.min(axis=1), 0)
        unsupported = (valid & has_zero[None, :]).any(axis=1)
        maximal_r[sl] = any_valid & ~unsupported
    # transfer along scaling orbits: index of u^{-1} M in the reduced grid
    inv_table = np.array([0] + [pow(v, -1, ell) for v in range(1, ell)])
    reps = (decorations * inv_table[decorations[:, 0]][:, None]) % ell
    powers = (ell - 1) ** np.arange(n_e - 2, -1, -1) if n_e > 1 else np.array([], dtype=np.int64)
    rep_idx = (reps[:, 1:] - 1) @ powers if n_e > 1 else np.zeros(len(reps), dtype=np.int64)
    return _GraphScan(
        g,
        decorations,
        junior_r[rep_idx],
        age_num_r[rep_idx],
        witness_r[rep_idx],
        cands,
        maximal_r[rep_idx],
    )


def _decorated_from_vector(g: Multigraph, ell: int, vec) -> DecoratedGraph:
    vals = {e: int(v) for e, v in zip(g.edge_ids, vec)}
    return DecoratedGraph(g, ell, OneCochain(g, ell, vals))


def enumerate_decorations(g: Multigraph, ell: int) -> list[DecoratedGraph]:
    """All-nonzero decorations of g, one per isomorphism class.

    Isomorphisms are graph automorphisms acting on darts; dart reversal
    negates M.  Deterministic order: canonical code.
    """
    if not is_prime(ell):
        raise DecorationError(f"level must be prime, got {ell}")
    if (ell - 1) ** g.n_edges > 10**7:
        raise SizeBoundExceeded("too many decorations to enumerate")
    chosen: dict[bytes, tuple[int, ...]] = {}
    for vec in itertools.product(range(1, ell), repeat=g.n_edges):
        d = _decorated_from_vector(g, ell, vec)
        code = decoration_code(d)
        if code not in chosen or vec < chosen[code]:
            chosen[code] = vec
    return [
        _decorated_from_vector(g, ell, chosen[code]) for code in sorted(chosen)
    ]


def classify_junior(
    ell: int,
    k: Optional[int] = None,
    max_edges: Optional[int] = None,
    only_maximal: bool = False,
    allow_large: bool = False,
) -> list[StratumClass]:
    """Every isomorphism class of junior decorated graphs with at most
    max_edges (default ell - 1) edges, with closure-maximality flags.

    A class is junior when some nonzero ghost has age below 1; it is
    closure-maximal when no proper contraction of it is already junior,
    which happens exactly when every junior witness is fully supported.
    With ``k`` given, only classes whose multidegree condition is solvable
    for that k are returned.  The classification of closure-maximal classes
    is complete at the default bound: a fully supported witness of age
    below 1 forces #E < ell.
    """
    if not is_prime(ell):
        raise DecorationError(f"level must be prime, got {ell}")
    if ell not in SUPPORTED_LEVELS and not (allow_large and ell in GATED_LEVELS):
        raise DecorationError(
            f"level {ell} not supported (pass allow_large=True for {GATED_LEVELS})"
        )
    if max_edges is None:
        max_edges = ell - 1
    classes = list(_classify_cached(ell, max_edges, only_maximal))
    if k is not None:
        classes = [c for c in classes if k % ell in c.admissible_k]
    return classes


# each junior decoration is bucketed by canonical code in Python; cap the
# amount of that work for full (non-maximal) listings at large levels
BUCKET_BOUND = 20_000


@functools.lru_cache(maxsize=16)
def _classify_cached(
    ell: int, max_edges: int, only_maximal: bool
) -> tuple[StratumClass, ...]:
    classes: list[StratumClass] = []
    for g in enumerate_base_graphs(max_edges):
        scan = scan_graph(g, ell)
        mask = scan.junior & scan.maximal if only_maximal else scan.junior
        idxs = np.nonzero(mask)[0]
        if idxs.size == 0:
            continue
        if idxs.size > BUCKET_BOUND:
            raise SizeBoundExceeded(
                f"{idxs.size} junior decorations on one graph exceed the "
                f"bucketing bound; restrict to maximal classes or fewer edges"
            )
        buckets: dict[bytes, list[int]] = {}
        for i in idxs:
            d = _decorated_from_vector(g, ell, scan.decorations[i])
            buckets.setdefault(decoration_code(d), []).append(int(i))
        for code in sorted(buckets):
            members = buckets[code]
            rep_i = min(members, key=lambda i: tuple(scan.decorations[i]))
            rep = _decorated_from_vector(g, ell, scan.decorations[rep_i])
            cand = scan.candidates[scan.witness_idx[rep_i]]
            witness = EvenFunction(
                g, ell, {e: int(v) for e, v in zip(g.edge_ids, cand)}
            )
            admissible = frozenset(
                kk for kk in range(ell) if genus_labeling(rep, kk) is not None
            )
            flags = {bool(scan.maximal[i]) for i in members}
            assert len(flags) == 1, "maximality must be orbit invariant"
            cls = StratumClass(
                decorated=rep,
                code=code,
                vine=vine_notation(rep),
                age=Fraction(int(scan.age_num[rep_i]), ell),
                witness=witness,
                codimension=g.n_edges,
                admissible_k=admissible,
                orbit_size=len(members),
                maximal=flags.pop(),
            )
            classes.append(cls)
    classes.sort(
        key=lambda c: (c.decorated.graph.n_edges, c.decorated.graph.n_vertices, c.code)
    )
    for c in classes:
        if c.maximal:
            assert c.decorated.graph.n_edges < ell
    return tuple(classes)


def contracts_to(d0: DecoratedGraph, d1: DecoratedGraph) -> bool:
    """True iff some edge-subset contraction of d0 is isomorphic to d1."""
    if d0.ell != d1.ell:
        return False
    target = decoration_code(d1)
    e0 = d0.graph.n_edges
    e1 = d1.graph.n_edges
    if e1 > e0:
        return False
    edge_ids = d0.graph.edge_ids
    for f in itertools.combinations(edge_ids, e0 - e1):
        contracted = contract_decorated(d0, f)
        if decoration_code(contracted) == target:
            return True
    return False


def reduce_step(d: DecoratedGraph) -> Optional[tuple[DecoratedGraph, DecoratedGraph]]:
    """The two contractions of the vine-reduction configuration, if present.

    Looks for a vertex v1 with exactly two neighbors v2, v3 and a single
    edge e to one of them; returns the contractions along e' (one edge from
    v1 to the other neighbor) and along the rest of a spanning tree through
    e' that avoids e.  Whenever d is junior, one of the two contractions is
    junior as well, so such graphs never carry maximal junior strata.
    """
    g = d.graph
    for v1 in g.vertices:
        if any(g.is_loop(e) and v1 in g.ends(e) for e in g.edge_ids):
            continue
        nbrs = sorted(g.neighbors(v1))
        if len(nbrs) != 2:
            continue
        for v2 in nbrs:
            v3 = nbrs[0] if v2 == nbrs[1] else nbrs[1]
            connecting = [
                e
                for e, (t, h) in g.edges.items()
                if {t, h} == {v1, v2}
            ]
            if len(connecting) != 1:
                continue
            e = connecting[0]
            e_prime = min(
                f for f, (t, h) in g.edges.items() if {t, h} == {v1, v3}
            )
            # spanning tree through e_prime avoiding e
            parent = {v: v for v in g.vertices}

            def find(v):
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                return v

            tree = []
            order = [e_prime] + [
                f for f in sorted(g.edge_ids) if f not in (e_prime, e)
            ] + [e]
            for f in order:
                a, b = g.ends(f)
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    tree.append(f)
            if e in tree:
                continue
            d1 = contract_decorated(d, {e_prime})
            d2 = contract_decorated(d, set(tree) - {e_prime})
            return d1, d2
    return None


def prop_k_symmetry(
    ell: int,
    k: int,
    max_edges: Optional[int] = None,
    only_maximal: bool = False,
) -> bool:
    """Check that the k classification is the M -> k M image of the k=1 one."""
    if not is_prime(ell) or k % ell == 0:
        raise DecorationError("needs prime level and k nonzero")
    base = classify_junior(ell, k=1, max_edges=max_edges, only_maximal=only_maximal)
    target = classify_junior(ell, k=k, max_edges=max_edges, only_maximal=only_maximal)
    mapped = {decoration_code(c.decorated.scale(k)) for c in base}
    return mapped == {c.code for c in target}
