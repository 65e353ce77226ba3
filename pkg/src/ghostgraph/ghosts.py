"""Ghost automorphism groups of a decorated graph.

A ghost automorphism is an even Z/ell function a on the faithful part of
the graph; it belongs to the automorphism group of the root iff the odd
cochain a*M lies in im delta.  Ages are exact rationals; the stratum age
minimizes over the quotient graph with loops and separating edges
contracted, which quotients out the quasireflections.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .cochains import (
    EvenFunction,
    OneCochain,
    circuit_sum,
    cut_basis,
    fundamental_circuits,
    in_image_delta,
    spanning_tree,
)
from .decorated import (
    DecoratedGraph,
    DecorationError,
    contract_decorated,
    gamma0,
    gamma_p,
    gamma_nu,
    prime_factors,
)
from .graphs import (
    Multigraph,
    SizeBoundExceeded,
    is_tree_like,
    separating_edges,
)
from .modular import inverse_mod, solve_mod_prime

EXPANSION_BOUND = 10**7

INFINITE_AGE = math.inf


def is_prime(ell: int) -> bool:
    fac = prime_factors(ell)
    return len(fac) == 1 and next(iter(fac.values())) == 1


def _require_prime(ell: int):
    if not is_prime(ell):
        raise DecorationError(f"operation needs a prime level, got {ell}")


def _require_faithful(d: DecoratedGraph):
    if not d.is_faithful():
        raise DecorationError("decorated graph must be faithful; apply gamma0 first")


def lifts(a: EvenFunction, d: DecoratedGraph) -> bool:
    """True iff the odd cochain a*M lies in im delta (circuit test)."""
    _require_prime(d.ell)
    _require_faithful(d)
    prod = OneCochain(
        d.graph, d.ell, {e: a.on_edge(e) * d.m_value(e) for e in d.graph.edge_ids}
    )
    return in_image_delta(prod)


@dataclass
class GhostGroup:
    decorated: DecoratedGraph
    generators: list[EvenFunction]
    order: int

    def elements(self, max_elements: int = EXPANSION_BOUND) -> Iterator[EvenFunction]:
        """All group elements (including the identity) by expansion."""
        if self.order > max_elements:
            raise SizeBoundExceeded(
                f"group order {self.order} exceeds the expansion bound"
            )
        g = self.decorated.graph
        ell = self.decorated.ell
        edge_ids = g.edge_ids
        gen_rows = [[gen.on_edge(e) for e in edge_ids] for gen in self.generators]
        seen = set()
        for coeffs in itertools.product(range(ell), repeat=len(gen_rows)):
            row = tuple(
                sum(c * gr[i] for c, gr in zip(coeffs, gen_rows)) % ell
                for i in range(len(edge_ids))
            )
            if row in seen:
                continue
            seen.add(row)
            yield EvenFunction(g, ell, dict(zip(edge_ids, row)))

    def contains(self, a: EvenFunction, max_elements: int = EXPANSION_BOUND) -> bool:
        return any(a == b for b in self.elements(max_elements))


def ghost_group(d: DecoratedGraph) -> GhostGroup:
    """The ghost group of the decorated graph, computed on gamma0.

    Generators: cut basis of the faithful part divided pointwise by M.
    Order: ell^(#V0 - 1) for prime ell.
    """
    _require_prime(d.ell)
    d0, _ = gamma0(d)
    g = d0.graph
    ell = d0.ell
    t = spanning_tree(g)
    gens = []
    for b in cut_basis(g, t, ell):
        vals = {
            e: b.on_edge(e) * inverse_mod(d0.m_value(e), ell) for e in g.edge_ids
        }
        gens.append(EvenFunction(g, ell, vals))
    return GhostGroup(d0, gens, ell ** (g.n_vertices - 1))


def qr_subgroup(d: DecoratedGraph) -> GhostGroup:
    """Subgroup generated by ghosts supported on one separating edge each."""
    _require_prime(d.ell)
    d0, _ = gamma0(d)
    g = d0.graph
    ell = d0.ell
    gens = []
    for e in sorted(separating_edges(g)):
        vals = {f: (1 if f == e else 0) for f in g.edge_ids}
        gens.append(EvenFunction(g, ell, vals))
    return GhostGroup(d0, gens, ell ** len(gens))


def age(a: EvenFunction) -> Fraction:
    """Sum of rep(a(e))/ell over the unoriented non-loop edges."""
    g = a.graph
    total = sum(a.on_edge(e) for e in g.edge_ids if not g.is_loop(e))
    return Fraction(total, a.ell)


def is_supported(a: EvenFunction) -> bool:
    """True iff a is nonzero on every edge of its graph."""
    return len(a.support()) == a.graph.n_edges


def inverse(a: EvenFunction) -> EvenFunction:
    return -a


@dataclass
class AgeReport:
    automorphism: EvenFunction
    age: Fraction
    support_size: int


def reduced_core(d: DecoratedGraph) -> DecoratedGraph:
    """gamma0 with loops and separating edges contracted to a fixpoint."""
    core, _ = gamma0(d)
    while True:
        drop = set(core.graph.loops()) | set(separating_edges(core.graph))
        if not drop:
            return core
        core = contract_decorated(core, drop)


def _junior_candidates(n_edges: int, ell: int) -> Iterator[tuple[int, ...]]:
    """All nonzero rep vectors with entry sum < ell (age below 1)."""

    def rec(i: int, budget: int, acc: list[int]):
        if i == n_edges:
            if any(acc):
                yield tuple(acc)
            return
        for v in range(budget + 1):
            acc.append(v)
            yield from rec(i + 1, budget - v, acc)
            acc.pop()

    yield from rec(0, ell - 1, [])


def minimal_age_report(
    d: DecoratedGraph, max_elements: int = EXPANSION_BOUND
) -> Optional[AgeReport]:
    """Minimum age over the non-identity ghosts of the reduced core.

    Returns None when the reduced group is trivial.  Elements of age below
    1 are found by direct enumeration of small rep vectors; otherwise the
    whole group is expanded (bounded).
    """
    _require_prime(d.ell)
    core = reduced_core(d)
    g = core.graph
    ell = core.ell
    if g.n_vertices == 1:
        return None
    edge_ids = g.edge_ids
    t = spanning_tree(g)
    circuits = fundamental_circuits(g, t)
    m_fwd = {e: core.m_value(e) for e in edge_ids}

    def lift_ok(vals: dict[int, int]) -> bool:
        prod = OneCochain(g, ell, {e: vals[e] * m_fwd[e] for e in edge_ids})
        return all(circuit_sum(prod, c) == 0 for c in circuits)

    best: Optional[AgeReport] = None
    for reps in _junior_candidates(len(edge_ids), ell):
        vals = dict(zip(edge_ids, reps))
        if not lift_ok(vals):
            continue
        a = EvenFunction(g, ell, vals)
        report = AgeReport(a, Fraction(sum(reps), ell), len(a.support()))
        if best is None or report.age < best.age:
            best = report
    if best is not None:
        return best
    group = ghost_group(core)
    for a in group.elements(max_elements):
        if a.is_zero():
            continue
        report = AgeReport(a, age(a), len(a.support()))
        if best is None or report.age < best.age:
            best = report
    return best


def stratum_age(d: DecoratedGraph, max_elements: int = EXPANSION_BOUND):
    """Minimum age over non-identity reduced ghosts; +inf if none exist."""
    report = minimal_age_report(d, max_elements)
    return INFINITE_AGE if report is None else report.age


def is_junior(d: DecoratedGraph, max_elements: int = EXPANSION_BOUND) -> bool:
    return stratum_age(d, max_elements) < 1


def generated_by_qr(d: DecoratedGraph) -> bool:
    """True iff every ghost is a product of quasireflections.

    Prime level: the faithful graph is tree-like.  Composite level: the
    graph Gamma_p is tree-like for every prime divisor p.
    """
    fac = prime_factors(d.ell)
    if len(fac) == 1 and list(fac.values())[0] == 1:
        d0, _ = gamma0(d)
        return is_tree_like(d0.graph)
    return all(is_tree_like(gamma_p(d, p)) for p in fac)


def alpha_beta(d: DecoratedGraph, p: int) -> tuple[list[int], list[int]]:
    """The vertex and separating-edge increments along the p-divisibility
    contraction chain, for k = 1 .. e_p.

    alpha_p^k = #V(Gamma(nu_p^{e_p-k+1})) - #V(Gamma(nu_p^{e_p-k})), with
    the k = e_p term taken against the single point; beta analogous with
    separating-edge counts.
    """
    fac = prime_factors(d.ell)
    if p not in fac:
        raise DecorationError(f"{p} does not divide the level {d.ell}")
    e_p = fac[p]

    def stats(graph: Multigraph) -> tuple[int, int]:
        return graph.n_vertices, len(separating_edges(graph))

    alphas, betas = [], []
    for k in range(1, e_p + 1):
        hi = gamma_nu(d, p, e_p - k + 1)
        if e_p - k >= 1:
            lo_v, lo_s = stats(gamma_nu(d, p, e_p - k))
        else:
            lo_v, lo_s = 1, 0
        hi_v, hi_s = stats(hi)
        alphas.append(hi_v - lo_v)
        betas.append(hi_s - lo_s)
    return alphas, betas


def vine_witness(d: DecoratedGraph) -> Optional[tuple[frozenset[int], frozenset[int], int]]:
    """A 2-part vertex partition of the faithful graph contracting onto an
    n-vine with n >= 2, or None when the graph is tree-like."""
    d0, _ = gamma0(d)
    g = d0.graph
    if is_tree_like(g):
        return None
    seps = separating_edges(g)
    e = next(
        e for e in sorted(g.edge_ids) if not g.is_loop(e) and e not in seps
    )
    tail, head = g.ends(e)
    # build a spanning tree that contains e, then split it at e
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree = []
    order = [e] + [f for f in sorted(g.edge_ids) if f != e]
    for f in order:
        a, b = g.ends(f)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            tree.append(f)
    side = {tail}
    changed = True
    while changed:
        changed = False
        for f in tree:
            if f == e:
                continue
            a, b = g.ends(f)
            if (a in side) != (b in side):
                side.update((a, b))
                changed = True
    part1 = frozenset(side)
    part2 = frozenset(g.vertices) - part1
    n = sum(
        1
        for f, (a, b) in g.edges.items()
        if (a in part1) != (b in part1)
    )
    return part1, part2, n


@dataclass
class CoverDecomposition:
    decorated: DecoratedGraph
    parts: list[frozenset[int]]
    graphs: list[DecoratedGraph]
    rank_equal: bool

    def decompose(self, a: EvenFunction) -> Optional[list[EvenFunction]]:
        """Write a as a sum of group elements supported on the parts."""
        d0 = self.decorated
        g = d0.graph
        ell = d0.ell
        edge_ids = g.edge_ids
        columns = []
        owners = []
        for idx, dec in enumerate(self.graphs):
            group = ghost_group(dec)
            for gen in group.generators:
                col = []
                for e in edge_ids:
                    col.append(gen.on_edge(e) if e in dec.graph.edge_ids else 0)
                columns.append(col)
                owners.append(idx)
        matrix = [
            [columns[j][i] for j in range(len(columns))]
            for i in range(len(edge_ids))
        ]
        rhs = [a.on_edge(e) for e in edge_ids]
        sol = solve_mod_prime(matrix, rhs, ell)
        if sol is None:
            return None
        out = []
        for idx in range(len(self.graphs)):
            vals = {e: 0 for e in edge_ids}
            for j, c in enumerate(sol):
                if owners[j] != idx or c == 0:
                    continue
                for e in edge_ids:
                    vals[e] = (vals[e] + c * columns[j][edge_ids.index(e)]) % ell
            out.append(EvenFunction(g, ell, vals))
        return out


def cover_decompose(
    d: DecoratedGraph, parts: Iterable[Iterable[int]]
) -> CoverDecomposition:
    """Decomposition data for a disjoint edge cover of the faithful graph.

    Each part keeps exactly its edge subset (the rest is contracted).  For
    2-part covers the rank condition #V0 - 1 = sum(#Vi - 1) is recorded.
    """
    _require_prime(d.ell)
    d0, _ = gamma0(d)
    g = d0.graph
    part_sets = [frozenset(p) for p in parts]
    all_edges = frozenset(g.edge_ids)
    seen: set[int] = set()
    for p in part_sets:
        if not p or not p <= all_edges:
            raise DecorationError("each part must be a nonempty edge subset")
        if p & seen:
            raise DecorationError("parts overlap: not permitted")
        seen |= p
    if seen != all_edges:
        raise DecorationError("parts do not cover the edge set")
    graphs = [contract_decorated(d0, all_edges - p) for p in part_sets]
    rank_equal = (g.n_vertices - 1) == sum(
        dec.graph.n_vertices - 1 for dec in graphs
    )
    return CoverDecomposition(d0, part_sets, graphs, rank_equal)
