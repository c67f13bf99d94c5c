"""Constructive Hamiltonian cycles and pancyclic families for intersection graphs.

For ``R = R1 x R2`` the nontrivial ideals other than ``a ⊕ 0`` and ``0 ⊕ b``
sit on a grid: cell ``(i, j)`` holds ``a_i ⊕ b_j`` where ``a_1..a_m`` are the
non-zero ideals of ``R1`` (``a_m = R1``) and ``b_1..b_n`` those of ``R2``
(``b_n = R2``).  Cell ``(m, n)`` is the unit ideal and is left out.  Two cells
in the same row share ``a_i`` and are adjacent; likewise for columns; a cell
in row ``m`` or column ``n`` is adjacent to every cell.  A grid cycle that
uses at least one edge inside every row and every column can absorb the
boundary ideals ``a_i ⊕ 0`` and ``0 ⊕ b_j`` one at a time, which gives a
Hamiltonian cycle of the whole graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .caps import SPECTRUM_CAP, CapExceededError
from .graph import (
    CycleWitness,
    IntersectionGraph,
    build_intersection_graph,
    find_cycle_of_length,
    hamiltonian_oracle,
    validate_cycle,
)
from .rings import Ideal, RingSpec, as_ring, enumerate_ideals, join, meet, nontrivial_ideals

log = logging.getLogger(__name__)

Cell = tuple[int, int]


class ConstructionError(RuntimeError):
    """A construction produced something that failed validation."""


# ---------------------------------------------------------------- grid snakes

@dataclass(frozen=True)
class GridCycle:
    m: int
    n: int
    cells: tuple[Cell, ...]
    row_edges: dict[int, tuple[Cell, Cell]]
    col_edges: dict[int, tuple[Cell, Cell]]
    family: str = ""

    def legal_move(self, a: Cell, b: Cell) -> bool:
        return (
            a[0] == b[0] or a[1] == b[1]
            or self.m in (a[0], b[0]) or self.n in (a[1], b[1])
        )

    def edges(self) -> list[tuple[Cell, Cell]]:
        c = self.cells
        return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]

    def problems(self) -> list[str]:
        """Violations of the grid-cycle invariants; empty when the cycle is sound."""
        out = []
        expected = {(i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)} - {(self.m, self.n)}
        if len(self.cells) != len(expected) or set(self.cells) != expected:
            out.append("cells do not cover the grid minus its corner exactly once")
        edges = self.edges()
        edge_set = {frozenset(e) for e in edges}
        for a, b in edges:
            if not self.legal_move(a, b):
                out.append(f"illegal move {a}->{b}")
        for i in range(1, self.m + 1):
            e = self.row_edges.get(i)
            if e is None:
                if i != self.m or self.n > 2:
                    out.append(f"row {i} has no registered edge")
            elif e[0][0] != i or e[1][0] != i or frozenset(e) not in edge_set:
                out.append(f"row {i} edge {e} is not a same-row cycle edge")
        for j in range(1, self.n + 1):
            e = self.col_edges.get(j)
            if e is None:
                if j != self.n or self.m > 2:
                    out.append(f"column {j} has no registered edge")
            elif e[0][1] != j or e[1][1] != j or frozenset(e) not in edge_set:
                out.append(f"column {j} edge {e} is not a same-column cycle edge")
        chosen = [frozenset(e) for e in (*self.row_edges.values(), *self.col_edges.values())]
        if len(chosen) != len(set(chosen)):
            out.append("registered edges are not distinct")
        return out

    def transpose(self) -> GridCycle:
        flip = lambda c: (c[1], c[0])  # noqa: E731
        return GridCycle(
            self.n, self.m, tuple(flip(c) for c in self.cells),
            {j: (flip(a), flip(b)) for j, (a, b) in self.col_edges.items()},
            {i: (flip(a), flip(b)) for i, (a, b) in self.row_edges.items()},
            self.family,
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "family": self.family,
            "cells": [list(c) for c in self.cells],
            "row_edges": {str(k): [list(a), list(b)] for k, (a, b) in sorted(self.row_edges.items())},
            "col_edges": {str(k): [list(a), list(b)] for k, (a, b) in sorted(self.col_edges.items())},
        }


def _register(m: int, n: int, cells: list[Cell], family: str) -> GridCycle:
    rows: dict[int, tuple[Cell, Cell]] = {}
    cols: dict[int, tuple[Cell, Cell]] = {}
    for k, a in enumerate(cells):
        b = cells[(k + 1) % len(cells)]
        if a[0] == b[0]:
            rows.setdefault(a[0], (a, b))
        elif a[1] == b[1]:
            cols.setdefault(a[1], (a, b))
    return GridCycle(m, n, tuple(cells), rows, cols, family)


def _family(m: int, n: int) -> str:
    """Pattern name from the ideal counts ``m + 1`` and ``n + 1`` of the two factors."""
    if (m, n) == (2, 2):
        return "degenerate-2x2"
    name = lambda x: "three" if x == 2 else ("odd" if (x + 1) % 2 else "even")  # noqa: E731
    return f"{name(m)}-{name(n)}"


def _zigzag(columns: int, top: int) -> list[Cell]:
    """Snake down/up between rows ``top`` and ``top + 1`` across ``columns`` columns."""
    out = []
    for j in range(1, columns + 1):
        pair = [(top, j), (top + 1, j)]
        out += pair if j % 2 else pair[::-1]
    return out


def grid_snake_cycle(m: int, n: int) -> GridCycle:
    """Deterministic Hamiltonian cycle of the ``m x n`` grid minus cell ``(m, n)``.

    Consecutive cells share a row or a column, or one of them lies in row
    ``m`` / column ``n``.  Every row and column with at least two cells gets
    a registered edge inside it.
    """
    if m < 2 or n < 2:
        raise ValueError(f"grid needs m, n >= 2, got ({m}, {n})")
    family = _family(m, n)
    if (m, n) == (2, 2):
        return _register(2, 2, [(1, 1), (1, 2), (2, 1)], family)
    if n == 2:
        gc = grid_snake_cycle(2, m).transpose()
        return _register(m, n, list(gc.cells), family)
    if m == 2:
        cells = _zigzag(n - 1, 1) + [(1, n)]
        return _register(m, n, cells, family)
    cells = _zigzag(n, 1)
    at_right = True
    for i in range(3, m):
        cols = range(n, 0, -1) if at_right else range(1, n + 1)
        cells += [(i, j) for j in cols]
        at_right = not at_right
    cols = range(n - 1, 0, -1) if at_right else range(1, n)
    cells += [(m, j) for j in cols]
    return _register(m, n, cells, family)


# ---------------------------------------------------------------- splicing

@dataclass(frozen=True)
class FactorMap:
    """Vertex indices in the product graph for grid cells and boundary ideals."""

    cell: dict[Cell, int]
    row: dict[int, int]
    col: dict[int, int]


def bipartition_factor_map(
    spec: RingSpec, g: IntersectionGraph, left: Sequence[int]
) -> tuple[int, int, FactorMap]:
    """Grid coordinates for ``spec = (blocks in left) x (the other blocks)``."""
    left = sorted(left)
    right = [k for k in range(len(spec.blocks)) if k not in left]
    r1, r2 = spec.sub(left), spec.sub(right)

    def nonzero_ideals(r: RingSpec) -> list[Ideal]:
        ideals = [a for a in enumerate_ideals(r) if a.is_nontrivial]
        return ideals + [r.unit()]

    a_list, b_list = nonzero_ideals(r1), nonzero_ideals(r2)
    z1, z2 = r1.zero(), r2.zero()

    def vertex(a: Ideal, b: Ideal) -> int:
        coords = [None] * len(spec.blocks)
        for k, c in zip(left, a.coords):
            coords[k] = c
        for k, c in zip(right, b.coords):
            coords[k] = c
        return g.index(Ideal(spec, tuple(coords)))

    m, n = len(a_list), len(b_list)
    cell = {
        (i + 1, j + 1): vertex(a, b)
        for (i, a), (j, b) in product(enumerate(a_list), enumerate(b_list))
        if (i + 1, j + 1) != (m, n)
    }
    rows = {i + 1: vertex(a, z2) for i, a in enumerate(a_list)}
    cols = {j + 1: vertex(z1, b) for j, b in enumerate(b_list)}
    return m, n, FactorMap(cell, rows, cols)


def _insert_greedily(g: IntersectionGraph, cycle: list[int], v: int) -> bool:
    for k in range(len(cycle)):
        a, b = cycle[k], cycle[(k + 1) % len(cycle)]
        if g.adjacent(a, v) and g.adjacent(v, b):
            cycle.insert(k + 1, v)
            return True
    return False


def splice_boundary(gc: GridCycle, g: IntersectionGraph, factor_map: FactorMap) -> CycleWitness:
    """Insert every ``a_i ⊕ 0`` into its row edge and every ``0 ⊕ b_j`` into its column edge.

    Boundary ideals whose row or column has no registered edge (only the
    full-factor ones ``R1 ⊕ 0`` / ``0 ⊕ R2`` on degenerate grids) go into
    the first cycle edge both of whose ends they meet.
    """
    base = [factor_map.cell[c] for c in gc.cells]
    succ = {base[k]: base[(k + 1) % len(base)] for k in range(len(base))}
    after: dict[int, int] = {}
    pending = []
    registered = [(factor_map.row[i], gc.row_edges.get(i)) for i in sorted(factor_map.row)]
    registered += [(factor_map.col[j], gc.col_edges.get(j)) for j in sorted(factor_map.col)]
    for v, edge in registered:
        if edge is None:
            pending.append(v)
            continue
        x, y = (factor_map.cell[c] for c in edge)
        first = x if succ[x] == y else y
        if first in after:
            raise ConstructionError(f"edge {edge} registered twice")
        after[first] = v
    cycle = []
    for u in base:
        cycle.append(u)
        if u in after:
            cycle.append(after[u])
    for v in pending:
        if not _insert_greedily(g, cycle, v):
            raise ConstructionError(f"no edge can absorb boundary vertex {g.label(v)}")
    witness = CycleWitness(cycle)
    check = validate_cycle(g, witness)
    if not check or len(cycle) != g.order:
        raise ConstructionError(f"spliced grid cycle is not Hamiltonian: {check.reason}")
    return witness


# ---------------------------------------------------------------- lifting

def lift_path_to_cycle(
    spec: RingSpec | str, ham_path_of_s: Sequence[Ideal], field_block: int | None = None,
    graph: IntersectionGraph | None = None,
) -> CycleWitness:
    """Hamiltonian cycle of ``S x F`` from a Hamiltonian path ``s_1 .. s_k`` of Γ(S).

    The cycle zig-zags through the pairs ``(s_i, F), (s_i, 0)``, places
    ``(S, 0)`` next to an ``S``-side vertex and ``(0, F)`` between two
    ``F``-side vertices.  ``field_block`` selects the field factor (default:
    the last field block).
    """
    spec = as_ring(spec)
    if field_block is None:
        fields = [k for k, b in enumerate(spec.blocks) if b.is_field]
        if not fields:
            raise ValueError(f"{spec} has no field factor")
        field_block = fields[-1]
    if not spec.blocks[field_block].is_field:
        raise ValueError(f"block {field_block} of {spec} is not a field")
    rest = [k for k in range(len(spec.blocks)) if k != field_block]
    if not rest:
        raise ValueError("S x F needs a non-empty S")
    s_ring = spec.sub(rest)
    path = list(ham_path_of_s)
    if len(path) < 2:
        raise ValueError("Hamiltonian path of Γ(S) has fewer than 2 vertices (the E ⊕ S exception)")
    if any(a.ring != s_ring for a in path):
        raise ValueError("path ideals must belong to S")
    if len(set(path)) != len(path) or set(path) != set(nontrivial_ideals(s_ring)):
        raise ValueError("path does not visit every nontrivial ideal of S exactly once")
    for a, b in zip(path, path[1:]):
        if meet(a, b).is_zero:
            raise ValueError(f"path step {a.label()} -> {b.label()} is not an edge of Γ(S)")

    g = graph if graph is not None else build_intersection_graph(spec)

    def vertex(s_coords: tuple, f_full: bool) -> int:
        coords = [None] * len(spec.blocks)
        for k, c in zip(rest, s_coords):
            coords[k] = c
        fb = spec.blocks[field_block]
        coords[field_block] = fb.full if f_full else fb.zero
        return g.index(Ideal(spec, tuple(coords)))

    order = []
    for i, s in enumerate(path):
        pair = [(s.coords, True), (s.coords, False)]
        order += pair if i % 2 == 0 else pair[::-1]
    cycle = [vertex(c, f) for c, f in order]
    s_zero = vertex(s_ring.unit().coords, False)
    zero_f = vertex(s_ring.zero().coords, True)
    k = len(path)
    if k % 2 == 0:
        # ends on (s_k, F): close through (0, F); (S, 0) between (s_1, 0) and (s_2, 0)
        cycle.insert(2, s_zero)
        cycle.append(zero_f)
    else:
        # ends on (s_k, 0): close through (S, 0); (0, F) between (s_2, F) and (s_3, F)
        cycle.insert(4, zero_f)
        cycle.append(s_zero)
    witness = CycleWitness(cycle)
    check = validate_cycle(g, witness)
    if not check or len(cycle) != g.order:
        raise ConstructionError(f"lifted cycle failed validation: {check.reason}")
    return witness


# ---------------------------------------------------------------- prediction

OPEN_QUESTION = "open_question"

VS_NOTE = (
    "open question: a single vs(q,d) block is not among the listed exceptions; "
    "the oracle is ground truth for this family"
)


@dataclass(frozen=True)
class HamiltonianPrediction:
    predicted: bool | str
    tag: str | None = None

    @property
    def is_open(self) -> bool:
        return self.predicted == OPEN_QUESTION


def predict_hamiltonian(spec: RingSpec | str) -> HamiltonianPrediction:
    """Hamiltonicity as claimed by the exception list for Artin rings.

    Non-Hamiltonian exactly for ``F``, ``E x F``, ``S`` and ``E x S`` with
    ``S`` having a single nontrivial ideal, and the length-3 chain ring.
    """
    blocks = as_ring(spec).blocks
    kinds = sorted(blocks, key=lambda b: b.sort_key())
    if len(blocks) == 1:
        b = blocks[0]
        if b.is_field:
            return HamiltonianPrediction(False, "(1) F")
        if b.kind == "Chain" and b.k == 2:
            return HamiltonianPrediction(False, "(2) S")
        if b.kind == "Chain" and b.k == 3:
            return HamiltonianPrediction(False, "(3) S")
        if b.kind == "VSLocal":
            return HamiltonianPrediction(OPEN_QUESTION, "vs-local")
    if len(blocks) == 2:
        if all(b.is_field for b in blocks):
            return HamiltonianPrediction(False, "(1) E+F")
        if kinds[0].is_field and kinds[1].kind == "Chain" and kinds[1].k == 2:
            return HamiltonianPrediction(False, "(2) E+S")
    return HamiltonianPrediction(True)


# ---------------------------------------------------------------- dispatch

@dataclass(frozen=True)
class ConstructionOutcome:
    status: str  # "cycle" | "not_hamiltonian_by_theorem" | "unknown"
    witness: CycleWitness | None = None
    strategy: str = ""
    note: str | None = None
    tag: str | None = None
    graph: IntersectionGraph | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        out = {"status": self.status, "strategy": self.strategy, "note": self.note, "tag": self.tag}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict(self.graph)
        return out


def best_bipartition(spec: RingSpec) -> list[int] | None:
    """Blocks for the first factor maximizing the smaller ideal count (both >= 3)."""
    k = len(spec.blocks)
    best, best_score = None, 0
    for mask in range(1, 1 << k):
        if not mask & 1 or mask == (1 << k) - 1:
            continue
        left = [i for i in range(k) if mask >> i & 1]
        c1 = spec.sub(left).ideal_count
        c2 = spec.ideal_count // c1
        score = min(c1, c2)
        if score >= 3 and score > best_score:
            best, best_score = left, score
    return best


def _hamiltonian_path(spec: RingSpec, oracle_limit: int | None) -> list[Ideal] | None:
    g = build_intersection_graph(spec)
    if g.order < 2:
        return None
    if g.edge_count == g.order * (g.order - 1) // 2:
        return list(g.vertices)
    outcome = construct_hamiltonian(spec, oracle_limit=oracle_limit, graph=g)
    if outcome.status != "cycle":
        return None
    return [g.vertices[v] for v in outcome.witness]


def construct_hamiltonian(
    spec: RingSpec | str, oracle_limit: int | None = None, graph: IntersectionGraph | None = None
) -> ConstructionOutcome:
    """Hamiltonian cycle of Γ(spec) by grid snakes, splicing, and path lifting.

    Specs outside the constructive cases fall back to the bounded oracle;
    every returned cycle has been validated against the graph.
    """
    spec = as_ring(spec)
    pred = predict_hamiltonian(spec)
    g = graph if graph is not None else build_intersection_graph(spec)
    if pred.predicted is False:
        return ConstructionOutcome("not_hamiltonian_by_theorem", strategy="exception", tag=pred.tag, graph=g)
    if pred.is_open:
        return ConstructionOutcome("unknown", strategy="none", note=VS_NOTE, tag=pred.tag, graph=g)

    def done(witness: CycleWitness, strategy: str) -> ConstructionOutcome:
        check = validate_cycle(g, witness)
        if not check or len(witness) != g.order:
            raise ConstructionError(f"{strategy} produced an invalid cycle for {spec}: {check.reason}")
        return ConstructionOutcome("cycle", witness, strategy, graph=g)

    blocks = spec.blocks
    if len(blocks) == 1 and blocks[0].is_chain_like:
        return done(CycleWitness(range(g.order)), "complete")

    left = best_bipartition(spec)
    if left is not None:
        m, n, fmap = bipartition_factor_map(spec, g, left)
        gc = grid_snake_cycle(m, n)
        bad = gc.problems()
        if bad:
            raise ConstructionError(f"grid snake ({m},{n}) is unsound: {bad}")
        return done(splice_boundary(gc, g, fmap), f"grid+splice {gc.family} ({m}x{n})")

    if len(blocks) == 3 and all(b.is_field for b in blocks):
        s1, s2, f = (spec.axis(i) for i in range(3))
        seq = [s1, join(s1, s2), s2, join(s2, f), f, join(s1, f)]
        return done(CycleWitness([g.index(a) for a in seq]), "three-fields six-cycle")

    for fb in (k for k in range(len(blocks) - 1, -1, -1) if blocks[k].is_field):
        rest = [k for k in range(len(blocks)) if k != fb]
        if not rest:
            continue
        path = _hamiltonian_path(spec.sub(rest), oracle_limit)
        if path is not None and len(path) >= 2:
            return done(lift_path_to_cycle(spec, path, fb, graph=g), "lift S+F")

    try:
        found = hamiltonian_oracle(g, cap=oracle_limit)
    except CapExceededError as exc:
        return ConstructionOutcome("unknown", strategy="none", note=f"no construction applies; {exc}", graph=g)
    if found is not None:
        return done(found, "oracle-fallback")
    return ConstructionOutcome(
        "unknown", strategy="oracle-fallback",
        note="no construction applies and the oracle found no Hamiltonian cycle", graph=g,
    )


# ---------------------------------------------------------------- pancyclicity

@dataclass(frozen=True)
class PancyclicFamily:
    spec: RingSpec
    cycles: dict[int, CycleWitness]
    methods: dict[int, str]
    gaps: tuple[int, ...]
    graph: IntersectionGraph = field(repr=False, compare=False)

    @property
    def lengths(self) -> set[int]:
        return set(self.cycles)

    def to_dict(self) -> dict:
        return {
            "spec": str(self.spec),
            "gaps": list(self.gaps),
            "cycles": [
                {"length": L, "method": self.methods[L], **self.cycles[L].to_dict(self.graph)}
                for L in sorted(self.cycles)
            ],
        }


def _shortcut(g: IntersectionGraph, cycle: list[int], skip: int) -> list[int] | None:
    """Drop ``skip`` consecutive vertices bridged by a chord, if any chord allows it."""
    n = len(cycle)
    for i in range(n):
        j = (i + skip + 1) % n
        if g.adjacent(cycle[i], cycle[j]):
            drop = {(i + t) % n for t in range(1, skip + 1)}
            return [v for k, v in enumerate(cycle) if k not in drop]
    return None


def pancyclic_family(
    spec: RingSpec | str, oracle_limit: int | None = None, spectrum_cap: int = SPECTRUM_CAP
) -> PancyclicFamily:
    """A validated cycle of every length ``3..V``, shortened from a Hamiltonian cycle.

    Each step removes one vertex whose two cycle neighbors are adjacent (a
    path of length two becomes a single edge); when no such vertex exists
    two consecutive vertices are bridged instead.  Lengths skipped that way
    are searched for directly when the graph is small enough, and anything
    still missing is reported in ``gaps``.
    """
    spec = as_ring(spec)
    outcome = construct_hamiltonian(spec, oracle_limit=oracle_limit)
    g = outcome.graph
    if outcome.status != "cycle":
        raise ValueError(f"{spec} has no constructed Hamiltonian cycle ({outcome.status}, {outcome.tag or outcome.note})")
    cycles = {g.order: outcome.witness}
    methods = {g.order: outcome.strategy}
    cur = list(outcome.witness)
    while len(cur) > 3:
        shorter = _shortcut(g, cur, 1)
        method = "contract"
        if shorter is None:
            shorter, method = _shortcut(g, cur, 2), "flip"
        if shorter is None or len(shorter) < 3:
            break
        cur = shorter
        cycles[len(cur)] = CycleWitness(cur)
        methods[len(cur)] = method
    gaps = []
    for L in range(3, g.order + 1):
        if L in cycles:
            continue
        found = find_cycle_of_length(g, L, cap=spectrum_cap) if g.order <= spectrum_cap else None
        if found is None:
            gaps.append(L)
        else:
            cycles[L], methods[L] = found, "oracle"
    for L, w in cycles.items():
        check = validate_cycle(g, w)
        if not check or len(w) != L:
            raise ConstructionError(f"length-{L} cycle failed validation: {check.reason}")
    if gaps:
        log.warning("pancyclic family for %s has gaps %s", spec, gaps)
    return PancyclicFamily(spec, dict(sorted(cycles.items())), methods, tuple(gaps), g)
