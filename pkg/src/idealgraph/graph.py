"""Intersection graphs of nontrivial ideals and brute-force graph oracles.

Adjacency rows are bit-packed into Python ints, so most of the oracles below
are plain bitmask searches.  Every oracle is exact; oversize inputs raise
:class:`~idealgraph.caps.CapExceededError`.

Two notions of "cycle" appear here on purpose.  :func:`find_induced_cycle`
looks for *induced* cycles (chordless), which is what "C_n-free" means in the
classification predicates.  :func:`cycle_spectrum_oracle` and the Hamiltonian
oracle deal with ordinary, not necessarily induced, cycles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .caps import (
    GRAPH_CAP,
    INDUCED_LENGTH_CAP,
    INDUCED_VERTEX_CAP,
    SPECTRUM_CAP,
    check_cap,
    oracle_cap,
)
from .rings import Ideal, RingSpec, as_ring, meet, nontrivial_ideals


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class IntersectionGraph:
    spec: RingSpec | None
    vertices: tuple
    rows: tuple[int, ...]

    @classmethod
    def from_adjacency(cls, adjacency, vertices: Sequence | None = None, spec: RingSpec | None = None):
        """Build from a square boolean matrix (used by tests and for subgraphs)."""
        a = np.asarray(adjacency, dtype=bool)
        n = a.shape[0]
        rows = tuple(sum(1 << j for j in range(n) if a[i, j] and i != j) for i in range(n))
        verts = tuple(vertices) if vertices is not None else tuple(range(n))
        g = cls(spec, verts, rows)
        if any(g.adjacent(i, j) != g.adjacent(j, i) for i in range(n) for j in range(n)):
            raise ValueError("adjacency must be symmetric")
        return g

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.rows[i]))

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.order) for j in _bits(self.rows[i]) if i < j]

    def adjacency_matrix(self) -> np.ndarray:
        n = self.order
        a = np.zeros((n, n), dtype=bool)
        for i, j in self.edges():
            a[i, j] = a[j, i] = True
        return a

    def index(self, vertex) -> int:
        return self._index[vertex]

    @cached_property
    def _index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def label(self, i: int) -> str:
        v = self.vertices[i]
        return v.label() if isinstance(v, Ideal) else str(v)

    def induced(self, indices: Sequence[int]) -> IntersectionGraph:
        """Induced subgraph on ``indices`` (renumbered in the given order)."""
        idx = list(indices)
        rows = tuple(
            sum(1 << b for b, other in enumerate(idx) if self.adjacent(v, other)) for v in idx
        )
        return IntersectionGraph(self.spec, tuple(self.vertices[i] for i in idx), rows)

    def to_dict(self) -> dict:
        return {
            "spec": str(self.spec) if self.spec is not None else None,
            "vertices": [self.label(i) for i in range(self.order)],
            "edges": [list(e) for e in self.edges()],
            "adjacency": self.adjacency_matrix().astype(int).tolist(),
        }


def build_intersection_graph(spec: RingSpec | str, cap: int = GRAPH_CAP) -> IntersectionGraph:
    """Graph on the nontrivial ideals of ``spec``; edges join ideals with non-zero meet."""
    spec = as_ring(spec)
    check_cap("nontrivial ideal count", spec.nontrivial_count, cap)
    vertices = tuple(nontrivial_ideals(spec))
    n = len(vertices)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if not meet(vertices[i], vertices[j]).is_zero:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return IntersectionGraph(spec, vertices, tuple(rows))


# ---------------------------------------------------------------- properties

SHAPES = ("empty", "single_vertex", "edge", "two_isolated", "star", "has_triangle", "other")


@dataclass(frozen=True)
class PropertyRecord:
    vertex_count: int
    edge_count: int
    degrees: tuple[int, ...]
    flags: dict
    pendant_vertices: tuple[int, ...] = ()
    star_center: int | None = None

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    def to_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "degrees": list(self.degrees),
            "flags": dict(self.flags),
            "pendant_vertices": list(self.pendant_vertices),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def find_triangle(g: IntersectionGraph) -> tuple[int, int, int] | None:
    for i in range(g.order):
        for j in _bits(g.rows[i] >> (i + 1) << (i + 1)):
            common = g.rows[i] & g.rows[j] & ~((1 << (j + 1)) - 1)
            if common:
                return i, j, next(_bits(common))
    return None


def is_bipartite(g: IntersectionGraph) -> bool:
    color: dict[int, int] = {}
    for s in range(g.order):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in _bits(g.rows[u]):
                if v not in color:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def star_center(g: IntersectionGraph) -> int | None:
    """Center of a star K_{1,r} (r >= 1); the lower index for a single edge."""
    n = g.order
    if n < 2 or g.edge_count != n - 1:
        return None
    for i in range(n):
        if g.degree(i) == n - 1:
            return i
    return None


def compute_properties(g: IntersectionGraph) -> PropertyRecord:
    """Direct structural flags of ``g`` (no ring theory is consulted)."""
    n = g.order
    degrees = g.degrees
    pendants = tuple(i for i, d in enumerate(degrees) if d == 1)
    center = star_center(g)
    flags = {
        "is_complete": g.edge_count == n * (n - 1) // 2,
        "is_regular": len(set(degrees)) <= 1,
        "is_star": center is not None,
        "is_bipartite": is_bipartite(g),
        "has_pendant": bool(pendants),
        "is_triangle_free": find_triangle(g) is None,
    }
    return PropertyRecord(n, g.edge_count, degrees, flags, pendants, center)


def observed_shape(g: IntersectionGraph) -> str:
    """Name of the graph's shape among the triangle-free catalog, else ``has_triangle``."""
    if find_triangle(g) is not None:
        return "has_triangle"
    n = g.order
    if n == 0:
        return "empty"
    if n == 1:
        return "single_vertex"
    if n == 2:
        return "edge" if g.edge_count == 1 else "two_isolated"
    if star_center(g) is not None:
        return "star"
    return "other"


# ---------------------------------------------------------------- cycles

@dataclass(frozen=True)
class CycleWitness:
    vertex_indices: tuple[int, ...]

    def __init__(self, vertex_indices: Sequence[int]):
        object.__setattr__(self, "vertex_indices", tuple(vertex_indices))

    def __len__(self) -> int:
        return len(self.vertex_indices)

    def __iter__(self):
        return iter(self.vertex_indices)

    def edges(self) -> list[tuple[int, int]]:
        v = self.vertex_indices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def to_dict(self, g: IntersectionGraph | None = None) -> dict:
        out = {"cycle": list(self.vertex_indices), "length": len(self)}
        if g is not None:
            out["spec"] = str(g.spec) if g.spec is not None else None
            out["vertices"] = [g.label(i) for i in self.vertex_indices]
        return out


@dataclass(frozen=True)
class CycleCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_cycle(g: IntersectionGraph, w: CycleWitness | Sequence[int]) -> CycleCheck:
    """Check that ``w`` is a cycle of ``g``; a failed check carries a reason code."""
    seq = tuple(w)
    if len(seq) < 3:
        return CycleCheck(False, "too_short")
    if any(not (0 <= v < g.order) for v in seq):
        return CycleCheck(False, "out_of_range")
    if len(set(seq)) != len(seq):
        return CycleCheck(False, "repeated_vertex")
    for i, v in enumerate(seq):
        u = seq[(i + 1) % len(seq)]
        if not g.adjacent(v, u):
            return CycleCheck(False, f"not_adjacent:{v}-{u}")
    return CycleCheck(True)


def find_induced_cycle(
    g: IntersectionGraph, n: int, max_length: int = INDUCED_LENGTH_CAP,
    vertex_cap: int = INDUCED_VERTEX_CAP,
) -> CycleWitness | None:
    """An induced (chordless) cycle of length ``n``, or ``None``.

    Exhaustive over induced paths that start at the smallest vertex of the
    cycle.
    """
    if n < 3:
        raise ValueError("cycle length must be >= 3")
    check_cap("induced cycle length", n, max_length)
    check_cap("vertex count", g.order, vertex_cap)
    rows = g.rows

    def extend(path: list[int], blocked: int, start: int):
        # blocked: path vertices and neighbors of interior path vertices
        tail = path[-1]
        if len(path) == n:
            return path
        last_step = len(path) + 1 == n
        cands = rows[tail] & ~blocked & ~((1 << (start + 1)) - 1)
        for c in _bits(cands):
            if bool(rows[c] >> start & 1) != last_step:
                continue
            found = extend(path + [c], blocked | rows[tail] | (1 << c), start)
            if found:
                return found
        return None

    for s in range(g.order):
        for second in _bits(rows[s] & ~((1 << (s + 1)) - 1)):
            found = extend([s, second], (1 << s) | (1 << second), s)
            if found:
                return CycleWitness(found)
    return None


def find_induced_claw(
    g: IntersectionGraph, n: int, vertex_cap: int = INDUCED_VERTEX_CAP
) -> tuple[int, tuple[int, ...]] | None:
    """A center and ``n`` pairwise non-adjacent neighbors (an induced K_{1,n}), or ``None``."""
    if n < 2:
        raise ValueError("claw size must be >= 2")
    check_cap("vertex count", g.order, vertex_cap)
    rows = g.rows

    def independent(cands: int, chosen: list[int]):
        if len(chosen) == n:
            return tuple(chosen)
        if cands.bit_count() < n - len(chosen):
            return None
        for v in _bits(cands):
            cands &= ~(1 << v)
            found = independent(cands & ~rows[v], chosen + [v])
            if found:
                return found
        return None

    for c in range(g.order):
        leaves = independent(rows[c], [])
        if leaves:
            return c, leaves
    return None


def hamiltonian_oracle(g: IntersectionGraph, cap: int | None = None) -> CycleWitness | None:
    """A Hamiltonian cycle of ``g`` by exhaustive backtracking, or ``None``.

    Pruning: a vertex with fewer than two usable neighbors, a disconnected
    remainder, and memoized dead ``(visited, tail)`` states.
    """
    n = g.order
    check_cap("vertex count for Hamiltonian oracle", n, oracle_cap(cap))
    if n < 3 or any(d < 2 for d in g.degrees):
        return None
    rows = g.rows
    full = (1 << n) - 1
    dead: set[tuple[int, int]] = set()

    def connected(mask: int, root: int) -> bool:
        seen = 1 << root
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen & mask == mask

    def search(path: list[int], visited: int) -> list[int] | None:
        tail = path[-1]
        if visited == full:
            return path if rows[tail] & 1 else None
        key = (visited, tail)
        if key in dead:
            return None
        rest = full & ~visited
        for v in _bits(rest):
            usable = rows[v] & (rest | 1 | (1 << tail))
            if usable.bit_count() < 2:
                dead.add(key)
                return None
        if not connected(rest | (1 << tail), tail):
            dead.add(key)
            return None
        for v in _bits(rows[tail] & rest):
            found = search(path + [v], visited | (1 << v))
            if found:
                return found
        dead.add(key)
        return None

    found = search([0], 1)
    return CycleWitness(found) if found else None


def cycle_spectrum_oracle(g: IntersectionGraph, cap: int = SPECTRUM_CAP) -> set[int]:
    """Exact set of cycle lengths in ``g`` (not necessarily induced).

    Subset dynamic programming: for each start ``s`` (the smallest vertex of
    the cycle), ``ends[mask]`` is the set of tails of simple paths from ``s``
    covering exactly ``mask``.
    """
    n = g.order
    check_cap("vertex count for cycle spectrum", n, cap)
    rows = g.rows
    lengths: set[int] = set()
    wanted = set(range(3, n + 1))
    for s in range(n):
        higher = ~((1 << (s + 1)) - 1) & ((1 << n) - 1)
        ends = {1 << s: 1 << s}
        # masks grow by one bit per step, so process them by popcount
        layer = {1 << s}
        size = 1
        while layer:
            nxt_layer = set()
            for mask in layer:
                tails = ends[mask]
                if size >= 3 and tails & rows[s]:
                    lengths.add(size)
                for t in _bits(tails):
                    for v in _bits(rows[t] & higher & ~mask):
                        m2 = mask | (1 << v)
                        if m2 not in ends:
                            ends[m2] = 0
                            nxt_layer.add(m2)
                        ends[m2] |= 1 << v
            layer = nxt_layer
            size += 1
        if lengths >= wanted:
            break
    return lengths


def find_cycle_of_length(g: IntersectionGraph, length: int, cap: int = SPECTRUM_CAP) -> CycleWitness | None:
    """A (not necessarily induced) cycle with exactly ``length`` vertices, by backtracking."""
    n = g.order
    check_cap("vertex count for cycle search", n, cap)
    if length < 3 or length > n:
        return None
    rows = g.rows

    def extend(path: list[int], used: int, start: int):
        tail = path[-1]
        if len(path) == length:
            return path if rows[tail] >> start & 1 else None
        for v in _bits(rows[tail] & ~used & ~((1 << (start + 1)) - 1)):
            found = extend(path + [v], used | (1 << v), start)
            if found:
                return found
        return None

    for s in range(n):
        found = extend([s], 1 << s, s)
        if found:
            return CycleWitness(found)
    return None


# ---------------------------------------------------------------- export

def export_dot(g: IntersectionGraph, labels: str = "index", name: str = "G") -> str:
    """Deterministic Graphviz text; ``labels`` is ``"index"`` or ``"ideal"``."""
    if labels not in ("index", "ideal"):
        raise ValueError("labels must be 'index' or 'ideal'")
    lines = [f"graph {name} {{"]
    if g.spec is not None:
        lines.append(f'  label="{g.spec}";')
    for i in range(g.order):
        text = str(i) if labels == "index" else g.label(i)
        lines.append(f'  {i} [label="{text}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
