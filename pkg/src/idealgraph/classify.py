"""Structural predictions for Γ(R) checked against direct graph computation.

Each ``*_criterion`` / ``check_*`` function returns a :class:`ReportEntry`
holding a prediction made from the ring structure alone and the value
observed on the graph by the oracles in :mod:`idealgraph.graph`.  A
disagreement is recorded, never raised.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from .caps import CapExceededError, INDEPENDENCE_CAP, INDUCED_VERTEX_CAP
from .graph import (
    IntersectionGraph,
    build_intersection_graph,
    compute_properties,
    cycle_spectrum_oracle,
    find_induced_claw,
    find_induced_cycle,
    hamiltonian_oracle,
    observed_shape,
    validate_cycle,
)
from .hamcycle import (
    VS_NOTE,
    construct_hamiltonian,
    pancyclic_family,
    predict_hamiltonian,
)
from .rings import (
    IndependentFamily,
    RingSpec,
    as_ring,
    is_independent_family,
    is_reduced,
    iter_independent_families,
    join_all,
    max_independent_family,
    nontrivial_ideals,
)

PENDANT_NOTE = (
    "exception 'field x local ring whose maximal ideal is a field' read as "
    "'field x S with exactly one nontrivial ideal'"
)

E_PLUS_S_NOTE = (
    "observed graph of E x S is a triangle with a pendant vertex, not a path on four "
    "vertices; non-Hamiltonian either way"
)


@dataclass
class ReportEntry:
    name: str
    predicted: Any = None
    observed: Any = None
    agree: bool = True
    exempt: bool = False
    skipped: bool = False
    witness: Any = None
    note: str | None = None

    @property
    def disagrees(self) -> bool:
        return not (self.agree or self.exempt or self.skipped)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "predicted": self.predicted,
            "observed": self.observed,
            "agree": self.agree,
            "exempt": self.exempt,
            "skipped": self.skipped,
            "witness": self.witness,
            "note": self.note,
        }


def _entry(name, predicted, observed, **kw) -> ReportEntry:
    return ReportEntry(name, predicted, observed, predicted == observed, **kw)


def _graph(spec: RingSpec, graph: IntersectionGraph | None) -> IntersectionGraph:
    return graph if graph is not None else build_intersection_graph(spec)


def _labels(g: IntersectionGraph, idx) -> list[str]:
    return [g.label(i) for i in idx]


# ---------------------------------------------------------------- exceptions

def is_two_fields(spec: RingSpec) -> bool:
    return len(spec.blocks) == 2 and all(b.is_field for b in spec.blocks)


def is_field_plus_one_ideal_local(spec: RingSpec) -> bool:
    """``F x S`` where the local ring ``S`` has exactly one nontrivial ideal."""
    if len(spec.blocks) != 2:
        return False
    a, b = spec.blocks
    return (a.is_field and b.ideal_count == 3) or (b.is_field and a.ideal_count == 3)


# ---------------------------------------------------------------- complete / regular

def predict_complete(spec: RingSpec | str) -> bool:
    """Γ(R) is complete iff the ideal lattice is a chain (one Field or Chain block)."""
    blocks = as_ring(spec).blocks
    return len(blocks) == 1 and blocks[0].is_chain_like


def complete_entry(spec, graph=None) -> ReportEntry:
    spec = as_ring(spec)
    props = compute_properties(_graph(spec, graph))
    return _entry("complete", predict_complete(spec), props.is_complete)


def check_regular_implies_complete(spec, graph=None) -> ReportEntry:
    spec = as_ring(spec)
    props = compute_properties(_graph(spec, graph))
    observed = (not props.is_regular) or props.is_complete
    entry = _entry("regular_implies_complete", True, observed,
                   witness={"regular": props.is_regular, "complete": props.is_complete})
    if is_two_fields(spec):
        entry.exempt = True
        entry.note = "exempt: direct sum of two fields"
    return entry


# ---------------------------------------------------------------- triangle-free / pendant

def predict_triangle_free_shape(spec: RingSpec | str) -> str:
    blocks = as_ring(spec).blocks
    if len(blocks) == 2 and all(b.is_field for b in blocks):
        return "two_isolated"
    if len(blocks) == 1:
        b = blocks[0]
        if b.is_field:
            return "empty"
        if b.kind == "Chain" and b.k == 2:
            return "single_vertex"
        if b.kind == "Chain" and b.k == 3:
            return "edge"
        if b.kind == "VSLocal" and b.d == 2:
            return "star"
    return "has_triangle"


def triangle_free_entry(spec, graph=None) -> ReportEntry:
    spec = as_ring(spec)
    g = _graph(spec, graph)
    predicted = predict_triangle_free_shape(spec)
    observed = observed_shape(g)
    witness = None
    if predicted == "star" and observed == "star":
        props = compute_properties(g)
        witness = {"center": g.label(props.star_center), "leaves": g.order - 1}
    return _entry("triangle_free_shape", predicted, observed, witness=witness)


def check_pendant_implies_star(spec, graph=None) -> ReportEntry:
    spec = as_ring(spec)
    g = _graph(spec, graph)
    props = compute_properties(g)
    observed = (not props.has_pendant) or props.is_star
    entry = _entry("pendant_implies_star", True, observed,
                   witness={"pendants": _labels(g, props.pendant_vertices), "star": props.is_star})
    if is_two_fields(spec):
        entry.exempt, entry.note = True, "exempt: direct sum of two fields"
    elif is_field_plus_one_ideal_local(spec):
        entry.exempt, entry.note = True, "exempt: " + PENDANT_NOTE
    return entry


def star_equivalence_entry(spec, graph=None) -> ReportEntry:
    """Triangle-free, has-pendant, bipartite and star agree outside the exceptions."""
    spec = as_ring(spec)
    g = _graph(spec, graph)
    props = compute_properties(g)
    values = {k: props.flags[k] for k in ("is_triangle_free", "has_pendant", "is_bipartite", "is_star")}
    entry = _entry("star_equivalence", True, len(set(values.values())) == 1, witness=values)
    if is_two_fields(spec):
        entry.exempt, entry.note = True, "exempt: direct sum of two fields"
    elif is_field_plus_one_ideal_local(spec):
        entry.exempt, entry.note = True, "exempt: " + PENDANT_NOTE
    elif g.order < 2:
        entry.exempt, entry.note = True, "exempt: fewer than two vertices (degenerate convention)"
    return entry


# ---------------------------------------------------------------- induced cycles and claws

def c4_free_criterion(spec, graph=None) -> ReportEntry:
    """C4-free iff there are no four independent nontrivial ideals."""
    return _cycle_criterion(as_ring(spec), 4, graph)


def cn_free_criterion_reduced(spec, n: int, graph=None) -> ReportEntry:
    """For reduced rings and ``n >= 5``: Cn-free iff no ``n`` independent ideals."""
    spec = as_ring(spec)
    if not is_reduced(spec):
        raise ValueError(f"{spec} is not reduced")
    if n < 5:
        raise ValueError("the reduced criterion is stated for n >= 5")
    return _cycle_criterion(spec, n, graph)


def _cycle_criterion(spec: RingSpec, n: int, graph) -> ReportEntry:
    g = _graph(spec, graph)
    name = f"c{n}_free"
    if g.order == 0:
        return _entry(name, True, True, note="no vertices")
    t, family = max_independent_family(spec, n)
    cycle = find_induced_cycle(g, n)
    witness = {"independent": [a.label() for a in family.members]}
    if cycle is not None:
        witness["cycle"] = _labels(g, cycle)
    return _entry(name, t < n, cycle is None, witness=witness)


def claw_predicted(spec: RingSpec, n: int) -> IndependentFamily | None:
    """``n`` independent ideals whose sum is a proper ideal, by exhaustive search."""
    vertices = nontrivial_ideals(spec)
    if len(vertices) > INDEPENDENCE_CAP:
        raise CapExceededError("nontrivial ideal count", len(vertices), INDEPENDENCE_CAP)
    for fam in iter_independent_families(vertices, n):
        if not fam.join().is_unit:
            return fam
    return None


def claw_criterion_reduced(spec, n: int, graph=None) -> ReportEntry:
    spec = as_ring(spec)
    if not is_reduced(spec):
        raise ValueError(f"{spec} is not reduced")
    if n < 2:
        raise ValueError("claw size must be >= 2")
    g = _graph(spec, graph)
    fam = claw_predicted(spec, n)
    claw = find_induced_claw(g, n)
    witness = {}
    if fam is not None:
        witness["independent"] = [a.label() for a in fam.members]
        witness["sum"] = fam.join().label()
    if claw is not None:
        witness["center"] = g.label(claw[0])
        witness["leaves"] = _labels(g, claw[1])
    return _entry(f"claw{n}", fam is not None, claw is not None, witness=witness or None)


def consecutive_pair_structure(family: IndependentFamily | Sequence, sums: Sequence) -> bool:
    """Whether ``sums[i] == {π(i), π(i+1)}`` for some cyclic arrangement π of the family.

    ``sums[i]`` is a set of family indices naming the summands of the i-th
    ideal ``b_i``.
    """
    members = family.members if isinstance(family, IndependentFamily) else tuple(family)
    n = len(members)
    if n < 3:
        raise ValueError("need at least three independent ideals")
    if len(sums) != n:
        raise ValueError("need one index set per family member")
    sets = [frozenset(s) for s in sums]
    for s in sets:
        if not s or not s <= set(range(n)):
            raise ValueError(f"malformed index set {sorted(s)}")
    if any(len(s) != 2 for s in sets):
        return False
    for first in sets[0]:
        order = [first]
        ok = True
        for s in sets:
            if order[-1] not in s:
                ok = False
                break
            (nxt,) = s - {order[-1]}
            order.append(nxt)
        if ok and order[-1] == order[0] and sorted(order[:-1]) == list(range(n)):
            return True
    return False


def direct_sum_cycle_check(family: IndependentFamily | Sequence, sums: Sequence) -> dict:
    """Compare the predicate with the graph on ``b_i = sum of family members in sums[i]``.

    ``ordered`` tells whether ``b_1, ..., b_n`` in the given order form an
    induced cycle; ``as_set`` whether the ``b_i`` induce an n-cycle in any
    order (found by :func:`find_induced_cycle` on the induced subgraph).
    """
    members = family.members if isinstance(family, IndependentFamily) else tuple(family)
    if not is_independent_family(members):
        raise ValueError("family is not independent")
    ring = members[0].ring
    n = len(members)
    bs = [join_all([members[i] for i in s], ring) for s in sums]
    g = build_intersection_graph(ring)
    distinct = len(set(bs)) == n and all(b.is_nontrivial for b in bs)
    ordered = as_set = False
    if distinct:
        idx = [g.index(b) for b in bs]
        ordered = all(
            g.adjacent(idx[i], idx[j]) == ((j - i) % n in (1, n - 1))
            for i in range(n) for j in range(n) if i != j
        )
        as_set = find_induced_cycle(g.induced(idx), n) is not None
    return {
        "predicate": consecutive_pair_structure(members, sums),
        "ordered": ordered,
        "as_set": as_set,
    }


# ---------------------------------------------------------------- Hamiltonicity

def hamiltonian_entry(spec, graph=None, oracle_limit: int | None = None) -> ReportEntry:
    spec = as_ring(spec)
    g = _graph(spec, graph)
    pred = predict_hamiltonian(spec)
    predicted = True if pred.is_open else pred.predicted
    note = VS_NOTE if pred.is_open else None
    if pred.tag == "(2) E+S":
        note = E_PLUS_S_NOTE
    try:
        found = hamiltonian_oracle(g, cap=oracle_limit)
        observed = found is not None
        witness = {"tag": pred.tag, "cycle": _labels(g, found) if found else None}
    except CapExceededError as exc:
        outcome = construct_hamiltonian(spec, oracle_limit=oracle_limit, graph=g)
        if outcome.status == "cycle" and validate_cycle(g, outcome.witness):
            observed = True
            witness = {"tag": pred.tag, "cycle": _labels(g, outcome.witness)}
            note = (note + "; " if note else "") + "observed via validated construction (graph above oracle cap)"
        else:
            return ReportEntry("hamiltonian", predicted, None, skipped=True, note=str(exc))
    entry = _entry("hamiltonian", predicted, observed, witness=witness, note=note)
    if pred.is_open and not entry.agree:
        entry.note = "theorem/oracle discrepancy - oracle is ground truth; " + VS_NOTE
    return entry


def construction_entry(spec, graph=None, oracle_limit: int | None = None) -> ReportEntry:
    """Constructed cycle exists iff the oracle finds one (open-question family aside)."""
    spec = as_ring(spec)
    g = _graph(spec, graph)
    outcome = construct_hamiltonian(spec, oracle_limit=oracle_limit, graph=g)
    built = outcome.status == "cycle"
    found = hamiltonian_oracle(g, cap=oracle_limit)
    entry = _entry("hamiltonian_construction", built, found is not None,
                   witness={"strategy": outcome.strategy, "status": outcome.status})
    if outcome.tag == "vs-local":
        entry.exempt, entry.note = True, VS_NOTE
    return entry


def pancyclic_entry(spec, graph=None, oracle_limit: int | None = None) -> ReportEntry:
    """Lengths produced by the shortening procedure versus the exact cycle spectrum."""
    spec = as_ring(spec)
    g = _graph(spec, graph)
    spectrum = sorted(cycle_spectrum_oracle(g))
    try:
        fam = pancyclic_family(spec, oracle_limit=oracle_limit)
    except ValueError:
        full = g.order >= 3 and spectrum == list(range(3, g.order + 1))
        return _entry("pancyclic", False, full, witness={"spectrum": spectrum},
                      note="no constructed Hamiltonian cycle; compares pancyclicity flags")
    produced = sorted(fam.cycles)
    return _entry("pancyclic", produced, spectrum,
                  witness={"gaps": list(fam.gaps), "methods": {str(k): v for k, v in fam.methods.items()}})


# ---------------------------------------------------------------- report

@dataclass
class ClassificationReport:
    spec: str
    entries: list[ReportEntry] = field(default_factory=list)

    @property
    def disagreements(self) -> list[ReportEntry]:
        return [e for e in self.entries if e.disagrees]

    @property
    def exit_code(self) -> int:
        return 2 if self.disagreements else 0

    def entry(self, name: str) -> ReportEntry:
        return next(e for e in self.entries if e.name == name)

    def to_dict(self) -> dict:
        return {"spec": self.spec, "entries": [e.to_dict() for e in self.entries]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"spec: {self.spec}"]
        for e in self.entries:
            if e.skipped:
                status = "SKIP"
            elif e.exempt:
                status = "EXEMPT"
            else:
                status = "agree" if e.agree else "DISAGREE"
            lines.append(f"  {e.name:<26} {status:<8} predicted={e.predicted!r} observed={e.observed!r}")
            if e.note:
                lines.append(f"      note: {e.note}")
        lines.append(f"disagreements: {len(self.disagreements)}")
        return "\n".join(lines) + "\n"


def classify_report(
    spec: RingSpec | str,
    oracle_limit: int | None = None,
    spectrum_cap: int = 14,
    cycle_lengths: Sequence[int] = (5, 6, 7),
    claw_sizes: Sequence[int] = (2, 3, 4),
) -> ClassificationReport:
    """Run every applicable prediction/observation pair on one spec."""
    spec = as_ring(spec)
    report = ClassificationReport(str(spec))
    g = build_intersection_graph(spec)

    def run(name, fn, *args, **kw):
        try:
            report.entries.append(fn(*args, **kw))
        except CapExceededError as exc:
            report.entries.append(ReportEntry(name, skipped=True, note=str(exc)))

    run("complete", complete_entry, spec, g)
    run("regular_implies_complete", check_regular_implies_complete, spec, g)
    run("triangle_free_shape", triangle_free_entry, spec, g)
    run("pendant_implies_star", check_pendant_implies_star, spec, g)
    run("star_equivalence", star_equivalence_entry, spec, g)
    if g.order <= INDUCED_VERTEX_CAP:
        run("c4_free", c4_free_criterion, spec, g)
        if is_reduced(spec):
            for n in cycle_lengths:
                run(f"c{n}_free", cn_free_criterion_reduced, spec, n, g)
            for n in claw_sizes:
                run(f"claw{n}", claw_criterion_reduced, spec, n, g)
    else:
        report.entries.append(ReportEntry("c4_free", skipped=True, note="graph above induced-search cap"))
    run("hamiltonian", hamiltonian_entry, spec, g, oracle_limit)
    run("hamiltonian_construction", construction_entry, spec, g, oracle_limit)
    if g.order <= spectrum_cap:
        run("pancyclic", pancyclic_entry, spec, g, oracle_limit)
    return report

