"""Acceptance run: one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``; either way each criterion prints a
``PASS``/``FAIL`` line with the measured numbers.
"""

from __future__ import annotations

import sys
import time
from functools import lru_cache
from itertools import combinations_with_replacement

import pytest

from idealgraph.classify import claw_criterion_reduced, cn_free_criterion_reduced
from idealgraph.graph import (
    build_intersection_graph,
    compute_properties,
    cycle_spectrum_oracle,
    find_triangle,
    hamiltonian_oracle,
    observed_shape,
    validate_cycle,
)
from idealgraph.hamcycle import construct_hamiltonian, pancyclic_family, predict_hamiltonian
from idealgraph.rings import BlockSpec, RingSpec, parse_ring_spec
from idealgraph.sweep import SweepConfig, enumerate_specs, run_sweep

TRIANGLE_FREE_SHAPES = {"empty", "single_vertex", "edge", "star", "two_isolated"}


@lru_cache(maxsize=None)
def corpus():
    """The default sweep, run once and shared by every corpus criterion."""
    return run_sweep(SweepConfig(), timestamp=False)


def corpus_specs() -> list[RingSpec]:
    return enumerate_specs(SweepConfig())


RESULT_LINES: list[str] = []


def report(name: str, ok: bool, detail: str) -> str:
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
    RESULT_LINES.append(line)
    return line


def same_ring(a, b) -> bool:
    key = lambda s: sorted(x.sort_key() for x in parse_ring_spec(str(s)).blocks)  # noqa: E731
    return key(a) == key(b)


def entries(name):
    for r in corpus().reports:
        for e in r.entries:
            if e.name == name:
                yield r.spec, e


# criteria ------------------------------------------------------------------

def criterion_triangle_free():
    result = corpus()
    bad = []
    triangle_free = 0
    for spec, e in entries("triangle_free_shape"):
        if e.observed != "has_triangle":
            triangle_free += 1
            if e.observed not in TRIANGLE_FREE_SHAPES:
                bad.append((spec, e.observed))
        if not e.agree or e.skipped:
            bad.append((spec, e.predicted, e.observed))
    ok = not bad and result.seconds < 60
    return ok, (f"{len(result.reports)} specs, {triangle_free} triangle-free, {len(bad)} mismatches, "
                f"sweep {result.seconds:.1f}s (< 60s)")


def criterion_c4():
    rows = list(entries("c4_free"))
    bad = [(s, e.predicted, e.observed) for s, e in rows if not e.agree or e.skipped]
    with_c4 = sum(1 for _, e in rows if e.observed is False)
    return not bad, f"{len(rows)} specs, {with_c4} with an induced C4, {len(bad)} disagreements"


def _field_products(sizes, max_vertices):
    fields = [BlockSpec.field(q) for q in (2, 3, 4, 5)]
    out = []
    for n in sizes:
        for combo in combinations_with_replacement(fields, n):
            spec = RingSpec.of(*combo)
            if max_vertices is None or spec.nontrivial_count <= max_vertices:
                out.append(spec)
    return out


def _reduced_run(spec_list):
    bad, checks = [], 0
    for spec in spec_list:
        g = build_intersection_graph(spec)
        for n in (5, 6):
            e = cn_free_criterion_reduced(spec, n, graph=g)
            checks += 1
            if not e.agree:
                bad.append((str(spec), e.name))
        for n in (2, 3, 4):
            e = claw_criterion_reduced(spec, n, graph=g)
            checks += 1
            if not e.agree:
                bad.append((str(spec), e.name))
    return bad, checks


def criterion_reduced_cn_claw():
    small = _field_products(range(2, 7), 14)
    bad, checks = _reduced_run(small)
    # the vertex bound leaves only 2-4 fields; also run 5 and 6 fields in full
    wide = _field_products((5, 6), None)
    bad2, checks2 = _reduced_run(wide)
    ok = not bad and not bad2
    return ok, (f"V<=14: {len(small)} specs / {checks} checks; 5-6 fields: {len(wide)} specs / {checks2} checks; "
                f"{len(bad) + len(bad2)} disagreements")


def criterion_regular_pendant():
    bad = []
    exempt = 0
    for name in ("regular_implies_complete", "pendant_implies_star", "star_equivalence"):
        for spec, e in entries(name):
            if e.disagrees or e.skipped:
                bad.append((spec, name))
            exempt += e.exempt
    z12_entry = next(e for s, e in entries("pendant_implies_star") if same_ring(s, "Z12"))
    g = build_intersection_graph("Z12")
    rec = compute_properties(g)
    z12_ok = (
        z12_entry.exempt and rec.has_pendant and g.order == 4 and g.edge_count == 4
        and sorted(g.degrees) == [1, 2, 2, 3] and find_triangle(g) is not None
    )
    ok = not bad and z12_ok
    return ok, f"{len(bad)} violations, {exempt} exempt entries, Z12 exempt pendant-triangle (4 vertices, 4 edges): {z12_ok}"


def criterion_hamiltonian():
    mismatches, open_specs, checked = [], [], 0
    for spec in corpus_specs():
        g = build_intersection_graph(spec)
        if g.order > 14:
            continue
        checked += 1
        out = construct_hamiltonian(spec, graph=g)
        has_cycle = out.status == "cycle" and bool(validate_cycle(g, out.witness)) and len(out.witness) == g.order
        truth = hamiltonian_oracle(g) is not None
        if predict_hamiltonian(spec).is_open:
            open_specs.append(str(spec))
            continue
        if has_cycle != truth:
            mismatches.append(str(spec))
    listed = {d["spec"] for d in corpus().discrepancies if d["name"] == "hamiltonian"}
    vs_listed = "vs(2,2)" in listed
    unexplained = [d for d in corpus().discrepancies if "open question" not in (d["note"] or "")]
    ok = not mismatches and vs_listed and not unexplained and set(open_specs) >= listed
    return ok, (f"{checked} specs, {len(mismatches)} construction/oracle mismatches, "
                f"open-question discrepancies {sorted(listed)}, {len(unexplained)} other discrepancies")


def criterion_scaling():
    details, ok = [], True
    for k in (3, 5, 8, 11):
        text = f"chain(2,{k}) x chain(2,{k})"
        start = time.perf_counter()
        out = construct_hamiltonian(text, oracle_limit=0)
        valid = out.status == "cycle" and bool(validate_cycle(out.graph, out.witness)) \
            and len(out.witness) == out.graph.order
        secs = time.perf_counter() - start
        ok &= valid and secs < 5 and not out.strategy.startswith("oracle")
        details.append(f"k={k}: V={out.graph.order} {secs:.2f}s")
    return ok, "; ".join(details) + " (< 5s each)"


def criterion_pancyclic():
    bad, checked = [], 0
    for spec in corpus_specs():
        g = build_intersection_graph(spec)
        if g.order > 14:
            continue
        out = construct_hamiltonian(spec, graph=g)
        if out.status != "cycle":
            continue
        checked += 1
        fam = pancyclic_family(spec)
        valid = all(len(w) == L and validate_cycle(fam.graph, w) for L, w in fam.cycles.items())
        if fam.gaps or not valid or fam.lengths != set(range(3, g.order + 1)) \
                or fam.lengths != cycle_spectrum_oracle(g):
            bad.append(str(spec))
    return not bad, f"{checked} Hamiltonian specs, {len(bad)} with gaps or spectrum mismatch"


def criterion_known_answers():
    results = {}
    z12 = parse_ring_spec("Z12")
    g = build_intersection_graph(z12)
    by_divisor = {2: (1, 0), 3: (0, 1), 4: (2, 0), 6: (1, 1)}
    idx = {d: g.index(next(v for v in g.vertices if v.coords == c)) for d, c in by_divisor.items()}
    edges = {frozenset((a, b)) for a in idx for b in idx if a < b and g.adjacent(idx[a], idx[b])}
    results["Z12 edges"] = edges == {frozenset(e) for e in ((2, 3), (2, 4), (2, 6), (3, 6))}
    complete = True
    for p in (2, 3, 5):
        for k in range(2, 7):
            gk = build_intersection_graph(f"Z{p ** k}")
            complete &= gk.order == k - 1 and gk.edge_count == (k - 1) * (k - 2) // 2
    results["Z_{p^k} complete"] = complete
    out = construct_hamiltonian("GF(2)xGF(3)xGF(5)")
    results["three fields six-cycle"] = (out.strategy == "three-fields six-cycle"
                                          and bool(validate_cycle(out.graph, out.witness)) and len(out.witness) == 6)
    g2 = build_intersection_graph("GF(2) x GF(3)")
    results["two fields isolated"] = g2.order == 2 and g2.edge_count == 0 and observed_shape(g2) == "two_isolated"
    return all(results.values()), ", ".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in results.items())


CRITERIA = [
    ("triangle-free classification", criterion_triangle_free),
    ("C4 criterion", criterion_c4),
    ("reduced Cn and n-claw criteria", criterion_reduced_cn_claw),
    ("regular=>complete and pendant=>star", criterion_regular_pendant),
    ("Hamiltonian construction vs oracle", criterion_hamiltonian),
    ("constructive scaling", criterion_scaling),
    ("pancyclicity", criterion_pancyclic),
    ("known-answer fixtures", criterion_known_answers),
]


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, detail = fn()
    line = report(name, ok, detail)
    with capsys.disabled():
        print("\n" + line)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for name, fn in CRITERIA:
        ok, detail = fn()
        print(report(name, ok, detail))
        failed += not ok
    sys.exit(1 if failed else 0)
