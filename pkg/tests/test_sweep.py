import json

from idealgraph.rings import is_reduced
from idealgraph.sweep import SweepConfig, enumerate_specs, run_sweep


def test_enumeration_is_canonical_and_deduplicated():
    config = SweepConfig(max_vertices=10)
    found = enumerate_specs(config)
    keys = [tuple(b.sort_key() for b in s.blocks) for s in found]
    assert len(keys) == len(set(keys))
    for k in keys:
        assert list(k) == sorted(k)
    assert all(s.nontrivial_count <= 10 for s in found)


def test_fields_only_exercises_reduced_rings():
    config = SweepConfig(fields_only=True, max_vertices=14)
    result = run_sweep(config, timestamp=False)
    assert all(is_reduced(r.spec) for r in result.reports)
    tally = result.tally()
    assert "claw3" in tally and "c5_free" in tally
    assert result.discrepancies == []


def test_tiny_sweep_and_json():
    result = run_sweep(SweepConfig(max_vertices=6), timestamp=False)
    data = json.loads(result.to_json())
    assert data["spec_count"] == len(result.reports)
    assert "timestamp" not in data
    assert "specs:" in result.summary()
    stamped = run_sweep(SweepConfig(max_vertices=3), timestamp=True)
    assert "timestamp" in stamped.to_dict()


def test_parallel_matches_serial():
    serial = run_sweep(SweepConfig(max_vertices=8), timestamp=False)
    parallel = run_sweep(SweepConfig(max_vertices=8, parallel=2), timestamp=False)
    assert serial.to_json() == parallel.to_json()
