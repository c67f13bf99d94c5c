"""Check every small catalog ring against the brute-force oracles."""

from idealgraph.sweep import SweepConfig, run_sweep

# fields only: the reduced-ring criteria for induced cycles and claws kick in
reduced = run_sweep(SweepConfig(fields_only=True, max_vertices=14), timestamp=False)
print(reduced.summary())

# the default corpus; the only disagreements are the single vs-block rings
result = run_sweep(SweepConfig(), timestamp=False)
print(result.summary())
print(f"{result.seconds:.1f}s")
