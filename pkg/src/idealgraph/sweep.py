"""Corpus sweeps: run every classification check over all small catalog rings."""

from __future__ import annotations

import json
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from itertools import combinations_with_replacement

from .caps import CapExceededError
from .classify import ClassificationReport, ReportEntry, classify_report
from .rings import BlockSpec, RingSpec


@dataclass(frozen=True)
class SweepConfig:
    max_vertices: int = 14
    block_budget: int = 4
    q_values: tuple[int, ...] = (2, 3, 4, 5)
    chain_k_max: int = 4
    vs_params: tuple[tuple[int, int], ...] = ((2, 2), (3, 2))
    parallel: int = 1
    oracle_cap: int | None = None
    fields_only: bool = False

    def catalog(self) -> list[BlockSpec]:
        blocks = [BlockSpec.field(q) for q in self.q_values]
        if not self.fields_only:
            blocks += [BlockSpec.chain(q, k) for q in self.q_values for k in range(2, self.chain_k_max + 1)]
            blocks += [BlockSpec.vs(q, d) for q, d in self.vs_params]
        return sorted(set(blocks), key=BlockSpec.sort_key)


def enumerate_specs(config: SweepConfig) -> list[RingSpec]:
    """Canonical block multisets whose graphs have at most ``max_vertices`` vertices."""
    catalog = config.catalog()
    out = []
    for size in range(1, config.block_budget + 1):
        for combo in combinations_with_replacement(catalog, size):
            spec = RingSpec.of(*combo)
            if spec.nontrivial_count <= config.max_vertices:
                out.append(spec)
    return out


def _classify(args) -> ClassificationReport:
    spec, oracle_cap = args
    try:
        return classify_report(spec, oracle_limit=oracle_cap)
    except CapExceededError as exc:
        return ClassificationReport(str(spec), [ReportEntry("all", skipped=True, note=str(exc))])


@dataclass
class SweepResult:
    config: SweepConfig
    reports: list[ClassificationReport]
    seconds: float = 0.0
    timestamp: str | None = None
    counts: dict = field(default_factory=dict)

    @property
    def discrepancies(self) -> list[dict]:
        return [
            {"spec": r.spec, **e.to_dict()}
            for r in self.reports for e in r.entries if e.disagrees
        ]

    def tally(self) -> dict[str, dict[str, int]]:
        table: dict[str, Counter] = defaultdict(Counter)
        for r in self.reports:
            for e in r.entries:
                status = "skipped" if e.skipped else "exempt" if e.exempt else "agree" if e.agree else "disagree"
                table[e.name][status] += 1
        return {name: dict(sorted(c.items())) for name, c in sorted(table.items())}

    def to_dict(self) -> dict:
        out = {
            "config": {
                "max_vertices": self.config.max_vertices,
                "block_budget": self.config.block_budget,
                "q_values": list(self.config.q_values),
                "chain_k_max": self.config.chain_k_max,
                "vs_params": [list(p) for p in self.config.vs_params],
                "fields_only": self.config.fields_only,
            },
            "spec_count": len(self.reports),
            "tally": self.tally(),
            "discrepancies": self.discrepancies,
        }
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        lines = [f"specs: {len(self.reports)}"]
        for name, counts in self.tally().items():
            parts = ", ".join(f"{k}={v}" for k, v in counts.items())
            lines.append(f"  {name:<26} {parts}")
        disc = self.discrepancies
        lines.append(f"discrepancies: {len(disc)}")
        for d in disc:
            lines.append(f"  {d['spec']}: {d['name']} predicted={d['predicted']!r} observed={d['observed']!r}")
            if d["note"]:
                lines.append(f"      {d['note']}")
        if self.timestamp is not None:
            lines.append(f"timestamp: {self.timestamp}")
        return "\n".join(lines) + "\n"


def run_sweep(config: SweepConfig = SweepConfig(), timestamp: bool = True) -> SweepResult:
    specs = enumerate_specs(config)
    start = time.perf_counter()
    jobs = [(s, config.oracle_cap) for s in specs]
    if config.parallel > 1:
        with ProcessPoolExecutor(max_workers=config.parallel) as pool:
            reports = list(pool.map(_classify, jobs, chunksize=8))
    else:
        reports = [_classify(j) for j in jobs]
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds") if timestamp else None
    return SweepResult(config, reports, time.perf_counter() - start, stamp)
